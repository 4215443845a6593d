"""Exact threshold functions for packing ``k`` spanning trees.

Everything is computed with :class:`fractions.Fraction`; no floating point
is involved anywhere, including the branch test that would otherwise need
``sqrt(8k + 1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .multigraph import GraphInputError

Rational = Fraction


def _check_range(m: int, k: int) -> None:
    if k < 2:
        raise GraphInputError(f"k must be >= 2, got {k}")
    if not k + 1 <= m <= 2 * k - 1:
        raise GraphInputError(f"need k+1 <= m <= 2k-1, got m={m}, k={k}")


def low_branch(m: int, k: int) -> Fraction:
    """``2m + k - 4 + k(2k - 1) / (2m - 2k - 1)``."""
    return Fraction(2 * m + k - 4) + Fraction(k * (2 * k - 1), 2 * m - 2 * k - 1)


def high_branch(m: int, k: int) -> Fraction:
    """``m + 3k - 4 + k^2 / (m - k)``."""
    return Fraction(m + 3 * k - 4) + Fraction(k * k, m - k)


def uses_low_branch(m: int, k: int) -> bool:
    """``m < k + (1 + sqrt(8k + 1)) / 4``, decided in integers.

    Equivalent to ``(4(m - k) - 1)^2 < 8k + 1`` because ``4(m - k) - 1 >= 3``.
    """
    d = 4 * (m - k) - 1
    return d * d < 8 * k + 1


def on_branch_boundary(m: int, k: int) -> bool:
    d = 4 * (m - k) - 1
    return d * d == 8 * k + 1


def f_threshold(m: int, k: int) -> Fraction:
    """2-essential edge-connectivity that, with m-edge-connectivity, forces k trees."""
    _check_range(m, k)
    return low_branch(m, k) if uses_low_branch(m, k) else high_branch(m, k)


def laili_threshold(m: int, k: int) -> Fraction:
    """Earlier essential-connectivity bound ``m^2 / (m - k) - 2``."""
    if m == k:
        raise GraphInputError("m = k makes the bound undefined")
    _check_range(m, k)
    return Fraction(m * m, m - k) - 2


@dataclass(frozen=True)
class BoundRow:
    m: int
    k: int
    f: Fraction
    laili: Fraction
    floor_term: int          # 6k - 4
    low: Fraction
    high: Fraction

    @property
    def dominates_max(self) -> bool:
        return self.f >= max(Fraction(self.floor_term), self.low, self.high)

    @property
    def below_twice_laili(self) -> bool:
        return self.f < 2 * self.laili

    def as_dict(self) -> dict:
        return {
            "m": self.m,
            "k": self.k,
            "f": str(self.f),
            "laili": str(self.laili),
            "six_k_minus_4": self.floor_term,
            "low_branch": str(self.low),
            "high_branch": str(self.high),
            "f_ge_max": self.dominates_max,
            "f_lt_twice_laili": self.below_twice_laili,
        }


def bounds_report(k: int) -> list[BoundRow]:
    """One row per ``m`` in ``[k+1, 2k-1]``."""
    if k < 2:
        raise GraphInputError(f"k must be >= 2, got {k}")
    return [
        BoundRow(m, k, f_threshold(m, k), laili_threshold(m, k), 6 * k - 4,
                 low_branch(m, k), high_branch(m, k))
        for m in range(k + 1, 2 * k)
    ]


def format_table(rows: list[BoundRow]) -> str:
    header = ("m", "k", "f(m,k)", "laili", "6k-4", "low", "high", "f>=max", "f<2*laili")
    body = [
        (str(r.m), str(r.k), str(r.f), str(r.laili), str(r.floor_term), str(r.low),
         str(r.high), str(r.dominates_max), str(r.below_twice_laili))
        for r in rows
    ]
    widths = [max(len(x) for x in col) for col in zip(header, *body)]
    lines = ["  ".join(x.rjust(w) for x, w in zip(row, widths)) for row in [header, *body]]
    return "\n".join(lines)
