"""MEL text format: ``mel <n> <m>`` then ``m`` lines ``<u> <v>``.

Lines starting with ``#`` and blank lines are ignored.  Edge ids follow the
order of the edge lines.
"""
from __future__ import annotations

from pathlib import Path

from ..multigraph import GraphInputError, MultiGraph


class MelParseError(GraphInputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_mel(text: str) -> MultiGraph:
    header = None
    edges: list[tuple[int, int]] = []
    expected = 0
    last = 1
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        last = lineno
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "mel":
                raise MelParseError(lineno, f"bad header {line!r}, expected 'mel <n> <m>'")
            try:
                n, expected = int(parts[1]), int(parts[2])
            except ValueError:
                raise MelParseError(lineno, f"bad header {line!r}") from None
            if n < 0 or expected < 0:
                raise MelParseError(lineno, "negative count in header")
            header = n
            continue
        if len(parts) != 2:
            raise MelParseError(lineno, f"expected '<u> <v>', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise MelParseError(lineno, f"non-integer endpoint in {line!r}") from None
        if u == v:
            raise MelParseError(lineno, "loops forbidden")
        if not (0 <= u < header and 0 <= v < header):
            raise MelParseError(lineno, f"endpoint out of range 0..{header - 1}")
        if len(edges) == expected:
            raise MelParseError(lineno, f"more than {expected} edge lines")
        edges.append((u, v))
    if header is None:
        raise MelParseError(1, "missing header")
    if len(edges) != expected:
        raise MelParseError(last, f"header promises {expected} edges, found {len(edges)}")
    return MultiGraph(header, tuple(edges))


def emit_mel(G: MultiGraph) -> str:
    return "".join([f"mel {G.n} {G.m}\n", *(f"{u} {v}\n" for u, v in G.edges)])


def read_mel(path) -> MultiGraph:
    return parse_mel(Path(path).read_text())


def write_mel(G: MultiGraph, path) -> None:
    Path(path).write_text(emit_mel(G))
