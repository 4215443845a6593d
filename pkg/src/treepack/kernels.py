"""Kernel backend selection.

The compiled extension is used when it imported cleanly, unless the
environment variable ``TREEPACK_PURE`` is set to a non-empty value other
than ``0``.  Inputs exceeding the extension's bitmask width always go to
the pure-Python kernels, so callers never need to care which one ran.
"""
from __future__ import annotations

import os

from . import _pykernels as py

FOUND = py.FOUND
NOT_FOUND = py.NOT_FOUND
BUDGET_EXCEEDED = py.BUDGET_EXCEEDED

_MAX_BITS = 63
_MAX_HAMILTON = 24

try:
    from . import _ckernels as c
except ImportError:  # extension not built
    c = None

if os.environ.get("TREEPACK_PURE", "") not in ("", "0"):
    c = None

BACKEND = "compiled" if c is not None else "python"


def lex_less(a: int, b: int) -> bool:
    return py.lex_less(a, b)


def bipartition_scan(n, us, vs, r):
    if c is not None and n <= _MAX_BITS:
        return c.bipartition_scan(n, us, vs, r)
    return py.bipartition_scan(n, us, vs, r)


def partition_scan(n, us, vs):
    if c is not None:
        return c.partition_scan(n, us, vs)
    return py.partition_scan(n, us, vs)


def max_flow(n, us, vs, labels):
    if c is not None:
        return c.max_flow(n, us, vs, labels)
    return py.max_flow(n, us, vs, labels)


def trail_search(n, us, vs, e1, e2, need_span, need_dom, budget):
    if c is not None and n <= _MAX_BITS and len(us) <= _MAX_BITS:
        return c.trail_search(n, us, vs, e1, e2, need_span, need_dom, budget)
    return py.trail_search(n, us, vs, e1, e2, need_span, need_dom, budget)


def hamilton_connected(n, adj):
    if c is not None and n <= _MAX_HAMILTON:
        return c.hamilton_connected(n, adj)
    return py.hamilton_connected(n, adj)
