"""Time the compiled kernels against the pure-Python ones on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from treepack import _pykernels as py
from treepack.harness.generate import random_multigraph

try:
    from treepack import _ckernels as c
except ImportError:
    c = None


def _cases():
    rng = np.random.default_rng(7)
    G8 = random_multigraph(rng, 8, 20, 3)
    G12 = random_multigraph(rng, 12, 30, 2)
    G6 = random_multigraph(rng, 6, 14, 2)
    adj = [0] * 8            # neighbour bitmasks
    for u, v in G8.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    labels = [1] + [0] * 10 + [2]
    return {
        "bipartition_scan n=12 r=2": lambda k: k.bipartition_scan(12, G12.us, G12.vs, 2),
        "partition_scan n=8": lambda k: k.partition_scan(8, G8.us, G8.vs),
        "max_flow n=12": lambda k: k.max_flow(12, G12.us, G12.vs, labels),
        "trail_search n=6": lambda k: k.trail_search(6, G6.us, G6.vs, -1, -1, True, True, 10**6),
        "hamilton_connected n=8": lambda k: k.hamilton_connected(8, adj),
    }


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if c is None:
        print("compiled extension not built; only the Python timings are shown")
    print(f"{'kernel':28} {'python ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for name, call in _cases().items():
        t_py = min(timeit.repeat(lambda: call(py), number=1, repeat=args.repeat)) * 1000
        if c is None:
            print(f"{name:28} {t_py:10.2f}")
            continue
        assert call(py) == call(c), name
        t_c = min(timeit.repeat(lambda: call(c), number=1, repeat=args.repeat)) * 1000
        print(f"{name:28} {t_py:10.2f} {t_c:12.3f} {t_py / max(t_c, 1e-6):8.1f}x")


if __name__ == "__main__":
    main()
