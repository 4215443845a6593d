"""Both kernel backends must return identical answers."""
import numpy as np
import pytest

from treepack import _pykernels as py
from treepack import kernels
from treepack.harness.generate import random_multigraph

c = pytest.importorskip("treepack._ckernels")


def _graphs(count, n_max, e_max, seed=11):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(2, n_max + 1))
        yield random_multigraph(rng, n, int(rng.integers(1, e_max + 1)), 3)


def test_backend_reported():
    assert kernels.BACKEND in ("compiled", "python")


def test_bipartition_parity():
    for G in _graphs(150, 9, 18):
        for r in (1, 2, 3):
            assert c.bipartition_scan(G.n, G.us, G.vs, r) == py.bipartition_scan(G.n, G.us, G.vs, r)


def test_partition_parity():
    for G in _graphs(60, 7, 14):
        assert c.partition_scan(G.n, G.us, G.vs) == py.partition_scan(G.n, G.us, G.vs)


def test_flow_parity():
    rng = np.random.default_rng(5)
    for G in _graphs(150, 10, 25):
        labels = [0] * G.n
        labels[0] = 1
        labels[int(rng.integers(1, G.n))] = 2
        assert c.max_flow(G.n, G.us, G.vs, labels) == py.max_flow(G.n, G.us, G.vs, labels)


def test_trail_parity():
    for G in _graphs(120, 6, 10):
        for e1, e2 in ((-1, -1), (0, G.m - 1)):
            if G.m < 2 and e1 >= 0:
                continue
            for span in (True, False):
                assert (c.trail_search(G.n, G.us, G.vs, e1, e2, span, True, 10**6)
                        == py.trail_search(G.n, G.us, G.vs, e1, e2, span, True, 10**6))


def test_hamilton_parity():
    for G in _graphs(100, 7, 16):
        adj = [0] * G.n
        for u, v in G.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        assert c.hamilton_connected(G.n, adj) == py.hamilton_connected(G.n, adj)


def test_budget_exceeded_both():
    from treepack.multigraph import complete_graph
    K = complete_graph(7)
    for mod in (c, py):
        status, _, _ = mod.trail_search(K.n, K.us, K.vs, 0, 20, True, True, 3)
        assert status == py.BUDGET_EXCEEDED


def test_pure_switch():
    import subprocess
    import sys
    code = "import treepack.kernels as k; print(k.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env={"TREEPACK_PURE": "1", "PATH": ""},
                         capture_output=True, text=True, check=True).stdout.strip()
    assert out == "python"
