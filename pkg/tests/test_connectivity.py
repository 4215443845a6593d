import networkx as nx
import pytest
from hypothesis import given, settings

from treepack.connectivity import (OracleBoundExceeded, connectivity_profile, edge_connectivity,
                                   essential_edge_connectivity, essential_vertex_connectivity,
                                   global_min_edge_cut, is_hypothesis, r_essential_brute_oracle,
                                   r_essential_edge_connectivity, seed_vertex_sets, st_min_edge_cut,
                                   vertex_connectivity)
from treepack.multigraph import GraphInputError, build_graph, cycle_graph, path_graph

from helpers import multigraphs


def _value(cut):
    return None if cut is None else cut.value


def _nx_lambda(G):
    W = nx.Graph()
    W.add_nodes_from(range(G.n))
    for (u, v), c in G.pair_counts.items():
        W.add_edge(u, v, weight=c)
    return nx.stoer_wagner(W)[0]


def test_global_min_cut_examples(named, dtri):
    assert global_min_edge_cut(named["C6"]).value == 2
    assert global_min_edge_cut(named["K4"]).value == 3
    cut = global_min_edge_cut(dtri)
    assert cut.value == 4
    cut.check(dtri)


def test_global_min_cut_disconnected_and_tiny():
    assert global_min_edge_cut(build_graph(3, [(0, 1)])).value == 0
    with pytest.raises(GraphInputError):
        global_min_edge_cut(build_graph(1, []))


def test_st_cut_examples(named):
    assert st_min_edge_cut(path_graph(3), 0, 2).value == 1
    assert st_min_edge_cut(build_graph(2, [(0, 1), (0, 1)]), 0, 1).value == 2
    K4 = named["K4"]
    assert {st_min_edge_cut(K4, s, t).value for s in range(4) for t in range(4) if s != t} == {3}
    with pytest.raises(GraphInputError):
        st_min_edge_cut(K4, 1, 1)


def test_r_essential_examples(named):
    assert r_essential_edge_connectivity(named["C6"], 1).value == 2
    assert r_essential_edge_connectivity(named["C4"], 2) is None
    assert r_essential_edge_connectivity(named["K5"], 2) is None
    assert r_essential_edge_connectivity(named["K4"], 1).value == 4


def test_oracle_examples(named, dtri):
    assert r_essential_brute_oracle(named["C6"], 2).value == 2
    assert r_essential_brute_oracle(named["C8"], 2).value == 2
    # one side of every split of three vertices is a single edgeless vertex
    assert r_essential_brute_oracle(dtri, 1) is None


def test_oracle_bound():
    with pytest.raises(OracleBoundExceeded):
        r_essential_brute_oracle(cycle_graph(15), 1)


def test_seed_sets_are_minimal(named):
    seeds = seed_vertex_sets(named["K4"], 2)
    assert seeds and all(len(S) == 3 for S in seeds)
    assert seed_vertex_sets(build_graph(2, [(0, 1), (0, 1)]), 2) == [frozenset({0, 1})]


def test_vertex_connectivity(named):
    assert vertex_connectivity(named["C5"]) == 2
    assert vertex_connectivity(named["K4"]) == 3
    assert essential_vertex_connectivity(named["bowtie"]) == 1


def test_is_hypothesis(named, dtri):
    assert is_hypothesis(named["K5"], 4, 0, 22) == (True, True, True)
    assert is_hypothesis(named["C6"], 3, 5, 8) == (False, False, False)
    assert is_hypothesis(dtri, 3, 5, 8) == (True, True, True)


def test_profile_k5(named):
    p = connectivity_profile(named["K5"]).as_dict()
    assert p == {"lambda": 4, "essential_lambda": 6, "two_essential_lambda": None,
                 "kappa": 4, "essential_kappa": None}


@settings(max_examples=150, deadline=None)
@given(multigraphs(n_min=2, n_max=8))
def test_lambda_matches_networkx(G):
    assert edge_connectivity(G) == (_nx_lambda(G) if nx.is_connected(_as_nx(G)) else 0)


def _as_nx(G):
    H = nx.MultiGraph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges)
    return H


@settings(max_examples=150, deadline=None)
@given(multigraphs(n_min=2, n_max=8, connected=True))
def test_r_essential_matches_oracle(G):
    for r in (1, 2, 3):
        fast = r_essential_edge_connectivity(G, r)
        assert _value(fast) == _value(r_essential_brute_oracle(G, r))
        if fast is not None:
            fast.check(G)
            assert 0 in fast.side_a


@settings(max_examples=60, deadline=None)
@given(multigraphs(n_min=2, n_max=7, connected=True))
def test_essential_is_monotone_in_r(G):
    vals = [_value(r_essential_edge_connectivity(G, r)) for r in (1, 2, 3)]
    lam = edge_connectivity(G)
    present = [v for v in vals if v is not None]
    assert all(v >= lam for v in present)
    assert present == sorted(present)
    assert _value(essential_edge_connectivity(G)) == vals[0]
