import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dompoly.graph import (
    Graph, GraphError, complete, cycle, disjoint_union, empty, from_edge_list,
    from_edge_list_text, from_graph6, h_graph, is_in_Gk, path, pendant_cycle, read_graph6_file,
    star, structure_profile, tilde_path, to_edge_list_text, to_graph6,
)

from conftest import FIG1, graphs, graphs_with_perm, to_nx


# -- constructors --------------------------------------------------------------

def test_path_examples():
    assert (path(1).n, path(1).m) == (1, 0)
    assert path(3).edges() == [(0, 1), (1, 2)]
    g = path(8)
    prof = structure_profile(g)
    assert (g.n, g.m, len(prof.leaves), prof.omega) == (8, 7, 2, 2)
    with pytest.raises(GraphError):
        path(0)


def test_cycle_examples():
    assert cycle(3).degrees() == [2, 2, 2]
    assert cycle(4).m == 4 and nx.girth(to_nx(cycle(4))) == 4
    prof = structure_profile(cycle(7))
    assert prof.omega == 0 and prof.t(2) == 7
    for bad in (0, 1, 2):
        with pytest.raises(GraphError):
            cycle(bad)


def test_tilde_path():
    g = tilde_path(5)
    assert set(g.edges()) == {(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)}
    assert (tilde_path(6).n, tilde_path(6).m) == (6, 6)
    prof = structure_profile(tilde_path(9))
    assert len(prof.leaves) == 2 and prof.omega == 2
    s, t = sorted(prof.stems)
    assert g.has_edge(1, 3) and tilde_path(9).has_edge(s, t)
    assert prof.n_loops(4) == 0
    with pytest.raises(GraphError):
        tilde_path(4)


def test_pendant_cycle_and_h():
    paw = pendant_cycle(3)
    assert nx.is_isomorphic(to_nx(paw), nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3)]))
    assert pendant_cycle(4).n == 5
    prof = structure_profile(pendant_cycle(5))
    assert prof.n_loops(5) == 1 and prof.loops[5][0].anchor in prof.stems
    assert h_graph(4).n == 7 and h_graph(5).n == 8
    assert sorted(h_graph(3).degrees()) == sorted((4, 2, 2, 1, 2, 1))
    for f in (pendant_cycle, h_graph):
        with pytest.raises(GraphError):
            f(2)


def test_disjoint_union():
    assert disjoint_union([]).n == 0
    assert disjoint_union([path(4)]) == path(4)
    g = disjoint_union([pendant_cycle(4), path(2)])
    assert g.n == 7 and len(g.components()) == 2


def test_from_edge_list():
    assert from_edge_list(3, [(0, 1), (1, 2)]) == path(3)
    assert from_edge_list(3, [(0, 1), (1, 0), (1, 2)]).m == 2
    g = from_edge_list(2, [])
    assert g.m == 0 and len(g.components()) == 2
    with pytest.raises(GraphError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(GraphError):
        from_edge_list(3, [(1, 1)])


def test_invalid_adjacency_rejected():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(2, (0b1, 0b1))


def test_figure1_worked_numbers(fig1):
    prof = structure_profile(fig1)
    name = {v: k for k, v in FIG1.items()}
    assert prof.omega == 4
    assert {name[s] for s in prof.stems} == {"s1", "s2", "s3", "s4"}
    assert prof.t(1) == 7
    assert {name[v] for v in prof.T[2]} == {f"v{i}" for i in range(1, 13)}
    assert {name[v] for v in prof.S[FIG1["s1"]]} == {"l1", "l2", "l3"}
    assert {name[v] for v in prof.S[FIG1["s2"]]} == {"l4", "l5"}
    assert (prof.n_loops(3), prof.n_loops(4), prof.n_loops(7)) == (1, 1, 1)
    assert sum(prof.n_loops(r) for r in prof.loops) == 3
    assert {name[v] for v in prof.loops[3][0].vertices} == {"s3", "v11", "v12"}
    assert prof.loops[7][0].anchor == FIG1["s3"]
    assert is_in_Gk(fig1, 2)


# -- structure profile ------------------------------------------------------------

def test_profile_path6():
    prof = structure_profile(path(6))
    assert prof.stems == {1, 4}
    assert prof.T[1] == {0, 5} and prof.T[2] == {2, 3}
    assert {s: set(v) for s, v in prof.V1.items()} == {1: {2}, 4: {3}}
    assert not prof.V0 and not prof.V2


def test_profile_cycle3():
    prof = structure_profile(cycle(3))
    assert prof.cycle_components == {3: 1}
    assert prof.omega == 0 and not prof.loops


@pytest.mark.parametrize("n", range(5, 20))
def test_path_partition_sizes(n):
    prof = structure_profile(path(n))
    if n >= 6:
        assert len(prof.V0) == n - 6
        assert all(len(vs) == 1 for vs in prof.V1.values()) and len(prof.V1) == 2
        assert not prof.V2
    else:
        assert sum(len(vs) for vs in prof.V2.values()) == 1


def test_k2_endpoints_are_stems():
    prof = structure_profile(disjoint_union([path(2), path(3)]))
    assert prof.k2_components == 1
    assert {0, 1} <= prof.stems
    assert prof.t(1) == 2  # only the leaves of P3


def _summary(prof):
    return (prof.omega, tuple(sorted((r, len(v)) for r, v in prof.T.items())),
            tuple(sorted(len(s) for s in prof.S.values())), len(prof.V0),
            tuple(sorted(len(v) for v in prof.V1.values())),
            tuple(sorted(len(v) for v in prof.V2.values())),
            tuple((r, len(ls)) for r, ls in prof.loops.items()),
            tuple(prof.cycle_components.items()), prof.k2_components, prof.isolated)


@settings(max_examples=200, deadline=None)
@given(graphs_with_perm(max_n=10))
def test_profile_permutation_invariant(gp):
    g, perm = gp
    assert _summary(structure_profile(g.relabel(perm))) == _summary(structure_profile(g))


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10))
def test_profile_leaf_invariants(g):
    prof = structure_profile(g)
    if not prof.isolated and not prof.k2_components:
        assert prof.t(1) == len(prof.leaves)
        owners = [s for s, ls in prof.S.items() for _ in ls]
        assert len(owners) == len(prof.leaves)
        assert set().union(*prof.S.values()) == set(prof.leaves) if prof.S else not prof.leaves
    if is_in_Gk(g, 2):
        assert prof.omega + prof.t(0) + prof.t(1) + prof.t(2) == g.n
        if not prof.isolated:
            assert prof.omega + prof.t(1) + prof.t(2) == g.n


def test_is_in_Gk_examples():
    assert is_in_Gk(path(10), 2)
    assert is_in_Gk(star(3), 2)
    assert not is_in_Gk(complete(4), 2)
    assert is_in_Gk(complete(4), 3)


def test_loop_requires_induced_cycle():
    # Diamond: each triangle has two degree-3 vertices, so neither is a loop.
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert not structure_profile(g).loops
    # Two triangles sharing one vertex: two 3-loops at that vertex.
    bowtie = from_edge_list(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    prof = structure_profile(bowtie)
    assert prof.n_loops(3) == 2 and all(lp.anchor == 0 for lp in prof.loops[3])


# -- graph6 ---------------------------------------------------------------------

def test_graph6_examples():
    assert to_graph6(Graph(1, (0,))) == b"@"
    assert to_graph6(empty(0)) == b"?"
    code = to_graph6(path(3))
    assert len(code) == 2
    assert nx.is_isomorphic(to_nx(from_graph6(code)), nx.path_graph(3))
    assert set(from_graph6(to_graph6(cycle(5))).edges()) == set(cycle(5).edges())


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 70).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
                         max_size=3 * n))))
def test_graph6_round_trip_and_matches_networkx(data):
    n, pairs = data
    g = from_edge_list(n, [(u, v) for u, v in pairs if u != v])
    code = to_graph6(g)
    assert from_graph6(code) == g
    assert code == nx.to_graph6_bytes(to_nx(g), header=False).strip()


def test_graph6_long_order():
    g = path(100)
    code = to_graph6(g)
    assert code[:1] == b"~"
    assert code == nx.to_graph6_bytes(nx.path_graph(100), header=False).strip()
    assert from_graph6(code) == g


def test_graph6_header_stripped():
    assert from_graph6(b">>graph6<<" + to_graph6(path(4))) == path(4)


@pytest.mark.parametrize("bad", [b"", b"D\x20", b"Dq", b"~", b"~?", b"\x7f", b"A_x"])
def test_graph6_malformed(bad):
    with pytest.raises(GraphError):
        from_graph6(bad)


def test_read_graph6_file(tmp_path):
    f = tmp_path / "g.g6"
    f.write_bytes(b"\n".join(to_graph6(g) for g in (path(3), cycle(4), path(1))) + b"\n\n")
    got = list(read_graph6_file(f))
    assert got == [path(3), cycle(4), path(1)]


# -- edge list text -----------------------------------------------------------------

def test_edge_list_text_round_trip():
    g = h_graph(4)
    text = to_edge_list_text(g)
    first = text.splitlines()[0].split()
    assert first == [str(g.n), str(g.m)]
    assert from_edge_list_text(text) == g


@pytest.mark.parametrize("text", ["", "3", "3 2\n0 1\n", "3 1\n0 x\n", "2 1\n0 5\n"])
def test_edge_list_text_malformed(text):
    with pytest.raises(GraphError):
        from_edge_list_text(text)


def test_components_and_relabel():
    rng = random.Random(3)
    g = disjoint_union([path(3), cycle(4), empty(1)])
    assert sorted(len(c) for c in g.components()) == [1, 3, 4]
    perm = list(range(g.n))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert nx.is_isomorphic(to_nx(g), to_nx(h))
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
    assert len(list(combinations(range(3), 2))) == 3
