from itertools import combinations

import networkx as nx
import pytest
from hypothesis import strategies as st

from dompoly.graph import Graph, from_edge_list

# Labels of the 23-vertex worked example, in vertex order.
FIG1_LABELS = ["l1", "l2", "l3", "s1", "s2", "l4", "l5", "v1", "v2", "v3", "v4", "s3",
               "l6", "v5", "v6", "v7", "v8", "v9", "v10", "v11", "v12", "s4", "l7"]
FIG1_EDGES = [
    ("l1", "s1"), ("l2", "s1"), ("l3", "s1"), ("s1", "s2"),
    ("s2", "l4"), ("s2", "l5"), ("s2", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "s2"),
    ("s2", "v4"), ("v4", "s3"),
    ("s3", "l6"), ("s3", "v5"), ("v5", "v6"), ("v6", "v7"), ("v7", "v8"), ("v8", "v9"),
    ("v9", "v10"), ("v10", "s3"),
    ("s3", "v11"), ("v11", "v12"), ("v12", "s3"),
    ("s3", "s4"), ("s4", "l7"),
]
FIG1 = {name: i for i, name in enumerate(FIG1_LABELS)}


@pytest.fixture
def fig1():
    return from_edge_list(23, [(FIG1[a], FIG1[b]) for a, b in FIG1_EDGES])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def naive_dom_counts(g: Graph) -> list[int]:
    """Dominating sets by size, via networkx on explicit vertex sets."""
    h = to_nx(g)
    if g.n == 0:
        return [1]
    return [sum(1 for s in combinations(range(g.n), k) if nx.is_dominating_set(h, s))
            for k in range(g.n + 1)]


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, b in zip(pairs, bits) if b])


@st.composite
def graphs_with_perm(draw, max_n=8):
    g = draw(graphs(max_n=max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, perm


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
