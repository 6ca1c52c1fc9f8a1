import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from arithstruct.errors import BadSize, IndexOutOfRange, LoopEdge, ParseError
from arithstruct.exactmat import IntMatrix
from arithstruct.graphs import (
    GraphSpec,
    adjacency,
    canonical_form,
    conjecture_check,
    connected_graphs_upto,
    count_structures,
    family,
    format_edge_list,
    is_connected,
    parse_edge_list,
    relabel,
)


def _atlas_connected(n):
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]


def _to_nx(g: GraphSpec):
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_connected_class_counts_match_atlas(n):
    ours = connected_graphs_upto(n)
    atlas = _atlas_connected(n)
    assert len(ours) == len(atlas)
    assert all(is_connected(g) for g in ours)
    # each atlas class is represented exactly once
    for G in atlas:
        hits = [g for g in ours if nx.is_isomorphic(G, _to_nx(g))]
        assert len(hits) == 1


@st.composite
def graph_and_perm(draw):
    n = draw(st.integers(1, 6))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = tuple(p for p in pairs if draw(st.booleans()))
    perm = draw(st.permutations(range(n)))
    return GraphSpec(n, edges), perm


@given(graph_and_perm())
def test_canonical_form_is_relabeling_invariant(gp):
    g, perm = gp
    assert canonical_form(g) == canonical_form(relabel(g, perm))


def test_canonical_form_separates_classes():
    graphs = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == 6]
    codes = {canonical_form(GraphSpec(6, tuple(G.edges()))) for G in graphs}
    assert len(codes) == len(graphs)


def test_families():
    assert family("path", 4).edges == ((0, 1), (1, 2), (2, 3))
    assert len(family("cycle", 5).edges) == 5
    assert len(family("complete", 5).edges) == 10
    assert family("star", 5).name == "K1,4"
    with pytest.raises(BadSize):
        family("cycle", 2)
    with pytest.raises(BadSize):
        family("wheel", 5)
    with pytest.raises(BadSize):
        family("path", 1)


def test_named_labels():
    names = {g.name for g in connected_graphs_upto(4)}
    assert names == {"P4", "C4", "K4", "K1,3", "paw", "diamond"}


def test_adjacency_directed_and_weighted():
    g = GraphSpec(3, ((0, 1), (1, 2), (1, 2)), directed=True, weights=(2, 1, 3))
    assert adjacency(g) == IntMatrix.from_rows([[0, 2, 0], [0, 0, 4], [0, 0, 0]])
    u = GraphSpec(2, ((0, 1),))
    assert adjacency(u) == IntMatrix.from_rows([[0, 1], [1, 0]])


def test_edge_list_round_trip():
    text = "4 directed\n1 2\n2 3 9\n# comment\n3 4\n4 1\n"
    g = parse_edge_list(text)
    assert g.directed and g.weights == (1, 9, 1, 1)
    assert parse_edge_list(format_edge_list(g)) == g


@pytest.mark.parametrize(
    "text,exc",
    [("", ParseError), ("x\n", ParseError), ("3 undirected\n", ParseError), ("3\n1 2 3 4\n", ParseError),
     ("3\n1 a\n", ParseError), ("3\n1 1\n", LoopEdge), ("3\n1 4\n", IndexOutOfRange), ("3\n1 2 0\n", ParseError),
     ("0\n", BadSize)],
)
def test_edge_list_errors(text, exc):
    with pytest.raises(exc):
        parse_edge_list(text)


def test_counts_for_small_families():
    assert count_structures(family("path", 3)).count == 2
    assert count_structures(family("complete", 3)).count == 10
    # paths on n vertices have Catalan(n - 1) structures
    assert [count_structures(family("path", n)).count for n in (2, 3, 4, 5)] == [1, 2, 5, 14]


def test_conjecture_report_n4():
    rep = conjecture_check(4)
    assert sorted(r.count for r in rep.rows) == [5, 14, 26, 35, 63, 215]
    assert rep.path_count == 5 and rep.complete_count == 215
    assert rep.path_is_min and rep.complete_is_max
    threaded = conjecture_check(4, threads=3)
    assert [r.count for r in threaded.rows] == [r.count for r in rep.rows]
    with pytest.raises(BadSize):
        conjecture_check(6)
    with pytest.raises(BadSize):
        conjecture_check(2)


def test_structure_counts_are_isomorphism_invariant():
    rng = random.Random(41)
    for g in connected_graphs_upto(4):
        perm = list(range(4))
        rng.shuffle(perm)
        assert count_structures(g).count == count_structures(relabel(g, perm)).count
