import networkx as nx
import pytest
from hypothesis import assume, given, settings, strategies as st

from cubeahedra.errors import ContractError
from cubeahedra.forbidden import (
    Kind,
    extract_cycle_or_diamond,
    find_forbidden,
    graph_weakfano_test,
    induced_pattern,
    is_chordal,
    mcs_order,
    shortest_induced_cycle,
)
from cubeahedra.graphs import Graph, enumerate_tubes, is_connected, members, nodeset

from conftest import CLAW, DIAMOND, complete, cycle, path, random_graph
from oracles import forbidden_subsets, induced_pattern_nx, to_nx
from test_graphs import graphs


@pytest.mark.parametrize(
    "G, kind, nodes",
    [
        (CLAW, Kind.CLAW, (1, 2, 3, 4)),
        (DIAMOND, Kind.DIAMOND, (1, 2, 3, 4)),
        (cycle(4), Kind.CYCLE, (1, 2, 3, 4)),
        (cycle(7), Kind.CYCLE, tuple(range(1, 8))),
    ],
)
def test_find_forbidden_examples(G, kind, nodes):
    w = find_forbidden(G)
    assert w.kind is kind and members(w.nodes) == nodes
    assert w.verify(G)


@pytest.mark.parametrize("G", [path(5), complete(5), Graph.empty(4), Graph.from_edges(5, [(1, 2), (2, 3), (1, 3), (3, 4)])])
def test_forbidden_free(G):
    assert find_forbidden(G) is None
    assert graph_weakfano_test(G)


def test_induced_not_subgraph():
    # K4 contains C4 and a claw as subgraphs but neither induced
    assert find_forbidden(complete(4)) is None
    assert induced_pattern(complete(4), 0b1111) is None


def test_lex_min_four_node_witness():
    G = Graph.from_edges(6, [(1, 2), (1, 3), (1, 4), (5, 2), (5, 3), (5, 6)])
    w = find_forbidden(G)
    assert members(w.nodes) == min(s for s in forbidden_subsets(G) if len(s) == 4)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_forbidden_matches_brute_force(G):
    expected = forbidden_subsets(G)
    w = find_forbidden(G)
    assert (w is None) == (not expected)
    if w is not None:
        assert induced_pattern_nx(G, members(w.nodes)) == w.kind.value
        assert w.size == min(len(s) for s in expected)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_chordality_matches_networkx(G):
    assert is_chordal(G) == nx.is_chordal(to_nx(G))
    assert sorted(mcs_order(G)) == list(range(G.n))


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_shortest_induced_cycle(G):
    lengths = [len(s) for s in forbidden_subsets(G) if induced_pattern_nx(G, s) == "CycleGe4"]
    got = shortest_induced_cycle(G)
    if not lengths:
        assert got is None
    else:
        assert got.bit_count() == min(lengths)
        assert induced_pattern(G, got) is Kind.CYCLE


def test_extraction_on_cycle():
    G = cycle(4)
    w = extract_cycle_or_diamond(G, nodeset([1, 2, 3]), nodeset([3, 4, 1]))
    assert w.kind is Kind.CYCLE and members(w.nodes) == (1, 2, 3, 4)


def test_extraction_on_diamond():
    w = extract_cycle_or_diamond(DIAMOND, nodeset([3, 1, 4]), nodeset([3, 2, 4]))
    assert w.kind is Kind.DIAMOND and w.verify(DIAMOND)


def test_extraction_on_long_cycle_with_chords():
    G = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (2, 6)])
    w = extract_cycle_or_diamond(G, nodeset([1, 2, 3, 4]), nodeset([4, 5, 6, 1]))
    assert w.verify(G) and w.kind in (Kind.CYCLE, Kind.DIAMOND)


def test_extraction_preconditions():
    G = cycle(4)
    with pytest.raises(ContractError):
        extract_cycle_or_diamond(G, nodeset([1, 3]), nodeset([1, 2, 3]))
    with pytest.raises(ContractError):
        extract_cycle_or_diamond(G, nodeset([1, 2]), nodeset([3, 4]))
    with pytest.raises(ContractError):
        extract_cycle_or_diamond(G, nodeset([1, 2]), nodeset([2, 3]))


@settings(max_examples=200, deadline=None)
@given(st.integers(4, 8), st.randoms(use_true_random=False))
def test_extraction_property(n, r):
    G = random_graph(r, n, r.choice([0.3, 0.5, 0.7]))
    tubes = enumerate_tubes(G)
    pairs = [(a, b) for a in tubes for b in tubes if a & b and not is_connected(G, a & b)]
    assume(pairs)
    J, Jp = r.choice(pairs)
    w = extract_cycle_or_diamond(G, J, Jp)
    assert w.verify(G)
    assert w.kind in (Kind.CYCLE, Kind.DIAMOND)
    assert w.nodes & ~(J | Jp) == 0


def test_three_triangles_at_a_node():
    G = Graph.from_edges(7, [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5), (1, 6), (1, 7), (6, 7)])
    w = find_forbidden(G)
    assert w.kind is Kind.CLAW and not graph_weakfano_test(G)


def test_paths_and_complete_graphs_are_free():
    for n in range(1, 9):
        assert graph_weakfano_test(path(n)) and graph_weakfano_test(complete(n))


def test_extraction_on_c5():
    w = extract_cycle_or_diamond(cycle(5), nodeset([1, 2, 3]), nodeset([3, 4, 5, 1]))
    assert w.kind is Kind.CYCLE and members(w.nodes) == (1, 2, 3, 4, 5)
