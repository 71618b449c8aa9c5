import numpy as np
import pytest
from hypothesis import given, settings

from cubeahedra.errors import ContractError, FanIntegrityError
from cubeahedra.fan import Bar, Tube, build_fan, compatible, tube
from cubeahedra.graphs import Graph, connected_components, is_connected, members
from cubeahedra.intersection import (
    Verdict,
    classify_fan,
    classify_graph,
    enumerate_walls,
    find_wall,
    graph_verdict,
    intersection_number,
    wall_neighbors,
    wall_relation,
    wall_table,
    witness_nerve,
    witness_wall,
)

from conftest import CLAW, DIAMOND, complete, cycle, path
from oracles import solve_rational
from test_graphs import graphs


def test_p2_walls():
    fan = build_fan(path(2))
    walls = {w.base: w for w in enumerate_walls(fan)}
    assert len(walls) == 5
    w = walls[(tube(1, 2),)]
    assert set(w.neighbors) == {tube(1), tube(2)}
    assert w.coefficients == (-1,) and w.number == 1
    w = walls[(Bar(1),)]
    assert set(w.neighbors) == {tube(2), Bar(2)}
    assert w.coefficients == (0,) and w.number == 2
    assert sorted(x.number for x in walls.values()) == [1, 1, 1, 2, 2]


def test_claw_wall():
    fan = build_fan(CLAW)
    w = find_wall(fan, [tube(2), tube(3), tube(4)])
    assert set(w.neighbors) == {tube(1, 2, 3, 4), Bar(1)}
    assert w.coefficients == (-1, -1, -1) and w.number == -1


def test_singleton_wall():
    walls = enumerate_walls(build_fan(Graph.empty(1)))
    assert len(walls) == 1
    w = walls[0]
    assert w.base == () and set(w.neighbors) == {tube(1), Bar(1)} and w.number == 2


def test_p3_wall_count():
    fan = build_fan(path(3))
    assert len(enumerate_walls(fan)) == 3 * fan.cone_count // 2 == 21


@pytest.mark.parametrize("a, expected", [((-1,), 1), ((-1, -1, -1), -1), ((-1, -1), 0), ((), 2)])
def test_intersection_number(a, expected):
    assert intersection_number(a) == expected


@pytest.mark.parametrize(
    "G, verdict, minimum",
    [
        (path(2), Verdict.FANO, 1),
        (Graph.empty(1), Verdict.FANO, 2),
        (path(3), Verdict.WEAK_FANO, 0),
        (complete(4), Verdict.WEAK_FANO, 0),
        (cycle(4), Verdict.NOT_WEAK_FANO, -1),
        (DIAMOND, Verdict.NOT_WEAK_FANO, -1),
        (CLAW, Verdict.NOT_WEAK_FANO, -1),
    ],
)
def test_classify_examples(G, verdict, minimum):
    c = classify_fan(build_fan(G))
    assert c.verdict is verdict and c.min_number == minimum
    assert c.wall.number == minimum
    assert graph_verdict(G) is verdict


def test_empty_graph_is_fano():
    assert classify_graph(Graph.empty(0)).verdict is Verdict.FANO


def test_fast_mode_agrees_on_verdict():
    for G in (path(2), path(3), cycle(5), CLAW):
        fan = build_fan(G)
        assert classify_fan(fan, fast=True).verdict is classify_fan(fan).verdict


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_wall_invariants(G):
    if G.n == 0:
        return
    fan = build_fan(G)
    walls = enumerate_walls(fan)
    cones = set(fan.maximal_cones)
    assert len({w.base for w in walls}) == len(walls)
    for w in walls:
        J, Jp = w.neighbors
        assert J != Jp
        assert frozenset(w.base) | {J} in cones and frozenset(w.base) | {Jp} in cones
        assert not compatible(J, Jp, G)
        assert w.relation_holds(G.n)
        assert w.number == 2 + sum(w.coefficients)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=5))
def test_scalar_and_rational_routes_agree(G):
    if G.n == 0:
        return
    fan = build_fan(G)
    for w in enumerate_walls(fan):
        assert wall_relation(w.base, *w.neighbors, G.n) == w.coefficients
        from cubeahedra.fan import ray_vector

        cols = [ray_vector(lab, G.n).tolist() for lab in w.base] + [ray_vector(w.neighbors[0], G.n).tolist()]
        x = solve_rational(cols, ray_vector(w.neighbors[1], G.n).tolist())
        assert x[-1] == -1 and tuple(-int(v) for v in x[:-1]) == w.coefficients


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_disconnected_intersection_relation(G):
    if G.n == 0:
        return
    for w in enumerate_walls(build_fan(G)):
        J, Jp = w.neighbors
        if not (isinstance(J, Tube) and isinstance(Jp, Tube)):
            continue
        common = J.nodes & Jp.nodes
        if not common or is_connected(G, common):
            continue
        parts = connected_components(G, within=common)
        expected = {Tube(J.nodes | Jp.nodes): -1, **{Tube(c): -1 for c in parts}}
        got = {lab: a for lab, a in zip(w.base, w.coefficients) if a}
        assert got == expected


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_componentwise_meet(G):
    if G.n == 0:
        return
    verdicts = [classify_fan(build_fan(G.subgraph(c))).verdict for c in connected_components(G)]
    order = [Verdict.NOT_WEAK_FANO, Verdict.WEAK_FANO, Verdict.FANO]
    assert classify_fan(build_fan(G)).verdict is min(verdicts, key=order.index)


def test_witness_nerves():
    N, e = witness_nerve(CLAW, "claw")
    assert N == frozenset({tube(2), tube(3), tube(4)}) and e == -1
    N, e = witness_nerve(Graph.from_edges(5, [(1, 2), (1, 3), (1, 4)]), "claw", [1, 2, 3, 4])
    assert Bar(5) in N and len(N) == 4
    N, e = witness_nerve(cycle(5), "cycle", [1, 2, 3, 4, 5])
    assert N == frozenset({tube(1), tube(1, 2), tube(4), tube(1, 2, 3, 4, 5)}) and e == -1
    N, e = witness_nerve(path(4), "component", [1, 2, 3, 4])
    assert N == frozenset({tube(2), tube(1, 2, 3), tube(1, 2, 3, 4)}) and e == 0


@pytest.mark.parametrize(
    "G, pattern, expected",
    [(CLAW, "claw", -1), (DIAMOND, "diamond", -1), (cycle(4), "cycle", -1), (cycle(6), "cycle", -1),
     (path(3), "component", 0), (path(5), "component", 0)],
)
def test_witness_walls(G, pattern, expected):
    w, e = witness_wall(G, pattern)
    assert e == expected and w.number == expected


def test_witness_missing_configuration():
    with pytest.raises(ContractError):
        witness_nerve(path(4), "claw")
    with pytest.raises(ContractError):
        witness_nerve(path(4), "claw", [2, 1, 3, 4])
    with pytest.raises(ContractError):
        witness_nerve(path(4), "triangle")


def test_wall_neighbors_contract():
    fan = build_fan(path(2))
    with pytest.raises(ContractError):
        wall_neighbors(fan, {tube(1), tube(2)})
    with pytest.raises(ContractError):
        wall_neighbors(fan, {tube(3)})


def test_wall_relation_rejects_bad_basis():
    with pytest.raises(FanIntegrityError):
        wall_relation((tube(1, 2),), tube(1), tube(1, 2), 2)


def test_wall_table_shape():
    fan = build_fan(cycle(4))
    table = wall_table(fan)
    assert len(table) == fan.cone_count * 4 // 2
    assert table.coefficients.shape == (len(table), 3)
    assert (table.numbers == 2 + table.coefficients.sum(axis=1)).all()
