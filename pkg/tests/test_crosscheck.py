import io
import json

import pytest

from cubeahedra.crosscheck import (
    CensusRecord,
    DisagreementError,
    census_record,
    cross_validate,
    enumerate_graphs,
    graph_from_mask,
    relabeling_spot_check,
)
from cubeahedra.errors import CapacityError
from cubeahedra.graphs import is_connected
from cubeahedra.intersection import Verdict

from conftest import CLAW, DIAMOND, cycle, path


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 8), (4, 64)])
def test_enumerate_counts(n, count):
    assert sum(1 for _ in enumerate_graphs(n)) == count


def test_enumerate_connected_only():
    # labelled connected graphs on 4 nodes
    assert sum(1 for _ in enumerate_graphs(4, connected_only=True)) == 38
    assert all(is_connected(G, G.full) for G in enumerate_graphs(4, connected_only=True))


def test_enumerate_limits():
    with pytest.raises(CapacityError):
        next(enumerate_graphs(10))
    with pytest.raises(ValueError):
        next(enumerate_graphs(0))


def test_graph_from_mask_order():
    G = graph_from_mask(3, 0b101)
    assert G.edges() == [(1, 2), (2, 3)]


def test_max_two_all_fano():
    report = cross_validate(2)
    assert report.buckets == {"Fano": 3}


def test_census_stream_and_patterns():
    buf = io.StringIO()
    report = cross_validate(4, out=buf)
    assert report.disagreements == 0 and report.total == 75
    assert report.summary().splitlines()[0] == "64+8+2+1 graphs, 0 disagreements"
    records = {r["graph"]: r for r in map(json.loads, buf.getvalue().splitlines())}
    assert len(records) == 75
    from cubeahedra.graphio import to_graph6

    for G in (CLAW, DIAMOND, cycle(4)):
        r = records[to_graph6(G)]
        assert r["fan_class"] == r["graph_class"] == Verdict.NOT_WEAK_FANO.value
    for r in records.values():
        assert Verdict.from_min(r["min_number"]).value == r["fan_class"]
        assert r["walls"] * 2 == r["cones"] * r["n"]


def test_parallel_output_matches_serial():
    a, b = io.StringIO(), io.StringIO()
    cross_validate(4, out=a, jobs=1, shard_size=7)
    cross_validate(4, out=b, jobs=2, shard_size=7)
    assert a.getvalue() == b.getvalue()


def test_disagreement_aborts(monkeypatch):
    import cubeahedra.crosscheck as cc

    monkeypatch.setattr(cc, "graph_verdict", lambda G: Verdict.FANO)
    with pytest.raises(DisagreementError, match="graph B"):
        cross_validate(3)
    report = cross_validate(3, stop_on_disagreement=False)
    assert report.disagreements == 4  # the four graphs on 3 nodes with a 3-node component


def test_census_record_fields():
    rec = census_record(path(3))
    assert isinstance(rec, CensusRecord)
    assert (rec.n, rec.edges, rec.tubes, rec.rays, rec.cones, rec.walls) == (3, 2, 6, 9, 14, 21)
    assert rec.agree and rec.min_number == 0
    assert json.loads(rec.to_json())["fan_class"] == "WeakFanoNotFano"


def test_relabeling_spot_check():
    assert relabeling_spot_check(max_n=6, samples=100, seed=1) == []
