"""Exhaustive verification over all labelled graphs of a given size.

Every graph gets two independent verdicts: one from the fan (minimum wall
number) and one from the graph alone (component sizes, forbidden induced
subgraphs). They must agree. Results stream out as JSON lines, one record
per graph, in edge-mask order.
"""

from __future__ import annotations

import json
import logging
import multiprocessing
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import IO, Iterator

from .errors import CapacityError
from .fan import build_fan
from .forbidden import is_chordal
from .graphio import to_graph6
from .graphs import Graph, enumerate_tubes, is_connected
from .intersection import Verdict, classify_fan, graph_verdict

log = logging.getLogger(__name__)

MAX_ENUM_NODES = 9


class DisagreementError(AssertionError):
    def __init__(self, record: "CensusRecord"):
        self.record = record
        super().__init__(
            f"graph {record.graph}: fan says {record.fan_class}, graph says {record.graph_class}"
        )


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def graph_from_mask(n: int, mask: int, pairs: list[tuple[int, int]] | None = None) -> Graph:
    """Graph whose edge ``k`` (in ``combinations(range(n), 2)`` order) is
    present iff bit ``k`` of ``mask`` is set."""
    pairs = pairs or _pairs(n)
    adj = [0] * n
    for k, (u, v) in enumerate(pairs):
        if mask >> k & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def enumerate_graphs(n: int, connected_only: bool = False, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """All ``2**(n(n-1)/2)`` labelled graphs on ``n`` nodes, by edge mask."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n > MAX_ENUM_NODES:
        raise CapacityError(f"exhaustive enumeration is capped at n={MAX_ENUM_NODES}")
    pairs = _pairs(n)
    total = 1 << len(pairs)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        G = graph_from_mask(n, mask, pairs)
        if connected_only and not is_connected(G, G.full):
            continue
        yield G


@dataclass
class CensusRecord:
    graph: str
    n: int
    edges: int
    tubes: int
    rays: int
    cones: int
    walls: int
    min_number: int
    fan_class: str
    graph_class: str
    agree: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self), separators=(",", ":"))


def census_record(G: Graph) -> CensusRecord:
    """Build, verify and classify the fan of ``G`` and compare verdicts.

    Raises ``FanIntegrityError`` if the fan fails any structural check.
    """
    tubes = enumerate_tubes(G)
    fan = build_fan(G)
    verdict = classify_fan(fan)
    gv = graph_verdict(G)
    if verdict.is_weak_fano and not is_chordal(G):
        raise AssertionError(f"weak Fano graph {to_graph6(G)} is not chordal")
    return CensusRecord(
        graph=to_graph6(G),
        n=G.n,
        edges=G.edge_count,
        tubes=len(tubes),
        rays=fan.ray_count,
        cones=fan.cone_count,
        walls=len(fan.facets.counts),
        min_number=verdict.min_number,
        fan_class=verdict.verdict.value,
        graph_class=gv.value,
        agree=verdict.verdict is gv,
    )


def _shard(args: tuple[int, int, int, bool]) -> list[CensusRecord]:
    n, start, stop, connected_only = args
    return [census_record(G) for G in enumerate_graphs(n, connected_only, start, stop)]


@dataclass
class CrossReport:
    max_n: int
    graphs: dict[int, int] = field(default_factory=dict)
    buckets: Counter = field(default_factory=Counter)
    disagreements: int = 0
    seconds: float = 0.0

    @property
    def total(self) -> int:
        return sum(self.graphs.values())

    def summary(self) -> str:
        sizes = "+".join(str(self.graphs[n]) for n in sorted(self.graphs, reverse=True))
        lines = [f"{sizes} graphs, {self.disagreements} disagreements"]
        for v in Verdict:
            lines.append(f"{v.value}: {self.buckets.get(v.value, 0)}")
        return "\n".join(lines)


def cross_validate(
    max_n: int,
    connected_only: bool = False,
    jobs: int = 1,
    out: IO[str] | None = None,
    min_n: int = 1,
    shard_size: int = 1024,
    stop_on_disagreement: bool = True,
) -> CrossReport:
    """Classify every labelled graph with ``min_n <= n <= max_n`` both ways.

    Records are written to ``out`` (if given) in (n, edge mask) order
    regardless of ``jobs``. The first disagreement raises
    ``DisagreementError`` unless ``stop_on_disagreement`` is false.
    """
    if max_n > MAX_ENUM_NODES:
        raise CapacityError(f"exhaustive enumeration is capped at n={MAX_ENUM_NODES}")
    report = CrossReport(max_n)
    t0 = time.perf_counter()
    tasks = []
    for n in range(min_n, max_n + 1):
        report.graphs[n] = 0
        total = 1 << (n * (n - 1) // 2)
        tasks += [(n, s, min(s + shard_size, total), connected_only) for s in range(0, total, shard_size)]
    pool = multiprocessing.Pool(jobs) if jobs > 1 else None
    try:
        results = pool.imap(_shard, tasks) if pool else map(_shard, tasks)
        for records in results:
            for rec in records:
                report.graphs[rec.n] += 1
                report.buckets[rec.fan_class] += 1
                if out is not None:
                    out.write(rec.to_json() + "\n")
                if not rec.agree:
                    report.disagreements += 1
                    if stop_on_disagreement:
                        raise DisagreementError(rec)
    finally:
        if pool:
            pool.terminate()
    report.seconds = time.perf_counter() - t0
    log.info("crosscheck up to n=%d: %d graphs in %.1fs", max_n, report.total, report.seconds)
    return report


def relabeling_spot_check(max_n: int = 6, samples: int = 100, seed: int = 0) -> list[str]:
    """Permute node labels of random graphs and re-classify both ways.

    Returns graph6 strings of graphs whose verdict changed (expected empty).
    """
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        n = rng.randint(1, max_n)
        G = graph_from_mask(n, rng.getrandbits(n * (n - 1) // 2))
        perm = list(range(1, n + 1))
        rng.shuffle(perm)
        H = G.relabel(perm)
        a, b = census_record(G), census_record(H)
        same = (a.fan_class, a.graph_class, a.cones, a.walls, a.min_number) == (
            b.fan_class, b.graph_class, b.cones, b.walls, b.min_number)
        if not same:
            bad.append(a.graph)
    return bad
