"""Walls of the fan, anticanonical intersection numbers, and classification.

For a wall (codimension-one cone) with base rays ``v_1..v_{n-1}`` and the two
rays ``v, v'`` completing it to maximal cones there are unique integers with
``v + v' + a_1 v_1 + ... + a_{n-1} v_{n-1} = 0``; the anticanonical degree of
the corresponding torus-invariant curve is ``2 + sum(a_i)``. The variety is
Fano iff every such number is positive, weak Fano iff every one is
nonnegative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import ContractError, FanIntegrityError
from .fan import Bar, Fan, FacetLabel, Tube, build_fan, compatible, label_key
from .forbidden import Kind, shortest_induced_cycle
from .graphs import Graph, connected_components, members, nodeset, reach
from .lattice import solve_unimodular


@dataclass(frozen=True)
class Wall:
    base: tuple[FacetLabel, ...]
    neighbors: tuple[FacetLabel, FacetLabel]
    coefficients: tuple[int, ...]
    number: int

    def relation_holds(self, n: int) -> bool:
        """Check ``e_J + e_J' + sum a_i e_{I_i} == 0`` coordinatewise."""
        from .fan import ray_vector

        total = ray_vector(self.neighbors[0], n) + ray_vector(self.neighbors[1], n)
        for a, lab in zip(self.coefficients, self.base):
            total = total + a * ray_vector(lab, n)
        return not total.any()

    def to_json(self) -> dict:
        return {
            "base": [str(lab) for lab in self.base],
            "neighbors": [str(lab) for lab in self.neighbors],
            "coefficients": list(self.coefficients),
            "number": self.number,
        }

    def __str__(self) -> str:
        base = ", ".join(map(str, self.base))
        return f"base=[{base}] neighbors=[{self.neighbors[0]}, {self.neighbors[1]}] number={self.number}"


class Verdict(str, enum.Enum):
    FANO = "Fano"
    WEAK_FANO = "WeakFanoNotFano"
    NOT_WEAK_FANO = "NotWeakFano"

    @classmethod
    def from_min(cls, m: int | None) -> "Verdict":
        if m is None or m >= 1:
            return cls.FANO
        return cls.WEAK_FANO if m == 0 else cls.NOT_WEAK_FANO


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    min_number: int | None
    wall: Wall | None

    @property
    def is_fano(self) -> bool:
        return self.verdict is Verdict.FANO

    @property
    def is_weak_fano(self) -> bool:
        return self.verdict is not Verdict.NOT_WEAK_FANO


@dataclass
class WallTable:
    """All walls of a fan in array form.

    Row ``w`` describes the wall obtained by dropping position ``pos[w]`` of
    cone ``cone[w]``; ``inner[w]`` is the dropped label (``J``) and
    ``outer[w]`` the label completing the base on the other side (``J'``).
    ``coefficients[w]`` is aligned with the base labels in cone order.
    """

    cone: np.ndarray
    pos: np.ndarray
    inner: np.ndarray
    outer: np.ndarray
    coefficients: np.ndarray
    numbers: np.ndarray

    def __len__(self) -> int:
        return len(self.numbers)


def wall_table(fan: Fan) -> WallTable:
    """Solve every wall relation at once with exact batched elimination."""
    n = fan.n
    inc = fan.facets
    if inc.counts.size == 0 or (inc.counts != 2).any():
        raise FanIntegrityError("some codimension-one face does not lie in exactly two maximal cones")
    det, adj = fan.determinants
    if (np.abs(det) != 1).any():
        raise FanIntegrityError("fan is singular")
    pairs = inc.pairs()
    t1, k1 = np.divmod(pairs[:, 0], n)
    t2, k2 = np.divmod(pairs[:, 1], n)
    J = fan.cones[t1, k1]
    Jp = fan.cones[t2, k2]
    rays = fan.rays
    # inverse = det * adj for unimodular matrices
    x = det[t1, None] * np.einsum("wij,wj->wi", adj[t1], rays[Jp])
    y = det[t2, None] * np.einsum("wij,wj->wi", adj[t2], rays[J])
    rows = np.arange(len(pairs))
    if (x[rows, k1] != -1).any() or (y[rows, k2] != -1).any():
        raise FanIntegrityError("wall relation: coefficient of the completing ray is not -1")
    keep = np.ones_like(x, dtype=bool)
    keep[rows, k1] = False
    coeffs = -x[keep].reshape(len(pairs), n - 1)
    keep2 = np.ones_like(y, dtype=bool)
    keep2[rows, k2] = False
    if not np.array_equal(coeffs, -y[keep2].reshape(len(pairs), n - 1)):
        raise FanIntegrityError("wall relation differs between the two sides of a wall")
    numbers = 2 + coeffs.sum(axis=1)
    return WallTable(t1, k1, J, Jp, coeffs, numbers)


def _wall_from_row(fan: Fan, table: WallTable, w: int) -> Wall:
    t, k = int(table.cone[w]), int(table.pos[w])
    base = tuple(fan.labels[int(i)] for j, i in enumerate(fan.cones[t]) if j != k)
    return Wall(
        base=base,
        neighbors=(fan.labels[int(table.inner[w])], fan.labels[int(table.outer[w])]),
        coefficients=tuple(int(a) for a in table.coefficients[w]),
        number=int(table.numbers[w]),
    )


def enumerate_walls(fan: Fan) -> list[Wall]:
    """Every wall of the fan exactly once, with its relation solved."""
    table = wall_table(fan)
    return [_wall_from_row(fan, table, w) for w in range(len(table))]


def wall_neighbors(fan: Fan, base: frozenset[FacetLabel] | set[FacetLabel]) -> list[FacetLabel]:
    """Labels completing ``base`` (size ``n - 1``) to a maximal cone."""
    if len(base) != fan.n - 1:
        raise ContractError(f"a wall base has {fan.n - 1} labels, got {len(base)}")
    try:
        idx = [fan.index[lab] for lab in base]
    except KeyError as exc:
        raise ContractError(f"{exc.args[0]} is not a ray of this fan") from None
    out = []
    for t in fan.cones_containing(idx):
        out.extend(fan.labels[int(i)] for i in fan.cones[t] if int(i) not in idx)
    return sorted(out, key=label_key)


def wall_relation(base: tuple[FacetLabel, ...] | list[FacetLabel], J: FacetLabel, Jp: FacetLabel, n: int) -> tuple[int, ...]:
    """Coefficients ``a_i`` with ``e_J + e_J' + sum a_i e_{base_i} = 0``.

    Solved one system at a time on Python integers, independently of
    ``wall_table``.
    """
    from .fan import ray_vector

    basis = [ray_vector(lab, n).tolist() for lab in base] + [ray_vector(J, n).tolist()]
    try:
        x = solve_unimodular(basis, ray_vector(Jp, n).tolist())
    except ValueError as exc:
        raise FanIntegrityError(f"wall basis is not unimodular: {exc}") from None
    if x[-1] != -1:
        raise FanIntegrityError(f"coefficient of {J} is {x[-1]}, expected -1")
    return tuple(-c for c in x[:-1])


def intersection_number(coefficients: tuple[int, ...] | list[int]) -> int:
    return 2 + sum(coefficients)


def find_wall(fan: Fan, base) -> Wall:
    """The wall with the given base, solved by the scalar route."""
    base = tuple(sorted(base, key=label_key))
    nbrs = wall_neighbors(fan, frozenset(base))
    if len(nbrs) != 2:
        raise FanIntegrityError(f"base [{', '.join(map(str, base))}] lies in {len(nbrs)} maximal cones")
    coeffs = wall_relation(base, nbrs[0], nbrs[1], fan.n)
    return Wall(base, (nbrs[0], nbrs[1]), coeffs, intersection_number(coeffs))


def classify_fan(fan: Fan, fast: bool = False) -> Classification:
    """Fano / weak Fano / neither from the minimum wall number.

    The reported wall attains the minimum; it is re-solved by the scalar
    route and must agree with the batched one. With ``fast=True`` the
    re-solve is skipped and, if any wall has number <= -1, the first such
    wall is reported with its own number instead of the minimum.
    """
    table = wall_table(fan)
    if fast:
        negative = np.flatnonzero(table.numbers <= -1)
        w = int(negative[0]) if negative.size else int(np.argmin(table.numbers))
        wall = _wall_from_row(fan, table, w)
        return Classification(Verdict.from_min(wall.number), wall.number, wall)
    w = int(np.argmin(table.numbers))
    batched = _wall_from_row(fan, table, w)
    checked = find_wall(fan, batched.base)
    if checked.number != batched.number:
        raise FanIntegrityError(f"wall number mismatch on {batched}: scalar route gives {checked.number}")
    return Classification(Verdict.from_min(batched.number), batched.number, batched)


def classify_graph(G: Graph) -> Classification:
    """Build, verify and classify the fan of ``G``; the empty graph is Fano."""
    if G.n == 0:
        return Classification(Verdict.FANO, None, None)
    return classify_fan(build_fan(G))


def graph_verdict(G: Graph) -> Verdict:
    """Classification read off the graph alone."""
    from .forbidden import graph_weakfano_test
    from .graphs import graph_fano_test

    if graph_fano_test(G):
        return Verdict.FANO
    return Verdict.WEAK_FANO if graph_weakfano_test(G) else Verdict.NOT_WEAK_FANO


# Witness nerves -----------------------------------------------------------

COMPONENT = "component"


def _bars_outside(G: Graph, mask: int) -> list[FacetLabel]:
    return [Bar(v) for v in members(G.full & ~mask)]


def _chain(nodes: list[int], upto: int) -> Tube:
    return Tube(nodeset(nodes[:upto]))


def _order_component(G: Graph, comp: int) -> list[int]:
    """Order a component of >= 3 nodes so every prefix is connected and the
    second and third nodes are adjacent."""
    for b in members(comp):
        nb = members(G.neighbors(b))
        if len(nb) >= 2:
            a, c = nb[0], nb[1]
            order = [a, b, c]
            have = nodeset(order)
            while have != comp:
                nxt = G.neighborhood(have) & comp & ~have
                v = (nxt & -nxt).bit_length()
                order.append(v)
                have |= 1 << (v - 1)
            return order
    raise ContractError("component has no node of degree >= 2")


def _cycle_order(G: Graph, mask: int) -> list[int]:
    start = min(members(mask))
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [v for v in members(G.neighbors(cur) & mask) if v != prev]
        if len(order) > 1 and start in nxt:
            return order
        v = min(x for x in nxt if x not in order)
        order.append(v)
        prev, cur = cur, v


def _find_claw(G: Graph) -> list[int] | None:
    for v in range(1, G.n + 1):
        nb = members(G.neighbors(v))
        for i, a in enumerate(nb):
            for j in range(i + 1, len(nb)):
                b = nb[j]
                if G.has_edge(a, b):
                    continue
                for c in nb[j + 1:]:
                    if not G.has_edge(a, c) and not G.has_edge(b, c):
                        return [v, a, b, c]
    return None


def _find_diamond(G: Graph) -> list[int] | None:
    for u, v in G.edges():
        common = members(G.neighbors(u) & G.neighbors(v))
        for i, a in enumerate(common):
            for b in common[i + 1:]:
                if not G.has_edge(a, b):
                    return [u, v, a, b]
    return None


def _check_nodes(G: Graph, nodes: list[int], kind: str) -> None:
    if len(set(nodes)) != len(nodes) or not all(1 <= v <= G.n for v in nodes):
        raise ContractError(f"{kind} nodes must be distinct labels in 1..{G.n}")

    def fail():
        raise ContractError(f"nodes {nodes} do not induce a {kind} in the expected order")

    if kind == Kind.CLAW.value:
        c, *leaves = nodes
        if len(leaves) != 3 or not all(G.has_edge(c, x) for x in leaves):
            fail()
        if any(G.has_edge(x, y) for i, x in enumerate(leaves) for y in leaves[i + 1:]):
            fail()
    elif kind == Kind.DIAMOND.value:
        if len(nodes) != 4:
            fail()
        a, b, c, d = nodes
        if not all(G.has_edge(*e) for e in ((a, b), (a, c), (a, d), (b, c), (b, d))) or G.has_edge(c, d):
            fail()
    elif kind == Kind.CYCLE.value:
        k = len(nodes)
        if k < 4:
            fail()
        for i in range(k):
            for j in range(i + 1, k):
                if G.has_edge(nodes[i], nodes[j]) != (j - i == 1 or (i == 0 and j == k - 1)):
                    fail()
    else:
        k = len(nodes)
        mask = nodeset(nodes)
        if k < 3 or reach(G, 1 << (nodes[0] - 1), G.full) != mask or not G.has_edge(nodes[1], nodes[2]):
            fail()
        for i in range(1, k + 1):
            prefix = nodeset(nodes[:i])
            if reach(G, 1 << (nodes[0] - 1), prefix) != prefix:
                fail()


def _normalize_kind(pattern) -> str:
    if isinstance(pattern, Kind):
        return pattern.value
    p = str(pattern).lower()
    aliases = {"component": COMPONENT, "fano": COMPONENT, "cycle": Kind.CYCLE.value,
               "cyclege4": Kind.CYCLE.value, "diamond": Kind.DIAMOND.value, "claw": Kind.CLAW.value}
    if p not in aliases:
        raise ContractError(f"unknown witness pattern {pattern!r}")
    return aliases[p]


def witness_nerve(G: Graph, pattern, nodes: list[int] | None = None) -> tuple[frozenset[FacetLabel], int]:
    """An explicit wall base showing ``G`` is not Fano (or not weak Fano).

    ``pattern`` is ``"component"`` (a component with >= 3 nodes, predicted
    number 0), or ``"cycle"``, ``"diamond"``, ``"claw"`` (predicted -1).
    ``nodes`` lists the configuration in canonical order: a connected
    ordering with nodes 2 and 3 adjacent; the cycle in cyclic order; the two
    degree-3 diamond nodes first; the claw centre first. When omitted, a
    configuration is searched for.
    """
    kind = _normalize_kind(pattern)
    if nodes is None:
        if kind == COMPONENT:
            big = [c for c in connected_components(G) if c.bit_count() >= 3]
            nodes = _order_component(G, big[0]) if big else None
        elif kind == Kind.CLAW.value:
            nodes = _find_claw(G)
        elif kind == Kind.DIAMOND.value:
            nodes = _find_diamond(G)
        else:
            cyc = shortest_induced_cycle(G)
            nodes = _cycle_order(G, cyc) if cyc is not None else None
        if nodes is None:
            raise ContractError(f"graph has no {kind} configuration")
    nodes = list(nodes)
    _check_nodes(G, nodes, kind)
    support = nodeset(nodes)
    if kind == COMPONENT:
        N = [Tube(nodeset([nodes[1]]))] + [_chain(nodes, i) for i in range(3, len(nodes) + 1)]
        expected = 0
    elif kind == Kind.CYCLE.value:
        k = len(nodes)
        N = [_chain(nodes, i) for i in range(1, k - 2)] + [Tube(nodeset([nodes[k - 2]])), _chain(nodes, k)]
        expected = -1
    elif kind == Kind.DIAMOND.value:
        N = [Tube(nodeset([nodes[2]])), Tube(nodeset([nodes[3]])), Tube(support)]
        expected = -1
    else:
        N = [Tube(nodeset([v])) for v in nodes[1:]]
        expected = -1
    N += _bars_outside(G, support)
    return frozenset(N), expected


def witness_wall(G: Graph, pattern, nodes: list[int] | None = None, fan: Fan | None = None) -> tuple[Wall, int]:
    """Build the witness nerve, locate it as a wall of the fan, and solve it."""
    N, expected = witness_nerve(G, pattern, nodes)
    fan = fan or build_fan(G)
    wall = find_wall(fan, N)
    J, Jp = wall.neighbors
    if compatible(J, Jp, G):  # pragma: no cover - would contradict the wall structure
        raise FanIntegrityError(f"wall neighbours {J} and {Jp} are compatible")
    return wall, expected
