"""Forbidden induced subgraphs: long cycles, diamonds and claws.

A graph contains none of the three patterns exactly when the toric variety of
its cubeahedron is weak Fano; ``find_forbidden`` produces a witness and
``extract_cycle_or_diamond`` turns a pair of overlapping tubes with a
disconnected overlap into a cycle or diamond witness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ContractError
from .graphs import (
    Graph,
    connected_components,
    format_nodes,
    is_connected,
    members,
    set_key,
)


class Kind(str, enum.Enum):
    CYCLE = "CycleGe4"
    DIAMOND = "Diamond"
    CLAW = "Claw"


def induced_pattern(G: Graph, S: int) -> Kind | None:
    """Which of the three patterns ``G|S`` is isomorphic to, if any."""
    k = S.bit_count()
    if k < 4:
        return None
    e = G.induced_edge_count(S)
    if k == 4 and e == 5:
        return Kind.DIAMOND
    degrees = [G.degree_in(v, S) for v in members(S)]
    if k == 4 and e == 3 and max(degrees) == 3:
        return Kind.CLAW
    if e == k and all(d == 2 for d in degrees) and is_connected(G, S):
        return Kind.CYCLE
    return None


@dataclass(frozen=True)
class ForbiddenWitness:
    kind: Kind
    nodes: int

    def verify(self, G: Graph) -> bool:
        return induced_pattern(G, self.nodes) is self.kind

    @property
    def size(self) -> int:
        return self.nodes.bit_count()

    def __str__(self) -> str:
        return f"{self.kind.value} {format_nodes(self.nodes)}"


def mcs_order(G: Graph) -> list[int]:
    """Maximum cardinality search visiting order (0-based nodes).

    Ties go to the smallest node, so the order is deterministic.
    """
    weight = [0] * G.n
    unvisited = G.full
    order = []
    while unvisited:
        best = -1
        v = -1
        m = unvisited
        while m:
            low = m & -m
            i = low.bit_length() - 1
            if weight[i] > best:
                best, v = weight[i], i
            m ^= low
        order.append(v)
        unvisited &= ~(1 << v)
        nb = G.adj[v] & unvisited
        while nb:
            low = nb & -nb
            weight[low.bit_length() - 1] += 1
            nb ^= low
    return order


def chordality_violation(G: Graph) -> int | None:
    """First node (1-based) at which the MCS order fails to be a perfect
    elimination order, or ``None`` if ``G`` is chordal."""
    order = mcs_order(G)
    visited = 0
    for v in order:
        earlier = G.adj[v] & visited
        if earlier:
            # the most recently visited earlier neighbour
            parent = next(u for u in reversed(order[: order.index(v)]) if earlier >> u & 1)
            rest = earlier & ~(1 << parent)
            if rest & ~G.adj[parent]:
                return v + 1
        visited |= 1 << v
    return None


def is_chordal(G: Graph) -> bool:
    return chordality_violation(G) is None


def _shortest_path(G: Graph, a: int, b: int, allowed: int) -> list[int] | None:
    """BFS shortest path from ``a`` to ``b`` (0-based) inside ``allowed``."""
    parent = {a: -1}
    frontier = [a]
    while frontier:
        nxt = []
        for u in frontier:
            nb = G.adj[u] & allowed
            while nb:
                low = nb & -nb
                nb ^= low
                w = low.bit_length() - 1
                if w in parent:
                    continue
                parent[w] = u
                if w == b:
                    path = [b]
                    while parent[path[-1]] != -1:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(w)
        frontier = nxt
    return None


def shortest_induced_cycle(G: Graph, min_length: int = 4) -> int | None:
    """Node mask of a shortest induced cycle with at least ``min_length`` nodes.

    For each node ``v`` and nonadjacent pair ``a, b`` of its neighbours, a
    shortest ``a``-``b`` path avoiding the rest of ``N[v]`` closes an induced
    cycle through ``v``; every induced cycle of length >= 4 arises this way.
    Among the shortest found, the lexicographically smallest node set wins.
    """
    best = None
    for v in range(G.n):
        nv = G.adj[v]
        closed = nv | (1 << v)
        nbrs = [i - 1 for i in members(nv)]
        for x, a in enumerate(nbrs):
            for b in nbrs[x + 1:]:
                if G.adj[a] >> b & 1:
                    continue
                allowed = (G.full & ~closed) | (1 << a) | (1 << b)
                path = _shortest_path(G, a, b, allowed)
                if path is None or len(path) + 1 < min_length:
                    continue
                mask = 1 << v
                for u in path:
                    mask |= 1 << u
                if best is None or set_key(mask) < set_key(best):
                    best = mask
    return best


def _bits(mask: int) -> list[int]:
    """0-based positions of the set bits of ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _lex_less(a: int, b: int) -> bool:
    """For equal-size node sets: ``a`` comes first lexicographically iff the
    lowest node in exactly one of them is in ``a``."""
    d = a ^ b
    return bool(d & -d & a)


def _four_node_witnesses(G: Graph) -> list[int]:
    """Node masks of every induced claw, diamond and 4-cycle."""
    adj = G.adj
    out = []
    for v in range(G.n):
        av = adj[v]
        nbrs = _bits(av)
        for x, a in enumerate(nbrs):
            aa = adj[a]
            for b in nbrs[x + 1:]:
                if aa >> b & 1:
                    continue
                ab = adj[b]
                base = (1 << v) | (1 << a) | (1 << b)
                # claw: a third leaf independent of a and b
                third = av & ~aa & ~ab & ~((2 << b) - 1)
                while third:
                    low = third & -third
                    third ^= low
                    out.append(base | low)
                # induced C4: v-a-w-b with w not adjacent to v
                far = aa & ab & ~av & ~(1 << v)
                while far:
                    low = far & -far
                    far ^= low
                    out.append(base | low)
        # diamonds: edge v-u with two nonadjacent common neighbours
        for u in _bits(av >> (v + 1) << (v + 1)):
            common = _bits(av & adj[u])
            for x, a in enumerate(common):
                aa = adj[a]
                for b in common[x + 1:]:
                    if not aa >> b & 1:
                        out.append((1 << v) | (1 << u) | (1 << a) | (1 << b))
    return out


def find_forbidden(G: Graph) -> ForbiddenWitness | None:
    """A smallest induced long cycle, diamond or claw in ``G``, if any.

    Four-node witnesses are enumerated exhaustively, so among them the
    lexicographically smallest node set is returned. Longer cycles are only
    searched for when no four-node witness exists and ``G`` fails the
    chordality test.
    """
    small = _four_node_witnesses(G)
    if small:
        best = small[0]
        for m in small:
            if _lex_less(m, best):
                best = m
        return ForbiddenWitness(induced_pattern(G, best), best)
    if is_chordal(G):
        return None
    cycle = shortest_induced_cycle(G, min_length=5)
    if cycle is None:  # pragma: no cover - a non-chordal graph has an induced cycle
        raise RuntimeError("chordality test failed but no induced cycle found")
    return ForbiddenWitness(Kind.CYCLE, cycle)


def graph_weakfano_test(G: Graph) -> bool:
    """No induced cycle on >= 4 nodes, diamond, or claw."""
    return find_forbidden(G) is None


def _path_in(G: Graph, within: int, x: int, y: int) -> list[int]:
    """Simple path of 1-based nodes from ``x`` to ``y`` inside ``G|within``."""
    path = _shortest_path(G, x - 1, y - 1, within)
    if path is None:
        raise ContractError(f"no path from {x} to {y} inside {format_nodes(within)}")
    return [u + 1 for u in path]


def _long_cycle(G: Graph, J: int, Jp: int) -> tuple[list[int], int]:
    """Cycle of length >= 4 through two nonadjacent nodes of ``J & Jp``.

    Returns the cycle as a node list ``c`` (position ``i - 1`` holds the node
    labelled ``i``) together with ``k`` such that ``c[0]`` and ``c[k - 1]``
    are the nonadjacent nodes; ``c[0..k-1]`` runs inside ``J``.
    """
    comps = connected_components(G, within=J & Jp)
    first, others = comps[0], 0
    for c in comps[1:]:
        others |= c
    x = min(members(first))
    xp = min(members(others))
    y = _path_in(G, J, x, xp)
    z = _path_in(G, Jp, x, xp)
    zpos = {v: j for j, v in enumerate(z)}
    p = max(i for i, v in enumerate(y) if first >> (v - 1) & 1 and v in zpos)
    q = min(i for i in range(p + 1, len(y)) if others >> (y[i] - 1) & 1 and y[i] in zpos)
    along_y = y[p:q + 1]
    a, b = zpos[y[p]], zpos[y[q]]
    along_z = z[a:b + 1] if a < b else z[b:a + 1][::-1]
    # cycle: y_p ... y_q along y, then back to y_p along z
    cycle = along_y + along_z[::-1][1:-1]
    return cycle, len(along_y)


def _shorten(G: Graph, c: list[int], k: int) -> tuple[list[int], int]:
    """Remove chords that allow a shorter cycle keeping ``c[0]``, ``c[k-1]``."""
    def edge(i: int, j: int) -> bool:
        return G.has_edge(c[i - 1], c[j - 1])

    while True:
        l = len(c)
        changed = False
        for i in range(1, k + 1):
            for j in range(i + 2, k + 1):
                if edge(i, j):
                    c = c[:i] + c[j - 1:]
                    k -= j - i - 1
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue
        for i in range(k, l + 1):
            for j in range(i + 2, l + 1):
                if edge(i, j):
                    c = c[:i] + c[j - 1:]
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue
        for i in range(k, l):
            if edge(i, 1):
                c = c[:i]
                changed = True
                break
        if not changed:
            return c, k


def extract_cycle_or_diamond(G: Graph, J: int, Jp: int) -> ForbiddenWitness:
    """Induced cycle (>= 4 nodes) or diamond built from two tubes whose
    intersection is nonempty and disconnected."""
    for name, T in (("J", J), ("J'", Jp)):
        if not is_connected(G, T):
            raise ContractError(f"{name}={format_nodes(T)} is not a tube of G")
    common = J & Jp
    if not common:
        raise ContractError("J and J' are disjoint")
    if is_connected(G, common):
        raise ContractError(f"J & J' = {format_nodes(common)} is connected")

    c, k = _long_cycle(G, J, Jp)
    c, k = _shorten(G, c, k)
    l = len(c)

    def E(i: int, j: int) -> bool:
        return G.has_edge(c[i - 1], c[j - 1])

    def nodes(*labels: int) -> int:
        mask = 0
        for i in labels:
            mask |= 1 << (c[i - 1] - 1)
        return mask

    if not E(2, l):
        i_min = min(i for i in range(2, k + 1) if any(E(i, j) for j in range(k + 1, l + 1)))
        j_max = max(j for j in range(k + 1, l + 1) if E(i_min, j))
        witness = ForbiddenWitness(Kind.CYCLE, nodes(*range(1, i_min + 1), *range(j_max, l + 1)))
    else:
        hits = [j for j in range(k + 1, l) if E(2, j)]
        if hits:
            j_max = max(hits)
            if j_max == l - 1:
                witness = ForbiddenWitness(Kind.DIAMOND, nodes(1, 2, l - 1, l))
            else:
                witness = ForbiddenWitness(Kind.CYCLE, nodes(2, *range(j_max, l + 1)))
        else:
            i_min = min(i for i in range(3, k + 1) if any(E(i, j) for j in range(k + 1, l + 1)))
            j_max = max(j for j in range(k + 1, l + 1) if E(i_min, j))
            if i_min == 3 and j_max == l:
                witness = ForbiddenWitness(Kind.DIAMOND, nodes(1, 2, 3, l))
            else:
                witness = ForbiddenWitness(Kind.CYCLE, nodes(*range(2, i_min + 1), *range(j_max, l + 1)))
    if not witness.verify(G):  # pragma: no cover - guarded by tests
        raise RuntimeError(f"extraction produced an invalid witness {witness}")
    return witness
