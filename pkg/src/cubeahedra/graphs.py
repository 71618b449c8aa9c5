"""Simple graphs on nodes ``1..n`` with bit-mask node sets.

A node set is a plain ``int``: node ``v`` is present iff bit ``v - 1`` is set.
All set algebra (union, intersection, containment) is therefore integer
bit arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CapacityError, ContractError

MAX_NODES = 64


def nodeset(nodes: Iterable[int]) -> int:
    """Pack 1-based node labels into a mask."""
    mask = 0
    for v in nodes:
        if v < 1:
            raise ValueError(f"node labels are 1-based, got {v}")
        mask |= 1 << (v - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Sorted 1-based labels of the nodes in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def lowest(mask: int) -> int:
    """Smallest node label in a nonempty mask."""
    return (mask & -mask).bit_length()


def set_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Sort key: by size, then lexicographically by sorted members."""
    m = members(mask)
    return len(m), m


def format_nodes(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on ``1..n``.

    ``adj[i]`` is the neighbour mask of node ``i + 1``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("node count must be nonnegative")
        if self.n > MAX_NODES:
            raise CapacityError(f"at most {MAX_NODES} nodes supported, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = self.full
        for i, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"node {i + 1} has a neighbour outside 1..{self.n}")
            if nb >> i & 1:
                raise ValueError(f"self-loop at node {i + 1}")
            m = nb
            while m:
                low = m & -m
                if not self.adj[low.bit_length() - 1] >> i & 1:
                    raise ValueError("adjacency is not symmetric")
                m ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n > MAX_NODES:
            raise CapacityError(f"at most {MAX_NODES} nodes supported, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full(self) -> int:
        """Mask of all nodes."""
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            for j in members(self.adj[i] >> (i + 1)):
                out.append((i + 1, i + 1 + j))
        return out

    @property
    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> int:
        return self.adj[v - 1]

    def neighborhood(self, mask: int) -> int:
        """Union of neighbour masks over ``mask``."""
        out = 0
        while mask:
            low = mask & -mask
            out |= self.adj[low.bit_length() - 1]
            mask ^= low
        return out

    def induced_edge_count(self, mask: int) -> int:
        total = 0
        m = mask
        while m:
            low = m & -m
            total += (self.adj[low.bit_length() - 1] & mask).bit_count()
            m ^= low
        return total // 2

    def degree_in(self, v: int, mask: int) -> int:
        return (self.adj[v - 1] & mask).bit_count()

    def relabel(self, perm: dict[int, int] | list[int]) -> "Graph":
        """Image of the graph under a node permutation.

        ``perm`` maps old label to new label; a list is read as
        ``perm[old - 1] = new``.
        """
        if isinstance(perm, dict):
            image = perm
        else:
            image = {i + 1: p for i, p in enumerate(perm)}
        return Graph.from_edges(self.n, ((image[u], image[v]) for u, v in self.edges()))

    def subgraph(self, mask: int) -> "Graph":
        """Induced subgraph, relabelled to ``1..|mask|`` in increasing order."""
        nodes = members(mask)
        index = {v: k + 1 for k, v in enumerate(nodes)}
        return Graph.from_edges(
            len(nodes),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def __str__(self) -> str:
        edges = ",".join(f"{u}-{v}" for u, v in self.edges())
        return f"Graph(n={self.n}, edges=[{edges}])"


def reach(G: Graph, start: int, within: int) -> int:
    """Nodes of ``within`` reachable from the nodes of ``start`` inside ``G|within``."""
    seen = start & within
    frontier = seen
    while frontier:
        frontier = G.neighborhood(frontier) & within & ~seen
        seen |= frontier
    return seen


def is_connected(G: Graph, S: int) -> bool:
    """True iff ``S`` is nonempty and ``G|S`` is connected."""
    if S & ~G.full:
        raise ContractError("node set is not a subset of V(G)")
    if not S:
        return False
    return reach(G, S & -S, S) == S


def connected_components(G: Graph, within: int | None = None) -> list[int]:
    """Components of ``G`` (or of ``G|within``), ordered by least element."""
    rest = G.full if within is None else within
    out = []
    while rest:
        comp = reach(G, rest & -rest, rest)
        out.append(comp)
        rest &= ~comp
    return out


RANK_TABLE_MAX = 12


@lru_cache(maxsize=None)
def _rank_table(n: int) -> list[int]:
    """Position of every mask of ``1..n`` in (size, lexicographic) order."""
    ranks = [0] * (1 << n)
    for i, m in enumerate(sorted(range(1 << n), key=set_key)):
        ranks[m] = i
    return ranks


def _lex_rank(mask: int, n: int) -> int:
    """Among equal-size sets, smaller rank means lexicographically earlier
    sorted members: the lowest differing node decides, so compare bit-reversed
    masks in descending order."""
    return -int(format(mask, f"0{n}b")[::-1], 2) if n else 0


def enumerate_tubes(G: Graph) -> list[int]:
    """All nonempty node sets inducing a connected subgraph.

    Each tube is generated exactly once from its smallest node, extending
    only by larger nodes that are not already adjacent to the current set
    (the ESU scheme), so the cost tracks the number of tubes rather than
    ``2**n``. Returned in (size, lexicographic) order.
    """
    adj = G.adj
    n = G.n
    found: list[int] = []

    def grow(sub: int, ext: int, near: int, above: int) -> None:
        found.append(sub)
        while ext:
            low = ext & -ext
            ext ^= low
            nb = adj[low.bit_length() - 1]
            grow(sub | low, ext | (nb & above & ~near), near | nb, above)

    for v in range(n):
        above = ~((2 << v) - 1)
        grow(1 << v, adj[v] & above, adj[v] | (1 << v), above)
    if n <= RANK_TABLE_MAX:
        found.sort(key=_rank_table(n).__getitem__)
    else:
        found.sort(key=lambda m: (m.bit_count(), _lex_rank(m, n)))
    return found


def graph_fano_test(G: Graph) -> bool:
    """Every connected component has at most two nodes."""
    return all(c.bit_count() <= 2 for c in connected_components(G))


def iter_subsets(mask: int) -> Iterator[int]:
    """All nonempty submasks of ``mask``."""
    sub = mask
    while sub:
        yield sub
        sub = (sub - 1) & mask
