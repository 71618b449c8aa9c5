"""The normal fan of a graph cubeahedron, built combinatorially.

Facets of the cubeahedron are labelled by tubes (connected node sets) and by
bars ``~i``, one per node. Each label carries an outward primitive normal:
the indicator vector of a tube, or ``-e_i`` for a bar. Two facets meet iff
their labels are compatible; maximal cones of the fan are the maximal sets of
pairwise compatible labels, each of size ``n``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Union

import numpy as np

from .cliques import maximal_cliques
from .errors import ContractError, FanIntegrityError
from .graphs import Graph, enumerate_tubes, format_nodes, is_connected, members, nodeset, set_key
from .lattice import batched_adjugate


@dataclass(frozen=True)
class Tube:
    nodes: int

    def __str__(self) -> str:
        return format_nodes(self.nodes)


@dataclass(frozen=True)
class Bar:
    node: int

    def __str__(self) -> str:
        return f"~{self.node}"


FacetLabel = Union[Tube, Bar]

_TUBE_RE = re.compile(r"^\{\s*\d+(\s*,\s*\d+)*\s*\}$")


def parse_label(text: str) -> FacetLabel:
    """Inverse of ``str`` on labels: ``"{1,2}"`` or ``"~3"``."""
    s = text.strip()
    if s.startswith("~") and s[1:].isdigit():
        return Bar(int(s[1:]))
    if _TUBE_RE.match(s):
        return Tube(nodeset(int(x) for x in s[1:-1].split(",")))
    raise ValueError(f"not a facet label: {text!r}")


def label_key(label: FacetLabel) -> tuple:
    """Tubes by (size, lexicographic), then bars by index."""
    if isinstance(label, Tube):
        return (0,) + set_key(label.nodes)
    return (1, label.node)


def tube(*nodes: int) -> Tube:
    return Tube(nodeset(nodes))


def ray_vector(label: FacetLabel, n: int) -> np.ndarray:
    v = np.zeros(n, dtype=np.int64)
    if isinstance(label, Tube):
        for i in members(label.nodes):
            v[i - 1] = 1
    else:
        v[label.node - 1] = -1
    return v


def is_valid_label(label: FacetLabel, G: Graph) -> bool:
    if isinstance(label, Tube):
        return is_connected(G, label.nodes) if not label.nodes & ~G.full else False
    return 1 <= label.node <= G.n


def compatible(a: FacetLabel, b: FacetLabel, G: Graph) -> bool:
    """Whether the facets labelled ``a`` and ``b`` intersect."""
    if a == b:
        raise ContractError("compatibility is defined for distinct labels")
    if isinstance(a, Bar) and isinstance(b, Bar):
        return True
    if isinstance(a, Bar):
        a, b = b, a
    if isinstance(b, Bar):
        return not a.nodes >> (b.node - 1) & 1
    inter = a.nodes & b.nodes
    if inter == a.nodes or inter == b.nodes:
        return True
    return not is_connected(G, a.nodes | b.nodes)


def facet_labels(G: Graph, tubes: list[int] | None = None) -> tuple[FacetLabel, ...]:
    if tubes is None:
        tubes = enumerate_tubes(G)
    return tuple(Tube(t) for t in tubes) + tuple(Bar(i) for i in range(1, G.n + 1))


def compatibility_matrix(G: Graph, tubes: list[int]) -> np.ndarray:
    """Boolean ``(L, L)`` matrix of the compatibility relation, labels in
    ``facet_labels`` order. Vectorized over all pairs."""
    t = len(tubes)
    n = G.n
    L = t + n
    T = np.array(tubes, dtype=np.uint64)
    ok = np.zeros((L, L), dtype=bool)
    a, b = T[:, None], T[None, :]
    inter = a & b
    nested = (inter == a) | (inter == b)
    order = np.sort(T)
    union = (a | b).ravel()
    pos = np.minimum(np.searchsorted(order, union), t - 1)
    union_is_tube = (order[pos] == union).reshape(t, t)
    ok[:t, :t] = nested | ~union_is_tube
    bits = (T[:, None] >> np.arange(n, dtype=np.uint64)[None, :]) & np.uint64(1)
    ok[:t, t:] = bits == 0
    ok[t:, :t] = ok[:t, t:].T
    ok[t:, t:] = True
    np.fill_diagonal(ok, False)
    return ok


def to_bitsets(ok: np.ndarray) -> list[int]:
    packed = np.packbits(ok, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _cliques_to_rows(cliques: list[int], L: int, n: int) -> np.ndarray:
    nbytes = (L + 7) // 8
    if not cliques:
        return np.zeros((0, n), dtype=np.int64)
    raw = b"".join(c.to_bytes(nbytes, "little") for c in cliques)
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    bits = bits.reshape(len(cliques), nbytes * 8)[:, :L]
    sizes = bits.sum(axis=1)
    bad = np.flatnonzero(sizes != n)
    if bad.size:
        raise FanIntegrityError(
            f"maximal compatible set of size {int(sizes[bad[0]])} != n={n}: "
            "compatibility predicate is broken"
        )
    rows = np.nonzero(bits)[1].reshape(len(cliques), n).astype(np.int64)
    return rows[np.lexsort(rows.T[::-1])]


@dataclass(eq=False)
class Fan:
    """Simplicial fan given by labelled rays and maximal cones.

    ``cones`` is an integer array of shape ``(C, n)``; each row lists indices
    into ``labels`` in increasing order.
    """

    graph: Graph
    labels: tuple[FacetLabel, ...]
    cones: np.ndarray
    compat: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        self.cones = np.asarray(self.cones, dtype=np.int64).reshape(-1, self.graph.n)
        self.cones.setflags(write=False)

    @classmethod
    def from_cones(cls, G: Graph, cones: Iterable[Iterable[FacetLabel]]) -> "Fan":
        """Fan from explicit label sets, e.g. to test ``verify_fan``."""
        labels = facet_labels(G)
        index = {lab: i for i, lab in enumerate(labels)}
        rows = [sorted(index[lab] for lab in cone) for cone in cones]
        return cls(G, labels, np.array(rows, dtype=np.int64).reshape(-1, G.n))

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def index(self) -> dict[FacetLabel, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def rays(self) -> np.ndarray:
        R = np.stack([ray_vector(lab, self.n) for lab in self.labels]) if self.labels else np.zeros((0, self.n), np.int64)
        R.setflags(write=False)
        return R

    @property
    def ray_count(self) -> int:
        return len(self.labels)

    @property
    def cone_count(self) -> int:
        return len(self.cones)

    def cone(self, t: int) -> frozenset[FacetLabel]:
        return frozenset(self.labels[i] for i in self.cones[t])

    @property
    def maximal_cones(self) -> list[frozenset[FacetLabel]]:
        return [self.cone(t) for t in range(self.cone_count)]

    def generator_matrices(self) -> np.ndarray:
        """Shape ``(C, n, n)``; column ``j`` of matrix ``t`` is the ray of ``cones[t, j]``."""
        return np.transpose(self.rays[self.cones], (0, 2, 1))

    @cached_property
    def determinants(self) -> tuple[np.ndarray, np.ndarray]:
        """Exact determinants and adjugates of all maximal cone matrices."""
        return batched_adjugate(self.generator_matrices())

    @cached_property
    def facets(self) -> "FacetIncidence":
        return facet_incidence(self.cones, len(self.labels))

    @cached_property
    def incidence(self) -> np.ndarray:
        """Boolean ``(C, L)``: cone ``t`` contains label ``i``."""
        inc = np.zeros((self.cone_count, len(self.labels)), dtype=bool)
        inc[np.arange(self.cone_count)[:, None], self.cones] = True
        return inc

    def cones_containing(self, idx: Iterable[int]) -> np.ndarray:
        idx = list(idx)
        if not idx:
            return np.arange(self.cone_count)
        return np.flatnonzero(self.incidence[:, idx].all(axis=1))

    def compatibility(self) -> np.ndarray:
        if self.compat is None:
            self.compat = compatibility_matrix(self.graph, [lab.nodes for lab in self.labels if isinstance(lab, Tube)])
        return self.compat


@dataclass
class FacetIncidence:
    """How the codimension-one faces of the maximal cones are shared.

    ``wall_of[t, k]`` is the id of the face obtained by dropping position
    ``k`` of cone ``t``; ``counts[w]`` is how many cones contain face ``w``.
    """

    wall_of: np.ndarray
    counts: np.ndarray

    def pairs(self) -> np.ndarray:
        """Shape ``(W, 2)`` of flat ``t * n + k`` entries, one row per wall.

        Only meaningful when every count is 2.
        """
        order = np.argsort(self.wall_of.ravel(), kind="stable")
        return order.reshape(-1, 2)


def facet_incidence(cones: np.ndarray, L: int) -> FacetIncidence:
    C, n = cones.shape
    if C == 0:
        return FacetIncidence(np.zeros((0, n), np.int64), np.zeros(0, np.int64))
    keep = [np.delete(np.arange(n), k) for k in range(n)]
    bases = cones[:, keep]  # (C, n, n - 1)
    flat = bases.reshape(C * n, n - 1)
    if (n - 1) * max(L, 2).bit_length() < 63:
        weights = np.array([L ** (n - 2 - j) for j in range(n - 1)], dtype=np.int64)
        keys = flat @ weights
        _, inverse, counts = np.unique(keys, return_inverse=True, return_counts=True)
    else:
        _, inverse, counts = np.unique(flat, axis=0, return_inverse=True, return_counts=True)
    return FacetIncidence(inverse.reshape(C, n), counts)


def maximal_nerve_sets(G: Graph) -> list[frozenset[FacetLabel]]:
    """Maximal pairwise-compatible label sets, as frozensets."""
    return build_fan(G, verify=False).maximal_cones


def _nerve_rows(G: Graph, labels: tuple[FacetLabel, ...], compat: np.ndarray) -> np.ndarray:
    cliques = maximal_cliques(to_bitsets(compat))
    return _cliques_to_rows(cliques, len(labels), G.n)


def build_fan(G: Graph, verify: bool = True) -> Fan:
    """Normal fan of the cubeahedron of ``G``; verified unless ``verify=False``."""
    if G.n < 1:
        raise ContractError("the fan needs at least one node")
    tubes = enumerate_tubes(G)
    labels = facet_labels(G, tubes)
    compat = compatibility_matrix(G, tubes)
    fan = Fan(G, labels, _nerve_rows(G, labels, compat), compat)
    if verify:
        report = verify_fan(fan)
        if not report.ok:
            raise FanIntegrityError(str(report))
    return fan


@dataclass
class FanReport:
    ray_count_ok: bool = True
    nonsingular: list[str] = field(default_factory=list)
    simplicity: list[str] = field(default_factory=list)
    completeness: list[str] = field(default_factory=list)
    flag: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.ray_count_ok and not (self.nonsingular or self.simplicity or self.completeness or self.flag)

    def __str__(self) -> str:
        if self.ok:
            return "fan ok"
        lines = []
        if not self.ray_count_ok:
            lines.append("ray count != |tubes| + n")
        for name in ("nonsingular", "simplicity", "completeness", "flag"):
            for msg in getattr(self, name)[:5]:
                lines.append(f"{name}: {msg}")
            extra = len(getattr(self, name)) - 5
            if extra > 0:
                lines.append(f"{name}: ... {extra} more")
        return "\n".join(lines)


def _fmt_cone(fan: Fan, rows: Iterable[int]) -> str:
    return "[" + ", ".join(str(fan.labels[int(i)]) for i in rows) + "]"


def verify_fan(fan: Fan, flag_samples: int = 16, seed: int = 0) -> FanReport:
    """Structural checks on a fan: nonsingularity, simplicity, completeness
    (every codimension-one face lies in exactly two cones) and a randomized
    flagness spot-check."""
    G = fan.graph
    n = G.n
    report = FanReport()
    tube_count = sum(isinstance(lab, Tube) for lab in fan.labels)
    report.ray_count_ok = fan.ray_count == tube_count + n
    if fan.cone_count == 0:
        report.completeness.append("no maximal cones")
        return report

    det, _ = fan.determinants
    for t in np.flatnonzero(np.abs(det) != 1):
        report.nonsingular.append(f"cone {_fmt_cone(fan, fan.cones[t])} has determinant {int(det[t])}")

    ok = fan.compatibility()
    C = fan.cones
    if C.shape[1] != n:
        report.simplicity.append(f"cones have {C.shape[1]} labels, expected {n}")
        return report
    dup = (np.diff(C, axis=1) <= 0).any(axis=1) if n > 1 else np.zeros(len(C), bool)
    pairwise = np.ones(len(C), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            pairwise &= ok[C[:, i], C[:, j]]
    common = np.ones((len(C), len(fan.labels)), dtype=bool)
    for i in range(n):
        common &= ok[C[:, i]]
    extendable = common.any(axis=1)
    for t in np.flatnonzero(dup | ~pairwise | extendable):
        why = "repeats a label" if dup[t] else "is not pairwise compatible" if not pairwise[t] else "is not maximal"
        report.simplicity.append(f"cone {_fmt_cone(fan, C[t])} {why}")

    inc = fan.facets
    bad = np.flatnonzero(inc.counts != 2)
    for w in bad:
        t, k = np.argwhere(inc.wall_of == w)[0]
        face = np.delete(fan.cones[t], k)
        report.completeness.append(f"face {_fmt_cone(fan, face)} lies in {int(inc.counts[w])} maximal cone(s)")

    rng = random.Random(seed)
    L = len(fan.labels)
    inc = fan.incidence
    for _ in range(flag_samples):
        chosen: list[int] = []
        pool = np.ones(L, dtype=bool)
        for _ in range(rng.randint(1, n)):
            options = np.flatnonzero(pool)
            if not options.size:
                break
            v = int(options[rng.randrange(options.size)])
            chosen.append(v)
            pool &= ok[v]
        if not inc[:, chosen].all(axis=1).any():
            report.flag.append(f"compatible set {_fmt_cone(fan, chosen)} lies in no maximal cone")
    return report
