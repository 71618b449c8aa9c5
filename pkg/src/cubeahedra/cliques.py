"""Maximal clique enumeration over bitset adjacency (Bron-Kerbosch with pivoting)."""

from __future__ import annotations

from typing import Sequence


def maximal_cliques(adj: Sequence[int], vertices: int | None = None) -> list[int]:
    """All maximal cliques of the graph with neighbour bitsets ``adj``.

    Vertex ``i`` is bit ``i``. Cliques are returned as bitsets in the order
    the search finds them, which is deterministic for fixed input.
    ``vertices`` restricts the search to a subset (default: all).
    """
    out: list[int] = []
    if vertices is None:
        vertices = (1 << len(adj)) - 1
    if not vertices:
        return out

    def expand(R: int, P: int, X: int) -> None:
        if not P:
            if not X:
                out.append(R)
            return
        # pivot: vertex of P | X with most neighbours in P
        best, pivot = -1, 0
        full = P.bit_count()
        m = P | X
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            c = (P & adj[v]).bit_count()
            if c > best:
                best, pivot = c, v
                # nothing beats covering all of P (from X) or all but itself
                if c == full or (c == full - 1 and low & P):
                    break
        cand = P & ~adj[pivot]
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            expand(R | low, P & adj[v], X & adj[v])
            P &= ~low
            X |= low

    expand(0, vertices, 0)
    return out


def is_clique(adj: Sequence[int], S: int) -> bool:
    m = S
    while m:
        low = m & -m
        m ^= low
        if (S & ~low) & ~adj[low.bit_length() - 1]:
            return False
    return True
