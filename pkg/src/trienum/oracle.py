"""Brute-force reference implementations for desk-scale validation.

Everything here works straight from the definitions and is deliberately
independent of the enumeration code paths; only the Graph type is
shared. Hard size guards raise instead of running forever.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .graph import Graph, VertexSet, bits, mask_of

MAX_VERTICES = 10
MAX_NON_EDGES = 21
MAX_MIS_VERTICES = 20


class OracleSizeError(ValueError):
    """Input exceeds the size guard of a brute-force oracle."""


def _guard_n(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise OracleSizeError(f"oracle limited to {limit} vertices, got {g.n}")


def _component_of(adj: Sequence[int], start: int, sub: int) -> int:
    comp = 1 << start
    frontier = comp
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= sub & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def _cycle_order(adj: Sequence[int], verts: tuple[int, ...]) -> list[int]:
    # walk a graph known to be a single cycle, starting at the smallest
    # vertex, toward its smaller neighbor
    vset = mask_of(verts)
    start = verts[0]
    order = [start]
    prev = -1
    cur = start
    for _ in range(len(verts) - 1):
        nbrs = [w for w in bits(adj[cur] & vset) if w != prev]
        nxt = min(nbrs)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def _find_chordless_cycle(adj: Sequence[int], n: int) -> list[int] | None:
    """A shortest chordless cycle of length >= 4, or None.

    Checks every vertex subset in increasing size: a subset induces a
    chordless cycle exactly when every member has induced degree 2 and
    the induced subgraph is connected.
    """
    for size in range(4, n + 1):
        for verts in itertools.combinations(range(n), size):
            vset = mask_of(verts)
            if any((adj[v] & vset).bit_count() != 2 for v in verts):
                continue
            if _component_of(adj, verts[0], vset) != vset:
                continue
            return _cycle_order(adj, verts)
    return None


def brute_is_chordal(g: Graph) -> bool:
    """True iff g has no chordless cycle of length greater than three."""
    _guard_n(g, MAX_VERTICES)
    return _find_chordless_cycle(g._adj, g.n) is None


def _separates(adj: Sequence[int], u: int, v: int, smask: int, full: int) -> bool:
    sub = full & ~smask
    return not _component_of(adj, u, sub) >> v & 1


def brute_min_seps(g: Graph) -> set[VertexSet]:
    """All minimal separators, by subset search over every vertex pair."""
    _guard_n(g, MAX_VERTICES)
    adj = g._adj
    full = (1 << g.n) - 1
    found: set[VertexSet] = set()
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if adj[u] >> v & 1:
                continue
            rest = [w for w in range(g.n) if w != u and w != v]
            for size in range(len(rest) + 1):
                for sel in itertools.combinations(rest, size):
                    smask = mask_of(sel)
                    if not _separates(adj, u, v, smask, full):
                        continue
                    # supersets of separators still separate, so a strict
                    # subset works iff some single-vertex removal does
                    if any(
                        _separates(adj, u, v, smask & ~(1 << x), full)
                        for x in sel
                    ):
                        continue
                    found.add(frozenset(sel))
    return found


def brute_min_triangulations(g: Graph) -> set[frozenset[tuple[int, int]]]:
    """Fill-edge sets of all minimal triangulations of g.

    Explores chordal supergraphs by branching on the possible chords of
    a chordless cycle, then keeps the fills that are minimal under set
    inclusion. Every minimal triangulation must contain a chord of every
    chordless cycle, so the search is exhaustive.
    """
    non_edges = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g._adj[u] >> v & 1:
                non_edges.append((u, v))
    if len(non_edges) > MAX_NON_EDGES:
        raise OracleSizeError(
            f"oracle limited to {MAX_NON_EDGES} non-edges, got {len(non_edges)}"
        )
    bit_for = {pair: 1 << i for i, pair in enumerate(non_edges)}
    seen: set[int] = set()
    leaves: list[int] = []

    def search(adj: list[int], fill: int) -> None:
        if fill in seen:
            return
        seen.add(fill)
        cycle = _find_chordless_cycle(adj, g.n)
        if cycle is None:
            leaves.append(fill)
            return
        k = len(cycle)
        chords = sorted(
            (min(cycle[i], cycle[j]), max(cycle[i], cycle[j]))
            for i in range(k)
            for j in range(i + 2, k)
            if not (i == 0 and j == k - 1)
        )
        for a, b in chords:
            nxt = list(adj)
            nxt[a] |= 1 << b
            nxt[b] |= 1 << a
            search(nxt, fill | bit_for[(a, b)])

    search(list(g._adj), 0)
    minimal: list[int] = []
    for fill in sorted(set(leaves), key=lambda f: (f.bit_count(), f)):
        if not any(kept & fill == kept for kept in minimal):
            minimal.append(fill)
    return {
        frozenset(pair for pair in non_edges if fill & bit_for[pair])
        for fill in minimal
    }


def brute_max_independent_sets(g: Graph) -> set[VertexSet]:
    """All maximal independent sets, by scanning every vertex subset."""
    _guard_n(g, MAX_MIS_VERTICES)
    adj = g._adj
    out: set[VertexSet] = set()
    for m in range(1 << g.n):
        ok = True
        for v in range(g.n):
            if m >> v & 1:
                if adj[v] & m:
                    ok = False  # not independent
                    break
            elif not adj[v] & m:
                ok = False  # extendable by v, not maximal
                break
        if ok:
            out.add(frozenset(bits(m)))
    return out
