"""Minimal vertex separators: predicates, the crossing relation, and a
polynomial-delay enumerator.

A separator is represented as a plain ``frozenset`` of vertex ids; its
canonical encoding for ordering and deduplication is the ascending
tuple of members.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    VertexSet,
    _components_masks,
    _neighborhood_mask,
    bits,
    clique_tree,
    is_connected,
    mask_of,
    vertex_set,
)

Separator = VertexSet


def canon(s: Iterable[int]) -> tuple[int, ...]:
    """Canonical encoding of a vertex set: its sorted member tuple."""
    return tuple(sorted(s))


def is_separator(g: Graph, S: Iterable[int], u: int, v: int) -> bool:
    """True iff u and v land in distinct components of g minus S."""
    g.check_vertex(u)
    g.check_vertex(v)
    smask = mask_of(S)
    if smask >> g.n:
        raise GraphError(f"vertex set {sorted(S)} out of range for n={g.n}")
    if u == v:
        raise GraphError("u and v must be distinct")
    if smask >> u & 1 or smask >> v & 1:
        raise GraphError("u and v must not belong to S")
    sub = (1 << g.n) - 1 & ~smask
    for comp in _components_masks(g._adj, sub):
        if comp >> u & 1:
            return not comp >> v & 1
    raise GraphError(f"vertex {u} out of range for n={g.n}")


def is_minimal_separator(g: Graph, S: Iterable[int]) -> bool:
    """Full-component criterion: S is a minimal separator exactly when at
    least two components of g minus S have S as their whole neighborhood."""
    smask = mask_of(S)
    if not smask:
        return False
    if smask >> g.n:
        raise GraphError(f"vertex set {sorted(S)} out of range for n={g.n}")
    sub = (1 << g.n) - 1 & ~smask
    full = 0
    for comp in _components_masks(g._adj, sub):
        if _neighborhood_mask(g._adj, comp) == smask:
            full += 1
            if full == 2:
                return True
    return False


def crosses(g: Graph, S: Iterable[int], T: Iterable[int]) -> bool:
    """True iff S separates two vertices of T.

    Vertices of T that lie in S belong to no component of g minus S and
    cannot witness a crossing. The relation is symmetric on minimal
    separators.
    """
    smask = mask_of(S)
    tmask = mask_of(T)
    if not is_minimal_separator(g, bits(smask)) or not is_minimal_separator(
        g, bits(tmask)
    ):
        raise GraphError("crosses requires minimal separators")
    rest = tmask & ~smask
    if not rest:
        return False
    sub = (1 << g.n) - 1 & ~smask
    hits = 0
    for comp in _components_masks(g._adj, sub):
        if comp & rest:
            hits += 1
            if hits == 2:
                return True
    return False


def enum_min_seps(g: Graph) -> Iterator[Separator]:
    """Stream every minimal separator of a connected graph exactly once.

    Seeds with the component neighborhoods of g minus each closed vertex
    neighborhood, then closes under: for a produced S and each x in S,
    add the component neighborhoods of g minus (S union N(x)). The work
    queue is FIFO with seeds inserted in vertex-id order, so the output
    order is deterministic.
    """
    if g.n < 1:
        raise GraphError("enum_min_seps requires at least one vertex")
    if not is_connected(g):
        raise DisconnectedGraphError("enum_min_seps requires a connected graph")
    adj = g._adj
    full = (1 << g.n) - 1
    seen: set[int] = set()
    queue: deque[int] = deque()

    def push_from(removed: int) -> None:
        for comp in _components_masks(adj, full & ~removed):
            nb = _neighborhood_mask(adj, comp)
            if nb and nb not in seen:
                seen.add(nb)
                queue.append(nb)

    for v in range(g.n):
        push_from(adj[v] | 1 << v)
    while queue:
        smask = queue.popleft()
        yield vertex_set(smask)
        for x in bits(smask):
            push_from(smask | adj[x])


def find_min_sep(c: Graph, u: int, v: int) -> Separator:
    """A minimal (u, v)-separator contained in the neighborhood of u."""
    c.check_vertex(u)
    c.check_vertex(v)
    if u == v:
        raise GraphError("u and v must be distinct")
    if c._adj[u] >> v & 1:
        raise GraphError(f"vertices {u} and {v} are adjacent")
    s0 = c._adj[u]
    sub = (1 << c.n) - 1 & ~s0
    for comp in _components_masks(c._adj, sub):
        if comp >> v & 1:
            return vertex_set(_neighborhood_mask(c._adj, comp))
    raise GraphError("unreachable: v not found in any component")


def extract_min_seps_chordal(h: Graph) -> set[Separator]:
    """MinSep of a connected chordal graph: the distinct nonempty
    intersections of adjacent clique-tree bags."""
    tree = clique_tree(h)
    out: set[Separator] = set()
    for i, j, _w in tree.edges:
        inter = tree.bags[i] & tree.bags[j]
        if inter:
            out.add(inter)
    return out


def clq_min_seps(g: Graph) -> set[Separator]:
    """Minimal separators of g that are cliques of g."""
    if not is_connected(g):
        raise DisconnectedGraphError("clq_min_seps requires a connected graph")
    out: set[Separator] = set()
    for s in enum_min_seps(g):
        smask = mask_of(s)
        if all(not smask & ~g._adj[v] & ~(1 << v) for v in s):
            out.add(s)
    return out
