"""From separator families to minimal triangulations.

Contains saturation of pairwise-parallel separator families, a
deterministic min-fill triangulation heuristic, reduction of a
triangulation to a minimal one, the two family-extension procedures
(triangulation-backed and decomposition-backed), and the top-level
enumerator of all minimal triangulations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphError,
    _components_masks,
    _mcs,
    _neighborhood_mask,
    bits,
    induced_subgraph,
    is_chordal,
    is_connected,
    mask_of,
    saturate,
    vertex_set,
)
from .maxind import EnumStats, EventHook, ImplicitGraph, enum_max_independent
from .separators import (
    Separator,
    canon,
    crosses,
    enum_min_seps,
    find_min_sep,
    is_minimal_separator,
)

ParallelFamily = frozenset[Separator]

EXTENDERS = ("blackbox", "separator")


@dataclass(frozen=True)
class Triangulation:
    """A chordal supergraph of ``base`` described by its fill edges.

    ``family`` is the maximal set of pairwise-parallel minimal
    separators whose saturation produced the triangulation.
    """

    base: Graph
    fill_edges: frozenset[tuple[int, int]]
    chordal_graph: Graph
    family: ParallelFamily


def _check_family(
    g: Graph, phi: Iterable[Iterable[int]], verify: bool = True
) -> ParallelFamily:
    fam = frozenset(frozenset(s) for s in phi)
    for s in fam:
        if mask_of(s) >> g.n:
            raise GraphError(f"separator {sorted(s)} out of range for n={g.n}")
        if verify and not is_minimal_separator(g, s):
            raise GraphError(f"{sorted(s)} is not a minimal separator of the host")
    return fam


def saturate_family(g: Graph, phi: Iterable[Iterable[int]]) -> Graph:
    """Saturate every separator of the family in g."""
    fam = _check_family(g, phi, verify=False)
    adj = list(g._adj)
    for s in fam:
        smask = mask_of(s)
        for v in bits(smask):
            adj[v] |= smask & ~(1 << v)
    return Graph._from_masks(adj)


def _minfill_masks(adj: list[int], n: int) -> list[tuple[int, int]]:
    """Min-fill elimination on adjacency masks, in place.

    Mutates ``adj`` into a chordal supergraph and returns the added
    edges, sorted. Ties on fill count break toward the smallest id.
    """
    alive = (1 << n) - 1
    added: list[tuple[int, int]] = []
    for _ in range(n):
        best = -1
        best_fill = -1
        m = alive
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            nb = adj[v] & alive
            fill = 0
            mm = nb
            while mm:
                bb = mm & -mm
                mm ^= bb
                fill += (nb & ~adj[bb.bit_length() - 1] & ~bb).bit_count()
            if best_fill < 0 or fill < best_fill:
                best, best_fill = v, fill
                if fill == 0:
                    break  # scanning ascending, so this is the smallest id
        nb = adj[best] & alive
        mm = nb
        while mm:
            bb = mm & -mm
            u = bb.bit_length() - 1
            mm ^= bb
            missing = nb & ~adj[u] & ~bb
            if missing:
                # each pair is seen from both endpoints, which keeps the
                # masks symmetric; record it from the smaller one
                adj[u] |= missing
                m2 = missing >> (u + 1) << (u + 1)
                while m2:
                    b2 = m2 & -m2
                    m2 ^= b2
                    added.append((u, b2.bit_length() - 1))
        alive ^= 1 << best
    added.sort()
    return added


def triangulate_heuristic(g: Graph) -> Graph:
    """A chordal supergraph of g via min-fill elimination.

    At each step the vertex whose elimination adds the fewest edges is
    removed, ties broken by smallest id; its remaining neighborhood is
    saturated. Chordal inputs come back unchanged.
    """
    adj = list(g._adj)
    _minfill_masks(adj, g.n)
    return Graph._from_masks(adj)


def _removable(adj: list[int], u: int, v: int) -> bool:
    # for chordal h with edge uv: h minus uv stays chordal exactly when
    # the common neighborhood of u and v is a clique
    common = adj[u] & adj[v]
    for x in bits(common):
        if common & ~adj[x] & ~(1 << x):
            return False
    return True


def min_tri_sandwich(g: Graph, g_t: Graph) -> Graph:
    """Shrink a triangulation of g to a minimal one inside it.

    Fill edges are visited in canonical order; any single edge whose
    removal preserves chordality is dropped, and passes repeat until no
    edge can be removed. The result is chordal, sandwiched between g and
    g_t, and minimal.
    """
    if g_t.n != g.n:
        raise GraphError("triangulation must be over the same vertex set")
    for u, v in g.edges():
        if not g_t.has_edge(u, v):
            raise GraphError(f"g_t is missing base edge ({u}, {v})")
    if not is_chordal(g_t):
        raise GraphError("g_t is not chordal")
    return Graph._from_masks(
        _sandwich_masks(list(g_t._adj), sorted(set(g_t.edges()) - set(g.edges())))
    )


def _sandwich_masks(adj: list[int], fill: list[tuple[int, int]]) -> list[int]:
    changed = True
    while changed:
        changed = False
        kept = []
        for u, v in fill:
            if _removable(adj, u, v):
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
                changed = True
            else:
                kept.append((u, v))
        fill = kept
    return adj


def is_minimal_triangulation(g: Graph, h: Graph) -> bool:
    """True iff h is a chordal supergraph of g from which no single fill
    edge can be removed without breaking chordality."""
    if h.n != g.n:
        return False
    if any(not h.has_edge(u, v) for u, v in g.edges()):
        return False
    if not is_chordal(h):
        return False
    adj = list(h._adj)
    base = set(g.edges())
    return all(
        not _removable(adj, u, v) for u, v in h.edges() if (u, v) not in base
    )


def _extract_minseps_masks(adj: list[int], n: int) -> list[int]:
    """Minimal separators of a connected chordal graph, as masks: the
    intersections of adjacent bags in a maximum-weight clique tree."""
    _order, chordal, cliques = _mcs(adj, n)
    if not chordal or cliques is None:
        raise GraphError("internal: expected a chordal graph")
    k = len(cliques)
    if k <= 1:
        return []
    buckets: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for i in range(k):
        ci = cliques[i]
        for j in range(i + 1, k):
            buckets[(ci & cliques[j]).bit_count()].append((i, j))
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    seps: set[int] = set()
    taken = 0
    for w in range(n, -1, -1):
        for i, j in buckets[w]:
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
                inter = cliques[i] & cliques[j]
                if inter:
                    seps.add(inter)
                taken += 1
                if taken == k - 1:
                    return sorted(seps)
    return sorted(seps)


def _extend_blackbox(g: Graph, fam: ParallelFamily) -> ParallelFamily:
    adj = list(g._adj)
    for s in fam:
        smask = mask_of(s)
        for v in bits(smask):
            adj[v] |= smask & ~(1 << v)
    fill = _minfill_masks(adj, g.n)
    _sandwich_masks(adj, fill)
    return frozenset(vertex_set(m) for m in _extract_minseps_masks(adj, g.n))


def extend_family_blackbox(g: Graph, phi: Iterable[Iterable[int]]) -> ParallelFamily:
    """Extend a pairwise-parallel family to a maximal one by triangulating.

    Saturates the family, triangulates the result, reduces to a minimal
    triangulation h, and returns MinSep(h), which contains the input
    family and is maximal pairwise-parallel in g.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("extend_family_blackbox requires a connected graph")
    return _extend_blackbox(g, _check_family(g, phi))


def get_components(c: Graph, S: Iterable[int]) -> list[tuple[Graph, tuple[int, ...]]]:
    """Split c along a clique S.

    For each component K of c minus S, returns the subgraph induced on
    K together with its neighborhood (a subset of S), plus the id map
    back to c. Components are ordered by smallest member.
    """
    smask = mask_of(S)
    if smask >> c.n:
        raise GraphError(f"vertex set {sorted(vertex_set(smask))} out of range for n={c.n}")
    for v in bits(smask):
        if smask & ~c._adj[v] & ~(1 << v):
            raise GraphError(f"{sorted(vertex_set(smask))} is not a clique")
    out = []
    sub = (1 << c.n) - 1 & ~smask
    for comp in _components_masks(c._adj, sub):
        piece = comp | _neighborhood_mask(c._adj, comp)
        out.append(induced_subgraph(c, bits(piece)))
    return out


def _decompose(
    g: Graph, fam: ParallelFamily
) -> list[tuple[Graph, tuple[int, ...]]]:
    queue: deque[tuple[Graph, tuple[int, ...], frozenset[Separator]]] = deque(
        [(g, tuple(range(g.n)), fam)]
    )
    done: list[tuple[Graph, tuple[int, ...]]] = []
    while queue:
        c, orig, seps = queue.popleft()
        if not seps:
            done.append((c, orig))
            continue
        s_orig = min(seps, key=canon)
        index = {o: i for i, o in enumerate(orig)}
        s_local = frozenset(index[o] for o in s_orig)
        c_sat = saturate(c, s_local)
        pieces = get_components(c_sat, s_local)
        if len(pieces) <= 1:
            raise GraphError(
                f"{sorted(s_orig)} does not separate its piece; family is not valid"
            )
        # separators nested inside the split separator stop separating
        # anything: every pair they split now lies in distinct pieces
        rest = {s for s in seps if not s <= s_orig}
        placed: set[Separator] = set()
        for piece, sub_orig in pieces:
            piece_orig = tuple(orig[i] for i in sub_orig)
            members = set(piece_orig)
            routed = frozenset(s for s in rest if s <= members)
            placed |= routed
            queue.append((piece, piece_orig, routed))
        if placed != rest:
            missing = sorted(sorted(s) for s in rest - placed)
            raise GraphError(f"separators {missing} fit in no piece; family is not valid")
    done.sort(key=lambda item: item[1])
    return done


def decompose(
    g: Graph, phi: Iterable[Iterable[int]]
) -> list[tuple[Graph, tuple[int, ...]]]:
    """Split a connected graph along a pairwise-parallel separator family.

    Repeatedly selects the canonically smallest separator contained in a
    pending piece, saturates it, splits via ``get_components``, and
    routes each remaining separator to the piece that contains it.
    Output pieces carry id maps back to g and contain no member of the
    family as a separator.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("decompose requires a connected graph")
    return _decompose(g, _check_family(g, phi))


def _is_clique(c: Graph) -> bool:
    full = (1 << c.n) - 1
    return all(c._adj[v] == full & ~(1 << v) for v in range(c.n))


def _extend_separator(g: Graph, fam: ParallelFamily) -> ParallelFamily:
    result: set[Separator] = set(fam)
    queue: deque[tuple[Graph, tuple[int, ...], frozenset[Separator]]] = deque(
        [(g, tuple(range(g.n)), fam)]
    )
    while queue:
        c, orig, seps = queue.popleft()
        if seps:
            # split along a family member first, routing the others
            s_orig = min(seps, key=canon)
            index = {o: i for i, o in enumerate(orig)}
            s_local = frozenset(index[o] for o in s_orig)
            rest = {s for s in seps if not s <= s_orig}
        else:
            if _is_clique(c):
                continue
            pair = None
            for u in range(c.n):
                above = (~c._adj[u] & ~(1 << u) & ((1 << c.n) - 1)) >> (u + 1)
                if above:
                    pair = (u, u + 1 + (above & -above).bit_length() - 1)
                    break
            assert pair is not None
            s_local = find_min_sep(c, *pair)
            rest = set()
        c_sat = saturate(c, s_local)
        smask = mask_of(s_local)
        pieces = get_components(c_sat, s_local)
        if seps and len(pieces) <= 1:
            raise GraphError(
                f"{sorted(orig[i] for i in s_local)} does not separate its piece; "
                "family is not valid"
            )
        placed: set[Separator] = set()
        for piece, sub_orig in pieces:
            piece_orig = tuple(orig[i] for i in sub_orig)
            # the piece keeps its boundary into the separator as a
            # clique; that boundary is itself a contained separator
            boundary = mask_of(sub_orig) & smask
            result.add(frozenset(orig[i] for i in bits(boundary)))
            members = set(piece_orig)
            routed = frozenset(s for s in rest if s <= members)
            placed |= routed
            queue.append((piece, piece_orig, routed))
        if placed != set(rest):
            missing = sorted(sorted(s) for s in set(rest) - placed)
            raise GraphError(f"separators {missing} fit in no piece; family is not valid")
    return frozenset(result)


def extend_family_separator(g: Graph, phi: Iterable[Iterable[int]]) -> ParallelFamily:
    """Extend a pairwise-parallel family to a maximal one by decomposition.

    Decomposes g along the input family, then repeatedly picks the
    lexicographically smallest non-adjacent pair in a non-clique piece,
    separates it with a minimal separator close to the first vertex,
    saturates, and splits; the neighborhood of each resulting component
    joins the family. Ends when all pieces are cliques.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("extend_family_separator requires a connected graph")
    return _extend_separator(g, _check_family(g, phi))


_EXTENDER_IMPL: dict[str, Callable[[Graph, ParallelFamily], ParallelFamily]] = {
    "blackbox": _extend_blackbox,
    "separator": _extend_separator,
}


def separator_graph_instance(g: Graph, extender: str = "blackbox") -> ImplicitGraph:
    """The crossing graph of g's minimal separators as an implicit graph.

    Nodes are the minimal separators, adjacency is the crossing
    relation, and the extender completes a pairwise-parallel family to
    a maximal one. Any independent set has fewer than n members.
    """
    if extender not in _EXTENDER_IMPL:
        raise ValueError(f"unknown extender {extender!r}; expected one of {EXTENDERS}")
    if not is_connected(g):
        raise DisconnectedGraphError("separator_graph_instance requires a connected graph")
    extend = _EXTENDER_IMPL[extender]
    return ImplicitGraph(
        node_stream=lambda: enum_min_seps(g),
        adjacent=lambda s, t: crosses(g, s, t),
        extend_to_max_ind=lambda fam: extend(g, frozenset(fam)),
        node_key=canon,
        size_bound=max(g.n - 1, 0),
    )


def enum_min_triangulations(
    g: Graph,
    extender: str = "blackbox",
    stats: EnumStats | None = None,
    hook: EventHook | None = None,
) -> Iterator[Triangulation]:
    """Stream every minimal triangulation of a connected graph once.

    Each maximal set of pairwise-parallel minimal separators produced by
    the independent-set engine is saturated into its triangulation. A
    chordal input yields exactly itself, with an empty fill.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("enum_min_triangulations requires a connected graph")
    inst = separator_graph_instance(g, extender)
    base_edges = set(g.edges())
    for family in enum_max_independent(inst, stats=stats, hook=hook):
        h = saturate_family(g, family)
        fill = frozenset(e for e in h.edges() if e not in base_edges)
        yield Triangulation(
            base=g, fill_edges=fill, chordal_graph=h, family=frozenset(family)
        )
