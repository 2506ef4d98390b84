"""Immutable simple undirected graphs over dense integer vertex ids.

Adjacency is stored as one integer bitmask per vertex, which keeps the
set algebra used by the enumeration machinery cheap even in pure
Python. Public functions accept and return ``frozenset`` vertex sets;
the mask layer is package-internal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

VertexSet = frozenset[int]


class GraphError(ValueError):
    """Invalid graph construction or operation input."""


class NotChordalError(GraphError):
    """An operation requiring a chordal graph got a non-chordal one."""


class DisconnectedGraphError(GraphError):
    """An operation requiring a connected graph got a disconnected one."""


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bits of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def vertex_set(mask: int) -> VertexSet:
    return frozenset(bits(mask))


class Graph:
    """A simple undirected graph with vertex ids 0..n-1.

    Instances are immutable values: every operation that would modify a
    graph returns a new one instead. Self-loops and parallel edges are
    impossible by construction.
    """

    __slots__ = ("n", "edge_count", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        count = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not adj[u] >> v & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                count += 1
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edge_count", count)
        object.__setattr__(self, "_adj", tuple(adj))

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    @classmethod
    def _from_masks(cls, adj: Sequence[int]) -> Graph:
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(adj))
        object.__setattr__(g, "edge_count", sum(m.bit_count() for m in adj) // 2)
        object.__setattr__(g, "_adj", tuple(adj))
        return g

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def neighbors_mask(self, v: int) -> int:
        self.check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> VertexSet:
        return vertex_set(self.neighbors_mask(v))

    def degree(self, v: int) -> int:
        return self.neighbors_mask(v).bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            m = self._adj[u] >> (u + 1) << (u + 1)
            for v in bits(m):
                out.append((u, v))
        return out

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        adj = list(self._adj)
        for u, v in pairs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph._from_masks(adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


@dataclass(frozen=True)
class CliqueTree:
    """Tree over the maximal cliques of a chordal graph.

    ``edges`` holds (i, j, weight) triples where weight is the size of
    the intersection of bags i and j.
    """

    bags: tuple[VertexSet, ...]
    edges: tuple[tuple[int, int, int], ...]


def _check_subset(g: Graph, U: Iterable[int]) -> int:
    m = 0
    for v in U:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
        m |= 1 << v
    return m


def _components_masks(adj: Sequence[int], sub: int) -> list[int]:
    """Connected components of the subgraph induced on ``sub``, as masks,
    ordered by smallest member."""
    comps = []
    remaining = sub
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            nxt &= sub & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def _neighborhood_mask(adj: Sequence[int], umask: int) -> int:
    m = 0
    for v in bits(umask):
        m |= adj[v]
    return m & ~umask


def induced_subgraph(g: Graph, U: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on U, plus the map from new ids back to old ones.

    The returned tuple ``orig`` satisfies ``orig[new_id] == old_id`` and
    is sorted ascending, so relative vertex order is preserved.
    """
    umask = _check_subset(g, U)
    orig = tuple(bits(umask))
    index = {o: i for i, o in enumerate(orig)}
    adj = [0] * len(orig)
    for i, o in enumerate(orig):
        for w in bits(g._adj[o] & umask):
            adj[i] |= 1 << index[w]
    return Graph._from_masks(adj), orig


def neighborhood(g: Graph, U: Iterable[int]) -> VertexSet:
    """Every vertex outside U adjacent to some member of U."""
    umask = _check_subset(g, U)
    return vertex_set(_neighborhood_mask(g._adj, umask))


def connected_components(g: Graph) -> list[VertexSet]:
    full = (1 << g.n) - 1
    return [vertex_set(m) for m in _components_masks(g._adj, full)]


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def saturate(g: Graph, U: Iterable[int]) -> Graph:
    """A copy of g in which U is a clique. The input graph is unchanged."""
    umask = _check_subset(g, U)
    adj = list(g._adj)
    for v in bits(umask):
        adj[v] |= umask & ~(1 << v)
    return Graph._from_masks(adj)


def _mcs(adj: Sequence[int], n: int) -> tuple[list[int], bool, list[int] | None]:
    """Maximum-cardinality search.

    Returns the visit order, whether the reversed order is a perfect
    elimination ordering (i.e. the graph is chordal), and, when it is,
    the maximal cliques as masks (a new clique starts whenever the count
    of already-visited neighbors fails to grow).
    """
    order: list[int] = []
    weights = [0] * n
    pos = [0] * n
    earlier = [0] * n
    visited = 0
    for step in range(n):
        best = -1
        best_w = -1
        for v in range(n):
            if not visited >> v & 1 and weights[v] > best_w:
                best, best_w = v, weights[v]
        v = best
        order.append(v)
        pos[v] = step
        earlier[v] = adj[v] & visited
        visited |= 1 << v
        m = adj[v] & ~visited
        while m:
            b = m & -m
            m ^= b
            weights[b.bit_length() - 1] += 1
    for v in order:
        s = earlier[v]
        if not s:
            continue
        w = -1
        w_pos = -1
        m = s
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            if pos[u] > w_pos:
                w, w_pos = u, pos[u]
        if s & ~adj[w] & ~(1 << w):
            return order, False, None
    cliques: list[int] = []
    current = 0
    prev = -1
    for v in order:
        c = earlier[v].bit_count()
        if c <= prev:
            cliques.append(current)
            current = earlier[v] | 1 << v
        else:
            current |= 1 << v
        prev = c
    if n:
        cliques.append(current)
    return order, True, cliques


def is_chordal(g: Graph) -> bool:
    """Chordality test via maximum cardinality search.

    The reversed MCS visit order is a perfect elimination ordering
    exactly when the graph is chordal, which this verifies directly.
    """
    _, chordal, _ = _mcs(g._adj, g.n)
    return chordal


def _max_clique_masks(h: Graph) -> list[int]:
    _, chordal, cliques = _mcs(h._adj, h.n)
    if not chordal:
        raise NotChordalError("input graph is not chordal")
    assert cliques is not None
    return sorted(cliques, key=lambda m: tuple(bits(m)))


def max_cliques_chordal(h: Graph) -> list[VertexSet]:
    """All maximal cliques of a chordal graph, canonically ordered."""
    return [vertex_set(m) for m in _max_clique_masks(h)]


def clique_tree(h: Graph) -> CliqueTree:
    """A maximum-weight spanning tree of the clique intersection graph.

    Edge weights are intersection sizes; for a connected chordal graph
    the result is a tree decomposition of h (junction tree).
    """
    if not is_connected(h):
        raise DisconnectedGraphError("clique_tree requires a connected graph")
    masks = _max_clique_masks(h)
    k = len(masks)
    candidates = sorted(
        ((i, j) for i in range(k) for j in range(i + 1, k)),
        key=lambda p: (-(masks[p[0]] & masks[p[1]]).bit_count(), p),
    )
    parent = list(range(k))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for i, j in candidates:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            edges.append((i, j, (masks[i] & masks[j]).bit_count()))
            if len(edges) == k - 1:
                break
    return CliqueTree(
        bags=tuple(vertex_set(m) for m in masks),
        edges=tuple(edges),
    )
