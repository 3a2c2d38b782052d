"""Immutable simple graphs and the structural operations tdec needs.

Vertices are ``0..vertex_count-1``. Edges are stored as ``(u, v)`` pairs with
``u < v`` in a fixed order, and an edge id is its index in that order. Every
operation that builds a new graph (deletion, contraction, subdivision)
returns a fresh :class:`Graph`; nothing is mutated in place.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdge,
    EdgeOutOfRange,
    InvalidK,
    LoopEdge,
    SizeCapExceeded,
    VertexOutOfRange,
)

ENUMERATION_MAX_N = 6
INDUCED_PATH_MAX_VERTICES = 40


class Graph:
    """A simple undirected graph with stable edge ids."""

    __slots__ = ("_n", "_edges", "_adj", "_index", "_line_masks")

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise VertexOutOfRange(f"negative vertex count {vertex_count}")
        norm = []
        index = {}
        adj = [set() for _ in range(vertex_count)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{vertex_count - 1}")
            if u > v:
                u, v = v, u
            if (u, v) in index:
                raise DuplicateEdge(f"edge ({u}, {v}) given twice")
            index[(u, v)] = len(norm)
            norm.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
        self._n = vertex_count
        self._edges = tuple(norm)
        self._adj = tuple(frozenset(a) for a in adj)
        self._index = index
        self._line_masks = None

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u] if 0 <= u < self._n else False

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise EdgeOutOfRange(f"no edge ({u}, {v})") from None

    def edge(self, e: int) -> tuple[int, int]:
        self._check_edge(e)
        return self._edges[e]

    def line_masks(self) -> tuple[int, ...]:
        """Bitmask of the edges adjacent to each edge (the line graph rows)."""
        if self._line_masks is None:
            at = [0] * self._n
            for i, (u, v) in enumerate(self._edges):
                at[u] |= 1 << i
                at[v] |= 1 << i
            self._line_masks = tuple(
                (at[u] | at[v]) & ~(1 << i) for i, (u, v) in enumerate(self._edges)
            )
        return self._line_masks

    def line_degree(self, e: int) -> int:
        self._check_edge(e)
        u, v = self._edges[e]
        return len(self._adj[u]) + len(self._adj[v]) - 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Rename vertex ``i`` to ``perm[i]``; edge order is preserved."""
        if sorted(perm) != list(range(self._n)):
            raise VertexOutOfRange("relabeling is not a permutation of the vertices")
        return Graph(self._n, [(perm[u], perm[v]) for u, v in self._edges])

    def _check_vertex(self, v):
        if not 0 <= v < self._n:
            raise VertexOutOfRange(f"vertex {v} outside 0..{self._n - 1}")

    def _check_edge(self, e):
        if not 0 <= e < len(self._edges):
            raise EdgeOutOfRange(f"edge id {e} outside 0..{len(self._edges) - 1}")

    def key(self) -> tuple:
        return (self._n, self._edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)}, edges={list(self._edges)})"


def build_graph(vertex_count: int, edge_pairs: Iterable[tuple[int, int]]) -> Graph:
    return Graph(vertex_count, edge_pairs)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return Graph(offset, edges)


def max_degree(g: Graph) -> int:
    return g.max_degree()


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.vertex_count
    parts = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        stack, part = [s], []
        while stack:
            x = stack.pop()
            part.append(x)
            for y in g.neighbors(x):
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        parts.append(sorted(part))
    return parts


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def _drop_vertex_map(n: int, v: int) -> dict[int, int]:
    return {x: (x if x < v else x - 1) for x in range(n) if x != v}


def delete_vertex(g: Graph, v: int, return_map: bool = False):
    """G - v. Vertices above ``v`` shift down by one.

    With ``return_map=True`` returns ``(graph, old_to_new)``.
    """
    g._check_vertex(v)
    mapping = _drop_vertex_map(g.vertex_count, v)
    h = Graph(
        g.vertex_count - 1,
        [(mapping[a], mapping[b]) for a, b in g.edges if v not in (a, b)],
    )
    return (h, mapping) if return_map else h


def is_cut_vertex(g: Graph, v: int) -> bool:
    g._check_vertex(v)
    before = len(connected_components(g))
    after = len(connected_components(delete_vertex(g, v)))
    # removing an isolated vertex drops one component
    if g.degree(v) == 0:
        return False
    return after > before


def delete_edge(g: Graph, e: int) -> Graph:
    g._check_edge(e)
    return Graph(g.vertex_count, [p for i, p in enumerate(g.edges) if i != e])


def is_bridge(g: Graph, e: int) -> bool:
    g._check_edge(e)
    return len(connected_components(delete_edge(g, e))) > len(connected_components(g))


def contract_edge(g: Graph, e: int, return_map: bool = False):
    """G/e as a simple graph: ``v`` merges into ``u`` for e = (u, v), u < v.

    Loops are dropped and parallel edges merged, keeping the first
    occurrence in edge order. Vertices above ``v`` shift down by one.
    """
    u, v = g.edge(e)
    mapping = _drop_vertex_map(g.vertex_count, v)
    mapping[v] = mapping[u]
    seen = set()
    edges = []
    for a, b in g.edges:
        a, b = mapping[a], mapping[b]
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key in seen:
            continue
        seen.add(key)
        edges.append(key)
    h = Graph(g.vertex_count - 1, edges)
    return (h, mapping) if return_map else h


def line_graph(g: Graph) -> Graph:
    """Vertices are edge ids of ``g``; adjacent iff the edges share an endpoint."""
    pairs = []
    masks = g.line_masks()
    for i in range(g.edge_count):
        rest = masks[i] >> (i + 1)
        j = i + 1
        while rest:
            if rest & 1:
                pairs.append((i, j))
            rest >>= 1
            j += 1
    return Graph(g.edge_count, pairs)


@dataclass(frozen=True)
class SubdividedGraph:
    """``graph`` is G^(1/k); ``source`` is G.

    ``superedges[i]`` lists the k edge ids replacing source edge ``i`` in
    order from its smaller endpoint. ``internal[i][l-1]`` is the vertex at
    distance ``l`` from that endpoint.
    """

    graph: Graph
    source: Graph
    k: int
    superedges: tuple[tuple[int, ...], ...]
    internal: tuple[tuple[int, ...], ...]


def subdivide(g: Graph, k: int) -> SubdividedGraph:
    if k < 1:
        raise InvalidK(f"k must be >= 1, got {k}")
    n = g.vertex_count
    edges = []
    superedges = []
    internal = []
    next_vertex = n
    for u, v in g.edges:
        chain = [u] + list(range(next_vertex, next_vertex + k - 1)) + [v]
        internal.append(tuple(chain[1:-1]))
        next_vertex += k - 1
        ids = []
        for a, b in zip(chain, chain[1:]):
            ids.append(len(edges))
            edges.append((a, b))
        superedges.append(tuple(ids))
    h = Graph(next_vertex, edges)
    return SubdividedGraph(h, g, k, tuple(superedges), tuple(internal))


def longest_induced_path(g: Graph, max_vertices: int = INDUCED_PATH_MAX_VERTICES) -> int:
    """Vertex count of a longest induced path, by exhaustive extension."""
    if g.vertex_count > max_vertices:
        raise SizeCapExceeded(
            f"longest_induced_path limited to {max_vertices} vertices, got {g.vertex_count}"
        )
    if g.vertex_count == 0:
        return 0
    adj = g._adj
    best = 1

    def extend(path_len, last, blocked):
        # blocked: vertices on the path or adjacent to a non-final path vertex
        nonlocal best
        if path_len > best:
            best = path_len
        for w in adj[last]:
            if w not in blocked:
                extend(path_len + 1, w, blocked | adj[last] | {last})

    for s in range(g.vertex_count):
        extend(1, s, frozenset({s}))
    return best


def _connected_mask(n: int, pairs: Sequence[tuple[int, int]], mask: int) -> bool:
    if n <= 1:
        return True
    adj = [0] * n
    bit = 0
    while mask:
        if mask & 1:
            u, v = pairs[bit]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        mask >>= 1
        bit += 1
    reach = 1
    frontier = 1
    while frontier:
        x = (frontier & -frontier).bit_length() - 1
        frontier &= frontier - 1
        new = adj[x] & ~reach
        reach |= new
        frontier |= new
    return reach == (1 << n) - 1


def labeled_connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected simple graph on vertex set 0..n-1, each exactly once.

    Edge subsets are visited in increasing bitmask order over the
    lexicographically ordered vertex pairs.
    """
    if n > ENUMERATION_MAX_N:
        raise SizeCapExceeded(f"labeled enumeration capped at n={ENUMERATION_MAX_N}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        if _connected_mask(n, pairs, mask):
            yield Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def enumerate_labeled_connected_graphs(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    if n_max > ENUMERATION_MAX_N:
        raise SizeCapExceeded(f"labeled enumeration capped at n={ENUMERATION_MAX_N}")
    for n in range(n_min, n_max + 1):
        yield from labeled_connected_graphs(n)
