"""Deliberately naive brute-force oracles for TDEC.

Neither oracle shares search code with :mod:`tdec.solver`:

* :func:`solve_oracle_enumeration` walks restricted-growth strings over the
  edges (every set partition whose blocks are matchings) and asks
  :func:`tdec.coloring.validate` about each complete one.
* :func:`solve_oracle_line_graph` builds the line graph explicitly and
  searches total dominator *vertex* colorings of it, partitioning the
  vertices block by block into independent sets, with its own domination
  test on plain Python sets.
"""

from __future__ import annotations

from typing import Optional

from .coloring import EdgeColoring, validate
from .errors import SizeCapExceeded
from .graph import Graph, line_graph

ORACLE_MAX_EDGES = 10


def _cap(g: Graph):
    if g.edge_count > ORACLE_MAX_EDGES:
        raise SizeCapExceeded(
            f"oracles are capped at {ORACLE_MAX_EDGES} edges, got {g.edge_count}"
        )


def solve_oracle_enumeration(g: Graph, k_max: Optional[int] = None) -> Optional[int]:
    """Smallest k <= k_max admitting a TDE-coloring, or None."""
    _cap(g)
    m = g.edge_count
    if k_max is None:
        k_max = m
    if m == 0:
        return 0
    ends = g.edges
    best = None
    labels = [0] * m

    def adjacent(a, b):
        return bool(set(ends[a]) & set(ends[b]))

    def walk(i, blocks):
        nonlocal best
        if i == m:
            if best is None or blocks < best:
                if validate(g, EdgeColoring(tuple(labels))).valid:
                    best = blocks
            return
        for c in range(min(blocks + 1, k_max)):
            if any(labels[j] == c and adjacent(i, j) for j in range(i)):
                continue
            labels[i] = c
            walk(i + 1, max(blocks, c + 1))

    walk(0, 0)
    return best


def _independent_blocks(first, pool, adj):
    """Independent sets containing ``first`` drawn from ``pool`` (sorted list)."""
    cands = [v for v in pool if v != first and v not in adj[first]]

    def grow(idx, chosen):
        yield chosen
        for j in range(idx, len(cands)):
            v = cands[j]
            if all(v not in adj[u] for u in chosen):
                yield from grow(j + 1, chosen + [v])

    yield from grow(0, [first])


def total_dominator_vertex_number(h: Graph, k_max: Optional[int] = None) -> Optional[int]:
    """Minimum classes in a total dominator coloring of ``h``; None if none exists."""
    n = h.vertex_count
    if k_max is None:
        k_max = n
    if n == 0:
        return 0
    adj = [set(h.neighbors(v)) for v in range(n)]
    if any(not a for a in adj):
        return None
    best = None

    def dominated(blocks):
        sets = [set(b) for b in blocks]
        return all(any(s <= adj[v] for s in sets) for v in range(n))

    def place(remaining, blocks):
        nonlocal best
        if best is not None and len(blocks) >= best:
            return
        if not remaining:
            if dominated(blocks):
                best = len(blocks)
            return
        if len(blocks) == k_max:
            return
        first = remaining[0]
        for block in _independent_blocks(first, remaining, adj):
            taken = set(block)
            place([v for v in remaining if v not in taken], blocks + [block])

    place(list(range(n)), [])
    return best


def solve_oracle_line_graph(g: Graph, k_max: Optional[int] = None) -> Optional[int]:
    _cap(g)
    return total_dominator_vertex_number(line_graph(g), k_max)
