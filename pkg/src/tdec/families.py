"""Named graph families and a parser for ``family:params`` strings.

Wheel convention: ``wheel(n)`` has n vertices in total, a hub (vertex 0)
joined to every vertex of a cycle on the other n-1 vertices, so
``wheel(4)`` is K4.
"""

from __future__ import annotations

from itertools import combinations

from .errors import ParameterTooSmall, ParseError
from .graph import Graph


def _need(name, value, minimum):
    if value < minimum:
        raise ParameterTooSmall(f"{name} requires n >= {minimum}, got {value}")


def path(n: int) -> Graph:
    _need("path", n, 1)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need("cycle", n, 3)
    return Graph(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    _need("complete", n, 1)
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``0..a-1`` and ``a..a+b-1``."""
    _need("complete_bipartite", min(a, b), 1)
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n: int) -> Graph:
    """K_{1,n}: center 0 and leaves 1..n."""
    _need("star", n, 1)
    return Graph(n + 1, [(0, i) for i in range(1, n + 1)])


def wheel(n: int) -> Graph:
    _need("wheel", n, 4)
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(1, n - 1)]
    return Graph(n, [(0, i) for i in range(1, n)] + rim)


def friendship(n: int) -> Graph:
    """F_n: center 0 joined to n disjoint edges (2i-1, 2i)."""
    _need("friendship", n, 1)
    edges = []
    for i in range(1, n + 1):
        a, b = 2 * i - 1, 2 * i
        edges += [(0, a), (0, b), (a, b)]
    return Graph(2 * n + 1, edges)


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "friendship": (friendship, 1),
}

ALIASES = {"bipartite": "complete_bipartite", "kmn": "complete_bipartite", "fan": "friendship"}


def parse_family(spec: str) -> tuple[str, tuple[int, ...]]:
    """``"complete_bipartite:2,3"`` -> ``("complete_bipartite", (2, 3))``."""
    name, sep, rest = spec.strip().partition(":")
    name = ALIASES.get(name.lower(), name.lower())
    if name not in FAMILIES or not sep:
        raise ParseError(f"unknown family spec {spec!r}; expected one of {sorted(FAMILIES)}")
    try:
        params = tuple(int(p) for p in rest.replace("x", ",").split(",") if p)
    except ValueError:
        raise ParseError(f"non-integer parameter in {spec!r}") from None
    if len(params) != FAMILIES[name][1]:
        raise ParseError(f"{name} takes {FAMILIES[name][1]} parameter(s), got {len(params)}")
    return name, params


def gen_family(spec) -> Graph:
    """Build a family graph from ``"name:params"`` or a ``(name, *params)`` tuple."""
    if isinstance(spec, str):
        name, params = parse_family(spec)
    else:
        name, *params = spec
        name = ALIASES.get(name, name)
        if name not in FAMILIES:
            raise ParseError(f"unknown family {name!r}")
    return FAMILIES[name][0](*params)


def small_connected_graphs() -> dict[str, Graph]:
    """One representative of every connected graph with 1 to 4 edges."""
    return {
        "K2": path(2),
        "P3": path(3),
        "P4": path(4),
        "K1,3": star(3),
        "K3": cycle(3),
        "P5": path(5),
        "chair": Graph(5, [(0, 1), (1, 2), (2, 3), (1, 4)]),
        "K1,4": star(4),
        "C4": cycle(4),
        "paw": Graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
    }
