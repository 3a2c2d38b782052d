"""Closed-form TDEC values and bounds evaluated from graph parameters.

Every bound carries a short tag naming the result it comes from, so a
:class:`BoundsReport` can be traced back without reading the code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (
    CycleTooShort,
    EmptyGraph,
    InvalidK,
    ParameterTooSmall,
    PathTooShort,
    SizeCapExceeded,
)
from .graph import Graph, connected_components, is_connected, longest_induced_path

_PATH_SMALL = {3: 2, 4: 2, 5: 3, 6: 4, 7: 4, 8: 5}
_CYCLE_SMALL = {3: 3, 4: 2, 5: 4, 6: 4, 7: 5}


def path_formula(n: int) -> int:
    """Stated TDEC of the path on n vertices."""
    if n < 3:
        raise PathTooShort(f"path_formula needs n >= 3, got {n}")
    if n in _PATH_SMALL:
        return _PATH_SMALL[n]
    r = n % 4
    if r == 1:
        return 2 * ((n - 1) // 4) + 2
    if r == 2:
        return 2 * ((n - 2) // 4) + 3
    k = (n - 3) // 4 if r == 3 else (n - 4) // 4
    return 2 * k + 4


def cycle_formula(n: int) -> int:
    """Stated TDEC of the cycle on n vertices."""
    if n < 3:
        raise CycleTooShort(f"cycle_formula needs n >= 3, got {n}")
    if n in _CYCLE_SMALL:
        return _CYCLE_SMALL[n]
    k, r = divmod(n, 4)
    return {0: 2 * k + 2, 1: 2 * k + 3, 2: 2 * k + 4, 3: 2 * k + 4}[r]


def family_value(family: str, n: int) -> int:
    if family == "star":
        if n < 2:
            raise ParameterTooSmall("star value needs n >= 2")
        return n
    if family == "wheel":
        if n < 4:
            raise ParameterTooSmall("wheel value needs n >= 4")
        return n - 1
    if family == "friendship":
        if n < 2:
            raise ParameterTooSmall("friendship value needs n >= 2")
        return 2 * n
    if family == "path":
        return path_formula(n)
    if family == "cycle":
        return cycle_formula(n)
    raise ParameterTooSmall(f"no closed form for family {family!r}")


def complete_bounds(order: int) -> tuple[int, int]:
    """(lower, upper) for K_order."""
    if order < 3:
        raise ParameterTooSmall(f"complete_bounds needs order >= 3, got {order}")
    t, odd = divmod(order, 2)
    if odd:
        return 2 * t, 4 * t - 1
    return 2 * t - 1, 4 * t - 2


def bipartite_bounds(a: int, b: int) -> tuple[int, int]:
    if min(a, b) < 1 or (a, b) == (1, 1):
        raise ParameterTooSmall(f"bipartite_bounds needs a, b >= 1 and not (1, 1), got ({a}, {b})")
    if a == b:
        return a, 2 * a
    return max(a, b), a + b - 1


def delta_lower_bound(g: Graph) -> int:
    if g.edge_count == 0:
        raise EmptyGraph("delta bound needs at least one edge")
    return g.max_degree()


def induced_path_lower_bound(g: Graph, max_vertices: int = 40) -> int:
    """Max degree plus the path value of the longest induced path minus two vertices.

    Falls back to the max degree when no induced P6 exists. The general form
    is known to overshoot on long paths (P10 gives 7 against a true value of
    6), so :func:`bounds_report` only uses the induced-P6 case.
    """
    if g.edge_count == 0:
        raise EmptyGraph("induced path bound needs at least one edge")
    length = longest_induced_path(g, max_vertices)
    if length >= 6:
        return g.max_degree() + path_formula(length - 2)
    return g.max_degree()


def subdivision_lower_mod4(m: int, k: int) -> int:
    if k < 10:
        raise InvalidK("mod-4 lower form needs k >= 10")
    half = {0: k, 1: k - 1, 2: k - 2, 3: k - 1}[k % 4] // 2
    return m * half + 2


def subdivision_upper_mod4(m: int, delta: int, k: int) -> int:
    if k < 10:
        raise InvalidK("mod-4 upper form needs k >= 10")
    half = {0: k, 1: k + 1, 2: k + 2, 3: k + 1}[k % 4] // 2
    return m * half + delta


@dataclass
class BoundsReport:
    lower: list = field(default_factory=list)
    upper: list = field(default_factory=list)
    reported: list = field(default_factory=list)

    def add_lower(self, value, theorem):
        self.lower.append((int(value), theorem))

    def add_upper(self, value, theorem):
        self.upper.append((int(value), theorem))

    @property
    def best_lower(self) -> int:
        return max((v for v, _ in self.lower), default=0)

    @property
    def best_upper(self):
        return min((v for v, _ in self.upper), default=None)

    def to_dict(self) -> dict:
        out = {
            "lower": [{"value": v, "theorem": t} for v, t in self.lower],
            "upper": [{"value": v, "theorem": t} for v, t in self.upper],
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
        }
        if self.reported:
            out["reported"] = [{"value": v, "theorem": t} for v, t in self.reported]
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def subdivision_bounds(m: int, delta: int, k: int) -> BoundsReport:
    """Bounds on the TDEC of G^(1/k) for connected G with m edges and max degree delta."""
    if k < 2:
        raise InvalidK(f"subdivision bounds need k >= 2, got {k}")
    if m < 1 or delta < 1:
        raise ParameterTooSmall("subdivision bounds need m >= 1 and delta >= 1")
    rep = BoundsReport()
    p = path_formula(k + 1)
    rep.add_lower(p, "subdiv-sandwich-lower")
    if k >= 3:
        rep.add_lower(m, "subdiv-lower-m")
    if k >= 10:
        rep.add_lower(m * (path_formula(k - 1) - 2) + 2, "subdiv-k10-lower")
    rep.add_upper(m * p, "subdiv-sandwich-upper")
    if k >= 10:
        rep.add_upper(m * (p - 2) + delta, "subdiv-k10-upper")
    return rep


def subdivision_bounds_for(sub) -> BoundsReport:
    """Convenience wrapper taking a :class:`~tdec.graph.SubdividedGraph`."""
    src = sub.source
    return subdivision_bounds(src.edge_count, src.max_degree(), sub.k)


def surgery_interval(kind: str, base_value: int, deg: int = 0) -> tuple[int, int]:
    """Interval containing the TDEC after a graph operation.

    ``kind`` is ``edge_removal``, ``vertex_removal`` (``deg`` = degree of the
    removed vertex) or ``contraction`` (``deg`` = min endpoint degree).
    """
    x = base_value
    if kind == "edge_removal":
        return x - 2, x + 2
    if kind == "vertex_removal":
        return x - deg, x + deg
    if kind == "contraction":
        return x - 2, x + deg - 1
    raise ValueError(f"unknown surgery kind {kind!r}")


# --- family recognition -------------------------------------------------


def recognize_family(g: Graph):
    """Return ``(family, params)`` for connected graphs in a named family, else None.

    Checks are structural (degree pattern plus connectivity), so they hold up
    to relabeling. K4 is reported as ``wheel`` and ``complete``; the first
    matching family in the order below wins.
    """
    n, m = g.vertex_count, g.edge_count
    if m == 0 or not is_connected(g):
        return None
    deg = g.degrees()
    if m == n * (n - 1) // 2 and n >= 3:
        return ("complete", (n,))
    if max(deg) <= 2:
        if m == n - 1:
            return ("path", (n,))
        return ("cycle", (n,))
    hubs = [v for v in range(n) if deg[v] == n - 1]
    if m == n - 1 and hubs:
        return ("star", (n - 1,))
    if hubs and n >= 5:
        h = hubs[0]
        rest = [deg[v] for v in range(n) if v != h]
        if m == 2 * (n - 1) and all(d == 3 for d in rest):
            return ("wheel", (n,))
        if n % 2 == 1 and m == 3 * (n - 1) // 2 and all(d == 2 for d in rest):
            return ("friendship", ((n - 1) // 2,))
    bip = _bipartition(g)
    if bip is not None:
        a, b = bip
        if m == a * b:
            return ("complete_bipartite", (min(a, b), max(a, b)))
    return None


def _bipartition(g):
    side = [-1] * g.vertex_count
    side[0] = 0
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if side[y] < 0:
                side[y] = 1 - side[x]
                stack.append(y)
            elif side[y] == side[x]:
                return None
    a = side.count(0)
    return a, g.vertex_count - a


def bounds_report(g: Graph, induced_path_cap: int = 40) -> BoundsReport:
    """All applicable lower/upper bounds for ``g``.

    The upper bound ``m`` (every edge its own class) holds whenever a
    TDE-coloring exists at all.
    """
    rep = BoundsReport()
    m = g.edge_count
    if m == 0:
        rep.add_lower(0, "edgeless")
        rep.add_upper(0, "edgeless")
        return rep
    rep.add_lower(delta_lower_bound(g), "delta")
    rep.add_upper(m, "all-distinct")
    fam = recognize_family(g)
    if fam is not None:
        name, params = fam
        n = params[0]
        exact = None
        if name == "path" and n >= 3:
            exact = path_formula(n)
        elif name == "cycle":
            exact = cycle_formula(n)
        elif name == "star" and n >= 2:
            exact = n
        elif name == "wheel":
            exact = n - 1
        elif name == "friendship" and n >= 2:
            exact = 2 * n
        if exact is not None:
            rep.add_lower(exact, f"{name}-value")
            rep.add_upper(exact, f"{name}-value")
        if name == "complete":
            lo, hi = complete_bounds(n)
            rep.add_lower(lo, "complete-bounds")
            rep.add_upper(hi, "complete-bounds")
        elif name == "complete_bipartite" and params != (1, 1):
            lo, hi = bipartite_bounds(*params)
            rep.add_lower(lo, "bipartite-bounds")
            rep.add_upper(hi, "bipartite-bounds")
    if len(connected_components(g)) == 1 and g.vertex_count <= induced_path_cap:
        try:
            length = longest_induced_path(g, induced_path_cap)
        except SizeCapExceeded:
            length = 0
        if length >= 6:
            rep.add_lower(g.max_degree() + 2, "induced-p6")
            rep.reported.append(
                (g.max_degree() + path_formula(length - 2), "induced-path-general")
            )
    return rep
