"""Exact TDEC by iterative deepening on the class count.

For each target ``k`` (from a sound lower bound upward) a complete
backtracking search assigns colors edge by edge. Colors are opened in order,
so a branch may use color ``c`` only when ``0..c-1`` are already in use.

Pruning is restricted to conditions no completion can repair:

* an edge that has no *potential dominator*, i.e. no current class lying
  entirely inside its neighbourhood, and no way to open a new class there;
* more edges without a potential dominator than the remaining new colors
  can serve.

A class that currently dominates an edge can stop doing so when it later
gains a non-adjacent member, so nothing is ever marked "satisfied" early.

Feasibility is monotone in ``k`` (a class with two or more members can be
split without breaking domination), so the first ``k`` with a coloring is
the optimum.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Optional

from .coloring import EdgeColoring, validate
from .errors import InfeasibleGraph
from .graph import Graph

EXACT = "Exact"
INFEASIBLE = "Infeasible"
TIMED_OUT = "TimedOut"

_CHECK_EVERY = 2048


@dataclass
class SolverOptions:
    timeout: Optional[float] = 60.0
    initial_lower: Optional[int] = None
    # only witnesses are trusted for the upper end; kept for callers that
    # record a bracket alongside the result
    initial_upper: Optional[int] = None
    branching_order: str = "line-degree-desc"
    oracle_cross_check: bool = False


@dataclass
class SolveStats:
    nodes_explored: int = 0
    elapsed_time: float = 0.0
    peak_depth: int = 0

    def to_dict(self, include_time=True):
        out = {"nodes_explored": self.nodes_explored, "peak_depth": self.peak_depth}
        if include_time:
            out["elapsed_time"] = round(self.elapsed_time, 6)
        return out


@dataclass
class SolveResult:
    status: str
    value: Optional[int] = None
    witness: Optional[EdgeColoring] = None
    proven_lower: int = 0
    proven_upper: int = 0
    stats: SolveStats = field(default_factory=SolveStats)

    def to_dict(self, include_time=True) -> dict:
        return {
            "status": self.status,
            "value": self.value,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "proven_lower": self.proven_lower,
            "proven_upper": self.proven_upper,
            "stats": self.stats.to_dict(include_time),
        }

    def to_json(self, include_time=True, **kw) -> str:
        return json.dumps(self.to_dict(include_time), **kw)


def tde_feasible(g: Graph) -> bool:
    """True iff every edge has an adjacent edge (no K2 component)."""
    return all(g.line_masks())


def edge_order(g: Graph, branching_order: str = "line-degree-desc") -> list[int]:
    if branching_order == "input-order":
        return list(range(g.edge_count))
    if branching_order == "line-degree-desc":
        return sorted(range(g.edge_count), key=lambda e: (-g.line_degree(e), e))
    raise ValueError(f"unknown branching order {branching_order!r}")


def _popcount(x):
    return bin(x).count("1")


def heuristic_upper(g: Graph) -> tuple[int, EdgeColoring]:
    """Greedy TDE-coloring.

    Edges are taken in line-degree-descending order and get the lowest
    existing color that keeps the coloring proper and leaves every edge with
    a potential dominator; otherwise a fresh color. Opening a fresh color
    never removes a potential dominator, so the result is always valid for a
    feasible graph. All-distinct colors remain as a guard.
    """
    if not tde_feasible(g):
        raise InfeasibleGraph("graph has an edge with no adjacent edge")
    m = g.edge_count
    if m == 0:
        return 0, EdgeColoring(())
    nbr = g.line_masks()
    full = (1 << m) - 1
    far = [full & ~nbr[e] for e in range(m)]
    colors = [-1] * m
    classes: list[int] = []
    unassigned = full

    def everyone_has_dominator():
        for f in range(m):
            if nbr[f] & unassigned:
                continue
            ff = far[f]
            for cm in classes:
                if not cm & ff:
                    break
            else:
                return False
        return True

    for e in edge_order(g):
        bit = 1 << e
        unassigned &= ~bit
        placed = False
        for c, cm in enumerate(classes):
            if cm & nbr[e]:
                continue
            classes[c] = cm | bit
            if everyone_has_dominator():
                colors[e] = c
                placed = True
                break
            classes[c] = cm
        if not placed:
            colors[e] = len(classes)
            classes.append(bit)
    result = EdgeColoring.from_any(colors)
    if not validate(g, result).valid:
        result = EdgeColoring(tuple(range(m)))
    return result.k, result


class _Timeout(Exception):
    pass


class _Search:
    """Complete search for a TDE-coloring with at most ``k`` classes."""

    def __init__(self, g: Graph, order, deadline, stats: SolveStats):
        self.m = g.edge_count
        self.order = order
        self.nbr = g.line_masks()
        full = (1 << self.m) - 1
        self.far = [full & ~x for x in self.nbr]
        self.deadline = deadline
        self.stats = stats

    def run(self, k: int) -> Optional[list[int]]:
        self.k = k
        self.colors = [-1] * self.m
        self.classes: list[int] = []
        self.unassigned = (1 << self.m) - 1
        if self._dfs(0):
            return list(self.colors)
        return None

    def _viable(self) -> bool:
        classes = self.classes
        spare = self.k - len(classes)
        unassigned = self.unassigned
        nbr = self.nbr
        far = self.far
        needy = 0
        for f in range(self.m):
            ff = far[f]
            for cm in classes:
                if not cm & ff:
                    break
            else:
                if spare <= 0 or not nbr[f] & unassigned:
                    return False
                needy |= 1 << f
        if needy:
            # a new class {x, ...} serves only edges adjacent to x
            serve = 0
            rest = unassigned
            while rest:
                low = rest & -rest
                x = low.bit_length() - 1
                rest ^= low
                s = _popcount(nbr[x] & needy)
                if s > serve:
                    serve = s
            if -(-_popcount(needy) // serve) > spare:
                return False
        return True

    def _dfs(self, depth: int) -> bool:
        stats = self.stats
        stats.nodes_explored += 1
        if depth > stats.peak_depth:
            stats.peak_depth = depth
        if self.deadline is not None and stats.nodes_explored % _CHECK_EVERY == 0:
            if time.perf_counter() > self.deadline:
                raise _Timeout
        if depth == self.m:
            return True
        e = self.order[depth]
        bit = 1 << e
        ne = self.nbr[e]
        classes = self.classes
        self.unassigned &= ~bit
        used = len(classes)
        for c in range(used):
            cm = classes[c]
            if cm & ne:
                continue
            classes[c] = cm | bit
            self.colors[e] = c
            if self._viable() and self._dfs(depth + 1):
                return True
            classes[c] = cm
        if used < self.k:
            classes.append(bit)
            self.colors[e] = used
            if self._viable() and self._dfs(depth + 1):
                return True
            classes.pop()
        self.colors[e] = -1
        self.unassigned |= bit
        return False


def solve_exact(g: Graph, opts: Optional[SolverOptions] = None) -> SolveResult:
    opts = opts or SolverOptions()
    start = time.perf_counter()
    stats = SolveStats()

    def done(result):
        stats.elapsed_time = time.perf_counter() - start
        result.stats = stats
        if opts.oracle_cross_check and result.status == EXACT:
            _cross_check(g, result)
        return result

    if not tde_feasible(g):
        return done(SolveResult(INFEASIBLE))
    m = g.edge_count
    if m == 0:
        return done(SolveResult(EXACT, 0, EdgeColoring(()), 0, 0))

    upper, best = heuristic_upper(g)
    # every edge at a vertex of max degree needs its own class
    lower = g.max_degree()
    if opts.initial_lower is not None:
        lower = max(lower, opts.initial_lower)
    lower = min(lower, upper)

    deadline = None if opts.timeout is None else start + opts.timeout
    search = _Search(g, edge_order(g, opts.branching_order), deadline, stats)
    for k in range(lower, upper):
        try:
            found = search.run(k)
        except _Timeout:
            return done(SolveResult(TIMED_OUT, None, best, k, upper))
        if found is not None:
            best = EdgeColoring.from_any(found)
            break
    return done(SolveResult(EXACT, best.k, best, best.k, best.k))


def _cross_check(g, result):
    from .oracles import solve_oracle_enumeration, solve_oracle_line_graph

    a = solve_oracle_enumeration(g)
    b = solve_oracle_line_graph(g)
    if not (a == b == result.value):
        raise AssertionError(
            f"oracle mismatch: exact={result.value} enumeration={a} line_graph={b}"
        )


def solve_value(g: Graph, timeout: Optional[float] = 60.0) -> Optional[int]:
    """Exact value or None (infeasible or timed out)."""
    res = solve_exact(g, SolverOptions(timeout=timeout))
    return res.value if res.status == EXACT else None
