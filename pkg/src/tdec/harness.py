"""Theorem-verification suites.

Each suite yields :class:`TheoremCheckRecord` objects in a stable order.
A record stores its observed integers and the relation they must satisfy
as a comparison chain over those names (``"lo <= value <= hi"``), so
``record.recheck()`` recomputes the verdict from the record alone.
"""

from __future__ import annotations

import csv
import io
import json
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from . import bounds as B
from .errors import SizeCapExceeded, UnknownSuite
from .families import (
    complete,
    complete_bipartite,
    cycle,
    friendship,
    path,
    small_connected_graphs,
    star,
    wheel,
)
from .graph import (
    ENUMERATION_MAX_N,
    Graph,
    contract_edge,
    delete_edge,
    delete_vertex,
    enumerate_labeled_connected_graphs,
    is_bridge,
    is_cut_vertex,
    longest_induced_path,
    subdivide,
)
from .oracles import ORACLE_MAX_EDGES, solve_oracle_enumeration, solve_oracle_line_graph
from .solver import EXACT, INFEASIBLE, SolverOptions, solve_exact

PASS, FAIL, SKIPPED, TIMEOUT = "pass", "fail", "skipped", "timeout"

_OPS = {
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<=": lambda a, b: a <= b,
    "<": lambda a, b: a < b,
    ">=": lambda a, b: a >= b,
    ">": lambda a, b: a > b,
}


def check_relation(relation: str, observed: dict) -> bool:
    """Evaluate a chain like ``"a <= b <= 7"`` against ``observed``."""
    tokens = relation.split()
    if len(tokens) < 3 or len(tokens) % 2 == 0:
        raise ValueError(f"malformed relation {relation!r}")

    def operand(tok):
        if re.fullmatch(r"-?\d+", tok):
            return int(tok)
        return observed[tok]

    left = operand(tokens[0])
    for op, tok in zip(tokens[1::2], tokens[2::2]):
        right = operand(tok)
        if left is None or right is None or not _OPS[op](left, right):
            return False
        left = right
    return True


@dataclass
class TheoremCheckRecord:
    theorem_id: str
    instance: str
    expected: str
    observed: dict
    status: str
    runtime: float = 0.0
    note: str = ""

    @property
    def passed(self) -> Optional[bool]:
        if self.status in (SKIPPED, TIMEOUT):
            return None
        return self.status == PASS

    def recheck(self) -> Optional[bool]:
        if self.status in (SKIPPED, TIMEOUT):
            return None
        return check_relation(self.expected, self.observed)

    def to_dict(self, include_time=True) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "instance": self.instance,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
            "pass": self.passed,
            "note": self.note,
        }
        if include_time:
            out["runtime"] = round(self.runtime, 6)
        return out


@dataclass
class RunConfig:
    """Scale knobs for a suite run. ``None`` means the suite's own default."""

    timeout: Optional[float] = None
    max_vertices: int = 5
    max_edges: Optional[int] = None
    max_n: Optional[int] = None
    fmt: str = "json"
    threads: int = 1
    include_meta: bool = True

    def __post_init__(self):
        if self.max_vertices > ENUMERATION_MAX_N:
            raise SizeCapExceeded(f"max_vertices is capped at {ENUMERATION_MAX_N}")
        if self.fmt not in ("json", "csv", "table"):
            raise ValueError(f"unknown output format {self.fmt!r}")

    @classmethod
    def from_env(cls, **kw) -> "RunConfig":
        threads = int(os.environ.get("TDEC_THREADS", "1") or 1)
        return cls(threads=max(1, threads), **kw)


DEFAULT_TIMEOUT = 60.0
DEFAULT_MAX_EDGES = 16


def _solve_job(args):
    g, timeout = args
    res = solve_exact(g, SolverOptions(timeout=timeout))
    return res.status, res.value


class Context:
    """Caches exact values for one suite run and fans solves out to workers."""

    def __init__(self, cfg: RunConfig, timeout: float, max_edges: int):
        self.cfg = cfg
        self.timeout = timeout
        self.max_edges = max_edges
        self._cache: dict = {}

    def prefetch(self, graphs):
        todo = []
        seen = set()
        for g in graphs:
            key = g.key()
            if key in self._cache or key in seen or g.edge_count > self.max_edges:
                continue
            seen.add(key)
            todo.append(g)
        if not todo:
            return
        jobs = [(g, self.timeout) for g in todo]
        if self.cfg.threads > 1 and len(todo) > 1:
            with ProcessPoolExecutor(max_workers=self.cfg.threads) as pool:
                results = list(pool.map(_solve_job, jobs, chunksize=8))
        else:
            results = [_solve_job(j) for j in jobs]
        for g, r in zip(todo, results):
            self._cache[g.key()] = r

    def solve(self, g: Graph):
        """``(status, value)``; status is Exact, Infeasible, TimedOut or Capped."""
        if g.edge_count > self.max_edges:
            return "Capped", None
        key = g.key()
        if key not in self._cache:
            self._cache[key] = _solve_job((g, self.timeout))
        return self._cache[key]


def _record(theorem_id, instance, expected, observed, start, note=""):
    status = PASS if check_relation(expected, observed) else FAIL
    return TheoremCheckRecord(
        theorem_id, instance, expected, observed, status, time.perf_counter() - start, note
    )


def _unavailable(theorem_id, instance, expected, observed, solved, start):
    """Record for an instance whose exact value could not be used."""
    kind = {
        "TimedOut": (TIMEOUT, "solver timed out"),
        "Capped": (SKIPPED, "exceeds exact-solve edge cap"),
        INFEASIBLE: (SKIPPED, "no TDE-coloring exists (K2 component)"),
    }
    status, note = kind.get(solved, (SKIPPED, solved))
    return TheoremCheckRecord(
        theorem_id, instance, expected, observed, status, time.perf_counter() - start, note
    )


def _exact_record(ctx, theorem_id, instance, expected, g, observed_extra, value_name="value"):
    start = time.perf_counter()
    status, value = ctx.solve(g)
    observed = dict(observed_extra)
    observed[value_name] = value
    if status != EXACT:
        return _unavailable(theorem_id, instance, expected, observed, status, start)
    return _record(theorem_id, instance, expected, observed, start)


# --- suites ---------------------------------------------------------------


def suite_path_formula(ctx, cfg):
    top = cfg.max_n or 14
    graphs = [path(n) for n in range(3, top + 1)]
    ctx.prefetch(graphs)
    for n, g in zip(range(3, top + 1), graphs):
        yield _exact_record(
            ctx, "path-formula", f"P_{n}", "value == formula", g, {"formula": B.path_formula(n)}
        )


def suite_cycle_formula(ctx, cfg):
    top = cfg.max_n or 13
    graphs = [cycle(n) for n in range(3, top + 1)]
    ctx.prefetch(graphs)
    for n, g in zip(range(3, top + 1), graphs):
        yield _exact_record(
            ctx, "cycle-formula", f"C_{n}", "value == formula", g, {"formula": B.cycle_formula(n)}
        )


def suite_path_cycle_corollary(ctx, cfg):
    for n in range(6, (cfg.max_n or 200) + 1):
        start = time.perf_counter()
        yield _record(
            "path-cycle-corollary",
            f"n={n}",
            "path == cycle",
            {"path": B.path_formula(n), "cycle": B.cycle_formula(n - 1)},
            start,
        )


def _family_suite(theorem_id, builder, claim, lo, default_hi):
    def suite(ctx, cfg):
        ns = list(range(lo, (cfg.max_n or default_hi) + 1))
        graphs = [builder(n) for n in ns]
        ctx.prefetch(graphs)
        for n, g in zip(ns, graphs):
            yield _exact_record(
                ctx, theorem_id, f"{theorem_id}:{n}", "value == claimed", g, {"claimed": claim(n)}
            )

    return suite


suite_star = _family_suite("star", star, lambda n: B.family_value("star", n), 2, 7)
suite_wheel = _family_suite("wheel", wheel, lambda n: B.family_value("wheel", n), 4, 7)
suite_friendship = _family_suite(
    "friendship", friendship, lambda n: B.family_value("friendship", n), 2, 3
)


def suite_complete_bounds(ctx, cfg):
    ns = list(range(3, (cfg.max_n or 5) + 1))
    ctx.prefetch([complete(n) for n in ns])
    for n in ns:
        lo, hi = B.complete_bounds(n)
        yield _exact_record(
            ctx, "complete-bounds", f"K_{n}", "lower <= value <= upper", complete(n),
            {"lower": lo, "upper": hi},
        )


def suite_bipartite_bounds(ctx, cfg):
    top = cfg.max_n or 3
    pairs = [(a, b) for b in range(1, top + 1) for a in range(1, b + 1) if (a, b) != (1, 1)]
    ctx.prefetch([complete_bipartite(a, b) for a, b in pairs])
    for a, b in pairs:
        lo, hi = B.bipartite_bounds(a, b)
        yield _exact_record(
            ctx, "bipartite-bounds", f"K_{a},{b}", "lower <= value <= upper",
            complete_bipartite(a, b), {"lower": lo, "upper": hi},
        )
    # sharpness: K_{3,2} and K_{2,2} meet the lower bound, K_{1,6} the upper
    for (a, b), side in (((3, 2), "lower"), ((2, 2), "lower"), ((1, 6), "upper")):
        lo, hi = B.bipartite_bounds(a, b)
        yield _exact_record(
            ctx, "bipartite-sharpness", f"K_{a},{b}", f"value == {side}",
            complete_bipartite(a, b), {"lower": lo, "upper": hi},
        )


def _corpus(cfg):
    return list(enumerate_labeled_connected_graphs(cfg.max_vertices))


def _describe(g: Graph) -> str:
    return f"n={g.vertex_count} E={[list(e) for e in g.edges]}"


def suite_delta_bound(ctx, cfg):
    graphs = [g for g in _corpus(cfg) if g.edge_count]
    graphs += [star(n) for n in range(2, 8)]
    ctx.prefetch(graphs)
    for g in graphs:
        yield _exact_record(
            ctx, "delta-bound", _describe(g), "delta <= value", g, {"delta": g.max_degree()}
        )


def induced_p6_instances(max_n: int = 10) -> list[Graph]:
    """Connected graphs known to contain an induced P6."""
    graphs = [path(n) for n in range(6, max_n + 1)]
    graphs += [cycle(n) for n in range(7, max_n + 1)]
    p6 = path(6)
    for mask in range(1, 64):
        attach = [(i, 6) for i in range(6) if mask >> i & 1]
        graphs.append(Graph(7, list(p6.edges) + attach))
    return graphs


def suite_induced_p6_bound(ctx, cfg):
    graphs = induced_p6_instances(cfg.max_n or 10)
    ctx.prefetch(graphs)
    for g in graphs:
        length = longest_induced_path(g)
        observed = {
            "delta_plus_2": g.max_degree() + 2,
            "longest_induced_path": length,
            "general_form": g.max_degree() + B.path_formula(length - 2),
        }
        yield _exact_record(
            ctx, "induced-p6-bound", _describe(g), "delta_plus_2 <= value", g, observed
        )


def suite_edge_removal(ctx, cfg):
    corpus = _corpus(cfg)
    ctx.prefetch(corpus + [delete_edge(g, e) for g in corpus for e in range(g.edge_count)])
    for g in corpus:
        for e in range(g.edge_count):
            start = time.perf_counter()
            inst = f"{_describe(g)} e={e}"
            rel = "lo <= after <= hi"
            if is_bridge(g, e):
                yield TheoremCheckRecord("edge-removal", inst, rel, {}, SKIPPED, 0.0, "bridge")
                continue
            s1, x = ctx.solve(g)
            s2, y = ctx.solve(delete_edge(g, e))
            observed = {"before": x, "after": y}
            if s1 != EXACT or s2 != EXACT:
                yield _unavailable("edge-removal", inst, rel, observed, s1 if s1 != EXACT else s2, start)
                continue
            lo, hi = B.surgery_interval("edge_removal", x)
            observed.update(lo=lo, hi=hi)
            yield _record("edge-removal", inst, rel, observed, start)


def suite_vertex_removal(ctx, cfg):
    corpus = _corpus(cfg)
    ctx.prefetch(corpus + [delete_vertex(g, v) for g in corpus for v in range(g.vertex_count)])
    for g in corpus:
        for v in range(g.vertex_count):
            start = time.perf_counter()
            inst = f"{_describe(g)} v={v}"
            rel = "lo <= after <= hi"
            if is_cut_vertex(g, v):
                yield TheoremCheckRecord("vertex-removal", inst, rel, {}, SKIPPED, 0.0, "cut vertex")
                continue
            s1, x = ctx.solve(g)
            s2, y = ctx.solve(delete_vertex(g, v))
            observed = {"before": x, "after": y, "deg": g.degree(v)}
            if s1 != EXACT or s2 != EXACT:
                yield _unavailable("vertex-removal", inst, rel, observed, s1 if s1 != EXACT else s2, start)
                continue
            lo, hi = B.surgery_interval("vertex_removal", x, g.degree(v))
            observed.update(lo=lo, hi=hi)
            yield _record("vertex-removal", inst, rel, observed, start)


def suite_contraction(ctx, cfg):
    corpus = _corpus(cfg)
    ctx.prefetch(corpus + [contract_edge(g, e) for g in corpus for e in range(g.edge_count)])
    for g in corpus:
        for e in range(g.edge_count):
            start = time.perf_counter()
            u, v = g.edge(e)
            inst = f"{_describe(g)} e={e}"
            rel = "lo <= after <= hi"
            s1, x = ctx.solve(g)
            s2, y = ctx.solve(contract_edge(g, e))
            mindeg = min(g.degree(u), g.degree(v))
            observed = {"before": x, "after": y, "mindeg": mindeg}
            if s1 != EXACT or s2 != EXACT:
                yield _unavailable("contraction", inst, rel, observed, s1 if s1 != EXACT else s2, start)
                continue
            lo, hi = B.surgery_interval("contraction", x, mindeg)
            observed.update(lo=lo, hi=hi)
            yield _record("contraction", inst, rel, observed, start)
    # the lower end is attained by C5 -> C4
    c5 = cycle(5)
    start = time.perf_counter()
    _, x = ctx.solve(c5)
    _, y = ctx.solve(contract_edge(c5, 0))
    yield _record(
        "contraction-sharpness", "C_5 / e0", "after == lo",
        {"before": x, "after": y, "lo": None if x is None else x - 2}, start,
    )


def suite_gap_growth(ctx, cfg):
    top = cfg.max_n or 50
    prev = None
    best = 0
    for n in range(4, top + 1):
        start = time.perf_counter()
        gap = B.family_value("wheel", n) - B.cycle_formula(n - 1)
        best = max(best, gap)
        if n >= 8:
            yield _record(
                "gap-growth", f"W_{n} - hub", "previous_gap <= gap",
                {"gap": gap, "previous_gap": prev}, start,
            )
        prev = gap
    start = time.perf_counter()
    yield _record("gap-growth", f"max over n<={top}", "max_gap > 10", {"max_gap": best}, start)


def _subdivided(names, ks):
    graphs = small_connected_graphs()
    out = []
    for name in names or graphs:
        for k in ks:
            out.append((name, graphs[name], k, subdivide(graphs[name], k).graph))
    return out


def suite_subdiv_lower_m(ctx, cfg):
    items = _subdivided(None, range(3, (cfg.max_n or 4) + 1))
    ctx.prefetch([h for *_, h in items])
    for name, g, k, h in items:
        yield _exact_record(
            ctx, "subdiv-lower-m", f"{name}^(1/{k})", "m <= value", h, {"m": g.edge_count}
        )


def subdivision_path_brackets(n_range=range(2, 11), k_range=range(2, 51), tags=None):
    """Formula-level check: every bound for P_n^(1/k) brackets path_formula(k(n-1)+1)."""
    for n in n_range:
        m, delta = n - 1, (1 if n == 2 else 2)
        for k in k_range:
            rep = B.subdivision_bounds(m, delta, k)
            target = B.path_formula(k * m + 1)
            for value, tag in rep.lower:
                if tags is None or tag in tags:
                    yield (n, k, tag, "bound <= target", {"bound": value, "target": target})
            for value, tag in rep.upper:
                if tags is None or tag in tags:
                    yield (n, k, tag, "target <= bound", {"bound": value, "target": target})


def suite_subdiv_sandwich(ctx, cfg):
    items = _subdivided(None, range(2, (cfg.max_n or 3) + 1))
    ctx.prefetch([h for *_, h in items])
    for name, g, k, h in items:
        p = B.path_formula(k + 1)
        yield _exact_record(
            ctx, "subdiv-sandwich", f"{name}^(1/{k})", "lower <= value <= upper", h,
            {"lower": p, "upper": g.edge_count * p},
        )
    tags = {"subdiv-sandwich-lower", "subdiv-sandwich-upper", "subdiv-lower-m"}
    for n, k, tag, rel, observed in subdivision_path_brackets(tags=tags):
        start = time.perf_counter()
        yield _record(tag, f"formula P_{n}^(1/{k})", rel, observed, start)


def suite_subdiv_star_13(ctx, cfg):
    ns = list(range(3, (cfg.max_n or 4) + 1))
    graphs = [subdivide(star(n), 3).graph for n in ns]
    ctx.prefetch(graphs)
    for n, h in zip(ns, graphs):
        yield _exact_record(
            ctx, "subdiv-star-13", f"K_1,{n}^(1/3)", "value == claimed", h, {"claimed": 2 * n}
        )


def suite_subdiv_k10_bounds(ctx, cfg):
    for k in range(10, 101):
        for m, delta in ((1, 1), (3, 4)):
            start = time.perf_counter()
            rep = B.subdivision_bounds(m, delta, k)
            general_lower = dict((t, v) for v, t in rep.lower)["subdiv-k10-lower"]
            general_upper = dict((t, v) for v, t in rep.upper)["subdiv-k10-upper"]
            yield _record(
                "subdiv-k10-mod4", f"m={m} delta={delta} k={k}",
                "general_lower == mod4_lower",
                {"general_lower": general_lower, "mod4_lower": B.subdivision_lower_mod4(m, k)},
                start,
            )
            yield _record(
                "subdiv-k10-mod4", f"m={m} delta={delta} k={k}",
                "general_upper == mod4_upper",
                {"general_upper": general_upper, "mod4_upper": B.subdivision_upper_mod4(m, delta, k)},
                start,
            )
    tags = {"subdiv-k10-lower", "subdiv-k10-upper"}
    for n, k, tag, rel, observed in subdivision_path_brackets(k_range=range(10, 51), tags=tags):
        start = time.perf_counter()
        yield _record(tag, f"formula P_{n}^(1/{k})", rel, observed, start)
    # exact values on small instances: P2^(1/k) = P_{k+1}, P3^(1/10) = P_21
    items = [(path(2), k) for k in range(10, (cfg.max_n or 13) + 1)] + [(path(3), 10)]
    subs = [(g, k, subdivide(g, k).graph) for g, k in items]
    ctx.prefetch([h for *_, h in subs])
    for g, k, h in subs:
        rep = B.subdivision_bounds(g.edge_count, g.max_degree(), k)
        yield _exact_record(
            ctx, "subdiv-k10-bounds", f"P_{g.vertex_count}^(1/{k})", "lower <= value <= upper", h,
            {"lower": rep.best_lower, "upper": rep.best_upper},
        )


def suite_subdiv_monotone(ctx, cfg):
    top = cfg.max_n or 4
    items = _subdivided(None, range(2, top + 2))
    ctx.prefetch([h for *_, h in items])
    graphs = small_connected_graphs()
    for name, g in graphs.items():
        for k in range(2, top + 1):
            start = time.perf_counter()
            a = subdivide(g, k).graph
            b = subdivide(g, k + 1).graph
            sa, va = ctx.solve(a)
            sb, vb = ctx.solve(b)
            observed = {"value_k": va, "value_k1": vb}
            inst = f"{name} k={k}->{k + 1}"
            rel = "value_k <= value_k1"
            if sa != EXACT or sb != EXACT:
                yield _unavailable("subdiv-monotone", inst, rel, observed, sa if sa != EXACT else sb, start)
            else:
                yield _record("subdiv-monotone", inst, rel, observed, start)


def oracle_family_graphs(max_edges: int = 9) -> list[tuple[str, Graph]]:
    out = []
    for n in range(2, max_edges + 2):
        out.append((f"P_{n}", path(n)))
    for n in range(3, max_edges + 1):
        out.append((f"C_{n}", cycle(n)))
    for n in range(2, max_edges + 1):
        out.append((f"K_1,{n}", star(n)))
    for n in range(4, max_edges // 2 + 2):
        out.append((f"W_{n}", wheel(n)))
    for n in range(1, max_edges // 3 + 1):
        out.append((f"F_{n}", friendship(n)))
    for n in range(3, 8):
        if n * (n - 1) // 2 <= max_edges:
            out.append((f"K_{n}", complete(n)))
    for a in range(2, max_edges + 1):
        for b in range(a, max_edges + 1):
            if a * b <= max_edges:
                out.append((f"K_{a},{b}", complete_bipartite(a, b)))
    return out


def suite_oracle_agreement(ctx, cfg):
    items = [(_describe(g), g) for g in _corpus(cfg)]
    items += oracle_family_graphs(min(9, ORACLE_MAX_EDGES))
    ctx.prefetch([g for _, g in items])
    for name, g in items:
        start = time.perf_counter()
        status, exact = ctx.solve(g)
        enum = solve_oracle_enumeration(g)
        line = solve_oracle_line_graph(g)
        observed = {"exact": exact, "enumeration": enum, "line_graph": line}
        if status == INFEASIBLE:
            rel = "enumeration == line_graph"
            rec = TheoremCheckRecord(
                "oracle-agreement", name, rel, observed,
                PASS if enum is None and line is None else FAIL,
                time.perf_counter() - start, "infeasible: both oracles must report none",
            )
            yield rec
        elif status != EXACT:
            yield _unavailable("oracle-agreement", name, "exact == enumeration == line_graph", observed, status, start)
        else:
            yield _record("oracle-agreement", name, "exact == enumeration == line_graph", observed, start)


@dataclass
class Suite:
    run: Callable[[Context, RunConfig], Iterator[TheoremCheckRecord]]
    timeout: float = DEFAULT_TIMEOUT
    max_edges: int = DEFAULT_MAX_EDGES
    exact: bool = True


SUITES: dict[str, Suite] = {
    "path-formula": Suite(suite_path_formula),
    "cycle-formula": Suite(suite_cycle_formula),
    "path-cycle-corollary": Suite(suite_path_cycle_corollary, exact=False),
    "star": Suite(suite_star),
    "wheel": Suite(suite_wheel),
    "friendship": Suite(suite_friendship),
    "complete-bounds": Suite(suite_complete_bounds),
    "bipartite-bounds": Suite(suite_bipartite_bounds),
    "delta-bound": Suite(suite_delta_bound),
    "induced-p6-bound": Suite(suite_induced_p6_bound),
    "edge-removal": Suite(suite_edge_removal),
    "vertex-removal": Suite(suite_vertex_removal),
    "contraction": Suite(suite_contraction),
    "gap-growth": Suite(suite_gap_growth, exact=False),
    "subdiv-lower-m": Suite(suite_subdiv_lower_m),
    "subdiv-sandwich": Suite(suite_subdiv_sandwich),
    "subdiv-star-13": Suite(suite_subdiv_star_13, timeout=300.0),
    "subdiv-k10-bounds": Suite(suite_subdiv_k10_bounds, max_edges=20),
    "subdiv-monotone": Suite(suite_subdiv_monotone, timeout=600.0, max_edges=20),
    "oracle-agreement": Suite(suite_oracle_agreement),
}


def get_suite(suite_id: str) -> Suite:
    try:
        return SUITES[suite_id]
    except KeyError:
        raise UnknownSuite(f"unknown suite {suite_id!r}; choose from {sorted(SUITES)}") from None


def run_suite(suite_id: str, cfg: Optional[RunConfig] = None) -> list[TheoremCheckRecord]:
    cfg = cfg or RunConfig()
    suite = get_suite(suite_id)
    ctx = Context(
        cfg,
        cfg.timeout if cfg.timeout is not None else suite.timeout,
        cfg.max_edges if cfg.max_edges is not None else suite.max_edges,
    )
    return list(suite.run(ctx, cfg))


def summarize(records) -> dict:
    counts = {PASS: 0, FAIL: 0, SKIPPED: 0, TIMEOUT: 0}
    for r in records:
        counts[r.status] += 1
    return {"total": len(records), **counts}


def render(suite_id: str, records, cfg: RunConfig, elapsed: Optional[float] = None) -> str:
    include = cfg.include_meta
    if cfg.fmt == "json":
        doc = {
            "suite": suite_id,
            "records": [r.to_dict(include) for r in records],
            "summary": summarize(records),
        }
        if include:
            doc["meta"] = {
                "generated": time.strftime("%Y-%m-%dT%H:%M:%S"),
                "elapsed": None if elapsed is None else round(elapsed, 6),
                "threads": cfg.threads,
            }
        return json.dumps(doc, indent=1) + "\n"
    if cfg.fmt == "csv":
        buf = io.StringIO()
        cols = ["theorem_id", "instance", "expected", "observed", "status", "pass", "note"]
        if include:
            cols.append("runtime")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(cols)
        for r in records:
            d = r.to_dict(include)
            d["observed"] = json.dumps(d["observed"], sort_keys=False)
            d["pass"] = "" if d["pass"] is None else str(d["pass"]).lower()
            writer.writerow([d[c] for c in cols])
        return buf.getvalue()
    lines = []
    for r in records:
        obs = " ".join(f"{k}={v}" for k, v in r.observed.items())
        lines.append(f"{r.status.upper():8} {r.theorem_id:22} {r.instance:40} {r.expected:36} {obs}")
    s = summarize(records)
    lines.append(
        f"{suite_id}: {s['total']} records, {s[PASS]} pass, {s[FAIL]} fail, "
        f"{s[SKIPPED]} skipped, {s[TIMEOUT]} timeout"
    )
    return "\n".join(lines) + "\n"


def parse_csv_records(text: str) -> list[dict]:
    """Inverse of the CSV rendering, for round-trip checks."""
    out = []
    for row in csv.DictReader(io.StringIO(text)):
        row["observed"] = json.loads(row["observed"])
        row["pass"] = None if row["pass"] == "" else row["pass"] == "true"
        if "runtime" in row:
            row["runtime"] = float(row["runtime"])
        out.append(row)
    return out
