import pytest

from tdec.graph import enumerate_labeled_connected_graphs
from tdec.solver import SolverOptions, solve_exact


@pytest.fixture(scope="session")
def corpus5():
    """All labeled connected graphs on 1..5 vertices."""
    return list(enumerate_labeled_connected_graphs(5))


@pytest.fixture(scope="session")
def exact_values():
    """Memoized exact solver; also checks every witness it returns."""
    from tdec.coloring import validate

    cache = {}

    def value(g):
        key = g.key()
        if key not in cache:
            res = solve_exact(g, SolverOptions(timeout=120))
            if res.status == "Exact":
                report = validate(g, res.witness)
                assert report.valid and res.witness.k == res.value
            cache[key] = res.value
        return cache[key]

    return value


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {name}: {detail}".rstrip(": ")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
