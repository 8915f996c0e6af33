import itertools
from collections import deque

import pytest
from hypothesis import HealthCheck, settings

from mindeg.roots import build_root_datum, simple_reflection, type_tables

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ORACLE_TYPES = ["A3", "B3", "C3", "D4", "G2", "F4"]

_ACCEPTANCE_LINES: list[str] = []


def dominant_box(datum, top=2):
    """All dominant weights of ``datum`` with coefficients in ``0..top``."""
    for c in itertools.product(range(top + 1), repeat=datum.rank):
        yield datum.weight(c)


@pytest.fixture
def acceptance_report():
    """Record one pass/fail line per acceptance criterion."""

    def record(number: int, title: str, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        _ACCEPTANCE_LINES.append(f"[{status}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


def poincare_ic_oracle(label):
    """First half of (1 - q) * P(W/W_theta) for the type of the singularity.

    The orbit of the highest root, graded by reflection distance from it.
    """
    datum = build_root_datum(label)
    theta = datum.root_to_weight(datum.positive_roots[-1])
    dist = {theta: 0}
    queue = deque([theta])
    while queue:
        x = queue.popleft()
        for i in range(datum.rank):
            y = simple_reflection(x, i, datum)
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    top = max(dist.values())
    p = [0] * (top + 2)
    for v in dist.values():
        p[v] += 1
    m = [p[0]] + [p[k] - p[k - 1] for k in range(1, len(p))]
    half = type_tables(label).dual_coxeter - 1
    coeffs = m[:half]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)
