from fractions import Fraction as F

import pytest

from kdcut.model import Polyhedron
from kdcut.oracle import builtin


@pytest.fixture
def cks():
    return builtin("cks")


@pytest.fixture
def cks_rows():
    """The three-row system of the Cook-Kannan-Schrijver example (no bound on y)."""
    return Polyhedron(2, 1, builtin("cks").polyhedron().rows[:3])


def frac(*vals):
    return tuple(F(v) for v in vals)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call" or (
                outcome == "error" and "test_criterion_" in nodeid
            ):
                name = nodeid.split("::")[-1][len("test_criterion_"):]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            num, _, label = name.partition("_")
            terminalreporter.write_line(f"criterion {int(num):2d} {verdict}  {label.replace('_', ' ')}")
