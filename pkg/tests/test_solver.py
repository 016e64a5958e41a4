from fractions import Fraction as F

import pytest

from kdcut.model import MilpInstance
from kdcut.oracle import builtin, feasible_points, oracle_solve, random_bounded_corpus
from kdcut.solver import (
    GmiCutAdded, LpSolved, ObjectiveCut, SolveOptions, Terminal, UnboundedInstance, check_bounded, solve,
)


def _values(res):
    return [e.value for e in res.trace if isinstance(e, LpSolved)]


def test_cks():
    res = solve(builtin("cks"))
    assert res.status == "optimal" and res.value == 0
    assert res.point.x == (2, 0) and res.point.y == (0,)
    assert _values(res) == [F(2, 3), F(2, 5), 0]
    assert isinstance(res.trace[-1], Terminal)


def test_owen_mehrotra():
    res = solve(builtin("owen-mehrotra"))
    assert res.status == "optimal" and res.value == 2
    obj = [e for e in res.trace if isinstance(e, ObjectiveCut)]
    assert obj[0].report.cut().equivalent(__import__("kdcut").Cut((1, 1), (), 2))


def test_infeasible_slice():
    inst = MilpInstance([[1], [-1]], [[], []], [F(3, 4), F(-1, 4)], [1], [], 1, 0)
    assert solve(inst).status == "infeasible"


def test_empty_relaxation():
    inst = MilpInstance([[1], [-1]], [[], []], [0, -1], [1], [], 1, 0)
    assert check_bounded(inst)
    res = solve(inst)
    assert res.status == "infeasible" and res.trace == [Terminal("infeasible")]


def test_unbounded_rejected():
    with pytest.raises(UnboundedInstance):
        solve(MilpInstance([[-1]], [[]], [0], [1], [], 1, 0))


def test_options_validated():
    with pytest.raises(ValueError):
        SolveOptions(max_outer_iterations=0)
    with pytest.raises(ValueError):
        SolveOptions(gmi_mode="all")
    with pytest.raises(ValueError):
        SolveOptions(objective_rows="none")
    with pytest.raises(ValueError):
        solve(builtin("cks"), SolveOptions(include_x0=True))


def test_x0_source_on_pure_objective():
    res = solve(builtin("owen-mehrotra"), SolveOptions(include_x0=True))
    assert res.value == 2


def test_rational_data_reported_in_original_units():
    # max x/2 subject to 3x <= 7, x >= 0: best integer x = 2, value 1
    inst = MilpInstance([[3], [-1]], [[], []], [7, 0], [F(1, 2)], [], 1, 0)
    res = solve(inst)
    assert res.value == 1
    assert _values(res)[0] == F(7, 6)


def test_least_index_stalls_on_cks_with_current_rows():
    """One cut per step keeps the projected rhs integral, so the weak objective cut never bites."""
    opts = SolveOptions(gmi_mode="least-index", objective_rows="current", max_outer_iterations=4)
    res = solve(builtin("cks"), opts)
    assert res.status == "iteration-limit"
    assert _values(res) == [F(2, 3), F(1, 2), F(1, 3), F(1, 4), F(1, 5)]
    assert all(not e.added for e in res.trace if isinstance(e, ObjectiveCut))


def test_least_index_with_original_rows():
    # at level 1/2 the original rows round to 0 and close the gap at once
    res = solve(builtin("cks"), SolveOptions(gmi_mode="least-index"))
    assert res.status == "optimal" and res.value == 0
    assert _values(res) == [F(2, 3), F(1, 2), 0]


def test_iteration_limits():
    # zero objective: the bound never moves, so each fractional coordinate costs one inner round
    box = MilpInstance([[2, 0], [0, 2], [-1, 0], [0, -1]], [[], [], [], []], [3, 3, 0, 0], [0, 0], [], 2, 0)
    one = SolveOptions(max_inner_iterations=1, gmi_mode="least-index")
    assert solve(box, one).status == "iteration-limit"
    res = solve(box, SolveOptions(max_inner_iterations=2, gmi_mode="least-index"))
    assert res.status == "optimal" and res.point.x == (1, 1)
    opts = SolveOptions(max_outer_iterations=2, gmi_mode="least-index", objective_rows="current")
    res = solve(builtin("cks"), opts)
    assert res.status == "iteration-limit" and res.trace[-1] == Terminal("iteration-limit")


def test_trace_monotone_and_cuts_sound():
    for inst in random_bounded_corpus(12, 20):
        res = solve(inst)
        orc = oracle_solve(inst)
        assert res.status == orc.status
        if res.status == "optimal":
            assert res.value == orc.value
            assert inst.polyhedron().contains(res.point.x, res.point.y)
        vals = _values(res)
        assert all(a >= b for a, b in zip(vals, vals[1:]))
        pts = list(feasible_points(inst))
        for cut in res.cuts():
            assert all(cut.satisfied_by(x, y) for x, y in pts)
        for e in res.trace:
            if isinstance(e, ObjectiveCut) and orc.status == "optimal":
                assert e.gamma_hat >= orc.value
