import random
from fractions import Fraction as F

import pytest

from kdcut.gmi import GmiSource, NoIntegerPoint, gmi_cut, gmi_source, least_index_fractional
from kdcut.lp import Infeasible, Optimal, resolve_after_cut, solve_lp
from kdcut.model import Cut, MilpInstance, Polyhedron, Row, scale_to_integer_data
from kdcut.oracle import builtin, feasible_points, random_bounded_corpus


def _tableau(inst):
    P = inst.polyhedron()
    return solve_lp(P, inst.c, inst.h, cut_rows_from=P.m).tableau


def test_cks_first_cuts():
    t = _tableau(builtin("cks"))
    assert least_index_fractional(t) == 1
    assert gmi_cut(t, 1).equivalent(Cut((-1, 0), (2,), 0))
    assert gmi_cut(t, 2).equivalent(Cut((0, -1), (2,), 0))
    assert gmi_source(t, 1) == GmiSource(1, F(2, 3))


def test_owen_mehrotra_cut_separates():
    t = _tableau(builtin("owen-mehrotra"))
    cut = gmi_cut(t, least_index_fractional(t))
    assert not cut.satisfied_by(t.point().x, ())


def test_source_validation():
    with pytest.raises(ValueError):
        GmiSource(1, F(0))
    t = _tableau(builtin("owen-mehrotra"))
    assert t.var_value(1) == 1
    with pytest.raises(ValueError, match="no cut available"):
        gmi_cut(t, 2)


def test_empty_integer_slice_is_closed_off():
    # 1/4 <= x <= 3/4: the first cut already empties the relaxation
    inst, _ = scale_to_integer_data(MilpInstance([[1], [-1]], [[], []], [F(3, 4), F(-1, 4)], [1], [], 1, 0))
    cut = gmi_cut(_tableau(inst), 1)
    assert cut.equivalent(Cut((1,), (), 0))
    P = inst.polyhedron().with_row(cut.as_row())
    assert isinstance(solve_lp(P, inst.c), Infeasible)


def test_cuts_valid_and_separating_on_corpus():
    """Every cut from an optimal tableau keeps all mixed-integer points and removes the vertex."""
    for inst in random_bounded_corpus(21, 25):
        scaled, _ = scale_to_integer_data(inst)
        P = scaled.polyhedron()
        res = solve_lp(P, scaled.c, scaled.h, cut_rows_from=P.m)
        if not isinstance(res, Optimal):
            continue
        t = res.tableau
        pts = list(feasible_points(inst))
        for j in range(1, inst.p + 1):
            if t.var_value(j - 1).denominator == 1:
                continue
            try:
                cut = gmi_cut(t, j)
            except NoIntegerPoint:
                assert not pts
                continue
            assert not cut.satisfied_by(res.point.x, res.point.y)
            assert all(cut.satisfied_by(x, y) for x, y in pts)


def test_cks_x2_cut_after_first_cut():
    # literal fixture; the re-solved tableau gives -x2 + 3y <= 0 instead (see ledger)
    t = _tableau(builtin("cks"))
    t2 = resolve_after_cut(t, gmi_cut(t, 1)).tableau
    assert gmi_cut(t2, 2).equivalent(Cut((0, -1), (2,), 0))
