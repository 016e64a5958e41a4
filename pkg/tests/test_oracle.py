import itertools
from fractions import Fraction as F

import pytest

from kdcut.model import MilpInstance
from kdcut.oracle import (
    builtin, expon_instance, feasible_points, gen_expon, integer_box, lattice_points, oracle_solve,
    random_bounded_corpus,
)
from kdcut.projection import polytope_vertices
from kdcut.solver import UnboundedInstance, check_bounded


def test_known_optima():
    assert oracle_solve(builtin("cks")).value == 0
    assert oracle_solve(builtin("owen-mehrotra")).value == 2


def test_empty_slice_infeasible():
    inst = MilpInstance([[1], [-1]], [[], []], [F(3, 4), F(-1, 4)], [1], [], 1, 0)
    assert oracle_solve(inst).status == "infeasible"


def test_unbounded_rejected():
    inst = MilpInstance([[-1]], [[]], [0], [1], [], 1, 0)
    with pytest.raises(UnboundedInstance):
        oracle_solve(inst)


def test_box_covers_feasible_integers():
    inst = builtin("owen-mehrotra")
    assert [list(r) for r in integer_box(inst)] == [[0, 1, 2], [0, 1, 2]]
    pts = {x for x, _ in feasible_points(inst)}
    assert pts == {(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (0, 2)}


def test_y_best_found_by_vertices():
    # max y with 0 <= y <= x and y <= 3 - 2x: best integer x is 1 (y = 1)
    inst = MilpInstance([[-1], [2], [-1], [1], [0]], [[1], [1], [0], [0], [-1]], [0, 3, 0, 3, 0], [0], [1], 1, 1)
    res = oracle_solve(inst)
    assert res.value == 1 and res.point.x == (1,)


def test_builtins():
    assert builtin("cks").m == 4
    assert builtin("cone4").p == 2
    with pytest.raises(KeyError):
        builtin("nope")


def test_gen_expon_shape():
    for n in (2, 3, 4):
        P = gen_expon(n)
        assert P.m == 2 ** n + 2 and P.p == n + 1
    with pytest.raises(ValueError):
        gen_expon(1)
    assert expon_instance(2).c == (0, 0, 0)


def test_gen_expon_level_vertices():
    verts = polytope_vertices(gen_expon(2))
    assert [v for v in verts if v[-1] == 0] == sorted([(-1, 0, 0), (1, 0, 0), (0, -1, 0), (0, 1, 0)])
    # the top facet is the square with corners 1 +- e_i
    assert [v for v in verts if v[-1] == 2] == [(0, 1, 2), (1, 0, 2), (1, 2, 2), (2, 1, 2)]
    # no vertex strictly between the two levels
    assert all(v[-1] in (0, 2) for v in verts)


def test_corpus_is_bounded_and_deterministic():
    a = random_bounded_corpus(5, 10)
    assert a == random_bounded_corpus(5, 10)
    assert all(check_bounded(i) for i in a)


def test_lattice_points():
    P = gen_expon(2)
    pts = lattice_points(P, [range(-2, 3)] * 2 + [range(0, 3)])
    assert (0, 0, 0) in pts and (1, 1, 2) in pts and (0, 0, 1) in pts
