import itertools
import random
from fractions import Fraction as F

import pytest

from kdcut.model import Polyhedron, Row
from kdcut.oracle import brute_vertices, gen_expon, random_polyhedron
from kdcut.projection import (
    ProjectedSystem, ProjRow, Ray, cone_extreme_rays, fm_project, minimize_rows, poly_equal,
    polytope_vertices, project_x,
)
from kdcut.rational import primitive_integer_vector, rank, solve_square


def test_ray_validation():
    with pytest.raises(ValueError):
        Ray((2, 0, 2))
    with pytest.raises(ValueError):
        Ray((1, -1))


def test_trivial_cone():
    assert cone_extreme_rays([[1], [1]]) == []


def test_rays_are_extreme():
    """Each ray lies in the cone and its tight coordinates have the right rank (independent check)."""
    rng = random.Random(2)
    for _ in range(40):
        m, k = rng.randint(2, 6), rng.randint(1, 3)
        E = [[rng.randint(-3, 3) for _ in range(k)] for _ in range(m)]
        rays = cone_extreme_rays(E)
        assert len({r.v for r in rays}) == len(rays)
        cols = [[E[i][c] for i in range(m)] for c in range(k)]
        for r in rays:
            assert all(sum(E[i][c] * r.v[i] for i in range(m)) == 0 for c in range(k))
            units = [[1 if j == i else 0 for j in range(m)] for i in range(m) if r.v[i] == 0]
            assert rank(cols + units) == m - 1


def test_rays_match_exhaustive_search():
    """Brute force: a ray is extreme iff its zero set pins down a line of the cone."""
    rng = random.Random(8)
    for _ in range(25):
        m, k = rng.randint(2, 5), rng.randint(1, 2)
        E = [[rng.randint(-2, 2) for _ in range(k)] for _ in range(m)]
        cols = [[E[i][c] for i in range(m)] for c in range(k)]
        expected = set()
        for size in range(m):
            for S in itertools.combinations(range(m), size):
                rows = cols + [[1 if j == i else 0 for j in range(m)] for i in S]
                if rank(rows) != m - 1:
                    continue
                basis = []
                for r in rows:
                    if rank(basis + [r]) > len(basis):
                        basis.append(r)
                for probe in range(m):
                    e = [1 if j == probe else 0 for j in range(m)]
                    z = solve_square(basis + [e], [0] * (m - 1) + [1])
                    if z is not None:
                        break
                for sgn in (1, -1):
                    w = [sgn * v for v in z]
                    if all(v >= 0 for v in w):
                        expected.add(primitive_integer_vector(w))
        assert {r.v for r in cone_extreme_rays(E)} == expected


def test_project_x_equals_fourier_motzkin():
    rng = random.Random(4)
    for _ in range(30):
        P = random_polyhedron(rng, rng.randint(1, 3), rng.randint(1, 3), rng.randint(2, 6))
        assert poly_equal(project_x(P), fm_project(P))


def test_projection_contains_shadows():
    rng = random.Random(9)
    for _ in range(20):
        P = random_polyhedron(rng, 2, 1, 5)
        S = project_x(P)
        for _ in range(30):
            x = (F(rng.randint(-10, 10), 2), F(rng.randint(-10, 10), 2))
            y = (F(rng.randint(-10, 10), 2),)
            if P.contains(x, y):
                assert S.contains(x)


def test_strict_flag_propagates():
    P = Polyhedron(1, 1, [Row((1,), (1,), 1), Row((0,), (-1,), 0)], strict=(True, False))
    S = project_x(P)
    assert [r.strict for r in S.rows] == [True]
    assert S.contains((F(1, 2),)) and not S.contains((1,))


def test_poly_equal_detects_difference():
    a = ProjectedSystem(1, (ProjRow((1,), F(1)),))
    b = ProjectedSystem(1, (ProjRow((1,), F(2)),))
    assert poly_equal(a, a) and not poly_equal(a, b)


def test_minimize_rows():
    S = ProjectedSystem(1, (ProjRow((1,), F(1)), ProjRow((2,), F(5)), ProjRow((-1,), F(0))))
    M = minimize_rows(S)
    assert len(M.rows) == 2 and poly_equal(S, M)


def test_vertices_match_brute_force():
    rng = random.Random(6)
    for n in (2, 3):
        P = gen_expon(n)
        verts = polytope_vertices(P)
        assert verts == brute_vertices([r.a for r in P.rows], [r.rhs for r in P.rows], n + 1)
    for _ in range(15):
        rows = [Row([rng.randint(-3, 3) for _ in range(2)], (), rng.randint(1, 6)) for _ in range(3)]
        rows += [Row((1, 0), (), 4), Row((-1, 0), (), 4), Row((0, 1), (), 4), Row((0, -1), (), 4)]
        P = Polyhedron(2, 0, rows)
        assert polytope_vertices(P) == brute_vertices([r.a for r in rows], [r.rhs for r in rows], 2)


def test_vertices_rejects_unbounded():
    with pytest.raises(ValueError):
        polytope_vertices(Polyhedron(1, 0, [Row((-1,), (), 0)]))
