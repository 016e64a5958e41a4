"""Projection onto the integer-variable space.

:func:`project_x` uses the extreme rays of ``{v >= 0 : G^T v = 0}``, found by
the double-description method; :func:`fm_project` is an independent
Fourier-Motzkin elimination used to cross-check it, and :func:`poly_equal`
compares two systems by per-row LP validity.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .lp import Infeasible, Optimal, Unbounded, solve_lp
from .model import Polyhedron, Row
from .rational import ZERO, denominators_lcm, dot, int_rank, primitive_integer_vector, rank, solve_square, vec


@dataclass(frozen=True)
class Ray:
    """Primitive nonnegative integer extreme ray of the multiplier cone."""

    v: tuple

    def __post_init__(self):
        v = tuple(int(x) for x in self.v)
        if any(x < 0 for x in v):
            raise ValueError("ray must be componentwise nonnegative")
        if _gcd_all(v) != 1:
            raise ValueError("ray must be primitive")
        object.__setattr__(self, "v", v)


@dataclass(frozen=True)
class ProjRow:
    d: tuple
    rhs: Fraction
    from_ray: Ray = None
    strict: bool = False


@dataclass(frozen=True)
class ProjectedSystem:
    """``{x : d.x <= rhs}`` (``<`` on strict rows) in the x-space."""

    p: int
    rows: tuple

    def as_polyhedron(self) -> Polyhedron:
        return Polyhedron(self.p, 0, [Row(r.d, (), r.rhs) for r in self.rows])

    def contains(self, x) -> bool:
        for r in self.rows:
            v = dot(r.d, x)
            if v > r.rhs or (r.strict and v == r.rhs):
                return False
        return True


def _integer_row(row):
    m = denominators_lcm(row)
    return [int(Fraction(v) * m) for v in row]


def _gcd_all(v):
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    return g


def _primitive(v):
    g = _gcd_all(v)
    return tuple(v) if g == 1 else tuple(x // g for x in v)


def _unit_index(row):
    nz = [i for i, v in enumerate(row) if v]
    return nz[0] if len(nz) == 1 else None


def _common_rank(eq_rows, rows, unit, common, dim):
    # unit rows each add one to the rank and remove their column from the rest
    cols = {unit[k] for k in common if unit[k] is not None}
    rest = eq_rows + [rows[k] for k in common if unit[k] is None]
    if not cols:
        return int_rank(rest)
    keep = [i for i in range(dim) if i not in cols]
    return len(cols) + int_rank([[r[i] for i in keep] for r in rest])


def double_description(dim, initial_rays, initial_tight, constraints):
    """Extreme rays of ``{z : a.z >= 0 (ineq), a.z == 0 (eq)}`` by double description.

    ``initial_rays`` generate a pointed starting cone whose defining rows
    ``initial_tight`` are given as a list of integer rows.  ``constraints``
    are ``(row, is_equality)`` pairs added in order.  Adjacency of two rays
    is decided by the rank of the rows tight at both.
    """
    rows = [list(r) for r in initial_tight]
    eq_rows = []
    rays = [tuple(r) for r in initial_rays]
    # indices of inequality rows each ray is tight at; a positive combination
    # of two rays is tight exactly where both are
    tight = []
    for r in rays:
        nz = [i for i, v in enumerate(r) if v]
        tight.append(frozenset(k for k, row in enumerate(rows) if not sum(row[i] * r[i] for i in nz)))
    unit = [_unit_index(r) for r in rows]
    for a, is_eq in constraints:
        a = _integer_row(a)
        vals = [sum(x * y for x, y in zip(a, r)) for r in rays]
        pos = [i for i, s in enumerate(vals) if s > 0]
        neg = [i for i, s in enumerate(vals) if s < 0]
        zero = [i for i, s in enumerate(vals) if s == 0]
        k_new = None if is_eq else len(rows)
        extra = frozenset() if is_eq else frozenset((k_new,))
        new = [(rays[i], tight[i] | extra) for i in zero]
        if not is_eq:
            new = [(rays[i], tight[i]) for i in pos] + new
        for i in pos:
            for j in neg:
                common = tight[i] & tight[j]
                if len(common) + len(eq_rows) < dim - 2:
                    continue
                if _common_rank(eq_rows, rows, unit, common, dim) != dim - 2:
                    continue
                w = tuple(vals[i] * y - vals[j] * x for x, y in zip(rays[i], rays[j]))
                new.append((_primitive(w), common | extra))
        if is_eq:
            eq_rows.append(a)
        else:
            rows.append(a)
            unit.append(_unit_index(a))
        seen, rays, tight = set(), [], []
        for r, t in new:
            if r not in seen:
                seen.add(r)
                rays.append(r)
                tight.append(t)
    return rays


def cone_extreme_rays(E) -> list:
    """Primitive extreme rays of ``{v >= 0 : E^T v = 0}`` for an m x k matrix ``E``.

    ``E`` is given row-wise (one row per coordinate of ``v``).  Returns an
    empty list when the cone is ``{0}``.
    """
    E = [vec(r) for r in E]
    m = len(E)
    if m == 0:
        return []
    k = len(E[0])
    unit = [tuple(1 if i == j else 0 for j in range(m)) for i in range(m)]
    cons = [([E[i][col] for i in range(m)], True) for col in range(k)]
    rays = double_description(m, unit, unit, cons)
    return [Ray(r) for r in rays if any(r)]


def _rows_from_rays(P: Polyhedron, rays):
    out = []
    for ray in rays:
        d = [ZERO] * P.p
        rhs = ZERO
        strict = False
        for vi, row, s in zip(ray.v, P.rows, P.strict):
            if vi:
                for j in range(P.p):
                    d[j] += vi * row.a[j]
                rhs += vi * row.rhs
                strict = strict or s
        out.append(ProjRow(tuple(d), rhs, ray, strict))
    return tuple(out)


def project_x(P: Polyhedron) -> ProjectedSystem:
    """Rows ``(v A) x <= v b`` for every extreme ray ``v`` of ``{v >= 0 : G^T v = 0}``."""
    rays = cone_extreme_rays([r.g for r in P.rows]) if P.q else [
        Ray(tuple(1 if i == j else 0 for j in range(P.m))) for i in range(P.m)
    ]
    return ProjectedSystem(P.p, _rows_from_rays(P, rays))


def fm_project(P: Polyhedron) -> ProjectedSystem:
    """Fourier-Motzkin elimination of every y variable (redundant rows kept)."""
    # each row: (a, g, rhs, strict)
    rows = [(list(r.a), list(r.g), r.rhs, s) for r, s in zip(P.rows, P.strict)]
    for k in range(P.q):
        pos = [r for r in rows if r[1][k] > 0]
        neg = [r for r in rows if r[1][k] < 0]
        out = [r for r in rows if r[1][k] == 0]
        for ra in pos:
            for rb in neg:
                la, lb = -rb[1][k], ra[1][k]
                a = [la * u + lb * v for u, v in zip(ra[0], rb[0])]
                g = [la * u + lb * v for u, v in zip(ra[1], rb[1])]
                g[k] = ZERO
                out.append((a, g, la * ra[2] + lb * rb[2], ra[3] or rb[3]))
        seen, rows = set(), []
        for r in out:
            key = (tuple(r[0]), tuple(r[1]), r[2], r[3])
            if key not in seen:
                seen.add(key)
                rows.append(r)
    return ProjectedSystem(P.p, tuple(ProjRow(tuple(r[0]), r[2], None, r[3]) for r in rows))


def _valid_for(row: ProjRow, other: Polyhedron) -> bool:
    res = solve_lp(other, row.d)
    if isinstance(res, Infeasible):
        return True
    if isinstance(res, Unbounded):
        return False
    assert isinstance(res, Optimal)
    return res.value <= row.rhs


def poly_equal(S1: ProjectedSystem, S2: ProjectedSystem) -> bool:
    """True iff every row of each system is valid for the other (closures compared)."""
    if S1.p != S2.p:
        raise ValueError("systems live in different dimensions")
    P1, P2 = S1.as_polyhedron(), S2.as_polyhedron()
    return all(_valid_for(r, P2) for r in S1.rows) and all(_valid_for(r, P1) for r in S2.rows)


def minimize_rows(S: ProjectedSystem) -> ProjectedSystem:
    """Drop rows implied by the remaining ones (for display)."""
    rows = list(S.rows)
    i = 0
    while i < len(rows):
        rest = ProjectedSystem(S.p, tuple(rows[:i] + rows[i + 1:]))
        if _valid_for(rows[i], rest.as_polyhedron()):
            rows.pop(i)
        else:
            i += 1
    return ProjectedSystem(S.p, tuple(rows))


def polytope_vertices(P: Polyhedron) -> list:
    """Vertices of a bounded ``{z : A z <= b}`` (q must be 0) via double description.

    The homogenised cone ``{(z, t) : b t - A z >= 0, t >= 0}`` is built from
    a nonsingular starting subsystem; rays with ``t > 0`` are the vertices.
    """
    if P.q:
        raise ValueError("vertex enumeration works on x-only systems")
    dim = P.p + 1
    cons = [[-v for v in r.a] + [r.rhs] for r in P.rows] + [[ZERO] * P.p + [Fraction(1)]]
    cons = [_integer_row(r) for r in cons]
    # greedy nonsingular starting rows, kept in given order
    start = []
    for i, r in enumerate(cons):
        if rank([cons[k] for k in start] + [r]) > len(start):
            start.append(i)
        if len(start) == dim:
            break
    if len(start) < dim:
        raise ValueError("system is not pointed")
    B = [cons[i] for i in start]
    # columns of B^{-1} generate {z : B z >= 0}
    init = []
    for i in range(dim):
        e = [ZERO] * dim
        e[i] = Fraction(1)
        col = solve_square(B, e)
        init.append(primitive_integer_vector(col))
    rest = [(cons[i], False) for i in range(len(cons)) if i not in start]
    rays = double_description(dim, init, B, rest)
    verts = []
    for r in rays:
        if r[-1] > 0:
            verts.append(tuple(Fraction(v, r[-1]) for v in r[:-1]))
        elif any(r):
            raise ValueError("polyhedron is unbounded")
    return sorted(set(verts))
