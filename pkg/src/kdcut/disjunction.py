"""Multi-term disjunctions, cut certification and the objective-direction cut.

A disjunction is stored with terms ``d^i x <= delta^i``; it is valid when
every integer point satisfies at least one term.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .lp import Infeasible, Optimal, Unbounded, solve_lp
from .model import Cut, Polyhedron, Row
from .projection import Ray, cone_extreme_rays, project_x
from .rational import ZERO, ceil_rat, dot, floor_rat, primitive_scale, vec


class DisjunctionError(ValueError):
    pass


@dataclass(frozen=True)
class Disjunction:
    d: tuple
    delta: tuple

    def __post_init__(self):
        d = tuple(tuple(int(v) for v in row) for row in self.d)
        delta = tuple(int(v) for v in self.delta)
        if len(d) != len(delta):
            raise ValueError("need one right-hand side per term")
        if len(d) < 2:
            raise ValueError("a disjunction needs at least two terms")
        if len({len(r) for r in d}) != 1:
            raise ValueError("terms must have the same length")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "delta", delta)

    @property
    def k(self) -> int:
        return len(self.d)

    @property
    def p(self) -> int:
        return len(self.d[0])

    def covers(self, x) -> bool:
        return any(dot(di, x) <= de for di, de in zip(self.d, self.delta))

    def body(self) -> Polyhedron:
        """``{x : d^i x >= delta^i + 1 for all i}``, the region no term reaches."""
        return Polyhedron(self.p, 0, [Row([-v for v in di], (), -(de + 1)) for di, de in zip(self.d, self.delta)])


@dataclass(frozen=True)
class Verdict:
    status: str  # "valid" | "invalid" | "unbounded-body"
    witness: tuple = None

    @property
    def valid(self) -> bool:
        return self.status == "valid"


def _axis_range(B: Polyhedron, j: int):
    e = [ZERO] * B.p
    e[j] = Fraction(1)
    hi = solve_lp(B, e)
    e[j] = Fraction(-1)
    lo = solve_lp(B, e)
    if isinstance(hi, Infeasible) or isinstance(lo, Infeasible):
        return "empty"
    if isinstance(hi, Unbounded) or isinstance(lo, Unbounded):
        return None
    return ceil_rat(-lo.value), floor_rat(hi.value)


def is_valid_disjunction(D: Disjunction, bound: int = 10) -> Verdict:
    """Decide validity by enumerating lattice points of the body's bounding box.

    When the body is unbounded the box ``[-bound, bound]^p`` is searched
    instead; finding nothing there is reported as ``unbounded-body``.
    """
    B = D.body()
    ranges, unbounded = [], False
    for j in range(D.p):
        r = _axis_range(B, j)
        if r == "empty":
            return Verdict("valid")
        if r is None:
            unbounded = True
            r = (-bound, bound)
        ranges.append(range(r[0], r[1] + 1))
    for x in itertools.product(*ranges):
        if B.contains(x):
            return Verdict("invalid", tuple(x))
    return Verdict("unbounded-body" if unbounded else "valid")


def certify_cut(P: Polyhedron, cut: Cut, D: Disjunction) -> bool:
    """True iff the cut holds on ``P`` intersected with each term of ``D``."""
    for di, de in zip(D.d, D.delta):
        Pi = P.with_row(Row(di, [ZERO] * P.q, de))
        res = solve_lp(Pi, cut.alpha, cut.beta)
        if isinstance(res, Infeasible):
            continue
        if isinstance(res, Unbounded) or res.value > cut.gamma:
            return False
    return True


def _dedupe(pairs):
    seen, out = set(), []
    for pr in pairs:
        if pr not in seen:
            seen.add(pr)
            out.append(pr)
    return out


def disjunction_from_cut(P: Polyhedron, cut: Cut) -> Disjunction:
    """A disjunction certifying ``cut`` for ``P``.

    The region cut off, ``P`` with ``alpha x + beta y > gamma``, is projected
    to x-space; each projected row is made primitive integral, its
    right-hand side rounded (``floor + 1`` for non-strict rows, ``ceil`` for
    strict ones) and the row reversed into a term.
    """
    lp = solve_lp(P, cut.alpha, cut.beta)
    if isinstance(lp, Infeasible) or (isinstance(lp, Optimal) and lp.value <= cut.gamma):
        raise DisjunctionError("cut does not cut off any point of P")
    M = P.with_row(Row([-v for v in cut.alpha], [-v for v in cut.beta], -cut.gamma), strict=True)
    terms = []
    for row in project_x(M).rows:
        if all(v == 0 for v in row.d):
            if row.rhs < 0 or (row.strict and row.rhs == 0):
                raise DisjunctionError("cut does not cut off any point of P")
            continue
        s = primitive_scale(row.d)
        d = tuple(int(s * v) for v in row.d)
        rhs = s * row.rhs
        rounded = ceil_rat(rhs) if row.strict else floor_rat(rhs) + 1
        terms.append((tuple(-v for v in d), -rounded))
    terms = _dedupe(terms)
    if len(terms) < 2:
        raise DisjunctionError("no disjunction derivable")
    return Disjunction([t[0] for t in terms], [t[1] for t in terms])


@dataclass(frozen=True)
class RayTerm:
    ray: Ray
    d: tuple  # v A - v_{m+1} c
    delta: int
    gamma: Fraction = None  # None when v_{m+1} == 0


@dataclass(frozen=True)
class ObjectiveCutReport:
    gamma_hat: Fraction
    per_ray: tuple
    disjunction: Disjunction
    c: tuple
    h: tuple

    def cut(self) -> Cut:
        return Cut(self.c, self.h, self.gamma_hat)


def objective_cut(P: Polyhedron, c, h, gamma_star, mode: str = "weak") -> ObjectiveCutReport:
    """Cut ``c x + h y <= gamma_hat`` from the rounded projection of ``P`` at level ``gamma_star``.

    ``mode="weak"`` rounds each projected right-hand side up (ceil);
    ``mode="strict"`` uses ``floor + 1``, which also separates an apex
    attaining ``gamma_star``.  ``A`` and ``c`` must be integral.
    """
    if mode not in ("weak", "strict"):
        raise ValueError("mode must be 'weak' or 'strict'")
    c, h = vec(c), vec(h)
    gamma_star = Fraction(gamma_star)
    if any(v.denominator != 1 for r in P.rows for v in r.a) or any(v.denominator != 1 for v in c):
        raise ValueError("objective cut needs integral A and c; scale the data first")
    m = P.m
    E = [r.g for r in P.rows] + [tuple(-v for v in h)]
    if P.q:
        rays = cone_extreme_rays(E)
    else:
        rays = [Ray(tuple(1 if i == j else 0 for j in range(m + 1))) for i in range(m + 1)]
    per_ray = []
    for ray in rays:
        v, last = ray.v[:m], ray.v[m]
        d = [-last * cj for cj in c]
        base = ZERO
        for vi, row in zip(v, P.rows):
            if vi:
                for j in range(P.p):
                    d[j] += vi * row.a[j]
                base += vi * row.rhs
        rhs = base - last * gamma_star
        delta = ceil_rat(rhs) if mode == "weak" else floor_rat(rhs) + 1
        gamma_r = (delta - base) / Fraction(-last) if last > 0 else None
        per_ray.append(RayTerm(ray, tuple(int(x) for x in d), delta, gamma_r))
    gammas = [t.gamma for t in per_ray if t.gamma is not None]
    if not gammas:
        raise DisjunctionError("objective cut unavailable")
    terms = list(per_ray) if len(per_ray) >= 2 else list(per_ray) * 2  # repeated terms are allowed
    D = Disjunction([[-x for x in t.d] for t in terms], [-t.delta for t in terms])
    return ObjectiveCutReport(max(gammas), tuple(per_ray), D, c, h)
