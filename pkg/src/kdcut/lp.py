"""Exact rational simplex returning the lexicographically maximal optimum.

Variables are numbered ``0 .. n-1`` for the structural columns (x then y,
all free) followed by one nonnegative slack per constraint row.  Free
columns are pivoted into the basis before phase 1 and never leave, so at
optimality every basic structural variable is written in terms of
nonbasic slacks only.  That is the form the Gomory cut needs.

Termination uses the lexicographic ratio test: the slack columns of the
tableau hold the basis inverse, which plays the role of the usual
epsilon-perturbation of the right-hand side.  After the objective is
optimal, the optimal face is refined by maximising x_1, ..., x_p,
y_1, ..., y_q in turn, so the returned vertex is the lexicographic
maximum of (x_0, x_1, ..., y_q) over the optimal set.  In that state every
nonbasic column is lexicographically positive, which is exactly what the
dual-lexicographic warm restart in :func:`resolve_after_cut` needs.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .model import Cut, Point, Polyhedron, Row
from .rational import ZERO, dot, vec

log = logging.getLogger(__name__)


def _lex_less(u, v) -> bool:
    for a, b in zip(u, v):
        if a != b:
            return a < b
    return False


@dataclass
class Tableau:
    """Optimal simplex dictionary.

    Row ``i`` reads ``var[basis[i]] = rhs[i] - sum_j rows[i][j] * var[j]``
    over nonbasic ``j``; the objective reads ``x_0 = value - sum_j obj[j] * var[j]``.
    """

    P: Polyhedron
    c: tuple
    h: tuple
    basis: list
    rows: list
    rhs: list
    obj: list
    value: Fraction
    cut_rows_from: int = 0
    trace: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.P.p + self.P.q

    @property
    def var_count(self) -> int:
        return self.n + self.P.m

    def basic_row(self, var: int):
        try:
            return self.basis.index(var)
        except ValueError:
            return None

    def var_value(self, var: int) -> Fraction:
        r = self.basic_row(var)
        return ZERO if r is None else self.rhs[r]

    def point(self) -> Point:
        vals = [self.var_value(j) for j in range(self.n)]
        return Point(vals[: self.P.p], vals[self.P.p:])

    def nonbasic(self):
        basic = set(self.basis)
        return [j for j in range(self.var_count) if j not in basic]

    def copy(self) -> "Tableau":
        return Tableau(
            self.P, self.c, self.h, list(self.basis), [list(r) for r in self.rows],
            list(self.rhs), list(self.obj), self.value, self.cut_rows_from, list(self.trace),
        )

    def integral_slack(self, i: int) -> bool:
        """Slack of row ``i`` takes integer values at mixed-integer points.

        Holds for rows of the instance with no continuous part and integral
        data; slacks of appended cuts are always treated as continuous.
        """
        row = self.P.rows[i]
        return (
            i < self.cut_rows_from
            and all(v == 0 for v in row.g)
            and all(v.denominator == 1 for v in row.a + (row.rhs,))
        )


@dataclass(frozen=True)
class Optimal:
    point: Point
    value: Fraction
    tableau: Tableau


@dataclass(frozen=True)
class Infeasible:
    pass


@dataclass(frozen=True)
class Unbounded:
    pass


class _Work:
    """Mutable pivoting state shared by the phases."""

    def __init__(self, n, m, rows, rhs, basis, objs, trace):
        self.n = n
        self.m = m
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.objs = objs  # list of [coeffs, value] updated by every pivot
        self.trace = trace

    @property
    def width(self):
        return len(self.rows[0]) if self.rows else self.n + self.m

    def constrained(self, i) -> bool:
        return self.basis[i] >= self.n

    def pivot(self, r, e):
        log.debug("pivot enter=%d leave=%d", e, self.basis[r])
        self.trace.append((e, self.basis[r]))
        row = self.rows[r]
        inv = 1 / row[e]
        row = [v * inv for v in row]
        self.rows[r] = row
        self.rhs[r] *= inv
        br = self.rhs[r]
        nz = [(j, v) for j, v in enumerate(row) if v]
        for i, other in enumerate(self.rows):
            f = other[e]
            if i != r and f:
                for j, v in nz:
                    other[j] -= f * v
                self.rhs[i] -= f * br
        for ob in self.objs:
            f = ob[0][e]
            if f:
                for j, v in nz:
                    ob[0][j] -= f * v
                ob[1] -= f * br
        self.basis[r] = e

    def lex_key(self, i, denom):
        # rhs followed by the basis-inverse row (slack columns)
        row = self.rows[i]
        return [self.rhs[i] / denom] + [row[self.n + k] / denom for k in range(self.m)]

    def ratio_row(self, e):
        best, best_key = None, None
        for i in range(len(self.rows)):
            a = self.rows[i][e]
            if a > 0 and self.constrained(i):
                key = self.lex_key(i, a)
                if best is None or _lex_less(key, best_key):
                    best, best_key = i, key
        return best

    def primal(self, cost, allowed):
        """Maximise the objective whose dictionary coefficients ``cost()`` returns.

        Returns False when the objective is unbounded.
        """
        while True:
            coeffs = cost()
            e, best = None, ZERO
            basic = set(self.basis)
            for j in allowed:
                if j in basic:
                    continue
                if coeffs[j] < best:
                    e, best = j, coeffs[j]
            if e is None:
                return True
            r = self.ratio_row(e)
            if r is None:
                return False
            self.pivot(r, e)


def _build(P: Polyhedron, c, h):
    n, m = P.p + P.q, P.m
    rows, rhs = [], []
    for i, row in enumerate(P.rows):
        coeffs = list(row.a) + list(row.g) + [ZERO] * m
        coeffs[n + i] = Fraction(1)
        rows.append(coeffs)
        rhs.append(row.rhs)
    basis = [n + i for i in range(m)]
    obj = [[-v for v in list(c) + list(h)] + [ZERO] * m, ZERO]
    return n, m, rows, rhs, basis, obj


def solve_lp(P: Polyhedron, c, h=(), cut_rows_from=None):
    """Maximise ``c.x + h.y`` over ``P`` exactly.

    Returns :class:`Optimal`, :class:`Infeasible` or :class:`Unbounded`.
    ``cut_rows_from`` marks the first appended cut row; slacks of those
    rows are treated as continuous by the Gomory routines.
    """
    if any(P.strict):
        raise ValueError("strict rows are not supported by the LP solver")
    c, h = vec(c), vec(h)
    n, m, rows, rhs, basis, obj = _build(P, c, h)
    trace = []
    w = _Work(n, m, rows, rhs, basis, [obj], trace)

    # phase 0: free structurals enter and stay
    free_nonbasic = []
    for j in range(n):
        r = next((i for i in range(m) if w.constrained(i) and w.rows[i][j] != 0), None)
        if r is None:
            free_nonbasic.append(j)
        else:
            w.pivot(r, j)

    # phase 1 with one artificial column, entered at the lexicographically most negative row
    cons = [i for i in range(m) if w.constrained(i)]
    worst = None
    for i in cons:
        key = w.lex_key(i, Fraction(1))
        if worst is None or _lex_less(key, w.lex_key(worst, Fraction(1))):
            worst = i
    if worst is not None and _lex_less(w.lex_key(worst, Fraction(1)), [ZERO] * (m + 1)):
        aux = n + m
        for i, row in enumerate(w.rows):
            row.append(Fraction(-1) if w.constrained(i) else ZERO)
        obj[0].append(ZERO)
        aux_obj = [[ZERO] * (n + m) + [Fraction(1)], ZERO]
        w.objs.append(aux_obj)
        w.pivot(worst, aux)
        allowed = [j for j in range(n + m + 1) if j not in free_nonbasic]
        w.primal(lambda: aux_obj[0], allowed)
        if aux in w.basis:
            r = w.basis.index(aux)
            if w.rhs[r] != 0:
                return Infeasible()
            e = next((j for j in range(n + m) if w.rows[r][j] != 0 and j not in w.basis), None)
            if e is None:
                return Infeasible()
            w.pivot(r, e)
        w.objs.pop()
        for row in w.rows:
            row.pop()
        obj[0].pop()

    # phase 2
    if any(obj[0][j] != 0 for j in free_nonbasic):
        return Unbounded()
    allowed = [j for j in range(n + m) if j not in free_nonbasic]
    if not w.primal(lambda: obj[0], allowed):
        return Unbounded()

    _refine_lexicographic(w, obj, allowed)
    t = Tableau(
        P, c, h, w.basis, w.rows, w.rhs, obj[0], obj[1],
        P.m if cut_rows_from is None else cut_rows_from, trace,
    )
    return Optimal(t.point(), t.value, t)


def _refine_lexicographic(w: _Work, obj, allowed):
    """Maximise x_1, ..., y_q in turn over the optimal face."""
    allowed = [j for j in allowed if not obj[0][j] > 0]
    for k in range(w.n):
        if k not in w.basis:
            continue

        def cost(k=k):
            return w.rows[w.basis.index(k)]

        if not w.primal(cost, allowed):
            # unbounded along the optimal face: only possible for unbounded P
            return
        row = cost()
        allowed = [j for j in allowed if not row[j] > 0]


def resolve_after_cut(t: Tableau, cut: Cut):
    """Add ``cut`` to an optimal tableau and restore optimality by dual pivots.

    The entering column is chosen by the lexicographic dual ratio test on
    the columns ``(obj_j, x_1 coeff, ..., y_q coeff)``, which keeps the
    lexicographic optimality of the result.
    """
    n = t.n
    if any(j not in t.basis for j in range(n)):
        P2 = t.P.with_row(cut.as_row())
        return solve_lp(P2, t.c, t.h, t.cut_rows_from)
    t = t.copy()
    m_old = t.P.m
    P2 = t.P.with_row(cut.as_row())
    # new slack column everywhere
    for row in t.rows:
        row.append(ZERO)
    t.obj.append(ZERO)
    new = list(cut.alpha) + list(cut.beta) + [ZERO] * (m_old + 1)
    new[n + m_old] = Fraction(1)
    val = cut.gamma
    for i, var in enumerate(t.basis):
        f = new[var]
        if f:
            row = t.rows[i]
            new = [a - f * b for a, b in zip(new, row)]
            val -= f * t.rhs[i]
    t.rows.append(new)
    t.rhs.append(val)
    t.basis.append(n + m_old)
    t = Tableau(P2, t.c, t.h, t.basis, t.rows, t.rhs, t.obj, t.value, t.cut_rows_from, t.trace)
    return _dual_lex(t)


def _dual_lex(t: Tableau):
    n = t.n
    w = _Work(n, t.P.m, t.rows, t.rhs, t.basis, [[t.obj, t.value]], t.trace)
    while True:
        r, worst = None, ZERO
        for i in range(len(w.rows)):
            if w.constrained(i) and w.rhs[i] < worst:
                r, worst = i, w.rhs[i]
        if r is None:
            break
        struct_rows = [w.basis.index(k) for k in range(n)]
        basic = set(w.basis)
        best, best_key = None, None
        for j in range(w.width):
            a = w.rows[r][j]
            if j in basic or not a < 0:
                continue
            col = [w.objs[0][0][j]] + [w.rows[s][j] for s in struct_rows]
            key = [v / -a for v in col]
            if best is None or _lex_less(key, best_key):
                best, best_key = j, key
        if best is None:
            return Infeasible()
        w.pivot(r, best)
    obj = w.objs[0]
    out = Tableau(t.P, t.c, t.h, w.basis, w.rows, w.rhs, obj[0], obj[1], t.cut_rows_from, w.trace)
    return Optimal(out.point(), out.value, out)


def lp_value(P: Polyhedron, c, h=()):
    """Optimal value, or None if infeasible, or +inf marker string if unbounded."""
    res = solve_lp(P, c, h)
    if isinstance(res, Optimal):
        return res.value
    if isinstance(res, Infeasible):
        return None
    return "unbounded"


def check_point(P: Polyhedron, pt: Point) -> bool:
    return all(r.value(pt.x, pt.y) <= r.rhs for r in P.rows)


__all__ = [
    "Tableau", "Optimal", "Infeasible", "Unbounded", "solve_lp", "resolve_after_cut",
    "lp_value", "check_point", "Row", "dot",
]
