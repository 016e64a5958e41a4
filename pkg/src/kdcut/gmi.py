"""Gomory mixed-integer cuts read off an optimal lexicographic tableau."""

from dataclasses import dataclass
from fractions import Fraction

from .lp import Tableau
from .model import Cut
from .rational import ZERO, frac_part


class NoIntegerPoint(ValueError):
    """The source row proves that no mixed-integer point exists."""


@dataclass(frozen=True)
class GmiSource:
    """Where a cut came from: variable index (0 is the objective) and its fractional part."""

    row_index: int
    fractional_part: Fraction

    def __post_init__(self):
        if not 0 < self.fractional_part < 1:
            raise ValueError("fractional part must lie strictly between 0 and 1")


def _value(t: Tableau, j: int) -> Fraction:
    return t.value if j == 0 else t.var_value(j - 1)


def least_index_fractional(t: Tableau, include_x0: bool = False):
    """Smallest fractional integer-constrained index, or None.

    Index 0 is the objective value x_0 (only looked at when ``include_x0``),
    indices 1..p are the integer variables x_1..x_p.
    """
    start = 0 if include_x0 else 1
    for j in range(start, t.P.p + 1):
        if frac_part(_value(t, j)) != 0:
            return j
    return None


def _source_row(t: Tableau, j: int):
    if j == 0:
        return t.value, t.obj
    r = t.basic_row(j - 1)
    if r is None:
        return ZERO, None
    return t.rhs[r], t.rows[r]


def gmi_cut(t: Tableau, j: int) -> Cut:
    """The Gomory mixed-integer cut from the dictionary row of variable ``j``.

    The row ``x_j = a_0 - sum a_k t_k`` over the nonbasic slacks gives
    ``sum coef_k t_k >= f_0``, which is mapped back to (x, y) space via
    ``s_i = rhs_i - a_i x - g_i y``.
    """
    a0, row = _source_row(t, j)
    f0 = frac_part(a0)
    if row is None or f0 == 0:
        raise ValueError("no cut available")
    n = t.n
    if any(k not in t.basis for k in range(n)):
        raise ValueError("no cut available: a free structural variable is nonbasic")
    basic = set(t.basis)
    p, q = t.P.p, t.P.q
    alpha, beta, gamma = [ZERO] * p, [ZERO] * q, -f0
    for k in range(n, t.var_count):
        if k in basic:
            continue
        ak = row[k]
        i = k - n
        if t.integral_slack(i):
            fk = frac_part(ak)
            coef = fk if fk <= f0 else f0 * (1 - fk) / (1 - f0)
        elif ak >= 0:
            coef = ak
        else:
            coef = f0 * (-ak) / (1 - f0)
        if not coef:
            continue
        src = t.P.rows[i]
        for v in range(p):
            alpha[v] += coef * src.a[v]
        for v in range(q):
            beta[v] += coef * src.g[v]
        gamma += coef * src.rhs
    if all(v == 0 for v in alpha + beta):
        # every coefficient vanished: 0 >= f_0 > 0 is impossible
        raise NoIntegerPoint("source row admits no mixed-integer point")
    return Cut(alpha, beta, gamma).canonical()


def gmi_source(t: Tableau, j: int) -> GmiSource:
    a0, _ = _source_row(t, j)
    return GmiSource(j, frac_part(a0))
