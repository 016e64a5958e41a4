"""Exact rational scalars and the small dense linear algebra built on them.

Scalars are :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator and uses Python's unbounded integers.
Vectors are tuples of fractions, matrices are tuples of such rows.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]
RatMatrix = tuple  # tuple[RatVector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def canonicalize(n: int, d: int) -> Fraction:
    """Return ``n/d`` in lowest terms with the sign on the numerator."""
    if d == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(n, d)


def floor_rat(r) -> int:
    r = Fraction(r)
    return r.numerator // r.denominator


def ceil_rat(r) -> int:
    r = Fraction(r)
    return -((-r.numerator) // r.denominator)


def frac_part(r) -> Fraction:
    r = Fraction(r)
    return r - floor_rat(r)


def is_integral(r) -> bool:
    return Fraction(r).denominator == 1


def parse_rational(token: str) -> Fraction:
    """Parse ``n`` or ``n/d`` (optional leading ``-``, no inner whitespace)."""
    t = token.strip()
    if not t or t != token or any(ch.isspace() for ch in t):
        raise ValueError(f"malformed rational {token!r}")
    body = t[1:] if t.startswith("-") else t
    num, sep, den = body.partition("/")
    if not num.isdigit() or (sep and not den.isdigit()):
        raise ValueError(f"malformed rational {token!r}")
    n = int(num)
    if t.startswith("-"):
        n = -n
    if not sep:
        return Fraction(n)
    d = int(den)
    if d == 0:
        raise ValueError(f"malformed rational {token!r}: division by zero")
    return canonicalize(n, d)


def fmt(r) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def vec(values: Iterable) -> tuple:
    return tuple(Fraction(v) for v in values)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), ZERO)


def denominators_lcm(values: Iterable) -> int:
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def primitive_integer_vector(v: Sequence) -> tuple:
    """Scale a nonzero rational vector to the integer vector with gcd 1.

    The direction is preserved (the scale factor is positive).
    """
    v = vec(v)
    if all(x == 0 for x in v):
        raise ValueError("zero vector has no primitive representative")
    m = denominators_lcm(v)
    ints = [int(x * m) for x in v]
    g = reduce(gcd, (abs(i) for i in ints), 0)
    return tuple(i // g for i in ints)


def primitive_scale(v: Sequence) -> Fraction:
    """Positive factor ``s`` with ``s * v == primitive_integer_vector(v)``."""
    v = vec(v)
    prim = primitive_integer_vector(v)
    for a, b in zip(v, prim):
        if a != 0:
            return Fraction(b) / a
    raise AssertionError("unreachable")


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix."""
    work = []
    for r in rows:
        m = denominators_lcm(r)
        work.append([int(Fraction(v) * m) for v in r])
    return int_rank(work)


def int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][col]), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        pr = work[r]
        p = pr[col]
        for i in range(r + 1, len(work)):
            f = work[i][col]
            if f:
                row = [p * a - f * b for a, b in zip(work[i], pr)]
                g = reduce(gcd, row, 0)
                work[i] = [a // g for a in row] if g > 1 else row
        r += 1
        if r == len(work):
            break
    return r


def solve_square(M: Sequence[Sequence], rhs: Sequence):
    """Solve ``M z = rhs`` exactly; ``None`` if ``M`` is singular."""
    n = len(M)
    work = [list(map(Fraction, row)) + [Fraction(b)] for row, b in zip(M, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if work[i][col] != 0), None)
        if piv is None:
            return None
        work[col], work[piv] = work[piv], work[col]
        pr = work[col]
        inv = 1 / pr[col]
        pr = [a * inv for a in pr]
        work[col] = pr
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], pr)]
    return tuple(work[i][n] for i in range(n))
