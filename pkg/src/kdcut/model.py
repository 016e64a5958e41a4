"""Problem data: MILP instances, polyhedra in (x, y) space, points and cuts.

Everything is value-semantic: operations return new objects.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .rational import ZERO, denominators_lcm, dot, is_integral, primitive_scale, vec


@dataclass(frozen=True)
class Row:
    """``a.x + g.y <= rhs``"""

    a: tuple
    g: tuple
    rhs: Fraction

    def value(self, x, y) -> Fraction:
        return dot(self.a, x) + dot(self.g, y)


@dataclass(frozen=True)
class Point:
    x: tuple
    y: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "x", vec(self.x))
        object.__setattr__(self, "y", vec(self.y))


@dataclass(frozen=True)
class Cut:
    """The inequality ``alpha.x + beta.y <= gamma``."""

    alpha: tuple
    beta: tuple
    gamma: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", vec(self.alpha))
        object.__setattr__(self, "beta", vec(self.beta))
        object.__setattr__(self, "gamma", Fraction(self.gamma))
        if all(v == 0 for v in self.alpha + self.beta):
            raise ValueError("cut has an all-zero left-hand side")

    def lhs(self, x, y) -> Fraction:
        return dot(self.alpha, x) + dot(self.beta, y)

    def satisfied_by(self, x, y) -> bool:
        return self.lhs(x, y) <= self.gamma

    def canonical(self) -> "Cut":
        """Positive rescaling with integer coefficients of gcd 1."""
        s = primitive_scale(self.alpha + self.beta + (self.gamma,))
        return Cut([s * v for v in self.alpha], [s * v for v in self.beta], s * self.gamma)

    def equivalent(self, other: "Cut") -> bool:
        """Same half-space up to a positive factor."""
        return self.canonical() == other.canonical()

    def as_row(self) -> Row:
        return Row(self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class Polyhedron:
    """``{(x, y) : a_i.x + g_i.y <= rhs_i}``; strict flags mark ``<`` rows."""

    p: int
    q: int
    rows: tuple = ()
    strict: tuple = field(default=None)

    def __post_init__(self):
        rows = tuple(Row(vec(r.a), vec(r.g), Fraction(r.rhs)) for r in self.rows)
        for r in rows:
            if len(r.a) != self.p or len(r.g) != self.q:
                raise ValueError("row length does not match (p, q)")
        strict = self.strict
        if strict is None:
            strict = (False,) * len(rows)
        strict = tuple(bool(s) for s in strict)
        if len(strict) != len(rows):
            raise ValueError("strict flags do not match the rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "strict", strict)

    @property
    def m(self) -> int:
        return len(self.rows)

    def contains(self, x, y=()) -> bool:
        for r, s in zip(self.rows, self.strict):
            v = r.value(x, y)
            if v > r.rhs or (s and v == r.rhs):
                return False
        return True

    def with_row(self, row: Row, strict: bool = False) -> "Polyhedron":
        return Polyhedron(self.p, self.q, self.rows + (row,), self.strict + (strict,))


@dataclass(frozen=True)
class MilpInstance:
    """``max c.x + h.y  s.t.  A x + G y <= b,  x integral``."""

    A: tuple
    G: tuple
    b: tuple
    c: tuple
    h: tuple
    p: int
    q: int

    def __post_init__(self):
        A = tuple(vec(r) for r in self.A)
        G = tuple(vec(r) for r in self.G)
        b, c, h = vec(self.b), vec(self.c), vec(self.h)
        if not (len(A) == len(G) == len(b)):
            raise ValueError("A, G and b must have the same number of rows")
        if len(c) != self.p or len(h) != self.q:
            raise ValueError("objective length does not match (p, q)")
        if any(len(r) != self.p for r in A) or any(len(r) != self.q for r in G):
            raise ValueError("constraint row length does not match (p, q)")
        for name, val in (("A", A), ("G", G), ("b", b), ("c", c), ("h", h)):
            object.__setattr__(self, name, val)

    @property
    def m(self) -> int:
        return len(self.b)

    @classmethod
    def from_polyhedron(cls, P: Polyhedron, c, h) -> "MilpInstance":
        return cls(
            [r.a for r in P.rows], [r.g for r in P.rows], [r.rhs for r in P.rows],
            c, h, P.p, P.q,
        )

    def polyhedron(self) -> Polyhedron:
        return Polyhedron(self.p, self.q, [Row(a, g, r) for a, g, r in zip(self.A, self.G, self.b)])

    def objective(self, x, y=()) -> Fraction:
        return dot(self.c, x) + dot(self.h, y)


def scale_to_integer_data(inst: MilpInstance):
    """Scale rows and objective to integral A, G, b, c.

    Returns ``(scaled, multiplier)``; objective values of the scaled
    instance divided by ``multiplier`` are values of the original one.
    """
    A, G, b = [], [], []
    for a, g, r in zip(inst.A, inst.G, inst.b):
        k = denominators_lcm(a + g + (r,))
        A.append([k * v for v in a])
        G.append([k * v for v in g])
        b.append(k * r)
    mult = Fraction(denominators_lcm(inst.c))
    scaled = MilpInstance(
        A, G, b, [mult * v for v in inst.c], [mult * v for v in inst.h], inst.p, inst.q
    )
    return scaled, mult


def is_integer_point(pt: Point) -> bool:
    return all(is_integral(v) for v in pt.x)


def add_cut(P: Polyhedron, cut: Cut) -> Polyhedron:
    return P.with_row(cut.as_row())


def cut_from_row(row: Row) -> Cut:
    return Cut(row.a, row.g, row.rhs)


__all__ = [
    "Row", "Point", "Cut", "Polyhedron", "MilpInstance", "scale_to_integer_data",
    "is_integer_point", "add_cut", "cut_from_row", "ZERO",
]
