"""Ground truth by exhaustive enumeration, and the fixed test instances.

The oracle never uses the simplex code for optimisation: the integer box
comes from brute-force vertex enumeration of ``P`` and, for each integer
``x``, the best ``y`` is taken over the brute-force vertices of
``{y : G y <= b - A x}``.  Only the boundedness precondition is checked
with an LP.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .model import MilpInstance, Point, Polyhedron, Row
from .rational import ZERO, ceil_rat, dot, floor_rat, solve_square


@dataclass(frozen=True)
class OracleResult:
    status: str  # "optimal" | "infeasible"
    point: Point = None
    value: Fraction = None


def brute_vertices(rows, rhs, dim):
    """All vertices of ``{z : rows z <= rhs}`` by solving every square subsystem."""
    out = set()
    for idx in itertools.combinations(range(len(rows)), dim):
        z = solve_square([rows[i] for i in idx], [rhs[i] for i in idx])
        if z is None:
            continue
        if all(dot(r, z) <= b for r, b in zip(rows, rhs)):
            out.add(z)
    return sorted(out)


def integer_box(inst: MilpInstance):
    """Integer ranges of every x_i over ``P``; None when ``P`` is empty."""
    n = inst.p + inst.q
    rows = [a + g for a, g in zip(inst.A, inst.G)]
    verts = brute_vertices(rows, inst.b, n)
    if not verts:
        return None
    ranges = []
    for i in range(inst.p):
        lo = ceil_rat(min(v[i] for v in verts))
        hi = floor_rat(max(v[i] for v in verts))
        ranges.append(range(lo, hi + 1))
    return ranges


def _y_vertices(inst: MilpInstance, x):
    rhs = [b - dot(a, x) for a, b in zip(inst.A, inst.b)]
    if inst.q == 0:
        return [()] if all(r >= 0 for r in rhs) else []
    return brute_vertices(inst.G, rhs, inst.q)


def feasible_points(inst: MilpInstance):
    """Yield ``(x, y)`` for every integer x in P's box and every vertex y of its fibre.

    A linear inequality holds on all mixed-integer points of ``P`` iff it
    holds on all of these.
    """
    from .solver import UnboundedInstance, check_bounded

    if not check_bounded(inst):
        raise UnboundedInstance("oracle needs a bounded instance")
    box = integer_box(inst)
    if box is None:
        return
    for x in itertools.product(*box):
        x = tuple(Fraction(v) for v in x)
        for y in _y_vertices(inst, x):
            yield x, y


def oracle_solve(inst: MilpInstance) -> OracleResult:
    best = None
    for x, y in feasible_points(inst):
        val = inst.objective(x, y)
        if best is None or val > best[0]:
            best = (val, x, y)
    if best is None:
        return OracleResult("infeasible")
    return OracleResult("optimal", Point(best[1], best[2]), best[0])


def gen_expon(n: int) -> Polyhedron:
    """``a x - pi(a) x_{n+1} <= 1`` for ``a`` in {+1,-1}^n, and ``0 <= x_{n+1} <= 2``.

    ``pi(a)`` is the number of +1 entries minus one.  The polytope is
    integral, has no interior lattice point, and every facet has a
    lattice point in its relative interior.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    rows = []
    for a in itertools.product((1, -1), repeat=n):
        pi = sum(1 for v in a if v == 1) - 1
        rows.append(Row(tuple(a) + (-pi,), (), 1))
    rows.append(Row((0,) * n + (-1,), (), 0))
    rows.append(Row((0,) * n + (1,), (), 2))
    return Polyhedron(n + 1, 0, rows)


def expon_instance(n: int) -> MilpInstance:
    return MilpInstance.from_polyhedron(gen_expon(n), [0] * (n + 1), [])


def lattice_points(P: Polyhedron, box):
    """Integer points of ``P`` (q = 0) inside ``box`` (one range per coordinate)."""
    return [x for x in itertools.product(*box) if P.contains(x)]


def _inst(rows, c, h, p, q):
    return MilpInstance([r[0] for r in rows], [r[1] for r in rows], [r[2] for r in rows], c, h, p, q)


def builtin(name: str) -> MilpInstance:
    """Instances from the literature.

    ``cks`` is the Cook-Kannan-Schrijver example with ``y >= -1`` appended
    so that ``P`` is bounded; ``cone4`` is the unbounded cone with apex
    (1/2, 1/2, 1/2); ``owen-mehrotra`` is the pure integer program on which
    plain Gomory cuts stall.
    """
    if name == "cks":
        rows = [((-1, 0), (1,), 0), ((0, -1), (1,), 0), ((1, 1), (1,), 2), ((0, 0), (-1,), 1)]
        return _inst(rows, (0, 0), (1,), 2, 1)
    if name == "cone4":
        rows = [((-1, 0), (1,), 0), ((0, -1), (1,), 0), ((1, 0), (1,), 1), ((0, 1), (1,), 1)]
        return _inst(rows, (0, 0), (1,), 2, 1)
    if name == "owen-mehrotra":
        rows = [((8, 12), (), 27), ((8, 3), (), 18), ((-1, 0), (), 0), ((0, -1), (), 0)]
        return _inst(rows, (1, 1), (), 2, 0)
    raise KeyError(f"unknown builtin instance {name!r}")


BUILTINS = ("cks", "cone4", "owen-mehrotra")


def random_instance(rng: random.Random, p: int, q: int, m: int, lo: int = -4, hi: int = 4) -> MilpInstance:
    def draw(k):
        return [rng.randint(lo, hi) for _ in range(k)]

    return MilpInstance(
        [draw(p) for _ in range(m)], [draw(q) for _ in range(m)], draw(m), draw(p), draw(q), p, q
    )


def random_bounded_corpus(seed: int, count: int, max_p=3, max_q=2, max_m=6, lo=-4, hi=4, planted=0.7):
    """``count`` bounded instances by rejection sampling, all entries in ``[lo, hi]``.

    A fraction ``planted`` of them get right-hand sides chosen so that a
    random integer point is feasible; the rest are unconstrained draws and
    are often infeasible.
    """
    from .solver import check_bounded

    rng = random.Random(seed)
    out = []
    while len(out) < count:
        p = rng.randint(1, max_p)
        q = rng.randint(0, max_q)
        if p + q + 1 > max_m:
            continue
        m = rng.randint(p + q + 1, max_m)
        inst = random_instance(rng, p, q, m, lo, hi)
        if rng.random() < planted:
            z = [rng.randint(-2, 2) for _ in range(p + q)]
            b = [dot(a + g, z) + rng.randint(0, 2) for a, g in zip(inst.A, inst.G)]
            if any(not lo <= v <= hi for v in b):
                continue
            inst = MilpInstance(inst.A, inst.G, b, inst.c, inst.h, p, q)
        if check_bounded(inst):
            out.append(inst)
    return out


def random_polyhedron(rng: random.Random, p: int, q: int, m: int, lo: int = -5, hi: int = 5) -> Polyhedron:
    rows = [
        Row([rng.randint(lo, hi) for _ in range(p)], [rng.randint(lo, hi) for _ in range(q)], rng.randint(lo, hi))
        for _ in range(m)
    ]
    return Polyhedron(p, q, rows)


__all__ = [
    "OracleResult", "oracle_solve", "feasible_points", "integer_box", "brute_vertices",
    "gen_expon", "expon_instance", "lattice_points", "builtin", "BUILTINS",
    "random_instance", "random_bounded_corpus", "random_polyhedron", "ZERO",
]
