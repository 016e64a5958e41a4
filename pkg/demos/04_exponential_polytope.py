"""The 2^n-facet polytope: integral, no interior lattice point."""
from kdcut import gen_expon
from kdcut.oracle import lattice_points
from kdcut.rational import dot

for n in (2, 3):
    P = gen_expon(n)
    box = [range(-n, n + 1)] * n + [range(0, 3)]
    pts = lattice_points(P, box)
    inside = [x for x in pts if all(dot(r.a, x) < r.rhs for r in P.rows)]
    print(f"n={n}: {P.m} rows, {len(pts)} lattice points, {len(inside)} in the interior")
