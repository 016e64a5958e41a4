"""Disjunctions: validity, certificates, and a disjunction read off a cut."""
from kdcut import Cut, Disjunction, builtin, certify_cut, disjunction_from_cut, is_valid_disjunction
from kdcut.io import format_disjunction

# four terms whose body is the open unit square around (1/2, 1/2)
D = Disjunction([[-1, -1], [-1, 1], [1, -1], [1, 1]], [-2, -1, -1, 0])
print("square 4-term:", is_valid_disjunction(D).status)

# dropping a term leaves lattice points uncovered
v = is_valid_disjunction(Disjunction(D.d[:3], D.delta[:3]))
print("three of them:", v.status, "witness", v.witness)

# on the cone with apex (1/2, 1/2, 1/2) the square certifies y <= 0
cut = Cut((0, 0), (1,), 0)
print("cone certified:", certify_cut(builtin("cone4").polyhedron(), cut, D))

# y <= 0 on CKS: the square does not certify it, the triangle split does
P = builtin("cks").polyhedron()
T = Disjunction([[1, 0], [0, 1], [-1, -1]], [0, 0, -2])
print("square certifies:", certify_cut(P, cut, D))
print("triangle valid:", is_valid_disjunction(T).status, "certifies:", certify_cut(P, cut, T))

# the same cut, asking the projection for its own disjunction
D2 = disjunction_from_cut(P, cut)
print(format_disjunction(D2), end="")
print("derived valid:", is_valid_disjunction(D2).status, "certifies:", certify_cut(P, cut, D2))
