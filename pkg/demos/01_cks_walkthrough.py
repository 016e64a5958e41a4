"""Solve the Cook-Kannan-Schrijver instance and look inside the objective cut."""
from kdcut import SolveOptions, builtin, objective_cut, project_x, solve
from kdcut.io import format_cut, format_event, format_objective_report
from kdcut.rational import fmt

inst = builtin("cks")
P = inst.polyhedron()

# x-projection of P: one row per extreme ray of {v >= 0 : v G = 0}
for row in project_x(P).rows:
    print("projected", " ".join(map(fmt, row.d)), "<=", fmt(row.rhs), "ray", row.from_ray.v)

# the rounded projection at a fractional level drops the bound to the next integer-feasible one
for level in ("1", "2/3", "1/2"):
    rep = objective_cut(P, inst.c, inst.h, level)
    print(f"level {level}: gamma_hat {fmt(rep.gamma_hat)}, cut {format_cut(rep.cut())}")
print(format_objective_report(objective_cut(P, inst.c, inst.h, "1/2")), end="")

# full run, with every event
res = solve(inst, SolveOptions(trace=True))
for ev in res.trace:
    print(format_event(ev))
print(res.status, fmt(res.value), "x", [fmt(v) for v in res.point.x], "y", [fmt(v) for v in res.point.y])
