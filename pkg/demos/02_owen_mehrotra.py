"""Owen-Mehrotra: compare the cutting-plane run with the brute-force oracle."""
from kdcut import SolveOptions, builtin, oracle_solve, solve
from kdcut.io import format_event

inst = builtin("owen-mehrotra")
truth = oracle_solve(inst)
print("oracle", truth.value, truth.point)

for mode in ("round", "least-index"):
    res = solve(inst, SolveOptions(trace=True, gmi_mode=mode))
    print(f"--- gmi {mode}: {res.status} {res.value}, {len(res.cuts())} cuts")
    for ev in res.trace:
        print("  ", format_event(ev))
    assert res.value == truth.value
