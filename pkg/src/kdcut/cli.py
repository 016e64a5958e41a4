"""Command-line front end.

Instance arguments accept a file path, ``-`` for standard input, or
``builtin:<name>``.
"""

import argparse
import logging
import sys

from . import io
from .disjunction import DisjunctionError, certify_cut, is_valid_disjunction, objective_cut
from .model import Cut, scale_to_integer_data
from .oracle import BUILTINS, builtin, expon_instance, oracle_solve
from .projection import minimize_rows, project_x
from .rational import parse_rational
from .solver import SolveOptions, UnboundedInstance, solve


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(path):
    if path.startswith("builtin:"):
        return builtin(path[len("builtin:"):])
    return io.parse_milp(_read_text(path))


def _parse_cut(text, p, q):
    tok = text.split()
    if len(tok) < 2 or tok[-2] != "<=":
        raise io.ParseError(1, "cut must end in '<= rhs'")
    alpha, beta = io.split_bar(tok[:-2], 1, p, q)
    return Cut(alpha, beta, parse_rational(tok[-1]))


def cmd_solve(args):
    inst = _load(args.file)
    opts = SolveOptions(
        max_outer_iterations=args.max_outer,
        max_inner_iterations=args.max_inner,
        trace=args.trace,
        gmi_mode=args.gmi,
        objective_rows=args.objective_rows,
    )
    res = solve(inst, opts)
    sys.stdout.write(io.format_result(res, args.trace))
    return {"optimal": 0, "infeasible": 1}.get(res.status, 2)


def cmd_oracle(args):
    res = oracle_solve(_load(args.file))
    sys.stdout.write(io.format_result(res))
    return 0 if res.status == "optimal" else 1


def cmd_project(args):
    S = project_x(_load(args.file).polyhedron())
    if args.minimize:
        S = minimize_rows(S)
    sys.stdout.write(io.format_projection(S))
    return 0


def cmd_objective_cut(args):
    # the objective is scaled with the data, so gamma is too
    inst, mult = scale_to_integer_data(_load(args.file))
    rep = objective_cut(inst.polyhedron(), inst.c, inst.h, parse_rational(args.gamma) * mult, args.mode)
    if mult != 1:
        sys.stdout.write(f"objective-scale {mult}\n")
    sys.stdout.write(io.format_objective_report(rep))
    return 0


def cmd_check_disjunction(args):
    v = is_valid_disjunction(io.parse_disjunction(_read_text(args.file)), args.bound)
    line = f"verdict {v.status}"
    if v.witness is not None:
        line += " witness " + " ".join(str(x) for x in v.witness)
    sys.stdout.write(line + "\n")
    return {"valid": 0, "invalid": 1}.get(v.status, 2)


def cmd_certify_cut(args):
    inst = _load(args.file)
    D = io.parse_disjunction(_read_text(args.disjunction))
    if D.p != inst.p:
        raise ValueError("disjunction and instance have different p")
    ok = certify_cut(inst.polyhedron(), _parse_cut(args.cut, inst.p, inst.q), D)
    sys.stdout.write(f"certified {'true' if ok else 'false'}\n")
    return 0 if ok else 1


def cmd_gen_expon(args):
    sys.stdout.write(io.format_milp(expon_instance(args.n)))
    return 0


def cmd_builtin(args):
    sys.stdout.write(io.format_milp(builtin(args.name)))
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="kdcut", description="Exact cutting planes for bounded MILPs.")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run the cutting-plane solver")
    s.add_argument("file")
    s.add_argument("--trace", action="store_true")
    s.add_argument("--max-outer", type=int, default=200)
    s.add_argument("--max-inner", type=int, default=500)
    s.add_argument("--gmi", choices=("round", "least-index"), default="round",
                   help="cuts per inner step: every fractional row, or only the least index")
    s.add_argument("--objective-rows", choices=("both", "current"), default="both",
                   help="derive the objective cut from the current system only, or also from the original rows")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("project", help="project P onto the x variables")
    s.add_argument("file")
    s.add_argument("--minimize", action="store_true", help="drop redundant rows")
    s.set_defaults(func=cmd_project)

    s = sub.add_parser("objective-cut", help="objective-direction disjunctive cut at level gamma")
    s.add_argument("file")
    s.add_argument("--gamma", required=True)
    s.add_argument("--mode", choices=("weak", "strict"), default="weak")
    s.set_defaults(func=cmd_objective_cut)

    s = sub.add_parser("check-disjunction", help="decide validity of a disjunction file")
    s.add_argument("file")
    s.add_argument("--bound", type=int, default=10)
    s.set_defaults(func=cmd_check_disjunction)

    s = sub.add_parser("certify-cut", help="check a cut against every term of a disjunction")
    s.add_argument("file")
    s.add_argument("disjunction")
    s.add_argument("--cut", required=True, help="e.g. '0 0 | 1 <= 0'")
    s.set_defaults(func=cmd_certify_cut)

    s = sub.add_parser("oracle", help="brute-force optimum")
    s.add_argument("file")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen-expon", help="write the exponential-facet polytope")
    s.add_argument("n", type=int)
    s.set_defaults(func=cmd_gen_expon)

    s = sub.add_parser("builtin", help="write a built-in instance")
    s.add_argument("name", choices=BUILTINS)
    s.set_defaults(func=cmd_builtin)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except (ValueError, KeyError, OSError, UnboundedInstance, DisjunctionError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        sys.stderr.write(f"error: {msg}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
