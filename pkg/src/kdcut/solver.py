"""The exact cutting-plane loop: Gomory mixed-integer cuts until the LP bound
drops, then an objective-direction disjunctive cut, repeated until the LP
optimum is mixed-integer feasible or the relaxation is empty.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from . import lp
from .disjunction import ObjectiveCutReport, objective_cut
from .gmi import GmiSource, NoIntegerPoint, gmi_cut, gmi_source, least_index_fractional
from .model import Cut, MilpInstance, Point, is_integer_point, scale_to_integer_data

log = logging.getLogger(__name__)


class UnboundedInstance(ValueError):
    pass


@dataclass(frozen=True)
class SolveOptions:
    max_outer_iterations: int = 200
    max_inner_iterations: int = 500
    trace: bool = False
    include_x0: bool = False
    # "round": one cut per fractional integer variable of the current tableau,
    # least index first; "least-index": only the least-index cut
    gmi_mode: str = "round"
    # "current": objective cut from the system with all cuts so far;
    # "both": also from the original rows, keeping the smaller bound
    objective_rows: str = "both"

    def __post_init__(self):
        if self.max_outer_iterations < 1 or self.max_inner_iterations < 1:
            raise ValueError("iteration limits must be at least 1")
        if self.gmi_mode not in ("round", "least-index"):
            raise ValueError("gmi_mode must be 'round' or 'least-index'")
        if self.objective_rows not in ("current", "both"):
            raise ValueError("objective_rows must be 'current' or 'both'")


@dataclass(frozen=True)
class LpSolved:
    value: Fraction
    point: Point


@dataclass(frozen=True)
class GmiCutAdded:
    cut: Cut
    source: GmiSource


@dataclass(frozen=True)
class ObjectiveCut:
    gamma_hat: Fraction  # in the instance's objective units
    report: ObjectiveCutReport
    added: bool


@dataclass(frozen=True)
class Terminal:
    outcome: str


@dataclass
class MilpResult:
    status: str  # "optimal" | "infeasible" | "iteration-limit"
    point: Point = None
    value: Fraction = None
    trace: list = field(default_factory=list)

    def cuts(self):
        """Every inequality the run appended, in order."""
        out = []
        for ev in self.trace:
            if isinstance(ev, GmiCutAdded):
                out.append(ev.cut)
            elif isinstance(ev, ObjectiveCut) and ev.added:
                out.append(ev.report.cut())
        return out


def check_bounded(inst: MilpInstance) -> bool:
    """Every variable is bounded above and below over ``P`` (or ``P`` is empty)."""
    P = inst.polyhedron()
    n = inst.p + inst.q
    for j in range(n):
        for sign in (1, -1):
            e = [Fraction(0)] * n
            e[j] = Fraction(sign)
            res = lp.solve_lp(P, e[: inst.p], e[inst.p:])
            if isinstance(res, lp.Infeasible):
                return True
            if isinstance(res, lp.Unbounded):
                return False
    return True


def solve(inst: MilpInstance, opts: SolveOptions = SolveOptions()) -> MilpResult:
    if not check_bounded(inst):
        raise UnboundedInstance("instance is unbounded")
    scaled, mult = scale_to_integer_data(inst)
    c, h = scaled.c, scaled.h
    if opts.include_x0 and any(h):
        raise ValueError("x_0 may only be cut when the objective has no continuous part")
    P = scaled.polyhedron()
    base_rows = P.m
    trace = []

    def finish(status, res=None):
        trace.append(Terminal(status))
        if status != "optimal":
            return MilpResult(status, trace=trace)
        pt = res.point
        return MilpResult(status, pt, inst.objective(pt.x, pt.y), trace)

    def record(res):
        trace.append(LpSolved(res.value / mult, res.point))
        log.debug("lp value %s at %s", res.value / mult, res.point)

    res = lp.solve_lp(P, c, h, cut_rows_from=base_rows)
    if isinstance(res, lp.Infeasible):
        return finish("infeasible")
    record(res)
    gamma_star = res.value
    outer = 0
    objective_zero = not any(c) and not any(h)

    while not is_integer_point(res.point):
        outer += 1
        if outer > opts.max_outer_iterations:
            return finish("iteration-limit")
        gamma = gamma_star
        inner = 0
        while gamma_star == gamma:
            inner += 1
            if inner > opts.max_inner_iterations:
                return finish("iteration-limit")
            t = res.tableau
            first = least_index_fractional(t, opts.include_x0)
            sources = [first]
            if opts.gmi_mode == "round":
                sources += [
                    j for j in range(first + 1, inst.p + 1)
                    if t.var_value(j - 1).denominator != 1
                ]
            try:
                cuts = [(gmi_cut(t, j), gmi_source(t, j)) for j in sources]
            except NoIntegerPoint:
                return finish("infeasible")
            for cut, src in cuts:
                trace.append(GmiCutAdded(cut, src))
                res = lp.resolve_after_cut(res.tableau, cut)
                if isinstance(res, lp.Infeasible):
                    return finish("infeasible")
            record(res)
            gamma_star = res.value
            if is_integer_point(res.point):
                return finish("optimal", res)
        if objective_zero:
            continue
        report = objective_cut(res.tableau.P, c, h, gamma_star, "weak")
        if opts.objective_rows == "both":
            # the original rows have the same mixed-integer hull, so their cut is valid too
            alt = objective_cut(P, c, h, gamma_star, "weak")
            if alt.gamma_hat < report.gamma_hat:
                report = alt
        add = report.gamma_hat < gamma_star
        trace.append(ObjectiveCut(report.gamma_hat / mult, report, add))
        if add:
            res = lp.resolve_after_cut(res.tableau, report.cut())
            if isinstance(res, lp.Infeasible):
                return finish("infeasible")
            record(res)
            gamma_star = res.value
    return finish("optimal", res)
