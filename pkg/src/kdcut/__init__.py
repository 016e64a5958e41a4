"""Exact cutting planes for bounded mixed-integer linear programs."""

from .disjunction import (
    Disjunction, DisjunctionError, ObjectiveCutReport, Verdict,
    certify_cut, disjunction_from_cut, is_valid_disjunction, objective_cut,
)
from .gmi import gmi_cut, least_index_fractional
from .io import format_milp, parse_disjunction, parse_milp
from .lp import Infeasible, Optimal, Unbounded, resolve_after_cut, solve_lp
from .model import Cut, MilpInstance, Point, Polyhedron, Row, add_cut, scale_to_integer_data
from .oracle import builtin, gen_expon, oracle_solve
from .projection import cone_extreme_rays, fm_project, poly_equal, project_x
from .solver import MilpResult, SolveOptions, UnboundedInstance, check_bounded, solve

__version__ = "0.1.0"
