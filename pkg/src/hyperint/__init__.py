"""Integrality of hypergeometric series with rational or quadratic parameters."""

from hyperint.exact import QuadraticNumber, christol_leq, frac_bracket, lcm_denominators, quad_norm
from hyperint.rational_criterion import RationalSystem, christol_delta, decide_christol, decide_thm12
from hyperint.quadratic_criterion import (
    QuadraticSystem,
    breakpoints,
    check_statement,
    compute_groups,
    decide_thm14,
    decompose,
    delta_extended,
)
from hyperint.report import CriterionReport

SCHEMA_VERSION = "hyperint/1"

__all__ = [
    "CriterionReport",
    "QuadraticNumber",
    "QuadraticSystem",
    "RationalSystem",
    "SCHEMA_VERSION",
    "breakpoints",
    "check_statement",
    "christol_delta",
    "christol_leq",
    "compute_groups",
    "decide_christol",
    "decide_thm12",
    "decide_thm14",
    "decompose",
    "delta_extended",
    "frac_bracket",
    "lcm_denominators",
    "quad_norm",
]
