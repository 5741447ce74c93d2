"""Satisfiability and unsatisfiable cores for temporal formulas over
finite traces."""

from .activation import (
    REDUCED_TO_FALSE,
    SAT,
    UNKNOWN,
    UNSAT,
    UcResult,
    activate,
)
from .bmc import algorithm2_uc
from .formula import Spec, make_spec
from .native import algorithm3_uc
from .parser import ParseError, load_spec, parse, parse_spec, parse_trace
from .semantics import OracleBudgetError, evaluate, oracle_all_min_ucs, oracle_sat
from .symbolic import algorithm1_uc
from .translations import ltlf_to_ltl, remove_past, to_nnf, xnf
from .trp import algorithm4_uc

__version__ = "0.1.0"

__all__ = [
    "SAT", "UNSAT", "UNKNOWN", "REDUCED_TO_FALSE",
    "UcResult", "Spec", "ParseError", "OracleBudgetError",
    "parse", "parse_spec", "parse_trace", "load_spec", "make_spec",
    "evaluate", "oracle_sat", "oracle_all_min_ucs",
    "to_nnf", "xnf", "ltlf_to_ltl", "remove_past", "activate",
    "algorithm1_uc", "algorithm2_uc", "algorithm3_uc", "algorithm4_uc",
]
