"""Exact finite-string numbers R_n, their complex pairs C_n, and R_n space."""
from .arith import (CnNumber, UnsupportedOperation, add_n, cn_add, cn_mul,
                    div_n, mul_n, sub_n)
from .core import (HierarchyReading, LiteralError, ParamMismatchError, Reading,
                   RnError, RnNumber, RnParams, ZeroHasNoPredecessor,
                   ZeroHasNoSuccessor, compare, enumerate_values, format_literal,
                   hierarchy_reading, negate, parse_literal, predecessor,
                   round_to_nearest, successor, value_of)
from .space import (SpacePoint, F_greater, F_less, contract_magnitude,
                    distinguishability_report, expand_magnitude, iterate_F,
                    neighbors, pick_epsilon, scale_shift, singularity_class)

__version__ = "0.1.0"

__all__ = [
    "CnNumber", "UnsupportedOperation", "add_n", "cn_add", "cn_mul", "div_n",
    "mul_n", "sub_n",
    "HierarchyReading", "LiteralError", "ParamMismatchError", "Reading",
    "RnError", "RnNumber", "RnParams", "ZeroHasNoPredecessor",
    "ZeroHasNoSuccessor", "compare", "enumerate_values", "format_literal",
    "hierarchy_reading", "negate", "parse_literal", "predecessor",
    "round_to_nearest", "successor", "value_of",
    "SpacePoint", "F_greater", "F_less", "contract_magnitude",
    "distinguishability_report", "expand_magnitude", "iterate_F", "neighbors",
    "pick_epsilon", "scale_shift", "singularity_class",
]
