"""Hadamard fractional integrals, derivatives and inequality checks.

Functions are passed either as expression text in the variable ``x`` (for example
``"ln(x)^2 + 1"``) or as Python callables of one float.
"""

from ._core import (
    DEFAULT_NODES,
    ConvergenceError,
    EvaluationError,
    ParseError,
    PreconditionError,
    constant_polya_szego,
    eval_expr,
    fuzz,
    gamma,
    hadamard_derivative,
    hadamard_integral,
    hadamard_integral_graded,
    hadamard_rule,
    minkowsky_related,
    parse_expr,
    power_mean_check,
    power_rule_derivative,
    power_rule_integral,
    semigroup_residual,
)

__all__ = [
    "DEFAULT_NODES",
    "ConvergenceError",
    "EvaluationError",
    "ParseError",
    "PreconditionError",
    "constant_polya_szego",
    "eval_expr",
    "fuzz",
    "gamma",
    "hadamard_derivative",
    "hadamard_integral",
    "hadamard_integral_graded",
    "hadamard_rule",
    "minkowsky_related",
    "parse_expr",
    "power_mean_check",
    "power_rule_derivative",
    "power_rule_integral",
    "semigroup_residual",
]
