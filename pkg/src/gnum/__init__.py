"""gnum: a numerical laboratory for Beurling generalized number systems."""

from .errors import (
    BudgetExceededError,
    DivergenceDomainError,
    DomainError,
    GnumError,
    GridPlacementWarning,
    InvalidPrimeMeasureError,
    NonInvertibleError,
    NotNormalizedError,
    SpacingMismatchError,
    UnsupportedOperationError,
    ValidationError,
)
from .grid import LogGridMeasure, conv, cumulative, delta, exp_conv, inv_conv, log_conv, mellin
from .semigroup import (
    CountResult,
    GeneralizedInteger,
    N_count,
    enumerate_up_to,
    iter_value_omega_mu,
    lambda_of,
    mu_of,
)
from .systems import (
    PrimeSystem,
    Pi0_value,
    Pi_value,
    StepFunction,
    builtin,
    builtin_names,
    load_system,
    pi_count,
    sieve_primes,
    to_grid,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "LogGridMeasure",
    "conv",
    "exp_conv",
    "log_conv",
    "inv_conv",
    "mellin",
    "cumulative",
    "delta",
    "PrimeSystem",
    "StepFunction",
    "validate",
    "load_system",
    "builtin",
    "builtin_names",
    "pi_count",
    "Pi_value",
    "Pi0_value",
    "to_grid",
    "sieve_primes",
    "GeneralizedInteger",
    "enumerate_up_to",
    "iter_value_omega_mu",
    "N_count",
    "CountResult",
    "mu_of",
    "lambda_of",
    "GnumError",
    "SpacingMismatchError",
    "InvalidPrimeMeasureError",
    "NotNormalizedError",
    "NonInvertibleError",
    "DomainError",
    "DivergenceDomainError",
    "UnsupportedOperationError",
    "BudgetExceededError",
    "ValidationError",
    "GridPlacementWarning",
]
