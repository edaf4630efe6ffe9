"""Nielsen's beta function beta^(m)(x) with certified error bounds."""

from .core import (
    CATALAN,
    CONSTANTS,
    EPS,
    LN2,
    M_CAP,
    PI,
    ZETA2,
    BackendPolicy,
    Constants,
    DomainError,
    EvalConfig,
    EvalPoint,
    Method,
    NielsenError,
    NonConvergence,
    NonFiniteValue,
    Op,
    OrderTooLarge,
    TermBudgetExceeded,
    ToleranceUnreachable,
    ValueWithError,
    combine_error,
    map_monotone,
)
from .evaluator import (
    EvalTrace,
    SpecialValue,
    beta,
    lookup_special,
    nielsen_beta,
    reflection_eval,
    special_values,
)
from .polygamma import (
    PolygammaRequest,
    beta_via_polygamma,
    digamma,
    euler_beta,
    log_eulerbeta_derivative,
    polygamma,
)
from .quadrature import QuadResult, beta_quad_laplace, beta_quad_unit
from .series import (
    SeriesResult,
    beta_deriv_at_half,
    beta_deriv_at_one,
    beta_series,
    catalan_from_representations,
    eta,
    oracle_partial_sums,
)
from .harness import CheckReport, GridSpec, SuiteConfig, run_all

__version__ = "0.1.0"
