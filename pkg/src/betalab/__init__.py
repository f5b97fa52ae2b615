"""betalab: a laboratory for the Euler beta function and its relatives.

The package evaluates the classical special functions (log-gamma, gamma,
beta, polygamma, Hurwitz zeta) from first principles, sums the slowly
convergent series that tie the beta function to Euler's constant and the
digamma function, integrates the underlying kernels with tanh-sinh
quadrature, extrapolates the v -> 0 pole limits by Richardson's scheme, and
cross-checks everything through a registry of verifiable identities with
deterministic table / JSON / CSV reports.

Everything is pure Python on IEEE doubles: no third-party dependencies, no
hidden state, and bit-for-bit reproducible output.
"""

from __future__ import annotations

from .core_special import (
    EULER_GAMMA,
    beta,
    beta_half,
    central_binom,
    digamma,
    euler_gamma,
    falling,
    gamma,
    gamma_half,
    harmonic,
    hurwitz_zeta,
    lgamma,
    odd_harmonic,
    polygamma,
    riemann_zeta,
    rising,
    trigamma,
)
from .errors import (
    BetalabError,
    DomainError,
    EvaluationError,
    NonConvergenceError,
    OverflowRangeError,
    UnknownIdentityError,
)
from .limits import (
    LimitResult,
    beta_pole_limit,
    gamma_derivative_at_1,
    gamma_pole_limit,
    richardson_limit,
    scaled_beta_limits,
)
from .quadrature import (
    QuadratureResult,
    beta_integral,
    digamma_integral,
    integrate01,
    log_kernel_moment,
)
from .series import (
    CONVENTIONS,
    CORRECTED,
    EXACT_TERMINATION,
    LITERAL,
    MAX_TERMS,
    TOLERANCE_MET,
    SeriesControl,
    SeriesResult,
    TraceRow,
    beta_limit_series,
    beta_series,
    digamma_series,
    log2_series,
    norlund_diff,
    trace,
    trigamma_half_series,
    trigamma_series,
    zeta2_series,
)
from .verify import (
    TOOL_VERSION,
    CheckRecord,
    IdentitySpec,
    SuiteReport,
    builtin_registry,
    render_report,
    run_identity,
    run_suite,
)

__version__ = TOOL_VERSION

__all__ = [
    "__version__",
    # constants
    "EULER_GAMMA",
    "TOOL_VERSION",
    "CONVENTIONS",
    "CORRECTED",
    "LITERAL",
    "EXACT_TERMINATION",
    "TOLERANCE_MET",
    "MAX_TERMS",
    # errors
    "BetalabError",
    "DomainError",
    "EvaluationError",
    "NonConvergenceError",
    "OverflowRangeError",
    "UnknownIdentityError",
    # reference special functions
    "beta",
    "beta_half",
    "central_binom",
    "digamma",
    "euler_gamma",
    "falling",
    "gamma",
    "gamma_half",
    "harmonic",
    "hurwitz_zeta",
    "lgamma",
    "odd_harmonic",
    "polygamma",
    "riemann_zeta",
    "rising",
    "trigamma",
    # series engine
    "SeriesControl",
    "SeriesResult",
    "TraceRow",
    "beta_limit_series",
    "beta_series",
    "digamma_series",
    "log2_series",
    "norlund_diff",
    "trace",
    "trigamma_half_series",
    "trigamma_series",
    "zeta2_series",
    # quadrature
    "QuadratureResult",
    "beta_integral",
    "digamma_integral",
    "integrate01",
    "log_kernel_moment",
    # limits
    "LimitResult",
    "beta_pole_limit",
    "gamma_derivative_at_1",
    "gamma_pole_limit",
    "richardson_limit",
    "scaled_beta_limits",
    # verification
    "CheckRecord",
    "IdentitySpec",
    "SuiteReport",
    "builtin_registry",
    "render_report",
    "run_identity",
    "run_suite",
]
