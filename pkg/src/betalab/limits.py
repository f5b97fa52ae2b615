"""Numerical limits as v -> 0+ via Richardson extrapolation.

The quantities here all have removable structure at v = 0: a simple pole
with a finite remainder (``B(u,v) - 1/v``, ``Gamma(v) - 1/v``) or a plain
difference quotient (``(Gamma(v+1) - 1)/v``).  Each is sampled on the
geometric grid ``h0 / 2^k`` and extrapolated to 0 with a Neville tableau;
the error estimate is the difference of the last two diagonal entries.

Where naive evaluation would lose digits to cancellation, the samples are
rewritten through ``expm1``/``lgamma`` so the subtraction happens on the
logarithmic scale (see the individual functions).  ``gamma_pole_limit``
deliberately keeps the naive subtraction: it serves as an independent check
on ``gamma_derivative_at_1``, which takes the rewritten route, so the two
must not share their rounding behaviour.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .core_special import beta, gamma, lgamma
from .errors import DomainError, EvaluationError

__all__ = [
    "LimitResult",
    "richardson_limit",
    "gamma_pole_limit",
    "gamma_derivative_at_1",
    "beta_pole_limit",
    "scaled_beta_limits",
]

_MIN_DEPTH = 2
_MAX_DEPTH = 12


@dataclass(frozen=True)
class LimitResult:
    """An extrapolated limit with its tableau-based error estimate."""

    value: float
    error_estimate: float
    table_depth: int


def richardson_limit(f: Callable[[float], float], h0: float, depth: int = 10) -> LimitResult:
    """Extrapolate ``f(h) -> f(0+)`` from samples at ``h0 / 2^k``, k < depth.

    Builds the Neville tableau for polynomial extrapolation to h = 0; the
    reported error estimate is ``|T[d,d] - T[d-1,d-1]|``, the change in the
    diagonal on the final row.
    """
    h0 = float(h0)
    if not (math.isfinite(h0) and h0 > 0.0):
        raise DomainError(f"h0 must be a finite positive real, got {h0!r}")
    if not isinstance(depth, int) or isinstance(depth, bool) or not _MIN_DEPTH <= depth <= _MAX_DEPTH:
        raise DomainError(f"depth must be an integer in [{_MIN_DEPTH}, {_MAX_DEPTH}], got {depth!r}")
    xs: list[float] = []
    rows: list[list[float]] = []
    prev_diag = math.nan
    diag = math.nan
    for i in range(depth):
        x = h0 * 2.0**-i
        y = f(x)
        if not math.isfinite(y):
            raise EvaluationError(f"limit sample f({x!r}) is not finite: {y!r}")
        xs.append(x)
        row = [y]
        for j in range(1, i + 1):
            num = xs[i - j] * row[j - 1] - xs[i] * rows[i - 1][j - 1]
            row.append(num / (xs[i - j] - xs[i]))
        rows.append(row)
        prev_diag, diag = diag, row[-1]
    return LimitResult(diag, abs(diag - prev_diag), depth)


def gamma_pole_limit(depth: int = 10, h0: float = 0.5) -> LimitResult:
    """``lim_{v->0+} (Gamma(v) - 1/v)``, which equals -gamma.

    Samples the difference naively (both terms grow like 1/v, costing a few
    digits near the pole); kept that way on purpose as a cross-check against
    :func:`gamma_derivative_at_1`, which avoids the cancellation.
    """
    return richardson_limit(lambda v: gamma(v) - 1.0 / v, h0, depth)


def gamma_derivative_at_1(depth: int = 10, h0: float = 0.5) -> LimitResult:
    """``Gamma'(1)`` as the limit of ``(Gamma(v+1) - 1)/v``, equal to -gamma.

    The quotient is evaluated as ``expm1(lgamma(v+1)) / v`` so the
    subtraction of 1 is done on the log scale without cancellation.
    """
    return richardson_limit(lambda v: math.expm1(lgamma(v + 1.0)) / v, h0, depth)


def _check_u(u: float) -> float:
    u = float(u)
    if not (math.isfinite(u) and u >= 0.1):
        raise DomainError(f"u must be a finite real >= 0.1, got {u!r}")
    return u


def beta_pole_limit(u: float, depth: int = 10, h0: float = 0.25) -> LimitResult:
    """``lim_{v->0+} (B(u,v) - 1/v)`` for u >= 0.1.

    Uses ``B(u,v) - 1/v = expm1(lgamma(v+1) + lgamma(u) - lgamma(u+v)) / v``,
    which stays fully accurate even though the two terms individually grow
    like 1/v.  In closed form the limit is ``-(gamma + psi(u))`` (0 at u = 1);
    the identity suite checks it against both that form and the series route.
    """
    u = _check_u(u)
    lg_u = lgamma(u)

    def sample(v: float) -> float:
        return math.expm1(lgamma(v + 1.0) + lg_u - lgamma(u + v)) / v

    return richardson_limit(sample, h0, depth)


def scaled_beta_limits(u: float, depth: int = 10, h0: float = 0.25) -> tuple[LimitResult, LimitResult]:
    """Two independent routes to ``lim_{v->0+} v B(u, v)`` (= 1), u >= 0.1.

    Route one evaluates ``v B(u,v) = exp(lgamma(v+1) + lgamma(u) -
    lgamma(u+v))`` directly; route two uses the recurrence form
    ``v B(u,v) = (u+v) B(u, v+1)``, which involves no pole at all.  Their
    agreement is a structural check on both the beta evaluator and the
    extrapolator.
    """
    u = _check_u(u)
    lg_u = lgamma(u)

    def via_log(v: float) -> float:
        return math.exp(lgamma(v + 1.0) + lg_u - lgamma(u + v))

    def via_recurrence(v: float) -> float:
        return (u + v) * beta(u, v + 1.0)

    return richardson_limit(via_log, h0, depth), richardson_limit(via_recurrence, h0, depth)
