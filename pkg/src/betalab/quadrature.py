"""Tanh-sinh (double-exponential) quadrature on the open interval (0, 1).

The substitution ``x = tanh((pi/2) sinh(u))`` maps the real line onto (-1, 1)
and makes the trapezoid rule converge double-exponentially, even for
integrands with algebraic or logarithmic endpoint singularities.  Rescaled to
(0, 1), a node at ``u`` sits at distance ``1/(1 + e^{2y})`` from one endpoint
and ``1/(1 + e^{-2y})`` from the other, with ``y = (pi/2) sinh(u)``.

Both distances are computed directly and carried with every node.  That
matters at the upper endpoint: doubles near 1.0 have absolute spacing ~1e-16,
so an integrand written in terms of ``t`` alone cannot see the mass that
``(1-t)^{v-1}`` singularities carry below that scale.  The built-in kernels
(`beta_integral`, `log_kernel_moment`, `digamma_integral`) therefore evaluate
through the exact distance to whichever endpoint is nearer, while the public
`integrate01` keeps the plain ``f(t)`` interface and simply never calls ``f``
at a point that rounds onto 0 or 1.

Refinement halves the step ``h = 2^-level`` from level 0 up to level 12,
reusing previous evaluations; nodes whose weight falls below 1e-300 are
skipped, so abscissae never touch the endpoints.  Level sums use exact
summation (`math.fsum`), making results deterministic and rerun-stable.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError, EvaluationError, NonConvergenceError

__all__ = [
    "QuadratureResult",
    "integrate01",
    "beta_integral",
    "log_kernel_moment",
    "digamma_integral",
]

MAX_LEVEL = 12
_MIN_WEIGHT = 1e-300
_HALF_PI = math.pi / 2.0

# Node tables are immutable once built; the lock only guards first build.
_levels: dict[int, tuple[tuple[float, float, float], ...]] = {}
_levels_lock = threading.Lock()


@dataclass(frozen=True)
class QuadratureResult:
    """Outcome of an adaptive tanh-sinh integration."""

    value: float
    error_estimate: float  # |difference between the last two levels|, >= 0
    levels_used: int
    evaluations: int


def _build_level(level: int) -> tuple[tuple[float, float, float], ...]:
    """Evaluation points new at this level as (t, s, weight/h) triples.

    ``t`` is the abscissa, ``s = 1 - t`` computed independently at full
    relative precision.  Level 0 holds all integer nodes, deeper levels only
    the odd multiples of their step.
    """
    h = 2.0**-level
    pts: list[tuple[float, float, float]] = []
    if level == 0:
        pts.append((0.5, 0.5, 0.5 * _HALF_PI))
        step = 1
    else:
        step = 2
    k = 1
    while True:
        u = k * h
        y = _HALF_PI * math.sinh(u)
        em = math.exp(-2.0 * y)
        # dt/du for t = (1 + tanh(y))/2: (pi/2) cosh(u) * sech^2(y) / 2.
        w = _HALF_PI * math.cosh(u) * 2.0 * em / ((1.0 + em) * (1.0 + em))
        small = em / (1.0 + em)
        if small == 0.0 or w * h < _MIN_WEIGHT:
            break
        big = 1.0 / (1.0 + em)
        pts.append((small, big, w))
        pts.append((big, small, w))
        k += step
    return tuple(pts)


def _nodes(level: int) -> tuple[tuple[float, float, float], ...]:
    table = _levels.get(level)
    if table is None:
        with _levels_lock:
            table = _levels.get(level)
            if table is None:
                table = _build_level(level)
                _levels[level] = table
    return table


def _refine(
    g: Callable[[float, float], float],
    tol: float,
    max_level: int,
    interior_only: bool,
) -> QuadratureResult:
    """Run the level refinement for an integrand ``g(t, s)`` with s = 1 - t."""
    if not (tol > 0.0) or not math.isfinite(tol):
        raise DomainError(f"tol must be a positive finite real, got {tol!r}")
    if not 1 <= max_level <= MAX_LEVEL:
        raise DomainError(f"max_level must lie in [1, {MAX_LEVEL}], got {max_level!r}")
    phi: list[float] = []
    evaluations = 0
    prev = math.nan
    total = math.nan
    err = math.inf
    for level in range(max_level + 1):
        for t, s, w in _nodes(level):
            if interior_only and (t <= 0.0 or t >= 1.0):
                continue
            fv = g(t, s)
            evaluations += 1
            if not math.isfinite(fv):
                raise EvaluationError(f"integrand returned non-finite value {fv!r} at t={t!r}")
            phi.append(w * fv)
        total = math.fsum(phi) * 2.0**-level
        if level > 0:
            err = abs(total - prev)
            if err <= tol:
                return QuadratureResult(total, err, level, evaluations)
        prev = total
    raise NonConvergenceError(
        f"tanh-sinh did not reach tol={tol:g} by level {max_level} "
        f"(last difference {err:g})",
        result=QuadratureResult(total, err, max_level, evaluations),
    )


def integrate01(
    f: Callable[[float], float], tol: float = 1e-12, max_level: int = MAX_LEVEL
) -> QuadratureResult:
    """Integrate ``f`` over (0, 1), refining until successive levels agree.

    ``f`` is only ever evaluated strictly inside the interval.  Raises
    :class:`NonConvergenceError` (with the partial result attached) if the
    successive-level difference is still above ``tol`` at the level cap, and
    :class:`EvaluationError` if ``f`` returns a non-finite value.
    """
    return _refine(lambda t, s: f(t), tol, max_level, interior_only=True)


def _log_given(t: float, s: float) -> float:
    """log(t) computed through whichever of t, s = 1-t is smaller."""
    return math.log(t) if t <= 0.5 else math.log1p(-s)


def beta_integral(u: float, v: float, tol: float = 1e-12) -> QuadratureResult:
    """``int_0^1 t^{u-1} (1-t)^{v-1} dt`` for ``u, v >= 0.05``.

    Below 0.05 the double-exponential nodes under-resolve the endpoint
    singularity, so that region is excluded from the domain.
    """
    u = _kernel_arg(u, "u")
    v = _kernel_arg(v, "v")

    def g(t: float, s: float) -> float:
        return math.exp((u - 1.0) * _log_given(t, s) + (v - 1.0) * _log_given(s, t))

    return _refine(g, tol, MAX_LEVEL, interior_only=False)


def log_kernel_moment(u: float, tol: float = 1e-12) -> QuadratureResult:
    """``int_0^1 t^{u-1} log(1-t) dt`` for ``u >= 0.05``.

    This is the beta derivative with respect to its second argument at v = 1.
    """
    u = _kernel_arg(u, "u")

    def g(t: float, s: float) -> float:
        return math.exp((u - 1.0) * _log_given(t, s)) * _log_given(s, t)

    return _refine(g, tol, MAX_LEVEL, interior_only=False)


def digamma_integral(u: float, tol: float = 1e-12) -> QuadratureResult:
    """``int_0^1 (1 - t^u)/(1 - t) dt`` for ``u >= 0.05``.

    The integrand has a removable point at t = 1; evaluating through the
    distance ``s = 1 - t`` keeps it finite and fully accurate there.
    """
    u = _kernel_arg(u, "u")

    def g(t: float, s: float) -> float:
        if t <= 0.5:
            return (1.0 - t**u) / s
        return -math.expm1(u * math.log1p(-s)) / s

    return _refine(g, tol, MAX_LEVEL, interior_only=False)


def _kernel_arg(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x) or x < 0.05:
        raise DomainError(f"{name} must be >= 0.05 (endpoint resolution limit), got {x!r}")
    return x
