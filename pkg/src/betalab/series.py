"""Slowly convergent series with power-law tail correction.

Each series here is summed in ascending order with compensated (Kahan-
Babuska) accumulation, terms produced by a ratio recurrence (no per-term
gamma or factorial evaluations).  Because several of these series decay only
algebraically (``n^-p`` with p as small as 1.05), a raw partial sum can be
off by far more than double rounding; the engine therefore fits a power law
to the recorded term magnitudes,

    p_hat = log2(a_{N/2} / a_N),        tail ~= a_N * N / (p_hat - 1),

and, when ``p_hat > 1.05``, adds that estimate to the partial sum.  The fit
uses two actual term magnitudes, which makes it self-correcting for the
logarithmic drift some of these series carry (the measured p_hat absorbs the
first-order effect of a ``log n`` factor in the terms).

Termination is reported explicitly: ``exact_termination`` when a term is
exactly zero (a rising/falling factor vanished, so all later terms vanish
too), ``tolerance_met`` when the estimated tail fell to ``ctrl.tol``, or
``max_terms``.

Two series families sum an inner reciprocal-odd sum whose published lower
index is ambiguous by one; both readings are first-class here as the
``literal`` (inner k starts at 1) and ``corrected`` (k starts at 0)
conventions.  The two differ by exactly ``4 log 2``.
"""

from __future__ import annotations

import math
from array import array
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

from .core_special import EULER_GAMMA
from .errors import DomainError

__all__ = [
    "SeriesControl",
    "SeriesResult",
    "TraceRow",
    "EXACT_TERMINATION",
    "TOLERANCE_MET",
    "MAX_TERMS",
    "LITERAL",
    "CORRECTED",
    "CONVENTIONS",
    "beta_series",
    "beta_limit_series",
    "digamma_series",
    "log2_series",
    "norlund_diff",
    "trigamma_series",
    "trigamma_half_series",
    "zeta2_series",
    "trace",
]

EXACT_TERMINATION = "exact_termination"
TOLERANCE_MET = "tolerance_met"
MAX_TERMS = "max_terms"

LITERAL = "literal"
CORRECTED = "corrected"
CONVENTIONS = (LITERAL, CORRECTED)

_MIN_FIT_TERMS = 8  # no tail fit before this many recorded magnitudes
_MIN_DECAY = 1.05  # power-law exponent below which the tail model is unusable


@dataclass(frozen=True)
class SeriesControl:
    """Knobs for series summation."""

    max_terms: int = 1_000_000
    tol: float = 1e-10
    tail_correction: bool = True

    def __post_init__(self) -> None:
        if not isinstance(self.max_terms, int) or isinstance(self.max_terms, bool) or self.max_terms < 1:
            raise DomainError(f"max_terms must be a positive integer, got {self.max_terms!r}")
        if not (isinstance(self.tol, (int, float)) and math.isfinite(self.tol) and self.tol > 0.0):
            raise DomainError(f"tol must be a positive finite real, got {self.tol!r}")


@dataclass(frozen=True)
class SeriesResult:
    """Outcome of a series summation.

    ``value`` is the tail-corrected sum when correction applies, otherwise it
    equals ``raw_partial_sum``.  ``tail_estimate`` is the magnitude of the
    power-law tail estimate at the stopping point (0 on exact termination).
    ``reductions`` counts argument-reduction recurrence steps taken before
    summing (digamma only; 0 means the pure series path).
    """

    value: float
    raw_partial_sum: float
    tail_estimate: float
    terms_used: int
    termination: str
    reductions: int = 0


class TraceRow(NamedTuple):
    """One checkpoint of a traced summation, on the operation's scale."""

    n: int
    term: float
    partial_sum: float
    tail_estimate: float


_DEFAULT_CTRL = SeriesControl()


def _tail_fit(mags: array, n: int, last: float) -> float:
    """Signed tail estimate from the recorded magnitudes, or 0 if unusable."""
    if n < _MIN_FIT_TERMS:
        return 0.0
    a_half = mags[n // 2 - 1]
    a_n = mags[n - 1]
    if a_n <= 0.0 or a_half <= a_n:
        return 0.0
    p_hat = math.log2(a_half / a_n)
    if p_hat <= _MIN_DECAY:
        return 0.0
    return last * (n / (p_hat - 1.0))


def _run(
    terms: Iterator[tuple[float, float]],
    ctrl: SeriesControl,
    *,
    base: float = 0.0,
    scale: float = 1.0,
    stop_on_zero: bool = True,
    reductions: int = 0,
    every: int = 0,
) -> tuple[SeriesResult, tuple[TraceRow, ...]]:
    """Sum ``base + scale * sum(terms)`` under ``ctrl``; see module docstring.

    Each generated term is a ``(term, residual)`` pair: ``term`` is the
    rounded double driving all bookkeeping (counting, zero detection, the
    tail model, trace rows) and ``residual`` is the sub-ulp remainder of
    computing it, folded into the compensated accumulator so that exactness
    contracts survive heavy cancellation.
    """
    mags = array("d")
    s = 0.0
    comp = 0.0
    n = 0
    tail = 0.0
    termination = MAX_TERMS
    rows: list[TraceRow] = []
    for term, resid in terms:
        if term == 0.0 and stop_on_zero:
            termination = EXACT_TERMINATION
            tail = 0.0
            break
        n += 1
        t = s + term
        if abs(s) >= abs(term):
            comp += (s - t) + term
        else:
            comp += (term - t) + s
        s = t
        if resid != 0.0:
            comp += resid
        mags.append(abs(term))
        tail = _tail_fit(mags, n, term)
        if every > 0 and n % every == 0:
            rows.append(TraceRow(n, scale * term, base + scale * (s + comp), abs(scale * tail)))
        if tail != 0.0 and abs(tail) <= ctrl.tol:
            termination = TOLERANCE_MET
            break
        if n >= ctrl.max_terms:
            break
    raw_series = s + comp
    raw = base + scale * raw_series
    if termination == EXACT_TERMINATION:
        result = SeriesResult(raw, raw, 0.0, n, termination, reductions)
    else:
        tail_abs = abs(scale * tail)
        if ctrl.tail_correction and tail != 0.0:
            value = base + scale * (raw_series + tail)
        else:
            value = raw
        result = SeriesResult(value, raw, tail_abs, n, termination, reductions)
    return result, tuple(rows)


# --- term generators (all infinite; ratio recurrences only) ---------------

_SPLIT = 134217729.0  # 2**27 + 1, Dekker's splitting constant


def _div_rest(a: float, b: float, q: float) -> float:
    """Rounding remainder ``(a - q*b)/b`` of the division ``q = fl(a/b)``.

    Dekker's split recovers q*b exactly without fused multiply-add, so the
    returned value is the sub-ulp part of a/b that the double q dropped.
    """
    p = q * b
    qh = q * _SPLIT
    qh = qh - (qh - q)
    ql = q - qh
    bh = b * _SPLIT
    bh = bh - (bh - b)
    bl = b - bh
    err = ((qh * bh - p) + qh * bl + ql * bh) + ql * bl
    return ((a - p) - err) / b


def _shifted_ratio_terms(u: float, v: float) -> Iterator[tuple[float, float]]:
    """(1-u)_n / (n! (n+v)) built from r_n = r_{n-1} (n-u)/n.

    Multiply-before-divide keeps r exact at integer u (binomial values), and
    the division remainder rides along so the finite integer-u sums stay
    correct to the last bit despite their large internal cancellation.
    """
    r = 1.0
    n = 0
    while True:
        n += 1
        r = r * (n - u) / n
        b = n + v
        q = r / b
        yield q, _div_rest(r, b, q)


def _limit_terms(u: float) -> Iterator[tuple[float, float]]:
    """(1-u)_n / (n n!)."""
    r = 1.0
    n = 0
    while True:
        n += 1
        r = r * (n - u) / n
        q = r / n
        yield q, _div_rest(r, n, q)


def _log2_terms() -> Iterator[tuple[float, float]]:
    """C(2n,n) / (n 2^{2n+1}) via c_n = c_{n-1} (2n-1)/(2n)."""
    c = 1.0
    n = 0
    while True:
        n += 1
        c *= (2 * n - 1) / (2.0 * n)
        yield c / (2.0 * n), 0.0


def _norlund_terms(x: float, a: float) -> Iterator[tuple[float, float]]:
    """(-1)^{k+1}/k * falling(x,k)/rising(a,k)."""
    g = 1.0
    k = 0
    while True:
        k += 1
        g = g * (x - (k - 1)) / (a + (k - 1))
        q = g / k
        rest = _div_rest(g, k, q)
        yield (q, rest) if k % 2 == 1 else (-q, -rest)


def _trigamma_terms(u: float) -> Iterator[tuple[float, float]]:
    """(1-u)_n/(n n!) * [psi(n+1-u) - psi(1-u)], the bracket grown by 1/(n-u)."""
    r = 1.0
    d = 0.0
    n = 0
    while True:
        n += 1
        r *= (n - u) / n
        d += 1.0 / (n - u)
        yield (r / n) * d, 0.0


def _trigamma_half_terms(include_k0: bool) -> Iterator[tuple[float, float]]:
    """2 C(2n,n)/(n 4^n) * sum of odd reciprocals; k0 term included or not."""
    c = 1.0
    inner = 0.0 if include_k0 else -1.0
    n = 0
    while True:
        n += 1
        c *= (2 * n - 1) / (2.0 * n)
        inner += 1.0 / (2 * n - 1)
        yield (2.0 * c / n) * inner, 0.0


# --- public operations ----------------------------------------------------


def _positive(x: float, name: str) -> float:
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"{name} must be a finite positive real, got {x!r}")
    return x


def _beta_impl(u: float, v: float, ctrl: SeriesControl, every: int = 0):
    u = _positive(u, "u")
    v = _positive(v, "v")
    return _run(_shifted_ratio_terms(u, v), ctrl, base=1.0 / v, every=every)


def beta_series(u: float, v: float, ctrl: SeriesControl | None = None) -> SeriesResult:
    """B(u, v) as ``1/v + sum_{n>=1} (1-u)_n / ((n+v) n!)``.

    Terminates exactly for positive integer u (the rising factor vanishes).
    """
    return _beta_impl(u, v, ctrl or _DEFAULT_CTRL)[0]


def _beta_limit_impl(u: float, ctrl: SeriesControl, every: int = 0):
    u = _positive(u, "u")
    return _run(_limit_terms(u), ctrl, every=every)


def beta_limit_series(u: float, ctrl: SeriesControl | None = None) -> SeriesResult:
    """``sum_{n>=1} (1-u)_n / (n n!)``: the v->0 limit of ``B(u,v) - 1/v``."""
    return _beta_limit_impl(u, ctrl or _DEFAULT_CTRL)[0]


def _digamma_impl(u: float, ctrl: SeriesControl, every: int = 0):
    u = _positive(u, "u")
    acc = 0.0
    reductions = 0
    y = u
    while y > 1.0:
        y -= 1.0
        acc += 1.0 / y
        reductions += 1
    return _run(
        _limit_terms(y),
        ctrl,
        base=acc - EULER_GAMMA,
        scale=-1.0,
        reductions=reductions,
        every=every,
    )


def digamma_series(u: float, ctrl: SeriesControl | None = None) -> SeriesResult:
    """psi(u) as ``-gamma - sum_{n>=1} (1-u)_n / (n n!)``.

    The series converges for u in (0, 1]; larger arguments are first reduced
    with ``psi(y+1) = psi(y) + 1/y`` and the number of reduction steps is
    reported in ``reductions`` (0 means the pure series path was used).
    """
    return _digamma_impl(u, ctrl or _DEFAULT_CTRL)[0]


def _log2_impl(ctrl: SeriesControl, every: int = 0):
    return _run(_log2_terms(), ctrl, every=every)


def log2_series(ctrl: SeriesControl | None = None) -> SeriesResult:
    """log 2 as ``sum_{n>=1} C(2n,n) / (n 2^{2n+1})`` (terms ~ n^-1.5)."""
    return _log2_impl(ctrl or _DEFAULT_CTRL)[0]


def _norlund_impl(x: float, a: float, ctrl: SeriesControl, every: int = 0):
    x = float(x)
    a = float(a)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x!r}")
    if not math.isfinite(a) or a <= 0.0:
        raise DomainError(f"a must be a finite positive real, got {a!r}")
    if x + a <= 0.0:
        raise DomainError(f"norlund_diff requires x + a > 0, got x={x!r}, a={a!r}")
    return _run(_norlund_terms(x, a), ctrl, every=every)


def norlund_diff(x: float, a: float, ctrl: SeriesControl | None = None) -> SeriesResult:
    """psi(x+a) - psi(a) as ``sum_{k>=1} (-1)^{k+1}/k falling(x,k)/rising(a,k)``.

    Requires ``a > 0`` and ``x + a > 0``; terminates exactly for integer
    x >= 0 (falling factor vanishes at k = x + 1).
    """
    return _norlund_impl(x, a, ctrl or _DEFAULT_CTRL)[0]


def _trigamma_impl(u: float, ctrl: SeriesControl, every: int = 0):
    u = float(u)
    if not (math.isfinite(u) and 0.0 < u < 1.0):
        raise DomainError(f"trigamma_series requires 0 < u < 1, got {u!r}")
    return _run(_trigamma_terms(u), ctrl, every=every)


def trigamma_series(u: float, ctrl: SeriesControl | None = None) -> SeriesResult:
    """psi'(u) for 0 < u < 1 by termwise differentiation of the psi series.

    Term n is ``(1/(n n!)) (1-u)_n [psi(n+1-u) - psi(1-u)]`` with the bracket
    maintained incrementally (adds ``1/(n-u)`` per step).
    """
    return _trigamma_impl(u, ctrl or _DEFAULT_CTRL)[0]


def _check_convention(convention: str) -> str:
    if convention not in CONVENTIONS:
        raise DomainError(f"convention must be one of {CONVENTIONS}, got {convention!r}")
    return convention


def _trigamma_half_impl(convention: str, ctrl: SeriesControl, every: int = 0):
    convention = _check_convention(convention)
    return _run(
        _trigamma_half_terms(include_k0=(convention == CORRECTED)),
        ctrl,
        stop_on_zero=False,  # the literal convention's first term is 0 but later ones are not
        every=every,
    )


def trigamma_half_series(convention: str, ctrl: SeriesControl | None = None) -> SeriesResult:
    """psi'(1/2) as ``sum_n 2 C(2n,n)/(n 4^n) * sum_k 1/(2k+1)``.

    ``convention`` picks the inner sum's lower index: ``corrected`` starts at
    k = 0 (sums to pi^2/2), ``literal`` starts at k = 1 (lands 4 log 2 lower).
    """
    return _trigamma_half_impl(convention, ctrl or _DEFAULT_CTRL)[0]


def _zeta2_impl(convention: str, ctrl: SeriesControl, every: int = 0):
    res, rows = _trigamma_half_impl(convention, ctrl, every)
    scaled = SeriesResult(
        res.value / 3.0,
        res.raw_partial_sum / 3.0,
        res.tail_estimate / 3.0,
        res.terms_used,
        res.termination,
        res.reductions,
    )
    return scaled, tuple(TraceRow(r.n, r.term / 3.0, r.partial_sum / 3.0, r.tail_estimate / 3.0) for r in rows)


def zeta2_series(convention: str, ctrl: SeriesControl | None = None) -> SeriesResult:
    """zeta(2) as one third of the trigamma-at-one-half series."""
    return _zeta2_impl(convention, ctrl or _DEFAULT_CTRL)[0]


# --- traced access (used by the CLI's convergence tables) -----------------

_TRACEABLE: dict[str, Callable] = {
    "beta": _beta_impl,
    "beta-limit": _beta_limit_impl,
    "digamma": _digamma_impl,
    "log2": _log2_impl,
    "norlund": _norlund_impl,
    "trigamma": _trigamma_impl,
    "trigamma-half": _trigamma_half_impl,
    "zeta2": _zeta2_impl,
}


def trace(
    name: str, params: dict, ctrl: SeriesControl | None = None, every: int = 0
) -> tuple[SeriesResult, tuple[TraceRow, ...]]:
    """Run series ``name`` with ``params``, recording a row every ``every`` terms."""
    try:
        impl = _TRACEABLE[name]
    except KeyError:
        raise DomainError(f"unknown series {name!r}; choose from {sorted(_TRACEABLE)}") from None
    return impl(ctrl=ctrl or _DEFAULT_CTRL, every=every, **params)
