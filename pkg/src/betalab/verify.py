"""Identity registry, grid runner, and deterministic report rendering.

Every classical relation implemented elsewhere in the package is registered
here as an :class:`IdentitySpec`: a left-hand and right-hand evaluator, a
parameter grid, and a tolerance with one of three modes.

* ``absolute`` - pass iff ``|lhs - rhs| <= tol``.
* ``relative`` - pass iff ``|lhs - rhs| <= tol * max(|lhs|, |rhs|)``; used
  where values span orders of magnitude (Pochhammer products, duplication).
* ``tail_aware`` - pass iff ``|lhs - rhs| <= tol + tail_estimate``; used for
  the algebraically convergent series, whose truncation uncertainty is
  reported by the summation engine and legitimately dwarfs ``tol`` for the
  slowest cases.

Evaluator errors (domain violations, overflow, refinement caps) become
*skipped* records carrying the reason - the suite never aborts and never
silently passes.  Records are sorted by (identity id, grid position), all
floats are serialized with 17 significant digits, and no timestamps are
embedded, so two runs over the same inputs render byte-identical reports.

The two-convention series for ``psi'(1/2)`` and ``zeta(2)`` are registered
under their ``corrected`` inner-sum convention (lower index k = 0, the one
consistent with ``psi(3/2) - psi(1/2) = 2``); the ``literal`` convention
(k = 1) is reported in the ``informational`` section, never as pass/fail.
The two differ by ``4 log 2``.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from . import core_special as cs
from . import limits as lm
from . import quadrature as qd
from . import series as sr
from .errors import (
    DomainError,
    NonConvergenceError,
    OverflowRangeError,
    UnknownIdentityError,
)

__all__ = [
    "TOOL_VERSION",
    "ABSOLUTE",
    "RELATIVE",
    "TAIL_AWARE",
    "IdentitySpec",
    "CheckRecord",
    "SuiteReport",
    "builtin_registry",
    "run_identity",
    "run_suite",
    "render_report",
]

TOOL_VERSION = "0.1.0"

ABSOLUTE = "absolute"
RELATIVE = "relative"
TAIL_AWARE = "tail_aware"
_MODES = (ABSOLUTE, RELATIVE, TAIL_AWARE)

_DIAG_KEYS = ("terms_used", "tail_estimate", "levels_used", "table_depth")

# Series are summed under one shared control so suite runtime stays bounded;
# tail_aware tolerances absorb the truncation this implies.
_SUITE_SERIES = sr.SeriesControl(max_terms=100_000, tol=1e-10)

_FD_STEP = 1e-5  # central-difference step for the derivative cross-check


@dataclass(frozen=True)
class IdentitySpec:
    """One registered identity: evaluators, grid, and pass criterion.

    ``lhs`` and ``rhs`` are called with a grid tuple unpacked as positional
    arguments and return ``(value, diagnostics)`` where diagnostics is a
    (possibly empty) mapping with keys drawn from terms_used /
    tail_estimate / levels_used / table_depth.
    """

    id: str
    description: str
    anchor: str
    grid: tuple[tuple, ...]
    tolerance: float
    tolerance_mode: str
    lhs: Callable[..., tuple[float, Mapping]]
    rhs: Callable[..., tuple[float, Mapping]]

    def __post_init__(self) -> None:
        if not self.grid:
            raise DomainError(f"identity {self.id!r} has an empty grid")
        if not (self.tolerance > 0.0 and math.isfinite(self.tolerance)):
            raise DomainError(f"identity {self.id!r} tolerance must be positive")
        if self.tolerance_mode not in _MODES:
            raise DomainError(
                f"identity {self.id!r} tolerance_mode must be one of {_MODES}"
            )


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one identity at one grid point.

    ``passed`` is True/False for evaluated points and None for skipped ones
    (where the numeric fields are None as well and ``reason`` says why).
    """

    identity_id: str
    params: tuple
    lhs_value: float | None
    rhs_value: float | None
    abs_err: float | None
    rel_err: float | None
    effective_tol: float | None
    passed: bool | None
    skipped: bool
    reason: str | None
    diagnostics: Mapping


@dataclass(frozen=True)
class SuiteReport:
    """All records of a suite run plus counts and informational entries."""

    records: tuple[CheckRecord, ...]
    counts: Mapping[str, int]
    tool_version: str
    informational: tuple[Mapping, ...]


# --- evaluator plumbing ---------------------------------------------------


def _plain(value: float) -> tuple[float, Mapping]:
    return value, {}


def _series(res: sr.SeriesResult) -> tuple[float, Mapping]:
    return res.value, {"terms_used": res.terms_used, "tail_estimate": res.tail_estimate}


def _quad(res: qd.QuadratureResult) -> tuple[float, Mapping]:
    return res.value, {"levels_used": res.levels_used}


def _limit(res: lm.LimitResult) -> tuple[float, Mapping]:
    return res.value, {"table_depth": res.table_depth}


def _merge_diag(a: Mapping, b: Mapping) -> dict:
    merged: dict = {}
    for key in _DIAG_KEYS:
        if key == "tail_estimate":
            if key in a or key in b:
                merged[key] = a.get(key, 0.0) + b.get(key, 0.0)
        elif key in b:
            merged[key] = b[key]
        elif key in a:
            merged[key] = a[key]
    return merged


# --- the registry ---------------------------------------------------------

_U7 = (0.25, 0.5, 0.75, 1.0, 2.0, 3.5, 5.0)
_V3 = (0.5, 1.0, 2.5)


def _pairs_lt(values: Sequence[float]) -> tuple[tuple[float, float], ...]:
    return tuple(
        (u, v) for i, u in enumerate(values) for v in values[i + 1 :]
    )


def _eq2_route(route: str) -> tuple[float, Mapping]:
    if route == "pole":
        return _limit(lm.gamma_pole_limit())
    return _limit(lm.gamma_derivative_at_1())


def _log_moment_form(u: float) -> tuple[float, Mapping]:
    res = qd.log_kernel_moment(u)
    return u * res.value + 1.0 / u, {"levels_used": res.levels_used}


def _neg_n_log_moment(n: float) -> tuple[float, Mapping]:
    res = qd.log_kernel_moment(float(n))
    return -float(n) * res.value, {"levels_used": res.levels_used}


def _eq3_rhs(u: float) -> tuple[float, Mapping]:
    value, diag = _log_moment_form(u)
    return -cs.EULER_GAMMA - value, diag


def _build_registry() -> tuple[IdentitySpec, ...]:
    specs = [
        IdentitySpec(
            id="SYM",
            description="B(u, v) = B(v, u)",
            anchor="symmetry of the Euler beta integral",
            grid=_pairs_lt((0.1, 0.5, 1.0, 2.5, 7.0)),
            tolerance=1e-9,
            tolerance_mode=ABSOLUTE,
            lhs=lambda u, v: _plain(cs.beta(u, v)),
            rhs=lambda u, v: _plain(cs.beta(v, u)),
        ),
        IdentitySpec(
            id="RECUR",
            description="B(u, v+1) = v/(u+v) B(u, v)",
            anchor="beta recurrence via integration by parts",
            grid=tuple((u, v) for u in _U7 for v in _V3),
            tolerance=1e-9,
            tolerance_mode=ABSOLUTE,
            lhs=lambda u, v: _plain(cs.beta(u, v + 1.0)),
            rhs=lambda u, v: _plain(v / (u + v) * cs.beta(u, v)),
        ),
        IdentitySpec(
            id="BU1",
            description="B(u, 1) = 1/u",
            anchor="beta at unit second argument",
            grid=tuple((u,) for u in _U7),
            tolerance=1e-9,
            tolerance_mode=ABSOLUTE,
            lhs=lambda u: _plain(cs.beta(u, 1.0)),
            rhs=lambda u: _plain(1.0 / u),
        ),
        IdentitySpec(
            id="POCH",
            description="rising(x, n) = Gamma(x+n)/Gamma(x)",
            anchor="Pochhammer symbol as a gamma ratio",
            grid=tuple((x, n) for x in (0.3, 1.5, 4.0) for n in range(0, 11)),
            tolerance=1e-11,
            tolerance_mode=RELATIVE,
            lhs=lambda x, n: _plain(cs.rising(x, n)),
            rhs=lambda x, n: _plain(cs.gamma(x + n) / cs.gamma(x)),
        ),
        IdentitySpec(
            id="EQ1",
            description="lim_{v->0} [B(u,v) - 1/v] = u dB/dv|_{v=1} + 1/u",
            anchor="finite part of the beta pole at v = 0",
            grid=tuple((u,) for u in _U7),
            tolerance=1e-7,
            tolerance_mode=ABSOLUTE,
            lhs=lambda u: _limit(lm.beta_pole_limit(u)),
            rhs=_log_moment_form,
        ),
        IdentitySpec(
            id="EQ2",
            description="lim_{v->0} [Gamma(v) - 1/v] = -gamma  (= Gamma'(1))",
            anchor="gamma-pole limit for the Euler-Mascheroni constant",
            grid=(("pole",), ("lhopital",)),
            tolerance=1e-7,
            tolerance_mode=ABSOLUTE,
            lhs=_eq2_route,
            rhs=lambda route: _plain(-cs.euler_gamma()),
        ),
        IdentitySpec(
            id="EQ3",
            description="psi(u) = -gamma - [u dB/dv|_{v=1} + 1/u]",
            anchor="digamma from the beta derivative",
            grid=tuple((u,) for u in _U7),
            tolerance=1e-9,
            tolerance_mode=ABSOLUTE,
            lhs=lambda u: _plain(cs.digamma(u)),
            rhs=_eq3_rhs,
        ),
        IdentitySpec(
            id="EQ4",
            description="-u int_0^1 t^{u-1} log(1-t) dt = gamma + psi(u+1)",
            anchor="log-moment integral of the beta kernel",
            grid=tuple((u,) for u in _U7),
            tolerance=1e-9,
            tolerance_mode=ABSOLUTE,
            lhs=_neg_n_log_moment,
            rhs=lambda u: _plain(cs.EULER_GAMMA + cs.digamma(u + 1.0)),
        ),
        IdentitySpec(
            id="EQ4H",
            description="-n int_0^1 t^{n-1} log(1-t) dt = H_n",
            anchor="harmonic-number case of the log-moment integral",
            grid=tuple((n,) for n in range(1, 11)),
            tolerance=1e-9,
            tolerance_mode=ABSOLUTE,
            lhs=_neg_n_log_moment,
            rhs=lambda n: _plain(cs.harmonic(n)),
        ),
        IdentitySpec(
            id="EQ4B",
            description="int_0^1 (1 - t^u)/(1 - t) dt = gamma + psi(u+1)",
            anchor="familiar integral for the digamma function",
            grid=tuple((u,) for u in _U7),
            tolerance=1e-9,
            tolerance_mode=ABSOLUTE,
            lhs=lambda u: _quad(qd.digamma_integral(u)),
            rhs=lambda u: _plain(cs.EULER_GAMMA + cs.digamma(u + 1.0)),
        ),
        IdentitySpec(
            id="EQ5",
            description="B(u,v) = 1/v + sum_{n>=1} (1-u)_n / ((n+v) n!)",
            anchor="binomial-series expansion of the beta function",
            grid=tuple((u, v) for u in _U7 for v in _V3),
            tolerance=1e-4,
            tolerance_mode=TAIL_AWARE,
            lhs=lambda u, v: _series(sr.beta_series(u, v, _SUITE_SERIES)),
            rhs=lambda u, v: _quad(qd.beta_integral(u, v)),
        ),
        IdentitySpec(
            id="EQ6",
            description="lim_{v->0} [B(u,v) - 1/v] = sum_{n>=1} (1-u)_n / (n n!)",
            anchor="termwise v->0 limit of the beta expansion",
            grid=tuple((u,) for u in _U7),
            tolerance=1e-4,
            tolerance_mode=TAIL_AWARE,
            lhs=lambda u: _series(sr.beta_limit_series(u, _SUITE_SERIES)),
            rhs=lambda u: _limit(lm.beta_pole_limit(u)),
        ),
        IdentitySpec(
            id="EQ7",
            description="psi(u) = -gamma - sum_{n>=1} (1-u)_n / (n n!)",
            anchor="series form of the digamma function",
            grid=tuple((u,) for u in _U7),
            tolerance=1e-4,
            tolerance_mode=TAIL_AWARE,
            lhs=lambda u: _series(sr.digamma_series(u, _SUITE_SERIES)),
            rhs=lambda u: _plain(cs.digamma(u)),
        ),
        IdentitySpec(
            id="EQ7H",
            description="psi(1/2) = -gamma - 2 log 2",
            anchor="digamma at one half",
            grid=((0.5,),),
            tolerance=1e-9,
            tolerance_mode=ABSOLUTE,
            lhs=lambda u: _plain(cs.digamma(u)),
            rhs=lambda u: _plain(-cs.EULER_GAMMA - 2.0 * math.log(2.0)),
        ),
        IdentitySpec(
            id="LOG2",
            description="log 2 = sum_{n>=1} C(2n,n) / (n 2^{2n+1})",
            anchor="central-binomial series for log 2",
            grid=((),),
            tolerance=1e-4,
            tolerance_mode=TAIL_AWARE,
            lhs=lambda: _series(sr.log2_series(_SUITE_SERIES)),
            rhs=lambda: _plain(math.log(2.0)),
        ),
        IdentitySpec(
            id="EQ8",
            description="psi(x+a) - psi(a) = sum_{k>=1} (-1)^{k+1}/k falling(x,k)/rising(a,k)",
            anchor="Norlund's difference series for the digamma function",
            grid=tuple((float(m), 1.0) for m in range(1, 11)) + ((0.0, 2.5), (0.5, 0.5)),
            tolerance=1e-4,
            tolerance_mode=TAIL_AWARE,
            lhs=lambda x, a: _series(sr.norlund_diff(x, a, _SUITE_SERIES)),
            rhs=lambda x, a: _plain(cs.digamma(x + a) - cs.digamma(a)),
        ),
        IdentitySpec(
            id="EQ9",
            description="psi'(u) = sum_{n>=1} (1-u)_n/(n n!) [psi(n+1-u) - psi(1-u)]",
            anchor="termwise derivative of the digamma series",
            grid=((0.25,), (0.5,), (0.75,)),
            tolerance=1e-4,
            tolerance_mode=TAIL_AWARE,
            lhs=lambda u: _series(sr.trigamma_series(u, _SUITE_SERIES)),
            rhs=lambda u: _plain(cs.trigamma(u)),
        ),
        IdentitySpec(
            id="EQ10",
            description="psi'(1/2) = sum_{n>=1} 2 C(2n,n)/(n 4^n) sum_{k=0}^{n-1} 1/(2k+1)",
            anchor="central-binomial series for psi'(1/2)",
            grid=((sr.CORRECTED,),),
            tolerance=5e-4,
            tolerance_mode=TAIL_AWARE,
            lhs=lambda conv: _series(sr.trigamma_half_series(conv, _SUITE_SERIES)),
            rhs=lambda conv: _plain(cs.trigamma(0.5)),
        ),
        IdentitySpec(
            id="EQ11",
            description="zeta(2) = (1/3) sum_{n>=1} 2 C(2n,n)/(n 4^n) sum_{k=0}^{n-1} 1/(2k+1)",
            anchor="central-binomial series for zeta(2)",
            grid=((sr.CORRECTED,),),
            tolerance=2e-4,
            tolerance_mode=TAIL_AWARE,
            lhs=lambda conv: _series(sr.zeta2_series(conv, _SUITE_SERIES)),
            rhs=lambda conv: _plain(cs.riemann_zeta(2.0)),
        ),
        IdentitySpec(
            id="DUP",
            description="Gamma(t) Gamma(t+1/2) = sqrt(pi) 2^{1-2t} Gamma(2t)",
            anchor="Legendre's duplication formula",
            grid=tuple((t,) for t in (0.25, 0.5, 1.0, 2.0, 5.0, 10.0)),
            tolerance=1e-11,
            tolerance_mode=RELATIVE,
            lhs=lambda t: _plain(cs.gamma(t) * cs.gamma(t + 0.5)),
            rhs=lambda t: _plain(math.sqrt(math.pi) * 2.0 ** (1.0 - 2.0 * t) * cs.gamma(2.0 * t)),
        ),
        IdentitySpec(
            id="GHALF",
            description="Gamma(n + 1/2) = sqrt(pi) (2n)! / (4^n n!)",
            anchor="half-integer gamma closed form",
            grid=tuple((n,) for n in range(1, 11)),
            tolerance=1e-12,
            tolerance_mode=RELATIVE,
            lhs=lambda n: _plain(cs.gamma_half(n)),
            rhs=lambda n: _plain(cs.gamma(n + 0.5)),
        ),
        IdentitySpec(
            id="BHALF",
            description="B(n, 1/2) = 4^n / (n C(2n,n))",
            anchor="half-integer beta closed form",
            grid=tuple((n,) for n in range(1, 11)),
            tolerance=1e-11,
            tolerance_mode=RELATIVE,
            lhs=lambda n: _plain(cs.beta_half(n)),
            rhs=lambda n: _plain(cs.beta(float(n), 0.5)),
        ),
        IdentitySpec(
            id="ZHALF",
            description="zeta(s, 1/2) = (2^s - 1) zeta(s)",
            anchor="Hurwitz zeta at a = 1/2",
            grid=tuple((float(s),) for s in (2, 3, 4, 6)),
            tolerance=1e-11,
            tolerance_mode=RELATIVE,
            lhs=lambda s: _plain(cs.hurwitz_zeta(s, 0.5)),
            rhs=lambda s: _plain((2.0**s - 1.0) * cs.riemann_zeta(s)),
        ),
        IdentitySpec(
            id="PSIM",
            description="psi'(x) = (-1)^2 1! zeta(2, x), checked against a psi central difference",
            anchor="polygamma as a Hurwitz zeta value",
            grid=tuple((x,) for x in (0.5, 1.0, 2.0, 5.0)),
            tolerance=1e-6,
            tolerance_mode=ABSOLUTE,
            lhs=lambda x: _plain(cs.polygamma(1, x)),
            rhs=lambda x: _plain(
                (cs.digamma(x + _FD_STEP) - cs.digamma(x - _FD_STEP)) / (2.0 * _FD_STEP)
            ),
        ),
    ]
    ids = [spec.id for spec in specs]
    if len(set(ids)) != len(ids):
        raise AssertionError("registry ids must be unique")
    return tuple(specs)


_REGISTRY: tuple[IdentitySpec, ...] | None = None


def builtin_registry() -> tuple[IdentitySpec, ...]:
    """The full identity registry, built once and cached."""
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build_registry()
    return _REGISTRY


# --- running --------------------------------------------------------------

_SKIP_ERRORS = (DomainError, OverflowRangeError, NonConvergenceError)


def run_identity(
    spec: IdentitySpec,
    grid: Sequence[tuple] | None = None,
    tolerance: float | None = None,
) -> list[CheckRecord]:
    """Evaluate one identity over its grid (or an override grid/tolerance).

    Domain errors, overflow, and refinement-cap signals from either side
    yield a skipped record with the reason attached; they never propagate.
    """
    tol = spec.tolerance if tolerance is None else float(tolerance)
    if not (tol > 0.0 and math.isfinite(tol)):
        raise DomainError(f"tolerance must be a positive finite real, got {tolerance!r}")
    points = spec.grid if grid is None else tuple(tuple(p) for p in grid)
    records = []
    for params in points:
        try:
            lhs_value, lhs_diag = spec.lhs(*params)
            rhs_value, rhs_diag = spec.rhs(*params)
        except _SKIP_ERRORS as exc:
            records.append(
                CheckRecord(
                    identity_id=spec.id,
                    params=params,
                    lhs_value=None,
                    rhs_value=None,
                    abs_err=None,
                    rel_err=None,
                    effective_tol=None,
                    passed=None,
                    skipped=True,
                    reason=f"{type(exc).__name__}: {exc}",
                    diagnostics={},
                )
            )
            continue
        diag = _merge_diag(lhs_diag, rhs_diag)
        abs_err = abs(lhs_value - rhs_value)
        scale = max(abs(lhs_value), abs(rhs_value))
        rel_err = abs_err / scale if scale > 0.0 else 0.0
        if spec.tolerance_mode == RELATIVE:
            effective = tol * scale
        elif spec.tolerance_mode == TAIL_AWARE:
            effective = tol + diag.get("tail_estimate", 0.0)
        else:
            effective = tol
        records.append(
            CheckRecord(
                identity_id=spec.id,
                params=params,
                lhs_value=lhs_value,
                rhs_value=rhs_value,
                abs_err=abs_err,
                rel_err=rel_err,
                effective_tol=effective,
                passed=abs_err <= effective,
                skipped=False,
                reason=None,
                diagnostics=diag,
            )
        )
    return records


def _literal_observation(identity_id: str) -> Mapping:
    """The literal-convention (inner k from 1) value for EQ10 / EQ11."""
    if identity_id == "EQ10":
        res = sr.trigamma_half_series(sr.LITERAL, _SUITE_SERIES)
        reference = cs.trigamma(0.5)
    else:
        res = sr.zeta2_series(sr.LITERAL, _SUITE_SERIES)
        reference = cs.riemann_zeta(2.0)
    return {
        "identity_id": identity_id,
        "convention": sr.LITERAL,
        "value": res.value,
        "reference": reference,
        "abs_difference": abs(res.value - reference),
    }


def run_suite(
    only: Iterable[str] | None = None,
    overrides: Mapping[str, Mapping] | None = None,
) -> SuiteReport:
    """Run selected identities (default: all) and collect a SuiteReport.

    ``only`` filters by identity id and raises :class:`UnknownIdentityError`
    before any evaluation if an id is not registered.  ``overrides`` may map
    an id to ``{"grid": ..., "tolerance": ...}`` keyword overrides for
    :func:`run_identity`.
    """
    registry = builtin_registry()
    by_id = {spec.id: spec for spec in registry}
    if only is None:
        selected = list(registry)
    else:
        wanted = list(only)
        missing = sorted(set(wanted) - set(by_id))
        if missing:
            raise UnknownIdentityError(
                f"unknown identity id(s): {', '.join(missing)}; "
                f"known ids: {', '.join(sorted(by_id))}"
            )
        # Keep one entry per requested id, in registry order.
        chosen = set(wanted)
        selected = [spec for spec in registry if spec.id in chosen]
    overrides = overrides or {}
    records: list[CheckRecord] = []
    informational: list[Mapping] = []
    for spec in selected:
        kw = overrides.get(spec.id, {})
        records.extend(
            run_identity(spec, grid=kw.get("grid"), tolerance=kw.get("tolerance"))
        )
        if spec.id in ("EQ10", "EQ11"):
            informational.append(_literal_observation(spec.id))
    records.sort(key=lambda r: r.identity_id)  # stable: grid order kept within an id
    informational.sort(key=lambda obs: obs["identity_id"])
    passed = sum(1 for r in records if r.passed is True)
    failed = sum(1 for r in records if r.passed is False)
    skipped = sum(1 for r in records if r.skipped)
    counts = {
        "total": len(records),
        "passed": passed,
        "failed": failed,
        "skipped": skipped,
    }
    return SuiteReport(
        records=tuple(records),
        counts=counts,
        tool_version=TOOL_VERSION,
        informational=tuple(informational),
    )


# --- rendering ------------------------------------------------------------


def _fmt(value) -> str:
    """Deterministic scalar formatting: 17 significant digits for floats."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def _json_scalar(value) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    if isinstance(value, int):
        return str(value)
    return '"' + str(value).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _json_record(record: CheckRecord) -> str:
    diag = record.diagnostics
    diag_body = ", ".join(
        f'"{key}": {_json_scalar(diag.get(key))}' for key in _DIAG_KEYS
    )
    params = ", ".join(_json_scalar(p) for p in record.params)
    fields = [
        f'"identity_id": {_json_scalar(record.identity_id)}',
        f'"params": [{params}]',
        f'"lhs": {_json_scalar(record.lhs_value)}',
        f'"rhs": {_json_scalar(record.rhs_value)}',
        f'"abs_err": {_json_scalar(record.abs_err)}',
        f'"rel_err": {_json_scalar(record.rel_err)}',
        f'"effective_tol": {_json_scalar(record.effective_tol)}',
        f'"pass": {_json_scalar(record.passed)}',
        f'"skipped": {_json_scalar(record.skipped)}',
        f'"reason": {_json_scalar(record.reason)}',
        f'"diagnostics": {{{diag_body}}}',
    ]
    return "{" + ", ".join(fields) + "}"


_INFO_KEYS = ("identity_id", "convention", "value", "reference", "abs_difference")


def _render_json(report: SuiteReport) -> bytes:
    counts = report.counts
    lines = [
        "{",
        f'  "tool_version": {_json_scalar(report.tool_version)},',
        '  "counts": {'
        + f'"total": {counts["total"]}, "passed": {counts["passed"]}, '
        + f'"failed": {counts["failed"]}, "skipped": {counts["skipped"]}'
        + "},",
    ]
    if report.records:
        lines.append('  "records": [')
        for i, record in enumerate(report.records):
            comma = "," if i + 1 < len(report.records) else ""
            lines.append("    " + _json_record(record) + comma)
        lines.append("  ],")
    else:
        lines.append('  "records": [],')
    if report.informational:
        lines.append('  "informational": [')
        for i, obs in enumerate(report.informational):
            comma = "," if i + 1 < len(report.informational) else ""
            body = ", ".join(f'"{k}": {_json_scalar(obs.get(k))}' for k in _INFO_KEYS)
            lines.append("    {" + body + "}" + comma)
        lines.append("  ]")
    else:
        lines.append('  "informational": []')
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


_CSV_HEADER = (
    "identity_id",
    "params",
    "lhs",
    "rhs",
    "abs_err",
    "rel_err",
    "effective_tol",
    "pass",
    "skipped",
    "reason",
    "terms_used",
    "tail_estimate",
    "levels_used",
    "table_depth",
)


def _render_csv(report: SuiteReport) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_HEADER)
    for r in report.records:
        writer.writerow(
            [
                r.identity_id,
                ";".join(_fmt(p) for p in r.params),
                _fmt(r.lhs_value),
                _fmt(r.rhs_value),
                _fmt(r.abs_err),
                _fmt(r.rel_err),
                _fmt(r.effective_tol),
                _fmt(r.passed),
                _fmt(r.skipped),
                r.reason or "",
            ]
            + [_fmt(r.diagnostics.get(key)) for key in _DIAG_KEYS]
        )
    return buf.getvalue().encode("utf-8")


def _render_table(report: SuiteReport) -> bytes:
    headers = ("identity", "params", "lhs", "rhs", "abs_err", "effective_tol", "status")
    rows = []
    for r in report.records:
        if r.skipped:
            status = "skip"
        else:
            status = "pass" if r.passed else "FAIL"
        rows.append(
            (
                r.identity_id,
                ";".join(_fmt(p) for p in r.params),
                _fmt(r.lhs_value),
                _fmt(r.rhs_value),
                _fmt(r.abs_err),
                _fmt(r.effective_tol),
                status,
            )
        )
    widths = [
        max(len(h), max((len(row[i]) for row in rows), default=0))
        for i, h in enumerate(headers)
    ]
    out = []
    out.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip())
    out.append("  ".join("-" * w for w in widths))
    for row in rows:
        out.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    c = report.counts
    out.append("")
    out.append(
        f"total {c['total']}  passed {c['passed']}  failed {c['failed']}  "
        f"skipped {c['skipped']}  (tool {report.tool_version})"
    )
    for obs in report.informational:
        out.append(
            f"info: {obs['identity_id']} {obs['convention']} convention -> "
            f"value {_fmt(obs['value'])}, reference {_fmt(obs['reference'])}, "
            f"|difference| {_fmt(obs['abs_difference'])}"
        )
    return ("\n".join(out) + "\n").encode("utf-8")


def render_report(report: SuiteReport, format: str = "table") -> bytes:
    """Serialize a report as UTF-8 bytes in ``table``, ``json``, or ``csv`` form.

    All three carry identical record data (floats always at 17 significant
    digits); rendering the same report twice is byte-identical.
    """
    if format == "json":
        return _render_json(report)
    if format == "csv":
        return _render_csv(report)
    if format == "table":
        return _render_table(report)
    raise DomainError(f"format must be one of table, json, csv; got {format!r}")
