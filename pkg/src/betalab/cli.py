"""Command-line front end.

Five subcommands expose the package: ``eval`` (reference special functions),
``series`` (slowly convergent series with an optional convergence table),
``integrate`` (tanh-sinh kernels), ``limit`` (Richardson-extrapolated
limits), and ``verify`` (the identity suite with table/json/csv reports).

Exit codes: 0 success (and all identities passing), 1 verification failures,
2 usage or domain errors, 3 non-convergence (quadrature refinement cap, or a
series run that hit ``--max-terms`` with its estimated tail still above an
explicitly requested ``--tol``).

Every printed number uses 17 significant digits, so parsing it back yields
the exact double that was computed.  All behaviour is controlled by flags;
there are no config files or environment variables.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import core_special as cs
from . import limits as lm
from . import quadrature as qd
from . import series as sr
from . import verify as vf
from .errors import BetalabError, DomainError, NonConvergenceError

__all__ = ["CommandInvocation", "parse", "execute", "main"]


@dataclass(frozen=True)
class CommandInvocation:
    """A validated command line: the chosen subcommand plus its options."""

    subcommand: str
    options: Mapping


def _g(value: float) -> str:
    return format(value, ".17g")


# --- eval -----------------------------------------------------------------

# function name -> (callable, ((flag, converter), ...)) in positional order
_EVAL_TABLE = {
    "lgamma": (cs.lgamma, (("x", float),)),
    "gamma": (cs.gamma, (("x", float),)),
    "beta": (cs.beta, (("x", float), ("x2", float))),
    "digamma": (cs.digamma, (("x", float),)),
    "trigamma": (cs.trigamma, (("x", float),)),
    "polygamma": (cs.polygamma, (("x", int), ("x2", float))),
    "hurwitz_zeta": (cs.hurwitz_zeta, (("x", float), ("x2", float))),
    "riemann_zeta": (cs.riemann_zeta, (("x", float),)),
    "rising": (cs.rising, (("x", float), ("x2", int))),
    "falling": (cs.falling, (("x", float), ("x2", int))),
    "central_binom": (cs.central_binom, (("x", int),)),
    "harmonic": (cs.harmonic, (("x", int),)),
    "odd_harmonic": (cs.odd_harmonic, (("x", int),)),
    "euler_gamma": (cs.euler_gamma, ()),
    "gamma_half": (cs.gamma_half, (("x", int),)),
    "beta_half": (cs.beta_half, (("x", int),)),
}


def _run_eval(options: Mapping) -> int:
    name = options["function"]
    func, signature = _EVAL_TABLE[name]
    wanted = [flag for flag, _ in signature]
    for flag in ("x", "x2"):
        if options.get(flag) is not None and flag not in wanted:
            raise DomainError(f"eval {name} takes no --{flag}")
    args = []
    for flag, conv in signature:
        raw = options.get(flag)
        if raw is None:
            raise DomainError(f"eval {name} requires --{flag}")
        try:
            args.append(conv(raw))
        except ValueError:
            kind = "an integer" if conv is int else "a number"
            raise DomainError(f"--{flag} must be {kind}, got {raw!r}") from None
    print(_g(func(*args)))
    return 0


# --- series ---------------------------------------------------------------

# series name -> ((flag, parameter-name), ...)
_SERIES_PARAMS = {
    "beta": (("u", "u"), ("v", "v")),
    "beta-limit": (("u", "u"),),
    "digamma": (("u", "u"),),
    "log2": (),
    "norlund": (("xarg", "x"), ("a", "a")),
    "trigamma": (("u", "u"),),
    "trigamma-half": (("convention", "convention"),),
    "zeta2": (("convention", "convention"),),
}

_DEFAULT_SERIES_TOL = 1e-10


def _run_series(options: Mapping) -> int:
    name = options["name"]
    signature = _SERIES_PARAMS[name]
    wanted = [flag for flag, _ in signature]
    for flag in ("u", "v", "a", "xarg", "convention"):
        if options.get(flag) is not None and flag not in wanted:
            raise DomainError(f"series {name} takes no --{flag}")
    params = {}
    for flag, param in signature:
        raw = options.get(flag)
        if raw is None:
            if flag == "convention":
                raw = sr.CORRECTED
            else:
                raise DomainError(f"series {name} requires --{flag}")
        params[param] = raw
    every = options["every"]
    if every < 0:
        raise DomainError(f"--every must be >= 0, got {every}")
    explicit_tol = options["tol"]
    ctrl = sr.SeriesControl(
        max_terms=10**6 if options["max_terms"] is None else options["max_terms"],
        tol=_DEFAULT_SERIES_TOL if explicit_tol is None else explicit_tol,
        tail_correction=not options["no_tail_correction"],
    )
    result, rows = sr.trace(name, params, ctrl, every)
    if rows:
        print(f"{'n':>10}  {'term':>24}  {'partial_sum':>24}  {'tail_estimate':>24}")
        for row in rows:
            print(
                f"{row.n:>10}  {_g(row.term):>24}  {_g(row.partial_sum):>24}  "
                f"{_g(row.tail_estimate):>24}"
            )
        print()
    print(f"value            = {_g(result.value)}")
    print(f"raw_partial_sum  = {_g(result.raw_partial_sum)}")
    print(f"tail_estimate    = {_g(result.tail_estimate)}")
    print(f"terms_used       = {result.terms_used}")
    print(f"termination      = {result.termination}")
    print(f"reductions       = {result.reductions}")
    if (
        explicit_tol is not None
        and result.termination == sr.MAX_TERMS
        and result.tail_estimate > explicit_tol
    ):
        print(
            f"error: series stopped at max_terms with estimated tail "
            f"{_g(result.tail_estimate)} above tol {_g(explicit_tol)}",
            file=sys.stderr,
        )
        return 3
    return 0


# --- integrate ------------------------------------------------------------


def _run_integrate(options: Mapping) -> int:
    kernel = options["kernel"]
    tol = options["tol"]
    u = options.get("u")
    v = options.get("v")
    if kernel == "beta":
        if u is None or v is None:
            raise DomainError("integrate beta requires --u and --v")
        res = qd.beta_integral(u, v, tol)
    else:
        if u is None:
            raise DomainError(f"integrate {kernel} requires --u")
        if v is not None:
            raise DomainError(f"integrate {kernel} takes no --v")
        if kernel == "log-kernel":
            res = qd.log_kernel_moment(u, tol)
        else:
            res = qd.digamma_integral(u, tol)
    print(f"value          = {_g(res.value)}")
    print(f"error_estimate = {_g(res.error_estimate)}")
    print(f"levels_used    = {res.levels_used}")
    print(f"evaluations    = {res.evaluations}")
    return 0


# --- limit ----------------------------------------------------------------


def _print_limit(res: lm.LimitResult, prefix: str = "") -> None:
    print(f"{prefix}value          = {_g(res.value)}")
    print(f"{prefix}error_estimate = {_g(res.error_estimate)}")
    print(f"{prefix}table_depth    = {res.table_depth}")


def _run_limit(options: Mapping) -> int:
    name = options["name"]
    depth = options["depth"]
    h0 = options.get("h0")
    u = options.get("u")
    if name in ("gamma-pole", "gamma-derivative"):
        if u is not None:
            raise DomainError(f"limit {name} takes no --u")
        start = 0.5 if h0 is None else h0
        if name == "gamma-pole":
            _print_limit(lm.gamma_pole_limit(depth, start))
        else:
            _print_limit(lm.gamma_derivative_at_1(depth, start))
        return 0
    if u is None:
        raise DomainError(f"limit {name} requires --u")
    start = 0.25 if h0 is None else h0
    if name == "beta-pole":
        _print_limit(lm.beta_pole_limit(u, depth, start))
        return 0
    via_log, via_recur = lm.scaled_beta_limits(u, depth, start)
    _print_limit(via_log, prefix="via_log_gamma  ")
    _print_limit(via_recur, prefix="via_recurrence ")
    return 0


# --- verify ---------------------------------------------------------------


def _run_verify(options: Mapping) -> int:
    only = None
    if options.get("only"):
        tokens = [s.strip() for s in options["only"].split(",") if s.strip()]
        only = tokens or None
    report = vf.run_suite(only=only)
    data = vf.render_report(report, options["format"])
    out = options.get("out")
    if out:
        with open(out, "wb") as handle:
            handle.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    return 1 if report.counts["failed"] > 0 else 0


# --- parsing and dispatch -------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betalab",
        description="Special-function laboratory: evaluate, sum, integrate, "
        "extrapolate, and verify classical beta/gamma identities.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a reference special function")
    p_eval.add_argument("function", choices=sorted(_EVAL_TABLE))
    p_eval.add_argument("--x", help="first argument")
    p_eval.add_argument("--x2", help="second argument (two-argument functions)")

    p_series = sub.add_parser("series", help="sum a slowly convergent series")
    p_series.add_argument("name", choices=sorted(_SERIES_PARAMS))
    p_series.add_argument("--u", type=float, help="series parameter u")
    p_series.add_argument("--v", type=float, help="series parameter v")
    p_series.add_argument("--a", type=float, help="difference-series parameter a")
    p_series.add_argument("--xarg", type=float, help="difference-series parameter x")
    p_series.add_argument(
        "--convention",
        choices=sr.CONVENTIONS,
        help="inner-sum lower index (default: corrected)",
    )
    p_series.add_argument("--max-terms", type=int, help="term cap (default 1000000)")
    p_series.add_argument("--tol", type=float, help="stop when estimated tail <= tol")
    p_series.add_argument(
        "--every", type=int, default=0, help="print a table row every N terms"
    )
    p_series.add_argument(
        "--no-tail-correction",
        action="store_true",
        help="report the raw partial sum as the value",
    )

    p_int = sub.add_parser("integrate", help="tanh-sinh integration of a kernel")
    p_int.add_argument("kernel", choices=("beta", "digamma", "log-kernel"))
    p_int.add_argument("--u", type=float, help="kernel parameter u")
    p_int.add_argument("--v", type=float, help="kernel parameter v (beta only)")
    p_int.add_argument(
        "--tol", type=float, default=1e-12, help="refinement tolerance (default 1e-12)"
    )

    p_lim = sub.add_parser("limit", help="Richardson-extrapolated v->0 limits")
    p_lim.add_argument(
        "name", choices=("beta-pole", "gamma-derivative", "gamma-pole", "scaled-beta")
    )
    p_lim.add_argument("--u", type=float, help="first beta argument")
    p_lim.add_argument("--h0", type=float, help="largest sample point (default per op)")
    p_lim.add_argument(
        "--depth", type=int, default=10, help="extrapolation table depth (default 10)"
    )

    p_ver = sub.add_parser("verify", help="run the identity suite and report")
    p_ver.add_argument("--only", help="comma-separated identity ids (default: all)")
    p_ver.add_argument(
        "--format", choices=("table", "json", "csv"), default="table"
    )
    p_ver.add_argument("--out", help="write the report to this path instead of stdout")
    return parser


_HANDLERS = {
    "eval": _run_eval,
    "series": _run_series,
    "integrate": _run_integrate,
    "limit": _run_limit,
    "verify": _run_verify,
}


def parse(argv: Sequence[str]) -> CommandInvocation:
    """Parse arguments into a CommandInvocation.

    Usage problems follow argparse convention and raise ``SystemExit(2)``
    (with help text on stderr); :func:`main` converts that to an exit code.
    """
    namespace = _build_parser().parse_args(list(argv))
    options = vars(namespace).copy()
    subcommand = options.pop("subcommand")
    return CommandInvocation(subcommand=subcommand, options=options)


def execute(inv: CommandInvocation) -> int:
    """Run a parsed invocation and return its exit code."""
    return _HANDLERS[inv.subcommand](inv.options)


def main(argv: Sequence[str] | None = None) -> int:
    """CLI entry point; returns the process exit code."""
    try:
        inv = parse(sys.argv[1:] if argv is None else argv)
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return execute(inv)
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        partial = exc.result
        if partial is not None:
            print(
                f"partial value = {_g(partial.value)} "
                f"(error estimate {_g(partial.error_estimate)})",
                file=sys.stderr,
            )
        return 3
    except BetalabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
