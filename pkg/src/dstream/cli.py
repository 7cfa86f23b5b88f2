"""Command-line front end: ``dstream {trace,lookup,quality,validate}``.

CSV output uses LF line endings, a header row unless ``--no-header``, and an
empty field for discards or unfilled sites. ``--format json`` emits a list of
objects keyed by the same column names (``validate`` wraps its rows in
``{"ok": ..., "checks": [...]}``).

Exit codes: 0 ok, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from . import oracle, quality
from .chronology import ALGORITHMS, DomainError, SurfaceSpec, time_horizon
from .steady import lookup as _steady_lookup
from .stretched import lookup as _stretched_lookup
from .tilted import lookup as _tilted_lookup

_LOOKUP = {
    "steady": _steady_lookup,
    "stretched": _stretched_lookup,
    "tilted": _tilted_lookup,
}

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    algorithm: str
    spec: SurfaceSpec
    horizon: int
    output_format: str = "csv"
    header: bool = True
    stride: int = 1


def _fraction_text(x: Fraction | None) -> str:
    if x is None:
        return ""
    return f"{x.numerator}/{x.denominator}"


def _decimal_text(x: Fraction | None) -> str:
    if x is None:
        return ""
    return f"{x.numerator / x.denominator:.6f}"


def _emit(rows: list[dict[str, Any]], columns: Sequence[str], config: RunConfig, out) -> None:
    if config.output_format == "json":
        out.write(json.dumps(rows, separators=(",", ":")) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if config.header:
        writer.writerow(columns)
    for row in rows:
        writer.writerow(["" if row[c] is None else row[c] for c in columns])
    out.write(buf.getvalue())


def cmd_trace(config: RunConfig, out) -> int:
    select = oracle.SITE_SELECT[config.algorithm]
    rows = [{"T": T, "k": select(config.spec, T)} for T in range(config.horizon)]
    _emit(rows, ("T", "k"), config, out)
    return EXIT_OK


def cmd_lookup(config: RunConfig, out) -> int:
    table = _LOOKUP[config.algorithm](config.spec, config.horizon)
    rows = [{"k": k, "T_hat": v} for k, v in enumerate(table)]
    _emit(rows, ("k", "T_hat"), config, out)
    return EXIT_OK


QUALITY_COLUMNS = ("T", "cost", "lower", "upper", "cost_dec", "lower_dec", "upper_dec")


def quality_row(algorithm: str, spec: SurfaceSpec, T: int) -> dict[str, Any]:
    retained = [v for v in _LOOKUP[algorithm](spec, T) if v is not None]
    rep = quality.cost_report(algorithm, spec.size, T, retained)
    return {
        "T": T,
        "cost": _fraction_text(rep.cost),
        "lower": _fraction_text(rep.lower_bound),
        "upper": _fraction_text(rep.upper_bound),
        "cost_dec": _decimal_text(rep.cost),
        "lower_dec": _decimal_text(rep.lower_bound),
        "upper_dec": _decimal_text(rep.upper_bound),
    }


def cmd_quality(config: RunConfig, out) -> int:
    rows = [
        quality_row(config.algorithm, config.spec, T)
        for T in range(0, config.horizon + 1, config.stride)
    ]
    _emit(rows, QUALITY_COLUMNS, config, out)
    return EXIT_OK


VALIDATE_COLUMNS = ("check", "status", "T", "site", "expected", "actual")


@dataclass
class Divergence:
    T: int
    site: int | None
    expected: Any
    actual: Any


def validate(algorithm: str, spec: SurfaceSpec, horizon: int) -> dict[str, Divergence | None]:
    """Check every ``T`` in ``[0, horizon]``; return the first divergence per suite.

    Suites: ``roundtrip`` (lookup vs. replay), ``retention`` (goal set kept),
    ``bounds`` (cost within its lower/upper bounds).
    """
    lookup = _LOOKUP[algorithm]
    goal = oracle.GOALS[algorithm]
    state = oracle.ReplayState(algorithm, spec)
    first: dict[str, Divergence | None] = {"roundtrip": None, "retention": None, "bounds": None}
    for T in range(horizon + 1):
        state.advance_to(T)
        table = lookup(spec, T)
        if first["roundtrip"] is None and table != state.table:
            k = next(k for k, (a, b) in enumerate(zip(state.table, table)) if a != b)
            first["roundtrip"] = Divergence(T, k, state.table[k], table[k])
        retained = {v for v in state.table if v is not None}
        if first["retention"] is None:
            missing = sorted(goal(spec, T) - retained)
            if missing:
                first["retention"] = Divergence(T, None, missing[0], None)
        if first["bounds"] is None and T > 0:
            rep = quality.cost_report(algorithm, spec.size, T, retained)
            if not rep.within_bounds:
                first["bounds"] = Divergence(
                    T,
                    None,
                    f"[{_fraction_text(rep.lower_bound)},{_fraction_text(rep.upper_bound)}]",
                    _fraction_text(rep.cost),
                )
    return first


def _paint(text: str, ok: bool) -> str:
    if os.environ.get("DSTREAM_COLOR", "0") != "1":
        return text
    return f"\x1b[{32 if ok else 31}m{text}\x1b[0m"


def cmd_validate(config: RunConfig, out, err=None) -> int:
    err = sys.stderr if err is None else err
    result = validate(config.algorithm, config.spec, config.horizon)
    rows = []
    for check, div in result.items():
        if div is None:
            rows.append(dict(check=check, status="pass", T=None, site=None, expected=None, actual=None))
        else:
            rows.append(
                dict(check=check, status="fail", T=div.T, site=div.site,
                     expected=div.expected, actual=div.actual)
            )
    ok = all(div is None for div in result.values())
    if config.output_format == "json":
        out.write(json.dumps({"ok": ok, "checks": rows}, separators=(",", ":")) + "\n")
    else:
        _emit(rows, VALIDATE_COLUMNS, config, out)
    verdict = "PASS" if ok else "FAIL"
    err.write(
        _paint(verdict, ok)
        + f" {config.algorithm} S={config.spec.size} horizon={config.horizon}\n"
    )
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "trace": cmd_trace,
    "lookup": cmd_lookup,
    "quality": cmd_quality,
    "validate": cmd_validate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dstream", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, time_flag: str, time_help: str) -> None:
        p.add_argument("--algo", required=True, choices=ALGORITHMS)
        p.add_argument("-S", "--surface-size", type=int, required=True, dest="size")
        p.add_argument("-T", time_flag, type=int, required=True, dest="horizon", help=time_help)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--no-header", action="store_true")

    common(sub.add_parser("trace", help="site selection per ingest"),
           "--horizon", "emit rows for T in [0, horizon)")
    common(sub.add_parser("lookup", help="ingest time held at each site"),
           "--time", "number of items ingested")
    q = sub.add_parser("quality", help="cost and bounds over time")
    common(q, "--horizon", "last T evaluated (inclusive)")
    q.add_argument("--stride", type=int, default=1)
    common(sub.add_parser("validate", help="round-trip, retention, and bound checks"),
           "--horizon", "last T checked (inclusive)")
    return parser


def make_config(args: argparse.Namespace) -> RunConfig:
    try:
        spec = SurfaceSpec(args.size)
        spec.check_algorithm(args.algo)
    except (ValueError, TypeError) as exc:
        raise UsageError(str(exc)) from None
    limit = time_horizon(spec, args.algo)
    T = args.horizon
    # trace emits [0, T) so T itself may equal the domain limit.
    if T < 0 or (T > limit if args.command == "trace" else T >= limit):
        raise UsageError(
            f"-T {T} outside the {args.algo} domain for S={spec.size} (limit {limit})"
        )
    stride = getattr(args, "stride", 1)
    if stride < 1:
        raise UsageError(f"--stride must be positive, got {stride}")
    return RunConfig(args.algo, spec, T, args.format, not args.no_header, stride)


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        config = make_config(args)
    except UsageError as exc:
        err.write(f"dstream: error: {exc}\n")
        return EXIT_USAGE
    try:
        if args.command == "validate":
            return cmd_validate(config, out, err)
        return COMMANDS[args.command](config, out)
    except DomainError as exc:
        err.write(f"dstream: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
