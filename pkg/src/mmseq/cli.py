"""Command-line entry point.

    mmseq design {css,corr,wecorr} --n N --m M [options]
    mmseq metrics SET.json
    mmseq export-levels SET.json --mode {complementary,pair,all} [--pair I J]

Sequence indices on the command line are 1-based. Exit status: 0 success,
2 usage or input error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from . import io
from .config import DEFAULT_TOL, SolverConfig
from .corr import (
    WeightProfile,
    cisl,
    complementary_level_db,
    correlation_level_db,
    peak_sidelobe_db,
    psi,
    psi_lower_bound,
)
from .design import KINDS, run_trials

EXIT_USAGE = 2
EXIT_NUMERIC = 3

log = logging.getLogger("mmseq")


class UsageError(Exception):
    pass


def _positive_int(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def _on_off(s: str) -> bool:
    s = s.lower()
    if s not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return s == "on"


def parse_zcz(text: str, n: int) -> WeightProfile:
    try:
        a, b = (int(v) for v in text.split(":"))
    except ValueError:
        raise UsageError(f"--zcz expects A:B, got {text!r}") from None
    if a < 1 or b > n - 1 or a > b:
        raise UsageError(f"bad zero-correlation zone {a}:{b} (need 1 <= A <= B <= N-1 = {n - 1})")
    return WeightProfile.zcz(n, a, b)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mmseq", description="Unimodular sequence set design")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("design", help="run a solver and write the best set")
    d.add_argument("kind", choices=KINDS)
    d.add_argument("--n", type=_positive_int, required=True)
    d.add_argument("--m", type=_positive_int, required=True)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--tol", type=float, default=None, help="relative change tolerance (0 stops only at an exact fixed point)")
    d.add_argument("--max-iter", type=_positive_int, default=100_000)
    d.add_argument("--time-limit", type=float, default=None, help="seconds per trial")
    d.add_argument("--accel", type=_on_off, default=True, metavar="{on,off}")
    d.add_argument("--trials", type=_positive_int, default=1)
    d.add_argument("--weights", type=Path, help="CSV with N lag weights, lag 0 first (wecorr)")
    d.add_argument("--zcz", help="A:B, unit weights on lags A..B (wecorr)")
    d.add_argument("--objective-floor", type=float, default=None)
    d.add_argument("--out", type=Path, default=Path("seqset.json"))
    d.add_argument("--report", type=Path, default=Path("report.json"))

    mt = sub.add_parser("metrics", help="print correlation metrics of a stored set")
    mt.add_argument("input", type=Path)

    ex = sub.add_parser("export-levels", help="write correlation levels in dB as CSV")
    ex.add_argument("input", type=Path)
    ex.add_argument("--mode", choices=("complementary", "pair", "all"), default="complementary")
    ex.add_argument("--pair", nargs=2, type=_positive_int, metavar=("I", "J"))
    ex.add_argument("--out", type=Path, default=Path("levels.csv"))
    return p


def cmd_design(args) -> int:
    n, m = args.n, args.m
    if n < 2:
        raise UsageError("design needs --n >= 2")
    weights = None
    if args.kind == "wecorr":
        if (args.weights is None) == (args.zcz is None):
            raise UsageError("wecorr needs exactly one of --weights or --zcz")
        weights = io.read_weights(args.weights, n) if args.weights else parse_zcz(args.zcz, n)
    elif args.weights is not None or args.zcz is not None:
        raise UsageError("--weights/--zcz only apply to wecorr")
    tol = DEFAULT_TOL[args.kind] if args.tol is None else args.tol
    if not (0 <= args.seed < 2**64):
        raise UsageError("--seed must be a 64-bit unsigned integer")
    try:
        config = SolverConfig(
            tol=tol,
            max_iter=args.max_iter,
            time_limit_s=args.time_limit,
            seed=args.seed,
            accel=args.accel,
            trials=args.trials,
            objective_floor=args.objective_floor,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    X, best, summary = run_trials(args.kind, n, m, config, weights)
    io.write_sequence_set(args.out, X)
    io.write_report(args.report, summary)
    print(f"{args.kind}: N={n} M={m} trials={config.trials}")
    print(f"min objective: {summary['min_objective']:.10g}")
    print(f"avg objective: {summary['avg_objective']:.10g}")
    if summary["lower_bound"] is not None:
        print(f"lower bound:   {summary['lower_bound']:.10g}")
    print(f"best trial: seed={best.seed} iterations={best.iterations} stop={best.stop_reason}")
    print(f"total time: {summary['total_wall_time_s']:.3f} s")
    print(f"wrote {args.out} and {args.report}")
    return 0


def metrics_lines(X: np.ndarray) -> list[str]:
    n, m = X.shape
    c, p = cisl(X), psi(X)
    lb = psi_lower_bound(n, m)
    lines = [
        f"n: {n}",
        f"m: {m}",
        f"cisl: {c:.12g}",
        f"psi: {p:.12g}",
        f"lower_bound: {lb:.12g}",
        f"gap: {p - lb:.12g}",
    ]
    for j, v in enumerate(peak_sidelobe_db(X), 1):
        lines.append(f"peak_sidelobe_db[{j}]: {v:.4f}")
    return lines


def cmd_metrics(args) -> int:
    X = io.read_sequence_set(args.input)
    print("\n".join(metrics_lines(X)))
    return 0


def cmd_export_levels(args) -> int:
    X = io.read_sequence_set(args.input)
    n, m = X.shape
    lags = np.arange(1 - n, n)
    if args.mode == "complementary":
        io.write_levels_csv(args.out, lags, complementary_level_db(X))
        print(f"wrote {args.out}")
    elif args.mode == "pair":
        if args.pair is None:
            raise UsageError("--mode pair needs --pair I J")
        i, j = args.pair
        if i > m or j > m:
            raise UsageError(f"pair ({i}, {j}) out of range for M={m}")
        io.write_levels_csv(args.out, lags, correlation_level_db(X, i - 1, j - 1))
        print(f"wrote {args.out}")
    else:
        out = Path(args.out)
        for i in range(m):
            for j in range(i, m):
                path = out.with_name(f"{out.stem}_{i + 1}_{j + 1}{out.suffix or '.csv'}")
                io.write_levels_csv(path, lags, correlation_level_db(X, i, j))
                print(f"wrote {path}")
    return 0


COMMANDS = {"design": cmd_design, "metrics": cmd_metrics, "export-levels": cmd_export_levels}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, io.FormatError) as exc:
        print(f"mmseq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FloatingPointError as exc:
        print(f"mmseq: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
