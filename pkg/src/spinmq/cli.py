"""Command line entry point.

Usage::

    spinmq run --preset fig1 --out fig1.csv
    spinmq run --n 2 --geometry chain --beta-b 30 --tau-max 12.57 --out two.csv

Exit statuses: 0 success, 2 configuration error, 3 numerical failure,
4 output I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ConfigError, NumericalError
from .model import ThermalConfig
from .runner import PRESETS, RunConfig, emit, preset_config, run


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinmq",
        description="Coherence-order and pair-entanglement dynamics of dipolar spin clusters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="sweep a tau grid and write the dataset")
    p.add_argument("--preset", choices=sorted(PRESETS), default=None,
                   help="named system/pair bundle; individual flags override it")
    p.add_argument("--n", type=int, default=None, help="number of spins")
    p.add_argument("--geometry", choices=("chain", "ring"), default=None)
    p.add_argument("--dnn", type=float, default=None,
                   help="nearest-neighbour coupling in 1/s (default 1.0)")
    beta = p.add_mutually_exclusive_group()
    beta.add_argument("--beta-norm", type=float, default=None,
                      help="set b via the Zeeman norm target (default 10)")
    beta.add_argument("--beta-b", type=float, default=None,
                      help="set the exponent b directly")
    p.add_argument("--tau-max", type=float, default=None, help="grid end in s (default 10)")
    p.add_argument("--tau-points", type=int, default=None, help="grid size (default 500)")
    p.add_argument("--pairs", type=str, default=None,
                   help='spin pairs as "1-2,1-3" (1-based, m < n)')
    p.add_argument("--orders", type=str, default=None,
                   help='coherence orders to emit as "0,2,4" (default: even 0..N)')
    p.add_argument("--out", type=str, required=True, help="output data file path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=None, help="worker processes (default 1)")
    p.add_argument("--lenient", action="store_true",
                   help="downgrade invariant violations to warnings")
    return parser


def _parse_pairs(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for token in text.split(","):
        token = token.strip()
        halves = token.split("-")
        if len(halves) != 2:
            raise ConfigError(f"pair {token!r} is not of the form m-n")
        try:
            pairs.append((int(halves[0]), int(halves[1])))
        except ValueError as exc:
            raise ConfigError(f"pair {token!r} is not a pair of integers") from exc
    return tuple(pairs)


def _parse_orders(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(token.strip()) for token in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"orders {text!r} must be comma-separated integers") from exc


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Translate parsed flags into a RunConfig."""
    overrides: dict = {}
    if args.n is not None:
        overrides["n_spins"] = args.n
    if args.geometry is not None:
        overrides["geometry"] = args.geometry
    if args.dnn is not None:
        overrides["d_nn"] = args.dnn
    if args.tau_max is not None:
        overrides["tau_max"] = args.tau_max
    if args.tau_points is not None:
        overrides["tau_points"] = args.tau_points
    if args.pairs is not None:
        overrides["pairs"] = _parse_pairs(args.pairs)
    if args.orders is not None:
        overrides["emit_orders"] = _parse_orders(args.orders)
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.beta_b is not None:
        overrides["thermal"] = ThermalConfig(mode="direct", value=args.beta_b)
    elif args.beta_norm is not None:
        overrides["thermal"] = ThermalConfig(mode="norm_target", value=args.beta_norm)
    overrides["strict"] = not args.lenient
    overrides["output_path"] = args.out

    if args.preset is not None:
        return preset_config(args.preset, **overrides)
    if "n_spins" not in overrides or "geometry" not in overrides:
        raise ConfigError("without --preset, both --n and --geometry are required")
    return RunConfig(**overrides)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = config_from_args(args)
        result = run(config)
        written = emit(result, args.out, args.format)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return 4

    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
