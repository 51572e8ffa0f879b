"""Command line for rendering preset figures from runner CSV files."""

import argparse
import sys

from .panels import PRESET_NAMES, preset_spec
from .render import MissingColumnError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinmq-figures",
        description="Draw multi-panel coherence/concurrence figures from "
                    "spinmq CSV output.")
    sub = parser.add_subparsers(dest="command", required=True)
    rend = sub.add_parser("render", help="render one preset figure")
    rend.add_argument("--preset", required=True, choices=PRESET_NAMES,
                      help="panel layout to draw")
    rend.add_argument("--csv", required=True,
                      help="CSV file produced by `spinmq run`")
    rend.add_argument("--out", required=True,
                      help="output image path (format from the extension)")
    rend.add_argument("--dpi", type=int, default=150)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        out = render(preset_spec(args.preset, args.csv), args.out, dpi=args.dpi)
    except MissingColumnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
