"""Standalone ``render`` command: simulation CSV in, figure files out."""

from __future__ import annotations

import argparse
import sys

from .render import FORMATS, X_VARIABLES, FigureSpec, SchemaError, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render",
        description="Render failure-rate figures (one panel per read count) from simulation CSV output.",
    )
    parser.add_argument("--csv", action="append", required=True, help="input CSV; repeatable")
    parser.add_argument("--x", choices=X_VARIABLES, default="p_d", help="x-axis channel parameter")
    parser.add_argument("--out", default="figs", help="output directory")
    parser.add_argument("--format", choices=FORMATS, default="png")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = FigureSpec(tuple(args.csv), args.x, args.out, args.format)
        written = render(spec)
    except (SchemaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
