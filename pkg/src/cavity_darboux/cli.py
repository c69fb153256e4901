"""Command line entry point.

Exit codes: 0 success, 2 configuration error, 3 solver error, 4 failed
verification.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .config import load_config, parse_assignments
from .errors import ConfigError, SolverError
from .pipeline import run
from .verify import format_report, run_checks


def build_parser():
    ap = argparse.ArgumentParser(prog="cavity-darboux",
                                 description="Atomic inversion under one-fold Darboux transformations of the drive.")
    ap.add_argument("command", choices=("jc", "darboux", "verify"))
    ap.add_argument("--config", metavar="PATH", help="key = value configuration file")
    ap.add_argument("--sigma", choices=("1", "2", "3"), help="Pauli matrix of the intertwiner (darboux)")
    ap.add_argument("--t0", type=float)
    ap.add_argument("--t1", type=float)
    ap.add_argument("--samples", type=int)
    ap.add_argument("--out", metavar="DIR")
    ap.add_argument("--csv", action="store_true", help="write CSV (default: CSV and SVG)")
    ap.add_argument("--svg", action="store_true", help="write SVG (default: CSV and SVG)")
    ap.add_argument("--logy", action="store_true", help="logarithmic y axis for potential plots")
    ap.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                    help="override any configuration key (repeatable)")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "verify":
        report = format_report(checks := run_checks())
        sys.stdout.write(report)
        return 0 if all(c.passed for c in checks) else 4
    try:
        overrides = parse_assignments(args.set, source="--set")
        overrides.update(t0=args.t0, t1=args.t1, samples=args.samples, out=args.out)
        if args.sigma is not None:
            overrides["sigma"] = int(args.sigma)
        if args.csv or args.svg:
            overrides.update(csv=args.csv, svg=args.svg)
        if args.logy:
            overrides["logy"] = True
        cfg = load_config(args.config, overrides)
        if args.command == "darboux" and cfg.sigma is None:
            raise ConfigError("sigma", "darboux needs --sigma 1, 2 or 3")
        for path in run(cfg, args.command):
            print(path)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except SolverError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
