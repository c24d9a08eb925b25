"""Command-line entry point: ``qextend <command> [options]``.

Exit status is 0 when every row passes, 1 when any row fails, and 2 for
configuration errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import QExtendError
from .sweeps import (
    COMMANDS,
    SweepConfig,
    _parse_threshold,
    apply_settings,
    cmd_suite,
    env_threads,
    load_config,
    render,
)

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="INI file with [sweep] and [thresholds] sections")
    common.add_argument("--q", help="comma-separated odd primes")
    common.add_argument("--d", help="comma-separated dimensions")
    common.add_argument("--forms", help="semicolon-separated form specs: diag[:a,b,..], matrix:PATH, random:N")
    common.add_argument("--j", help="level list: all, classes, or comma-separated values")
    common.add_argument("--seed", help="64-bit master seed")
    common.add_argument("--kinds", help="sums only: gauss,power,salie,kloosterman")
    common.add_argument("--families", help="test-function families for extension ratios")
    common.add_argument("--functions", help="random functions for the exact 2->2 check")
    common.add_argument("--subsets", help="random subsets per dyadic size")
    common.add_argument("--p0", help="comma-separated p0 values (fractions allowed)")
    common.add_argument("--out", help="output file (directory for suite); stdout if omitted")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--threads", type=int, help="worker processes (default: $QEXTEND_THREADS or 1)")
    common.add_argument("--threshold", action="append", default=[], metavar="NAME=VALUE",
                        help="override a numeric ceiling; repeatable")

    parser = argparse.ArgumentParser(prog="qextend", description="Numerical checks of finite-field extension estimates.")
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "sums": "Gauss, power, Salie and Kloosterman sums against their bounds",
        "surface-ft": "surface Fourier transform: closed form vs enumeration, decay, point counts",
        "extension": "extension-operator norm ratios and kernel decay",
        "incidence": "pair sums, shifted incidences, additive energy and L4 bounds on subsets",
        "exponents": "exact exponent arithmetic and region polygons",
        "suite": "run every command with one configuration",
    }
    for name, text in helps.items():
        sub.add_parser(name, parents=[common], help=text, description=text)
    return parser


def resolve_config(args: argparse.Namespace) -> SweepConfig:
    cfg = load_config(args.config) if args.config else SweepConfig()
    apply_settings(cfg, {
        "q": args.q, "d": args.d, "forms": args.forms, "j": args.j, "seed": args.seed,
        "kinds": args.kinds, "families": args.families, "functions": args.functions,
        "subsets": args.subsets, "p0": args.p0, "out": args.out, "format": args.format,
    })
    for item in args.threshold:
        name, value = _parse_threshold(item)
        cfg.thresholds[name] = value
    cfg.threads = args.threads if args.threads is not None else env_threads(cfg.threads)
    return cfg


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve_config(args)
        if args.command == "suite":
            reports = cmd_suite(cfg)
        else:
            reports = [COMMANDS[args.command](cfg)]
    except QExtendError as exc:
        print(f"qextend: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"qextend: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    ext = "json" if cfg.format == "json" else "csv"
    if args.command == "suite" and cfg.out:
        outdir = Path(cfg.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for rep in reports:
            _emit(render(rep, cfg.format), str(outdir / f"{rep.command}.{ext}"))
            if rep.extra_text:
                _emit(rep.extra_text, str(outdir / f"{rep.command}.regions.txt"))
    else:
        for rep in reports:
            _emit(render(rep, cfg.format), cfg.out)
            if rep.extra_text:
                _emit(rep.extra_text, f"{cfg.out}.regions.txt" if cfg.out else None)

    failed = sum(rep.failed for rep in reports)
    total = sum(len(rep.rows) for rep in reports)
    print(f"qextend {args.command}: {total - failed}/{total} rows passed", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
