"""Command-line interface.

Four subcommands, exit codes 0 (success), 1 (verification failure),
2 (usage or domain error — argparse's own convention):

* ``kernel --k 1,-2 [--format plain|latex|json]`` — the closed-form kernel
  of a signature-one domain.
* ``norm --k 1,-1 --alpha 0,0 [--oracle exact|mc]`` — a monomial norm, via
  exact shadow integration or seeded Monte-Carlo.
* ``series --k 1,-1 --box 0:4,-4:4 [--format csv|json]`` — exact Laurent
  coefficients of the kernel on a box; CSV emits one row per box point
  (``alpha_1,...,alpha_n,coefficient``), zeros included, no header.
* ``verify --suite all [--seed N] [--report out.json]`` — named
  verification suites with a pass/fail report.

``REINHARDT_THREADS`` (default 1) lets ``verify`` run independent suites
in a thread pool; reporting order is unaffected.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .domains import DomainSpec, normalize_spec
from .kernels import kernel_signature_one
from .sampling import mc_norm_estimate
from .series import expand_closed_form, series_coefficients_model, series_coefficients_oracle
from .shadow import monomial_norm_oracle
from .verify import DEFAULT_SEED, SUITES, run_suites


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{what} must be comma-separated integers, got {text!r}")


def _parse_box(text: str) -> tuple[tuple[int, int], ...]:
    ranges = []
    for part in text.split(","):
        lo, sep, hi = part.partition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"box ranges look like lo:hi, got {part!r}")
        try:
            ranges.append((int(lo), int(hi)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"box bounds must be integers, got {part!r}")
    return tuple(ranges)


def _spec_or_exit(entries: tuple[int, ...]) -> DomainSpec:
    try:
        return normalize_spec(entries)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        raise SystemExit(2)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reinhardt",
        description="Exact Bergman kernels of elementary Reinhardt domains",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_kernel = sub.add_parser("kernel", help="closed-form kernel (signature one)")
    p_kernel.add_argument("--k", required=True, type=lambda s: _parse_ints(s, "--k"),
                          help="exponent vector, e.g. 1,-2")
    p_kernel.add_argument("--format", choices=("plain", "latex", "json"), default="plain")

    p_norm = sub.add_parser("norm", help="squared monomial norm")
    p_norm.add_argument("--k", required=True, type=lambda s: _parse_ints(s, "--k"))
    p_norm.add_argument("--alpha", required=True, type=lambda s: _parse_ints(s, "--alpha"),
                        help="monomial exponent, e.g. 0,-1")
    p_norm.add_argument("--oracle", choices=("exact", "mc"), default="exact")
    p_norm.add_argument("--samples", type=int, default=10 ** 6)
    p_norm.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p_series = sub.add_parser("series", help="exact Laurent coefficients on a box")
    p_series.add_argument("--k", required=True, type=lambda s: _parse_ints(s, "--k"))
    p_series.add_argument("--box", required=True, type=_parse_box,
                          help="per-coordinate ranges, e.g. 0:4,-4:4")
    p_series.add_argument("--format", choices=("csv", "json"), default="csv")

    p_verify = sub.add_parser("verify", help="run verification suites")
    p_verify.add_argument("--suite", required=True, choices=tuple(SUITES) + ("all",))
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--report", help="write the JSON report to this path")
    return parser


def _cmd_kernel(args) -> int:
    spec = _spec_or_exit(args.k)
    if spec.s != 1:
        print(
            f"error: {spec} has signature {spec.s}; the closed form exists only for "
            "signature 1 — the `series` subcommand covers every signature",
            file=sys.stderr,
        )
        return 2
    kernel = kernel_signature_one(spec)
    if args.format == "plain":
        print(kernel.to_plain())
    elif args.format == "latex":
        print(kernel.to_latex())
    else:
        print(json.dumps(kernel.to_json_dict(), indent=2))
    return 0


def _cmd_norm(args) -> int:
    spec = _spec_or_exit(args.k)
    if len(args.alpha) != spec.n:
        print(f"error: --alpha needs {spec.n} entries for {spec}", file=sys.stderr)
        return 2
    if args.oracle == "exact":
        print(monomial_norm_oracle(args.alpha, spec))
    else:
        result = mc_norm_estimate(args.alpha, spec, args.samples, args.seed)
        print(
            f"{result.estimate:.8g} ± {result.std_error:.2g} "
            f"(samples={result.samples}, accepted={result.accepted}, seed={result.seed})"
        )
    return 0


def _cmd_series(args) -> int:
    spec = _spec_or_exit(args.k)
    if len(args.box) != spec.n:
        print(f"error: --box needs {spec.n} ranges for {spec}", file=sys.stderr)
        return 2
    if any(lo > hi for lo, hi in args.box):
        print("error: box ranges must satisfy lo <= hi", file=sys.stderr)
        return 2
    if spec.s == 1:
        chunk = expand_closed_form(kernel_signature_one(spec), args.box)
    elif spec.is_model:
        chunk = series_coefficients_model(spec.n, spec.s, args.box)
    else:
        chunk = series_coefficients_oracle(spec, args.box)
    if args.format == "csv":
        for row in chunk.csv_rows():
            print(row)
    else:
        print(json.dumps(chunk.to_json_dict(), indent=2))
    return 0


def _cmd_verify(args) -> int:
    threads = int(os.environ.get("REINHARDT_THREADS", "1") or "1")
    reports = run_suites([args.suite], seed=args.seed, threads=threads)
    print(f"seed {args.seed}")
    failures = 0
    for report in reports:
        print(f"suite {report.name}:")
        for check in report.checks:
            mark = "ok  " if check.passed else "FAIL"
            print(f"  {mark} {check.name}: {check.detail}")
            failures += 0 if check.passed else 1
    total = sum(len(r.checks) for r in reports)
    if args.report:
        payload = {
            "seed": args.seed,
            "passed": failures == 0,
            "suites": [r.to_json_dict() for r in reports],
        }
        with open(args.report, "w", encoding="utf-8") as handle:
            json.dump(payload, handle, indent=2)
            handle.write("\n")
    if failures:
        print(f"{failures} of {total} checks failed")
        return 1
    print(f"all {total} checks passed")
    return 0


_VALUE_FLAGS = ("--k", "--alpha", "--box")


def _absorb_negative_values(argv: list[str]) -> list[str]:
    """Glue values like ``-1,0`` onto their flag so argparse keeps them."""
    merged = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        if token in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            merged.append(f"{token}={argv[i + 1]}")
            skip = True
        else:
            merged.append(token)
    return merged


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = _build_parser().parse_args(_absorb_negative_values(argv))
    if args.command == "kernel":
        return _cmd_kernel(args)
    if args.command == "norm":
        return _cmd_norm(args)
    if args.command == "series":
        return _cmd_series(args)
    return _cmd_verify(args)


if __name__ == "__main__":
    raise SystemExit(main())
