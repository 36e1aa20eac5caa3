"""Command-line front end: count, table, verify, sweep.

Exit codes: 0 on success (every selected check holds), 1 when a check or
engine-agreement test fails, 2 on configuration errors (bad spec, unknown
check name, unwritable output path).

Worker count for sweeps comes from the PARTLAB_THREADS environment
variable, defaulting to the number of processors; output is identical
regardless of worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import reporting, sweeps
from .counting import IntegrityError, count_dp, count_recurrence
from .partset import VARIANT_LABELS, SpecError, make_residue_spec, parts_up_to

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2


def _parse_residues(text: str):
    """Comma-separated residues; '' means empty R; 'all' is a sweep sentinel."""
    if text == "all":
        return None
    if text.strip() == "":
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise SpecError(f"could not parse residues {text!r}") from None


def _resolve_workers() -> int:
    raw = os.environ.get("PARTLAB_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        workers = int(raw)
    except ValueError:
        raise ValueError(f"PARTLAB_THREADS must be an integer, got {raw!r}") from None
    if workers < 1:
        raise ValueError(f"PARTLAB_THREADS must be >= 1, got {workers}")
    return workers


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_count(args: argparse.Namespace) -> int:
    residues = _parse_residues(args.r)
    if residues is None:
        raise SpecError("count requires an explicit residue list, not 'all'")
    spec = make_residue_spec(args.m, residues)
    if args.n < 0:
        raise ValueError(f"n must be >= 0, got {args.n}")
    variant = VARIANT_LABELS[args.variant]
    parts = parts_up_to(spec, variant, args.n)
    dp = count_dp(parts, args.n)
    rec = count_recurrence(parts, args.n)
    agree = dp.values == rec.values
    payload = {"n": args.n, "count": str(dp.values[args.n]), "engines_agree": agree}
    sys.stdout.write(json.dumps(payload) + "\n")
    return EXIT_OK if agree else EXIT_CHECK_FAILED


def cmd_table(args: argparse.Namespace) -> int:
    residues = _parse_residues(args.r)
    if residues is None:
        raise SpecError("table requires an explicit residue list, not 'all'")
    spec = make_residue_spec(args.m, residues)
    rows = sweeps.table_rows(spec, args.n_max)
    if args.format == "csv":
        text = reporting.rows_to_csv(rows, reporting.TABLE_FIELDS)
    else:
        doc = {
            "command": "table",
            "m": spec.m,
            "R": list(spec.residues),
            "rows": [reporting.canon_row(r, reporting.TABLE_FIELDS) for r in rows],
        }
        text = reporting.document_to_json(doc)
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    checks = tuple(tok for tok in args.checks.split(",") if tok)
    variants = tuple(tok for tok in args.variants.split(",") if tok)
    config = sweeps.SweepConfig(
        m_max=args.m_max,
        n_max=args.n_max,
        variants=variants,
        checks=checks,
        output_format=args.format,
        output_path=args.output,
        workers=_resolve_workers(),
    ).validated()
    result = sweeps.run_verify(config)
    if config.output_format == "csv":
        text = reporting.rows_to_csv(result.rows, reporting.VERIFY_FIELDS)
    else:
        doc = {
            "command": "verify",
            "config": {
                "m_max": config.m_max,
                "n_max": config.n_max,
                "variants": list(config.variants),
                "checks": list(config.checks),
            },
            "summaries": [s.as_row() for s in result.summaries],
            "rows": [
                reporting.canon_row(r, reporting.VERIFY_FIELDS) for r in result.rows
            ],
        }
        text = reporting.document_to_json(doc)
    _emit(text, config.output_path)
    for s in result.summaries:
        worst = (
            repr(reporting.canon_float(s.worst_margin))
            if s.worst_margin is not None
            else "-"
        )
        status = "ok" if s.holds else "FAIL"
        sys.stderr.write(
            f"check={s.name} rows={s.rows} failures={s.failures} "
            f"worst_margin={worst} status={status}\n"
        )
    sys.stderr.write(
        f"verify: {'OK' if result.ok else 'FAILED'} ({len(result.summaries)} checks)\n"
    )
    return EXIT_OK if result.ok else EXIT_CHECK_FAILED


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = sweeps.sweep_rows(args.m_max, args.n_max, workers=_resolve_workers())
    if args.format == "csv":
        text = reporting.rows_to_csv(rows, reporting.SWEEP_FIELDS)
    else:
        doc = {
            "command": "sweep",
            "m_max": args.m_max,
            "n_max": args.n_max,
            "rows": [reporting.canon_row(r, reporting.SWEEP_FIELDS) for r in rows],
        }
        text = reporting.document_to_json(doc)
    _emit(text, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partlab",
        description="Exact restricted-partition counts and bound verification "
        "for residue-class part sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="count partitions with two engines")
    p_count.add_argument("--m", type=int, required=True, help="modulus (>= 1)")
    p_count.add_argument("--r", required=True, help="comma-separated residues, '' for empty")
    p_count.add_argument(
        "--variant",
        choices=sorted(VARIANT_LABELS),
        default="full-a",
        help="which part set to count over",
    )
    p_count.add_argument("--n", type=int, required=True, help="target integer")
    p_count.set_defaults(func=cmd_count)

    p_table = sub.add_parser("table", help="per-n counts, bound, slack, ratio")
    p_table.add_argument("--m", type=int, required=True)
    p_table.add_argument("--r", required=True)
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--format", choices=("json", "csv"), default="json")
    p_table.add_argument("--output", default=None, help="file path, default stdout")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run named checks over a sweep grid")
    p_verify.add_argument(
        "--checks",
        default=",".join(sweeps.CHECK_NAMES),
        help=f"comma-separated subset of {','.join(sweeps.CHECK_NAMES)}",
    )
    p_verify.add_argument("--m-max", type=int, default=4)
    p_verify.add_argument("--n-max", type=int, default=300)
    p_verify.add_argument(
        "--variants",
        default=",".join(sweeps.SWEEP_VARIANTS),
        help="variants for the counts check",
    )
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")
    p_verify.add_argument("--output", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_sweep = sub.add_parser(
        "sweep", help="emit table rows for every residue subset up to m-max"
    )
    p_sweep.add_argument("--m-max", type=int, required=True)
    p_sweep.add_argument("--n-max", type=int, required=True)
    p_sweep.add_argument("--format", choices=("json", "csv"), default="json")
    p_sweep.add_argument("--output", default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_CONFIG
    try:
        return args.func(args)
    except SpecError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG
    except IntegrityError as exc:
        sys.stderr.write(f"integrity failure: {exc}\n")
        return EXIT_CHECK_FAILED
    except OSError as exc:
        sys.stderr.write(f"output error: {exc}\n")
        return EXIT_CONFIG
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    raise SystemExit(main())
