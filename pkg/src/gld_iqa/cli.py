"""Command-line interface.

Subcommands: ``score`` (one pair), ``eval`` (manifest-driven benchmark
run), ``ftest`` (compare two evaluation reports), ``psnr`` (baseline).
Exit codes: 0 success, 2 input error, 3 empty or degenerate evaluation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

import numpy as np

from .batch import score_manifest
from .errors import (
    DegenerateSaliency,
    DegenerateSeries,
    IncompatibleReports,
    InvalidArgument,
    InvalidImage,
    PairMismatch,
    ParseError,
)
from .image import load_pair
from .manifest import load_manifest
from .report import (
    build_report,
    compare_reports,
    read_report,
    records_csv_path,
    report_to_dict,
    write_records_csv,
    write_report,
)
from .saliency import SaliencyMethod
from .score import evaluate_pair, psnr

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3

_INPUT_ERRORS = (InvalidImage, PairMismatch, InvalidArgument, ParseError,
                 IncompatibleReports, OSError)
_DEGENERATE_ERRORS = (DegenerateSeries, DegenerateSaliency)


def format_score(value: float) -> str:
    """Plain decimal with six significant digits; zero prints as 0.000000."""
    if value == 0.0:
        return "0.000000"
    text = np.format_float_positional(value, precision=6, unique=False,
                                      fractional=False, trim="k")
    return text.rstrip(".")


def _cmd_score(args) -> int:
    pair = load_pair(args.ref, args.test)
    result = evaluate_pair(pair, SaliencyMethod(args.saliency))
    print(format_score(result.q))
    return EXIT_OK


def _cmd_psnr(args) -> int:
    print(format_score(psnr(load_pair(args.ref, args.test))))
    return EXIT_OK


def _cmd_eval(args) -> int:
    entries = load_manifest(args.manifest)
    if not entries:
        print("error: manifest contains no usable rows", file=sys.stderr)
        return EXIT_DEGENERATE
    method = SaliencyMethod(args.saliency)
    scores = score_manifest(entries, method, jobs=args.jobs)
    report, rows = build_report(entries, scores, method)
    if args.out:
        write_report(report, args.out)
        write_records_csv(rows, records_csv_path(args.out))
        print(f"report written to {args.out}", file=sys.stderr)
        print(f"per-image records written to {records_csv_path(args.out)}", file=sys.stderr)
    else:
        json.dump(report_to_dict(report), sys.stdout, indent=2, sort_keys=True)
        print()
    return EXIT_OK


def _cmd_ftest(args) -> int:
    report_a = read_report(args.a)
    report_b = read_report(args.b)
    verdicts, improvement = compare_reports(report_a, report_b, confidence=args.confidence)
    width = max(len(name) for name in verdicts)
    print(f"{'database'.ljust(width)}  verdict")
    for name, verdict in verdicts.items():
        print(f"{name.ljust(width)}  {verdict:+d}")
    improved = sum(1 for v in verdicts.values() if v == 1)
    print(f"improvement: {improvement:.2f}% ({improved} of {len(verdicts)} databases)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iqa",
                                     description="Full-reference image quality scoring and evaluation")
    sub = parser.add_subparsers(dest="command", required=True)

    score_p = sub.add_parser("score", help="score one reference/test pair")
    score_p.add_argument("--ref", required=True, help="reference image (PNG or BMP)")
    score_p.add_argument("--test", required=True, help="test image (PNG or BMP)")
    score_p.add_argument("--saliency", choices=["sr", "pft"], default="sr",
                         help="saliency method used for weighting (default: sr)")
    score_p.set_defaults(handler=_cmd_score)

    eval_p = sub.add_parser("eval", help="run the benchmark protocol on a manifest")
    eval_p.add_argument("--manifest", required=True, help="CSV manifest of image pairs")
    eval_p.add_argument("--saliency", choices=["sr", "pft"], default="sr")
    eval_p.add_argument("--out", default=None, help="report path (JSON); stdout when omitted")
    eval_p.add_argument("--jobs", type=int, default=1, help="parallel scoring workers")
    eval_p.set_defaults(handler=_cmd_eval)

    ftest_p = sub.add_parser("ftest", help="compare two evaluation reports")
    ftest_p.add_argument("--a", required=True, help="report for the candidate method")
    ftest_p.add_argument("--b", required=True, help="report for the method compared against")
    ftest_p.add_argument("--confidence", type=float, default=0.95)
    ftest_p.set_defaults(handler=_cmd_ftest)

    psnr_p = sub.add_parser("psnr", help="baseline peak signal-to-noise ratio")
    psnr_p.add_argument("--ref", required=True)
    psnr_p.add_argument("--test", required=True)
    psnr_p.set_defaults(handler=_cmd_psnr)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format="%(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _DEGENERATE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
