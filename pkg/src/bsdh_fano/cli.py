"""Command-line front end.

Subcommands: ``classify``, ``matrix``, ``enumerate``, ``audit``.
Exit codes: 0 success, 1 input/capacity/I-O error, 2 audit divergence.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import report
from .betamat import parse_matrix
from .errors import BsdhError
from .fano import analyze_matrix, audit, classify, classify_all
from .rootsys import SimpleType
from .weyl import DEFAULT_CAPACITY, parse_word

FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class CliConfig:
    type: SimpleType | None
    output_format: str = "text"
    capacity: int = DEFAULT_CAPACITY
    max_len: int | None = None
    jobs: int = 1


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for divergences here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _simple_type(text):
    try:
        return SimpleType.parse(text)
    except BsdhError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="bsdh-fano",
        description="Decide whether BSDH varieties of reduced words are Fano or weak Fano.",
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, formats=FORMATS):
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    c = sub.add_parser("classify", help="classify one reduced word")
    c.add_argument("--type", required=True, type=_simple_type, help="Cartan type, e.g. A4, B3, G2")
    c.add_argument("--word", required=True, help='e.g. "2,3,1,2" or "s2 s3 s1 s2"')
    common(c)

    m = sub.add_parser("matrix", help="check the conditions on a raw beta matrix")
    src = m.add_mutually_exclusive_group(required=True)
    src.add_argument("--matrix", help='rows separated by ";" or newlines, e.g. "0 -1; 0 0"')
    src.add_argument("--file", help="file holding the matrix text")
    common(m)

    e = sub.add_parser("enumerate", help="classify every reduced word up to a length")
    e.add_argument("--type", required=True, type=_simple_type)
    e.add_argument("--max-len", required=True, type=_nonneg_int)
    e.add_argument("--capacity", type=_positive_int, default=DEFAULT_CAPACITY)
    common(e)

    a = sub.add_parser("audit", help="compare the condition and degree classifiers")
    a.add_argument("--type", required=True, type=_simple_type)
    a.add_argument("--max-len", required=True, type=_nonneg_int)
    a.add_argument("--capacity", type=_positive_int, default=DEFAULT_CAPACITY)
    a.add_argument("--jobs", type=_positive_int, default=1)
    common(a)
    return p


def cmd_classify(cfg: CliConfig, word_text: str) -> tuple[str, int]:
    rep = classify(parse_word(word_text, cfg.type))
    if cfg.output_format == "json":
        return report.dumps_json(report.report_to_dict(rep)), 0
    if cfg.output_format == "csv":
        return report.to_csv([report.summary_row(rep)], report.ENUMERATE_COLUMNS), 0
    return report.report_to_text(rep), 0


def cmd_matrix(cfg: CliConfig, text: str) -> tuple[str, int]:
    rep = analyze_matrix(parse_matrix(text))
    if cfg.output_format == "json":
        return report.dumps_json(report.report_to_dict(rep)), 0
    if cfg.output_format == "csv":
        return report.to_csv(report.row_table(rep), report.ROW_COLUMNS), 0
    return report.report_to_text(rep), 0


def cmd_enumerate(cfg: CliConfig) -> tuple[str, int]:
    rows = [report.summary_row(r) for r in classify_all(cfg.type, cfg.max_len, cfg.capacity)]
    if cfg.output_format == "json":
        doc = {"type": str(cfg.type), "max_len": cfg.max_len, "rows": rows}
        return report.dumps_json(doc), 0
    if cfg.output_format == "csv":
        return report.to_csv(rows, report.ENUMERATE_COLUMNS), 0
    return report.enumerate_to_text(rows), 0


def cmd_audit(cfg: CliConfig) -> tuple[str, int]:
    result = audit(cfg.type, cfg.max_len, cfg.capacity, cfg.jobs)
    code = 0 if result.ok else 2
    if cfg.output_format == "json":
        return report.dumps_json(report.audit_to_dict(result)), code
    if cfg.output_format == "csv":
        return report.to_csv(report.audit_rows(result), report.AUDIT_COLUMNS), code
    return report.audit_to_text(result), code


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    cfg = CliConfig(
        type=getattr(args, "type", None),
        output_format=args.format,
        capacity=getattr(args, "capacity", DEFAULT_CAPACITY),
        max_len=getattr(args, "max_len", None),
        jobs=getattr(args, "jobs", 1),
    )
    try:
        if args.command == "classify":
            out, code = cmd_classify(cfg, args.word)
        elif args.command == "matrix":
            if args.file is not None:
                with open(args.file, encoding="utf-8") as fh:
                    text = fh.read()
            else:
                text = args.matrix
            out, code = cmd_matrix(cfg, text)
        elif args.command == "enumerate":
            out, code = cmd_enumerate(cfg)
        else:
            out, code = cmd_audit(cfg)
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    except (BsdhError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
