"""Command-line interface.

Usage::

    elliptic-weyl reduce --group a11 --word "0 0' 1 1'" [--matrix]
    elliptic-weyl series --group a11star --max-len 200 --format csv
    elliptic-weyl verify --group a11 --max-len 12
    elliptic-weyl classical --type affine --exponents 1 --max-len 5
    elliptic-weyl dump-cayley --group a11star --max-len 3
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import series
from .cayley import StateLimitExceeded, bfs_lengths, dump_cayley, format_edges
from .group import nf_length, reduce_word
from .reflection import word_to_matrix
from .verify import run_all
from .words import GroupKind, format_word, parse_word

BFS_DEFAULT_MAX_LEN = 12
SERIES_DEFAULT_MAX_LEN = 200


class CliError(Exception):
    pass


@dataclass
class CliConfig:
    group: GroupKind
    max_len: int
    format: str = "text"
    out: str | None = None

    def __post_init__(self):
        if self.max_len < 0:
            raise CliError("--max-len must be non-negative")


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _emit(config: CliConfig, text: str):
    if config.out:
        try:
            with open(config.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as exc:
            raise CliError(f"cannot write {config.out}: {exc}") from exc
    else:
        sys.stdout.write(text)


def reduce_report(config: CliConfig, word_text: str, with_matrix: bool = False) -> dict:
    word = parse_word(config.group, word_text)
    x = reduce_word(config.group, word)
    report = {
        "group": config.group.value,
        "word": format_word(word),
        "normal_form": {"i": x.i, "m": x.m, "n": x.n},
        "length": nf_length(x),
    }
    if with_matrix:
        report["matrix"] = word_to_matrix(config.group, word).to_int_rows()
    return report


def cmd_reduce(config: CliConfig, word_text: str, with_matrix: bool = False) -> int:
    report = reduce_report(config, word_text, with_matrix)
    nf = report["normal_form"]
    if config.format == "json":
        text = _json(report)
    elif config.format == "csv":
        text = _csv(["group", "word", "i", "m", "n", "length"],
                    [[report["group"], report["word"], nf["i"], nf["m"], nf["n"], report["length"]]])
    else:
        lines = [
            f"group        {report['group']}",
            f"word         {report['word'] or '(empty)'}",
            f"normal form  ({nf['i']},{nf['m']},{nf['n']})",
            f"length       {report['length']}",
        ]
        if with_matrix:
            lines.append("matrix")
            lines += ["  " + " ".join(f"{v:3d}" for v in row) for row in report["matrix"]]
        text = "\n".join(lines) + "\n"
    _emit(config, text)
    return 0


def series_rows(config: CliConfig) -> list[tuple[int, int, int, bool]]:
    closed = series.expand(series.elliptic_closed_form(config.group), config.max_len)
    enumerated = bfs_lengths(config.group, config.max_len).sphere_sizes
    return [(n, closed[n], enumerated[n], closed[n] == enumerated[n]) for n in range(config.max_len + 1)]


def cmd_series(config: CliConfig) -> int:
    rows = series_rows(config)
    if config.format == "json":
        text = _json({
            "group": config.group.value,
            "max_len": config.max_len,
            "rows": [{"n": n, "closed_form": c, "enumerated": e, "match": ok} for n, c, e, ok in rows],
        })
    elif config.format == "csv":
        text = _csv(["n", "closed_form", "enumerated", "match"], [[n, c, e, _bool(ok)] for n, c, e, ok in rows])
    else:
        width = len(str(rows[-1][1]))
        lines = [f"{'n':>5}  {'closed':>{width}}  {'enum':>{width}}  match"]
        lines += [f"{n:>5}  {c:>{width}}  {e:>{width}}  {_bool(ok)}" for n, c, e, ok in rows]
        text = "\n".join(lines) + "\n"
    _emit(config, text)
    return 0 if all(r[3] for r in rows) else 1


def cmd_verify(config: CliConfig) -> int:
    results = run_all(config.group, config.max_len)
    if config.format == "json":
        text = _json({
            "group": config.group.value,
            "max_len": config.max_len,
            "suites": [
                {"name": r.name, "passed": r.passed, "checked": r.checked,
                 "first_failure": r.failures[0] if r.failures else None}
                for r in results
            ],
        })
    elif config.format == "csv":
        text = _csv(["suite", "passed", "checked", "first_failure"],
                    [[r.name, _bool(r.passed), r.checked, r.failures[0] if r.failures else ""] for r in results])
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{status}  {r.name:<24} {r.checked} checks")
            if r.failures:
                lines.append(f"      first counterexample: {r.failures[0]}")
        text = "\n".join(lines) + "\n"
    _emit(config, text)
    return 0 if all(r.passed for r in results) else 1


def _parse_exponents(text: str) -> list[int]:
    try:
        exps = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise CliError(f"exponents must be positive integers, got {text!r}") from None
    if not exps or any(e < 1 for e in exps):
        raise CliError(f"exponents must be positive integers, got {text!r}")
    return exps


def cmd_classical(kind: str, exponents: list[int], order: int | None, fmt: str = "text",
                  out: str | None = None) -> int:
    if kind == "finite":
        coeffs = series.finite_weyl_polynomial(exponents).coeffs
        if order is not None:
            coeffs = series.expand(series.finite_weyl_series(exponents), order).coeffs
    else:
        coeffs = series.affine_weyl_series(exponents, SERIES_DEFAULT_MAX_LEN if order is None else order).coeffs
    if fmt == "json":
        text = _json({"type": kind, "exponents": exponents, "coefficients": list(coeffs)})
    elif fmt == "csv":
        text = _csv(["n", "coefficient"], list(enumerate(coeffs)))
    else:
        text = ",".join(str(c) for c in coeffs) + "\n"
    _emit(CliConfig(GroupKind.A11, 0, fmt, out), text)
    return 0


def cmd_dump_cayley(config: CliConfig) -> int:
    _emit(config, format_edges(dump_cayley(config.group, config.max_len)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elliptic-weyl",
        description="Elliptic Weyl groups of type A1(1,1) and A1(1,1)*: normal forms, lengths, Poincare series.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    grouped = argparse.ArgumentParser(add_help=False, parents=[common])
    grouped.add_argument("--group", choices=[k.value for k in GroupKind], default=GroupKind.A11STAR.value)
    grouped.add_argument("--max-len", type=int, default=None, metavar="N")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("reduce", parents=[grouped], help="reduce a word to normal form")
    p.add_argument("--word", required=True, help="generators separated by spaces or commas, e.g. \"0 1 1'\"")
    p.add_argument("--matrix", action="store_true", help="include the reflection-representation matrix")
    sub.add_parser("series", parents=[grouped], help="closed-form Poincare series vs. enumerated sphere sizes")
    sub.add_parser("verify", parents=[grouped], help="run every verification suite")
    sub.add_parser("dump-cayley", parents=[grouped], help="Cayley graph edge list")
    p = sub.add_parser("classical", parents=[common], help="finite / affine Weyl group Poincare series")
    p.add_argument("--type", choices=["finite", "affine"], required=True)
    p.add_argument("--exponents", required=True, help="comma-separated exponents, e.g. 1,2")
    p.add_argument("--max-len", type=int, default=None, metavar="L", help="expansion order")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "classical":
            if args.max_len is not None and args.max_len < 0:
                raise CliError("--max-len must be non-negative")
            return cmd_classical(args.type, _parse_exponents(args.exponents), args.max_len, args.format, args.out)
        default = SERIES_DEFAULT_MAX_LEN if args.command == "series" else BFS_DEFAULT_MAX_LEN
        config = CliConfig(
            group=GroupKind.parse(args.group),
            max_len=default if args.max_len is None else args.max_len,
            format=args.format,
            out=args.out,
        )
        if args.command == "reduce":
            return cmd_reduce(config, args.word, args.matrix)
        if args.command == "series":
            return cmd_series(config)
        if args.command == "verify":
            return cmd_verify(config)
        return cmd_dump_cayley(config)
    except (CliError, ValueError, StateLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
