"""Command-line front end.

Subcommands: kostka, decomp, fake-degrees, char-table, verify.
Exit codes: 0 success, 1 usage error, 2 verification failure,
3 internal-consistency error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .cherednik import c_delta, c_l, d_delta, verify_cd_factorization
from .combinatorics import (
    b_invariant_multi,
    format_multipartition,
    multipartitions_of,
)
from .errors import InternalConsistencyError, UsageError
from .render import (
    laurent_latex,
    laurent_str,
    matrix_json_dict,
    matrix_latex,
    matrix_text,
    multipartition_latex,
    poly_json,
)
from .verify import SUITE_NAMES, run_suite
from .wreath import (
    WreathCharTable,
    cache_file_name,
    fake_degree,
    get_char_table,
    kostka_tt_matrix,
    reduced_fake_degree,
)

_FORMATS = ("text", "json", "latex")


@dataclass
class OutputDocument:
    format: str
    payload: str
    data: object = None


def _check_sizes(ell: int, n: int):
    if ell < 1:
        raise UsageError(f"--ell must be a positive integer, got {ell}")
    if n < 0:
        raise UsageError(f"--n must be nonnegative, got {n}")


def _render_matrix(matrix, fmt: str) -> OutputDocument:
    if fmt == "text":
        return OutputDocument(fmt, matrix_text(matrix), matrix)
    if fmt == "json":
        doc = matrix_json_dict(matrix)
        return OutputDocument(fmt, json.dumps(doc, indent=1) + "\n", doc)
    return OutputDocument(fmt, matrix_latex(matrix), matrix)


def cmd_kostka(ell: int, n: int, fmt: str = "text", parallel: bool = False) -> OutputDocument:
    _check_sizes(ell, n)
    return _render_matrix(kostka_tt_matrix(ell, n, parallel=parallel), fmt)


def cmd_decomp(ell: int, n: int, which: str = "all", fmt: str = "text") -> OutputDocument:
    _check_sizes(ell, n)
    builders = {"cdelta": c_delta, "ddelta": d_delta, "cl": c_l}
    if which in builders:
        return _render_matrix(builders[which](ell, n), fmt)
    if which != "all":
        raise UsageError(f"unknown table {which!r}; choose from cdelta, ddelta, cl, all")
    matrices = {kind: fn(ell, n) for kind, fn in builders.items()}
    check = verify_cd_factorization(ell, n)
    if not check:
        raise InternalConsistencyError("C_Delta != D_Delta * C_L")
    if fmt == "json":
        doc = {kind: matrix_json_dict(m) for kind, m in matrices.items()}
        doc["cd_check"] = check
        return OutputDocument(fmt, json.dumps(doc, indent=1) + "\n", doc)
    render = matrix_text if fmt == "text" else matrix_latex
    blocks = [render(matrices[k]) for k in ("cdelta", "ddelta", "cl")]
    blocks.append("factorization check (C_Delta = D_Delta * C_L): ok\n")
    return OutputDocument(fmt, "\n".join(blocks), matrices)


def cmd_fake_degrees(ell: int, n: int, fmt: str = "text") -> OutputDocument:
    _check_sizes(ell, n)
    labels = multipartitions_of(ell, n)
    rows = [
        (mp, fake_degree(mp), reduced_fake_degree(mp), b_invariant_multi(mp))
        for mp in labels
    ]
    if fmt == "json":
        doc = [
            {
                "multipartition": [list(p) for p in mp],
                "fake_degree": poly_json(f),
                "reduced": poly_json(fbar),
                "b": b,
            }
            for mp, f, fbar, b in rows
        ]
        return OutputDocument(fmt, json.dumps(doc, indent=1) + "\n", doc)
    if fmt == "latex":
        lines = [r"\begin{array}{l|l|l|r}"]
        lines.append(r" & f & \bar f & b \\ \hline")
        for mp, f, fbar, b in rows:
            lines.append(
                f"{multipartition_latex(mp)} & {laurent_latex(f)} & {laurent_latex(fbar)} & {b} \\\\"
            )
        lines.append(r"\end{array}")
        return OutputDocument(fmt, "\n".join(lines) + "\n", rows)
    width = max(len(format_multipartition(mp)) for mp in labels)
    lines = [f"fake degrees for ell={ell}, n={n}", ""]
    for mp, f, fbar, b in rows:
        lines.append(
            f"{format_multipartition(mp).ljust(width)}  f = {laurent_str(f)}"
            f"   reduced = {laurent_str(fbar)}   b = {b}"
        )
    return OutputDocument(fmt, "\n".join(lines) + "\n", rows)


def _chartable_text(table: WreathCharTable) -> str:
    header = [""] + [format_multipartition(mp) for mp in table.classes]
    zrow = ["z"] + [str(z) for z in table.z]
    rows = [
        [format_multipartition(lam)] + [str(v) for v in table.row(lam)]
        for lam in table.irreducibles
    ]
    table_rows = [header, zrow] + rows
    widths = [max(len(r[c]) for r in table_rows) for c in range(len(header))]
    lines = [f"character table of C_{table.ell} wr S_{table.n}", ""]
    for r in table_rows:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def cmd_char_table(ell: int, n: int, cache_dir=None, fmt: str = "text") -> OutputDocument:
    _check_sizes(ell, n)
    cache_dir = cache_dir or os.environ.get("WREATHMAC_CACHE")
    table = get_char_table(ell, n, cache_dir=cache_dir)
    if cache_dir is not None:
        path = os.path.join(cache_dir, cache_file_name(ell, n))
        with open(path, encoding="utf-8") as fh:
            reloaded = WreathCharTable.from_json_dict(json.load(fh))
        if reloaded.to_json_dict() != table.to_json_dict():
            raise InternalConsistencyError(f"cache round trip differs for {path}")
    doc = table.to_json_dict()
    if fmt == "json":
        return OutputDocument(fmt, json.dumps(doc, indent=1) + "\n", doc)
    if fmt == "latex":
        lines = [r"\begin{array}{l|" + "r" * len(table.classes) + "}"]
        lines.append(
            " & ".join([""] + [multipartition_latex(mp) for mp in table.classes])
            + r" \\ \hline"
        )
        for lam in table.irreducibles:
            lines.append(
                " & ".join(
                    [multipartition_latex(lam)] + [str(v) for v in table.row(lam)]
                )
                + r" \\"
            )
        lines.append(r"\end{array}")
        return OutputDocument(fmt, "\n".join(lines) + "\n", doc)
    return OutputDocument(fmt, _chartable_text(table), doc)


def cmd_verify(suite: str, ell_max=None, n_max=None) -> tuple:
    if suite not in SUITE_NAMES:
        raise UsageError(
            f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}"
        )
    results = run_suite(suite, ell_max=ell_max, n_max=n_max)
    lines = []
    for r in results:
        if r.passed:
            lines.append(f"PASS: {r.name}")
        else:
            lines.append(f"FAIL: {r.name} -- {r.detail}")
    ok = all(r.passed for r in results)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    return OutputDocument("text", "\n".join(lines) + "\n", results), ok


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wreathmac", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_format=True):
        p.add_argument("--ell", type=int, required=True, help="cyclic-group order")
        p.add_argument("--n", type=int, required=True, help="number of strands")
        if with_format:
            p.add_argument("--format", choices=_FORMATS, default="text")
        p.add_argument("--out", help="write the output to this file")

    p = sub.add_parser("kostka", help="the t,t-Kostka matrix")
    add_common(p)
    p.add_argument("--parallel", action="store_true", help="compute columns in parallel")

    p = sub.add_parser("decomp", help="decomposition matrices")
    p.add_argument("which", nargs="?", default="all", choices=("cdelta", "ddelta", "cl", "all"))
    add_common(p)

    p = sub.add_parser("fake-degrees", help="fake degrees and b-invariants")
    add_common(p)

    p = sub.add_parser("char-table", help="character table (with optional disk cache)")
    add_common(p)
    p.add_argument("--cache-dir", help="cache directory (or set WREATHMAC_CACHE)")

    p = sub.add_parser("verify", help="run identity-verification suites")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--ell-max", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--out", help="write the output to this file")
    return parser


def _emit(doc: OutputDocument, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(doc.payload)
    else:
        sys.stdout.write(doc.payload)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "kostka":
            doc = cmd_kostka(args.ell, args.n, args.format, parallel=args.parallel)
        elif args.command == "decomp":
            doc = cmd_decomp(args.ell, args.n, args.which, args.format)
        elif args.command == "fake-degrees":
            doc = cmd_fake_degrees(args.ell, args.n, args.format)
        elif args.command == "char-table":
            doc = cmd_char_table(args.ell, args.n, args.cache_dir, args.format)
        else:
            doc, ok = cmd_verify(args.suite, args.ell_max, args.n_max)
            _emit(doc, args.out)
            return 0 if ok else 2
        _emit(doc, args.out)
        return 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
