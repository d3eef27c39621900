"""Command-line front end: ``cyclicdna <subcommand> ...``.

Exit status is 0 on success, 1 when a check or verification finds a
mismatch, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import warnings
from pathlib import Path
from typing import Sequence, TextIO

from . import crt, verify
from .codes import (
    DEFAULT_CAP,
    CapExceededError,
    CodeSpecError,
    CyclicCode,
    CyclicCodeSpec,
    build,
    enumerate_code,
)
from .dna import CONSTRAINTS, LAYOUTS, check_constraints, codon_strand, gray_triple, strands_of_code, theta
from .gray import binary_image, format_bits, phi
from .poly import factor_xn1_f2, format_factors
from .ring import RElem
from .tables import TABLE1, TABLE3, TABLE4, TITLES

OUTDIR_ENV = "CYCLICDNA_OUTDIR"
HANDLE_SUFFIX = ".handle"
_LENIENT_MARK = "# lenient=1"


class UsageError(Exception):
    """Bad input that should produce exit status 2."""


# -- input helpers ------------------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_code(path: str, lenient: bool = False) -> CyclicCode:
    """Build a code from a code-spec file or a stored handle."""
    text = _read_text(path)
    lenient = lenient or any(line.strip() == _LENIENT_MARK for line in text.splitlines())
    spec = CyclicCodeSpec.parse(text)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return build(spec, strict=not lenient)


def _cap(args) -> int:
    if args.cap < 0:
        raise UsageError("--cap must be nonnegative")
    if args.cap > DEFAULT_CAP and not args.allow_large_cap:
        raise UsageError(
            f"--cap {args.cap} exceeds the default {DEFAULT_CAP}; pass --allow-large-cap to confirm"
        )
    return args.cap


def _header(args, out: TextIO, text: str) -> None:
    if not args.no_header:
        out.write(f"# {text}\n")


# -- subcommands ------------------------------------------------------------------------------


def cmd_factor(args, out: TextIO) -> int:
    try:
        factors = factor_xn1_f2(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(format_factors(factors) + "\n")
    return 0


def handle_text(code: CyclicCode, lenient: bool) -> str:
    lines = ["# cyclicdna code handle"]
    lines.append(code.spec.dumps().rstrip("\n"))
    lines.append(f"# generators={'; '.join(str(g) for g in code.generators)}")
    lines.append(f"# dimension={code.dimension}")
    lines.append(f"# lenient={int(lenient)}")
    lines += [f"# note: {n}" for n in code.notes]
    return "\n".join(lines) + "\n"


def cmd_build(args, out: TextIO) -> int:
    code = _load_code(args.file, args.lenient)
    if args.output:
        target = Path(args.output)
    else:
        stem = "stdin" if args.file == "-" else Path(args.file).stem
        target = Path(os.environ.get(OUTDIR_ENV, ".")) / (stem + HANDLE_SUFFIX)
    text = handle_text(code, args.lenient)
    if args.output == "-":
        out.write(text)
        return 0
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(text)
    except OSError as exc:
        raise UsageError(f"cannot write {target}: {exc.strerror}") from None
    out.write(f"{target}\n")
    return 0


def cmd_enumerate(args, out: TextIO) -> int:
    code = _load_code(args.file, args.lenient)
    cs = enumerate_code(code, _cap(args))
    _header(args, out, f"ring={code.ring} n={code.n} dimension={code.dimension} words={len(cs)}")
    for vec in cs.vectors():
        out.write("\t".join(x.to_str() for x in vec) + "\n")
    return 0


def cmd_dna(args, out: TextIO) -> int:
    code = _load_code(args.file, args.lenient)
    strands = strands_of_code(code, args.layout, _cap(args))
    _header(args, out, f"ring={code.ring} n={code.n} layout={args.layout} strands={len(strands)}")
    for s in strands:
        out.write(f"{s}\n")
    return 0


def cmd_image(args, out: TextIO) -> int:
    code = _load_code(args.file, args.lenient)
    if code.ring != "R":
        raise UsageError("binary images are defined for codes over R")
    words = sorted(binary_image(code, _cap(args)))
    _header(args, out, f"n={code.n} length={6 * code.n} words={len(words)}")
    for b in words:
        out.write(format_bits(b) + "\n")
    return 0


def _read_strands(path: str) -> list[str]:
    return [line.strip() for line in _read_text(path).splitlines() if line.strip() and not line.startswith("#")]


def cmd_check(args, out: TextIO) -> int:
    if (args.file is None) == (args.strands is None):
        raise UsageError("give exactly one of -f/--file or --strands")
    which = [w.strip() for w in args.constraints.split(",") if w.strip()]
    unknown = [w for w in which if w not in CONSTRAINTS]
    if unknown or not which:
        raise UsageError(f"--constraints must list some of {','.join(CONSTRAINTS)}")
    if args.d < 0:
        raise UsageError("--d must be nonnegative")
    if args.strands is not None:
        strands = _read_strands(args.strands)
    else:
        code = _load_code(args.file, args.lenient)
        strands = [str(s) for s in strands_of_code(code, args.layout, _cap(args))]
    try:
        results = check_constraints(strands, args.d, which)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _header(args, out, f"strands={len(set(strands))} d={args.d}")
    if not args.no_header:
        out.write("constraint\tresult\twitness_x\twitness_y\n")
    for r in results:
        out.write(r.tsv() + "\n")
    return 0 if all(r.passed for r in results) else 1


def _table1(out: TextIO) -> None:
    out.write("element\tgray_triple\tcodon\n")
    for elem_txt, _, _ in TABLE1:
        x = verify.parse_expr(elem_txt)
        triple = "(" + ",".join(str(t) for t in gray_triple(x)) + ")"
        out.write(f"{x}\t{triple}\t{theta(x)}\n")


def _table2(out: TextIO) -> None:
    out.write("codon\tbits\n")
    for elem_txt, _, _ in TABLE1:
        x = verify.parse_expr(elem_txt)
        out.write(f"{theta(x)}\t{''.join(map(str, phi(x)))}\n")


def _table3(out: TextIO) -> None:
    computed = [str(s) for s in strands_of_code(verify.table3_code(), "def31")]
    printed = {s: i for i, s in enumerate(s for row in TABLE3 for s in row)}
    # printed order where the layouts agree, anything else sorted at the end
    ordered = sorted(computed, key=lambda s: (printed.get(s, len(printed)), s))
    out.write("strand\n")
    for s in ordered:
        out.write(s + "\n")


def _table4(out: TextIO) -> None:
    printed = {s for row in TABLE4 for s in row}
    code = verify.example_n6_code()
    out.write("strand\tprinted\n")
    for vec in enumerate_code(code).vectors():
        s = str(codon_strand(vec))
        out.write(f"{s}\t{'yes' if s in printed else 'no'}\n")


def cmd_tables(args, out: TextIO) -> int:
    _header(args, out, TITLES[args.which])
    {1: _table1, 2: _table2, 3: _table3, 4: _table4}[args.which](out)
    return 0


def _split_table(out: TextIO) -> None:
    out.write("element\tfirst\tsecond\n")
    for x in RElem.all():
        p = crt.split(x)
        out.write(f"{x.to_str()}\t{p.first.to_str()}\t{p.second.to_str()}\n")


def cmd_verify(args, out: TextIO) -> int:
    if args.split_table:
        _split_table(out)
        return 0
    cap = _cap(args)
    findings = verify.run_errata(args.scope, cap) if args.scope else verify.run_suite(args.suite, cap)
    blocking = verify.blocking_mismatches(findings)
    if args.format == "tsv":
        if not args.no_header:
            out.write("tag\texpected\tcomputed\tverdict\tnote\n")
        for f in findings:
            out.write(f.tsv() + "\n")
    else:
        for f in findings:
            out.write(f.text() + "\n")
        if not args.no_header:
            counts = {v: sum(f.verdict == v for f in findings)
                      for v in (verify.MATCH, verify.MISMATCH, verify.INCONSISTENT)}
            out.write(
                f"# {len(findings)} findings: {counts[verify.MATCH]} match, "
                f"{counts[verify.MISMATCH]} mismatch ({len(blocking)} not allowlisted), "
                f"{counts[verify.INCONSISTENT]} paper-internal-inconsistency\n"
            )
    return 1 if blocking else 0


# -- parser ---------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--no-header", action="store_true", help="omit comment/header lines")

    code_in = _Parser(add_help=False)
    code_in.add_argument("-f", "--file", required=True, help="code-spec or handle file ('-' for stdin)")
    code_in.add_argument("--lenient", action="store_true", help="downgrade divisibility failures to warnings")

    cap = _Parser(add_help=False)
    cap.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum F2-dimension to enumerate")
    cap.add_argument("--allow-large-cap", action="store_true", help=f"acknowledge a --cap above {DEFAULT_CAP}")

    p = _Parser(prog="cyclicdna", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("factor", parents=[common], help="factor x^n - 1 over F2")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_factor)

    s = sub.add_parser("build", parents=[common, code_in], help="validate a code spec and store a handle")
    s.add_argument("-o", "--output", help=f"handle path ('-' for stdout); default ${OUTDIR_ENV}/<stem>.handle")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("enumerate", parents=[common, code_in, cap], help="list all codewords")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("dna", parents=[common, code_in, cap], help="DNA strands of all codewords")
    s.add_argument("--layout", choices=LAYOUTS, default="def31")
    s.set_defaults(func=cmd_dna)

    s = sub.add_parser("image", parents=[common, code_in, cap], help="binary Gray images of all codewords")
    s.set_defaults(func=cmd_image)

    s = sub.add_parser("check", parents=[common, cap], help="evaluate DNA constraints")
    s.add_argument("-f", "--file", help="code-spec or handle file")
    s.add_argument("--strands", help="strand file, one strand per line")
    s.add_argument("--lenient", action="store_true")
    s.add_argument("--layout", choices=LAYOUTS, default="def31")
    s.add_argument("--d", type=int, required=True, help="minimum distance threshold")
    s.add_argument("--constraints", default=",".join(CONSTRAINTS),
                   help=f"comma-separated subset of {','.join(CONSTRAINTS)}")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("tables", parents=[common], help="regenerate a reference table")
    s.add_argument("--which", type=int, choices=(1, 2, 3, 4), required=True)
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("verify", parents=[common, cap], help="run verification suites or the errata report")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--suite", choices=verify.SUITES, default="all")
    g.add_argument("--scope", choices=verify.SCOPES, help="errata report for one scope")
    g.add_argument("--split-table", action="store_true", help="print the 64-row CRT split table")
    s.add_argument("--format", choices=("text", "tsv"), default="text")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except (CodeSpecError, CapExceededError, ValueError) as exc:
        print(f"cyclicdna: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
