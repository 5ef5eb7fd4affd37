"""Command-line entry point: ``reflect96 <subcommand> [options]``.

Exit status is 0 on success, 1 when a computed value disagrees with the
published one (an itemized JSON report goes to stderr), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import reference
from .bratteli import build_diagram, export
from .centralizer import dims_report
from .characters import (
    build_table, decompose, decompose_inner, decomposition_to_json, product, table_to_csv,
    table_to_json,
)
from .codes import (
    BinaryCode, CodeError, EnumerationLimitError, code_report, modular_map, qseries_to_json,
    weight_enumerator,
)
from .invariants import molien_series, molien_to_json, product_series
from .irreps import build_all, irreps_to_json
from .matgroup import CLASS_ORDERS, ClosureLimitError, h1
from .verify import verify_all

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

# labels whose invariant rings are claimed polynomial with these degrees
MOLIEN_CLAIMS = {5: (2, 3), 7: (8, 12), 8: (8, 12), 9: (8, 12), 10: (8, 12)}


class Mismatch(Exception):
    def __init__(self, report: dict):
        super().__init__(report.get("summary", "mismatch"))
        self.report = report


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _label(text: str) -> int:
    v = _positive(text)
    if v > 16:
        raise argparse.ArgumentTypeError(f"irrep labels run from 1 to 16, got {v}")
    return v


def _dump(obj) -> bytes:
    return (json.dumps(obj, indent=2) + "\n").encode()


def _load_code(path: str) -> BinaryCode:
    return BinaryCode.from_file(path)


def cmd_group(args) -> bytes:
    h = h1()
    out = {
        "order": len(h.group),
        "class_count": len(h.classes),
        "classes": [
            {"class": f"C{k + 1}", "word": c.word, "size": c.size, "element_order": o}
            for k, (c, o) in enumerate(zip(h.classes, h.order_row))
        ],
        "order_row": list(h.order_row),
    }
    if len(h.group) != 96 or len(h.classes) != 16 or h.order_row != CLASS_ORDERS:
        raise Mismatch({"summary": "group data differ from the published values",
                        "computed": out, "published_order_row": list(CLASS_ORDERS)})
    return _dump(out)


def cmd_chartab(args) -> bytes:
    table = build_table()
    diffs = [
        {"chi": lab, "class": f"C{k + 1}", "computed": str(table.X[i, k]),
         "published": str(reference.CHARACTER_TABLE[lab - 1][k])}
        for i, lab in enumerate(table.labels) for k in range(16)
        if table.X[i, k] != reference.CHARACTER_TABLE[lab - 1][k]
    ]
    if diffs:
        raise Mismatch({"summary": f"{len(diffs)} character values differ", "differences": diffs})
    if args.format == "csv":
        return table_to_csv(table).encode()
    return _dump(table_to_json(table))


def cmd_decompose(args) -> bytes:
    table = build_table()
    k = product(table.row(args.i), table.row(args.j))
    mults = decompose(k, table)
    inner = decompose_inner(k, table)
    if mults != inner:
        raise Mismatch({"summary": "the two decomposition routes disagree",
                        "inverse_matrix": {str(a): b for a, b in mults.items()},
                        "inner_product": {str(a): b for a, b in inner.items()}})
    return _dump(decomposition_to_json(args.i, args.j, mults))


def cmd_bratteli(args) -> bytes:
    return export(build_diagram(args.levels, build_table()), args.format)


def cmd_dims(args) -> bytes:
    report = dims_report(args.max_k, build_table())
    if args.check and not report["all_agree"]:
        bad = [row for row in report["levels"] if not row["agree"]]
        raise Mismatch({"summary": "dimension routes disagree", "levels": bad})
    return _dump(report)


def cmd_molien(args) -> bytes:
    rep = build_all()[args.rep]
    series = molien_series(rep, args.order)
    degrees = MOLIEN_CLAIMS.get(args.rep)
    claim = None
    if degrees is not None:
        claim = "1/(" + "".join(f"(1-t^{d})" for d in degrees) + ")"
        if series != product_series(degrees, args.order):
            raise Mismatch({"summary": f"rho{args.rep} series differs from {claim}",
                            "computed": molien_to_json(args.rep, series)})
    return _dump(molien_to_json(args.rep, series, claim))


def cmd_codes(args) -> bytes:
    return _dump(code_report(_load_code(args.file), h1().group))


def cmd_theta(args) -> bytes:
    w = weight_enumerator(_load_code(args.file))
    s = modular_map(w, args.order)
    return _dump({
        "enumerator": str(w),
        "order": args.order,
        "integer_exponents": s.has_integer_exponents(),
        "coefficients": qseries_to_json(s),
    })


def cmd_irreps(args) -> bytes:
    return _dump(irreps_to_json(build_all()))


def cmd_verify_all(args) -> bytes:
    report = verify_all()
    if not report["passed"]:
        raise Mismatch(report)
    return _dump(report)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = argparse.ArgumentParser(prog="reflect96",
                                description="Exact computations for the reflection group H1 of order 96.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_, description=help_)
        sp.set_defaults(func=fn)
        return sp

    add("group", cmd_group, "group order, conjugacy classes and element orders")
    sp = add("chartab", cmd_chartab, "the 16x16 character table")
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp = add("decompose", cmd_decompose, "multiplicities in chi_i * chi_j")
    sp.add_argument("--i", type=_label, required=True)
    sp.add_argument("--j", type=_label, required=True)
    sp = add("bratteli", cmd_bratteli, "Bratteli diagram of the natural tensor powers")
    sp.add_argument("--levels", type=_positive, default=9)
    sp.add_argument("--format", choices=["dot", "json"], default="json")
    sp = add("dims", cmd_dims, "centralizer dimensions by four routes")
    sp.add_argument("--max-k", type=_positive, default=20)
    sp.add_argument("--check", action="store_true", help="exit 1 unless every route agrees")
    sp = add("molien", cmd_molien, "Molien series of an irreducible representation")
    sp.add_argument("--rep", type=_label, required=True)
    sp.add_argument("--order", type=_positive, default=40)
    sp = add("codes", cmd_codes, "weight enumerator, predicates and invariance of a binary code")
    sp.add_argument("--file", required=True, help="generator rows, one 0/1 string per line")
    sp = add("theta", cmd_theta, "theta-series image of a code's weight enumerator")
    sp.add_argument("--file", required=True)
    sp.add_argument("--order", type=_positive, default=10)
    add("irreps", cmd_irreps, "generator images of all 16 irreducible representations")
    add("verify-all", cmd_verify_all, "run every check against the published values")
    return p


def _emit(data: bytes, output: str | None) -> None:
    if output:
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        data = args.func(args)
    except Mismatch as exc:
        sys.stderr.write(json.dumps(exc.report, indent=2) + "\n")
        return EXIT_MISMATCH
    except (OSError, CodeError, EnumerationLimitError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"reflect96 {args.command}: error: {exc}\n")
        return EXIT_USAGE
    except ClosureLimitError as exc:
        sys.stderr.write(json.dumps({"summary": "group closure aborted", "error": str(exc)}) + "\n")
        return EXIT_MISMATCH
    _emit(data, args.output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
