"""Command-line interface.

Exit codes follow one convention everywhere: 0 on success, 1 on
malformed input (bad flags, unreadable files, inadmissible invariants),
2 when a computation runs but fails a verification or consistency
constraint (insufficient table range, inconsistent table, infeasible
sequence, catalog verification mismatch).

Values that start with a dash need the = form, e.g. --spectrum=-1,0
or --range=-8:2; bare negative integers such as --e -1 parse fine.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cohomology import CohomologyTable, spectrum_from_table, table_from_spectrum
from .errors import VERIFICATION_ERRORS, SheafSpectraError
from .invariants import ChernClasses, euler_characteristic, splitting_type_from_e
from .sheafcalc import recipe_table
from .spectrum import UNBOUNDED, ChainUpParam, SpectrumWithS, enumerate_spectra
from .workbench import (
    catalog_load,
    check_slope_examples,
    component_report,
    rao_pairs,
    realizability_gap,
    report_json,
    report_markdown,
    slope_examples_markdown,
)

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    """argparse that exits 1 on usage errors instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _moduli(text: str) -> ChernClasses:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"moduli must be E,C2,C3 with three entries, got {text!r}")
    e, c2, c3 = (int(p) for p in parts)
    return ChernClasses(e, c2, c3)


def _twist_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"range must be LO:HI, got {text!r}")
    return int(lo), int(hi)


def _values(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.split(","))


def _seh(text: str) -> ChainUpParam:
    if text == "unbounded":
        return UNBOUNDED
    return ChainUpParam(int(text))


def _spectrum_str(values) -> str:
    return "(" + ",".join(str(k) for k in values) + ")"


def _emit(args, as_json: str, as_md: str) -> int:
    print(as_json if args.format == "json" else as_md)
    return 0


def _cmd_chi(args) -> int:
    cc = ChernClasses(args.e, args.c2, args.c3)
    print(euler_characteristic(cc, args.twist))
    return 0


def _cmd_enumerate(args) -> int:
    cc = ChernClasses(args.e, args.c2, args.c3)
    found = enumerate_spectra(cc, args.seh)
    payload = {
        "moduli": list(cc.as_tuple()),
        "spectra": [{"values": list(sw.values), "s": sw.s} for sw in found],
    }
    lines = ["| Spectrum | s |", "| --- | --- |"]
    lines += [f"| {_spectrum_str(sw.values)} | {sw.s} |" for sw in found]
    return _emit(args, report_json(payload), "\n".join(lines))


def _cmd_table(args) -> int:
    sw = SpectrumWithS(args.spectrum, args.s)
    table = table_from_spectrum(sw, splitting_type_from_e(args.e), args.range)
    return _emit(args, table.to_json(), table.to_markdown())


def _cmd_invert_table(args) -> int:
    with open(args.file, "r", encoding="utf-8") as handle:
        table = CohomologyTable.from_json_dict(json.load(handle))
    e = args.e
    if e is None:
        if table.cc is None:
            raise ValueError("supply --e or a table with attached Chern classes")
        e = table.cc.e
    sw = spectrum_from_table(table, splitting_type_from_e(e))
    payload = {"values": list(sw.values), "s": sw.s}
    return _emit(
        args, report_json(payload), f"spectrum {_spectrum_str(sw.values)} with s={sw.s}"
    )


def _cmd_splice(args) -> int:
    with open(args.spec, "r", encoding="utf-8") as handle:
        node = json.load(handle)
    table = recipe_table(node, args.range)
    return _emit(args, table.to_json(), table.to_markdown())


def _cmd_report(args) -> int:
    report = component_report(catalog_load(args.catalog), args.moduli)
    return _emit(args, report_json(report), report_markdown(report))


def _cmd_rao_pairs(args) -> int:
    pairs = rao_pairs(catalog_load(args.catalog), args.moduli)
    payload = {"moduli": list(args.moduli.as_tuple()), "pairs": [list(p) for p in pairs]}
    md = "\n".join(f"{a} & {b}" for a, b in pairs) or "no shared spectra"
    return _emit(args, report_json(payload), md)


def _cmd_gap(args) -> int:
    missing, extra = realizability_gap(catalog_load(args.catalog), args.moduli, args.seh)
    payload = {
        "moduli": list(args.moduli.as_tuple()),
        "missing": [list(v) for v in missing],
        "extra_candidates": [list(v) for v in extra],
    }
    lines = ["missing (no known component):"]
    lines += [f"  {_spectrum_str(v)}" for v in missing] or ["  none"]
    lines.append("extra candidates (beyond the documented list):")
    lines += [f"  {_spectrum_str(v)}" for v in extra] or ["  none"]
    return _emit(args, report_json(payload), "\n".join(lines))


def _cmd_check_examples(args) -> int:
    report = check_slope_examples()
    return _emit(args, report_json(report), slope_examples_markdown(report))


def build_parser() -> _Parser:
    parser = _Parser(prog="sheafspectra", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=("md", "json"), default="md")

    p = sub.add_parser("chi", help="Euler characteristic of a twist")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--c3", type=int, required=True)
    p.add_argument("--twist", type=int, default=0)
    p.set_defaults(func=_cmd_chi)

    p = sub.add_parser("enumerate", help="all admissible spectra for a class")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--c2", type=int, required=True)
    p.add_argument("--c3", type=int, required=True)
    p.add_argument("--seh", type=_seh, default=UNBOUNDED,
                   help="chain-up threshold, an integer or 'unbounded'")
    fmt(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("table", help="cohomology table of a spectrum")
    p.add_argument("--spectrum", type=_values, required=True,
                   help="comma-separated values, e.g. --spectrum=-1,0")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--range", type=_twist_range, default=(-4, -1),
                   help="twist range LO:HI, e.g. --range=-8:2")
    fmt(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("invert-table", help="recover (spectrum, s) from a table")
    p.add_argument("file", help="table JSON file")
    p.add_argument("--e", type=int, default=None,
                   help="first Chern class if the table has none attached")
    fmt(p)
    p.set_defaults(func=_cmd_invert_table)

    p = sub.add_parser("splice", help="solve a sequence or recipe for its table")
    p.add_argument("--spec", required=True, help="recipe JSON file")
    p.add_argument("--range", type=_twist_range, default=(-8, 0))
    fmt(p)
    p.set_defaults(func=_cmd_splice)

    p = sub.add_parser("report", help="component report for a moduli class")
    p.add_argument("--moduli", type=_moduli, required=True,
                   help="E,C2,C3, e.g. --moduli=-1,2,0")
    p.add_argument("--catalog", default=None, help="catalog JSON file")
    fmt(p)
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("rao-pairs", help="components sharing spectrum values")
    p.add_argument("--moduli", type=_moduli, required=True)
    p.add_argument("--catalog", default=None)
    fmt(p)
    p.set_defaults(func=_cmd_rao_pairs)

    p = sub.add_parser("gap", help="enumerated spectra with no known component")
    p.add_argument("--moduli", type=_moduli, required=True)
    p.add_argument("--catalog", default=None)
    p.add_argument("--seh", type=_seh, default=UNBOUNDED)
    fmt(p)
    p.set_defaults(func=_cmd_gap)

    p = sub.add_parser("check-examples", help="slope-semistable bound breakers")
    fmt(p)
    p.set_defaults(func=_cmd_check_examples)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except VERIFICATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SheafSpectraError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
