"""Command line front end.

Exit codes: 0 success, 2 input or validation error (diagnostics on stderr),
3 infeasibility reported by table check / table deduce.  Output is either an
aligned text table (zeros printed as a middle dot) or a single JSON document;
for tables the JSON keys are always kind, dim, entries, notes in that order.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import arrangements, fans, tables
from .errors import InputError, InputWarning, SearchLimitError
from .fileio import (
    dumps_doc,
    dumps_table,
    load_json,
    parse_arrangement,
    parse_fan,
    parse_table,
)
from .qlinalg import format_rational

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invar",
        description="Invariant tables of subspace arrangements and toric 3-folds",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="path to a JSON input file")
        p.add_argument("--format", choices=("json", "pretty"), default="pretty")
        p.add_argument("--strict", action="store_true",
                       help="treat input warnings as errors")

    arrangement = sub.add_parser("arrangement", help="subspace arrangement commands")
    asub = arrangement.add_subparsers(dest="command", required=True)
    for name in ("lattice", "cdr", "betti", "lyubeznik", "oracle"):
        common(asub.add_parser(name))

    fan = sub.add_parser("fan", help="toric fan commands")
    fsub = fan.add_subparsers(dest="command", required=True)
    for name in ("validate", "picard", "projective", "lyubeznik"):
        common(fsub.add_parser(name))

    table = sub.add_parser("table", help="invariant table commands")
    tsub = table.add_subparsers(dest="command", required=True)
    check = tsub.add_parser("check")
    common(check)
    deduce = tsub.add_parser("deduce")
    common(deduce)
    deduce.add_argument("--bound", type=int, default=None,
                        help="upper bound for unknown entries (default 10)")

    small = sub.add_parser("tables", help="closed-form small tables")
    ssub = small.add_subparsers(dest="command", required=True)
    sm = ssub.add_parser("small")
    sm.add_argument("--dim", type=int, required=True, help="dimension (0, 1 or 2)")
    sm.add_argument("--a", type=int, default=1,
                    help="connected components of the punctured spectrum (dim 2 only)")
    common(sm, needs_input=False)
    return parser


def _emit_table(table: tables.InvariantTable, notes: list[str], fmt: str) -> str:
    if fmt == "json":
        return dumps_table(table, notes)
    out = table.pretty()
    for note in notes:
        out += f"\n# {note}"
    return out


def _emit_doc(doc: dict, fmt: str, pretty_lines: list[str]) -> str:
    if fmt == "json":
        return dumps_doc(doc)
    return "\n".join(pretty_lines)


def _cmd_arrangement(args) -> tuple[int, str]:
    n, components, names = parse_arrangement(load_json(args.input))
    if args.command == "lyubeznik":
        table = arrangements.lyubeznik_dim2(components)
        return EXIT_OK, _emit_table(table, [f"components: {len(components)}"], args.format)
    lattice = arrangements.build_lattice(components)
    if args.command == "lattice":
        flats = [
            {
                "id": f.id,
                "dim": f.dim,
                "equations": [
                    [format_rational(x) for x in row] for row in f.subspace.equations.entries
                ],
            }
            for f in lattice.flats
        ]
        order = sorted([a, b] for a, b in lattice.poset.less)
        doc = {
            "ambient_dim": n,
            "top": lattice.top_id,
            "flats": flats,
            "order": order,
            "notes": [],
        }
        lines = [f"ambient dimension {n}, {len(flats)} flats, top id {lattice.top_id}"]
        for f in lattice.flats:
            eqs = "; ".join(
                " ".join(str(format_rational(x)) for x in row)
                for row in f.subspace.equations.entries
            )
            lines.append(f"flat {f.id}: dim {f.dim}" + (f"  [{eqs}]" if eqs else "  [ambient]"))
        lines.append("order: " + ", ".join(f"{a}<{b}" for a, b in order))
        return EXIT_OK, _emit_doc(doc, args.format, lines)
    table = arrangements.cdr_table(lattice)
    if args.command == "cdr":
        notes = [f"ambient dimension: {n}", f"components: {len(names)}"]
        return EXIT_OK, _emit_table(table, notes, args.format)
    if args.command == "betti":
        betti = arrangements.complement_betti(table, n)
        doc = {"ambient_dim": n, "betti": betti, "notes": []}
        lines = [f"b~{k} = {v}" for k, v in enumerate(betti) if v] or ["all reduced Betti numbers vanish"]
        return EXIT_OK, _emit_doc(doc, args.format, lines)
    # oracle
    betti = arrangements.moebius_betti_oracle(lattice)
    doc = {"ambient_dim": n, "betti": betti, "notes": []}
    lines = [f"b{k} = {v}" for k, v in enumerate(betti)]
    return EXIT_OK, _emit_doc(doc, args.format, lines)


def _cmd_fan(args) -> tuple[int, str]:
    fan = parse_fan(load_json(args.input))
    if args.command == "validate":
        report = fans.validate_fan(fan)
        if not report.valid:
            raise InputError("; ".join(report.violations))
        doc = {
            "valid": True,
            "complete": report.complete,
            "rays": len(fan.rays),
            "max_cones": len(fan.max_cones),
            "walls": len(report.walls),
            "notes": [],
        }
        lines = [
            "valid fan: complete" if report.complete else "valid fan: not complete",
            f"{len(fan.rays)} rays, {len(fan.max_cones)} maximal cones, {len(report.walls)} walls",
        ]
        return EXIT_OK, _emit_doc(doc, args.format, lines)
    if args.command == "picard":
        data = fans.picard_data(fan)
        doc = {
            "picard_rank": data.picard_rank,
            "class_rank": data.class_rank,
            "projective": data.projective,
            "notes": [],
        }
        lines = [
            f"picard_rank = {data.picard_rank}",
            f"class_rank = {data.class_rank}",
            f"projective = {'yes' if data.projective else 'no'}",
        ]
        return EXIT_OK, _emit_doc(doc, args.format, lines)
    if args.command == "projective":
        result = fans.is_projective(fan)
        doc = {"projective": result, "notes": []}
        return EXIT_OK, _emit_doc(doc, args.format,
                                  [f"projective = {'yes' if result else 'no'}"])
    table = fans.toric_lyubeznik(fan)
    notes = [f"picard_rank: {fans.picard_rank(fan)}"]
    return EXIT_OK, _emit_table(table, notes, args.format)


def _cmd_table(args) -> tuple[int, str]:
    table, ambient, betti, file_bound = parse_table(load_json(args.input))
    if args.command == "deduce":
        if table.kind != tables.KIND_LYUBEZNIK:
            raise InputError("table deduce only applies to lyubeznik tables")
        bound = args.bound if args.bound is not None else file_bound
        result = tables.deduce_lambda(table, bound)
        if result.contradiction:
            out = _emit_table(table, result.notes(), args.format)
            return EXIT_INFEASIBLE, out
        filled = table.with_entries(result.forced)
        return EXIT_OK, _emit_table(filled, result.notes(), args.format)

    # table check
    if not table.is_complete():
        raise InputError("table check needs fully known entries; use table deduce")
    notes: list[str] = []
    if table.kind == tables.KIND_LYUBEZNIK:
        diags = tables.validate_lambda(table)
        if diags:
            return EXIT_INFEASIBLE, _emit_table(table, ["invalid: " + d for d in diags], args.format)
        es = tables.euler_sum(table)
        notes.append(f"euler sum: {es}")
        feasible, witness = tables.check_convergence_lambda(table)
        if not feasible:
            notes.append("convergence: infeasible")
            return EXIT_INFEASIBLE, _emit_table(table, notes, args.format)
        notes.append("convergence: feasible")
        for page, src, tgt, rank in witness:
            notes.append(
                f"witness: page {page} differential ({src[0]},{src[1]}) -> "
                f"({tgt[0]},{tgt[1]}) of rank {rank}"
            )
        return EXIT_OK, _emit_table(table, notes, args.format)

    # cdr tables need the abutment data
    if ambient is None or betti is None:
        raise InputError("checking a cdr table needs 'ambient_dim' and 'betti' in the file")
    bad = [
        f"triangularity violated: entry ({p},{q}) = {table.entry(p, q)}"
        for p, q in table.cells()
        if p > q and table.entry(p, q)
    ]
    if bad:
        return EXIT_INFEASIBLE, _emit_table(table, ["invalid: " + b for b in bad], args.format)
    feasible = tables.check_cdr(table, betti, ambient)
    if not feasible:
        notes.append("abutment: infeasible against the given Betti numbers")
        return EXIT_INFEASIBLE, _emit_table(table, notes, args.format)
    notes.append("abutment: feasible")
    if table.d <= 3:
        degenerate = tables.check_cdr(table, betti, ambient, require_degenerate=True)
        notes.append(f"degenerate solution matches: {'yes' if degenerate else 'no'}")
    return EXIT_OK, _emit_table(table, notes, args.format)


def _cmd_tables(args) -> tuple[int, str]:
    table = tables.canonical_small_tables(args.dim, args.a)
    return EXIT_OK, _emit_table(table, [], args.format)


_HANDLERS = {
    "arrangement": _cmd_arrangement,
    "fan": _cmd_fan,
    "table": _cmd_table,
    "tables": _cmd_tables,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handler = _HANDLERS[args.group]
    strict = getattr(args, "strict", False)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", InputWarning)
            code, output = handler(args)
        input_warnings = [w for w in caught if issubclass(w.category, InputWarning)]
        if input_warnings and strict:
            for w in input_warnings:
                print(f"error (strict): {w.message}", file=sys.stderr)
            return EXIT_INPUT
        for w in input_warnings:
            print(f"warning: {w.message}", file=sys.stderr)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SearchLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
