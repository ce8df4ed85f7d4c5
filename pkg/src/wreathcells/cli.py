"""Command-line surface.

Exit codes: 0 on success, 1 when `check` finds unequal character sets, 2 on
usage errors.  All output is deterministic; `--format json` mirrors the text
tables.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .combinatorics import (
    enumerate_dpartitions,
    parse_dpartition,
    standard_tableaux,
)
from .conjecture import check_conjecture, params_from_r
from .fock import (
    canonical_basis,
    enumerate_standard_symbols,
    lm_constructible,
    symbol_sort_key,
)
from .gd12 import RegimeMismatch, cm_cells_n2, sim_classes, verify_gaudin_eigensystem
from .jucys_murphy import CMParams, jm_cellular_characters
from .laurent import parse_rational


class UsageError(ValueError):
    pass


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse integer list {text!r}") from exc


def _parse_rational_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(parse_rational(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse rational list {text!r}") from exc


def _params_from_args(args) -> CMParams:
    if args.k is not None:
        if args.c0 is None:
            raise UsageError("--k requires --c0")
        k = _parse_rational_list(args.k)
        d = args.d if args.d is not None else len(k)
        if d != len(k):
            raise UsageError(f"--d {d} disagrees with {len(k)} entries in --k")
        return CMParams(d, parse_rational(args.c0), k)
    if args.r is not None:
        if args.c0 is None:
            raise UsageError("--r requires --c0")
        return params_from_r(_parse_int_list(args.r), parse_rational(args.c0))
    raise UsageError("provide parameters via --k or --r (with --c0)")


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _cmd_dpartitions(args) -> int:
    items = enumerate_dpartitions(args.d, args.n)
    if args.format == "json":
        _emit(args, json.dumps([dp.text() for dp in items], indent=2))
    else:
        _emit(args, "\n".join(dp.text() for dp in items))
    return 0


def _cmd_tableaux(args) -> int:
    if args.shape:
        shapes = [parse_dpartition(args.shape)]
    elif args.d is not None and args.n is not None:
        shapes = list(enumerate_dpartitions(args.d, args.n))
    else:
        raise UsageError("tableaux needs --shape or both --d and --n")
    if args.format == "json":
        obj = {
            shape.text(): [tab.text() for tab in standard_tableaux(shape)]
            for shape in shapes
        }
        _emit(args, json.dumps(obj, indent=2))
    else:
        lines = []
        for shape in shapes:
            tabs = standard_tableaux(shape)
            lines.append(f"{shape.text()}  ({len(tabs)} tableaux)")
            for tab in tabs:
                lines.append(f"  {tab.text()}")
        _emit(args, "\n".join(lines))
    return 0


def _cmd_jm_cells(args) -> int:
    params = _params_from_args(args)
    decomposition = jm_cellular_characters(params, args.n)
    if args.format == "json":
        _emit(args, json.dumps(decomposition.to_json_obj(), indent=2))
    else:
        label = (
            "JM cells (= CM cells: parameters generic)"
            if decomposition.report.generic
            else "JM cells (upper bounds: CM cells may be merged)"
        )
        lines = [
            label,
            f"generic: {decomposition.report.generic}"
            + (
                f"  witness(k-index p, q, j): {decomposition.report.witness}"
                if decomposition.report.witness
                else ""
            ),
        ]
        for spec, cs in decomposition.cells:
            spec_text = ", ".join(str(x) for x in spec)
            lines.append(f"spectrum ({spec_text}): {cs.text()}")
        _emit(args, "\n".join(lines))
    return 0


def _cmd_standard_symbols(args) -> int:
    charges = _parse_int_list(args.r)
    component = enumerate_standard_symbols(charges, args.n)
    if args.format == "json":
        obj = {
            str(h): sorted(s.text() for s in layer)
            for h, layer in enumerate(component.by_height)
        }
        _emit(args, json.dumps(obj, indent=2))
    else:
        lines = []
        for h, layer in enumerate(component.by_height):
            syms = ", ".join(s.text() for s in sorted(layer, key=symbol_sort_key))
            lines.append(f"height {h}: {syms}")
        _emit(args, "\n".join(lines))
    return 0


def _cmd_canonical_basis(args) -> int:
    charges = _parse_int_list(args.r)
    basis = canonical_basis(charges, args.n)
    ordered = sorted(basis, key=lambda s: (s.height, symbol_sort_key(s)))
    if args.format == "json":
        obj = {
            "charges": list(charges),
            "max_height": args.n,
            "basis": [
                {
                    "symbol": sym.text(),
                    "terms": [
                        {"symbol": s.text(), "coeff": basis[sym].coefficient(s).text()}
                        for s in basis[sym].support()
                    ],
                }
                for sym in ordered
            ],
        }
        _emit(args, json.dumps(obj, indent=2))
    else:
        lines = []
        for sym in ordered:
            vec = basis[sym]
            body = " + ".join(
                f"({vec.coefficient(s).text()})[{s.text()}]" for s in vec.support()
            )
            lines.append(f"{sym.text()} : {body}")
        _emit(args, "\n".join(lines))
    return 0


def _cmd_lm_cells(args) -> int:
    charges = _parse_int_list(args.r)
    chars = lm_constructible(charges, args.n)
    ordered = sorted(chars.by_symbol, key=symbol_sort_key)
    if args.format == "json":
        obj = {sym.text(): chars.by_symbol[sym].to_json_obj() for sym in ordered}
        _emit(args, json.dumps(obj, indent=2))
    else:
        _emit(
            args,
            "\n".join(
                f"{sym.text()} : {chars.by_symbol[sym].text()}" for sym in ordered
            ),
        )
    return 0


def _cmd_cm_cells_n2(args) -> int:
    params = _params_from_args(args)
    cells = sorted(cm_cells_n2(params), key=lambda cs: cs.sort_key())
    if args.format == "json":
        obj = {
            "classes": [list(c) for c in sim_classes(params)],
            "cells": [cs.to_json_obj() for cs in cells],
        }
        _emit(args, json.dumps(obj, indent=2))
    else:
        lines = [f"classes: {sim_classes(params)}"]
        lines.extend(cs.text() for cs in cells)
        _emit(args, "\n".join(lines))
    return 0


def _cmd_gaudin_verify(args) -> int:
    params = _params_from_args(args)
    d = params.d
    pairs = (
        [(args.i, args.j)]
        if args.i is not None and args.j is not None
        else [(i, j) for i in range(1, d + 1) for j in range(i + 1, d + 1)]
    )
    reports = []
    all_ok = True
    for i, j in pairs:
        try:
            report = verify_gaudin_eigensystem(d, i, j, params)
            reports.append(report.to_json_obj())
            all_ok = all_ok and report.ok
        except RegimeMismatch as exc:
            reports.append(
                {"d": d, "pair": [i, j], "regimes": [], "irreducible": str(exc)}
            )
    if args.format == "json":
        _emit(args, json.dumps(reports, indent=2))
    else:
        lines = []
        for rep in reports:
            pair = tuple(rep["pair"])
            if rep.get("regimes"):
                verdicts = ", ".join(
                    f"{r['name']}: {'ok' if r['residuals_zero'] else 'FAIL'}"
                    for r in rep["regimes"]
                )
                lines.append(f"pair {pair}: {verdicts} (ok={rep['ok']})")
            else:
                lines.append(f"pair {pair}: {rep['irreducible']}")
        _emit(args, "\n".join(lines))
    return 0 if all_ok else 1


def _cmd_check(args) -> int:
    if args.r is not None:
        if args.c0 is None:
            raise UsageError("check needs --c0 alongside --r")
        verdict = check_conjecture(
            args.n, r=_parse_int_list(args.r), c0=parse_rational(args.c0)
        )
    else:
        params = _params_from_args(args)
        verdict = check_conjecture(args.n, params=params, shift=args.shift)
    if args.format == "json":
        _emit(args, json.dumps(verdict.to_json_obj(), indent=2))
    else:
        lines = [
            f"mode: {verdict.mode}",
            f"equal: {verdict.equal}" + (f"  ({verdict.note})" if verdict.note else ""),
            "cm cells:",
        ]
        lines.extend(f"  {cs.text()}" for cs in sorted(verdict.cm_set, key=lambda c: c.sort_key()))
        lines.append("lm cells:")
        lines.extend(f"  {cs.text()}" for cs in sorted(verdict.lm_set, key=lambda c: c.sort_key()))
        if not verdict.equal:
            lines.append("cm only: " + "; ".join(cs.text() for cs in verdict.cm_only))
            lines.append("lm only: " + "; ".join(cs.text() for cs in verdict.lm_only))
        _emit(args, "\n".join(lines))
    return 0 if verdict.equal else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreathcells",
        description=(
            "Exact cellular and constructible characters for G(d,1,n): "
            "Jucys-Murphy cells, Fock-space canonical bases and the "
            "parameter dictionary between them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, d=False, n=False, params=False, charges=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="write output to a file")
        if d:
            p.add_argument("--d", type=int, default=None)
        if n:
            p.add_argument("--n", type=int, required=True)
        if params:
            p.add_argument("--c0", default=None, help="rational, e.g. 1 or -1/2")
            p.add_argument("--k", default=None, help="comma list k_0,..,k_{d-1}")
        if charges:
            p.add_argument("--r", default=None, help="comma list of charges, weakly decreasing")

    p = sub.add_parser("dpartitions", help="list d-partitions of n")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_dpartitions)

    p = sub.add_parser("tableaux", help="list standard d-tableaux")
    p.add_argument("--shape", default=None, help='d-partition text, e.g. "2.1|∅"')
    common(p, d=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=_cmd_tableaux)

    p = sub.add_parser("jm-cells", help="Jucys-Murphy cells for given parameters")
    common(p, d=True, n=True, params=True, charges=True)
    p.set_defaults(func=_cmd_jm_cells)

    p = sub.add_parser("standard-symbols", help="crystal component by height")
    common(p, n=True, charges=True)
    p.set_defaults(func=_cmd_standard_symbols)

    p = sub.add_parser("canonical-basis", help="canonical basis up to height n")
    common(p, n=True, charges=True)
    p.set_defaults(func=_cmd_canonical_basis)

    p = sub.add_parser("lm-cells", help="Leclerc-Miyachi constructible characters")
    common(p, n=True, charges=True)
    p.set_defaults(func=_cmd_lm_cells)

    p = sub.add_parser("cm-cells-n2", help="closed-form Calogero-Moser cells at n=2")
    common(p, d=True, params=True, charges=True)
    p.set_defaults(func=_cmd_cm_cells_n2)

    p = sub.add_parser("gaudin-verify", help="verify the 2x2 Gaudin eigen-systems")
    common(p, d=True, params=True, charges=True)
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--j", type=int, default=None)
    p.set_defaults(func=_cmd_gaudin_verify)

    p = sub.add_parser("check", help="compare the two character sets")
    common(p, d=True, n=True, params=True, charges=True)
    p.add_argument("--shift", type=int, default=0)
    p.set_defaults(func=_cmd_check)

    return parser


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    entry()
