"""Command-line front end: ``exotic-springer <command> ...``.

Exit status is 0 on success, 1 on a domain error (reported with its error
code) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import checks
from .circles import NORTH, component_orientation, glue, intersect, km_dimension, orientations, witness_point
from .cohomology import (
    cell_generating_function,
    format_q_polynomial,
    monomial_basis,
    parse_element,
    poincare_polynomial,
)
from .diagrams import CupDiagram, all_weights, component_constraints, cup_from_weight, enumerate_diagrams
from .errors import ExoticError
from .homology import EnrichedCupDiagram, betti_numbers, line_diagram_sum, rank_check, standard_enriched
from .render import render
from .weyl import SignedPermutation, character_table

TEXT, JSON, SVG, TIKZ = "text", "json", "svg", "tikz"


class UsageError(Exception):
    pass


def _emit(args, text_lines: list[str] | str, payload) -> None:
    if args.format == JSON:
        print(json.dumps(payload, indent=2))
    elif isinstance(text_lines, str):
        print(text_lines)
    else:
        print("\n".join(text_lines))


def _require(args, *names: str) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.command} needs {' '.join(missing)}")


def _point_name(x) -> str:
    if x == NORTH:
        return "p"
    if x == -NORTH:
        return "-p"
    return str(x)


def _diagram(word: str) -> CupDiagram | EnrichedCupDiagram:
    return EnrichedCupDiagram.from_word(word) if "." in word else CupDiagram.from_word(word)


# -- commands -------------------------------------------------------------------


def cmd_enumerate(args) -> None:
    ds = enumerate_diagrams(args.m, args.k)
    _emit(args, [a.word for a in ds], [a.to_json() for a in ds])


def cmd_constraints(args) -> None:
    cons = component_constraints(CupDiagram.from_word(args.a))
    _emit(args, [str(c) for c in cons], [c.to_json() for c in cons])


def cmd_intersect(args) -> None:
    a, b = CupDiagram.from_word(args.a), CupDiagram.from_word(args.b)
    report = intersect(a, b)
    payload = report.to_json()
    lines = [
        f"{'nonempty' if report.nonempty else 'empty'}",
        f"circles: {report.circles}",
        f"half-cup/half-cup lines: {report.hh_lines}",
        f"K: {report.K}",
        f"dim: {report.cohomology_dim}",
    ]
    cd = glue(a, b)
    lines += [f"  {c.describe()}" for c in cd.components]
    if report.offending:
        lines.append("offending lines: " + ", ".join(str(sorted(c.vertices)) for c in report.offending))
    if args.witness:
        w = witness_point(a, b)
        if w:
            lines.append("witness: (" + ",".join(_point_name(x) for x in w) + ")")
            payload["witness"] = [x.to_json() for x in w]
        else:
            lines.append("witness: none")
            payload["witness"] = None
    if args.orientations:
        ws = orientations(a, b)
        payload["orientations"] = []
        lines.append(f"orientations: {len(ws)}")
        for gamma in ws:
            tags = component_orientation(cd, gamma)
            lines.append(f"  {gamma}  " + " ".join(f"{c.leftmost}:{t}" for c, t in tags))
            payload["orientations"].append(
                {"weight": str(gamma), "components": [{"leftmost": c.leftmost, "orientation": t} for c, t in tags]}
            )
    _emit(args, lines, payload)


def cmd_cells(args) -> None:
    rows = []
    for alpha in all_weights(args.m, args.k):
        c = cup_from_weight(alpha)
        rows.append({"weight": str(alpha), "cup": c.word, "dim": c.cups_plus_halfcups})
    cells = cell_generating_function(args.m, args.k)
    poincare = poincare_polynomial(args.m, args.k)
    lines = [f"{r['weight']}  {r['cup']}  {r['dim']}" for r in rows]
    lines.append(f"cells: {format_q_polynomial(cells)}")
    lines.append(f"poincare: {format_q_polynomial(poincare)}")
    lines.append("match" if cells == poincare else "MISMATCH")
    _emit(args, lines, {"cells": rows, "generating": cells, "poincare": poincare, "match": cells == poincare})


def cmd_cohomology(args) -> None:
    if args.poincare:
        coeffs = poincare_polynomial(args.m, args.k)
        _emit(args, format_q_polynomial(coeffs), {"m": args.m, "k": args.k, "coefficients": coeffs})
    elif args.mul:
        u, v = (parse_element(e, args.m, args.k) for e in args.mul)
        prod = u * v
        _emit(args, str(prod), prod.to_json())
    else:
        basis = monomial_basis(args.m, args.k)
        words = ["X{" + ",".join(map(str, u)) + "}" for u in basis]
        _emit(args, [f"{2 * len(u)}  {w}" for u, w in zip(basis, words)], {"basis": [list(u) for u in basis]})


def cmd_homology(args) -> None:
    if args.lm:
        vec = line_diagram_sum(EnrichedCupDiagram.from_word(args.lm))
        _emit(args, str(vec), vec.to_json())
        return
    _require(args, "m", "k")
    if args.standard:
        ds = standard_enriched(args.m, args.k)
        _emit(args, [f"{d.degree}  {d.word}" for d in ds], [d.to_json() for d in ds])
    elif args.rank is not None:
        r = rank_check(args.m, args.k, args.rank)
        _emit(args, str(r), {"m": args.m, "k": args.k, "l": args.rank, "rank": r})
    else:
        b = betti_numbers(args.m, args.k)
        _emit(args, format_q_polynomial(b), {"m": args.m, "k": args.k, "betti": b})


def cmd_character(args) -> None:
    w = SignedPermutation.parse(args.element, args.m)
    table = character_table(args.m, args.k, args.degree, [w])
    _emit(args, str(table["values"][0]["chi"]), table)


def cmd_km_dim(args) -> None:
    d = km_dimension(args.m, args.k)
    _emit(args, str(d), {"m": args.m, "k": args.k, "dim": d})


def cmd_render(args) -> None:
    fmt = SVG if args.format == TEXT else args.format
    if fmt == JSON:
        raise UsageError("render writes svg or tikz")
    other = CupDiagram.from_word(args.glue) if args.glue else None
    sys.stdout.write(render(_diagram(args.a), fmt, glue=other))


def cmd_check(args) -> int:
    results = []
    for n in range(1, len(checks.CRITERIA) + 1):
        r = checks.run_check(n, args.m_max)
        results.append(r)
        if args.format != JSON:
            print(r.line(), flush=True)
    ok = all(r.ok for r in results)
    if args.format == JSON:
        print(json.dumps({"passed": ok, "criteria": [r.to_json() for r in results]}, indent=2))
    else:
        print(f"{sum(r.ok for r in results)}/{len(results)} criteria passed")
    return 0 if ok else 1


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[TEXT, JSON, SVG, TIKZ], default=TEXT)

    parser = argparse.ArgumentParser(prog="exotic-springer", description="Cup diagram combinatorics toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str, needs_mk: bool = True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if needs_mk:
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--k", type=int, required=True)
        p.set_defaults(func=func)
        return p

    add("enumerate", cmd_enumerate, "list cup diagrams of shape ((k),(m-k))")
    add("constraints", cmd_constraints, "flag constraints of a cup diagram", needs_mk=False).add_argument(
        "--a", required=True
    )
    p = add("intersect", cmd_intersect, "intersection of two components", needs_mk=False)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--witness", action="store_true")
    p.add_argument("--orientations", action="store_true")
    add("cells", cmd_cells, "attracting cells and their generating function")
    p = add("cohomology", cmd_cohomology, "cohomology ring arithmetic")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--poincare", action="store_true")
    g.add_argument("--mul", nargs=2, metavar="EXPR")
    p = add("homology", cmd_homology, "standard homology basis", needs_mk=False)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--standard", action="store_true")
    g.add_argument("--lm", metavar="DIAGRAM")
    g.add_argument("--rank", type=int, metavar="L")
    p = add("character", cmd_character, "character value of a signed permutation")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--element", required=True, help='generator word "s0 s1" or window "2 -1 3 4"')
    add("km-dim", cmd_km_dim, "dimension of the space of oriented circle diagrams")
    p = add("render", cmd_render, "draw a cup diagram or a glued circle diagram", needs_mk=False)
    p.add_argument("--a", required=True)
    p.add_argument("--glue", metavar="WORD")
    p = add("check", cmd_check, "run the verification suite", needs_mk=False)
    p.add_argument("--m-max", type=int, default=None)
    return parser


DRAWING_COMMANDS = {"render"}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format in (SVG, TIKZ) and args.command not in DRAWING_COMMANDS:
        parser.error(f"--format {args.format} only applies to render")
    try:
        status = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ExoticError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
