"""Command-line front end.

Exit codes: 0 success / certified, 1 not certified, 2 usage error,
3 numerical failure, 4 size guard.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from decimal import Decimal
from pathlib import Path
from typing import Any, Sequence

from . import dehn, hypcore, packing, pretzel
from .errors import DomainError, NumericalError, SizeGuardError, UsageError, ValidityError

SCHEMA_VERSION = "1"
SVG_HEIGHT = 500.0
LIST_LIMIT = 200

EXIT_OK, EXIT_NOT_CERTIFIED, EXIT_USAGE, EXIT_NUMERICAL, EXIT_SIZE = 0, 1, 2, 3, 4

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "hypmut report document",
    "type": "object",
    "required": ["schema_version", "command", "inputs", "results", "warnings"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"enum": ["thresholds", "pack", "certify", "mutants"]},
        "inputs": {"type": "object"},
        "results": {"type": "object"},
        "warnings": {"type": "array", "items": {"type": "string"}},
    },
    "allOf": [
        {"if": {"properties": {"command": {"const": "thresholds"}}},
         "then": {"properties": {"results": {"required": [
             "h", "g", "max_length_for_chi", "length_cutoff",
             "min_L_for_radius", "min_L_for_total_length"]}}}},
        {"if": {"properties": {"command": {"const": "pack"}}},
         "then": {"properties": {"results": {"required": [
             "kind", "n", "ell_w", "ell_s", "diameters", "residual", "bounds"]}}}},
        {"if": {"properties": {"command": {"const": "certify"}}},
         "then": {"properties": {"results": {"required": [
             "thresholds_met", "preserved_lengths", "mutant_count_enumerated",
             "mutant_count_formula", "q_threshold", "failing_entries"]}}}},
        {"if": {"properties": {"command": {"const": "mutants"}}},
         "then": {"properties": {"results": {"required": [
             "count", "formula", "discrepancy"]}}}},
    ],
}


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(message)


# --------------------------------------------------------------------------
# deterministic JSON
# --------------------------------------------------------------------------

def format_float(x: float) -> str | None:
    """12 significant digits, round-half-even on the exact binary value."""
    if not math.isfinite(x):
        return None
    s = format(Decimal(x), ".12g")
    mant, _, exp = s.partition("e")
    if "." in mant:
        mant = mant.rstrip("0").rstrip(".")
    s = mant + ("e" + exp if exp else "")
    if s in ("-0", "0"):
        return "0.0"
    if not any(ch in s for ch in ".eE"):
        s += ".0"
    return s


def _encode(obj: Any) -> str:
    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        s = format_float(obj)
        return "null" if s is None else s
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = sorted((str(k), v) for k, v in obj.items())
        return "{" + ", ".join(f"{json.dumps(k)}: {_encode(v)}" for k, v in items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_encode(v) for v in obj) + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return _encode(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(doc: dict) -> str:
    return _encode(doc) + "\n"


def report_document(command: str, inputs: dict, results: dict,
                    warnings: Sequence[str] = ()) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs,
            "results": results, "warnings": list(warnings)}


# --------------------------------------------------------------------------
# SVG
# --------------------------------------------------------------------------

def _fmt(v: float) -> str:
    return f"{v:.6f}".rstrip("0").rstrip(".")


def _element_class(name: str, rect: packing.CuspRectangle) -> str:
    corner = ("A", "B") if rect.rect_kind is packing.RectKind.CROSSING_CIRCLE else ("P1", "P3")
    return "horoball" if name in corner else "white-face"


def rectangle_svg(rect: packing.CuspRectangle) -> str:
    """Rectangle of height 1 drawn 500 units tall, y pointing down; the x
    range is the rectangle between its two shaded walls."""
    scale = SVG_HEIGHT
    x0, x1 = rect.walls
    width = (x1 - x0) * scale
    stroke = _fmt(0.003 * SVG_HEIGHT)

    def X(x):
        return (x - x0) * scale

    def Y(y):
        return (1.0 - y) * scale

    lines = ['<?xml version="1.0" encoding="UTF-8"?>',
             f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
             f'width="{_fmt(width)}" height="{_fmt(SVG_HEIGHT)}" '
             f'viewBox="0 0 {_fmt(width)} {_fmt(SVG_HEIGHT)}">',
             f'<g fill="none" stroke="black" stroke-width="{stroke}">']
    for name in sorted(rect.circles):
        c = rect.circles[name]
        cls = _element_class(name, rect)
        if c.is_line:
            y = c.offset / c.normal[1]
            lines.append(f'<line class="white-face" id="{name}" x1="0" y1="{_fmt(Y(y))}" '
                         f'x2="{_fmt(width)}" y2="{_fmt(Y(y))}"/>')
        else:
            cx, cy = c.center
            lines.append(f'<circle class="{cls}" id="{name}" cx="{_fmt(X(cx))}" '
                         f'cy="{_fmt(Y(cy))}" r="{_fmt(c.radius * scale)}"/>')
    for i, wx in enumerate(rect.walls):
        lines.append(f'<line class="shaded-face" id="wall{i + 1}" x1="{_fmt(X(wx))}" y1="0" '
                     f'x2="{_fmt(X(wx))}" y2="{_fmt(SVG_HEIGHT)}" stroke-dasharray="{stroke} {stroke}"/>')
    lines += ["</g>", "</svg>", ""]
    return "\n".join(lines)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def _parse_q(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"--q must be a comma-separated list of integers, got {text!r}")
    if not vals:
        raise UsageError("--q is empty")
    return vals


def _structural_check(q, allow=()):
    bad = [v for v in pretzel.validate(q)
           if v in (pretzel.Violation.EVEN_LENGTH, pretzel.Violation.TOO_SHORT,
                    pretzel.Violation.DUPLICATE_ENTRY) and v not in allow]
    if bad:
        raise UsageError("invalid tuple: " + ", ".join(v.value for v in bad))


def cmd_thresholds(args, out) -> tuple[dict, int]:
    chi = args.chi
    if not chi > 0 or not math.isfinite(chi):
        raise UsageError(f"--chi must be a positive real, got {chi!r}")
    warnings = []
    h = hypcore.h_threshold(chi)
    cutoff, derived = hypcore.length_cutoff(chi)
    try:
        radius_L = dehn.min_L_for_radius(h)
    except ValidityError as exc:
        radius_L = None
        warnings.append(f"min_L_for_radius: {exc}")
    results = {
        "h": h,
        "g": hypcore.g_threshold(chi),
        "max_length_for_chi": derived,
        "length_cutoff": cutoff,
        "min_L_for_radius": radius_L,
        "min_L_for_total_length": dehn.min_L_for_total_length(hypcore.PUBLISHED_LENGTH_CUTOFF),
        "min_L_for_total_length_at_cutoff": dehn.min_L_for_total_length(cutoff),
        "published_radius_constant": dehn.PUBLISHED_RADIUS_CONSTANT,
        "published_length_constant": dehn.PUBLISHED_LENGTH_CONSTANT,
    }
    if not args.quiet:
        for k in sorted(results):
            v = results[k]
            print(f"{k:36s} {'n/a' if v is None else format_float(v)}", file=out)
    return report_document("thresholds", {"chi": chi}, results, warnings), EXIT_OK


def cmd_pack(args, out) -> tuple[dict, int]:
    if args.n < 2:
        raise UsageError(f"--n must be >= 2, got {args.n}")
    if args.kind == "crossing":
        rect = packing.solve_crossing_rectangle(args.n)
        checks = packing.crossing_rectangle_bounds(rect)
    else:
        rect = packing.solve_knot_rectangle(args.n)
        checks = packing.knot_rectangle_bounds(rect)
    residual = packing.max_tangency_residual(rect)
    results = {
        "kind": args.kind, "n": args.n, "ell_w": rect.ell_w, "ell_s": rect.ell_s,
        "diameters": dict(rect.circle_diameters), "residual": residual,
        "route": rect.route,
        "bounds": [{"name": b.name, "value": b.value, "lower": b.lower, "upper": b.upper,
                    "holds": b.holds} for b in checks],
    }
    if args.svg:
        Path(args.svg).write_text(rectangle_svg(rect))
    inputs = {"kind": args.kind, "n": args.n}
    doc = report_document("pack", inputs, results)
    if args.json:
        Path(args.json).write_text(dumps(doc))
    if not args.quiet:
        print(f"{args.kind} rectangle, n = {args.n}: ell(w) = {format_float(rect.ell_w)}, "
              f"residual = {residual:.3e}", file=out)
        for b in checks:
            print(f"  {b.name:28s} {format_float(b.value):>16s}  "
                  f"{'PASS' if b.holds else 'FAIL'}", file=out)
    return doc, EXIT_OK


def cmd_certify(args, out) -> tuple[dict, int]:
    q = _parse_q(args.q)
    _structural_check(q, allow=(pretzel.Violation.DUPLICATE_ENTRY,))
    rep = pretzel.certify(q, args.mode.capitalize())
    results = rep.to_dict()
    doc = report_document("certify", {"q": list(q), "mode": args.mode}, results,
                          [s for s in rep.notes if s.startswith("violation")])
    if not args.quiet:
        out.write(dumps(doc))
    return doc, EXIT_OK if rep.thresholds_met else EXIT_NOT_CERTIFIED


def cmd_mutants(args, out) -> tuple[dict, int]:
    q = _parse_q(args.q)
    _structural_check(q)
    n = (len(q) - 1) // 2
    kind = pretzel.GeneratorKind.ALL if args.generators == "all" else pretzel.GeneratorKind.UNLINKED_ONLY
    forms = pretzel.enumerate_mutants(q, pretzel.MutationGenerators.for_n(n, kind), force=args.force)
    formula = pretzel.mutant_count_formula(n, kind)
    warnings = []
    if len(forms) != formula:
        warnings.append(f"enumerated count {len(forms)} differs from formula {formula}")
    results = {"count": len(forms), "formula": formula, "discrepancy": len(forms) != formula,
               "generators": kind.value, "n": n}
    if len(forms) <= LIST_LIMIT:
        results["canonical_forms"] = [list(f.q) for f in forms]
    if not args.quiet:
        print(f"{kind.value} generators, n = {n}: {len(forms)} classes (formula {formula})",
              file=out)
        for f in forms[:LIST_LIMIT] if len(forms) <= LIST_LIMIT else []:
            print(f"  {f}", file=out)
        for w in warnings:
            print(f"warning: {w}", file=out)
    doc = report_document("mutants", {"q": list(q), "generators": args.generators,
                                       "force": bool(args.force)}, results, warnings)
    return doc, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hypmut", description=__doc__.splitlines()[0])
    p.add_argument("--json-out", metavar="PATH", help="write the report document here")
    p.add_argument("--quiet", action="store_true", help="suppress stdout")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("thresholds", help="tube-radius, length and normalized-length thresholds")
    t.add_argument("--chi", type=float, required=True, help="|Euler characteristic| of the surface")

    k = sub.add_parser("pack", help="solve a cusp rectangle")
    k.add_argument("kind", choices=["crossing", "knot"])
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--svg", metavar="PATH")
    k.add_argument("--json", metavar="PATH")

    c = sub.add_parser("certify", help="certification report for a pretzel tuple")
    c.add_argument("--q", required=True, help="comma-separated twist parameters")
    c.add_argument("--mode", choices=["cusped", "closed"], default="cusped")

    m = sub.add_parser("mutants", help="enumerate mutation classes")
    m.add_argument("--q", required=True)
    m.add_argument("--generators", choices=["all", "unlinked"], default="all")
    m.add_argument("--force", action="store_true", help="override the size guard")
    return p


COMMANDS = {"thresholds": cmd_thresholds, "pack": cmd_pack,
            "certify": cmd_certify, "mutants": cmd_mutants}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    err = sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _ArgError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    try:
        doc, code = COMMANDS[args.command](args, out)
    except (UsageError, DomainError) as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except SizeGuardError as exc:
        print(f"size guard: {exc}", file=err)
        return EXIT_SIZE
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=err)
        if exc.residual is not None:
            print(f"residual: {exc.residual!r}", file=err)
        return EXIT_NUMERICAL
    if args.json_out:
        Path(args.json_out).write_text(dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
