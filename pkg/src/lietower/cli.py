"""Command-line interface: verification runs, root/tower/element queries,
JSON export, and SVG rendering.

Determinism contract: identical invocations write byte-identical output.
JSON keys are emitted in fixed construction order, SVG is assembled with
fixed element order and fixed-precision coordinates, and nothing records
time or environment.  ANSI colour appears only on a TTY and never when
NO_COLOR is set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional

from .cartan import find_cartan, root_system, weyl_generators
from .labels import mass_sl2c, mass_so42, parse_spin
from .periodic import MAX_Z, assign_elements, find_element, projection_slice
from .sopq import Metric, build_generators
from .svgout import svg_root_squares, svg_tower
from .verify import run_verification

RANK3_AXIS_ALIASES = {"L12": "L3", "L34": "A3", "L56": "D3"}


class CliError(Exception):
    pass


def _parse_signature(text: str) -> Metric:
    try:
        p_text, q_text = text.split(",")
        return Metric(int(p_text), int(q_text))
    except (ValueError, TypeError) as exc:
        raise CliError(f"bad signature {text!r}; expected P,Q like 4,2") from exc


def _parse_half(text: str, what: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad {what} {text!r}; expected a half-integer like 3/2") from exc
    if (value * 2).denominator != 1:
        raise CliError(f"bad {what} {text!r}; expected a half-integer like 3/2")
    return value


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _to_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _use_color() -> bool:
    return "NO_COLOR" not in os.environ and sys.stdout.isatty()


# -- commands -----------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    metric = _parse_signature(args.signature)
    report = run_verification(metric)
    if args.format == "json":
        _emit(_to_json(report.to_json_dict()), args.output)
    else:
        _emit(report.render_text(color=args.output is None and _use_color()), args.output)
    return 0 if report.ok else 1


def _root_table(metric: Metric):
    gs = build_generators(metric)
    cartan = find_cartan(gs)
    table = root_system(cartan, weyl_generators(gs, cartan))
    if metric == Metric(4, 2):
        table.cartan = [RANK3_AXIS_ALIASES.get(n, n) for n in table.cartan]
    return table


def cmd_roots(args: argparse.Namespace) -> int:
    metric = _parse_signature(args.signature)
    if metric not in (Metric(4, 2), Metric(4, 4)):
        raise CliError("roots are published for signatures 4,2 and 4,4")
    table = _root_table(metric)
    if args.format == "json":
        _emit(_to_json(table.to_json_dict()), args.output)
    elif args.format == "svg":
        _emit(svg_root_squares(table), args.output)
    else:
        lines = [f"cartan: {', '.join(table.cartan)}"]
        for name, root in table.rows:
            lines.append(f"{name:<4} {root}")
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_tower(args: argparse.Namespace) -> int:
    try:
        spin = parse_spin(args.spin)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    tower = projection_slice(assign_elements(), spin, mirror=True)
    if args.format == "json":
        _emit(_to_json(tower.to_json_dict()), args.output)
    elif args.format == "svg":
        _emit(svg_tower(tower), args.output)
    else:
        lines = [f"spin projection s = {tower.s_text}"]
        for floor in tower.floors:
            for sub in floor.subshells:
                cells = [
                    p.element.symbol if p.element else "-" for p in sub.points
                ]
                lines.append(f"n={floor.n:>2} l={sub.l}: " + " ".join(cells))
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_elements(args: argparse.Namespace) -> int:
    elements = assign_elements()
    if args.z is not None and args.symbol is not None:
        raise CliError("give only one of --z and --symbol")
    try:
        if args.z is not None:
            if not 1 <= args.z <= MAX_Z:
                raise CliError(f"z={args.z} out of range 1..{MAX_Z}")
            element = find_element(elements, z=args.z)
        elif args.symbol is not None:
            element = find_element(elements, symbol=args.symbol)
        else:
            raise CliError("give --z or --symbol")
    except KeyError as exc:
        raise CliError(str(exc).strip('"')) from exc
    node = None
    if args.node:
        parts = args.node.split(",")
        if len(parts) != 3:
            raise CliError("--node expects l,ldot,nu")
        node = tuple(
            _parse_half(part, name)
            for part, name in zip(parts, ("l", "l-dot", "nu"))
        )
    if args.format == "json":
        doc = element.to_json_dict()
        if node is not None:
            doc["mass"] = {
                "node": [str(v) for v in node],
                "value": f"{mass_so42(*node)} * m_H",
            }
        _emit(_to_json(doc), args.output)
        return 0
    ket = element.ket
    line = (
        f"Z={element.z} {element.symbol}  ket {ket}  "
        f"(floor n={ket.n}, subshell l={ket.l}, m={ket.m}, spin {ket.s_text})"
    )
    if node is not None:
        l, ldot, nu = node
        line += f"\nmass({l},{ldot},{nu}) = {mass_so42(l, ldot, nu)} * m_H"
    _emit(line + "\n", args.output)
    return 0


def cmd_mass(args: argparse.Namespace) -> int:
    l = _parse_half(args.l, "l")
    ldot = _parse_half(args.l_dot, "l-dot")
    if l < 0 or ldot < 0:
        raise CliError("spins must be non-negative")
    if args.nu is None:
        value = mass_sl2c(l, ldot)
        unit = "m_e"
    else:
        nu = _parse_half(args.nu, "nu")
        if nu < 0:
            raise CliError("nu must be non-negative")
        value = mass_so42(l, ldot, nu)
        unit = "m_H"
    _emit(f"{value} * {unit}\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lietower",
        description=(
            "Exact checks and diagrams for the rotation algebras so(4,2) / "
            "so(4,4) and the weight-tower periodic system built on them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the exact verification suites")
    p_verify.add_argument("--signature", required=True, help="P,Q e.g. 4,2")
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.add_argument("--output", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_roots = sub.add_parser("roots", help="root system of the oriented ladder set")
    p_roots.add_argument("--signature", required=True, help="4,2 or 4,4")
    p_roots.add_argument("--format", choices=("text", "json", "svg"), default="text")
    p_roots.add_argument("--output", default=None)
    p_roots.set_defaults(func=cmd_roots)

    p_tower = sub.add_parser("tower", help="weight-tower projection for one spin")
    p_tower.add_argument("--spin", required=True, help="-1/2 or +1/2")
    p_tower.add_argument("--format", choices=("text", "json", "svg"), default="text")
    p_tower.add_argument("--output", default=None)
    p_tower.set_defaults(func=cmd_tower)

    p_el = sub.add_parser("elements", help="look up one element slot")
    p_el.add_argument("--z", type=int, default=None)
    p_el.add_argument("--symbol", default=None)
    p_el.add_argument(
        "--node",
        default=None,
        help="l,ldot,nu half-integers; adds the tower-node mass in units of m_H",
    )
    p_el.add_argument("--format", choices=("text", "json"), default="text")
    p_el.add_argument("--output", default=None)
    p_el.set_defaults(func=cmd_elements)

    p_mass = sub.add_parser("mass", help="exact node mass")
    p_mass.add_argument("l", help="half-integer, e.g. 1/2")
    p_mass.add_argument("l_dot", help="half-integer, e.g. 0")
    p_mass.add_argument("nu", nargs="?", default=None, help="optional radial label")
    p_mass.add_argument("--output", default=None)
    p_mass.set_defaults(func=cmd_mass)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
