"""Command-line entry point: ``pptcurves <subcommand> ...``.

Exit codes: 0 success, 1 domain error (e.g. a non-primitive triple),
2 usage error (argparse's own convention).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import dvalues, parabolas, plot, triples
from .parabolas import Orientation, format_fraction
from .triples import DomainError


def _emit(text: str, out_path: str | None = None) -> None:
    if out_path and out_path != "-":
        with open(out_path, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _approx(q: Fraction) -> str:
    return f"{float(q):.6g}"


def _triple_args(args) -> tuple[int, int, int]:
    x, y, c = args.x, args.y, args.c
    if not triples.is_pythagorean(x, y, c):
        raise DomainError(f"({x}, {y}, {c}) is not a Pythagorean triple")
    if not triples.is_primitive((x, y, c)):
        raise DomainError(f"({x}, {y}, {c}) is not primitive")
    return x, y, c


def cmd_gen(args) -> None:
    if args.first is not None:
        found = triples.first_ppts(args.first)
    elif args.oracle:
        found = triples.enumerate_ppts_oracle(args.max_leg)
    else:
        found = triples.enumerate_ppts(args.max_leg)
    _emit(plot.export_table(args.max_leg, args.format, found), args.out)


def _classify_lines(x: int, y: int, c: int, approx: bool) -> list[str]:
    up, right = parabolas.classify_point((x, y), c)
    lines = [f"point ({x}, {y}): d = {up.d}, d' = {right.d}",
             f"  up:    {up.equation()}",
             f"  right: {right.equation()}"]
    if approx:
        A, C = up.coefficients
        lines.append(f"  up (approx):    y = {_approx(A)}*x^2 + {_approx(C)}")
        A, C = right.coefficients
        lines.append(f"  right (approx): x = {_approx(A)}*y^2 + {_approx(C)}")
    return lines


def cmd_classify(args) -> None:
    x, y, c = _triple_args(args)
    lines = _classify_lines(x, y, c, args.approx)
    lines += _classify_lines(y, x, c, args.approx)
    _emit("\n".join(lines) + "\n")


def _anchor_lines(x: int, y: int, c: int, approx: bool) -> list[str]:
    up, right = parabolas.classify_point((x, y), c)
    anc = parabolas.anchor_of((x, y), c)
    down = parabolas.down_parabola_of(anc)
    m1, m2 = parabolas.slopes_at(up, down, (x, y))
    lines = [
        f"point ({x}, {y}): d = {up.d}, d' = {right.d}",
        f"  up: {up.equation()}",
        f"  a1 = {anc.a1}, d0 = {anc.d0}, t = {anc.t}; down: {down.equation()}",
        f"  anchor point ({anc.a1}, {anc.b1}), triple ({', '.join(map(str, anc.anchor_triple))})",
        f"  down contains point: {parabolas.down_contains(down, (x, y))}, "
        f"anchor: {parabolas.down_contains(down, (anc.a1, anc.b1))}",
        f"  slopes m1 = {format_fraction(m1)}, m2 = {format_fraction(m2)}, "
        f"m1*m2 = {format_fraction(m1 * m2)}",
    ]
    if approx:
        A, C = down.coefficients
        lines.append(f"  down (approx): y = {_approx(A)}*x^2 + {_approx(C)}")
    return lines


def cmd_anchor(args) -> None:
    x, y, c = _triple_args(args)
    lines = _anchor_lines(x, y, c, args.approx)
    lines += _anchor_lines(y, x, c, args.approx)
    _emit("\n".join(lines) + "\n")


def cmd_allowable(args) -> None:
    seq = dvalues.allowable_sequence(args.max)
    if not args.verify:
        _emit(", ".join(map(str, seq)) + "\n")
        return
    reports = [dvalues.verify_d_claim(d, args.max_leg).to_dict() for d in range(1, args.max + 1)]
    _emit(json.dumps({"sequence": seq, "reports": reports}, indent=1) + "\n")


def cmd_verify(args) -> None:
    case = dvalues.claim_case(args.d)
    if case.value != args.claim:
        raise DomainError(f"d = {args.d} falls under claim {case.value!r}, not {args.claim!r}")
    _emit(dvalues.verify_d_claim(args.d, args.max_leg).to_json() + "\n")


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v]


def _anchor_list(text: str) -> list[tuple[int, int]]:
    out = []
    for item in text.split(","):
        if not item:
            continue
        a1, _, d0 = item.partition(":")
        out.append((int(a1), int(d0)))
    return out


def cmd_plot(args) -> None:
    # validate overlays before rendering so bad ones exit 1, not mid-write
    for d in args.up:
        parabolas.UpParabola(d, Orientation.UP)
    for a1, d0 in args.down:
        parabolas.DownParabola(a1, d0, Orientation.DOWN)
    cfg = plot.PlotConfig(
        max_leg=args.max_leg,
        canvas_px=args.canvas,
        point_radius_px=args.radius,
        overlay_up=args.up,
        overlay_down=args.down,
        draw_diagonal=not args.no_diagonal,
    )
    _emit(plot.render_svg(cfg), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pptcurves",
        description="Primitive Pythagorean triples and the parabolas through their plot points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="table of PPTs with both legs below --max-leg")
    p.add_argument("--max-leg", type=int, default=100)
    p.add_argument("--first", type=int, help="instead: the first N PPTs ordered by short leg")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.add_argument("--oracle", action="store_true", help="use the brute-force enumerator")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_gen)

    for name, func, text in (("classify", cmd_classify, "d, d' and upward parabolas"),
                             ("anchor", cmd_anchor, "anchor and downward parabola")):
        p = sub.add_parser(name, help=text)
        p.add_argument("x", type=int)
        p.add_argument("y", type=int)
        p.add_argument("c", type=int)
        p.add_argument("--approx", action="store_true", help="also print decimal coefficients")
        p.set_defaults(func=func)

    p = sub.add_parser("allowable", help="allowable d values (OEIS A096033)")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="attach a claim report for every d <= --max")
    p.add_argument("--max-leg", type=int, default=2000)
    p.set_defaults(func=cmd_allowable)

    p = sub.add_parser("verify", help="test one case of the allowable-d analysis")
    p.add_argument("--claim", required=True, choices=[c.value for c in dvalues.ClaimId])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-leg", type=int, default=2000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot", help="render the Main Graph as SVG")
    p.add_argument("--max-leg", type=int, required=True)
    p.add_argument("--out", required=True, help="output path, or - for stdout")
    p.add_argument("--up", type=_int_list, default=[], help="d values, e.g. 1,2,8")
    p.add_argument("--down", type=_anchor_list, default=[], help="a1:d0 pairs, e.g. 13:1,20:2")
    p.add_argument("--no-diagonal", action="store_true")
    p.add_argument("--canvas", type=int, default=1000)
    p.add_argument("--radius", type=float, default=1.0)
    p.set_defaults(func=cmd_plot)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("max_leg", "max", "d", "first"):
        v = getattr(args, name, None)
        if v is not None and v < 1:
            parser.error(f"--{name.replace('_', '-')} must be positive")
    try:
        args.func(args)
    except (DomainError, ArithmeticError, ValueError) as exc:
        print(f"pptcurves: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
