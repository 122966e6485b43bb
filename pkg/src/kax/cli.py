"""Command-line surface.

Subcommands: compute, table, count-words, witt, verify.  Exit codes:
0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import kcalc, oracles, words
from .errors import KaxError
from .kcalc import (
    GroupExpr,
    GroupFactor,
    RingSpec,
    group_expr_to_dict,
    order,
    parse_ring_spec,
)
from .numtheory import require_prime
from .tbounds import t_od
from .witt import restrict, verschiebung, witt_ring

MAX_DEGREE = 200


# ---------------------------------------------------------------------------
# rendering


def _render_factor_text(gf: GroupFactor, integral: bool) -> str:
    if gf.kind == "free":
        base = "Z"
        mult = gf.rank or 1
        return base if mult == 1 else f"{base}^{mult}"
    if gf.kind == "cyclic":
        base = f"Z/{gf.order}"
    else:
        ring = gf.ring
        if integral and ring.kind == "finite_field":
            # render W_k(F_q) as the unramified quotient it is isomorphic to
            if ring.f == 1:
                base = f"Z/{ring.p ** gf.length}"
            else:
                base = f"O_F/{ring.p}^{gf.length}" if gf.length > 1 else f"O_F/{ring.p}"
        elif gf.length == 1:
            base = ring.label()
        else:
            base = f"W_{gf.length}({ring.label()})"
    if gf.multiplicity > 1:
        return f"{base}^{gf.multiplicity}"
    return base


def render_text(expr: GroupExpr, integral: bool = False) -> str:
    if expr.is_trivial:
        return "0"
    body = " x ".join(_render_factor_text(gf, integral) for gf in expr.factors)
    o = order(expr)
    if isinstance(o, int):
        return f"{body} (order {o})"
    return f"{body} ({o} order)" if o == "symbolic" else f"{body} (infinite)"


def _latex_ring(ring: RingSpec) -> str:
    if ring.kind == "finite_field":
        return rf"\mathbb{{F}}_{{{ring.q}}}"
    if ring.kind == "zp_cyclotomic":
        return rf"\mathbb{{Z}}_{{{ring.p}}}^{{\mathrm{{cycl}}}}"
    return ring.name or "R"


def _render_factor_latex(gf: GroupFactor) -> str:
    if gf.kind == "free":
        base = r"\mathbb{Z}"
        mult = gf.rank or 1
    elif gf.kind == "cyclic":
        base = rf"\mathbb{{Z}}/{gf.order}"
        mult = gf.multiplicity
    else:
        base = rf"W_{{{gf.length}}}({_latex_ring(gf.ring)})"
        mult = gf.multiplicity
    return base if mult == 1 else rf"{base}^{{{mult}}}"


def render_latex(expr: GroupExpr) -> str:
    if expr.is_trivial:
        return "0"
    return r" \times ".join(_render_factor_latex(gf) for gf in expr.factors)


def render(expr: GroupExpr, fmt: str, integral: bool = False) -> str:
    if fmt == "json":
        return json.dumps(group_expr_to_dict(expr))
    if fmt == "latex":
        return render_latex(expr)
    return render_text(expr, integral)


# ---------------------------------------------------------------------------
# argument plumbing


def _add_common_compute_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=int, required=True, help="the prime")
    sub.add_argument("--d", type=int, default=1, help="number of variables")
    sub.add_argument("--ring", required=True, help="Fq:<q> | perfect:<name>:<p> | perfectoid:<name>:<p> | zpcycl:<p>")
    sub.add_argument(
        "--variant", choices=["square", "axes", "dual"], default="square"
    )
    sub.add_argument("--integral", action="store_true", help="include the K(F_q) summand (finite fields only)")
    sub.add_argument(
        "--quillen-exponent", choices=["standard", "paper"], default="standard"
    )
    sub.add_argument("--format", choices=["text", "json", "latex"], default="text")


def _resolve_ring(args) -> RingSpec:
    ring = parse_ring_spec(args.ring)
    require_prime(args.p)
    if ring.p != args.p:
        raise KaxError(f"ring {args.ring} has p={ring.p}, but --p {args.p} given")
    if args.integral and ring.kind != "finite_field":
        raise KaxError("--integral requires a finite field ring (Fq:<q>)")
    return ring


def _check_degree(degree: int) -> None:
    if degree > MAX_DEGREE:
        raise KaxError(f"degree {degree} exceeds ceiling {MAX_DEGREE}")


def _compute_one(ring: RingSpec, args, degree: int) -> GroupExpr:
    if args.integral:
        return kcalc.integral_k_finite_field(
            ring.q, args.d, degree, args.quillen_exponent
        )
    if args.variant == "axes":
        return kcalc.axes_relative_k(ring, args.d, degree)
    if args.variant == "dual":
        return kcalc.dual_numbers_k(ring, degree)
    return kcalc.relative_k(ring, args.d, degree)


def _dual_report_lines(ring: RingSpec, degree: int) -> list[str]:
    lines = []
    if ring.p != 2 and degree >= 1 and degree % 2 == 1:
        r = (degree - 1) // 2
        for m_prime in range(1, degree + 1, 2):
            if m_prime % ring.p == 0:
                continue
            h = t_od(ring.p, r, m_prime)
            if h > 0:
                lines.append(f"h({m_prime}) = {h}")
    bw = kcalc.dual_numbers_big_witt_order(ring, degree)
    if bw is not None:
        i = (degree + 1) // 2
        lines.append(f"big Witt check: |W_{2 * i}|/|W_{i}| = {bw}")
    return lines


def cmd_compute(args) -> int:
    ring = _resolve_ring(args)
    _check_degree(args.degree)
    expr = _compute_one(ring, args, args.degree)
    print(render(expr, args.format, integral=args.integral))
    if args.variant == "dual" and args.format == "text":
        for line in _dual_report_lines(ring, args.degree):
            print(line)
    return 0


def cmd_table(args) -> int:
    ring = _resolve_ring(args)
    _check_degree(args.max_degree)
    variant = "integral" if args.integral else args.variant
    exprs = kcalc.table(ring, args.d, args.max_degree, variant, args.quillen_exponent)
    if args.format == "json":
        print(json.dumps([group_expr_to_dict(e) for e in exprs]))
    else:
        for e in exprs:
            print(f"degree {e.degree}: {render(e, args.format, args.integral)}")
    return 0


def cmd_count_words(args) -> int:
    if args.axes:
        count = words.count_axes(args.s, args.d)
    else:
        count = words.count_aperiodic(args.s, args.d)
    if args.list:
        enum = words.enumerate_axes if args.axes else words.enumerate_aperiodic
        listed = [str(w) for w in enum(args.s, args.d)]
        if args.format == "json":
            print(json.dumps({"count": str(count), "words": listed}))
        else:
            print(count)
            print(" ".join(listed))
    else:
        if args.format == "json":
            print(json.dumps({"count": str(count)}))
        else:
            print(count)
    return 0


def _parse_coords(text: str, n: int, f: int, p: int) -> tuple[int, ...]:
    parts = text.split(",")
    if len(parts) != n:
        raise KaxError(f"expected {n} coordinates, got {len(parts)}")
    out = []
    for part in parts:
        if f == 1:
            out.append(int(part) % p)
        else:
            digits = [int(x) % p for x in part.split(":")]
            if len(digits) != f:
                raise KaxError(f"coordinate {part!r} must have {f} components")
            out.append(sum(c * p**i for i, c in enumerate(digits)))
    return tuple(out)


def _format_coords(vec: tuple[int, ...], f: int, p: int) -> str:
    if f == 1:
        return ",".join(str(x) for x in vec)
    return ",".join(
        ":".join(str((x // p**i) % p) for i in range(f)) for x in vec
    )


def cmd_witt(args) -> int:
    require_prime(args.p)
    ring = witt_ring(args.p, args.n, args.f)
    a = _parse_coords(args.a, args.n, args.f, args.p)
    if args.op in ("add", "mul"):
        if args.b is None:
            raise KaxError(f"witt {args.op} needs two vectors")
        b = _parse_coords(args.b, args.n, args.f, args.p)
        result = ring.add(a, b) if args.op == "add" else ring.mul(a, b)
    elif args.op == "v":
        result = verschiebung(a)
    else:
        if args.n < 2:
            raise KaxError("restriction needs --n >= 2")
        result = restrict(a)
    print(_format_coords(result, args.f, args.p))
    return 0


def cmd_verify(args) -> int:
    try:
        report = oracles.run_suites(args.suite or ["all"])
    except KeyError as exc:
        raise KaxError(f"unknown suite {exc.args[0]!r}") from exc
    if args.format == "json":
        print(json.dumps([e.to_dict() for e in report]))
    else:
        for e in report:
            params = " ".join(f"{k}={v}" for k, v in e.params.items())
            line = f"{e.status.upper():7s} {e.check} {params}"
            if e.witness:
                line += f"  [{e.witness}]"
            print(line)
        fails = sum(1 for e in report if e.status == "fail")
        print(f"{len(report)} checks, {fails} failures")
    return 0 if oracles.all_passed(report) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kax",
        description="K-groups of square-zero multivariable extensions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="one K-group at one degree")
    _add_common_compute_args(p_compute)
    p_compute.add_argument("--degree", type=int, required=True)
    p_compute.set_defaults(func=cmd_compute)

    p_table = sub.add_parser("table", help="K-groups for degrees 0..max")
    _add_common_compute_args(p_table)
    p_table.add_argument("--max-degree", type=int, required=True)
    p_table.set_defaults(func=cmd_table)

    p_count = sub.add_parser("count-words", help="cyclic word counts")
    p_count.add_argument("--s", type=int, required=True)
    p_count.add_argument("--d", type=int, required=True)
    p_count.add_argument("--axes", action="store_true")
    p_count.add_argument("--list", action="store_true")
    p_count.add_argument("--format", choices=["text", "json"], default="text")
    p_count.set_defaults(func=cmd_count_words)

    p_witt = sub.add_parser("witt", help="Witt vector arithmetic")
    p_witt.add_argument("op", choices=["add", "mul", "v", "r"])
    p_witt.add_argument("--p", type=int, required=True)
    p_witt.add_argument("--n", type=int, required=True)
    p_witt.add_argument("--f", type=int, default=1)
    p_witt.add_argument("a")
    p_witt.add_argument("b", nargs="?")
    p_witt.set_defaults(func=cmd_witt)

    p_verify = sub.add_parser("verify", help="run brute-force verification suites")
    p_verify.add_argument(
        "suite", nargs="*", help="counts | witt | k1 | dual | all (default all)"
    )
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except (KaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
