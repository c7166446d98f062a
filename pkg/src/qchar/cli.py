"""``qchar`` command-line interface.

Exit codes: 0 success (or member), 1 non-member / failed identity, 2 error.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from qchar import char_ring, schur, super_rings, verify, weyl_groupoid
from qchar.expr import (format_weight, from_json_obj, parse_poly, parse_weight, render)


class UsageError(Exception):
    pass


def _weight_arg(args, expected_len=None):
    parts = parse_weight(args.weight)
    n = len(parts) if expected_len is None else expected_len
    if args.n is not None and args.n != n:
        raise UsageError(f"-n {args.n} does not match weight {format_weight(parts)}")
    return parts


def _basis_element(text, n):
    kind, _, body = text.partition(":")
    if kind == "t":
        parts = tuple(Fraction(p) for p in body.split(",")) if body.strip() else ()
    else:
        parts = parse_weight(body)
    if n is not None and len(parts) != n:
        raise UsageError(f"weight {body!r} has {len(parts)} parts but -n is {n}")
    builders = {"p": schur.schur_p, "s": schur.schur_s, "e": schur.euler_char,
                "t": schur.typical_char}
    return builders[kind](parts)


def _read_poly(args):
    source = args.w_basis if getattr(args, "w_basis", None) else args.f
    if source is None:
        raise UsageError("no polynomial given (use -f EXPR or -w-basis p:...)")
    if os.path.isfile(source):
        with open(source) as fh:
            source = fh.read()
    text = source.strip()
    if text[:2] in ("p:", "s:", "e:", "t:"):
        return _basis_element(text, args.n)
    if text.startswith("{"):
        poly = from_json_obj(json.loads(text))
        if args.n is not None and poly.nvars != args.n:
            raise UsageError(f"JSON polynomial has {poly.nvars} variables, -n is {args.n}")
        return poly
    if args.n is None:
        raise UsageError("-n is required for a polynomial expression")
    return parse_poly(text, args.n)


def _emit(poly, args):
    print(render(poly, args.format))


def cmd_schur_p(args):
    _emit(schur.schur_p(_weight_arg(args)), args)


def cmd_schur_s(args):
    _emit(schur.schur_s(_weight_arg(args)), args)


def cmd_euler(args):
    _emit(schur.euler_char(_weight_arg(args)), args)


def cmd_typical(args):
    parts = tuple(Fraction(p) for p in args.weight.split(",")) if args.weight.strip() else ()
    if args.n is not None and args.n != len(parts):
        raise UsageError(f"-n {args.n} does not match the weight length {len(parts)}")
    _emit(schur.typical_char(parts), args)


def cmd_ev(args):
    result = char_ring.ev(_read_poly(args))
    _emit(result, args)
    expansion = char_ring.decompose_p(result)
    print("P-basis (n=%d): %s" % (result.nvars, json.dumps(expansion.as_json())))


def cmd_member(args):
    poly = _read_poly(args)
    if args.ring == "groupoid":
        reason, label = weyl_groupoid.groupoid_obstruction(poly), "Weyl groupoid invariants"
    else:
        ring = super_rings.RingId(args.ring)
        reason, label = super_rings.ring_obstruction(poly, ring), ring.label
    if reason is None:
        print(f"member: virtual character of {label} (n={poly.nvars})")
        return 0
    print(f"not a member of {label} (n={poly.nvars}): {reason}")
    return 1


def cmd_decompose(args):
    print(json.dumps(char_ring.decompose_p(_read_poly(args)).as_json()))


def cmd_kernel(args):
    factorization = char_ring.kernel_decompose(_read_poly(args))
    print(json.dumps({format_weight(mu): str(c)
                      for mu, c in factorization.s_coefficients.items()}))


def cmd_lift(args):
    if args.n is None:
        raise UsageError("-n (the target rank) is required")
    mu = parse_weight(args.weight)
    if len(mu) != args.n - 2:
        raise UsageError(f"weight {format_weight(mu)} must have n-2 = {args.n - 2} parts")
    print(format_weight(char_ring.lift_weight(mu)))


def cmd_verify(args):
    failures = 0
    for check in verify.run(args.suite, n=args.n or 4, max_entry=args.max_entry):
        if not check.ok:
            failures += 1
        if not check.ok or not args.quiet:
            print(check.line())
    print(f"{failures} failure(s)")
    return 1 if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(prog="qchar", description=(
        "Exact character rings of the queer Lie supergroups and superalgebras."))
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, weight=False, poly=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("-n", type=int, help="number of variables")
        if weight:
            p.add_argument("-w", "--weight", required=True, help="comma-separated parts")
        if poly:
            p.add_argument("-f", help="expression, JSON, basis shorthand (p:3,1) or a file")
            p.add_argument("-w-basis", "--w-basis", dest="w_basis",
                           help="basis shorthand such as p:3,1,0,0 or s:2,1")
        p.add_argument("--format", choices=("text", "json", "latex"), default="text")
        p.set_defaults(func=func)
        return p

    add("schur-p", cmd_schur_p, "Schur P-function p_lambda", weight=True)
    add("schur-s", cmd_schur_s, "Schur Laurent polynomial s_lambda", weight=True)
    add("euler", cmd_euler, "Euler characteristic E(lambda)", weight=True)
    add("typical", cmd_typical, "typical character ch L(lambda)", weight=True)
    add("ev", cmd_ev, "evaluation map x_{n-1} = -x_n", poly=True)
    member = add("member", cmd_member, "ring membership test", poly=True)
    member.add_argument("--ring", default="q",
                        choices=[r.value for r in super_rings.RingId] + ["groupoid"])
    add("decompose", cmd_decompose, "coordinates in the Schur P basis", poly=True)
    add("kernel", cmd_kernel, "factor a kernel element of ev", poly=True)
    add("lift", cmd_lift, "lift a weight of rank n-2 by adding zeros", weight=True)
    v = sub.add_parser("verify", help="replay the identity suites")
    v.add_argument("-n", type=int, default=4)
    v.add_argument("--max-entry", type=int, default=3)
    v.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    v.add_argument("-q", "--quiet", action="store_true", help="print failures only")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code = args.func(args)
    except (UsageError, ValueError, ArithmeticError, KeyError) as exc:
        print(f"qchar: error: {exc}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
