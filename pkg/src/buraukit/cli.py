"""Command-line interface: ``buraukit {represent,order,witness,verify,cyclotomic}``.

Results go to stdout and diagnostics to stderr. Exit codes: 0 success,
1 mathematical mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import parse_word
from .burau import (a_numerator, a_poly, mat_pow, represent, zeta,
                    zeta_power_closed_form)
from .cyclotomic import cyclotomic_poly, divisors, euler_phi
from .errors import BurauError
from .kernel import (NotFound, default_cap, evaluate, make_witness, order_of,
                     predicted_min_k, verify_corollary_root)
from .laurent import LaurentPoly, mul, poly_product

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_represent(args) -> int:
    M = represent(parse_word(args.word, args.strands))
    if args.format == "json":
        _emit(M.to_json())
    elif args.format == "latex":
        print(M.to_latex())
    else:
        print(M.to_text())
    return EXIT_OK


def cmd_order(args) -> int:
    tau = args.tau
    if tau < 1:
        raise UsageError(f"--tau must be >= 1, got {tau}")
    cap = args.cap if args.cap is not None else default_cap(tau)
    if cap < 1:
        raise UsageError(f"--cap must be >= 1, got {cap}")
    found = order_of(evaluate(zeta(), tau), cap)
    found_k = None if isinstance(found, NotFound) else found
    predicted = predicted_min_k(tau) if tau > 3 else None
    match = None if predicted is None else found_k == predicted
    if args.format == "json":
        _emit({"tau": tau, "cap": cap, "found_k": found_k,
               "predicted_k": predicted, "match": match})
    else:
        if found_k is None:
            print(f"tau {tau}: no finite order up to cap {cap}")
        else:
            print(f"tau {tau}: order {found_k}")
        if predicted is not None:
            print(f"predicted {predicted}, {'match' if match else 'MISMATCH'}")
    return EXIT_MISMATCH if match is False else EXIT_OK


def cmd_witness(args) -> int:
    w = make_witness(args.strands, args.i, args.tau)
    if args.format == "json":
        _emit(w.to_json())
    else:
        i = args.i
        print(f"B_{args.strands}, tau {w.tau}: (s{i} s{i + 1} s{i})^{w.power_k}")
        print(f"word: {w.word.to_text()}")
        print(f"length {len(w.word)}, exponent sum {w.exponent_sum}, "
              f"identity at root: {'verified' if w.verified_identity else 'FAILED'}")
    return EXIT_OK if w.verified_identity else EXIT_MISMATCH


def _verify_checks(max_k: int, max_tau: int, cap_factor: int = 4):
    """Yield (name, passed, detail) for every regression check."""
    Z = zeta()
    for k in range(2, max_k + 1, 2):
        yield f"closed form k={k}", zeta_power_closed_form(k) == mat_pow(Z, k), ""
    for n in range(1, max_tau + 1):
        prod = poly_product([cyclotomic_poly(d) for d in divisors(n)])
        ok = prod == LaurentPoly([-1] + [0] * (n - 1) + [1])
        ok = ok and cyclotomic_poly(n).max_exp == euler_phi(n)
        yield f"cyclotomic n={n}", ok, ""
    phi3 = cyclotomic_poly(3)
    for m in range(0, 3 * max_k // 2 + 1):
        try:
            ok = mul(a_poly(m), phi3) == a_numerator(m)
        except BurauError:
            ok = False
        yield f"a_m divisibility m={m}", ok, ""
    for row in verify_corollary_root(max_tau, cap_factor):
        yield (f"order tau={row.tau}", row.passed,
               f"predicted {row.predicted_k}, found {row.found_k}")


def cmd_verify(args) -> int:
    if args.max_k < 2 or args.max_k % 2:
        raise UsageError(f"--max-k must be an even integer >= 2, got {args.max_k}")
    if args.max_tau < 4:
        raise UsageError(f"--max-tau must be >= 4, got {args.max_tau}")
    results = list(_verify_checks(args.max_k, args.max_tau))
    ok = all(passed for _, passed, _ in results)
    if args.format == "json":
        _emit({"pass": ok, "checks": [{"name": n, "pass": p, "detail": d}
                                      for n, p, d in results]})
    else:
        for name, passed, detail in results:
            print(f"{'PASS' if passed else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
        print(f"{sum(p for _, p, _ in results)}/{len(results)} checks passed")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_cyclotomic(args) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be >= 1, got {args.n}")
    phi = cyclotomic_poly(args.n)
    if args.format == "json":
        _emit(phi.to_json())
    elif args.format == "latex":
        print(phi.to_latex(descending=True))
    else:
        print(phi.to_text(descending=True))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="buraukit",
        description="Burau representation of braid groups at roots of unity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p, choices=("pretty", "json")):
        p.add_argument("--format", choices=choices, default="pretty",
                       help="output format (default: pretty)")

    p = sub.add_parser("represent", help="Burau matrix of a braid word")
    p.add_argument("--strands", type=int, required=True, help="number of strands n")
    p.add_argument("--word", required=True,
                   help='signed generator indices, e.g. "1 2 -1" (left-to-right application)')
    fmt(p, ("pretty", "json", "latex"))
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("order", help="order of zeta at a primitive tau-th root of unity")
    p.add_argument("--tau", type=int, required=True)
    p.add_argument("--cap", type=int, default=None, help="search cap (default: 4*tau)")
    fmt(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("witness", help="verified kernel element (s_i s_i+1 s_i)^k")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--i", type=int, required=True, help="block position, 1 <= i <= n-2")
    p.add_argument("--tau", type=int, required=True, help="order of the root, > 3")
    fmt(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="regression sweep of closed forms and orders")
    p.add_argument("--max-k", type=int, required=True, help="even bound on k for the closed form")
    p.add_argument("--max-tau", type=int, required=True, help="bound on tau, >= 4")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cyclotomic", help="the n-th cyclotomic polynomial")
    p.add_argument("--n", type=int, required=True)
    fmt(p, ("pretty", "json", "latex"))
    p.set_defaults(func=cmd_cyclotomic)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BurauError, ValueError) as exc:
        print(f"buraukit {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
