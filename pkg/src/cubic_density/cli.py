"""Command-line front end.

Exit codes: 0 success, 1 a verification mismatch, 2 a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from .exactalg import PolyQ, RatFunc
from .localdensity import golden, rho_local, xi_table
from .localdensity.solve import MAX_NONTRIVIAL_N, one_minus_rho

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(name):
    def parse(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}")
        if v < 1:
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {v}")
        return v
    return parse


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _latex_poly(p: PolyQ) -> str:
    return str(p).replace("*", " ").replace("t^", "p^").replace("t", "p")


# -- solve ------------------------------------------------------------------------

def _solved(n: int, cache_dir: Optional[Path]) -> RatFunc:
    value = golden.load(n, cache_dir)
    if value is None:
        value = one_minus_rho(n)
        try:
            golden.store(n, value, cache_dir)
        except OSError:
            pass
    return value


def cmd_solve(args) -> int:
    n = args.n
    if n >= MAX_NONTRIVIAL_N:
        _emit(args, "1", {"n": n, "rho": 1})
        return EXIT_OK
    value = _solved(n, args.cache_dir)
    g, h = value.num, value.den
    payload = golden.record_json(n, value)
    if args.format == "latex":
        print(f"g_{{{n}}}(p) = {_latex_poly(g)}")
        print(f"h_{{{n}}}(p) = {_latex_poly(h)}")
    else:
        _emit(args, f"g_{n}(t) = {g}\nh_{n}(t) = {h}", payload)
    return EXIT_OK


def cmd_verify_golden(args) -> int:
    ns = list(golden.GOLDEN_RANGE) if args.all or args.n is None else [args.n]
    status = EXIT_OK
    results = {}
    for n in ns:
        if n not in golden.GOLDEN_RANGE:
            raise UsageError(f"golden polynomials exist only for 1 <= n <= 8, got {n}")
        ok = golden.golden_check(n, _solved(n, args.cache_dir))
        results[str(n)] = ok
        if not ok:
            status = EXIT_MISMATCH
        if args.format != "json":
            print(f"n={n}: {'OK' if ok else 'MISMATCH'}")
    if args.format == "json":
        print(json.dumps(results, sort_keys=True))
    return status


def cmd_oracle(args) -> int:
    from .fforacle import count_types, is_prime

    if not is_prime(args.q):
        raise UsageError(f"q must be prime, got {args.q}")
    if args.cond is not None and args.cond > args.n + 1:
        raise UsageError(f"condition {args.cond} needs at least {args.cond} variables")
    counts = count_types(args.n, args.q, args.cond)
    expected = xi_table(args.n, args.cond).at(args.q)
    ok = all(Fraction(counts.counts[i], counts.total) == expected[i] for i in range(4))
    payload = counts.to_json()
    payload["matches_formula"] = ok
    lines = [f"n={args.n} q={args.q} condition={args.cond} total={counts.total}"]
    for i in range(4):
        lines.append(f"  type {i}: {counts.counts[i]}  formula {expected[i] * counts.total}")
    lines.append("OK" if ok else "MISMATCH")
    _emit(args, "\n".join(lines), payload)
    return EXIT_OK if ok else EXIT_MISMATCH


def _params(args):
    from .eulerprod import TailBoundParams

    try:
        return TailBoundParams(args.M, args.I)
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_rho(args) -> int:
    from .eulerprod import PlanningError, rho_global

    n = args.n
    if n >= MAX_NONTRIVIAL_N:
        _emit(args, "1", {"n": n, "value": "1"})
        return EXIT_OK
    if n < 2:
        raise UsageError("the Euler product diverges to 0 for n = 1; use n >= 2")
    params = _params(args)
    try:
        cv = rho_global(n, args.digits, args.max_A, params)
    except PlanningError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_MISMATCH
    cert = cv.certificate
    text = (f"rho_{n} = {cv.decimal}\n"
            f"1 - prod_{{p <= {cert.A}}} rho_{n}(p) = {cv.one_minus(4)}\n"
            f"A = {cert.A}, error <= {cert.to_json()['error_bound']} ({cert.digits} digits)")
    _emit(args, text, cv.to_json())
    return EXIT_OK


def cmd_zeta_tail(args) -> int:
    from .eulerprod import zeta_tail_upper
    from .eulerprod.truncation import format_significant

    if args.s < 2:
        raise UsageError("s must be >= 2")
    b = zeta_tail_upper(args.A, args.s, _params(args))
    payload = {"A": args.A, "s": args.s, "M": args.M, "I": args.I,
               "bound_minus_one": format_significant(b - 1, 12, up=True)}
    _emit(args, f"zeta_>{args.A}({args.s}) <= 1 + {payload['bound_minus_one']}", payload)
    return EXIT_OK


def cmd_sample_padic(args) -> int:
    from .fforacle import padic_binary_cubic_sample

    try:
        est = padic_binary_cubic_sample(args.p, args.samples, args.precision, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc))
    target = rho_local(1)(args.p)
    payload = est.to_json()
    payload["exact"] = f"{target.numerator}/{target.denominator}"
    text = (f"p={est.p} samples={est.samples} K={est.precision}: soluble {est.soluble}, "
            f"insoluble {est.insoluble}, undecided {est.undecided}; "
            f"ratio {est.ratio:.5f} vs exact {float(target):.5f}")
    _emit(args, text, payload)
    return EXIT_OK


TABLE6 = [(2, 61, 5), (2, 12919, 10), (3, 11, 10), (3, 503, 26), (4, 5, 16), (4, 179, 50),
          (5, 3, 21), (5, 17, 53), (6, 3, 38), (6, 19, 100), (7, 3, 62), (7, 7, 110),
          (8, 3, 97), (8, 5, 141)]


def cmd_tables(args) -> int:
    from .eulerprod import certified_at, rho_global
    from .eulerprod.truncation import format_fixed

    status = EXIT_OK
    t5, t6, t1 = [], [], []
    for n in range(2, 9):
        gamma, delta = golden.asymptotic_params(n)
        t5.append({"n": n, "gamma": gamma, "delta": delta})
    for n, A, D in TABLE6:
        cv = certified_at(n, A)
        ok = cv.certificate.digits >= D
        status = status if ok else EXIT_MISMATCH
        t6.append({"n": n, "A": A, "one_minus_product": cv.one_minus(4),
                   "digits": cv.certificate.digits, "target_digits": D, "ok": ok})
    for n in range(3, 9):
        D = next(d for m, _, d in TABLE6 if m == n)
        cv = rho_global(n, D)
        t1.append({"n": n, "gamma": golden.TABLE5[n][0], "delta": golden.TABLE5[n][1],
                   "rho": format_fixed(cv.value, 6) if n == 3 else f"1 - {cv.one_minus(4)}"})
    if args.format == "json":
        print(json.dumps({"table1": t1, "table5": t5, "table6": t6}, sort_keys=True))
        return status
    print("Asymptotics and numerics")
    print(f"{'n':>2}  {'g/h ~':<14} rho")
    for r in t1:
        print(f"{r['n']:>2}  {'1/' + str(r['gamma']) + 't^' + str(r['delta']):<14} {r['rho']}")
    print()
    print("Asymptotic parameters")
    print(f"{'n':>2} {'gamma':>5} {'delta':>5}")
    for r in t5:
        print(f"{r['n']:>2} {r['gamma']:>5} {r['delta']:>5}")
    print()
    print("Accuracy of truncations")
    print(f"{'n':>2} {'A':>6} {'1 - prod':>11} {'D':>4} {'certified':>9}")
    for r in t6:
        print(f"{r['n']:>2} {r['A']:>6} {r['one_minus_product']:>11} {r['target_digits']:>4} "
              f"{r['digits']:>9}")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubic-density",
                                     description="Local and global solubility densities of cubic hypersurfaces.")
    parser.add_argument("--format", choices=("text", "json", "latex"), default="text")
    parser.add_argument("--cache-dir", type=Path, default=None,
                        help=f"cache directory (default ${golden.CACHE_ENV} or ~/.cache/cubic_density)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve the relation system for n")
    p.add_argument("--n", type=_positive("n"), required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify-golden", help="compare solved densities with the closed forms")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=_positive("n"))
    g.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_verify_golden)

    p = sub.add_parser("oracle", help="count factorization types over F_q by enumeration")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--cond", type=int, choices=(1, 2, 3))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("rho", help="certified value of the Euler product")
    p.add_argument("--n", type=_positive("n"), required=True)
    p.add_argument("--digits", type=_positive("digits"), required=True)
    p.add_argument("--max-A", dest="max_A", type=_positive("max-A"), default=20000)
    p.add_argument("--M", type=_positive("M"), default=1000)
    p.add_argument("--I", type=_positive("I"), default=4)
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("zeta-tail", help="upper bound for the zeta Euler product over p > A")
    p.add_argument("--A", type=_positive("A"), required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--M", type=_positive("M"), default=1000)
    p.add_argument("--I", type=_positive("I"), default=4)
    p.set_defaults(func=cmd_zeta_tail)

    p = sub.add_parser("sample-padic", help="Monte Carlo check of rho_1(p)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--samples", type=_positive("samples"), default=10 ** 5)
    p.add_argument("--precision", type=int, default=40)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample_padic)

    p = sub.add_parser("tables", help="regenerate the asymptotics and accuracy tables")
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.cache_dir is None and os.environ.get(golden.CACHE_ENV):
        args.cache_dir = Path(os.environ[golden.CACHE_ENV])
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


run = main

if __name__ == "__main__":
    sys.exit(main())
