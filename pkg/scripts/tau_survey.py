#!/usr/bin/env python3
"""Survey divisor counts of F_n against the two lower bounds.

Prints tau(F_n) next to 2^Omega(n) (halved once for even n) and tau(n)
so the slack in each bound is visible. Terms whose factorization blows
the step budget are reported and skipped rather than stalling the run.
"""

import argparse

from genfib import ResourceLimitError, check_tau_bounds, f_fast


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", type=int, default=1)
    ap.add_argument("--b", type=int, default=1)
    ap.add_argument("--n-max", type=int, default=80)
    args = ap.parse_args()

    print(f"coefficients a={args.a} b={args.b}")
    print(f"{'n':>4} {'tau(F_n)':>9} {'2^Om bnd':>9} {'tau(n) bnd':>10}  digits")
    skipped = []
    violations = 0
    for n in range(2, args.n_max + 1):
        digits = len(str(abs(f_fast(args.a, args.b, n))))
        try:
            tb = check_tau_bounds(args.a, args.b, n)
        except ResourceLimitError:
            skipped.append(n)
            print(f"{n:>4} {'-':>9} {'-':>9} {'-':>10}  {digits}  (budget)")
            continue
        om_bound = 2 ** tb.omega_n if n % 2 else 2 ** (tb.omega_n - 1)
        tau_bound = tb.tau_n if n % 2 else tb.tau_n - 1
        mark = ""
        if not (tb.omega_bound_ok and tb.tau_bound_ok):
            violations += 1
            mark = "  VIOLATED"
        print(f"{n:>4} {tb.tau_fn:>9} {om_bound:>9} {tau_bound:>10}  {digits}{mark}")

    print()
    print(f"violations: {violations}")
    if skipped:
        print(f"skipped (factorization budget): {skipped}")


if __name__ == "__main__":
    main()
