"""Command-line front end: one JSON record per line, deterministic order.

Records carry a kind tag, an echo of the inputs, the result payload, and a
status among ok / violated / skipped. Exit code 0 when every record is ok,
1 when any check is violated, 2 on usage errors (including inputs that fail
an operation's hypotheses), 3 when a resource limit was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from .core import SequenceParams, g_fast, g_iter
from .diophantine import (
    Family,
    _square_pairs_grid,
    alternating_witnesses,
    brute_force_solutions,
    completeness_report,
    family_solution,
    is_bisquare,
    is_solution,
    two_square_decomposition,
)
from .divisibility import gcd_identity_check, scan_divisible
from .divisors import check_tau_bounds, primitive_divisors
from .errors import DomainError, ResourceLimitError
from .identities import addition_sides, determinant_sides
from .quadfield import binet_eval, binet_repeated_root, discriminant

OK = "ok"
VIOLATED = "violated"
SKIPPED = "skipped"


class _Run:
    """Accumulates record statuses while streaming them out."""

    def __init__(self, stream):
        self.stream = stream
        self.violated = False
        self.skipped = False

    def emit(self, kind: str, status: str = OK, **payload) -> None:
        rec = {"kind": kind, "status": status}
        rec.update(payload)
        self.stream.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")
        if status == VIOLATED:
            self.violated = True
        elif status == SKIPPED:
            self.skipped = True

    @property
    def exit_code(self) -> int:
        if self.violated:
            return 1
        if self.skipped:
            return 3
        return 0


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected lo..hi, got {text!r}")
    try:
        bounds = (int(lo), int(hi))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers in {text!r}") from None
    if bounds[0] > bounds[1]:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return bounds


def _echo(p: SequenceParams) -> dict:
    return {"u": p.u, "v": p.v, "a": p.a, "b": p.b}


def _cmd_compute(args, run: _Run) -> None:
    p = SequenceParams(args.u, args.v, args.a, args.b)
    if args.method == "iter":
        value = g_iter(p, args.n)
    elif args.method == "fast":
        value = g_fast(p, args.n)
    else:
        if discriminant(p.a, p.b) == 0:
            q = binet_repeated_root(p, args.n)
            assert q.denominator == 1
            value = int(q)
        else:
            value = binet_eval(p, args.n)
    run.emit("compute", method=args.method, n=args.n, value=value, **_echo(p))


def _cmd_identity(args, run: _Run) -> None:
    p = SequenceParams(args.u, args.v, args.a, args.b)
    if args.name == "addition":
        max_m = args.max_m if args.max_m is not None else args.max_n
        for m in range(max_m + 1):
            for n in range(args.max_n + 1):
                lhs, rhs = addition_sides(p, m, n)
                run.emit(
                    "identity",
                    name="addition",
                    m=m,
                    n=n,
                    lhs=lhs,
                    rhs=rhs,
                    status=OK if lhs == rhs else VIOLATED,
                    **_echo(p),
                )
    else:
        for n in range(args.max_n + 1):
            lhs, rhs = determinant_sides(p, n)
            run.emit(
                "identity",
                name="determinant",
                n=n,
                lhs=lhs,
                rhs=rhs,
                status=OK if lhs == rhs else VIOLATED,
                **_echo(p),
            )


def _cmd_scan_divisible(args, run: _Run) -> None:
    survivors = scan_divisible(
        args.u_range, args.v_range, args.a_range, args.b_range, args.bound
    )
    for p, rep in survivors:
        run.emit("divisible-survivor", bound=rep.bound, **_echo(p))
    run.emit("scan-summary", scan="divisible", survivors=len(survivors), bound=args.bound)


def _cmd_gcd_identity(args, run: _Run) -> None:
    witness = None
    checked = 0
    for m in range(1, args.max + 1):
        for n in range(1, args.max + 1):
            checked += 1
            if not gcd_identity_check(args.a, args.b, m, n):
                witness = [m, n]
                break
        if witness:
            break
    run.emit(
        "gcd-identity",
        a=args.a,
        b=args.b,
        max=args.max,
        checked=checked,
        witness=witness,
        status=VIOLATED if witness else OK,
    )


def _cmd_dioph_families(args, run: _Run) -> None:
    for fam in Family:
        both_odd_needed = fam in (Family.F1, Family.F2)
        for k in range(1, args.k_max + 1):
            for l in range(1, args.lm_max + 1):
                for m in range(1, args.lm_max + 1):
                    if gcd(l, m) != 1:
                        continue
                    if both_odd_needed and (l % 2 == 0 or m % 2 == 0):
                        continue
                    sol = family_solution(fam, k, l, m)
                    run.emit(
                        "dioph-solution",
                        family=fam.value,
                        k=k,
                        l=l,
                        m=m,
                        x=sol.x,
                        y=sol.y,
                        z=sol.z,
                        status=OK if is_solution(sol.x, sol.y, sol.z) else VIOLATED,
                    )


def _cmd_dioph_oracle(args, run: _Run) -> None:
    sols = brute_force_solutions(args.z_max)
    for x, y, z in sols:
        run.emit("dioph-triple", x=x, y=y, z=z)
    run.emit("scan-summary", scan="dioph-oracle", solutions=len(sols), z_max=args.z_max)


def _cmd_dioph_complete(args, run: _Run) -> None:
    rep = completeness_report(args.z_max, args.lm_max)
    run.emit(
        "dioph-complete",
        z_max=rep.z_max,
        param_bound=rep.param_bound,
        total=rep.total,
        family_matched=rep.family_matched,
        degenerate=rep.degenerate,
        unmatched=[list(t) for t in rep.unmatched],
        status=OK if rep.complete else VIOLATED,
    )


def _cmd_bisquare(args, run: _Run) -> None:
    if args.mode == "scan":
        missing = [
            flag
            for flag, val in (
                ("--u-max", args.u_max),
                ("--v-max", args.v_max),
                ("--a", args.a),
                ("--b", args.b),
            )
            if val is None
        ]
        if missing:
            raise DomainError(f"bisquare scan requires {' '.join(missing)}")
        pairs = _square_pairs_grid(args.u_max, args.v_max, args.a, args.b)
        for u, v, t in pairs:
            run.emit("square-invariant-pair", u=u, v=v, t=t, a=args.a, b=args.b)
        run.emit("scan-summary", scan="square-invariant", pairs=len(pairs))
    else:
        if args.n is None:
            raise DomainError("bisquare requires --n (or the scan mode)")
        dec = two_square_decomposition(args.n)
        classified = is_bisquare(args.n)
        # the factorization route and the search route must agree
        run.emit(
            "bisquare",
            n=args.n,
            bisquare=classified,
            decomposition=list(dec) if dec is not None else None,
            status=OK if classified == (dec is not None) else VIOLATED,
        )


def _cmd_alt_bisquable(args, run: _Run) -> None:
    p = SequenceParams(args.u, args.v, args.a, args.b)
    for w in alternating_witnesses(p, args.k_max, args.parity):
        run.emit(
            "alt-bisquable",
            parity=args.parity,
            n=w.n,
            value=w.value,
            decomposition=list(w.decomposition) if w.decomposition is not None else None,
            status=OK if w.decomposition is not None else VIOLATED,
            **_echo(p),
        )


def _cmd_tau_bounds(args, run: _Run) -> None:
    for n in range(2, args.n_max + 1):
        try:
            tb = check_tau_bounds(args.a, args.b, n)
        except ResourceLimitError as exc:
            run.emit("tau-bounds", n=n, a=args.a, b=args.b, reason=str(exc), status=SKIPPED)
            continue
        run.emit(
            "tau-bounds",
            n=n,
            a=args.a,
            b=args.b,
            tau_fn=tb.tau_fn,
            tau_n=tb.tau_n,
            omega_n=tb.omega_n,
            status=OK if tb.omega_bound_ok and tb.tau_bound_ok else VIOLATED,
        )


def _cmd_primitive(args, run: _Run) -> None:
    for n in range(1, args.n_max + 1):
        try:
            rep = primitive_divisors(args.a, args.b, n)
        except ResourceLimitError as exc:
            run.emit("primitive", n=n, a=args.a, b=args.b, reason=str(exc), status=SKIPPED)
            continue
        run.emit(
            "primitive",
            n=n,
            a=args.a,
            b=args.b,
            primes=list(rep.primitive_primes),
            has_primitive=rep.has_primitive,
        )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genfib",
        description="Generalized Fibonacci sequences: identities, divisibility, "
        "Diophantine families, and divisor-count bounds.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=1,
        help="cap on internal parallelism (execution may be sequential)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def seed_flags(sp):
        sp.add_argument("--u", type=int, required=True)
        sp.add_argument("--v", type=int, required=True)
        sp.add_argument("--a", type=int, required=True)
        sp.add_argument("--b", type=int, required=True)

    sp = sub.add_parser("compute", help="evaluate G_n")
    seed_flags(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=("iter", "fast", "binet"), default="fast")
    sp.set_defaults(func=_cmd_compute)

    sp = sub.add_parser("identity", help="check the addition or determinant identity")
    sp.add_argument("name", choices=("addition", "determinant"))
    seed_flags(sp)
    sp.add_argument("--max-m", type=int, default=None, help="addition only; defaults to --max-n")
    sp.add_argument("--max-n", type=int, required=True)
    sp.set_defaults(func=_cmd_identity)

    sp = sub.add_parser("scan-divisible", help="grid-scan for divisible sequences")
    sp.add_argument("--u-range", type=_parse_range, required=True, metavar="LO..HI")
    sp.add_argument("--v-range", type=_parse_range, required=True, metavar="LO..HI")
    sp.add_argument("--a-range", type=_parse_range, required=True, metavar="LO..HI")
    sp.add_argument("--b-range", type=_parse_range, required=True, metavar="LO..HI")
    sp.add_argument("--bound", type=int, required=True)
    sp.set_defaults(func=_cmd_scan_divisible)

    sp = sub.add_parser("gcd-identity", help="gcd(F_m, F_n) = F_gcd(m,n) on a square grid")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--max", type=int, required=True)
    sp.set_defaults(func=_cmd_gcd_identity)

    sp = sub.add_parser("dioph", help="the equation 5x^2 + 4y^2 = z^2")
    dsub = sp.add_subparsers(dest="dioph_command", required=True)
    dsp = dsub.add_parser("families", help="generate family solutions")
    dsp.add_argument("--k-max", type=int, required=True)
    dsp.add_argument("--lm-max", type=int, required=True)
    dsp.set_defaults(func=_cmd_dioph_families)
    dsp = dsub.add_parser("oracle", help="exhaustive solutions up to z-max")
    dsp.add_argument("--z-max", type=int, required=True)
    dsp.set_defaults(func=_cmd_dioph_oracle)
    dsp = dsub.add_parser("complete", help="match the exhaustive list against the families")
    dsp.add_argument("--z-max", type=int, required=True)
    dsp.add_argument("--lm-max", type=int, required=True)
    dsp.set_defaults(func=_cmd_dioph_complete)

    sp = sub.add_parser("bisquare", help="two-square decomposition / seed-pair scan")
    sp.add_argument("mode", nargs="?", choices=("scan",))
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--u-max", type=int, default=None)
    sp.add_argument("--v-max", type=int, default=None)
    sp.add_argument("--a", type=int, default=None)
    sp.add_argument("--b", type=int, default=None)
    sp.set_defaults(func=_cmd_bisquare)

    sp = sub.add_parser("alt-bisquable", help="alternating-index bisquare check")
    seed_flags(sp)
    sp.add_argument("--k-max", type=int, required=True)
    sp.add_argument("--parity", choices=("even", "odd"), required=True)
    sp.set_defaults(func=_cmd_alt_bisquable)

    sp = sub.add_parser("tau-bounds", help="divisor-count lower bounds for F_n")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.set_defaults(func=_cmd_tau_bounds)

    sp = sub.add_parser("primitive", help="primitive prime divisors of F_n")
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.set_defaults(func=_cmd_primitive)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    runner = _Run(sys.stdout)
    try:
        args.func(args, runner)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return runner.exit_code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
