"""Divisibility structure of (u, v | a, b) sequences.

Covers the coprimality lemmas, index-divisibility of F, the gcd identity
gcd(F_m, F_n) = F_gcd(m,n), and the classification scan for sequences that
are divisibility sequences outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import SequenceParams, f_fast, g_prefix, is_cquence
from .errors import DomainError, HypothesisViolationError

DIVISIBLE = "divisible"
COUNTEREXAMPLE = "counterexample"


def divides(d: int, m: int) -> bool:
    """Ring-style divisibility: every d divides 0, while 0 divides only 0.

    Signs are ignored, so divides(-3, 6) and divides(3, -6) are both true.
    """
    if d == 0:
        return m == 0
    return m % d == 0


def _require_cquence(p: SequenceParams) -> None:
    if not is_cquence(p):
        raise HypothesisViolationError(
            f"(u,v|a,b)=({p.u},{p.v}|{p.a},{p.b}) fails the pairwise coprimality gate"
        )


def check_b_coprime(p: SequenceParams, n_max: int) -> bool:
    """gcd(b, G_n) = 1 for all 0 <= n <= n_max."""
    _require_cquence(p)
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    return all(gcd(p.b, g) == 1 for g in g_prefix(p, n_max))


def check_consecutive_coprime(p: SequenceParams, n_max: int) -> bool:
    """gcd(G_{n+1}, G_n) = 1 for all 0 <= n <= n_max."""
    _require_cquence(p)
    if n_max < 0:
        raise DomainError("n_max must be non-negative")
    vals = g_prefix(p, n_max + 1)
    return all(gcd(vals[n + 1], vals[n]) == 1 for n in range(n_max + 1))


def check_f_divisible(a: int, b: int, n: int, k: int) -> bool:
    """F_n | F_{n*k}, under the divides() convention."""
    if n < 0 or k < 0:
        raise DomainError("n and k must be non-negative")
    return divides(f_fast(a, b, n), f_fast(a, b, n * k))


def gcd_identity_check(a: int, b: int, m: int, n: int) -> bool:
    """gcd(F_m, F_n) = F_gcd(m,n), for the (0, 1 | a, b) sequence."""
    if b == 0 or gcd(a, b) != 1:
        raise HypothesisViolationError(
            f"(a,b)=({a},{b}) must satisfy b != 0 and gcd(a,b) = 1"
        )
    if m < 1 or n < 1:
        raise DomainError("m and n must be positive")
    return gcd(f_fast(a, b, m), f_fast(a, b, n)) == f_fast(a, b, gcd(m, n))


@dataclass(frozen=True)
class DivisibilityReport:
    """Outcome of scanning one sequence for the divisibility-sequence property."""

    params: SequenceParams
    bound: int
    verdict: str  # DIVISIBLE or COUNTEREXAMPLE
    witness: tuple[int, int] | None

    @property
    def is_divisible(self) -> bool:
        return self.verdict == DIVISIBLE


def check_divisible_sequence(p: SequenceParams, bound: int) -> DivisibilityReport:
    """Test G_n | G_m for every pair 1 <= n <= m <= bound with n | m.

    Scans n ascending, then m ascending, and reports the first violating
    pair as the witness. Pairs with m = n are skipped as trivially true.
    """
    if bound < 1:
        raise DomainError("bound must be positive")
    vals = g_prefix(p, bound)
    for n in range(1, bound + 1):
        for m in range(2 * n, bound + 1, n):
            if not divides(vals[n], vals[m]):
                return DivisibilityReport(p, bound, COUNTEREXAMPLE, (n, m))
    return DivisibilityReport(p, bound, DIVISIBLE, None)


def check_gm_divides_fm(p: SequenceParams, m: int) -> bool:
    """G_m | F_m for the companion sequence with the same coefficients."""
    _require_cquence(p)
    if m < 0:
        raise DomainError("m must be non-negative")
    vals = g_prefix(p, m)
    return divides(vals[m], f_fast(p.a, p.b, m))


def check_ccop(p: SequenceParams, m: int, q: int) -> bool:
    """gcd(G_m, F_{m*q - 1}) = 1, assuming the sequence is divisible up to m*q."""
    _require_cquence(p)
    if m < 1 or q < 1:
        raise DomainError("m and q must be positive")
    gate = check_divisible_sequence(p, m * q)
    if not gate.is_divisible:
        raise HypothesisViolationError(
            f"sequence is not divisible up to {m * q}; witness {gate.witness}"
        )
    return gcd(g_prefix(p, m)[m], f_fast(p.a, p.b, m * q - 1)) == 1


def scan_divisible(
    u_range: tuple[int, int],
    v_range: tuple[int, int],
    a_range: tuple[int, int],
    b_range: tuple[int, int],
    bound: int,
) -> list[tuple[SequenceParams, DivisibilityReport]]:
    """Scan a parameter grid and return the sequences divisible up to bound.

    Grid points with b != 0 enter only if they pass the coprimality gate.
    Points with b = 0 fall outside that gate entirely; they are admitted
    when the leading seed divides every later term, which for b = 0 reduces
    to u | v. Results follow the (u, v, a, b) grid order.
    """
    survivors: list[tuple[SequenceParams, DivisibilityReport]] = []
    for u in range(u_range[0], u_range[1] + 1):
        for v in range(v_range[0], v_range[1] + 1):
            for a in range(a_range[0], a_range[1] + 1):
                for b in range(b_range[0], b_range[1] + 1):
                    p = SequenceParams(u, v, a, b)
                    if b == 0:
                        if not divides(u, v):
                            continue
                    elif not is_cquence(p):
                        continue
                    report = check_divisible_sequence(p, bound)
                    if report.is_divisible:
                        survivors.append((p, report))
    return survivors
