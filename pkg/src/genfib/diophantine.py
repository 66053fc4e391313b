"""The equation 5x^2 + 4y^2 = z^2, sums of two squares, and seed-pair searches.

The equation's solutions are generated by four two-parameter families and
checked for completeness against exhaustive enumeration. The two-square
(bisquare) machinery classifies values via factorization, with a direct
search as the independent second route.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import count
from math import gcd, isqrt

from .core import SequenceParams, g_prefix
from .errors import DomainError, HypothesisViolationError
from .identities import invariant_quantity
from .divisors import Factorization, factorize


class Family(enum.Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"


@dataclass(frozen=True)
class DiophSolution:
    x: int
    y: int
    z: int
    family: Family
    params: tuple[int, int, int]  # (k, l, m)


def _exact_quarter(t: int) -> int:
    q, r = divmod(t, 4)
    if r:
        raise AssertionError(f"{t} is not divisible by 4")
    return q


def _exact_half(t: int) -> int:
    q, r = divmod(t, 2)
    if r:
        raise AssertionError(f"{t} is not even")
    return q


def family_solution(family: Family | str, k: int, l: int, m: int) -> DiophSolution:
    """One member of the named solution family.

    F1 = (klm, k(5l^2-m^2)/4, k(5l^2+m^2)/2) and F2 with l, m swapped roles
    need l and m both odd, which makes the divisions exact. F3 and F4 are the
    same shapes scaled clear of denominators; they only need gcd(l, m) = 1,
    and with parameters of opposite parity they are the families that reach
    the solutions with even z.
    """
    fam = Family(family)
    if gcd(l, m) != 1:
        raise HypothesisViolationError(f"l={l}, m={m} must be coprime")
    if fam in (Family.F1, Family.F2) and (l % 2 == 0 or m % 2 == 0):
        raise HypothesisViolationError(
            f"{fam.value} needs l and m odd; got l={l}, m={m}"
        )
    if fam is Family.F1:
        x, y, z = k * l * m, k * _exact_quarter(5 * l * l - m * m), k * _exact_half(5 * l * l + m * m)
    elif fam is Family.F2:
        x, y, z = k * l * m, k * _exact_quarter(l * l - 5 * m * m), k * _exact_half(l * l + 5 * m * m)
    elif fam is Family.F3:
        x, y, z = 4 * k * l * m, k * (5 * l * l - m * m), 2 * k * (5 * l * l + m * m)
    else:
        x, y, z = 4 * k * l * m, k * (l * l - 5 * m * m), 2 * k * (l * l + 5 * m * m)
    return DiophSolution(x, y, z, fam, (k, l, m))


def is_solution(x: int, y: int, z: int) -> bool:
    return 5 * x * x + 4 * y * y == z * z


def brute_force_solutions(z_max: int) -> list[tuple[int, int, int]]:
    """All (x, y, z) with x, y >= 0, 1 <= z <= z_max, sorted by (z, x, y)."""
    if z_max < 0:
        raise DomainError("z_max must be non-negative")
    out: list[tuple[int, int, int]] = []
    for z in range(1, z_max + 1):
        zz = z * z
        for x in range(isqrt(zz // 5) + 1):
            rem = zz - 5 * x * x
            if rem % 4:
                continue
            yy = rem // 4
            y = isqrt(yy)
            if y * y == yy:
                out.append((x, y, z))
    return out


@dataclass(frozen=True)
class CompletenessReport:
    z_max: int
    param_bound: int
    total: int
    family_matched: int
    degenerate: int
    unmatched: tuple[tuple[int, int, int], ...]

    @property
    def complete(self) -> bool:
        return not self.unmatched


def _family_triples(z_max: int, param_bound: int) -> set[tuple[int, int, int]]:
    # param_bound caps the smaller parameter; the larger one is capped by the
    # feasibility limit isqrt(2*z_max) implied by z <= z_max, so enumeration
    # covers the target range whenever param_bound >= isqrt(z_max / 3).
    cap = isqrt(2 * z_max) + 1
    out: set[tuple[int, int, int]] = set()
    for l in range(1, cap + 1):
        for m in range(1, cap + 1):
            if min(l, m) > param_bound or gcd(l, m) != 1:
                continue
            both_odd = l % 2 == 1 and m % 2 == 1
            fams = (Family.F1, Family.F2, Family.F3, Family.F4) if both_odd else (
                Family.F3,
                Family.F4,
            )
            for fam in fams:
                sol = family_solution(fam, 1, l, m)
                if sol.z <= 0 or sol.z > z_max:
                    continue
                x1, y1, z1 = abs(sol.x), abs(sol.y), sol.z
                for k in range(1, z_max // z1 + 1):
                    out.add((x1 * k, y1 * k, z1 * k))
    return out


def completeness_report(z_max: int, param_bound: int) -> CompletenessReport:
    """Match every exhaustive solution against the families.

    Solutions compare up to the sign of y (the equation is even in y). The
    x = 0 line (0, y, 2y) cannot arise from nonzero family parameters and is
    accounted separately as degenerate.
    """
    brute = brute_force_solutions(z_max)
    fam = _family_triples(z_max, param_bound)
    matched = degenerate = 0
    unmatched: list[tuple[int, int, int]] = []
    for sol in brute:
        if sol[0] == 0:
            degenerate += 1
        elif sol in fam:
            matched += 1
        else:
            unmatched.append(sol)
    return CompletenessReport(
        z_max, param_bound, len(brute), matched, degenerate, tuple(unmatched)
    )


def completeness_check(z_max: int, param_bound: int) -> bool:
    return completeness_report(z_max, param_bound).complete


def _is_square(x: int) -> bool:
    if x < 0:
        return False
    r = isqrt(x)
    return r * r == x


def is_bisquare(n: int) -> bool:
    """True iff n is a sum of two squares (0 allowed).

    Classified through the factorization: every prime congruent to 3 mod 4
    must occur to an even power.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    if n < 2:
        return True
    return all(e % 2 == 0 for p, e in factorize(n).factors if p % 4 == 3)


_DIRECT_SEARCH_LIMIT = 10**6


def _sqrt_minus_one(p: int) -> int:
    # p is a prime congruent to 1 mod 4; half of all bases work, scanned in order
    e = (p - 1) // 4
    for c in count(2):
        x = pow(c, e, p)
        if x * x % p == p - 1:
            return x
    raise AssertionError("unreachable")


def _prime_two_squares(p: int) -> tuple[int, int]:
    """p = r^2 + s^2 for p = 2 or p = 1 mod 4, by descent on the Euclidean remainders."""
    if p == 2:
        return (1, 1)
    a, b = p, _sqrt_minus_one(p)
    while b * b > p:
        a, b = b, a % b
    r = b
    s2 = p - r * r
    s = isqrt(s2)
    assert s * s == s2
    return (r, s)


def _cmul(z: tuple[int, int], w: tuple[int, int]) -> tuple[int, int]:
    return (z[0] * w[0] - z[1] * w[1], z[0] * w[1] + z[1] * w[0])


def _assembled_decomposition(fac: Factorization) -> tuple[int, int] | None:
    """Smallest-r two-square decomposition assembled from the factorization.

    Every representation comes from distributing conjugates over the primes
    congruent to 1 mod 4, so enumerating those splits and taking the minimum
    first coordinate is deterministic and exhaustive.
    """
    real = 1
    parts: list[list[tuple[int, int]]] = []
    acc = (1, 0)
    for p, e in fac.factors:
        if p == 2:
            for _ in range(e):
                acc = _cmul(acc, (1, 1))
        elif p % 4 == 3:
            if e % 2:
                return None
            real *= p ** (e // 2)
        else:
            pi = _prime_two_squares(p)
            conj = (pi[0], -pi[1])
            choices = []
            for j in range(e + 1):
                w = (1, 0)
                for _ in range(j):
                    w = _cmul(w, pi)
                for _ in range(e - j):
                    w = _cmul(w, conj)
                choices.append(w)
            parts.append(choices)
    acc = (acc[0] * real, acc[1] * real)
    results: set[tuple[int, int]] = set()
    stack = [(0, acc)]
    while stack:
        i, cur = stack.pop()
        if i == len(parts):
            r, s = abs(cur[0]), abs(cur[1])
            results.add((min(r, s), max(r, s)))
            continue
        for w in parts[i]:
            stack.append((i + 1, _cmul(cur, w)))
    return min(results)


def two_square_decomposition(n: int) -> tuple[int, int] | None:
    """Some (r, s) with r^2 + s^2 = n and 0 <= r <= s, or None.

    Ties are broken by the smallest r; below a size threshold this is found
    by ascending search, above it by assembly from the factorization.
    """
    if n < 0:
        raise DomainError("n must be non-negative")
    if n <= _DIRECT_SEARCH_LIMIT:
        r = 0
        while 2 * r * r <= n:
            s2 = n - r * r
            s = isqrt(s2)
            if s * s == s2:
                return (r, s)
            r += 1
        return None
    return _assembled_decomposition(factorize(n))


def euler_divisor_check(n: int) -> bool:
    """Every divisor of n is a bisquare, for n with a coprime decomposition.

    The coprimality hypothesis is essential: 45 = 3^2 + 6^2 is a bisquare,
    yet its divisor 3 is not. A coprime r^2 + s^2 exists exactly when n is
    not divisible by 4 nor by any prime congruent to 3 mod 4.
    """
    if n < 1:
        raise DomainError("n must be positive")
    fac = factorize(n)
    if n % 4 == 0 or any(p % 4 == 3 for p, _ in fac.factors):
        raise HypothesisViolationError(
            f"{n} admits no coprime two-square decomposition"
        )
    return all(is_bisquare(d) for d in fac.divisors())


def _square_pairs_grid(
    u_max: int, v_max: int, a: int, b: int
) -> list[tuple[int, int, int]]:
    out = []
    for u in range(u_max + 1):
        for v in range(v_max + 1):
            d = invariant_quantity(SequenceParams(u, v, a, b))
            if d >= 0:
                t = isqrt(d)
                if t * t == d:
                    out.append((u, v, t))
    return out


def square_invariant_pairs(search_bound: int, a: int, b: int) -> list[tuple[int, int, int]]:
    """Seed pairs 0 <= u, v <= search_bound whose invariant D is a perfect square.

    Returns (u, v, t) with t = sqrt(D) >= 0, ordered by (u, v).
    """
    if search_bound < 0:
        raise DomainError("search_bound must be non-negative")
    return _square_pairs_grid(search_bound, search_bound, a, b)


@dataclass(frozen=True)
class BisquareWitness:
    """One examined sequence term with its decomposition, if any."""

    n: int
    value: int
    decomposition: tuple[int, int] | None


def _alternating_indices(k_max: int, parity: str) -> range:
    if k_max < 1:
        raise DomainError("k_max must be positive")
    if parity == "even":
        return range(0, 2 * k_max + 1, 2)
    if parity == "odd":
        return range(1, 2 * k_max, 2)
    raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")


def _require_square_invariant(p: SequenceParams) -> None:
    # The alternating-index conclusions rest on (-b)^n * D being a square for
    # the relevant n, which reduces to D or -b*D being a perfect square.
    d = invariant_quantity(p)
    if not (_is_square(d) or _is_square(-p.b * d)):
        raise HypothesisViolationError(
            f"neither D={d} nor -b*D={-p.b * d} is a perfect square"
        )


def check_alternating_bisquable(p: SequenceParams, k_max: int, parity: str) -> bool:
    """Are all even-index (or all odd-index) terms up to 2*k_max bisquares?"""
    _require_square_invariant(p)
    indices = _alternating_indices(k_max, parity)
    vals = g_prefix(p, max(indices))
    for i in indices:
        if vals[i] < 0:
            raise DomainError(f"G_{i} = {vals[i]} is negative")
        if not is_bisquare(vals[i]):
            return False
    return True


def alternating_witnesses(
    p: SequenceParams, k_max: int, parity: str
) -> list[BisquareWitness]:
    """The examined terms with explicit decompositions; the search route."""
    _require_square_invariant(p)
    indices = _alternating_indices(k_max, parity)
    vals = g_prefix(p, max(indices))
    out = []
    for i in indices:
        if vals[i] < 0:
            raise DomainError(f"G_{i} = {vals[i]} is negative")
        out.append(BisquareWitness(i, vals[i], two_square_decomposition(vals[i])))
    return out
