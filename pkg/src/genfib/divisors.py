"""Integer factorization and the divisor structure of F_n.

Factorization runs trial division up to a fixed bound and then a seeded
Brent-cycle rho on whatever composite remains, with a Miller-Rabin primality
test (deterministic below 3.3e24, a strong pseudoprime screen beyond).
Everything downstream (tau, ranks of apparition, first-occurrence prime
factors, tau lower bounds) builds on that.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .core import f_fast
from .errors import DomainError, HypothesisViolationError, ResourceLimitError

# F_n values above this many decimal digits are not factored; callers see a
# ResourceLimitError and report the index as skipped.
DIGIT_LIMIT = 80

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _small_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i in range(limit) if sieve[i])


_SMALL_PRIMES = _small_primes(1000)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the fixed 12-base witness set."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = ((d & -d)).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent_rho(n: int, rng: random.Random, max_steps: int) -> tuple[int | None, int]:
    """One Brent cycle attempt on odd composite n; returns (factor or None, steps)."""
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    steps = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        steps += r
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            steps += min(m, r - k)
            g = gcd(q, n)
            k += m
            if steps > max_steps and g == 1:
                return None, steps
        r <<= 1
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
            steps += 1
    if g == n:
        return None, steps
    return g, steps


@dataclass(frozen=True)
class Factorization:
    """n as a sorted tuple of (prime, exponent) pairs."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def tau(self) -> int:
        out = 1
        for _, e in self.factors:
            out *= e + 1
        return out

    @property
    def big_omega(self) -> int:
        return sum(e for _, e in self.factors)

    def divisors(self) -> list[int]:
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**k for d in divs for k in range(e + 1)]
        return sorted(divs)


_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def factorize(n: int, *, trial_bound: int = 10**6, rho_budget: int = 4_000_000) -> Factorization:
    """Full prime factorization of a positive integer.

    Trial division (2, 3, 5 and a mod-30 wheel) runs below trial_bound; any
    remaining composite goes to Brent rho seeded from n itself, so repeated
    runs walk the identical path. rho_budget caps the total rho steps for
    this call; exhausting it raises ResourceLimitError.
    """
    if n < 1:
        raise DomainError(f"factorize needs a positive integer, got {n}")
    counts: dict[int, int] = {}
    m = n
    for p in (2, 3, 5):
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    if m > 1 and not is_prime(m):
        d = 7
        idx = 0
        while d <= trial_bound and d * d <= m:
            if m % d == 0:
                e = 0
                while m % d == 0:
                    m //= d
                    e += 1
                counts[d] = e
                if m == 1 or is_prime(m):
                    break
            d += _WHEEL[idx]
            idx = (idx + 1) & 7
        if m > 1 and d * d > m:
            # no divisor up to sqrt(m), so the cofactor is prime
            counts[m] = counts.get(m, 0) + 1
            m = 1
    if m > 1:
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
        else:
            rng = random.Random(n)
            budget = rho_budget
            stack = [m]
            while stack:
                c = stack.pop()
                if is_prime(c):
                    counts[c] = counts.get(c, 0) + 1
                    continue
                factor = None
                while factor is None:
                    factor, used = _brent_rho(c, rng, budget)
                    budget -= used
                    if factor is None and budget <= 0:
                        raise ResourceLimitError(
                            f"rho budget exhausted factoring {n} (stuck on {c})"
                        )
                stack.append(factor)
                stack.append(c // factor)
    return Factorization(n, tuple(sorted(counts.items())))


def tau(n: int) -> int:
    """Number of positive divisors."""
    return factorize(n).tau


def big_omega(n: int) -> int:
    """Number of prime factors counted with multiplicity."""
    return factorize(n).big_omega


def rank_of_apparition(a: int, b: int, p: int, limit: int = 5000) -> int | None:
    """Least n >= 1 with p | F_n, or None if no such n <= limit exists.

    Computed modulo p. When p | b and p does not divide a, no index ever
    works, so None is a real answer rather than a search failure.
    """
    if p < 2:
        raise DomainError("p must be at least 2")
    lo, hi = 0, 1 % p
    for n in range(1, limit + 1):
        if hi == 0:
            return n
        lo, hi = hi, (a * hi + b * lo) % p
    return None


@dataclass(frozen=True)
class PrimitiveDivisorReport:
    """Primes dividing F_n that divide no earlier F_m with 1 <= m < n."""

    n: int
    primitive_primes: tuple[int, ...]
    has_primitive: bool


def primitive_divisors(a: int, b: int, n: int) -> PrimitiveDivisorReport:
    """Classify the prime factors of F_n by their rank of apparition."""
    if a <= 0 or b <= 0:
        raise HypothesisViolationError("coefficients must be positive")
    if n < 1:
        raise DomainError("n must be positive")
    prims: list[int] = []
    for p, _ in _factor_f(a, b, n).factors:
        if rank_of_apparition(a, b, p, limit=n) == n:
            prims.append(p)
    return PrimitiveDivisorReport(n, tuple(prims), bool(prims))


def _factor_f(a: int, b: int, n: int) -> Factorization:
    fn = f_fast(a, b, n)
    digits = len(str(fn))
    if digits > DIGIT_LIMIT:
        raise ResourceLimitError(f"F_{n} has {digits} digits, above the {DIGIT_LIMIT}-digit cap")
    return factorize(fn)


def check_tau_prime_power(a: int, b: int, p: int, e: int) -> bool:
    """tau(F_{p^e}) >= 2^e for odd prime p."""
    if a <= 0 or b <= 0:
        raise HypothesisViolationError("coefficients must be positive")
    if p == 2 or not is_prime(p):
        raise HypothesisViolationError("p must be an odd prime")
    if e < 1:
        raise DomainError("e must be positive")
    return _factor_f(a, b, p**e).tau >= 2**e


@dataclass(frozen=True)
class TauBounds:
    """Both lower bounds on tau(F_n) at one index."""

    n: int
    tau_fn: int
    tau_n: int
    omega_n: int
    omega_bound_ok: bool
    tau_bound_ok: bool


def check_tau_bounds(a: int, b: int, n: int) -> TauBounds:
    """Check tau(F_n) against 2^Omega(n) and tau(n).

    Odd n: tau(F_n) >= 2^Omega(n) and tau(F_n) >= tau(n).
    Even n: tau(F_n) >= 2^(Omega(n)-1) and tau(F_n) >= tau(n) - 1.
    The even case loses one step because F_2 = a can equal 1.
    """
    if a <= 0 or b <= 0:
        raise HypothesisViolationError("coefficients must be positive")
    if n < 2:
        raise DomainError("n must be at least 2")
    tau_fn = _factor_f(a, b, n).tau
    nf = factorize(n)
    omega_n, tau_n = nf.big_omega, nf.tau
    if n % 2:
        omega_ok = tau_fn >= 2**omega_n
        tau_ok = tau_fn >= tau_n
    else:
        omega_ok = tau_fn >= 2 ** (omega_n - 1)
        tau_ok = tau_fn >= tau_n - 1
    return TauBounds(n, tau_fn, tau_n, omega_n, omega_ok, tau_ok)
