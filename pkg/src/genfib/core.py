"""Two-term linear recurrences G_n = a*G_{n-1} + b*G_{n-2} over exact integers.

A sequence is determined by its seeds (u, v) = (G_0, G_1) and coefficients
(a, b). The sequence with seeds (0, 1) plays a special role and is written F
throughout. Evaluation is offered both by the direct recurrence (linear time,
the reference oracle) and by fast doubling (logarithmic time).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError


@dataclass(frozen=True)
class SequenceParams:
    """Seeds and coefficients (u, v | a, b) of one sequence."""

    u: int
    v: int
    a: int
    b: int

    def f_params(self) -> "SequenceParams":
        """The companion sequence with seeds (0, 1) and the same coefficients."""
        return SequenceParams(0, 1, self.a, self.b)


@dataclass(frozen=True)
class PairState:
    """A consecutive pair (G_n, G_{n+1}); the carrier of fast-doubling state."""

    index: int
    lo: int
    hi: int

    def advanced(self, a: int, b: int) -> "PairState":
        """One recurrence step: (lo, hi) -> (hi, a*hi + b*lo)."""
        return PairState(self.index + 1, self.hi, a * self.hi + b * self.lo)


def _require_index(n: int) -> None:
    if n < 0:
        raise DomainError(f"index must be non-negative, got {n}")


def is_cquence(p: SequenceParams) -> bool:
    """Pairwise-coprimality gate used by the divisibility lemmas.

    True iff b != 0 and gcd(u,v) = gcd(u,b) = gcd(a,b) = gcd(b,v) = 1, with
    gcd taken on absolute values and gcd(0, x) = |x|.
    """
    if p.b == 0:
        return False
    return (
        gcd(p.u, p.v) == 1
        and gcd(p.u, p.b) == 1
        and gcd(p.a, p.b) == 1
        and gcd(p.b, p.v) == 1
    )


def g_iter(p: SequenceParams, n: int) -> int:
    """G_n by the direct recurrence; the linear-time reference path."""
    _require_index(n)
    if n == 0:
        return p.u
    lo, hi = p.u, p.v
    for _ in range(n - 1):
        lo, hi = hi, p.a * hi + p.b * lo
    return hi


def g_prefix(p: SequenceParams, n_max: int) -> list[int]:
    """[G_0, ..., G_{n_max}] in one linear pass."""
    _require_index(n_max)
    out = [p.u]
    lo, hi = p.u, p.v
    for _ in range(n_max):
        out.append(hi)
        lo, hi = hi, p.a * hi + p.b * lo
    return out


def _f_state(a: int, b: int, n: int) -> PairState:
    # Fast doubling. From (F_k, F_{k+1}):
    #   F_{2k}   = F_k * (2*F_{k+1} - a*F_k)
    #   F_{2k+1} = F_{k+1}^2 + b*F_k^2
    if n == 0:
        return PairState(0, 0, 1)
    s = _f_state(a, b, n >> 1)
    f, g = s.lo, s.hi
    d = f * (2 * g - a * f)
    e = g * g + b * f * f
    if n & 1:
        return PairState(2 * s.index + 1, e, a * e + b * d)
    return PairState(2 * s.index, d, e)


def f_fast(a: int, b: int, n: int) -> int:
    """F_n for seeds (0, 1), in O(log n) doubling steps."""
    _require_index(n)
    return _f_state(a, b, n).lo


def g_fast(p: SequenceParams, n: int) -> int:
    """G_n in O(log n), via F-doubling and the seed split G_n = v*F_n + b*u*F_{n-1}.

    Indices 0 and 1 are returned directly from the seeds, so no F-value at a
    negative index is ever needed.
    """
    _require_index(n)
    if n == 0:
        return p.u
    if n == 1:
        return p.v
    s = _f_state(p.a, p.b, n - 1)  # (F_{n-1}, F_n)
    return p.v * s.hi + p.b * p.u * s.lo
