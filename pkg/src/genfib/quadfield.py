"""Exact arithmetic in Z[w] with w^2 = a*w + b, and closed-form evaluation.

The characteristic roots of x^2 - a*x - b are alpha = w and beta = a - w.
Keeping w symbolic makes every intermediate quantity an exact rational pair,
so closed-form values can be compared bit for bit against the recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import SequenceParams, _require_index
from .errors import (
    DegenerateDiscriminantError,
    NondegenerateDiscriminantError,
    ParameterMismatchError,
)


def discriminant(a: int, b: int) -> int:
    """a^2 + 4*b; zero exactly when the characteristic roots coincide."""
    return a * a + 4 * b


@dataclass(frozen=True)
class QuadInt:
    """x + y*w in the ring defined by w^2 = a*w + b, with rational coefficients."""

    x: Fraction
    y: Fraction
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @classmethod
    def one(cls, a: int, b: int) -> "QuadInt":
        return cls(Fraction(1), Fraction(0), a, b)

    @classmethod
    def omega(cls, a: int, b: int) -> "QuadInt":
        return cls(Fraction(0), Fraction(1), a, b)

    def _check(self, other: "QuadInt") -> None:
        if self.a != other.a or self.b != other.b:
            raise ParameterMismatchError(
                f"operands live in different rings: (a,b)=({self.a},{self.b}) "
                f"vs ({other.a},{other.b})"
            )

    def __add__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.x + other.x, self.y + other.y, self.a, self.b)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        self._check(other)
        return QuadInt(self.x - other.x, self.y - other.y, self.a, self.b)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        return quad_mul(self, other)

    def scaled(self, c) -> "QuadInt":
        return QuadInt(self.x * c, self.y * c, self.a, self.b)


def quad_mul(s: QuadInt, t: QuadInt) -> QuadInt:
    """Product in Z[w]; reduces w^2 via w^2 = a*w + b."""
    s._check(t)
    # (x1 + y1 w)(x2 + y2 w) = x1 x2 + y1 y2 b + (x1 y2 + x2 y1 + y1 y2 a) w
    x = s.x * t.x + s.y * t.y * s.b
    y = s.x * t.y + t.x * s.y + s.y * t.y * s.a
    return QuadInt(x, y, s.a, s.b)


def quad_pow(s: QuadInt, n: int) -> QuadInt:
    """s**n by binary powering; n must be non-negative."""
    _require_index(n)
    result = QuadInt.one(s.a, s.b)
    base = s
    while n:
        if n & 1:
            result = quad_mul(result, base)
        base = quad_mul(base, base)
        n >>= 1
    return result


def binet_eval(p: SequenceParams, n: int) -> int:
    """Closed-form G_n for distinct characteristic roots, evaluated exactly.

    With alpha = w and beta = a - w,

        G_n = [v*(alpha^n - beta^n) + u*(alpha*beta^n - alpha^n*beta)] / (alpha - beta).

    The numerator is an integer multiple of alpha - beta = 2w - a, so the
    quotient is read off the w-coefficients. The u-term is oriented so that
    n = 0 yields +u, which the recurrence demands.
    """
    _require_index(n)
    a, b = p.a, p.b
    if discriminant(a, b) == 0:
        raise DegenerateDiscriminantError(
            f"(a,b)=({a},{b}) has a repeated root; use binet_repeated_root"
        )
    alpha = QuadInt.omega(a, b)
    beta = QuadInt(Fraction(a), Fraction(-1), a, b)
    an = quad_pow(alpha, n)
    bn = quad_pow(beta, n)
    num = (an - bn).scaled(p.v) + (quad_mul(alpha, bn) - quad_mul(an, beta)).scaled(p.u)
    q = num.y / 2  # (alpha - beta) has w-coefficient 2
    assert q.denominator == 1 and num.x == -a * q, "numerator not a multiple of alpha - beta"
    return int(q)


def binet_repeated_root(p: SequenceParams, n: int) -> Fraction:
    """Closed-form G_n when the discriminant vanishes (both roots equal a/2).

    Returns (v*n + u*alpha*(1 - n)) * alpha^(n-1) as an exact rational; the
    value is an integer whenever the parameters are. n = 0 is returned from
    the seed directly, which also covers alpha = 0.
    """
    _require_index(n)
    if discriminant(p.a, p.b) != 0:
        raise NondegenerateDiscriminantError(
            f"(a,b)=({p.a},{p.b}) has distinct roots; use binet_eval"
        )
    if n == 0:
        return Fraction(p.u)
    alpha = Fraction(p.a, 2)
    return (p.v * n + p.u * alpha * (1 - n)) * alpha ** (n - 1)
