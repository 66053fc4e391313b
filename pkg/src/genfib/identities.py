"""Structural identities: index addition and the Cassini-style determinant.

Every check is exact. Each boolean check has a companion returning both
evaluated sides so a failing instance can be reported with its numbers.
"""

from __future__ import annotations

from .core import SequenceParams, f_fast, g_fast


def invariant_quantity(p: SequenceParams) -> int:
    """D = b*u^2 + a*u*v - v^2, the determinant G_0*G_2 - G_1^2 of the seed window."""
    return p.b * p.u * p.u + p.a * p.u * p.v - p.v * p.v


def addition_sides(p: SequenceParams, m: int, n: int) -> tuple[int, int]:
    """Both sides of G_{m+n+1} = G_{m+1}*F_{n+1} + b*G_m*F_n."""
    lhs = g_fast(p, m + n + 1)
    rhs = g_fast(p, m + 1) * f_fast(p.a, p.b, n + 1) + p.b * g_fast(p, m) * f_fast(
        p.a, p.b, n
    )
    return lhs, rhs


def check_addition(p: SequenceParams, m: int, n: int) -> bool:
    lhs, rhs = addition_sides(p, m, n)
    return lhs == rhs


def determinant_sides(p: SequenceParams, n: int) -> tuple[int, int]:
    """Both sides of G_n*G_{n+2} - G_{n+1}^2 = (-b)^n * D."""
    lhs = g_fast(p, n) * g_fast(p, n + 2) - g_fast(p, n + 1) ** 2
    rhs = (-p.b) ** n * invariant_quantity(p)
    return lhs, rhs


def check_determinant(p: SequenceParams, n: int) -> bool:
    lhs, rhs = determinant_sides(p, n)
    return lhs == rhs
