"""Core evaluation: the fast path must agree with a reference recurrence.

The reference below is written independently of the library so the two
implementations cannot share a bug.
"""

import pytest
from hypothesis import given, settings, strategies as st

from genfib import DomainError, SequenceParams, f_fast, g_fast, g_iter, g_prefix, is_cquence
from genfib.core import PairState, _f_state


def reference(u, v, a, b, n):
    if n == 0:
        return u
    lo, hi = u, v
    for _ in range(n - 1):
        lo, hi = hi, a * hi + b * lo
    return hi


FIB = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377, 610, 987, 1597, 2584, 4181, 6765]
LUCAS = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123]
PELL = [0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378, 5741, 13860]
JACOBSTHAL = [0, 1, 1, 3, 5, 11, 21, 43, 85, 171, 341]
G_3_7_2_5 = [3, 7, 29, 93, 331, 1127, 3909]


def test_known_sequences():
    fib = SequenceParams(0, 1, 1, 1)
    assert [g_iter(fib, n) for n in range(21)] == FIB
    assert [g_fast(fib, n) for n in range(21)] == FIB
    assert [g_iter(SequenceParams(2, 1, 1, 1), n) for n in range(11)] == LUCAS
    assert [g_fast(SequenceParams(0, 1, 2, 1), n) for n in range(13)] == PELL
    assert [g_fast(SequenceParams(0, 1, 1, 2), n) for n in range(11)] == JACOBSTHAL
    assert [g_fast(SequenceParams(3, 7, 2, 5), n) for n in range(7)] == G_3_7_2_5


def test_large_index_values():
    assert g_fast(SequenceParams(0, 1, 1, 1), 50) == 12586269025
    assert g_fast(SequenceParams(0, 1, 1, 1), 100) == 354224848179261915075
    assert g_fast(SequenceParams(2, -7, 3, -1), 17) == -44276827


def test_g_prefix_matches_pointwise():
    p = SequenceParams(2, -3, -1, 4)
    assert g_prefix(p, 25) == [g_iter(p, n) for n in range(26)]
    assert g_prefix(p, 0) == [2]


params_st = st.tuples(
    st.integers(-10, 10), st.integers(-10, 10), st.integers(-10, 10), st.integers(-10, 10)
)


@given(params_st, st.integers(0, 200))
@settings(max_examples=300)
def test_fast_agrees_with_reference(quad, n):
    u, v, a, b = quad
    assert g_fast(SequenceParams(u, v, a, b), n) == reference(u, v, a, b, n)


@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(0, 120))
@settings(max_examples=200)
def test_f_fast_is_zero_one_seeded(a, b, n):
    assert f_fast(a, b, n) == reference(0, 1, a, b, n)


def test_degenerate_coefficients():
    # a = b = 0 collapses after the seeds; doubling must not choke on it
    p = SequenceParams(5, 7, 0, 0)
    assert [g_fast(p, n) for n in range(6)] == [5, 7, 0, 0, 0, 0]
    assert [g_fast(SequenceParams(4, 9, 0, 3), n) for n in range(6)] == [4, 9, 12, 27, 36, 81]


def test_negative_index_rejected():
    p = SequenceParams(0, 1, 1, 1)
    for fn in (lambda: g_iter(p, -1), lambda: g_fast(p, -3), lambda: f_fast(1, 1, -1),
               lambda: g_prefix(p, -2)):
        with pytest.raises(DomainError):
            fn()


def test_pair_state_advance():
    s = PairState(0, 0, 1)
    s = s.advanced(1, 1).advanced(1, 1).advanced(1, 1)
    assert (s.index, s.lo, s.hi) == (3, 2, 3)


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(0, 300))
@settings(max_examples=150)
def test_f_state_carries_consecutive_pair(a, b, n):
    s = _f_state(a, b, n)
    assert s.index == n
    assert s.lo == reference(0, 1, a, b, n)
    assert s.hi == reference(0, 1, a, b, n + 1)


def test_is_cquence():
    assert is_cquence(SequenceParams(0, 1, 1, 1))
    assert is_cquence(SequenceParams(2, 3, 1, 5))
    assert is_cquence(SequenceParams(0, 1, 2, 1))
    # gcd(0, b) = b, so the (0, 1) seeds pass only with b = 1
    assert not is_cquence(SequenceParams(0, 1, 1, 2))
    assert not is_cquence(SequenceParams(2, 4, 1, 1))   # gcd(u, v) = 2
    assert not is_cquence(SequenceParams(1, 1, 2, 4))   # gcd(a, b) = 2
    assert not is_cquence(SequenceParams(1, 3, 1, 6))   # gcd(b, v) = 3
    assert not is_cquence(SequenceParams(1, 1, 1, 0))   # b = 0 excluded outright


def test_f_params():
    assert SequenceParams(4, 9, 2, 3).f_params() == SequenceParams(0, 1, 2, 3)
