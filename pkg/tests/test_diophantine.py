"""Solution families of 5x^2 + 4y^2 = z^2, and the two-square machinery.

The brute-force enumerations and decompositions frozen here were produced
independently of the library (plain loops plus a CAS) before being pinned.
"""

from math import gcd, isqrt

import pytest
from hypothesis import given, settings, strategies as st

from genfib import (
    DomainError,
    Family,
    HypothesisViolationError,
    SequenceParams,
    alternating_witnesses,
    brute_force_solutions,
    check_alternating_bisquable,
    completeness_check,
    completeness_report,
    euler_divisor_check,
    factorize,
    family_solution,
    g_prefix,
    is_bisquare,
    is_solution,
    square_invariant_pairs,
    two_square_decomposition,
)
from genfib.diophantine import _assembled_decomposition

BRUTE_20 = [
    (0, 1, 2), (1, 1, 3), (0, 2, 4), (0, 3, 6), (2, 2, 6), (3, 1, 7),
    (0, 4, 8), (3, 3, 9), (0, 5, 10), (0, 6, 12), (4, 4, 12), (0, 7, 14),
    (6, 2, 14), (5, 5, 15), (0, 8, 16), (0, 9, 18), (6, 6, 18), (8, 1, 18),
    (0, 10, 20),
]


def test_family_spot_solutions():
    assert family_solution("F1", 1, 1, 1) == family_solution(Family.F1, 1, 1, 1)
    s = family_solution("F1", 1, 1, 1)
    assert (s.x, s.y, s.z) == (1, 1, 3)
    s = family_solution("F2", 1, 3, 1)
    assert (s.x, s.y, s.z) == (3, 1, 7)
    s = family_solution("F1", 2, 3, 1)
    assert (s.x, s.y, s.z) == (6, 22, 46)
    s = family_solution("F3", 1, 1, 2)
    assert (s.x, s.y, s.z) == (8, 1, 18)
    s = family_solution("F4", 1, 1, 2)
    assert (s.x, s.y, s.z) == (8, -19, 42)
    for s in map(lambda f: family_solution(f, 3, 5, 3), Family):
        assert is_solution(s.x, s.y, s.z), s


def test_family_parameter_gates():
    # the quarter and half divisions in F1/F2 are exact only for odd l, m
    with pytest.raises(HypothesisViolationError):
        family_solution("F1", 1, 1, 2)
    with pytest.raises(HypothesisViolationError):
        family_solution("F2", 1, 2, 1)
    with pytest.raises(HypothesisViolationError):
        family_solution("F3", 1, 2, 4)  # not coprime
    # F3/F4 take any coprime parity mix
    assert is_solution(*_xyz(family_solution("F3", 2, 2, 5)))
    assert is_solution(*_xyz(family_solution("F4", 1, 5, 2)))


def _xyz(s):
    return (s.x, s.y, s.z)


@given(
    st.sampled_from(list(Family)),
    st.integers(1, 50),
    st.integers(1, 99),
    st.integers(1, 99),
)
@settings(max_examples=400)
def test_families_always_solve(fam, k, l, m):
    if gcd(l, m) != 1:
        return
    if fam in (Family.F1, Family.F2) and (l % 2 == 0 or m % 2 == 0):
        return
    s = family_solution(fam, k, l, m)
    assert 5 * s.x * s.x + 4 * s.y * s.y == s.z * s.z


def test_brute_force_oracle():
    assert brute_force_solutions(20) == BRUTE_20
    assert brute_force_solutions(0) == []
    for x, y, z in brute_force_solutions(60):
        assert is_solution(x, y, z) and x >= 0 and y >= 0 and 0 < z <= 60


def test_completeness():
    rep = completeness_report(200, 21)
    assert rep.complete
    assert (rep.total, rep.family_matched, rep.degenerate) == (273, 173, 100)
    assert completeness_check(100, 15)


def test_completeness_detects_gaps():
    # with the parameter cap at 1 the primitive solution (21, 1, 47) from
    # l = 3, m = 7 is out of reach of every family
    rep = completeness_report(50, 1)
    assert not rep.complete and rep.unmatched == ((21, 1, 47),)
    assert is_solution(21, 1, 47)


def test_is_bisquare_small():
    yes = {0, 1, 2, 4, 5, 8, 9, 10, 13, 16, 17, 18, 20, 25, 45, 325}
    no = {3, 6, 7, 11, 12, 14, 15, 19, 21, 22, 23, 24, 33}
    for n in yes:
        assert is_bisquare(n), n
    for n in no:
        assert not is_bisquare(n), n
    with pytest.raises(DomainError):
        is_bisquare(-1)


def test_two_square_decomposition_smallest_first():
    assert two_square_decomposition(0) == (0, 0)
    assert two_square_decomposition(1) == (0, 1)
    assert two_square_decomposition(2) == (1, 1)
    assert two_square_decomposition(3) is None
    assert two_square_decomposition(25) == (0, 5)
    assert two_square_decomposition(45) == (3, 6)
    # 325 = 1+324 = 36+289 = 100+225; the smallest first coordinate wins
    assert two_square_decomposition(325) == (1, 18)


def test_two_square_large_uses_factorization():
    # 1000070001221 = 1000033 * 1000037, both primes = 1 mod 4; the expected
    # pair was found by an independent ascending search
    n = 1000070001221
    assert two_square_decomposition(n) == (281986, 959455)
    assert 281986**2 + 959455**2 == n
    # a prime power of a 3 mod 4 prime above the search threshold
    assert two_square_decomposition(1000003**2) == (0, 1000003)
    assert two_square_decomposition(1000003 * 3) is None


def test_assembly_agrees_with_search():
    # the factorization route must reproduce the ascending search exactly
    for n in range(1, 800):
        expect = two_square_decomposition(n)
        assert _assembled_decomposition(factorize(n)) == expect, n


@given(st.integers(1, 10**6))
@settings(max_examples=150)
def test_assembly_agrees_with_search_sampled(n):
    assert _assembled_decomposition(factorize(n)) == two_square_decomposition(n)


def test_decomposition_round_trip():
    for n in range(2000):
        dec = two_square_decomposition(n)
        assert (dec is not None) == is_bisquare(n)
        if dec is not None:
            r, s = dec
            assert 0 <= r <= s and r * r + s * s == n


def test_euler_divisor_check():
    assert euler_divisor_check(1)
    assert euler_divisor_check(2)
    assert euler_divisor_check(25)
    assert euler_divisor_check(325)  # divisors 1, 5, 13, 25, 65, 325
    with pytest.raises(HypothesisViolationError):
        euler_divisor_check(45)  # 45 = 9 + 36 but shares the factor 3
    with pytest.raises(HypothesisViolationError):
        euler_divisor_check(4)
    with pytest.raises(DomainError):
        euler_divisor_check(0)


def test_square_invariant_pairs():
    pairs = square_invariant_pairs(5, 1, 1)
    assert pairs == [
        (0, 0, 0), (1, 0, 1), (1, 1, 1), (2, 0, 2), (2, 2, 2), (2, 3, 1),
        (3, 0, 3), (3, 3, 3), (4, 0, 4), (4, 4, 4), (5, 0, 5), (5, 5, 5),
    ]
    for u, v, t in square_invariant_pairs(20, 1, 1):
        assert u * u + u * v - v * v == t * t


def test_square_invariant_pairs_includes_sporadics():
    # beyond the diagonal families there are isolated hits like (5, 8)
    pairs = {(u, v) for u, v, _ in square_invariant_pairs(21, 1, 1)}
    assert (2, 3) in pairs and (5, 8) in pairs and (13, 21) in pairs


def test_alternating_bisquable():
    fib = SequenceParams(0, 1, 1, 1)
    assert check_alternating_bisquable(fib, 12, "odd")
    assert not check_alternating_bisquable(fib, 6, "even")  # G_4 = 3
    assert check_alternating_bisquable(SequenceParams(2, 3, 1, 1), 5, "even")


def test_alternating_gate_and_domain():
    # neither D nor -b*D a square: the hypothesis gate rejects
    with pytest.raises(HypothesisViolationError):
        check_alternating_bisquable(SequenceParams(2, 3, 1, 2), 4, "even")
    # negative examined term is outside the two-square domain
    with pytest.raises(DomainError):
        check_alternating_bisquable(SequenceParams(0, -1, 1, 1), 3, "odd")
    with pytest.raises(DomainError):
        check_alternating_bisquable(fib := SequenceParams(0, 1, 1, 1), 0, "odd")
    with pytest.raises(DomainError):
        check_alternating_bisquable(fib, 3, "both")


def test_alternating_witnesses_cross_route():
    p = SequenceParams(0, 1, 1, 1)
    ws = alternating_witnesses(p, 10, "odd")
    vals = g_prefix(p, 19)
    assert [w.n for w in ws] == list(range(1, 20, 2))
    for w in ws:
        assert w.value == vals[w.n]
        # decomposition present iff the classifier says bisquare
        assert (w.decomposition is not None) == is_bisquare(w.value)
        if w.decomposition:
            r, s = w.decomposition
            assert r * r + s * s == w.value
