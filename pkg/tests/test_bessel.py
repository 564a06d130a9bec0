from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shortchords.bessel import (
    IntPolynomial,
    bessel_theta,
    collapse_short_chords,
    expand_singletons,
    h_vector,
    schur_coeffs_via_bessel,
    shift_expand,
    short_chord_distribution,
    short_free_count,
)
from shortchords.matchings import double_factorial, enumerate_matchings, short_mask


def test_theta_examples():
    assert bessel_theta(0) == IntPolynomial((1,))
    assert bessel_theta(2) == IntPolynomial((3, 3, 1))
    assert str(bessel_theta(3)) == "x^3 + 6x^2 + 15x + 15"
    with pytest.raises(ValueError):
        bessel_theta(-1)


def test_theta_recurrence():
    # theta_n = (2n-1) theta_{n-1} + x^2 theta_{n-2}
    for n in range(2, 15):
        a, b = bessel_theta(n - 1).coeffs, bessel_theta(n - 2).coeffs
        rhs = [0] * (n + 1)
        for d, c in enumerate(a):
            rhs[d] += (2 * n - 1) * c
        for d, c in enumerate(b):
            rhs[d + 2] += c
        assert bessel_theta(n).coeffs == tuple(rhs)


def test_shift_examples():
    assert shift_expand(bessel_theta(2), -1).coeffs == (1, 1, 1)
    assert shift_expand(bessel_theta(3), -1) == IntPolynomial((5, 6, 3, 1))
    p = IntPolynomial((4, -2, 7))
    assert shift_expand(p, 0) == p


@given(st.lists(st.integers(-50, 50), max_size=8), st.integers(-5, 5), st.integers(-6, 6))
def test_shift_evaluates_correctly(coeffs, a, x):
    p = IntPolynomial(tuple(coeffs))
    assert shift_expand(p, a)(x) == p(x + a)
    assert shift_expand(shift_expand(p, a), -a) == p


def test_distribution_examples():
    assert short_chord_distribution(0) == (1,)
    assert short_chord_distribution(2) == (1, 1, 1)
    assert short_chord_distribution(3) == (5, 6, 3, 1)


@pytest.mark.parametrize("n", range(8))
def test_bessel_identity(n):
    h = short_chord_distribution(n)
    assert tuple(h_vector(n)) == h
    assert sum(h) == double_factorial(2 * n - 1)


def test_h_closed_form_sum_large():
    for n in range(8, 30):
        assert sum(h_vector(n)) == double_factorial(2 * n - 1)


@pytest.mark.parametrize("n", range(7))
def test_h_counts_short_free_matchings(n):
    h = short_chord_distribution(n)
    for i in range(n + 1):
        assert h[i] == short_free_count(2 * n - i, i)


@pytest.mark.parametrize("n", range(7))
def test_collapse_is_a_bijection(n):
    for i in range(n + 1):
        src = [m for m in enumerate_matchings(2 * n, 0) if bin(short_mask(m)).count("1") == i]
        dst = [collapse_short_chords(m) for m in src]
        assert len(set(dst)) == len(dst)
        assert all(m.n == 2 * n - i and m.f == i and not short_mask(m) for m in dst)
        assert set(dst) == {m for m in enumerate_matchings(2 * n - i, i) if not short_mask(m)}
        assert all(expand_singletons(c) == m for c, m in zip(dst, src))


def test_coefficient_examples():
    assert schur_coeffs_via_bessel(6, 0) == (5, 1, 0, 1)
    assert schur_coeffs_via_bessel(3, 1) == (1, 1)
    assert schur_coeffs_via_bessel(0, 0) == (1,)
    with pytest.raises(ValueError):
        schur_coeffs_via_bessel(5, 0)


@pytest.mark.parametrize("n", range(13))
def test_coefficients_match_counts(n):
    for f in range(n % 2, n + 1, 2):
        direct = tuple(short_free_count(n - 2 * k, f) for k in range((n - f) // 2 + 1))
        assert schur_coeffs_via_bessel(n, f) == direct


def test_polynomial_formatting():
    assert str(IntPolynomial(())) == "0"
    assert str(IntPolynomial((-1, 0, -3))) == "-3x^2 - 1"
    assert str(IntPolynomial((0, 1))) == "x"
    assert IntPolynomial((1, 2, 0, 0)).degree == 1
    assert IntPolynomial((0, comb(40, 20))).coeffs[1] == comb(40, 20)
