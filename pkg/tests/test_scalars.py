"""Exact Laurent arithmetic and certified evaluation."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qclassfun import intervals
from qclassfun.errors import DomainError
from qclassfun.scalars import LaurentScalar, q_number, solve_fundamental_q

small_ints = st.integers(min_value=-6, max_value=6)
coeff_maps = st.dictionaries(small_ints, st.integers(min_value=-9, max_value=9), max_size=6)
rational_q = st.fractions(min_value=Fraction(1, 100), max_value=Fraction(1, 1))


def frac_interval(f: Fraction):
    return intervals.make(f)


def test_q_number_zero_is_empty_sum():
    assert q_number(0).is_zero()


def test_q_number_two():
    assert q_number(2) == LaurentScalar({-1: 1, 1: 1})


def test_q_number_four_expands_the_quotient():
    # (q^-4 - q^4)/(q^-1 - q) expanded at n = 4
    assert q_number(4) == LaurentScalar({-3: 1, -1: 1, 1: 1, 3: 1})


def test_q_number_rejects_negative():
    with pytest.raises(DomainError):
        q_number(-1)


@given(st.integers(min_value=0, max_value=64))
def test_q_number_palindromic(n):
    assert q_number(n).is_palindromic()


@given(st.integers(min_value=1, max_value=48))
def test_q_number_recursion(n):
    assert q_number(2) * q_number(n) == q_number(n - 1) + q_number(n + 1)


def test_eval_q_number_examples():
    with intervals.precision(128):
        assert intervals.contains(q_number(2).evaluate(Fraction(1, 2)), Fraction(5, 2))
        assert intervals.contains(q_number(3).evaluate(1), 3)
        # direct evaluation of the sum form at 0.3
        expected = q_number(5).evaluate_fraction(Fraction(3, 10))
        assert expected == Fraction(3, 10) ** -4 + Fraction(3, 10) ** -2 + 1 \
            + Fraction(3, 10) ** 2 + Fraction(3, 10) ** 4
        enclosed = q_number(5).evaluate(Fraction(3, 10))
        assert intervals.contains(enclosed, expected)
        assert intervals.width_at_most(enclosed, Fraction(1, 10**20))


def test_eval_at_one_encloses_n():
    with intervals.precision(128):
        for n in range(65):
            assert intervals.contains(q_number(n).evaluate(1), n)


def test_eval_rejects_zero_enclosure_with_negative_exponents():
    with intervals.precision(64):
        spanning_zero = intervals.from_endpoints(Fraction(-1, 10), Fraction(1, 10))
        with pytest.raises(DomainError):
            q_number(2).evaluate(spanning_zero)
        # pure nonnegative exponents are fine at zero
        assert intervals.contains(LaurentScalar({0: 7}).evaluate(spanning_zero), 7)


@given(coeff_maps, rational_q)
def test_eval_encloses_exact_rational_value(coeffs, q):
    p = LaurentScalar(coeffs)
    with intervals.precision(96):
        assert intervals.contains(p.evaluate(q), p.evaluate_fraction(q))


@given(coeff_maps, rational_q, rational_q, st.integers(min_value=0, max_value=4))
def test_eval_encloses_every_sample_inside_a_wide_enclosure(coeffs, q1, q2, pick):
    p = LaurentScalar(coeffs)
    lo, hi = min(q1, q2), max(q1, q2)
    sample = lo + (hi - lo) * Fraction(pick, 4)
    with intervals.precision(96):
        box = intervals.from_endpoints(lo, hi)
        assert intervals.contains(p.evaluate(box), p.evaluate_fraction(sample))


@given(coeff_maps, coeff_maps, rational_q)
def test_ring_operations_match_fraction_oracle(c1, c2, q):
    p1, p2 = LaurentScalar(c1), LaurentScalar(c2)
    assert (p1 + p2).evaluate_fraction(q) == p1.evaluate_fraction(q) + p2.evaluate_fraction(q)
    assert (p1 - p2).evaluate_fraction(q) == p1.evaluate_fraction(q) - p2.evaluate_fraction(q)
    assert (p1 * p2).evaluate_fraction(q) == p1.evaluate_fraction(q) * p2.evaluate_fraction(q)


def test_canonical_form_drops_zero_coefficients():
    assert LaurentScalar({2: 0, 1: 3}).coeffs == {1: 3}
    assert (LaurentScalar({1: 3}) - LaurentScalar({1: 3})).is_zero()


def test_solve_fundamental_q_examples():
    with intervals.precision(128):
        assert intervals.contains(solve_fundamental_q(2), 1)
        assert intervals.contains(solve_fundamental_q(Fraction(5, 2)), Fraction(1, 2))
        # (3 - sqrt(5))/2 up to enclosure
        root3 = solve_fundamental_q(3)
        assert intervals.contains(
            intervals.from_endpoints("0.3819660112501051", "0.3819660112501052"), root3
        )


@given(st.fractions(min_value=Fraction(2), max_value=Fraction(50)))
def test_solve_fundamental_q_inverts(d):
    with intervals.precision(128):
        q = solve_fundamental_q(d)
        assert intervals.upper(q) <= 1
        assert intervals.lower(q) > 0
        assert intervals.contains(q + 1 / q, d)


def test_solve_fundamental_q_domain():
    with pytest.raises(DomainError):
        solve_fundamental_q(Fraction(19, 10))
