import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agcoh.exact import (CyclotomicPoly, LaurentPoly, bernoulli, cyclotomic,
                         euler_phi, negate_cyclotomic_index, nu_character,
                         poly_divmod, poly_mul, zeta_negative)


def bernoulli_by_recurrence(n: int) -> Fraction:
    """Independent oracle: solve sum_{k<=m} C(m+1,k) B_k = 0 from scratch."""
    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(math.comb(m + 1, k) * table[k] for k in range(m))
        table.append(-acc / (m + 1))
    return table[n]


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(2) == bernoulli_by_recurrence(2) == Fraction(1, 6)
    assert bernoulli(12) == bernoulli_by_recurrence(12) == Fraction(-691, 2730)


def test_bernoulli_odd_vanish_and_recurrence():
    for n in range(3, 31, 2):
        assert bernoulli(n) == 0
    for n in range(1, 31):
        total = sum(math.comb(n + 1, k) * bernoulli(k) for k in range(n + 1))
        assert total == 0


def test_zeta_negative_examples():
    assert zeta_negative(1) == Fraction(-1, 12)
    assert zeta_negative(2) == Fraction(1, 120)
    assert zeta_negative(3) == Fraction(-1, 252)
    with pytest.raises(ValueError):
        zeta_negative(0)


def test_cyclotomic_examples():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(4).coeffs == (1, 0, 1)
    # divide x^12 - 1 by the proper divisors' polynomials by hand
    num = tuple([-1] + [0] * 11 + [1])
    for e in (1, 2, 3, 4, 6):
        num, rem = poly_divmod(num, cyclotomic(e).coeffs)
        assert not rem
    assert cyclotomic(12).coeffs == num == (1, 0, -1, 0, 1)


def test_cyclotomic_product_identity():
    for d in range(1, 201):
        prod = (1,)
        for e in range(1, d + 1):
            if d % e == 0:
                prod = poly_mul(prod, cyclotomic(e).coeffs)
        expected = tuple([-1] + [0] * (d - 1) + [1])
        assert prod == expected, d


def test_cyclotomic_degree_is_phi():
    for d in range(1, 60):
        assert cyclotomic(d).degree == euler_phi(d)
        assert isinstance(cyclotomic(d), CyclotomicPoly)


def test_negate_index_rule_and_involution():
    assert negate_cyclotomic_index(1) == 2
    assert negate_cyclotomic_index(3) == 6
    assert negate_cyclotomic_index(4) == 4
    for d in range(1, 300):
        assert negate_cyclotomic_index(negate_cyclotomic_index(d)) == d


def test_negation_actually_negates_roots():
    # Phi_{d'}(x) must equal +-Phi_d(-x) as polynomials
    for d in range(1, 80):
        dd = negate_cyclotomic_index(d)
        flipped = tuple(c if i % 2 == 0 else -c
                        for i, c in enumerate(cyclotomic(d).coeffs))
        if flipped[-1] < 0:
            flipped = tuple(-c for c in flipped)
        assert flipped == cyclotomic(dd).coeffs, d


# -- Laurent polynomials -------------------------------------------------------

def _lp(nvars):
    exps = st.tuples(*([st.integers(-4, 4)] * nvars))
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.dictionaries(exps, coeff, max_size=5).map(
        lambda d: LaurentPoly(nvars, d))


@settings(max_examples=60, deadline=None)
@given(_lp(1), _lp(1), _lp(1))
def test_laurent_ring_axioms_one_var(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a + b == b + a


@settings(max_examples=40, deadline=None)
@given(_lp(2), _lp(2), _lp(2))
def test_laurent_ring_axioms_two_var(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


def test_laurent_basics():
    t = LaurentPoly.t_power
    p = (t(1) + t(-1)) * (t(2) + t(-2))
    assert p.coeff_list(-3, 3) == [Fraction(x) for x in (1, 0, 1, 0, 1, 0, 1)]
    assert p.is_symmetric()
    assert p.evaluate_all_ones() == 4
    assert (p - p).is_zero()
    with pytest.raises(ValueError):
        LaurentPoly(1, {(1,): 1}) + LaurentPoly(2, {(1, 0): 1})
    doubled = p.scale_exponents(2)
    assert doubled.scale_exponents(1, 2) == p
    with pytest.raises(ValueError):
        (t(1) + t(2)).scale_exponents(1, 2)


def test_nu_character():
    assert nu_character(1) == LaurentPoly.one(1)
    assert nu_character(4).coeff_list(-3, 3) == \
        [Fraction(x) for x in (1, 0, 1, 0, 1, 0, 1)]
    assert nu_character(5).evaluate_all_ones() == 5
