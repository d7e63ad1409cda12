import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agcoh import tautring as tr
from agcoh.exact import double_factorial_odd, strict_partition_count


def test_rewrite_examples():
    assert dict(tr.monomial(2, (2, 0)).items()) == {0b10: Fraction(2)}
    assert tr.monomial(2, (0, 2)).is_zero()
    assert tr.monomial(2, (2, 1)).is_zero()


def test_multiply_examples():
    assert tr.u(3, 1) * tr.u(3, 1) == tr.monomial(3, (2, 0, 0))
    x = tr.u(4, 2) + 3 * tr.u(4, 3) * tr.u(4, 1)
    assert tr.one(4) * x == x
    assert (tr.u(2, 1) * (tr.u(2, 1) * tr.u(2, 2))).is_zero()
    with pytest.raises(tr.GenusMismatchError):
        tr.u(2, 1) * tr.u(3, 1)


def test_poincare_polynomial():
    p1 = tr.poincare_polynomial(1)
    assert p1.coeff_list(0, 2) == [Fraction(1), Fraction(0), Fraction(1)]
    p3 = tr.poincare_polynomial(3)
    assert p3.coeff_list(0, 12) == [Fraction(x) for x in
                                    (1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1, 0, 1)]
    for g in range(1, 13):
        assert tr.poincare_polynomial(g).evaluate_all_ones() == 2 ** g


def test_graded_dimensions_are_strict_partition_counts():
    for g in range(1, 9):
        p = tr.poincare_polynomial(g)
        for k in range(0, g * (g + 1) // 2 + 1):
            assert p.coeff(2 * k) == strict_partition_count(k, g)
            assert tr.graded_dimension(g, 2 * k) == strict_partition_count(k, g)


def test_socle_pairing_examples():
    assert tr.socle_pairing(tr.u(2, 1), tr.u(2, 1) * tr.u(2, 2)) == 0
    assert tr.socle_pairing(tr.u(2, 1), tr.u(2, 2)) == 1
    for g in (1, 2, 3, 5):
        assert tr.socle_pairing(tr.one(g), tr.socle(g)) == 1
    assert tr.socle_pairing(tr.u(2, 1), tr.monomial(2, (2, 0))) == 2


def test_normal_form_linearity_rank_certification():
    # normal_form has rank 2^g on the span of all monomials of degree
    # <= g(g+1), certifying confluence of the rewrite system
    for g in range(1, 7):
        n = g * (g + 1) // 2
        rows = []

        def gen(i, rem, acc):
            if i == g:
                rows.append(tuple(acc))
                return
            for k in range(0, rem // (i + 1) + 1):
                acc.append(k)
                gen(i + 1, rem - k * (i + 1), acc)
                acc.pop()

        gen(0, n, [])
        dim = 1 << g
        mat = [[tr.normal_form(g, {e: 1}).coeff(m) for m in range(dim)]
               for e in rows]
        assert tr.matrix_rank(mat) == dim


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 4), st.data())
def test_normal_form_is_linear(g, data):
    exps = st.tuples(*([st.integers(0, 3)] * g))
    coeff = st.fractions(min_value=-4, max_value=4, max_denominator=4)
    e1 = data.draw(st.dictionaries(exps, coeff, max_size=3))
    e2 = data.draw(st.dictionaries(exps, coeff, max_size=3))
    merged = dict(e1)
    for k, v in e2.items():
        merged[k] = merged.get(k, Fraction(0)) + v
    assert tr.normal_form(g, merged) == \
        tr.normal_form(g, e1) + tr.normal_form(g, e2)


def test_pairing_matrices_nonsingular():
    for g in range(1, 7):
        top = g * (g + 1)
        for deg in range(0, top + 1, 2):
            m = tr.pairing_matrix(g, deg)
            assert len(m) == len(m[0])
            assert tr.matrix_rank(m) == len(m)


def test_duality_shape():
    # pairing of complementary square-free monomials never vanishes
    for g in range(1, 8):
        full = (1 << g) - 1
        for mask in range(1 << g):
            a = tr.RingElement(g, {mask: Fraction(1)})
            b = tr.RingElement(g, {full ^ mask: Fraction(1)})
            assert tr.socle_pairing(a, b) != 0, (g, mask)


def test_top_power_identity():
    for g in range(1, 7):
        n = g * (g + 1) // 2
        got = tr.monomial(g, (n,) + (0,) * (g - 1)).coeff((1 << g) - 1)
        expected = Fraction(math.factorial(n), double_factorial_odd(g))
        assert got == expected == tr.top_power_coefficient(g)


def test_quotient_by_top():
    for g in range(2, 7):
        corr = tr.quotient_by_top(g)
        assert len(corr) == 2 ** (g - 1)
        assert all(corr[m] == m for m in corr)
    # relation u_1^2 = 0 in the quotient image of g=2
    proj = {m: c for m, c in tr.monomial(2, (2, 0)).items() if not m & 0b10}
    assert proj == {}  # u_1^2 = 2 u_2 dies when u_2 is set to zero
    assert tr.monomial(1, (2,)).is_zero()
