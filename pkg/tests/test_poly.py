import random

import pytest
from hypothesis import given, settings, strategies as st

from trigonal.errors import DivisionByZero, FieldMismatch, FieldTooLarge, NotDivisible, RationalFieldUnsupported
from trigonal.field import QQ, PrimeField
from trigonal.poly import (Poly, lagrange_interpolate, poly_add, poly_divrem, poly_eval, poly_exact_div, poly_gcd,
                           poly_invmod, poly_mul, poly_roots_small_field, poly_scale, poly_xgcd)

F7 = PrimeField(7)
F101 = PrimeField(101)
F10007 = PrimeField(10007)


def P(field, *coeffs):
    return Poly(field, coeffs)


def test_product_of_conjugates():
    assert poly_mul(P(F7, 1, 1), P(F7, -1, 1)) == P(F7, 6, 0, 1)


def test_scale_by_zero():
    assert poly_scale(0, P(F7, 1, 2, 3)).is_zero()


def test_cancellation_updates_degree():
    s = poly_add(P(F7, 1, 0, 1), P(F7, 6, 0, 6))
    assert s.is_zero() and s.degree == -1


def test_divrem_examples():
    q, r = poly_divrem(P(F7, -1, 0, 0, 1), P(F7, -1, 1))
    assert q == P(F7, 1, 1, 1) and r.is_zero()
    q, r = poly_divrem(P(F7, 0, 1), P(F7, 0, 0, 1))
    assert q.is_zero() and r == P(F7, 0, 1)


def test_divide_by_zero():
    with pytest.raises(DivisionByZero):
        poly_divrem(P(F7, 1), Poly.zero(F7))


def test_exact_division():
    assert poly_exact_div(P(F7, -1, 0, 1), P(F7, -1, 1)) == P(F7, 1, 1)
    assert poly_exact_div(Poly.zero(F7), P(F7, 3, 1)).is_zero()
    with pytest.raises(NotDivisible):
        poly_exact_div(P(F7, 1, 0, 1), P(F7, -1, 1))


def test_evaluation():
    assert poly_eval(P(F7, 1, 0, 1), 2) == F7(5)
    assert poly_eval(Poly.zero(F7), 3) == F7(0)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        P(F7, 1) + P(F101, 1)


def test_roots_examples():
    assert [r.value for r in poly_roots_small_field(P(F7, -1, 0, 1))] == [1, 6]
    assert poly_roots_small_field(P(F7, 1, 0, 1)) == []


def test_roots_with_multiplicity():
    f = Poly.from_roots(F101, [3, 3, 7, 50])
    assert [r.value for r in poly_roots_small_field(f)] == [3, 3, 7, 50]


def test_root_finding_refusals():
    with pytest.raises(FieldTooLarge):
        poly_roots_small_field(P(PrimeField(65537), 1, 1))
    with pytest.raises(RationalFieldUnsupported):
        poly_roots_small_field(P(QQ, 1, 1))


def test_random_divrem_round_trip_1000():
    rng = random.Random(1)
    for _ in range(1000):
        f = Poly(F10007, [rng.randrange(10007) for _ in range(rng.randint(0, 12))])
        g = Poly(F10007, [rng.randrange(10007) for _ in range(rng.randint(1, 8))])
        if g.is_zero():
            continue
        q, r = f.divmod(g)
        assert q * g + r == f
        assert r.degree < g.degree


def test_random_eval_matches_power_sum():
    rng = random.Random(2)
    for _ in range(200):
        coeffs = [rng.randrange(10007) for _ in range(rng.randint(0, 10))]
        a = rng.randrange(10007)
        naive = sum(c * pow(a, i, 10007) for i, c in enumerate(coeffs)) % 10007
        assert Poly(F10007, coeffs)(a).value == naive


coeff_lists = st.lists(st.integers(0, 100), min_size=0, max_size=8)


@settings(max_examples=200)
@given(coeff_lists, coeff_lists)
def test_degree_additive(a, b):
    f, g = Poly(F101, a), Poly(F101, b)
    if f.is_zero() or g.is_zero():
        assert (f * g).is_zero()
    else:
        assert (f * g).degree == f.degree + g.degree


@settings(max_examples=200)
@given(coeff_lists)
def test_roots_are_roots_and_deflation_is_rootless(c):
    f = Poly(F101, c)
    if f.is_zero():
        return
    roots = poly_roots_small_field(f)
    rest = f
    for r in roots:
        assert f(r) == 0
        rest = rest.exact_div(Poly.from_roots(F101, [r]))
    assert poly_roots_small_field(rest) == []


@settings(max_examples=100)
@given(st.lists(st.fractions(max_denominator=9), min_size=1, max_size=6),
       st.lists(st.fractions(max_denominator=9), min_size=1, max_size=4))
def test_rational_divrem(a, b):
    f, g = Poly(QQ, a), Poly(QQ, b)
    if g.is_zero():
        return
    q, r = f.divmod(g)
    assert q * g + r == f


def test_gcd_and_inverse():
    a = Poly.from_roots(F101, [1, 2, 3])
    b = Poly.from_roots(F101, [2, 3, 4])
    assert poly_gcd(a, b) == Poly.from_roots(F101, [2, 3])
    d, s, t = poly_xgcd(a, b)
    assert s * a + t * b == d
    m = Poly.from_roots(F101, [5, 6])
    assert (poly_invmod(a, m) * a) % m == Poly.one(F101)
    with pytest.raises(DivisionByZero):
        poly_invmod(a, Poly.from_roots(F101, [1]))


def test_taylor_shift_and_interpolation():
    f = P(F101, 3, 0, 2, 1)
    shifted = f.taylor_shift(5)
    for t in range(10):
        assert shifted(t) == f(t + 5)
    g = lagrange_interpolate(QQ, [0, 1, 2], [1, 3, 7])
    assert g == Poly(QQ, [1, 1, 1])


def test_serialisation_strings():
    assert Poly(QQ, ["1/2", 0, 3]).to_strings() == ["1/2", "0", "3"]
