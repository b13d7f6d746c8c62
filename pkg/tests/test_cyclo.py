import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gghecke.cyclo import CycloNum, cyclotomic_poly, field, totient, zeta_pow

from conftest import cyclo_nums, nonzero_cyclo

RS = range(1, 9)


def test_totient_small():
    assert [totient(r) for r in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


@pytest.mark.parametrize("r", range(1, 13))
def test_cyclotomic_roots_numerically(r):
    poly = cyclotomic_poly(r)
    assert len(poly) == totient(r) + 1
    z = cmath.exp(2j * cmath.pi / r)
    assert abs(sum(c * z ** k for k, c in enumerate(poly))) < 1e-9


def test_known_identities():
    assert zeta_pow(4, 1) ** 2 == -1
    assert zeta_pow(3, 1) + zeta_pow(3, 2) == -1
    assert zeta_pow(6, 3) == -1
    assert zeta_pow(5, 5) == 1


@pytest.mark.parametrize("r", RS)
def test_sum_of_roots_of_unity(r):
    F = field(r)
    total = sum((F.zeta(e) for e in range(r)), F.zero)
    assert total == (1 if r == 1 else 0)


@pytest.mark.parametrize("r", RS)
def test_zeta_has_order_r(r):
    F = field(r)
    assert F.zeta(r) == 1
    assert all(F.zeta(e) != 1 for e in range(1, r))
    assert F.zeta(-1) * F.zeta(1) == 1


@pytest.mark.parametrize("r", RS)
@settings(max_examples=1000)
@given(data=st.data())
def test_field_axioms(r, data):
    a, b, c = (data.draw(cyclo_nums(r)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@pytest.mark.parametrize("r", [1, 3, 5, 8])
@given(data=st.data())
def test_parse_str_roundtrip(r, data):
    a = data.draw(cyclo_nums(r))
    assert CycloNum.parse(r, str(a)) == a


def test_parse_forms():
    assert CycloNum.parse(3, "1/2 - z^2") == Fraction(3, 2) + zeta_pow(3, 1)
    assert CycloNum.parse(4, "z^-1") == -zeta_pow(4, 1)
    assert CycloNum.parse(1, "-7/3") == Fraction(-7, 3)
    with pytest.raises(ValueError):
        CycloNum.parse(3, "x+1")


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        field(5).zero.inverse()


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        zeta_pow(3, 1) + zeta_pow(4, 1)


@given(a=nonzero_cyclo(7), e=st.integers(-4, 4))
def test_powers(a, e):
    assert a ** e * a ** (-e) == 1


def test_rational_hash_matches_fraction():
    x = field(5).const(Fraction(2, 3))
    assert hash(x) == hash(Fraction(2, 3))
    assert x == Fraction(2, 3)
    assert {x: 1}[Fraction(2, 3)] == 1


@pytest.mark.parametrize("r", [3, 5, 8])
@given(data=st.data())
def test_complex_embedding_is_a_homomorphism(r, data):
    a, b = data.draw(cyclo_nums(r)), data.draw(cyclo_nums(r))
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-6
