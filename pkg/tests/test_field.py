from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from tracegate.arith import poly as P
from tracegate.errors import DivisionByZero, FieldMismatch, InputError, NonMonic, NotCertified
from tracegate.field import CERTIFIED, USER_ASSERTED, NumberField, degree_pattern_sieve

from .oracle import element_matrix

SEXTIC = [1, 0, 5, 0, 1, 0, 1]
coords = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=6, max_size=6)


@pytest.fixture(scope="module")
def sextic():
    return NumberField(SEXTIC)


def test_certificates():
    assert NumberField([-1, -1, 0, 1]).certificate == CERTIFIED
    with pytest.raises(NotCertified):
        NumberField([4, 0, 0, 0, 1])  # x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
    F = NumberField([4, 0, 0, 0, 1], assert_irreducible=True)
    assert F.certificate == USER_ASSERTED
    with pytest.raises(NonMonic):
        NumberField([1, 0, 2])
    with pytest.raises(InputError):
        NumberField([1, 2, 1], assert_irreducible=True)  # repeated root


def test_sieve_patterns():
    ok, patterns = degree_pattern_sieve([1, 0, 5, 0, 1, 0, 1])
    assert ok
    assert all(sum(p) == 6 for p in patterns.values())
    ok, _ = degree_pattern_sieve([1, 0, 1, 0, 1])  # (x^2+x+1)(x^2-x+1)
    assert not ok


def test_example_beta(sextic):
    beta = sextic([Fraction(c, 4) for c in (-1, -1, 2, 2, 1, 1)])
    assert beta.trace() == -7
    assert beta.is_integral()
    assert beta.min_poly()[-1] == 1


@settings(max_examples=40, deadline=None)
@given(coords)
def test_trace_norm_against_companion_matrix(c):
    F = NumberField(SEXTIC)
    a = F(c)
    m = element_matrix(SEXTIC, c)
    assert a.trace() == m.trace()
    assert a.norm() == m.det()


@settings(max_examples=40, deadline=None)
@given(coords, coords)
def test_field_axioms(c1, c2):
    F = NumberField(SEXTIC)
    a, b = F(c1), F(c2)
    assert (a * b).trace() == (b * a).trace()
    assert (a + b) * a == a * a + b * a
    if b:
        assert (a / b) * b == a
        assert (b * b.inverse()) == F.one
    assert (a * b).norm() == a.norm() * b.norm()


def test_min_poly_and_char_poly(sextic):
    theta = sextic.gen
    assert [int(c) for c in theta.min_poly()] == SEXTIC
    sq = theta * theta
    assert [int(c) for c in sq.min_poly()] == [1, 5, 1, 1]  # theta^2 is a root of y^3 + y^2 + 5y + 1
    assert sq.char_poly() == P.mul(sq.min_poly(), sq.min_poly())
    assert sextic([Fraction(3, 2)]).min_poly() == [Fraction(-3, 2), 1]
    y = sympy.Symbol("y")
    expected = sympy.Poly((y - sympy.Rational(3, 2)) ** 6, y).all_coeffs()[::-1]
    assert sextic([Fraction(3, 2)]).char_poly() == [Fraction(int(c.p), int(c.q)) for c in expected]


def test_errors(sextic):
    with pytest.raises(DivisionByZero):
        sextic.zero.inverse()
    other = NumberField([-1, -1, 1])
    with pytest.raises(FieldMismatch):
        sextic.gen + other.gen
    with pytest.raises(DivisionByZero):
        sextic.gen / 0


def test_power_sums():
    F = NumberField([-1, -1, 0, 1])
    # Newton sums of x^3 - x - 1: p0..p4 = 3, 0, 2, 3, 2
    assert F.power_sum_traces(4) == [3, 0, 2, 3, 2]
    for k, s in enumerate(F.power_sum_traces(8)):
        assert (F.gen**k).trace() == s


def test_reduce_high_powers():
    F = NumberField([-2, 0, 1])
    assert F.from_poly([0, 0, 0, 0, 0, 0, 0, 1]).coords == (0, 8)
