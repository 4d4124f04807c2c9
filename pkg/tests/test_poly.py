from fractions import Fraction

import sympy
from hypothesis import given, strategies as st

from tracegate.arith import poly as P

x = sympy.symbols("x")
int_polys = st.lists(st.integers(-20, 20), min_size=1, max_size=7).map(P.strip)
monic_polys = st.lists(st.integers(-20, 20), min_size=1, max_size=6).map(lambda c: c + [1])


def to_sympy(f):
    return sympy.Poly(list(reversed(f)) or [0], x)


@given(int_polys, monic_polys)
def test_divmod_reconstructs(f, g):
    q, r = P.divmod_q(f, g)
    assert P.add(P.mul(q, g), r) == P.strip(f)
    assert P.degree(r) < P.degree(g)


def sylvester_det(f, g):
    n, m = len(f) - 1, len(g) - 1
    rows = []
    for i in range(m):
        rows.append([0] * i + list(reversed(f)) + [0] * (m - 1 - i))
    for i in range(n):
        rows.append([0] * i + list(reversed(g)) + [0] * (n - 1 - i))
    return sympy.Matrix(rows).det()


@given(monic_polys, monic_polys)
def test_resultant_is_sylvester_determinant(f, g):
    # sympy.resultant disagrees in sign with det(Sylvester) when deg f * deg g is odd
    if len(f) < 2 or len(g) < 2:
        return
    assert P.resultant(f, g) == sylvester_det(f, g)


@given(monic_polys)
def test_discriminant_matches_sympy(f):
    if len(f) < 3:
        return
    assert P.discriminant(f) == sympy.discriminant(to_sympy(f))


def test_discriminant_examples():
    assert P.discriminant([-1, -1, 0, 1]) == -23
    assert P.discriminant([1, 0, 5, 0, 1, 0, 1]) == -173056 * 64
    assert P.resultant([1, 0, 1], [0, 2]) == 4


@given(int_polys, int_polys)
def test_gcd_divides(f, g):
    if not f and not g:
        return
    h = P.gcd_q(f, g)
    for a in (f, g):
        if a:
            assert not P.rem(a, h)


def test_fraction_division():
    q, r = P.divmod_q([Fraction(1, 2), 0, 3], [-2, 1])
    assert r == [Fraction(25, 2)]
    assert q == [6, 3]
    q, r = P.divmod_q([Fraction(1, 2), 0, 3], [1, -2])
    assert q == [Fraction(-3, 4), Fraction(-3, 2)] and r == [Fraction(5, 4)]


def test_to_str():
    assert P.to_str([-1, -1, 1]) == "x^2 - x - 1"
    assert P.to_str([1, 0, 5, 0, 1, 0, 1]) == "x^6 + x^4 + 5*x^2 + 1"
    assert P.to_str([]) == "0"
    assert P.to_str([0, Fraction(-1, 2)], "t") == "-1/2*t"


@given(int_polys, int_polys, st.integers(-5, 5))
def test_evaluate_homomorphism(f, g, a):
    assert P.evaluate(P.mul(f, g), a) == P.evaluate(f, a) * P.evaluate(g, a)
    assert P.evaluate(P.compose(f, g), a) == P.evaluate(f, P.evaluate(g, a))
