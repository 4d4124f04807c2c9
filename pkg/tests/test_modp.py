import pytest
import sympy
from hypothesis import given, settings, strategies as st

from tracegate.arith import modp
from tracegate.errors import NotPrime

x = sympy.symbols("x")
PRIMES = [2, 3, 5, 7, 13, 101]


def sympy_factor_degrees(f, p):
    _, facs = sympy.Poly(list(reversed(f)), x, modulus=p).factor_list()
    return sorted((fac.degree(), e) for fac, e in facs)


@pytest.mark.parametrize(
    "f, p, expected",
    [
        ([1, 0, 5, 0, 1, 0, 1], 2, [([1, 1], 6)]),
        ([1, 0, 1], 2, [([1, 1], 2)]),
        ([-1, -1, 0, 1], 5, [([3, 1], 1), ([3, 2, 1], 1)]),
    ],
)
def test_known_factorizations(f, p, expected):
    assert modp.factor_mod_p(f, p) == expected


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(0, 200), min_size=1, max_size=9), st.sampled_from(PRIMES))
def test_factorization_reconstructs_and_matches_sympy(coeffs, p):
    f = coeffs + [1]
    facs = modp.factor_mod_p(f, p)
    assert modp.expand(facs, p, 1) == modp.reduce(f, p)
    for g, _ in facs:
        assert modp.is_irreducible(g, p)
        assert g[-1] == 1
    assert sorted((len(g) - 1, e) for g, e in facs) == sympy_factor_degrees(f, p)


def test_irreducibility():
    assert modp.is_irreducible([1, 1, 1], 2)
    assert not modp.is_irreducible([1, 0, 1], 2)
    assert modp.is_irreducible([2, 0, 0, 1], 7)


def test_gcdex():
    f, g = [1, 0, 1], [1, 1]
    d, s, t = modp.gcdex(f, g, 3)
    assert modp.add(modp.mul(s, f, 3), modp.mul(t, g, 3), 3) == d


def test_nonprime_modulus():
    with pytest.raises(NotPrime):
        modp.factor_mod_p([1, 0, 1], 9)
