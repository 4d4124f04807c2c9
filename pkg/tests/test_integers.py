import math

import pytest
import sympy
from hypothesis import given, strategies as st

from tracegate.arith.integers import (
    bezout_list,
    check_prime,
    factorint,
    format_factored,
    int_gcd_bezout,
    is_probable_prime,
    is_squarefree,
    squarefree_kernel,
    valuation,
)
from tracegate.errors import BothZero, NotPrime


@pytest.mark.parametrize(
    "a, b, expected",
    [((3, 2), None, (1, 1, -1)), ((6, 4), None, (2, 1, -1)), ((-5, 0), None, (5, -1, 0)), ((0, 7), None, (7, 0, 1))],
)
def test_bezout_examples(a, b, expected):
    assert int_gcd_bezout(*a) == expected


def test_bezout_both_zero():
    with pytest.raises(BothZero):
        int_gcd_bezout(0, 0)


@given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30))
def test_bezout_identity(a, b):
    if a == 0 and b == 0:
        return
    g, u, v = int_gcd_bezout(a, b)
    assert g == math.gcd(a, b)
    assert u * a + v * b == g
    if b:
        assert abs(u) <= abs(b) // (2 * g) + 1


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=6))
def test_bezout_list(values):
    if not any(values):
        return
    g, coeffs = bezout_list(values)
    assert g == math.gcd(*values)
    assert sum(c * x for c, x in zip(coeffs, values)) == g


@given(st.integers(2, 10**12))
def test_primality_matches_sympy(n):
    assert is_probable_prime(n) == sympy.isprime(n)


def test_large_primes():
    assert is_probable_prime(2**61 - 1)
    # strong pseudoprime to the bases 2..37, caught by base 41
    assert not is_probable_prime(318665857834031151167461)
    assert is_probable_prime(2**89 - 1)


def test_check_prime():
    assert check_prime(2) == 2
    assert check_prime(1000003) == 1000003
    for bad in (0, 1, 4, 561, 10**6):
        with pytest.raises(NotPrime):
            check_prime(bad)
    with pytest.raises(NotPrime):
        check_prime(2**61 - 1)  # above the modulus bound


@given(st.integers(-10**15, 10**15).filter(lambda n: n != 0))
def test_factorint_matches_sympy(n):
    expected = {p: e for p, e in sympy.factorint(abs(n)).items()}
    assert factorint(n) == expected


def test_factorint_semiprime():
    p, q = 1000000007, 998244353
    assert factorint(p * q) == {q: 1, p: 1}
    assert list(factorint(p * q)) == [q, p]


def test_kernel_and_valuation():
    assert squarefree_kernel(-12) == -3
    assert squarefree_kernel(-173056) == -1
    assert squarefree_kernel(72) == 2
    assert is_squarefree(-30) and not is_squarefree(18)
    assert valuation(-173056, 2) == 10
    assert valuation(-173056, 13) == 2


def test_format_factored():
    assert format_factored(-173056) == "-2^10 * 13^2"
    assert format_factored(1) == "1"
    assert format_factored(-23) == "-23"
    assert format_factored(50000) == "2^4 * 5^5"
