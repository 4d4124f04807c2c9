"""sympy-backed reference values, used only by the tests."""

from math import gcd

import sympy
from sympy.polys.numberfields.basis import round_two
from sympy.polys.numberfields.primes import prime_decomp

x = sympy.symbols("x")


def sympy_poly(coeffs):
    return sympy.Poly(list(reversed(coeffs)), x, domain=sympy.ZZ)


def companion(coeffs):
    d = len(coeffs) - 1
    m = sympy.zeros(d, d)
    for i in range(1, d):
        m[i, i - 1] = 1
    for i in range(d):
        m[i, d - 1] = -coeffs[i]
    return m


def element_matrix(coeffs, elt):
    """Multiplication matrix of sum elt[i] theta^i."""
    C = companion(coeffs)
    d = len(coeffs) - 1
    out = sympy.zeros(d, d)
    power = sympy.eye(d)
    for c in elt:
        out += sympy.Rational(c.numerator, c.denominator) * power if hasattr(c, "numerator") else c * power
        power = power * C
    return out


class OracleFailure(Exception):
    """sympy crashed or returned a result that contradicts disc(f) = index^2 disc(L)."""


def field_data(coeffs, with_primes=True):
    """(disc, t, {p: sorted (e, f)}) for the primes dividing disc(f)."""
    T = sympy_poly(coeffs)
    try:
        ZK, disc = round_two(T)
    except Exception as exc:  # ClosureFailure, CoercionFailed, bare asserts
        raise OracleFailure(repr(exc)) from exc
    ratio = sympy.Rational(int(T.discriminant()), int(disc))
    if ratio.q != 1 or sympy.sqrt(ratio).is_integer is not True:
        raise OracleFailure(f"round_two returned disc {disc} for disc(f) {T.discriminant()}")
    d = len(coeffs) - 1
    mat = ZK.matrix.to_Matrix()
    C = companion(coeffs)
    power_traces = [(C**i).trace() for i in range(d)]
    t = 0
    for j in range(d):
        t = gcd(t, int(sum(mat[i, j] * power_traces[i] for i in range(d)) / ZK.denom))
    primes = {}
    if not with_primes:
        return int(disc), t, primes
    for p in sympy.factorint(abs(int(T.discriminant()))):
        try:
            primes[int(p)] = sorted((P.e, P.f) for P in prime_decomp(int(p), T, ZK=ZK, dK=disc))
        except Exception as exc:
            raise OracleFailure(repr(exc)) from exc
        if sum(e * f for e, f in primes[int(p)]) != d:
            raise OracleFailure(f"prime_decomp({p}) has sum e*f != {d}")
    return int(disc), t, primes


def integral_basis(coeffs):
    """sympy's integral basis as rational power-basis coordinate lists."""
    ZK, _ = round_two(sympy_poly(coeffs))
    mat = ZK.matrix.to_Matrix()
    d = len(coeffs) - 1
    return [[sympy.Rational(mat[i, j], ZK.denom) for i in range(d)] for j in range(mat.cols)]
