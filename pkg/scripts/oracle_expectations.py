"""Freeze cross-oracle expectations with sympy (run once, before the suites).

Prints one ``expect`` clause per field; the output is pasted into
``make_corpus.py``. sympy is only needed here and in the tests.
"""

from math import gcd

from sympy import Matrix, Poly, ZZ, factorint, symbols
from sympy.polys.numberfields.basis import round_two
from sympy.polys.numberfields.primes import prime_decomp

FIELDS = {
    "example-sextic": [1, 0, 5, 0, 1, 0, 1],
    "eis-sextic-3": [3, 0, -3, 0, 0, 0, 1],
    "dedekind-cubic": [-8, -2, -1, 1],
    "pure-quintic-2": [-2, 0, 0, 0, 0, 1],
    "pure-septic-3": [-3, 0, 0, 0, 0, 0, 0, 1],
}

x = symbols("x")


def companion(coeffs):
    d = len(coeffs) - 1
    m = Matrix.zeros(d, d)
    for i in range(1, d):
        m[i, i - 1] = 1
    for i in range(d):
        m[i, d - 1] = -coeffs[i]
    return m


def expectation(coeffs):
    T = Poly(list(reversed(coeffs)), x, domain=ZZ)
    ZK, disc = round_two(T)
    C = companion(coeffs)
    d = len(coeffs) - 1
    # basis element j = (sum_i M[i, j] theta^i) / denom; its trace via the companion matrix
    mat = ZK.matrix.to_Matrix()
    power_traces = [(C**i).trace() for i in range(d)]
    traces = []
    for j in range(d):
        tr = sum(mat[i, j] * power_traces[i] for i in range(d))
        assert tr % ZK.denom == 0
        traces.append(int(tr // ZK.denom))
    t = 0
    for tr in traces:
        t = gcd(t, tr)
    parts = [f"t={t}", f"disc={int(disc)}"]
    # primes of the polynomial discriminant: ramified ones and index divisors
    for p in sorted(factorint(abs(int(T.discriminant())))):
        ef = sorted((P.e, P.f) for P in prime_decomp(int(p), T, ZK=ZK, dK=int(disc)))
        parts.append(f"p{p}=" + "".join(f"({e},{f})" for e, f in ef))
    return " ".join(parts)


if __name__ == "__main__":
    for label, coeffs in FIELDS.items():
        print(f"{label!r}: {expectation(coeffs)!r},")
