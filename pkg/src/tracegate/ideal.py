"""Fractional ideals of a maximal order and prime decomposition.

An ideal is a lattice given by HNF coordinates with respect to the
integral basis, scaled by a positive denominator. HNF equality is the
identity of record.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

from . import budget
from .arith import matrix as mat
from .arith import modp
from .arith.integers import check_prime, lcm_list, valuation as int_valuation
from .errors import InputError, ZeroIdeal
from .field import FieldElement


class FractionalIdeal:
    """``(1/denominator) * rowspan(hnf)`` in integral-basis coordinates."""

    def __init__(self, order, denominator, rows):
        h = mat.hnf(rows) if rows else []
        g = denominator
        for row in h:
            for x in row:
                g = gcd(g, x)
        if not h:
            g = denominator
        self.order = order
        self.denominator = denominator // g
        self.hnf = [[x // g for x in row] for row in h]

    @classmethod
    def from_lattice(cls, order, vectors):
        """Ideal from rational coordinate vectors already spanning an O-module."""
        den, m = mat.clear_denominators(vectors) if vectors else (1, [])
        return cls(order, den, m)

    @classmethod
    def from_generators(cls, order, generators):
        """O-module generated by elements (FieldElements or coordinate vectors)."""
        coords = [order.coordinates(g) if isinstance(g, FieldElement) else list(g) for g in generators]
        den, m = mat.clear_denominators(coords) if coords else (1, [])
        d = order.degree
        rows = []
        for v in m:
            if not any(v):
                continue
            for i in range(d):
                e = [0] * d
                e[i] = 1
                rows.append(order.mul(v, e))
        return cls(order, den, rows)

    @classmethod
    def unit(cls, order):
        return cls(order, 1, mat.identity(order.degree))

    @classmethod
    def scalar(cls, order, q):
        q = Fraction(q)
        d = order.degree
        return cls(order, q.denominator, [[q.numerator if i == j else 0 for j in range(d)] for i in range(d)])

    def __repr__(self):
        return f"FractionalIdeal(den={self.denominator}, hnf={self.hnf})"

    def __eq__(self, other):
        return (
            isinstance(other, FractionalIdeal)
            and self.order is other.order
            and self.denominator == other.denominator
            and self.hnf == other.hnf
        )

    def __hash__(self):
        return hash((self.denominator, tuple(map(tuple, self.hnf))))

    @property
    def is_zero(self):
        return not self.hnf

    @property
    def is_integral(self):
        return self.denominator == 1

    @cached_property
    def rational_rows(self):
        den = self.denominator
        return [[Fraction(x, den) for x in row] for row in self.hnf]

    def generators(self):
        return [self.order.element(row) for row in self.rational_rows]

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FractionalIdeal.scalar(self.order, other)
        _same_order(self, other)
        rows = [self.order.mul(a, b) for a in self.hnf for b in other.hnf]
        return FractionalIdeal(self.order, self.denominator * other.denominator, rows)

    __rmul__ = __mul__

    def __add__(self, other):
        _same_order(self, other)
        den = self.denominator * other.denominator // gcd(self.denominator, other.denominator)
        a = den // self.denominator
        b = den // other.denominator
        rows = [[a * x for x in r] for r in self.hnf] + [[b * x for x in r] for r in other.hnf]
        return FractionalIdeal(self.order, den, rows)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = FractionalIdeal.unit(self.order)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __le__(self, other):
        """Inclusion of lattices."""
        return self + other == other

    def contains(self, coords):
        """Membership of an element given by integral-basis coordinates."""
        if self.is_zero:
            return not any(coords)
        sol = mat.solve_left(self.rational_rows, [Fraction(c) for c in coords])
        return all(x.denominator == 1 for x in sol)

    def norm(self):
        """Absolute norm: index of the lattice, as a Fraction."""
        if self.is_zero:
            raise ZeroIdeal("norm of the zero ideal")
        num = 1
        for i, row in enumerate(self.hnf):
            num *= row[i]
        return Fraction(num, self.denominator**self.order.degree)

    def dual(self):
        """Trace dual ``{x : Tr(x I) in Z}``."""
        if self.is_zero:
            raise ZeroIdeal("dual of the zero lattice")
        g = self.order.gram_matrix()
        b = self.rational_rows
        dual_rows = mat.inverse(mat.matmul(g, mat.transpose(b)))
        return FractionalIdeal.from_lattice(self.order, dual_rows)

    def inverse(self):
        """``I^-1 = {x : x I in O}``, via ``I^-1 = (I * codifferent)^dual``."""
        if self.is_zero:
            raise ZeroIdeal("inverse of the zero ideal")
        codiff = FractionalIdeal.unit(self.order).dual()
        return (self * codiff).dual()

    def content(self):
        """Largest rational ``q`` with ``I in q O``."""
        g = 0
        for row in self.hnf:
            for x in row:
                g = gcd(g, x)
        return Fraction(g, self.denominator)


def ideal_mul(a, b):
    return a * b


def ideal_add(a, b):
    return a + b


def ideal_inverse(a):
    return a.inverse()


def ideal_norm(a):
    return a.norm()


def _same_order(a, b):
    if a.order is not b.order and a.order != b.order:
        raise InputError("ideals belong to different orders")


@dataclass
class PrimeIdeal:
    p: int
    ideal: FractionalIdeal
    e: int
    f: int
    valuation_element: list
    generator: list = None

    def __repr__(self):
        return f"PrimeIdeal(p={self.p}, e={self.e}, f={self.f})"

    def element_valuation(self, coords):
        """``v_P`` of a nonzero element of O given by integer coordinates."""
        order = self.ideal.order
        x = [int(c) for c in coords]
        if not any(x):
            raise ZeroIdeal("valuation of zero")
        v = 0
        cap = None
        while True:
            y = order.mul(x, self.valuation_element)
            if any(c % self.p for c in y):
                return v
            x = [c // self.p for c in y]
            v += 1
            if v > order.degree and cap is None:
                # f * v_P(x) <= v_p(N(x)); a zero norm means O is not a domain
                cap = _norm_valuation_cap(order, coords, self.p) // self.f
            if cap is not None and v > cap:
                raise ArithmeticError("valuation exceeds the norm bound")


def _norm_valuation_cap(order, coords, p):
    d = order.degree
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        rows.append(order.mul([int(c) for c in coords], e))
    n = mat.det(rows)
    if n == 0:
        raise ArithmeticError("nonzero element of norm 0: the defining polynomial is reducible")
    return int_valuation(n, p)


def _valuation_element(order, prime_rows, p):
    """``tau`` in O with ``tau * P`` in ``p O`` but ``tau`` not in ``p O``."""
    d = order.degree
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        row = []
        for g in prime_rows:
            row.extend(c % p for c in order.mul(e, g))
        rows.append(row)
    kernel = mat.left_kernel_mod_p(rows, p)
    if not kernel:
        raise ArithmeticError("no valuation element: ideal is not a proper prime")
    return kernel[0]


def _frobenius_q(p, d):
    q = p
    while q < d:
        q *= p
    return q


def _make_prime(order, p, rows, generator=None):
    d = order.degree
    ideal = FractionalIdeal(order, 1, rows + [[p if i == j else 0 for j in range(d)] for i in range(d)])
    norm = ideal.norm()
    f = 0
    n = norm.numerator
    while n % p == 0:
        n //= p
        f += 1
    if n != 1 or norm.denominator != 1 or f == 0:
        raise ArithmeticError("prime candidate has wrong norm")
    tau = _valuation_element(order, ideal.hnf, p)
    prime = PrimeIdeal(p, ideal, 0, f, tau, generator)
    one_p = [p] + [0] * (d - 1)
    prime.e = prime.element_valuation(one_p)
    return prime


def _tame_split(order, p):
    field = order.field
    out = []
    for g, k in modp.factor_mod_p(list(field.poly), p):
        elt = field.from_poly(g)
        coords = [int(c) for c in order.coordinates(elt)]
        d = order.degree
        rows = []
        for i in range(d):
            e = [0] * d
            e[i] = 1
            rows.append(order.mul(coords, e))
        prime = _make_prime(order, p, rows, generator=list(g))
        if prime.e != k or prime.f != len(g) - 1:
            raise ArithmeticError("Kummer-Dedekind factorization disagrees with valuations")
        out.append(prime)
    return out


def _minpoly_mod_p(order, y, p):
    d = order.degree
    vecs = [[1] + [0] * (d - 1)]
    cur = vecs[0]
    for k in range(1, d + 1):
        cur = order.mul_mod_p(cur, y, p)
        vecs.append(cur)
        kern = mat.left_kernel_mod_p(vecs, p)
        if kern:
            rel = kern[0]
            inv = pow(rel[k], -1, p)
            return [c * inv % p for c in rel[: k + 1]]
    raise AssertionError("Krylov sequence did not close")


def split_idempotents(order, p):
    """Primitive idempotents of ``O / pO`` (coordinates mod p), deterministic."""
    d = order.degree
    one = [1] + [0] * (d - 1)
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        fr = order.pow_mod_p(e, p, p)
        fr[i] = (fr[i] - 1) % p
        rows.append(fr)
    fixed = mat.left_kernel_mod_p(rows, p)
    # fixed = {x : x^p = x} ~ F_p^s, s = number of primes above p
    idems = [one]
    for b in fixed:
        refined = []
        for e in idems:
            y = order.mul_mod_p(b, e, p)
            mp = _minpoly_mod_p(order, y, p)
            roots = [(-g[0]) % p for g, _ in modp.factor_mod_p(mp, p)]
            if len(roots) <= 1:
                refined.append(e)
                continue
            for c in roots:
                proj = e
                for c2 in roots:
                    if c2 == c:
                        continue
                    inv = pow((c - c2) % p, -1, p)
                    factor = [(yy - (c2 if k == 0 else 0)) * inv % p for k, yy in enumerate(y)]
                    proj = order.mul_mod_p(proj, factor, p)
                if any(proj):
                    refined.append(proj)
        idems = refined
    if len(idems) != len(fixed):
        raise ArithmeticError("idempotent splitting did not separate all components")
    return idems


def _wild_split(order, p):
    d = order.degree
    q = _frobenius_q(p, d)
    out = []
    for e in split_idempotents(order, p):
        rows = []
        for i in range(d):
            unit = [0] * d
            unit[i] = 1
            xe = order.mul_mod_p(unit, e, p)
            rows.append(order.pow_mod_p(xe, q, p))
        kernel = mat.left_kernel_mod_p(rows, p)
        out.append(_make_prime(order, p, kernel))
    return out


def decompose_prime(order, p, method=None):
    """Factor ``p O`` into primes with ramification data.

    ``method`` forces ``"kummer"`` (needs p not dividing the index) or
    ``"idempotent"``; by default the former is used when it applies.
    """
    check_prime(p)
    budget.check()
    if method is None:
        method = "kummer" if order.index % p else "idempotent"
    if method == "kummer":
        if order.index % p == 0:
            raise InputError(f"{p} divides the index; Kummer-Dedekind does not apply")
        primes = _tame_split(order, p)
    else:
        primes = _wild_split(order, p)
    primes.sort(key=lambda P: (P.e, P.f, P.ideal.hnf))
    if sum(P.e * P.f for P in primes) != order.degree:
        raise ArithmeticError("sum of e*f differs from the degree")
    return primes


def valuation(ideal, prime):
    """Exact ``prime``-adic valuation of a nonzero fractional ideal."""
    if ideal.is_zero:
        raise ZeroIdeal("valuation of the zero ideal")
    den = ideal.denominator
    shift = 0
    while den % prime.p == 0:
        den //= prime.p
        shift += prime.e
    # rows of den_total * I are integral; removing the p-free part of the denominator is harmless
    return min(prime.element_valuation(row) for row in ideal.hnf) - shift


def prime_power_product(primes):
    out = FractionalIdeal.unit(primes[0].ideal.order)
    for P in primes:
        out = out * P.ideal**P.e
    return out


def common_denominator(ideals):
    return lcm_list([I.denominator for I in ideals])
