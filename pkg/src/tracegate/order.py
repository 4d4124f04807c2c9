"""Orders of number fields and the maximal order (Dedekind + Round 2)."""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from math import gcd

from . import budget
from .arith import matrix as mat
from .arith import modp
from .arith import poly as P
from .arith.integers import check_prime, factorint
from .field import FieldElement


class Order:
    """A full-rank multiplicatively closed lattice containing Z[theta].

    ``basis_matrix`` holds ``denominator * omega_i`` in power-basis
    coordinates, in the lower Hermite form of :func:`~tracegate.arith.matrix.hnf_lower`
    so that ``omega_1 == 1``.
    """

    def __init__(self, field, denominator, basis_matrix):
        self.field = field
        self.denominator, self.basis_matrix = _normalize(denominator, basis_matrix)
        if len(self.basis_matrix) != field.degree:
            raise ValueError("order basis must have full rank")

    @classmethod
    def equation_order(cls, field):
        return cls(field, 1, mat.identity(field.degree))

    @classmethod
    def from_elements(cls, field, elements):
        """Z-span of the given elements (caller guarantees ring closure)."""
        rows = [list(e.coords) for e in elements]
        den, m = mat.clear_denominators(rows)
        return cls(field, den, m)

    def __eq__(self, other):
        return (
            isinstance(other, Order)
            and self.field == other.field
            and self.denominator == other.denominator
            and self.basis_matrix == other.basis_matrix
        )

    def __hash__(self):
        return hash((self.field, self.denominator, tuple(map(tuple, self.basis_matrix))))

    def __repr__(self):
        return f"Order({self.field!r}, den={self.denominator}, index={self.index})"

    @property
    def degree(self):
        return self.field.degree

    @cached_property
    def basis_rational(self):
        den = self.denominator
        return [[Fraction(x, den) for x in row] for row in self.basis_matrix]

    @cached_property
    def basis(self):
        return [FieldElement(self.field, row) for row in self.basis_rational]

    @cached_property
    def _to_basis(self):
        return mat.inverse(self.basis_rational)

    def coordinates(self, element):
        """Coordinates of a field element with respect to the order basis."""
        return mat.vecmat(list(element.coords), self._to_basis)

    def element(self, coords):
        return FieldElement(self.field, mat.vecmat(list(coords), self.basis_rational))

    def contains(self, element):
        return all(Fraction(c).denominator == 1 for c in self.coordinates(element))

    @cached_property
    def mult_table(self):
        """``table[i][j]`` = integer coordinates of ``omega_i * omega_j``."""
        d = self.degree
        b = self.basis
        table = [[None] * d for _ in range(d)]
        for i in range(d):
            for j in range(i, d):
                c = self.coordinates(b[i] * b[j])
                if any(x.denominator != 1 for x in c):
                    raise ArithmeticError("lattice is not closed under multiplication")
                c = [int(x) for x in c]
                table[i][j] = table[j][i] = c
        return table

    def mul(self, u, v):
        """Product of two elements given by basis coordinates."""
        d = self.degree
        out = [0] * d
        t = self.mult_table
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(t[i][j]):
                    if c:
                        out[k] += ab * c
        return out

    def mul_mod_p(self, u, v, p):
        return [x % p for x in self.mul(u, v)]

    def pow_mod_p(self, u, n, p):
        out = [1] + [0] * (self.degree - 1)
        base = [x % p for x in u]
        while n:
            if n & 1:
                out = self.mul_mod_p(out, base, p)
            base = self.mul_mod_p(base, base, p)
            n >>= 1
        return out

    @cached_property
    def traces(self):
        """Integer traces of the basis elements."""
        tv = self.field.trace_vector
        out = []
        for row in self.basis_rational:
            t = sum(c * s for c, s in zip(row, tv))
            out.append(int(t))
        return out

    def gram_matrix(self):
        """Integer matrix of traces ``Tr(omega_i * omega_j)``."""
        tr = self.traces
        return [[sum(c * t for c, t in zip(cell, tr)) for cell in row] for row in self.mult_table]

    @cached_property
    def discriminant(self):
        return mat.det(self.gram_matrix())

    @cached_property
    def index(self):
        """``[O : Z[theta]]``."""
        num = self.denominator**self.degree
        den = 1
        for i in range(self.degree):
            den *= self.basis_matrix[i][i]
        return num // den


def _normalize(den, m):
    m = mat.hnf_lower(m)
    g = den
    for row in m:
        for x in row:
            g = gcd(g, x)
    return den // g, [[x // g for x in row] for row in m]


@dataclass
class DedekindVerdict:
    p: int
    is_p_maximal: bool
    enlargement_generators: list = dc_field(default_factory=list)


def dedekind_criterion(field, p):
    """Decide whether ``p`` divides ``[O_L : Z[theta]]``.

    When it does, the returned generators ``U(theta) theta^i / p`` span,
    together with Z[theta], a strictly larger order.
    """
    check_prime(p)
    f = list(field.poly)
    factors = modp.factor_mod_p(f, p)
    g, h = [1], [1]
    for gi, e in factors:
        g = modp.mul(g, gi, p)
        for _ in range(e - 1):
            h = modp.mul(h, gi, p)
    big_f = [c // p for c in P.sub(f, P.mul(g, h))]
    assert all(c % p == 0 for c in P.sub(f, P.mul(g, h)))
    z = modp.gcd(modp.gcd(big_f, g, p), h, p)
    m = len(z) - 1
    if m == 0:
        return DedekindVerdict(p, True, [])
    u = modp.quo(modp.reduce(f, p), z, p)
    base = field.from_poly(u) / p
    theta = field.gen
    gens = [base * theta**i for i in range(m)]
    return DedekindVerdict(p, False, gens)


def _add_elements(order, elements):
    return Order.from_elements(order.field, order.basis + list(elements))


def radical_mod_p(order, p):
    """Basis (mod p, order coordinates) of the p-radical of ``order / p order``."""
    d = order.degree
    q = p
    while q < d:
        q *= p
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        rows.append(order.pow_mod_p(e, q, p))
    return mat.left_kernel_mod_p(rows, p)


def enlarge_at(order, p):
    """One Round-2 step: the ring of multipliers of the p-radical.

    Returns the same order when it is already p-maximal.
    """
    d = order.degree
    rad = radical_mod_p(order, p)
    gens = rad + [[p if i == j else 0 for j in range(d)] for i in range(d)]
    gamma = mat.hnf(gens)
    to_gamma = mat.inverse(gamma)
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        row = []
        for g in gamma:
            prod = order.mul(e, g)
            coords = mat.vecmat(prod, to_gamma)
            if any(c.denominator != 1 for c in coords):
                raise ArithmeticError("p-radical is not an ideal of the order")
            row.extend(int(c) % p for c in coords)
        rows.append(row)
    kernel = mat.left_kernel_mod_p(rows, p)
    if not kernel:
        return order
    vecs = [[Fraction(x, p) for x in v] for v in kernel]
    new = [mat.vecmat(v, order.basis_rational) for v in vecs]
    elements = [FieldElement(order.field, c) for c in new]
    return _add_elements(order, elements)


def p_maximal(order, p):
    dv = dedekind_criterion(order.field, p)
    if not dv.is_p_maximal:
        order = _add_elements(order, dv.enlargement_generators)
    while True:
        budget.check()
        bigger = enlarge_at(order, p)
        if bigger == order:
            return order
        order = bigger


def round2(field):
    """The maximal order of ``field``."""
    disc = field.poly_discriminant
    order = Order.equation_order(field)
    for p, e in factorint(disc).items():
        if e >= 2:
            order = p_maximal(order, p)
    if disc != order.index**2 * order.discriminant:
        raise ArithmeticError("disc(f) != index^2 * disc(L)")
    return order


def maximal_order(field):
    """Cached :func:`round2`."""
    cached = getattr(field, "_maximal_order", None)
    if cached is None:
        cached = round2(field)
        field._maximal_order = cached
    return cached
