"""Composita of number fields and trace-one elements in them.

Generic composita are built in the tensor algebra ``K (x) M`` without any
factorization over Z: the minimal polynomial of ``theta_K + c * theta_M``
comes from a Krylov sequence, and the result is only accepted when the
algebra is certified to be a field. Multiquadratic fields get their own
subset-indexed representation.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd

from . import budget
from .arith import matrix as mat
from .arith import modp
from .arith import poly as P
from .arith.integers import SMALL_PRIMES, int_gcd_bezout, is_squarefree, squarefree_kernel
from .errors import (
    DegreesNotCoprime,
    InputNotSurjective,
    NotDeclaredNormal,
    NotLinearlyDisjoint,
    NotOneMod4,
    NotSquarefree,
    NotCertified,
)
from .field import FieldElement, NumberField
from .invariants import is_tame, primes_above, ramified_primes, trace_index
from .order import maximal_order

SHIFT_MAX = 20
NORMALITY_BOUND = 200


# ---------------------------------------------------------------- tensor algebra


def _times_x(a, f):
    """``x * a`` in Q[x, y]/(f(x), g(y)); ``a[i][j]`` is the x^i y^j coefficient."""
    top = a[-1]
    out = [[0] * len(top)] + [list(r) for r in a[:-1]]
    if any(top):
        for i in range(len(out)):
            if f[i]:
                out[i] = [o - f[i] * t for o, t in zip(out[i], top)]
    return out


def _times_y(a, g):
    out = []
    for row in a:
        top = row[-1]
        new = [0] + row[:-1]
        if top:
            new = [o - c * top for o, c in zip(new, g)]
        out.append(new)
    return out


def _krylov(fk, fm, c):
    """Flattened powers ``gamma^0 .. gamma^D`` of ``gamma = x + c y``."""
    dk, dm = len(fk) - 1, len(fm) - 1
    cur = [[0] * dm for _ in range(dk)]
    cur[0][0] = 1
    out = []
    for _ in range(dk * dm + 1):
        out.append([v for row in cur for v in row])
        xs = _times_x(cur, fk)
        ys = _times_y(cur, fm)
        cur = [[a + c * b for a, b in zip(r1, r2)] for r1, r2 in zip(xs, ys)]
    return out


def _flat_unit(dk, dm, i, j):
    v = [0] * (dk * dm)
    v[i * dm + j] = 1
    return v


# ---------------------------------------------------------------- certification


def _disc_squarefree_class(field):
    return squarefree_kernel(field.poly_discriminant)


def _certify(K, M, poly):
    """Reason the tensor algebra with char poly ``poly`` is a field, or None."""
    dk, dm = K.degree, M.degree
    if gcd(dk, dm) == 1:
        return "coprime degrees"
    if dk == dm == 2:
        if _disc_squarefree_class(K) != _disc_squarefree_class(M):
            return "quadratic fields with distinct discriminant classes"
        return None
    try:
        field = NumberField(poly)
    except NotCertified:
        return None
    return field.certificate_reason


@dataclass
class CompositumField:
    left: NumberField
    right: NumberField
    shift: int
    field: NumberField
    embed_left: list  # d_K x D rational matrix
    embed_right: list  # d_M x D

    @property
    def degree(self):
        return self.field.degree

    def embed(self, element):
        """Image of an element of ``left`` or ``right`` in the compositum."""
        if element.field == self.left:
            m = self.embed_left
        elif element.field == self.right:
            m = self.embed_right
        else:
            raise ValueError("element belongs to neither factor")
        return FieldElement(self.field, mat.vecmat(list(element.coords), m))


def _embedding_rows(field, gen_image, degree):
    rows = []
    cur = field.one
    for _ in range(degree):
        rows.append(list(cur.coords))
        cur = cur * gen_image
    return rows


def compose(K, M, shift_max=SHIFT_MAX, assert_field=False):
    """Compositum ``KM`` for linearly disjoint ``K`` and ``M``.

    The shift ``c`` runs over 1, 2, ... until ``theta_K + c theta_M``
    generates the whole tensor algebra. The algebra must then be certified
    to be a field (coprime degrees, two quadratics with different
    discriminant classes, or the degree-pattern sieve); ``assert_field``
    skips that certificate.
    """
    fk, fm = list(K.poly), list(M.poly)
    dk, dm = K.degree, M.degree
    big_d = dk * dm
    best = 0
    for c in range(1, shift_max + 1):
        budget.check()
        vecs = _krylov(fk, fm, c)
        r = mat.rank(vecs[:big_d])
        best = max(best, r)
        if r < big_d:
            continue
        inv = mat.inverse(vecs[:big_d])
        rel = mat.vecmat(vecs[big_d], inv)
        poly = [-int(a) for a in rel] + [1]
        reason = "asserted by caller" if assert_field else _certify(K, M, poly)
        if reason is None:
            raise NotLinearlyDisjoint(
                f"{P.to_str(fk)} and {P.to_str(fm)}: the tensor algebra has a primitive "
                f"element of degree {big_d} but is not certified to be a field",
                best_degree=r,
            )
        L = NumberField(poly, normal=K.normal and M.normal, certificate_reason=reason)
        x_in = mat.vecmat(_flat_unit(dk, dm, 1 % dk, 0) if dk > 1 else _flat_unit(dk, dm, 0, 0), inv)
        y_in = mat.vecmat(_flat_unit(dk, dm, 0, 1 % dm) if dm > 1 else _flat_unit(dk, dm, 0, 0), inv)
        ex = FieldElement(L, x_in) if dk > 1 else L.from_poly([-fk[0]])
        ey = FieldElement(L, y_in) if dm > 1 else L.from_poly([-fm[0]])
        if ex + ey * c != L.gen:
            raise ArithmeticError("primitive element does not decompose as theta_K + c theta_M")
        for f, e in ((fk, ex), (fm, ey)):
            val = L.zero
            for coeff in reversed(f):
                val = val * e + coeff
            if val:
                raise ArithmeticError("embedding does not respect the defining polynomial")
        return CompositumField(K, M, c, L, _embedding_rows(L, ex, dk), _embedding_rows(L, ey, dm))
    raise NotLinearlyDisjoint(
        f"{P.to_str(fk)} and {P.to_str(fm)}: no shift c <= {shift_max} gives degree {big_d} "
        f"(best {best})",
        best_degree=best,
    )


# ---------------------------------------------------------------- coprime degrees


@dataclass
class WitnessStep:
    degree_partial: int
    degree_new: int
    u: int
    v: int


@dataclass
class Theorem3IResult:
    compositum: object  # CompositumField, or the single field when r == 1
    field: NumberField
    witness: FieldElement
    trace: Fraction
    steps: list = dc_field(default_factory=list)


def theorem3_I_witness(fields):
    """Trace-one element of ``L_1 ... L_r`` for pairwise coprime degrees.

    At each step ``alpha`` (trace 1 in the partial compositum K) and
    ``beta`` (trace 1 in the next field L_r) combine to ``u alpha + v beta``
    with ``u deg(L_r) + v deg(K) = 1``.
    """
    fields = list(fields)
    if not fields:
        raise ValueError("need at least one field")
    for i, a in enumerate(fields):
        for b in fields[i + 1 :]:
            if gcd(a.degree, b.degree) != 1:
                raise DegreesNotCoprime(f"degrees {a.degree} and {b.degree} are not coprime")
    witnesses = []
    for F in fields:
        t, w = trace_index(maximal_order(F))
        if t != 1:
            raise InputNotSurjective(f"{F} has trace index {t}")
        witnesses.append(w)
    K, alpha = fields[0], witnesses[0]
    comp = K
    steps = []
    for L, beta in zip(fields[1:], witnesses[1:]):
        budget.check()
        comp = compose(K, L)
        _, u, v = int_gcd_bezout(L.degree, K.degree)
        steps.append(WitnessStep(K.degree, L.degree, u, v))
        alpha = comp.embed(alpha) * u + comp.embed(beta) * v
        K = comp.field
    tr = alpha.trace()
    if tr != 1:
        raise ArithmeticError(f"witness has trace {tr}")
    return Theorem3IResult(comp, K, alpha, tr, steps)


# ---------------------------------------------------------------- multiquadratic fields


class MultiquadraticElement:
    """``sum_S c_S prod_{i in S} sqrt(m_i)`` keyed by bitmask ``S``."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs):
        self.parent = parent
        self.coeffs = {k: Fraction(v) for k, v in coeffs.items() if v}

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return MultiquadraticElement(self.parent, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiquadraticElement(self.parent, {k: v * other for k, v in self.coeffs.items()})
        out = {}
        for s, a in self.coeffs.items():
            for t, b in other.coeffs.items():
                k, c = self.parent.basis_product(s, t)
                out[k] = out.get(k, 0) + a * b * c
        return MultiquadraticElement(self.parent, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MultiquadraticElement) and self.coeffs == other.coeffs

    def trace(self):
        """Only the constant term survives: Tr(1) = 2^s, every other basis trace is 0."""
        return self.coeffs.get(0, Fraction(0)) * self.parent.degree

    def vector(self):
        return [self.coeffs.get(k, Fraction(0)) for k in range(self.parent.degree)]

    def to_str(self):
        terms = []
        for k in sorted(self.coeffs):
            terms.append(f"({self.coeffs[k]})*{self.parent.basis_label(k)}")
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return f"MultiquadraticElement({self.to_str()})"


class MultiquadraticField:
    """``Q(sqrt(m_1), ..., sqrt(m_s))`` with a minimal generator list.

    Basis elements are indexed by subsets ``S`` (bitmasks); the basis
    element for ``S`` is ``prod_{i in S} sqrt(m_i)``, a rational multiple
    of ``sqrt(kernel(S))`` with ``kernel`` the signed squarefree part of
    ``prod_{i in S} m_i``.
    """

    def __init__(self, ms):
        self.input = list(ms)
        gens = []
        kernels = {1}
        for m in self.input:
            if m in (0, 1) or not is_squarefree(m):
                raise NotSquarefree(f"{m} is not a squarefree integer other than 0, 1")
            if m % 4 != 1:
                raise NotOneMod4(f"{m} is not 1 mod 4")
            if m in kernels:
                continue  # sqrt(m) already lies in the field
            gens.append(m)
            kernels |= {squarefree_kernel(k * m) for k in kernels}
        self.gens = gens
        self.s = len(gens)
        self.degree = 1 << self.s

    def __repr__(self):
        return f"MultiquadraticField({self.gens})"

    def basis_product(self, a, b):
        c = 1
        both = a & b
        for i, m in enumerate(self.gens):
            if both >> i & 1:
                c *= m
        return a ^ b, c

    def kernel(self, mask):
        prod = 1
        for i, m in enumerate(self.gens):
            if mask >> i & 1:
                prod *= m
        return squarefree_kernel(prod)

    def basis_label(self, mask):
        if not mask:
            return "1"
        return "*".join(f"sqrt({m})" for i, m in enumerate(self.gens) if mask >> i & 1)

    def element(self, coeffs):
        return MultiquadraticElement(self, coeffs)

    def one(self):
        return self.element({0: 1})

    def sqrt(self, i):
        return self.element({1 << i: 1})

    def alpha(self):
        """``prod (1 + sqrt(m_i)) / 2``, expanded over the subset basis."""
        out = self.one()
        for i in range(self.s):
            out = out * (self.one() + self.sqrt(i)) * Fraction(1, 2)
        return out

    def primitive_element(self):
        out = self.element({})
        for i in range(self.s):
            out = out + self.sqrt(i)
        return out

    def mul_matrix(self, x):
        return [(self.element({k: 1}) * x).vector() for k in range(self.degree)]

    def as_number_field(self):
        """``(NumberField, map)`` for the primitive element ``sum sqrt(m_i)``.

        ``map`` sends a :class:`MultiquadraticElement` to a field element.
        """
        gamma = self.primitive_element()
        vecs = []
        cur = self.one()
        for _ in range(self.degree + 1):
            vecs.append(cur.vector())
            cur = cur * gamma
        base = vecs[: self.degree]
        if mat.rank(base) != self.degree:
            raise ArithmeticError("sum of square roots is not a primitive element")
        inv = mat.inverse(base)
        rel = mat.vecmat(vecs[-1], inv)
        poly = [-int(a) for a in rel] + [1]
        F = NumberField(poly, normal=True, certificate_reason="multiquadratic with independent generators")

        def to_field(x):
            return FieldElement(F, mat.vecmat(x.vector(), inv))

        return F, to_field


@dataclass
class Theorem3IIResult:
    field: MultiquadraticField
    alpha: MultiquadraticElement
    trace: Fraction


def multiquadratic(ms):
    K = MultiquadraticField(ms)
    alpha = K.alpha()
    tr = alpha.trace()
    if tr != 1:
        raise ArithmeticError(f"alpha has trace {tr}")
    return Theorem3IIResult(K, alpha, tr)


# ---------------------------------------------------------------- normal pairs


def normality_heuristic(field, bound=NORMALITY_BOUND):
    """Refutable check: for a normal field every good prime splits into equal degrees.

    Returns ``(consistent, refuting_prime, pattern)``.
    """
    f = list(field.poly)
    disc = field.poly_discriminant
    for p in SMALL_PRIMES:
        if p >= bound:
            break
        if disc % p == 0:
            continue
        degs = sorted(len(g) - 1 for g, _ in modp.factor_mod_p(f, p))
        if len(set(degs)) > 1:
            return False, p, degs
    return True, None, None


def _require_normal(F):
    if not F.normal:
        raise NotDeclaredNormal(f"{F} is not declared normal")
    ok, p, degs = normality_heuristic(F)
    if not ok:
        raise NotDeclaredNormal(f"{F} is declared normal but splits as {degs} modulo {p}")


@dataclass
class Theorem3IIIVerdict:
    status: str  # "verified", "degenerate" or "not-disjoint"
    degree: int
    t: int = None
    tame: bool = None
    per_prime: list = dc_field(default_factory=list)  # (p, e's in KL, e's in K, e's in M, multiples)
    compositum: object = None
    detail: str = ""

    @property
    def ok(self):
        if self.status == "not-disjoint":
            return None
        return self.t == 1 and self.tame and all(row[-1] for row in self.per_prime)


def _same_field(K, M):
    if K.poly == M.poly:
        return True
    return K.degree == M.degree == 2 and _disc_squarefree_class(K) == _disc_squarefree_class(M)


def _ramification_rows(KL, K, M):
    oKL, oK, oM = maximal_order(KL), maximal_order(K), maximal_order(M)
    ps = sorted(set(ramified_primes(oKL)) | set(ramified_primes(oK)) | set(ramified_primes(oM)))
    rows = []
    for p in ps:
        eKL = [P.e for P in primes_above(oKL, p)]
        eK = [P.e for P in primes_above(oK, p)]
        eM = [P.e for P in primes_above(oM, p)]
        ok = all(a % b == 0 for a in eKL for b in eK + eM)
        rows.append((p, eKL, eK, eM, ok))
    return rows


def theorem3_III_check(K, M):
    """Normal K, M with t = 1: the compositum is tame with t = 1."""
    for F in (K, M):
        _require_normal(F)
        t, _ = trace_index(maximal_order(F))
        if t != 1:
            raise InputNotSurjective(f"{F} has trace index {t}")
    if _same_field(K, M):
        o = maximal_order(K)
        t, _ = trace_index(o)
        rows = _ramification_rows(K, K, K)
        return Theorem3IIIVerdict("degenerate", K.degree, t, is_tame(o), rows, None, "compositum equals K")
    try:
        comp = compose(K, M)
    except NotLinearlyDisjoint as exc:
        return Theorem3IIIVerdict("not-disjoint", exc.best_degree or 0, detail=str(exc))
    o = maximal_order(comp.field)
    t, _ = trace_index(o)
    rows = _ramification_rows(comp.field, K, M)
    return Theorem3IIIVerdict("verified", comp.degree, t, is_tame(o), rows, comp)
