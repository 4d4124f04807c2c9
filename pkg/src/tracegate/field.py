"""Number fields Q[x]/(f) with exact element arithmetic.

Traces, norms and minimal polynomials come from the multiplication
matrix of an element on the power basis; no embedding into C is ever
formed.
"""

from fractions import Fraction
from functools import cached_property

from .arith import matrix as mat
from .arith import modp
from .arith import poly as P
from .arith.integers import first_primes
from .errors import DivisionByZero, FieldMismatch, InputError, NonMonic, NotCertified

CERTIFIED = "Certified"
USER_ASSERTED = "UserAsserted"

SIEVE_PRIMES = 25


def degree_pattern_sieve(f, nprimes=SIEVE_PRIMES):
    """Try to certify irreducibility of a squarefree monic ``f`` over Q.

    For each of the first ``nprimes`` primes not dividing disc(f), the
    degrees of the irreducible factors of ``f mod p`` bound the degrees a
    rational factor could have. Returns ``(certified, patterns)``.
    """
    d = len(f) - 1
    if d == 1:
        return True, {}
    disc = P.discriminant(f)
    if disc == 0:
        return False, {}
    possible = set(range(d + 1))
    patterns = {}
    for p in first_primes(nprimes, skip=(disc,)):
        degs = sorted(len(g) - 1 for g, _ in modp.factor_mod_p(f, p))
        patterns[p] = degs
        sums = {0}
        for k in degs:
            sums |= {s + k for s in sums}
        possible &= sums
        if possible == {0, d}:
            return True, patterns
    return possible == {0, d}, patterns


class NumberField:
    """The field Q(theta) with theta a root of a monic irreducible integer polynomial.

    ``poly`` is an ascending coefficient list. Irreducibility is certified
    by :func:`degree_pattern_sieve`; when the sieve is inconclusive the
    caller must pass ``assert_irreducible=True`` (recorded as
    ``certificate == "UserAsserted"``) or a construction-specific
    ``certificate_reason``.
    """

    def __init__(self, poly, assert_irreducible=False, normal=False, certificate_reason=None):
        f = P.strip(int(c) if Fraction(c).denominator == 1 else c for c in poly)
        if not f or len(f) < 2:
            raise InputError("defining polynomial must have degree >= 1")
        if any(not isinstance(c, int) for c in f):
            raise InputError("defining polynomial must have integer coefficients")
        if f[-1] != 1:
            raise NonMonic(f"defining polynomial {P.to_str(f)} is not monic")
        self.poly = tuple(f)
        self.degree = len(f) - 1
        self.normal = bool(normal)
        if certificate_reason is not None:
            self.certificate = CERTIFIED
            self.certificate_reason = certificate_reason
        else:
            ok, _ = degree_pattern_sieve(list(f))
            if ok:
                self.certificate = CERTIFIED
                self.certificate_reason = "degree-pattern sieve"
            elif assert_irreducible:
                if P.discriminant(list(f)) == 0:
                    raise InputError(f"{P.to_str(f)} has a repeated factor")
                self.certificate = USER_ASSERTED
                self.certificate_reason = "asserted by caller"
            else:
                raise NotCertified(
                    f"could not certify irreducibility of {P.to_str(f)}; "
                    "pass --assert-irreducible to proceed"
                )

    def __repr__(self):
        return f"NumberField({P.to_str(self.poly)})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def __getstate__(self):
        state = dict(self.__dict__)
        for key in ("_reduction", "poly_discriminant"):
            state.pop(key, None)
        return state

    @cached_property
    def poly_discriminant(self):
        return P.discriminant(list(self.poly))

    @cached_property
    def _reduction(self):
        # rows: power-basis coordinates of theta^k for k = d .. 2d-2
        d = self.degree
        rows = []
        cur = [-c for c in self.poly[:d]]
        for _ in range(max(d - 1, 1)):
            rows.append(cur)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * a for c, a in zip(cur, self.poly[:d])]
        return rows

    def reduce(self, coeffs):
        """Power-basis coordinates of a polynomial in theta."""
        d = self.degree
        coeffs = list(coeffs)
        out = coeffs[:d] + [0] * (d - len(coeffs[:d]))
        red = self._reduction
        for k, c in enumerate(coeffs[d:]):
            if c:
                row = red[k] if k < len(red) else None
                if row is None:
                    return self.reduce(P.rem(coeffs, list(self.poly)))
                for i in range(d):
                    out[i] += c * row[i]
        return out

    def __call__(self, coords):
        return FieldElement(self, coords)

    def from_poly(self, coeffs):
        return FieldElement(self, self.reduce(coeffs))

    @property
    def one(self):
        return FieldElement(self, [1])

    @property
    def zero(self):
        return FieldElement(self, [])

    @property
    def gen(self):
        return self.from_poly([0, 1])

    def power_sum_traces(self, k_max):
        """``[Tr(theta^0), ..., Tr(theta^k_max)]`` by Newton's identities."""
        d = self.degree
        a = self.poly  # monic: a[d] == 1
        out = [Fraction(d)]
        for k in range(1, k_max + 1):
            s = 0
            for i in range(1, min(k, d + 1)):
                s += a[d - i] * out[k - i]
            if k <= d:
                s += k * a[d - k]
            out.append(Fraction(-s))
        return out

    @cached_property
    def trace_vector(self):
        return self.power_sum_traces(self.degree - 1)


class FieldElement:
    """Element of a :class:`NumberField` in power-basis coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        d = field.degree
        coords = [Fraction(c) for c in coords]
        if len(coords) > d:
            raise ValueError(f"expected at most {d} coordinates, got {len(coords)}")
        coords += [Fraction(0)] * (d - len(coords))
        self.field = field
        self.coords = tuple(coords)

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, [other])
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __repr__(self):
        return f"FieldElement({self.to_str()})"

    def to_str(self, var="t"):
        return P.to_str(P.strip(self.coords), var)

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((self.field.poly, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, [a + b for a, b in zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.field, [a - b for a, b in zip(self.coords, other.coords)])

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.field, [a * other for a in self.coords])
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self.field.from_poly(P.mul(P.strip(self.coords), P.strip(other.coords)))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise DivisionByZero("inverse of zero")
        # extended Euclid of a(x) against f(x) over Q
        r0, r1 = list(self.field.poly), P.strip(self.coords)
        s0, s1 = [], [1]
        while len(r1) > 1:
            q, r = P.divmod_q(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, P.sub(s0, P.mul(q, s1))
        if not r1:
            raise DivisionByZero("element is a zero divisor; defining polynomial is reducible")
        return self.field.from_poly(P.scale(s1, Fraction(1) / r1[0]))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by zero")
            return FieldElement(self.field, [a / other for a in self.coords])
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out, base = self.field.one, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mul_matrix(self):
        """Rows: coordinates of ``self * theta^i``."""
        rows = []
        cur = P.strip(self.coords)
        for _ in range(self.field.degree):
            rows.append(self.field.reduce(cur))
            cur = [0] + list(self.field.reduce(cur))
        return [[Fraction(x) for x in r] for r in rows]

    def trace(self):
        m = self.mul_matrix()
        return sum(m[i][i] for i in range(len(m)))

    def norm(self):
        return Fraction(mat.det(self.mul_matrix()))

    def min_poly(self):
        """Monic minimal polynomial over Q as an ascending Fraction list."""
        d = self.field.degree
        vectors = [list(self.field.one.coords)]
        cur = self.field.one
        for k in range(1, d + 1):
            cur = cur * self
            vectors.append(list(cur.coords))
            kernel = mat.left_kernel(vectors)
            if kernel:
                rel = kernel[0]
                lead = rel[k]
                return [c / lead for c in rel]
        raise AssertionError("Krylov sequence did not close within the degree")

    def char_poly(self):
        m = self.min_poly()
        return P.power(m, self.field.degree // (len(m) - 1))

    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self.min_poly())

    def is_rational(self):
        return not any(self.coords[1:])
