"""Trace index, codifferent/different, ramification and the trace theorems.

Every ``*_check`` / ``*_report`` function returns verdicts instead of
raising: a ``False`` verdict means the implementation disagrees with a
proved statement, which callers treat as a bug.
"""

from dataclasses import dataclass, field as dc_field
from itertools import combinations

from .arith import matrix as mat
from .arith.integers import bezout_list, factorint, gcd_list, valuation as int_valuation
from .ideal import FractionalIdeal, decompose_prime, valuation
from .order import maximal_order


# ---------------------------------------------------------------- trace index


def _witness_key(u):
    return (max((abs(x) for x in u), default=0), sum(abs(x) for x in u), [-x for x in u])


def _reduce_witness(u, kernel):
    """Greedy descent of ``max |u_i|`` over the coset ``u + kernel``."""
    moves = [k for k in kernel]
    moves += [[a + b for a, b in zip(k1, k2)] for k1, k2 in combinations(kernel, 2)]
    moves += [[a - b for a, b in zip(k1, k2)] for k1, k2 in combinations(kernel, 2)]
    moves += [[-x for x in m] for m in moves]
    best = list(u)
    improved = True
    while improved:
        improved = False
        for m in moves:
            cand = [a + b for a, b in zip(best, m)]
            if _witness_key(cand) < _witness_key(best):
                best, improved = cand, True
    return best


def trace_index(order):
    """``(t_L, witness)`` with ``Tr(O_L) = t_L Z`` and ``Tr(witness) = t_L``.

    ``t_L`` is the gcd of the basis traces. The witness starts from a
    Bezout combination and is moved inside its coset modulo the trace-zero
    sublattice to a representative with small coordinates.
    """
    cached = getattr(order, "_trace_index", None)
    if cached is not None:
        return cached
    tr = order.traces
    d = len(tr)
    rows = [[tr[i]] + [int(i == j) for j in range(d)] for i in range(d)]
    h = mat.hnf(rows)
    t = h[0][0]
    assert t == gcd_list(tr) and t == bezout_list(tr)[0]
    u = h[0][1:]
    kernel = [row[1:] for row in h[1:]]
    u = _reduce_witness(u, kernel)
    witness = order.element(u)
    assert sum(a * b for a, b in zip(u, tr)) == t
    order._trace_index = (t, witness)
    return t, witness


def witness_coordinates(order):
    t, w = trace_index(order)
    return [int(c) for c in order.coordinates(w)]


# ------------------------------------------------------- codifferent/different


@dataclass
class DifferentData:
    codifferent: FractionalIdeal
    different: FractionalIdeal
    norm_of_different: int


def codifferent(order):
    """Span of the trace-dual basis of the integral basis."""
    cached = getattr(order, "_codifferent", None)
    if cached is None:
        gram = order.gram_matrix()
        dual = mat.inverse(gram)  # rows: dual basis in integral-basis coordinates
        cached = FractionalIdeal.from_lattice(order, dual)
        order._codifferent = cached
    return cached


def different(order):
    cached = getattr(order, "_different", None)
    if cached is not None:
        return cached
    cod = codifferent(order)
    diff = cod.inverse()
    norm = diff.norm()
    if not diff.is_integral:
        raise ArithmeticError("different is not integral")
    if norm != abs(order.discriminant):
        raise ArithmeticError("norm of the different differs from |disc|")
    data = DifferentData(cod, diff, int(norm))
    order._different = data
    return data


def different_content(order):
    """Largest rational integer n with D_L contained in n O_L."""
    return int(different(order).different.content())


# ------------------------------------------------------------ ramification


def ramified_primes(order):
    return list(factorint(order.discriminant).keys())


def relevant_primes(order):
    """Primes dividing disc(L) or the degree, ascending."""
    ps = set(ramified_primes(order)) | set(factorint(order.degree).keys() if order.degree > 1 else [])
    return sorted(ps)


def primes_above(order, p):
    cache = order.__dict__.setdefault("_primes_above", {})
    if p not in cache:
        cache[p] = decompose_prime(order, p)
    return cache[p]


def wild_primes(order):
    return [p for p in ramified_primes(order) if any(P.e % p == 0 for P in primes_above(order, p))]


def is_tame(order):
    return not wild_primes(order)


def lemma2_interval(p, e):
    if e % p:
        return (e - 1, e - 1)
    return (e, e - 1 + e * int_valuation(e, p))


def different_valuations(order, p):
    diff = different(order).different
    return [valuation(diff, P) for P in primes_above(order, p)]


# --------------------------------------------------------------- lemmas


def lemma1_check(order):
    """D_L in t_L O_L, and every n with D_L in n O_L divides t_L."""
    t, _ = trace_index(order)
    diff = different(order).different
    inclusion = all(x % t == 0 for row in diff.hnf for x in row)
    n = different_content(order)
    return inclusion and t % n == 0


def lemma2_check(order, p):
    """``[(prime, v_P(D_L), verdict), ...]`` for the primes above ``p``."""
    out = []
    for P, v in zip(primes_above(order, p), different_valuations(order, p)):
        lo, hi = lemma2_interval(p, P.e)
        out.append((P, v, lo <= v <= hi))
    return out


def lemma3_check(order):
    """At every tame p, v_p(disc) = sum (e-1) f < d."""
    disc = factorint(order.discriminant)
    ok = True
    for p in ramified_primes(order):
        primes = primes_above(order, p)
        if any(P.e % p == 0 for P in primes):
            continue
        exponent = sum((P.e - 1) * P.f for P in primes)
        ok &= exponent == disc.get(p, 0) and exponent < order.degree
    return ok


def disc_exponent_check(order):
    """v_p(disc) = sum f * v_P(D_L) for every ramified p."""
    disc = factorint(order.discriminant)
    for p, k in disc.items():
        vs = different_valuations(order, p)
        if sum(P.f * v for P, v in zip(primes_above(order, p), vs)) != k:
            return False
    return True


# --------------------------------------------------------------- theorems


def _all_divisible(order, p):
    return all(P.e % p == 0 for P in primes_above(order, p))


def theorem1_criterion(order):
    """Some prime p | d divides every e_i above p.

    Returns ``(verdict, certificate)``; the certificate lists the pattern of
    each prime factor of d and names the first prime that works.
    """
    d = order.degree
    patterns = {}
    witness = None
    for p in factorint(d).keys() if d > 1 else []:
        patterns[p] = [(P.e, P.f) for P in primes_above(order, p)]
        if witness is None and _all_divisible(order, p):
            witness = p
    return witness is not None, {"p": witness, "patterns": patterns}


def theorem1_iii(order):
    """Some prime p at all (not only p | d) divides every e_i above it."""
    return any(_all_divisible(order, p) for p in ramified_primes(order))


@dataclass
class Theorem2Report:
    A: bool
    B: bool
    C: bool
    A_implies_B: bool
    B_implies_C: bool
    B_implies_A: bool = None  # only checked when d is prime or d == 4
    C_implies_A: bool = None  # only checked for fields declared normal

    @property
    def ok(self):
        checks = [self.A_implies_B, self.B_implies_C, self.B_implies_A, self.C_implies_A]
        return all(c is not False for c in checks)


def _is_prime_int(n):
    return n > 1 and factorint(n) == {n: 1}


def theorem2_report(order, normal=None):
    if normal is None:
        normal = order.field.normal
    t, _ = trace_index(order)
    d = order.degree
    disc = factorint(order.discriminant)
    A = t >= 2
    B = any(disc.get(p, 0) >= d for p in (factorint(d) if d > 1 else {}))
    C = not is_tame(order)
    rep = Theorem2Report(A, B, C, (not A) or B, (not B) or C)
    if _is_prime_int(d) or d == 4:
        rep.B_implies_A = (not B) or A
    if normal:
        rep.C_implies_A = (not C) or A
    return rep


def uniformly_ramified_check(order):
    """``[(p, uniform), ...]`` over ramified primes, plus the uniform-ramification verdict."""
    t, _ = trace_index(order)
    rows = []
    ok = True
    for p in ramified_primes(order):
        es = {P.e for P in primes_above(order, p)}
        uniform = len(es) == 1
        wild = any(e % p == 0 for e in es)
        if wild and uniform:
            ok &= t >= 2
        if order.field.normal:
            ok &= uniform
        rows.append((p, uniform))
    return rows, ok


def eisenstein_detect(f):
    """Primes p dividing deg f at which the monic ``f`` is Eisenstein."""
    f = list(f)
    d = len(f) - 1
    if d < 1:
        return []
    out = []
    for p in factorint(d) if d > 1 else {}:
        if all(c % p == 0 for c in f[:-1]) and f[0] % (p * p) != 0:
            out.append(p)
    return out


def eisenstein_check(order):
    """Eisenstein primes are totally ramified and divide t_L."""
    t, _ = trace_index(order)
    ok = True
    for p in eisenstein_detect(order.field.poly):
        primes = primes_above(order, p)
        ok &= len(primes) == 1 and primes[0].e == order.degree and t % p == 0
    return ok


# --------------------------------------------------------------- report


@dataclass
class PrimeRow:
    p: int
    ef: list  # [(e, f), ...]
    v_different: list
    intervals: list
    tame_at_p: bool
    theorem1_at_p: bool


@dataclass
class TraceReport:
    field: object
    order: object
    t_L: int
    witness: object
    integral_basis_traces: list
    per_prime: list
    flags: dict
    theorem2: Theorem2Report
    verdicts: dict = dc_field(default_factory=dict)

    @property
    def tame(self):
        return not self.flags["C"]

    @property
    def ok(self):
        return all(self.verdicts.values())


def analyze(field):
    """Compute every invariant of ``field`` and run all theorem checks."""
    order = maximal_order(field)
    t, w = trace_index(order)
    dd = different(order)
    rows = []
    for p in relevant_primes(order):
        primes = primes_above(order, p)
        vs = different_valuations(order, p)
        rows.append(
            PrimeRow(
                p=p,
                ef=[(P.e, P.f) for P in primes],
                v_different=vs,
                intervals=[lemma2_interval(p, P.e) for P in primes],
                tame_at_p=all(P.e % p for P in primes),
                theorem1_at_p=all(P.e % p == 0 for P in primes),
            )
        )
    thm1, _ = theorem1_criterion(order)
    thm2 = theorem2_report(order)
    lemma2 = all(v for p in ramified_primes(order) for _, _, v in lemma2_check(order, p))
    d = order.degree
    disc = order.discriminant
    _, uniform_ok = uniformly_ramified_check(order)
    verdicts = {
        "thm1": thm1 == (t >= 2),
        "thm1_iii": theorem1_iii(order) == (t >= 2),
        "thm2_chain": thm2.ok,
        "lemma1": lemma1_check(order),
        "lemma2": lemma2,
        "lemma3": lemma3_check(order),
        "norm_different": dd.norm_of_different == abs(disc),
        "disc_exponents": disc_exponent_check(order),
        "t_divides_d": d % t == 0 and disc % (t**d) == 0,
        "witness_trace": w.trace() == t,
        "uniform_ramification": uniform_ok,
        "eisenstein": eisenstein_check(order),
        "index_identity": field.poly_discriminant == order.index**2 * disc,
    }
    flags = {"A": thm2.A, "B": thm2.B, "C": thm2.C}
    return TraceReport(field, order, t, w, list(order.traces), rows, flags, thm2, verdicts)

