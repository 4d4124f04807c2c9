"""Dense univariate polynomials over Z and Q.

Polynomials are plain lists of coefficients in ascending degree, constant
term first. The zero polynomial is ``[]``. Coefficients are ``int`` or
``fractions.Fraction``; every function returns a normalized list.
"""

from fractions import Fraction


def strip(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(strip(f)) - 1


def lc(f):
    f = strip(f)
    return f[-1] if f else 0


def add(f, g):
    n = max(len(f), len(g))
    return strip([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def neg(f):
    return [-c for c in f]


def sub(f, g):
    return add(f, neg(g))


def scale(f, c):
    return strip([c * a for a in f])


def mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return strip(out)


def power(f, n):
    out, base = [1], list(f)
    while n:
        if n & 1:
            out = mul(out, base)
        base = mul(base, base)
        n >>= 1
    return out


def divmod_q(f, g):
    """Quotient and remainder over Q (exact when ``g`` is monic over Z)."""
    f, g = strip(f), strip(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    lead = g[-1]
    r = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    dg = len(g) - 1
    for k in range(len(f) - len(g), -1, -1):
        c = r[k + dg]
        if c:
            if lead == -1:
                c = -c
            elif lead != 1:
                c = Fraction(c) / lead
            q[k] = c
            for j in range(dg + 1):
                r[k + j] -= c * g[j]
    return strip(q), strip(r[:dg] if dg else [])


def rem(f, g):
    return divmod_q(f, g)[1]


def evaluate(f, x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(f):
    return strip([i * f[i] for i in range(1, len(f))])


def compose(f, g):
    """``f(g(x))``."""
    out = []
    for c in reversed(f):
        out = add(mul(out, g), [c])
    return out


def monic(f):
    f = strip(f)
    if not f:
        return []
    lead = f[-1]
    return [Fraction(c) / lead for c in f]


def gcd_q(f, g):
    """Monic gcd over Q."""
    f, g = strip(f), strip(g)
    while g:
        f, g = g, rem(f, g)
    return monic(f)


def content(f):
    from math import gcd

    out = 0
    for c in f:
        out = gcd(out, int(c))
    return out


def to_int(f):
    """Convert a polynomial with integral Fraction coefficients to ints."""
    out = []
    for c in f:
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"non-integral coefficient {c}")
        out.append(int(c))
    return strip(out)


def resultant(f, g):
    """Exact resultant Res(f, g) by the Euclidean algorithm over Q."""
    f, g = strip(f), strip(g)
    if not f or not g:
        return 0
    res = Fraction(1)
    while True:
        m, n = len(f) - 1, len(g) - 1
        if n == 0:
            res *= Fraction(g[0]) ** m
            break
        r = rem(f, g)
        if not r:
            return 0
        k = len(r) - 1
        if (m * n) % 2:
            res = -res
        res *= Fraction(g[-1]) ** (m - k)
        f, g = g, r
    return int(res) if res.denominator == 1 else res


def discriminant(f):
    """``(-1)^(d(d-1)/2) * Res(f, f') / lc(f)``; an int for integer f."""
    f = strip(f)
    d = len(f) - 1
    if d < 1:
        raise ValueError("discriminant needs degree >= 1")
    if d == 1:
        return 1
    r = Fraction(resultant(f, derivative(f))) / f[-1]
    if (d * (d - 1) // 2) % 2:
        r = -r
    return int(r) if r.denominator == 1 else r


def is_monic_int(f):
    f = strip(f)
    return bool(f) and f[-1] == 1 and all(Fraction(c).denominator == 1 for c in f)


def to_str(f, var="x"):
    """Human-readable form, highest degree first: ``x^2 - x - 1``."""
    f = strip(f)
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
