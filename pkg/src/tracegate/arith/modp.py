"""Polynomials over the prime field F_p and their factorization.

Same list convention as :mod:`tracegate.arith.poly` (ascending, constant
first), with coefficients reduced into ``[0, p)``.
"""

import random

from .integers import check_prime


def reduce(f, p):
    out = [c % p for c in f]
    while out and out[-1] == 0:
        out.pop()
    return out


def add(f, g, p):
    n = max(len(f), len(g))
    return reduce([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def sub(f, g, p):
    n = max(len(f), len(g))
    return reduce([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], p)


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return reduce(out, p)


def scale(f, c, p):
    return reduce([c * a for a in f], p)


def monic(f, p):
    if not f:
        return []
    inv = pow(f[-1], -1, p)
    return reduce([c * inv for c in f], p)


def divmod_p(f, g, p):
    f, g = reduce(f, p), reduce(g, p)
    if not g:
        raise ZeroDivisionError("division by zero polynomial mod p")
    inv = pow(g[-1], -1, p)
    r = list(f)
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 0)
    for k in range(len(f) - 1 - dg, -1, -1):
        c = r[k + dg] * inv % p
        if c:
            q[k] = c
            for j in range(dg + 1):
                r[k + j] = (r[k + j] - c * g[j]) % p
    return reduce(q, p), reduce(r[:dg], p)


def rem(f, g, p):
    return divmod_p(f, g, p)[1]


def quo(f, g, p):
    return divmod_p(f, g, p)[0]


def gcd(f, g, p):
    f, g = reduce(f, p), reduce(g, p)
    while g:
        f, g = g, rem(f, g, p)
    return monic(f, p)


def gcdex(f, g, p):
    """Return ``(h, s, t)`` with ``s*f + t*g == h`` monic gcd."""
    r0, r1 = reduce(f, p), reduce(g, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_p(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], [], []
    inv = pow(r0[-1], -1, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def derivative(f, p):
    return reduce([i * f[i] for i in range(1, len(f))], p)


def pow_mod(f, n, g, p):
    """``f**n mod g`` over F_p."""
    out, base = [1], rem(f, g, p)
    while n:
        if n & 1:
            out = rem(mul(out, base, p), g, p)
        base = rem(mul(base, base, p), g, p)
        n >>= 1
    return rem(out, g, p)


def evaluate(f, x, p):
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def _pth_root(f, p):
    # f is a polynomial in x**p; over F_p the coefficients are their own p-th roots.
    return reduce([f[i] for i in range(0, len(f), p)], p)


def squarefree_decomposition(f, p):
    """Monic squarefree factors ``[(g, k), ...]`` with ``f = lc * prod g**k``."""
    f = monic(reduce(f, p), p)
    out = []
    if len(f) <= 1:
        return out
    _sqf(f, p, 1, out)
    merged = {}
    for g, k in out:
        key = tuple(g)
        merged[key] = merged.get(key, 0) + k
    return [(list(g), k) for g, k in merged.items()]


def _sqf(f, p, mult, out):
    i = 1
    df = derivative(f, p)
    if not df:
        _sqf(_pth_root(f, p), p, mult * p, out)
        return
    c = gcd(f, df, p)
    w = quo(f, c, p)
    while len(w) > 1:
        y = gcd(w, c, p)
        z = quo(w, y, p)
        if len(z) > 1:
            out.append((z, i * mult))
        i += 1
        w, c = y, quo(c, y, p)
    if len(c) > 1:
        _sqf(_pth_root(c, p), p, mult * p, out)


def distinct_degree(f, p):
    """Split a monic squarefree ``f`` into ``[(g, d), ...]``: g = product of degree-d irreducibles."""
    out = []
    x = [0, 1]
    h = x
    d = 0
    while 2 * (d + 1) <= len(f) - 1:
        d += 1
        h = pow_mod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = quo(f, g, p)
            h = rem(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _trace_map(a, d, f, p):
    # a + a^2 + a^4 + ... + a^(2^(d-1)) mod f, for p == 2
    out, cur = list(a), list(a)
    for _ in range(d - 1):
        cur = rem(mul(cur, cur, p), f, p)
        out = add(out, cur, p)
    return out


def equal_degree(f, d, p, rng):
    """Split monic squarefree ``f`` whose irreducible factors all have degree ``d``."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = reduce([rng.randrange(p) for _ in range(n)], p)
        if len(a) < 2:
            continue
        if p == 2:
            b = _trace_map(a, d, f, p)
        else:
            b = sub(pow_mod(a, (p**d - 1) // 2, f, p), [1], p)
        g = gcd(f, b, p)
        if 1 < len(g) < len(f):
            return equal_degree(g, d, p, rng) + equal_degree(quo(f, g, p), d, p, rng)


def factor_mod_p(f, p):
    """Complete factorization of ``f`` over F_p.

    Returns ``[(g, k), ...]`` with each ``g`` monic irreducible, sorted by
    degree then ascending coefficient list. ``lc(f) * prod g**k``
    reconstructs ``f mod p``. Splitting is seeded from ``(p, f)`` so the
    output is reproducible.
    """
    check_prime(p)
    f = reduce(f, p)
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    rng = random.Random(f"{p}:{f}")
    out = []
    for g, k in squarefree_decomposition(f, p):
        for h, d in distinct_degree(g, p):
            for factor in equal_degree(h, d, p, rng):
                out.append((factor, k))
    out.sort(key=lambda t: (len(t[0]), t[0], t[1]))
    return out


def is_irreducible(f, p):
    f = reduce(f, p)
    if len(f) <= 1:
        return False
    fac = factor_mod_p(f, p)
    return len(fac) == 1 and fac[0][1] == 1


def expand(factors, p, lead=1):
    out = [lead % p]
    for g, k in factors:
        for _ in range(k):
            out = mul(out, g, p)
    return out
