"""Rational integer utilities: Bezout, primality, factorization."""

import math
import random
from functools import reduce

from ..errors import BothZero, FactorizationBudgetExceeded, NotPrime

TRIAL_LIMIT = 10**6
# Deterministic Miller-Rabin: the first 13 prime bases are exact below this.
MR_LIMIT = 3317044064679887385961981
# Moduli accepted for arithmetic in F_p.
MODULUS_LIMIT = 330 * 10**12

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def int_gcd_bezout(a, b):
    """Return ``(g, u, v)`` with ``u*a + v*b == g == gcd(a, b) > 0``.

    ``u`` is normalized into ``|u| <= |b| / (2g)`` (ties go to the positive
    value) so the result does not depend on the Euclid variant.

    >>> int_gcd_bezout(3, 2)
    (1, 1, -1)
    >>> int_gcd_bezout(-5, 0)
    (5, -1, 0)
    """
    if a == 0 and b == 0:
        raise BothZero("gcd(0, 0) is undefined")
    if b == 0:
        return abs(a), (1 if a > 0 else -1), 0
    old_r, r = a, b
    old_u, u = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
    g, u = old_r, old_u
    if g < 0:
        g, u = -g, -u
    m = abs(b) // g
    u %= m
    if 2 * u > m:
        u -= m
    v = (g - u * a) // b
    return g, u, v


def gcd_list(values):
    return reduce(math.gcd, values, 0)


def lcm_list(values):
    return reduce(lambda x, y: x * y // math.gcd(x, y) if x and y else 0, values, 1)


def bezout_list(values):
    """Return ``(g, coeffs)`` with ``sum(c*x) == g == gcd(values)``."""
    g, coeffs = 0, []
    for x in values:
        if g == 0 and x == 0:
            coeffs.append(0)
            continue
        if g == 0:
            g, coeffs = abs(x), coeffs + [1 if x > 0 else -1]
            continue
        g2, u, v = int_gcd_bezout(g, x)
        coeffs = [c * u for c in coeffs] + [v]
        g = g2
    return g, coeffs


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]


_SIEVE_BOUND = 1000
SMALL_PRIMES = _small_primes(_SIEVE_BOUND)


def first_primes(count, skip=()):
    """The first ``count`` primes not dividing anything in ``skip``."""
    out = []
    p = 1
    while len(out) < count:
        p = next_prime(p)
        if all(s % p for s in skip):
            out.append(p)
    return out


def next_prime(n):
    n += 1
    while not is_probable_prime(n):
        n += 1
    return n


def _miller_rabin(n, bases):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_probable_prime(n):
    """Exact primality for ``n < 3.3e24``; strong probable prime above."""
    if n < 2:
        return False
    for p in SMALL_PRIMES[:25]:
        if n % p == 0:
            return n == p
    return _miller_rabin(n, _MR_BASES)


def check_prime(p):
    """Raise :class:`NotPrime` unless ``p`` is a prime usable as a modulus."""
    if not isinstance(p, int) or p < 2:
        raise NotPrime(f"{p!r} is not a prime")
    if p > MODULUS_LIMIT:
        raise NotPrime(f"{p} exceeds the supported modulus bound {MODULUS_LIMIT}")
    if p < TRIAL_LIMIT:
        if p <= _SIEVE_BOUND:
            ok = p in _SMALL_SET
        else:
            ok = all(p % q for q in SMALL_PRIMES if q * q <= p) and _trial(p)
    else:
        ok = _miller_rabin(p, _MR_BASES)
    if not ok:
        raise NotPrime(f"{p} is not a prime")
    return p


_SMALL_SET = frozenset(SMALL_PRIMES)


def _trial(n):
    q = _SIEVE_BOUND + 1
    while q * q <= n:
        if n % q == 0:
            return False
        q += 2
    return True


def _pollard_rho(n, rng, max_steps=1 << 20):
    """Brent's variant; returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    for _ in range(8):
        c = rng.randrange(1, n)
        y = x = rng.randrange(0, n)
        g, r, q, steps = 1, 1, 1, 0
        ys = y
        while g == 1 and steps < max_steps:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += 128
            steps += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorint(n, rho_budget=64):
    """Factor ``|n|`` into ``{prime: exponent}``.

    Trial division by primes up to 10**6, then Pollard rho on the cofactor.
    Raises :class:`FactorizationBudgetExceeded` when rho gives up or a
    cofactor is too large for the deterministic primality test.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out = {}
    for p in SMALL_PRIMES:
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    q = _SIEVE_BOUND + 1
    while n > 1 and q <= TRIAL_LIMIT and q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 2
    if n == 1:
        return dict(sorted(out.items()))
    rng = random.Random(n)
    stack = [n]
    attempts = 0
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if m < TRIAL_LIMIT**2 or is_probable_prime(m):
            if m >= MR_LIMIT:
                raise FactorizationBudgetExceeded(
                    f"cofactor {m} too large for certified primality"
                )
            if m < TRIAL_LIMIT**2 and not is_probable_prime(m):
                raise AssertionError("trial division left a composite")
            out[m] = out.get(m, 0) + 1
            continue
        attempts += 1
        if attempts > rho_budget:
            raise FactorizationBudgetExceeded(f"could not split {m}")
        d = _pollard_rho(m, rng)
        if d is None:
            raise FactorizationBudgetExceeded(f"could not split {m}")
        stack.extend([d, m // d])
    return dict(sorted(out.items()))


def valuation(n, p):
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def squarefree_kernel(n):
    """Signed squarefree part: ``n = kernel * k**2``."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    out = 1
    for p, e in factorint(n).items():
        if e % 2:
            out *= p
    return sign * out


def is_squarefree(n):
    return n != 0 and all(e == 1 for e in factorint(n).values())


def is_square(n):
    return n >= 0 and math.isqrt(n) ** 2 == n


def format_factored(n, factors=None):
    """``-173056 -> '-2^10 * 13^2'``."""
    if n == 0:
        return "0"
    if factors is None:
        factors = factorint(n)
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in factors.items()]
    body = " * ".join(parts) if parts else "1"
    return ("-" if n < 0 else "") + body
