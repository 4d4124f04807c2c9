"""Exact integer/rational matrices as lists of row lists.

Integer matrices hold ``int`` entries, rational ones ``Fraction``. Nothing
here mutates its arguments.
"""

from fractions import Fraction

from ..errors import SingularMatrix


def identity(n, one=1):
    return [[one if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vecmat(v, m):
    """Row vector times matrix."""
    if not m:
        return []
    out = [0] * len(m[0])
    for c, row in zip(v, m):
        if c:
            for j, x in enumerate(row):
                out[j] += c * x
    return out


def scale(m, c):
    return [[c * x for x in row] for row in m]


def to_fractions(m):
    return [[Fraction(x) for x in row] for row in m]


def common_denominator(m):
    from math import lcm

    den = 1
    for row in m:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    return den


def clear_denominators(m):
    """Return ``(den, int_matrix)`` with ``m == int_matrix / den``."""
    den = common_denominator(m)
    return den, [[int(Fraction(x) * den) for x in row] for row in m]


def hnf(m):
    """Row-style Hermite normal form of the row lattice of an integer matrix.

    The result is upper triangular (in echelon sense) with positive pivots,
    every entry above a pivot reduced into ``[0, pivot)``, and zero rows
    removed.

    >>> hnf([[4, 0], [2, 2]])
    [[2, 2], [0, 4]]
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    pivots = []
    for j in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if a[i][j]]
            if not nz:
                break
            k = min(nz, key=lambda i: abs(a[i][j]))
            a[r], a[k] = a[k], a[r]
            piv = a[r][j]
            done = True
            for i in range(r + 1, rows):
                if a[i][j]:
                    q = a[i][j] // piv
                    if q:
                        ri, rr = a[i], a[r]
                        a[i] = [x - q * y for x, y in zip(ri, rr)]
                    if a[i][j]:
                        done = False
            if done:
                break
        if r < rows and a[r][j]:
            if a[r][j] < 0:
                a[r] = [-x for x in a[r]]
            piv = a[r][j]
            for i in range(r):
                q = a[i][j] // piv
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            pivots.append(j)
            r += 1
    return [row for row in a[:r]]


def hnf_lower(m):
    """HNF normalized from the last column backwards.

    Equivalent to :func:`hnf` after reversing the column order. For a
    full-rank square lattice the result is lower triangular with positive
    diagonal, and the entries below each pivot are reduced into
    ``[0, pivot)``. Orders use this form so their first basis vector is 1.
    """
    rev = [row[::-1] for row in m]
    h = hnf(rev)
    return [row[::-1] for row in h][::-1]


def det(m):
    """Exact determinant (Fraction for rational input, int for integer input)."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    integral = all(isinstance(x, int) for row in m for x in row)
    if integral:
        return _bareiss(m)
    a = to_fractions(m)
    result = Fraction(1)
    for j in range(n):
        k = next((i for i in range(j, n) if a[i][j]), None)
        if k is None:
            return Fraction(0)
        if k != j:
            a[j], a[k] = a[k], a[j]
            result = -result
        piv = a[j][j]
        result *= piv
        for i in range(j + 1, n):
            if a[i][j]:
                f = a[i][j] / piv
                a[i] = [x - f * y for x, y in zip(a[i], a[j])]
    return result


def _bareiss(m):
    a = [list(row) for row in m]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(m):
    """Exact inverse over Q; raises :class:`SingularMatrix`."""
    n = len(m)
    a = [to_fractions([row])[0] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for j in range(n):
        k = next((i for i in range(j, n) if a[i][j]), None)
        if k is None:
            raise SingularMatrix("matrix is singular")
        a[j], a[k] = a[k], a[j]
        piv = a[j][j]
        a[j] = [x / piv for x in a[j]]
        for i in range(n):
            if i != j and a[i][j]:
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[j])]
    return [row[n:] for row in a]


def rref(m):
    """Reduced row echelon form over Q: ``(rows, pivot_columns)``."""
    a = to_fractions(m)
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    pivots = []
    for j in range(cols):
        k = next((i for i in range(r, rows) if a[i][j]), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        piv = a[r][j]
        a[r] = [x / piv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][j]:
                f = a[i][j]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
        if r == rows:
            break
    return a[:r], pivots


def rank(m):
    return len(rref(m)[1]) if m else 0


def left_kernel(m):
    """Basis of ``{v : v m = 0}`` over Q."""
    return right_kernel(transpose(m)) if m else []


def right_kernel(m):
    """Basis of ``{v : m v = 0}`` over Q."""
    if not m:
        return []
    cols = len(m[0])
    red, pivots = rref(m)
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * cols
        v[fcol] = Fraction(1)
        for row, pcol in zip(red, pivots):
            v[pcol] = -row[fcol]
        basis.append(v)
    return basis


def solve_left(m, b):
    """Solve ``x m = b`` for a square invertible ``m`` over Q."""
    return vecmat(b, inverse(m))


# --- linear algebra over F_p -------------------------------------------------


def rref_mod_p(m, p):
    a = [[x % p for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    r = 0
    pivots = []
    for j in range(cols):
        k = next((i for i in range(r, rows) if a[i][j]), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        inv = pow(a[r][j], -1, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][j]:
                f = a[i][j]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        pivots.append(j)
        r += 1
        if r == rows:
            break
    return a[:r], pivots


def right_kernel_mod_p(m, p, cols=None):
    """Basis of ``{v : m v = 0}`` over F_p."""
    if not m:
        return [[int(i == j) for j in range(cols)] for i in range(cols)]
    cols = len(m[0])
    red, pivots = rref_mod_p(m, p)
    free = [j for j in range(cols) if j not in pivots]
    basis = []
    for fcol in free:
        v = [0] * cols
        v[fcol] = 1
        for row, pcol in zip(red, pivots):
            v[pcol] = -row[fcol] % p
        basis.append(v)
    return basis


def left_kernel_mod_p(m, p):
    """Basis of ``{v : v m = 0}`` over F_p; ``m`` must have at least one row."""
    cols = len(m[0]) if m else 0
    if cols == 0:
        return [[int(i == j) for j in range(len(m))] for i in range(len(m))]
    return right_kernel_mod_p(transpose(m), p)


def rank_mod_p(m, p):
    return len(rref_mod_p(m, p)[1]) if m else 0
