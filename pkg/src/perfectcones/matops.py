"""Exact integer / rational matrix utilities.

Matrices are tuples of tuples (immutable, hashable); vectors are tuples.
Entries are python ints or fractions.Fraction -- never floats.
"""

from fractions import Fraction
from math import gcd


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a))


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(v, c):
    return tuple(c * x for x in v)


def vec_neg(v):
    return tuple(-x for x in v)


def canon_sign(v):
    """Flip sign so the first nonzero coordinate is positive."""
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(-y for y in v)
    return tuple(v)


def gcd_vec(v):
    g = 0
    for x in v:
        g = gcd(g, abs(int(x)))
    return g


def is_primitive(v):
    return gcd_vec(v) == 1


def primitive_vector(v):
    """Scale a nonzero rational vector to a primitive integer vector, keeping direction."""
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = den * x.denominator // gcd(den, x.denominator)
    w = [int(x * den) for x in v]
    g = gcd_vec(w)
    if g == 0:
        raise ValueError("zero vector")
    return tuple(x // g for x in w)


def rank(a):
    """Rank over Q by fraction Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in a]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == nrows:
            break
    return r


def det(a):
    """Determinant over Q (exact)."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    d = Fraction(1)
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    if d.denominator == 1:
        return int(d)
    return d


def inverse(a):
    """Exact inverse over Q. Raises ValueError when singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def is_unimodular(u):
    return all(isinstance(x, int) or Fraction(x).denominator == 1 for row in u for x in row) \
        and det(u) in (1, -1)


def solve(a, b):
    """One exact solution x of a x = b over Q, or None when inconsistent.

    Free variables are set to 0.
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, nrows):
        if m[i][ncols] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(piv_cols):
        x[c] = m[i][ncols]
    return tuple(x)


def hnf_rows(a):
    """Row-style Hermite normal form of an integer matrix.

    Returns (H, U) with U unimodular, U a = H, H in row HNF (pivots positive,
    entries above a pivot reduced into [0, pivot)).
    """
    m = [list(map(int, row)) for row in a]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    u = [list(row) for row in identity(nrows)]
    r = 0
    for c in range(ncols):
        # euclidean elimination in column c below row r
        while True:
            nz = [i for i in range(r, nrows) if m[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(m[i][c]), i))
            if piv != r:
                m[r], m[piv] = m[piv], m[r]
                u[r], u[piv] = u[piv], u[r]
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
                u[r] = [-x for x in u[r]]
            done = True
            for i in range(r + 1, nrows):
                if m[i][c] != 0:
                    q = m[i][c] // m[r][c]
                    if q:
                        m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                        u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if m[i][c] != 0:
                        done = False
            if done:
                break
        if r < nrows and m[r][c] != 0:
            # reduce entries above the pivot
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
            if r == nrows:
                break
    return tuple(tuple(row) for row in m), tuple(tuple(row) for row in u)


def integer_kernel(a):
    """Basis of the saturated lattice {x in Z^n : a x = 0}, rows in HNF shape."""
    at = transpose(a)  # kernel of a = left kernel of a^T
    h, u = hnf_rows(at)
    ker = [u[i] for i in range(len(h)) if all(x == 0 for x in h[i])]
    if not ker:
        return ()
    hk, _ = hnf_rows(ker)
    return tuple(row for row in hk if any(x != 0 for x in row))


def saturation_basis(vectors):
    """Basis (rows) of the saturation of the span of the given integer vectors."""
    perp = integer_kernel(vectors)
    if not perp:
        # vectors span Q^n
        n = len(vectors[0])
        return identity(n)
    return integer_kernel(perp)


def int_inverse(u):
    """Inverse of a unimodular integer matrix, with integer entries."""
    inv = inverse(u)
    return tuple(tuple(int(x) for x in row) for row in inv)


def extend_to_unimodular(rows):
    """Extend a basis of a saturated sublattice (given as rows) to a basis of Z^n.

    Returns a unimodular matrix whose first len(rows) rows are the input rows.
    """
    k = len(rows)
    n = len(rows[0])
    # column HNF: rows * V^T = [T | 0] with V unimodular
    _, v = hnf_rows(transpose(rows))
    u = transpose(v)              # rows * u = [T | 0], T k x k
    t = matmul(rows, u)
    tk = tuple(row[:k] for row in t[:k]) if k else ()
    if k and det(tk) not in (1, -1):
        raise ValueError("input rows are not a saturated basis")
    w = int_inverse(u)            # rows = [T|0] * w
    block = [list(r) + [0] * (n - k) for r in tk] + \
            [[0] * k + [1 if j == i else 0 for j in range(n - k)] for i in range(n - k)]
    m = matmul(tuple(tuple(r) for r in block), w)
    assert m[:k] == tuple(tuple(int(x) for x in r) for r in rows)
    return m
