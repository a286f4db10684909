"""Exact symmetric-form arithmetic.

A quadratic form is stored as its full symmetric Gram matrix A, with
q(x) = x^T A x (no factor-2 convention), so trace_pair(q, xx^T) == q(x).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch
from . import matops


def check_form(a):
    """Validate a symmetric square matrix; returns its dimension."""
    g = len(a)
    if g < 1:
        raise ValueError("empty form")
    for row in a:
        if len(row) != g:
            raise ValueError("non-square matrix")
    for i in range(g):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    return g


def as_form(a):
    """Freeze a matrix-like into a tuple-of-tuples symmetric form."""
    t = tuple(tuple(x for x in row) for row in a)
    check_form(t)
    return t


def evaluate(q, x):
    """q(x) = x^T A x, exact."""
    if len(x) != len(q):
        raise DimensionMismatch("vector length %d vs form dimension %d" % (len(x), len(q)))
    return sum(q[i][j] * x[i] * x[j] for i in range(len(q)) for j in range(len(q)))


def bilinear(q, x, y):
    """The associated bilinear value x^T A y."""
    if len(x) != len(q) or len(y) != len(q):
        raise DimensionMismatch("vector/form dimension mismatch")
    return sum(q[i][j] * x[i] * y[j] for i in range(len(q)) for j in range(len(q)))


def trace_pair(p, f):
    """Sum_{i,j} p[i][j] f[i][j]; satisfies trace_pair(q, rank1(x)) == q(x)."""
    if len(p) != len(f):
        raise DimensionMismatch("form dimensions %d vs %d" % (len(p), len(f)))
    return sum(p[i][j] * f[i][j] for i in range(len(p)) for j in range(len(p)))


def rank1(x):
    """The rank-1 form x x^T."""
    if all(v == 0 for v in x):
        raise ValueError("zero vector has no rank-1 form")
    return tuple(tuple(a * b for b in x) for a in x)


def transform(q, u):
    """U^T q U -- the pullback of q under the change of basis U."""
    ut = matops.transpose(u)
    return matops.matmul(matops.matmul(ut, q), u)


def add(p, q):
    return tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(p, q))


def scale(q, c):
    return tuple(tuple(c * x for x in row) for row in q)


def block_sum(p, q):
    m, n = len(p), len(q)
    top = tuple(tuple(p[i]) + (0,) * n for i in range(m))
    bot = tuple((0,) * m + tuple(q[i]) for i in range(n))
    return top + bot


def primitive_integral(f):
    """Scale a nonzero rational symmetric form to a primitive integral one."""
    den = 1
    for row in f:
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
    m = [[int(x * den) for x in row] for row in f]
    g = 0
    for row in m:
        for x in row:
            g = gcd(g, abs(x))
    if g == 0:
        raise ValueError("zero form")
    return tuple(tuple(x // g for x in row) for row in m)


@dataclass(frozen=True)
class PsdInfo:
    is_psd: bool
    rank: int
    kernel_basis: tuple  # saturated integral basis of the radical, HNF shape


def psd_rank(f):
    """Semidefiniteness, rank and saturated integral kernel of a symmetric form.

    Definiteness is decided by exact LDL^T with symmetric pivoting on the
    largest remaining diagonal entry (ties to the lowest index); the rank is
    that of the matrix, valid also in the indefinite case.
    """
    g = check_form(f)
    a = [[Fraction(x) for x in row] for row in f]
    active = list(range(g))
    is_psd = True
    while active:
        piv = max(active, key=lambda i: (a[i][i], -i))
        d = a[piv][piv]
        if d < 0:
            is_psd = False
            break
        if d == 0:
            # all remaining diagonal entries are 0; psd forces the whole
            # remaining block to vanish
            if any(a[i][j] != 0 for i in active for j in active):
                is_psd = False
            break
        active.remove(piv)
        pivot_row = {j: a[piv][j] for j in active}
        for i in active:
            if a[i][piv] != 0:
                c = a[i][piv] / d
                for j in active:
                    a[i][j] -= c * pivot_row[j]
                a[i][piv] = Fraction(0)
                a[piv][i] = Fraction(0)

    r = matops.rank(f)
    if r == g:
        kernel = ()
    else:
        # clear denominators: kernel is unchanged
        den = 1
        for row in f:
            for x in row:
                if isinstance(x, Fraction):
                    den = den * x.denominator // gcd(den, x.denominator)
        fi = tuple(tuple(int(x * den) for x in row) for row in f)
        kernel = matops.integer_kernel(fi)
    return PsdInfo(is_psd, r, kernel)


def is_positive_definite(f):
    info = psd_rank(f)
    return info.is_psd and info.rank == len(f)


# --- coordinates on the space of symmetric g x g forms -----------------------
#
# sym_vec lists (a_11, ..., a_gg, a_ij for i<j); dual_vec doubles the
# off-diagonal entries so that vec_dot(dual_vec(H), sym_vec(F)) == trace_pair(H, F).

def sym_dim(g):
    return g * (g + 1) // 2


def sym_vec(f):
    g = len(f)
    return tuple(f[i][i] for i in range(g)) + \
        tuple(f[i][j] for i in range(g) for j in range(i + 1, g))


def dual_vec(h):
    g = len(h)
    return tuple(h[i][i] for i in range(g)) + \
        tuple(2 * h[i][j] for i in range(g) for j in range(i + 1, g))


def vec_to_sym(v, g):
    m = [[0] * g for _ in range(g)]
    for i in range(g):
        m[i][i] = v[i]
    k = g
    for i in range(g):
        for j in range(i + 1, g):
            m[i][j] = v[k]
            m[j][i] = v[k]
            k += 1
    return tuple(tuple(row) for row in m)


def dual_vec_to_sym(v, g):
    """Inverse of dual_vec (off-diagonal coordinates are halved)."""
    m = [[Fraction(0)] * g for _ in range(g)]
    for i in range(g):
        m[i][i] = Fraction(v[i])
    k = g
    for i in range(g):
        for j in range(i + 1, g):
            m[i][j] = Fraction(v[k], 2)
            m[j][i] = m[i][j]
            k += 1
    return tuple(tuple(row) for row in m)


def root_form(g):
    """The A_g root form: 2 on the diagonal, -1 on the sub/super diagonal.

    For g = 1 the primitive representative [1] is returned.
    """
    if g == 1:
        return ((1,),)
    return tuple(tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(g))
                 for i in range(g))
