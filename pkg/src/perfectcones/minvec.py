"""Exact bounded-norm vector enumeration for positive definite forms.

Fincke-Pohst with a rational LDL^T decomposition; no floating point is ever
used for a decision (floats only seed the integer interval endpoints, which
are then corrected exactly).
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPositiveDefinite
from . import forms, matops


@dataclass(frozen=True)
class MinData:
    form: tuple
    min_norm: object          # exact int or Fraction
    vectors: tuple            # one sign-canonical vector per +- pair, lex sorted


def _ldl(a):
    """q(x) = sum_i d[i] * (x_i + sum_{j>i} c[i][j] x_j)^2; raises if not pd."""
    n = len(a)
    q = [[Fraction(x) for x in row] for row in a]
    d = [Fraction(0)] * n
    c = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = q[i][i]
        if d[i] <= 0:
            raise NotPositiveDefinite("pivot %s at index %d" % (d[i], i))
        for j in range(i + 1, n):
            c[i][j] = q[i][j] / d[i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= d[i] * c[i][k] * c[i][l]
    return d, c


def _int_range(center, radius2):
    """Integers x with (x + center)^2 <= radius2, exactly (center, radius2 rational).

    Returns (lo, hi), empty when lo > hi. Floats only seed the endpoints; the
    exact comparisons below move them at most a step or two, and the lo/hi
    guards keep the shrinking loops finite when the interval is empty.
    """
    if radius2 < 0:
        return 1, 0
    approx = float(radius2) ** 0.5
    hi = int(-float(center) + approx)
    lo = int(-float(center) - approx)
    while (hi + 1 + center) ** 2 <= radius2:
        hi += 1
    while (lo - 1 + center) ** 2 <= radius2:
        lo -= 1
    while hi >= lo and (hi + center) ** 2 > radius2:
        hi -= 1
    while hi >= lo and (lo + center) ** 2 > radius2:
        lo += 1
    if hi < lo or (hi + center) ** 2 > radius2 or (lo + center) ** 2 > radius2:
        return 1, 0
    return lo, hi


def size_reduce(a):
    """Integral shears pushing |a_ij| <= a_ii / 2 heuristically.

    Returns (reduced, U) with reduced == U^T a U; pure accelerator, the
    reduced form is equivalent to the input.
    """
    g = len(a)
    m = [list(row) for row in a]
    u = [list(row) for row in matops.identity(g)]
    changed = True
    rounds = 0
    while changed and rounds < 64:
        changed = False
        rounds += 1
        for i in range(g):
            for j in range(g):
                if i == j or m[i][i] == 0:
                    continue
                # x_j -> x_j - t x_i with t = round(m[i][j] / m[i][i])
                t = (2 * m[i][j] + m[i][i]) // (2 * m[i][i])
                if t != 0 and abs(2 * (m[i][j] - t * m[i][i])) < abs(2 * m[i][j]):
                    for k in range(g):
                        m[k][j] -= t * m[k][i]
                    for k in range(g):
                        m[j][k] -= t * m[i][k]
                    for k in range(g):
                        u[k][j] -= t * u[k][i]
                    changed = True
    return tuple(tuple(row) for row in m), tuple(tuple(row) for row in u)


def _enumerate(a, bound):
    """All nonzero integer vectors with q(x) <= bound, one per +- pair."""
    n = len(a)
    d, c = _ldl(a)
    bound = Fraction(bound)
    out = []
    x = [0] * n

    def rec(i, remaining):
        if i < 0:
            if any(v != 0 for v in x):
                vec = matops.canon_sign(tuple(x))
                if tuple(x) == vec:
                    val = bound - remaining
                    out.append((vec, int(val) if val.denominator == 1 else val))
            return
        center = sum(c[i][j] * x[j] for j in range(i + 1, n))
        lo, hi = _int_range(center, remaining / d[i])
        for xi in range(lo, hi + 1):
            x[i] = xi
            rec(i - 1, remaining - d[i] * (xi + center) ** 2)
        x[i] = 0

    rec(n - 1, bound)
    return out


def vectors_up_to(q, bound):
    """All sign-canonical nonzero x with q(x) <= bound, sorted by (value, lex)."""
    if bound <= 0:
        raise ValueError("bound must be positive")
    if not forms.is_positive_definite(q):
        raise NotPositiveDefinite("form is not positive definite")
    red, u = size_reduce(q)
    found = _enumerate(red, bound)
    # map back: Min-type vectors of red = U^{-1} * those of q, so x = U y
    if u == matops.identity(len(q)):
        res = found
    else:
        res = [(matops.canon_sign(matops.mat_vec(u, y)), v) for y, v in found]
    res.sort(key=lambda t: (t[1], t[0]))
    return res


def min_data(q):
    """Exact minimal norm and the complete set of minimal +- vector pairs."""
    if not forms.is_positive_definite(q):
        raise NotPositiveDefinite("form is not positive definite")
    red, u = size_reduce(q)
    bound = min(red[i][i] for i in range(len(red)))
    found = _enumerate(red, bound)
    m = min(v for _, v in found)
    vecs = [y for y, v in found if v == m]
    if u != matops.identity(len(q)):
        vecs = [matops.canon_sign(matops.mat_vec(u, y)) for y in vecs]
    vecs.sort()
    return MinData(forms.as_form(q), m, tuple(vecs))


def min_data_rational(f):
    """min_data for a positive definite form with rational entries.

    Scales to a primitive integral form internally; the minimal norm is
    rescaled back, the vector set is unchanged by scaling.
    """
    from math import gcd
    den = 1
    for row in f:
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
    fi = tuple(tuple(int(x * den) for x in row) for row in f)
    g0 = 0
    for row in fi:
        for x in row:
            g0 = gcd(g0, abs(x))
    fi = tuple(tuple(x // g0 for x in row) for row in fi)
    md = min_data(fi)
    scale_back = Fraction(g0, den)
    m = md.min_norm * scale_back
    return MinData(forms.as_form(f), int(m) if isinstance(m, int) or m.denominator == 1 else m,
                   md.vectors)
