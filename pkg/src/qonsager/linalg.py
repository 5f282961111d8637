"""Dense exact linear algebra over the rationals.

Matrices are immutable tuples of row tuples with Fraction entries.
Everything here is exact: no pivot thresholds, no floating point.
Subspaces are represented by their reduced row echelon form, so two
subspaces are equal iff their representations compare equal.
"""

import math
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def mat(rows):
    """Freeze a nested sequence into a matrix of Fractions."""
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def zeros(n, m=None):
    m = n if m is None else m
    return tuple((ZERO,) * m for _ in range(n))


def identity(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def shape(a):
    return (len(a), len(a[0]) if a else 0)


def add(*ms):
    n, m = shape(ms[0])
    return tuple(tuple(sum(mm[i][j] for mm in ms) for j in range(m)) for i in range(n))


def sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def _clear_denominators(a):
    """(integer matrix, common denominator) with a = ints / den."""
    den = 1
    for row in a:
        for x in row:
            d = x.denominator
            if d != 1:
                den = den * d // math.gcd(den, d)
    ints = tuple(tuple(x.numerator * (den // x.denominator) for x in row)
                 for row in a)
    return ints, den


def mul(a, b):
    n, k = shape(a)
    k2, m = shape(b)
    if k != k2:
        raise ValueError("matrix dimension mismatch: %dx%d times %dx%d" % (n, k, k2, m))
    # integer inner arithmetic: one gcd per output entry instead of per product
    ia, da = _clear_denominators(a)
    ib, db = _clear_denominators(b)
    den = da * db
    bt = tuple(zip(*ib))
    return tuple(
        tuple(Fraction(sum(x * y for x, y in zip(row, col)), den) for col in bt)
        for row in ia
    )


def commutator(a, b):
    return sub(mul(a, b), mul(b, a))


def kron(a, b):
    """Kronecker product; the left factor's index varies slowest."""
    na, ma = shape(a)
    nb, mb = shape(b)
    return tuple(
        tuple(a[i // nb][j // mb] * b[i % nb][j % mb] for j in range(ma * mb))
        for i in range(na * nb)
    )


def is_zero(a):
    return all(x == 0 for row in a for x in row)


def flatten(a):
    return tuple(x for row in a for x in row)


def unflatten(v, n, m):
    return tuple(tuple(v[i * m + j] for j in range(m)) for i in range(n))


def apply_to_vector(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


# ---------------------------------------------------------------------------
# row reduction, rank, kernels

def rref(rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns)."""
    work = [list(r) for r in rows]
    n_cols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pr = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = ONE / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    reduced = tuple(tuple(row) for row in work[:r])
    return reduced, tuple(pivots)


def rank(rows):
    return len(rref(rows)[0])


def nullspace(a):
    """Basis of the right kernel {v : a v = 0}, as a tuple of vectors."""
    n, m = shape(a)
    reduced, pivots = rref(a)
    pivot_set = set(pivots)
    free = [c for c in range(m) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * m
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(tuple(v))
    return tuple(basis)


def solve(a, b):
    """One solution of a x = b, or None if inconsistent."""
    n, m = shape(a)
    aug = [list(row) + [bb] for row, bb in zip(a, b)]
    reduced, pivots = rref(aug)
    for row in reduced:
        if all(x == 0 for x in row[:m]) and row[m] != 0:
            return None
    x = [ZERO] * m
    for r, pc in enumerate(pivots):
        if pc < m:
            x[pc] = reduced[r][m]
    return tuple(x)


class IncrementalSpan:
    """Grow a linear span one vector at a time, kept in reduced form."""

    def __init__(self):
        self._rows = []  # (pivot, vector), pivots strictly increasing

    @property
    def dimension(self):
        return len(self._rows)

    def reduce(self, v):
        v = list(v)
        for piv, bv in self._rows:
            if v[piv] != 0:
                f = v[piv] / bv[piv]
                v = [x - f * y for x, y in zip(v, bv)]
        return v

    def insert(self, v):
        """Add v to the span; True iff it enlarged the span."""
        v = self.reduce(v)
        for i, x in enumerate(v):
            if x != 0:
                inv = ONE / x
                v = [y * inv for y in v]
                for j, (piv, bv) in enumerate(self._rows):
                    if bv[i] != 0:
                        f = bv[i]
                        self._rows[j] = (piv, [a - f * b for a, b in zip(bv, v)])
                self._rows.append((i, v))
                self._rows.sort(key=lambda t: t[0])
                return True
        return False

    def contains(self, v):
        return all(x == 0 for x in self.reduce(v))


# ---------------------------------------------------------------------------
# subspaces (canonical form: RREF rows spanning the space)

def span(vectors):
    """Canonical form of the span of the given vectors."""
    if not vectors:
        return ()
    reduced, _ = rref(vectors)
    return reduced


def subspace_sum(*spaces):
    vectors = [v for sp in spaces for v in sp]
    return span(vectors)


def subspace_intersection(u, v):
    """Intersection of two subspaces given by spanning vectors."""
    if not u or not v:
        return ()
    n = len(u[0])
    # columns: coefficients on u-vectors, then on v-vectors
    rows = tuple(
        tuple(u[i][c] for i in range(len(u))) + tuple(-v[j][c] for j in range(len(v)))
        for c in range(n)
    )
    combos = nullspace(rows)
    vectors = []
    for combo in combos:
        vec = [ZERO] * n
        for i in range(len(u)):
            if combo[i] != 0:
                vec = [x + combo[i] * y for x, y in zip(vec, u[i])]
        vectors.append(tuple(vec))
    return span(vectors)


def subspace_dim(sp):
    return len(sp)


# ---------------------------------------------------------------------------
# polynomials (coefficient tuples, ascending degree)

def poly_trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(p, q):
    if not p or not q:
        return ()
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x != 0:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return tuple(out)


def poly_derivative(p):
    return tuple(Fraction(i) * p[i] for i in range(1, len(p)))


def poly_mod(p, q):
    p = list(p)
    q = poly_trim(q)
    while True:
        p = list(poly_trim(p))
        if len(p) < len(q):
            return tuple(p)
        f = p[-1] / q[-1]
        sh = len(p) - len(q)
        for i in range(len(q)):
            p[sh + i] -= f * q[i]
        p.pop()


def poly_gcd(p, q):
    p, q = poly_trim(p), poly_trim(q)
    while q:
        p, q = q, poly_mod(p, q)
        q = poly_trim(q)
    if p:
        lead = p[-1]
        p = tuple(x / lead for x in p)
    return p


def poly_eval(p, x):
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_is_squarefree(p):
    g = poly_gcd(p, poly_derivative(p))
    return len(g) <= 1


def charpoly(a):
    """Characteristic polynomial det(x I - a), monic, ascending coefficients.

    Faddeev-LeVerrier recursion; exact over the rationals.
    """
    n, m = shape(a)
    if n != m:
        raise ValueError("characteristic polynomial needs a square matrix")
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = identity(n)
    for k in range(1, n + 1):
        mk = mul(a, mk)
        ck = -Fraction(sum(mk[i][i] for i in range(n)), k)
        coeffs[n - k] = ck
        if k < n:
            mk = add(mk, scale(ck, identity(n)))
    return tuple(coeffs)


def minpoly(a):
    """Minimal polynomial, monic, ascending coefficients."""
    n, _ = shape(a)
    powers = [flatten(identity(n))]
    sp = IncrementalSpan()
    sp.insert(powers[0])
    cur = identity(n)
    while True:
        cur = mul(cur, a)
        v = flatten(cur)
        if not sp.insert(v):
            k = len(powers)
            cols = tuple(tuple(powers[i][j] for i in range(k)) for j in range(n * n))
            coeffs = solve(cols, v)
            return poly_trim(tuple(-c for c in coeffs) + (ONE,))
        powers.append(v)


def is_diagonalizable(a):
    """True iff the matrix is diagonalizable over the complex numbers.

    Decided exactly: a matrix is diagonalizable iff its minimal
    polynomial is squarefree.
    """
    return poly_is_squarefree(minpoly(a))


def eigenspace(a, ev):
    n, _ = shape(a)
    shifted = sub(a, scale(ev, identity(n)))
    return span(nullspace(shifted))


def distinct_eigenvalue_count(a):
    """Number of distinct complex eigenvalues (degree of the squarefree part)."""
    p = charpoly(a)
    g = poly_gcd(p, poly_derivative(p))
    return (len(p) - 1) - (len(g) - 1)
