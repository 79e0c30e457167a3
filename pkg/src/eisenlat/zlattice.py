"""Integer lattices given by symmetric Gram matrices.

Everything is exact: inertia by rational symmetric elimination, determinants
by fraction-free (Bareiss) elimination.  Also holds the constructors for the
A_n vanishing lattices of cuspidal fourfold degenerations and the recovery of
a Hermitian E-structure from a Z-lattice with a fixed-point-free isometry of
order 3.
"""

from __future__ import annotations

from fractions import Fraction

from .eisenstein import EisensteinInt, QOmega


class ZGram:
    """Symmetric n x n integer Gram matrix."""

    __slots__ = ("n", "g")

    def __init__(self, rows):
        g = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(g)
        for row in g:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i},{j})")
        self.n = n
        self.g = g

    def __repr__(self):
        return f"ZGram({[list(r) for r in self.g]})"

    def __eq__(self, other):
        return isinstance(other, ZGram) and self.g == other.g

    def __hash__(self):
        return hash(self.g)

    def entry(self, i, j):
        return self.g[i][j]

    def to_json(self):
        return {"n": self.n, "g": [list(r) for r in self.g]}

    @staticmethod
    def from_json(data):
        g = data["g"]
        if len(g) != data.get("n", len(g)):
            raise ValueError("rank field does not match matrix size")
        return ZGram(g)


def direct_sum(*grams):
    n = sum(G.n for G in grams)
    rows = [[0] * n for _ in range(n)]
    off = 0
    for G in grams:
        for i in range(G.n):
            for j in range(G.n):
                rows[off + i][off + j] = G.g[i][j]
        off += G.n
    return ZGram(rows)


def inertia(G: ZGram):
    """Exact inertia (positive, radical, negative) of the rational form.

    Symmetric elimination with symmetric pivoting; when all remaining diagonal
    entries vanish but an off-diagonal one does not, a hyperbolic 2 x 2 block
    is split off contributing (1, 0, 1).
    """
    n = G.n
    a = [[Fraction(G.g[i][j]) for j in range(n)] for i in range(n)]
    live = list(range(n))
    pos = neg = rad = 0
    while live:
        piv = next((i for i in live if a[i][i]), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            live.remove(piv)
            for i in live:
                if a[i][piv]:
                    c = a[i][piv] / d
                    for j in live:
                        a[i][j] -= c * a[piv][j]
            for i in live:
                a[i][piv] = a[piv][i] = Fraction(0)
            continue
        off = None
        for i in live:
            for j in live:
                if j > i and a[i][j]:
                    off = (i, j)
                    break
            if off:
                break
        if off is None:
            rad += len(live)
            break
        i0, j0 = off
        # diag is zero, a[i0][j0] != 0: the plane <i0, j0> is hyperbolic
        pos += 1
        neg += 1
        b = a[i0][j0]
        live.remove(i0)
        live.remove(j0)
        for i in live:
            ci, cj = a[i][i0], a[i][j0]
            if ci or cj:
                # subtract the projection onto the hyperbolic plane
                for j in live:
                    a[i][j] -= (ci * a[j0][j] + cj * a[i0][j]) / b
        for i in live:
            a[i][i0] = a[i0][i] = a[i][j0] = a[j0][i] = Fraction(0)
    return (pos, rad, neg)


def determinant(G: ZGram):
    """Exact determinant by Bareiss fraction-free elimination."""
    return _bareiss_int([list(r) for r in G.g])


def _bareiss_int(a):
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_even(G: ZGram):
    return all(G.g[i][i] % 2 == 0 for i in range(G.n))


def an_vanishing_gram(n: int) -> ZGram:
    """Gram of the rank-2n vanishing lattice of an A_n cusp degeneration.

    Basis a_1..a_n, b_1..b_n with a_i^2 = b_i^2 = 2, a_i.a_{i+1} = -1,
    b_i.b_{i+1} = -1, a_i.b_i = -1, a_i.b_{i-1} = 1, all else zero.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m = 2 * n
    g = [[0] * m for _ in range(m)]

    def put(i, j, v):
        g[i][j] = v
        g[j][i] = v

    for i in range(n):
        put(i, i, 2)
        put(n + i, n + i, 2)
        if i + 1 < n:
            put(i, i + 1, -1)
            put(n + i, n + i + 1, -1)
        put(i, n + i, -1)
        if i >= 1:
            put(i, n + i - 1, 1)
    return ZGram(g)


def tensor_gram(G: ZGram, H: ZGram) -> ZGram:
    """Kronecker-product Gram (basis ordered G-major)."""
    n, m = G.n, H.n
    rows = [
        [G.g[i][k] * H.g[j][l] for k in range(n) for l in range(m)]
        for i in range(n)
        for j in range(m)
    ]
    return ZGram(rows)


def e8_gram() -> ZGram:
    """The even unimodular E8 root lattice (chain 1..7 with node 8 on node 5)."""
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]
    for i, j in edges:
        g[i][j] = g[j][i] = -1
    return ZGram(g)


def ii22_gram() -> ZGram:
    """II_{2,2} = (0 1; 1 0) + (0 1; 1 0)."""
    return ZGram([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])


def a2_gram() -> ZGram:
    return ZGram([[2, -1], [-1, 2]])


def a2_rotation():
    """Order-3 fixed-point-free isometry of the A2 root lattice (columns)."""
    return ((0, -1), (1, -1))


def root_lattice_an(n: int) -> ZGram:
    """A_n root lattice Gram (2 on the diagonal, -1 on adjacent nodes)."""
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = -1
    return ZGram(g)


def cycle_isometry(n: int):
    """Coxeter rotation of A_{n-1} of order n, fixed-point-free (columns).

    Realizes the span of differences of the n-th roots of unity with the
    rotation permuting those roots cyclically.
    """
    # basis e_i = z_i - z_{i+1} (z = n-th roots); rotation sends e_i -> e_{i+1},
    # e_{n-1} -> -(e_1 + ... + e_{n-1})
    m = n - 1
    cols = []
    for j in range(m):
        if j < m - 1:
            col = [0] * m
            col[j + 1] = 1
        else:
            col = [-1] * m
        cols.append(col)
    return tuple(tuple(cols[j][i] for j in range(m)) for i in range(m))


def _mat_mul_int(A, B):
    n = len(A)
    m = len(B[0])
    k = len(B)
    return tuple(
        tuple(sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def _mat_eq_identity(A):
    n = len(A)
    return all(A[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))


def hermitian_from_z(G: ZGram, S):
    """Recover the Hermitian E-lattice from a Z-lattice with w acting as S.

    S must be an isometry of G with S^3 = I fixing no nonzero vector; then
    h(x, y) = (1/2) [3 x.y - theta x.(S^-1 y - S y)] is an E-valued Hermitian
    form whose Z-realization returns G.  The E-basis is extracted by greedily
    taking standard basis vectors outside the E-span of the previous picks,
    completed through a Hermite normal form when the greedy picks only
    generate a finite-index submodule.
    """
    from .hermitian import HermGram

    n = G.n
    if n % 2 != 0:
        raise ValueError("rank must be even to carry an E-structure")
    S = tuple(tuple(int(x) for x in row) for row in S)
    if len(S) != n or any(len(r) != n for r in S):
        raise ValueError("isometry has wrong shape")
    St = tuple(tuple(S[i][j] for i in range(n)) for j in range(n))
    if _mat_mul_int(St, _mat_mul_int(G.g, S)) != G.g:
        raise ValueError("S is not an isometry of G")
    S2 = _mat_mul_int(S, S)
    if not _mat_eq_identity(_mat_mul_int(S2, S)):
        raise ValueError("S does not have order dividing 3")
    # no nonzero fixed vector <=> S^2 + S + I = 0
    for i in range(n):
        for j in range(n):
            if S2[i][j] + S[i][j] + (1 if i == j else 0) != 0:
                raise ValueError("S has a nonzero fixed vector")

    picks = _greedy_e_generators(n, S)
    basis = picks
    if len(picks) != n // 2 or not _e_span_is_everything(picks, S, n):
        basis = _complete_e_basis(picks, S, n)

    def dot(x, y):
        return sum(x[i] * G.g[i][j] * y[j] for i in range(n) for j in range(n))

    def apply(M, x):
        return tuple(sum(M[i][j] * x[j] for j in range(n)) for i in range(n))

    rows = []
    for u in basis:
        row = []
        for v in basis:
            sv = apply(S, v)
            s2v = apply(S2, v)  # S^-1 = S^2
            re3 = 3 * dot(u, v)
            im = dot(u, tuple(s2v[i] - sv[i] for i in range(n)))
            # h = (1/2)(re3 - theta*im) with theta = 1 + 2w
            a2, b2 = re3 - im, -2 * im
            if a2 % 2 or b2 % 2:
                raise ValueError("form is not E-valued on the extracted basis")
            row.append(EisensteinInt(a2 // 2, b2 // 2))
        rows.append(row)
    return HermGram(rows)


def _greedy_e_generators(n, S):
    span = _ZSpan(n)
    picks = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        if not span.contains(e):
            picks.append(e)
            span.add(e)
            span.add(tuple(sum(S[r][j] * e[j] for j in range(n)) for r in range(n)))
    return picks


def _e_span_is_everything(picks, S, n):
    span = _ZSpan(n)
    for v in picks:
        span.add(v)
        span.add(tuple(sum(S[r][j] * v[j] for j in range(n)) for r in range(n)))
    return span.index_is_one()


def _complete_e_basis(picks, S, n):
    """E-basis of Z^n from a generating set of E-vector picks.

    A maximal Q(w)-independent subset of the picks (with their S-images)
    coordinatizes Q^n; every pick is written in those coordinates and a
    Hermite normal form over E reduces the generator list to a basis.
    """
    import math

    from .hnf import hnf_columns_e

    m = n // 2

    def s_image(v):
        return tuple(sum(S[r][j] * v[j] for j in range(n)) for r in range(n))

    # select m picks whose pairs (v, Sv) are Q-independent
    chosen = []
    rows = []  # rational row echelon for rank tracking
    for v in picks:
        cand = rows + [[Fraction(x) for x in v], [Fraction(x) for x in s_image(v)]]
        if _rational_rank(cand) == len(rows) + 2:
            chosen.append(v)
            rows = _rational_echelon(cand)
        if len(chosen) == m:
            break
    if len(chosen) < m:
        raise ValueError("E-basis extraction failed: picks do not span")
    cols = []
    for v in chosen:
        cols.append(v)
        cols.append(s_image(v))
    B = [[Fraction(cols[c][r]) for c in range(n)] for r in range(n)]
    Binv = _rational_inverse(B)
    # Q(w)-coordinates of every pick w.r.t. the chosen basis
    coord_vecs = []
    den = 1
    for v in picks:
        w = [sum(Binv[r][j] * v[j] for j in range(n)) for r in range(n)]
        coords = [QOmega(w[2 * i], w[2 * i + 1]) for i in range(m)]
        coord_vecs.append(coords)
        for x in coords:
            den = math.lcm(den, x.denominator())
    gens = [
        [QOmega(x.a * den, x.b * den).to_e() for x in coords] for coords in coord_vecs
    ]
    H = hnf_columns_e(gens)
    if len(H) != m:
        raise ValueError("E-basis extraction failed: generators not full rank")
    out = []
    for col in H:
        zvec = [Fraction(0)] * n
        for i in range(m):
            a = Fraction(col[i].a, den)
            b = Fraction(col[i].b, den)
            v, sv = cols[2 * i], cols[2 * i + 1]
            for r in range(n):
                zvec[r] += a * v[r] + b * sv[r]
        if any(x.denominator != 1 for x in zvec):
            raise ValueError("E-basis extraction failed: non-integral basis")
        out.append(tuple(int(x) for x in zvec))
    return out


def _rational_echelon(rows):
    rows = [row[:] for row in rows]
    out = []
    for row in rows:
        for r in out:
            p = next(i for i, x in enumerate(r) if x)
            if row[p]:
                c = row[p] / r[p]
                row = [x - c * y for x, y in zip(row, r)]
        if any(row):
            out.append(row)
    return out


def _rational_rank(rows):
    return len(_rational_echelon(rows))


def _rational_inverse(B):
    n = len(B)
    a = [row[:] + [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i, row in enumerate(B)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[k], a[piv] = a[piv], a[k]
        d = a[k][k]
        a[k] = [x / d for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                c = a[i][k]
                a[i] = [x - c * y for x, y in zip(a[i], a[k])]
    return [row[n:] for row in a]


class _ZSpan:
    """Integer row span with incremental membership testing (HNF rows)."""

    def __init__(self, n):
        self.n = n
        self.rows = []  # kept in row-echelon form over Z (not fully reduced)

    def _reduce(self, v):
        v = list(v)
        for row in self.rows:
            p = next(i for i, x in enumerate(row) if x)
            if v[p] and v[p] % row[p] == 0:
                c = v[p] // row[p]
                for i in range(p, self.n):
                    v[i] -= c * row[i]
        return v

    def contains(self, v):
        v = self._reduce(v)
        return not any(v)

    def add(self, v):
        v = list(v)
        while True:
            pivot = next((i for i, x in enumerate(v) if x), None)
            if pivot is None:
                return
            hit = next(
                (r for r in self.rows if next(i for i, x in enumerate(r) if x) == pivot),
                None,
            )
            if hit is None:
                if v[pivot] < 0:
                    v = [-x for x in v]
                self.rows.append(v)
                self.rows.sort(key=lambda r: next(i for i, x in enumerate(r) if x))
                return
            a, b = hit[pivot], v[pivot]
            while b:
                q = a // b
                hit2 = [x - q * y for x, y in zip(hit, v)]
                hit[:], v = v, hit2
                a, b = hit[pivot], v[pivot]

    def index_is_one(self):
        if len(self.rows) != self.n:
            return False
        det = 1
        for row in self.rows:
            p = next(i for i, x in enumerate(row) if x)
            det *= row[p]
        return abs(det) == 1
