"""Hermitian E-lattices: Gram matrices over Z[w], inner products, invariants.

Vectors are columns and group elements act on the left, so a matrix M is an
isometry of the Gram G exactly when M^T G conj(M) = G.  The central examples
are built by the named constructors:

    lambda_()   rank 11, (3) + E8E + E8E + hyp, signature (10,1), det -3^6
    lambda10()  rank 10, E8E + E8E + hyp, the span of the braid roots
    e8e()       rank 4 chain, underlying Z-lattice E8
    hyp()       ((0, theta), (thetabar, 0)), underlying Z-lattice II_{2,2}
    chain(n)    3 on the diagonal, theta above it, thetabar below it

The Z-realization pairs alpha.beta = (2/3) Re <alpha, beta> on the basis
(e1, w e1, e2, w e2, ...).
"""

from __future__ import annotations

from .eisenstein import (
    ONE,
    OMEGA,
    THETA,
    ZERO,
    EisensteinInt,
    QOmega,
    e_gcd,
    is_associate,
)
from .zlattice import ZGram


def _to_e(x):
    if isinstance(x, EisensteinInt):
        return x
    if isinstance(x, int):
        return EisensteinInt(x)
    raise TypeError(f"expected an Eisenstein integer, got {x!r}")


class HermGram:
    """Conjugate-symmetric n x n matrix over E with rational-integer diagonal."""

    __slots__ = ("n", "g")

    def __init__(self, rows):
        g = tuple(tuple(_to_e(x) for x in row) for row in rows)
        n = len(g)
        for row in g:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            if not g[i][i].is_real():
                raise ValueError(f"diagonal entry {i} is not real")
            for j in range(i + 1):
                if g[j][i] != g[i][j].conj():
                    raise ValueError(f"not conjugate-symmetric at ({i},{j})")
        self.n = n
        self.g = g

    def __repr__(self):
        return f"HermGram({[[str(x) for x in r] for r in self.g]})"

    def __eq__(self, other):
        return isinstance(other, HermGram) and self.g == other.g

    def __hash__(self):
        return hash(self.g)

    def to_json(self):
        return {"n": self.n, "g": [[x.to_json() for x in row] for row in self.g]}

    @staticmethod
    def from_json(data):
        g = [[EisensteinInt.from_json(x) for x in row] for row in data["g"]]
        if len(g) != data.get("n", len(g)):
            raise ValueError("rank field does not match matrix size")
        return HermGram(g)


def vector(coords):
    return tuple(_to_e(x) for x in coords)


def zero_vector(n):
    return tuple(ZERO for _ in range(n))


def basis_vector(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


def ip(G: HermGram, x, y):
    """<x, y> = sum g_ij x_i conj(y_j): E-linear in x, antilinear in y."""
    if len(x) != G.n or len(y) != G.n:
        raise ValueError("vector lengths do not match the Gram rank")
    s = ZERO
    for i in range(G.n):
        if not x[i]:
            continue
        row = G.g[i]
        for j in range(G.n):
            if y[j]:
                s = s + row[j] * x[i] * y[j].conj()
    return s


def norm_of(G: HermGram, x):
    return ip(G, x, x)


def diag(entries) -> HermGram:
    n = len(entries)
    return HermGram(
        [[_to_e(entries[i]) if i == j else ZERO for j in range(n)] for i in range(n)]
    )


def chain(n: int) -> HermGram:
    """Rank-n lattice of braid-generator roots: 3 diagonal, theta superdiagonal."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rows = []
    for i in range(n):
        row = [ZERO] * n
        row[i] = EisensteinInt(3)
        if i + 1 < n:
            row[i + 1] = THETA
        if i - 1 >= 0:
            row[i - 1] = THETA.conj()
        rows.append(row)
    return HermGram(rows)


def e8e() -> HermGram:
    return chain(4)


def hyp() -> HermGram:
    return HermGram([[ZERO, THETA], [THETA.conj(), ZERO]])


def direct_sum(*grams) -> HermGram:
    n = sum(G.n for G in grams)
    rows = [[ZERO] * n for _ in range(n)]
    off = 0
    for G in grams:
        for i in range(G.n):
            for j in range(G.n):
                rows[off + i][off + j] = G.g[i][j]
        off += G.n
    return HermGram(rows)


def lambda_() -> HermGram:
    """The rank-11 lattice (3) + E8E + E8E + hyp."""
    return direct_sum(diag([3]), e8e(), e8e(), hyp())


def lambda10() -> HermGram:
    """The rank-10 summand E8E + E8E + hyp, orthogonal to a chordal root."""
    return direct_sum(e8e(), e8e(), hyp())


NAMED_LATTICES = {
    "lambda": lambda_,
    "lambda10": lambda10,
    "e8e": e8e,
    "hyp": hyp,
}


def named_lattice(name: str) -> HermGram:
    if name in NAMED_LATTICES:
        return NAMED_LATTICES[name]()
    if name.startswith("chain:"):
        return chain(int(name.split(":", 1)[1]))
    raise ValueError(f"unknown lattice name {name!r}")


def z_realization(G: HermGram) -> ZGram:
    """Gram of the underlying Z-lattice in the basis (e1, w e1, e2, w e2, ...)."""
    n = G.n
    rows = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            h = G.g[i][j]
            for (bi, ui) in ((0, ONE), (1, OMEGA)):
                for (bj, uj) in ((0, ONE), (1, OMEGA)):
                    # <u_i e_i, u_j e_j> = u_i conj(u_j) h ; dot = (2/3) Re
                    v = ui * uj.conj() * h
                    num = 2 * v.a - v.b  # 2*Re(v) = 2a - b
                    if num % 3:
                        raise ValueError(
                            "Z-realization is not integral; inner products "
                            "must lie in theta*E"
                        )
                    rows[2 * i + bi][2 * j + bj] = num // 3
    return ZGram(rows)


def omega_matrix(n: int):
    """Matrix of multiplication by w on the Z-realization basis (columns)."""
    m = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        # w * e_i = (w e_i);  w * (w e_i) = -e_i - (w e_i)
        m[2 * i + 1][2 * i] = 1
        m[2 * i][2 * i + 1] = -1
        m[2 * i + 1][2 * i + 1] = -1
    return tuple(tuple(row) for row in m)


def signature(G: HermGram):
    """(positive, radical, negative) over C, from the Z-realization inertia."""
    from .zlattice import inertia

    p, r, m = inertia(z_realization(G))
    assert p % 2 == 0 and r % 2 == 0 and m % 2 == 0
    return (p // 2, r // 2, m // 2)


def det_e(G: HermGram) -> EisensteinInt:
    """Exact determinant over E by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in G.g]
    n = G.n
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if not a[k][k]:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return ZERO
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
            a[i][k] = ZERO
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def in_theta_dual(G: HermGram) -> bool:
    """True iff every inner product lies in theta*E, i.e. L is contained in theta L*."""
    return all(not (G.g[i][j] % THETA) for i in range(G.n) for j in range(G.n))


def theta_self_dual(G: HermGram) -> bool:
    """True iff theta L* = L: inner products in theta*E and |det|^2 = 3^n."""
    d = det_e(G)
    if not d:
        raise ValueError("theta-self-duality is undefined for singular forms")
    return in_theta_dual(G) and d.norm() == 3**G.n


NODAL = "Nodal"
CHORDAL = "Chordal"


def root_classify(G: HermGram, r) -> str:
    """Classify a norm-3 vector by the ideal its inner products generate.

    Nodal roots pair to theta*E with the lattice, chordal roots to 3*E.
    """
    r = vector(r)
    if norm_of(G, r) != EisensteinInt(3):
        raise ValueError("not a root: norm is not 3")
    gen = ZERO
    for i in range(G.n):
        v = ip(G, basis_vector(G.n, i), r)
        if v:
            gen = v if not gen else e_gcd(gen, v)
    if is_associate(gen, THETA):
        return NODAL
    if is_associate(gen, EisensteinInt(3)):
        return CHORDAL
    raise AssertionError(
        f"root pairing ideal generated by {gen} is neither theta*E nor 3*E"
    )


def mat_identity(n):
    return tuple(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def mat_mul(A, B):
    n = len(A)
    k = len(B)
    m = len(B[0])
    Bt = tuple(tuple(B[t][j] for t in range(k)) for j in range(m))
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            Bj = Bt[j]
            s = ZERO
            for t in range(k):
                if Ai[t] and Bj[t]:
                    s = s + Ai[t] * Bj[t]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_vec(A, x):
    n = len(A)
    return tuple(
        sum((A[i][j] * x[j] for j in range(len(x)) if x[j]), start=ZERO)
        for i in range(n)
    )


def mat_conj(A):
    return tuple(tuple(x.conj() for x in row) for row in A)


def mat_transpose(A):
    n = len(A)
    m = len(A[0])
    return tuple(tuple(A[i][j] for i in range(n)) for j in range(m))


def is_isometry(G: HermGram, M) -> bool:
    """True iff M^T G conj(M) = G."""
    m = tuple(tuple(_to_e(x) for x in row) for row in M)
    if len(m) != G.n or any(len(r) != G.n for r in m):
        return False
    lhs = mat_mul(mat_mul(mat_transpose(m), G.g), mat_conj(m))
    return lhs == G.g


def gram_of_basis(G: HermGram, basis_q):
    """Gram matrix of vectors with QOmega coordinates; entries must be in E."""
    n = G.n
    k = len(basis_q)
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            s = QOmega(0)
            for p in range(n):
                for q in range(n):
                    s = s + QOmega.from_e(G.g[p][q]) * basis_q[i][p] * basis_q[j][q].conj()
            row.append(s.to_e())
        rows.append(row)
    return HermGram(rows)


def radical_basis(G: HermGram):
    """Basis over Q(w) of the radical (kernel of the Gram matrix)."""
    n = G.n
    a = [[QOmega.from_e(G.g[i][j]) for j in range(n)] for i in range(n)]
    pivots = []
    rowi = 0
    for col in range(n):
        piv = next((i for i in range(rowi, n) if a[i][col]), None)
        if piv is None:
            continue
        a[rowi], a[piv] = a[piv], a[rowi]
        inv = a[rowi][col].inverse()
        a[rowi] = [x * inv for x in a[rowi]]
        for i in range(n):
            if i != rowi and a[i][col]:
                c = a[i][col]
                a[i] = [x - c * y for x, y in zip(a[i], a[rowi])]
        pivots.append(col)
        rowi += 1
    free = [c for c in range(n) if c not in pivots]
    out = []
    for f in free:
        v = [QOmega(0)] * n
        v[f] = QOmega(1)
        for r, c in enumerate(pivots):
            v[c] = -a[r][f]
        out.append(tuple(v))
    return out


def matrix_rank_q(G: HermGram) -> int:
    return G.n - len(radical_basis(G))
