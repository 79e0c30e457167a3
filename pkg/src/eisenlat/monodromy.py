"""Complex reflections, unitary transvections, braid words and finite closures.

Group elements are matrices over E acting on the left of column vectors in a
fixed ambient Hermitian lattice; every constructor checks that the lattice is
preserved exactly.  The finite groups R_1..R_4 generated by triflections in
chain roots are enumerated by breadth-first closure, with the matrices packed
into an integer companion embedding so numpy can batch the products.
"""

from __future__ import annotations

import numpy as np

from .eisenstein import (
    ONE,
    OMEGA,
    THETA,
    UNITS,
    ZERO,
    EisensteinInt,
    reduce_mod_theta,
)
from .hermitian import (
    HermGram,
    basis_vector,
    in_theta_dual,
    ip,
    is_isometry,
    mat_identity,
    mat_mul,
    mat_vec,
    norm_of,
    vector,
)

INFINITE = "Infinite"


class Unknown:
    """Order not determined below the cap."""

    def __init__(self, cap):
        self.cap = cap

    def __repr__(self):
        return f"Unknown(cap={self.cap})"

    def __eq__(self, other):
        return isinstance(other, Unknown) and self.cap == other.cap


class GroupElt:
    """Matrix over E together with its ambient Hermitian Gram."""

    __slots__ = ("m", "ambient")

    def __init__(self, m, ambient: HermGram, check=True):
        m = tuple(tuple(x if isinstance(x, EisensteinInt) else EisensteinInt(x) for x in row) for row in m)
        if check and not is_isometry(ambient, m):
            raise ValueError("matrix does not preserve the Hermitian form")
        self.m = m
        self.ambient = ambient

    def __repr__(self):
        return f"GroupElt({[[str(x) for x in r] for r in self.m]})"

    def __eq__(self, other):
        return (
            isinstance(other, GroupElt)
            and self.ambient == other.ambient
            and self.m == other.m
        )

    def __hash__(self):
        return hash(self.m)

    def __mul__(self, other):
        if not isinstance(other, GroupElt):
            return NotImplemented
        if self.ambient != other.ambient:
            raise ValueError("ambient lattices differ")
        return GroupElt(mat_mul(self.m, other.m), self.ambient, check=False)

    def __pow__(self, k):
        n = len(self.m)
        if k < 0:
            raise ValueError("negative powers not supported")
        out = identity(self.ambient)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x):
        return mat_vec(self.m, x)

    def is_identity(self):
        return self.m == mat_identity(len(self.m))

    def det(self):
        a = [list(row) for row in self.m]
        n = len(a)
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


def identity(G: HermGram) -> GroupElt:
    return GroupElt(mat_identity(G.n), G, check=False)


def reflection(G: HermGram, r, zeta) -> GroupElt:
    """The zeta-reflection x -> x - (1 - zeta) (<x, r> / <r, r>) r.

    zeta must be a root of unity in E; the matrix must have entries in E,
    otherwise the lattice is not preserved and a ValueError is raised.
    """
    r = vector(r)
    if not isinstance(zeta, EisensteinInt) or not zeta.is_unit():
        raise ValueError("zeta must be a unit of E")
    rr = norm_of(G, r)
    if not rr:
        raise ValueError("reflection root must have nonzero norm")
    n = G.n
    one_minus = ONE - zeta
    cols = []
    for j in range(n):
        e = basis_vector(n, j)
        c = one_minus * ip(G, e, r)
        try:
            coeff = c.exact_div(rr)
        except ValueError:
            raise ValueError(
                "reflection does not preserve the lattice: "
                f"(1 - zeta)<e_{j}, r>/<r, r> is not in E"
            ) from None
        cols.append(tuple(e[i] - coeff * r[i] for i in range(n)))
    m = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return GroupElt(m, G)


def triflection(G: HermGram, r) -> GroupElt:
    return reflection(G, r, OMEGA)


def hexaflection(G: HermGram, r) -> GroupElt:
    return reflection(G, r, -OMEGA.conj())


def transvection(G: HermGram, xi) -> GroupElt:
    """The unitary transvection x -> x - (<x, xi> / theta) xi in an isotropic xi."""
    xi = vector(xi)
    if norm_of(G, xi):
        raise ValueError("transvection vector must be isotropic")
    n = G.n
    cols = []
    for j in range(n):
        e = basis_vector(n, j)
        c = ip(G, e, xi)
        try:
            coeff = c.exact_div(THETA)
        except ValueError:
            raise ValueError(
                f"transvection does not preserve the lattice: <e_{j}, xi>/theta not in E"
            ) from None
        cols.append(tuple(e[i] - coeff * xi[i] for i in range(n)))
    m = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return GroupElt(m, G)


def chain_triflections(n: int):
    """The standard braid-generator triflections a_1..a_n on chain(n)."""
    from .hermitian import chain

    G = chain(n)
    return [triflection(G, basis_vector(n, i)) for i in range(n)]


def word_eval(factors) -> GroupElt:
    """Ordered (left-to-right) product of group elements."""
    factors = list(factors)
    if not factors:
        raise ValueError("empty word has no ambient; use identity(G)")
    out = factors[0]
    for f in factors[1:]:
        out = out * f
    return out


def word_eval_or_identity(factors, G: HermGram) -> GroupElt:
    factors = list(factors)
    if not factors:
        return identity(G)
    return word_eval(factors)


DEFAULT_ORDER_CAP = 10000


def order(M: GroupElt, cap: int = DEFAULT_ORDER_CAP):
    """Smallest k <= cap with M^k = I; Infinite for nontrivial unipotents."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    n = len(M.m)
    I = mat_identity(n)
    if M.m == I:
        return 1
    # unipotent shortcut: (M - I) nilpotent and M != I means infinite order
    K = tuple(
        tuple(M.m[i][j] - I[i][j] for j in range(n)) for i in range(n)
    )
    P = K
    for _ in range(n):
        P = mat_mul(P, K)
    if all(not x for row in P for x in row):
        return INFINITE
    acc = M
    for k in range(1, cap + 1):
        if acc.m == I:
            return k
        acc = acc * M
    return Unknown(cap)


def _scalar_of(m):
    """The unit u with m = u*I, or None."""
    n = len(m)
    u = m[0][0]
    for i in range(n):
        for j in range(n):
            if m[i][j] != (u if i == j else ZERO):
                return None
    return u if u.is_unit() else None


def projective_order(M: GroupElt, modulo_radical: bool = False, cap: int = DEFAULT_ORDER_CAP):
    """Smallest k with M^k a unit scalar, optionally modulo the form's radical.

    Modulo the radical, M^k = u I is tested as G (M^k - u I) = 0, which says
    the columns of M^k - u I lie in the kernel of the form.
    """
    G = M.ambient
    n = G.n
    acc = M
    for k in range(1, cap + 1):
        if modulo_radical:
            for u in UNITS:
                diffcols = tuple(
                    tuple(acc.m[i][j] - (u if i == j else ZERO) for j in range(n))
                    for i in range(n)
                )
                prod = mat_mul(G.g, diffcols)
                if all(not x for row in prod for x in row):
                    return k
        else:
            if _scalar_of(acc.m) is not None:
                return k
        acc = acc * M
    return Unknown(cap)


NOT_SCALAR = "NotScalar"


def central_word_scalar(n: int):
    """Evaluate (a_1 ... a_n)^(n+1) on chain(n); the unit u if it is u*I."""
    from .hermitian import chain, matrix_rank_q

    G = chain(n)
    if matrix_rank_q(G) != n:
        raise ValueError(f"chain({n}) is degenerate; the scalar is not defined")
    gens = chain_triflections(n)
    w = word_eval(gens) ** (n + 1)
    u = _scalar_of(w.m)
    return u if u is not None else NOT_SCALAR


BRAID = "Braid"
COMMUTE = "Commute"
NEITHER = "Neither"


def braid_check(A: GroupElt, B: GroupElt) -> str:
    if A.ambient != B.ambient:
        raise ValueError("ambient lattices differ")
    if (A * B).m == (B * A).m:
        return COMMUTE
    if (A * B * A).m == (B * A * B).m:
        return BRAID
    return NEITHER


class CapExceeded(Exception):
    pass


class GroupHandle:
    """Finite closure of a generating set: order plus the element list."""

    def __init__(self, ambient: HermGram, elements):
        self.ambient = ambient
        self.elements = elements  # list of E-matrices (tuples of tuples)

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)


def _companion_pack(m, n):
    """Embed an n x n E-matrix into 2n x 2n integers via w -> [[0,-1],[1,-1]]."""
    out = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            x = m[i][j]
            if x.a or x.b:
                out[2 * i, 2 * j] = x.a
                out[2 * i, 2 * j + 1] = -x.b
                out[2 * i + 1, 2 * j] = x.b
                out[2 * i + 1, 2 * j + 1] = x.a - x.b
    return out


def _companion_unpack(z, n):
    return tuple(
        tuple(EisensteinInt(int(z[2 * i, 2 * j]), int(z[2 * i + 1, 2 * j])) for j in range(n))
        for i in range(n)
    )


DEFAULT_CLOSURE_CAP = 2_000_000


def group_closure(gens, cap: int = DEFAULT_CLOSURE_CAP) -> GroupHandle:
    """Breadth-first closure of the generated group; CapExceeded past cap."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    G = gens[0].ambient
    for g in gens:
        if g.ambient != G:
            raise ValueError("generators have different ambients")
    n = G.n
    gen_z = np.stack([_companion_pack(g.m, n) for g in gens])
    ident = _companion_pack(mat_identity(n), n)
    seen = {ident.tobytes(): 0}
    elements = [ident]
    frontier = ident[None, :, :]
    while frontier.shape[0]:
        prods = np.einsum("fij,gjk->fgik", frontier, gen_z)
        prods = prods.reshape(-1, 2 * n, 2 * n)
        fresh = []
        for idx in range(prods.shape[0]):
            key = prods[idx].tobytes()
            if key not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"closure exceeded cap {cap}")
                seen[key] = len(elements)
                elements.append(prods[idx])
                fresh.append(prods[idx])
        frontier = np.stack(fresh) if fresh else np.empty((0, 2 * n, 2 * n), dtype=np.int64)
    return GroupHandle(G, elements)


def reflections_in(handle: GroupHandle):
    """All complex reflections in the group: (root, rotation unit) pairs.

    A reflection fixes a hyperplane, i.e. M - I has rank one over Q(w);
    the root is a primitive generator of the image of M - I and the unit is
    the eigenvalue on it.
    """
    n = handle.ambient.n
    stack = np.stack(handle.elements).astype(np.float64)
    ident = np.eye(2 * n)
    diffs = stack - ident
    svals = np.linalg.svd(diffs, compute_uv=False)
    tol = 1e-6 * max(1.0, float(np.abs(diffs).max()))
    ranks = (svals > tol).sum(axis=1)
    out = []
    for idx in np.nonzero(ranks == 2)[0]:
        m = _companion_unpack(handle.elements[idx], n)
        root, unit = _reflection_data(handle.ambient, m)
        if root is not None:
            out.append((root, unit))
    return out


def _reflection_data(G: HermGram, m):
    """Exact root line and rotation unit of a candidate reflection matrix."""
    n = G.n
    I = mat_identity(n)
    K = [[m[i][j] - I[i][j] for j in range(n)] for i in range(n)]
    # find a nonzero column of K: it spans the image if rank is one
    col = None
    for j in range(n):
        c = tuple(K[i][j] for i in range(n))
        if any(c):
            col = c
            break
    if col is None:
        return None, None
    # verify rank one exactly: all 2x2 minors vanish
    for j1 in range(n):
        for j2 in range(j1 + 1, n):
            for i1 in range(n):
                for i2 in range(i1 + 1, n):
                    if K[i1][j1] * K[i2][j2] != K[i1][j2] * K[i2][j1]:
                        return None, None
    root = _primitive_vector(col)
    mr = mat_vec(m, root)
    # eigenvalue on the root: mr = zeta * root
    zeta = None
    for u in UNITS:
        if mr == tuple(u * x for x in root):
            zeta = u
            break
    if zeta is None or zeta == ONE:
        return None, None
    return root, zeta


def _primitive_vector(v):
    from .eisenstein import e_gcd

    g = None
    for x in v:
        if x:
            g = x if g is None else e_gcd(g, x)
    out = tuple(x.exact_div(g) for x in v)
    # deterministic orientation: first nonzero coordinate canonical
    first = next(x for x in out if x)
    for u in UNITS:
        y = u * first
        if 0 <= y.b < y.a:
            return tuple(u * x for x in out)
    return out


def free_action_check(handle: GroupHandle) -> bool:
    """True iff each non-identity element's fixed space lies in some mirror.

    The zero fixed space is vacuously contained.  This is the statement that
    the group acts freely off the union of the reflection mirrors.
    """
    n = handle.ambient.n
    mirrors = []
    seen_lines = set()
    for root, _ in reflections_in(handle):
        if root not in seen_lines:
            seen_lines.add(root)
            mirrors.append(root)
    stack = np.stack(handle.elements).astype(np.float64)
    ident = np.eye(2 * n)
    diffs = stack - ident
    svals = np.linalg.svd(diffs, compute_uv=False)
    tol = 1e-6 * max(1.0, float(np.abs(diffs).max()))
    ranks = (svals > tol).sum(axis=1)
    for idx in range(len(handle.elements)):
        if ranks[idx] == 2 * n:
            continue  # no nonzero fixed vectors (verified exactly below)
        m = _companion_unpack(handle.elements[idx], n)
        if m == mat_identity(n):
            continue
        fixed = _exact_fixed_space(m, n)
        if not fixed:
            continue
        ok = False
        for r in mirrors:
            if all(not ip(handle.ambient, v, r) for v in fixed):
                ok = True
                break
        if not ok:
            return False
    return True


def _exact_fixed_space(m, n):
    """Basis over Q(w) of ker(M - I), returned as E-vectors (cleared denominators)."""
    from .eisenstein import QOmega

    I = mat_identity(n)
    a = [[QOmega.from_e(m[i][j] - I[i][j]) for j in range(n)] for i in range(n)]
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
        den = 1
        import math

        for x in v:
            den = math.lcm(den, x.denominator())
        out.append(tuple(QOmega(x.a * den, x.b * den).to_e() for x in v))
    return out


def chain_signed(eps):
    """chain(5)-like Gram with <r_i, r_{i+1}> = eps_i * theta, eps_i = +-1."""
    from .hermitian import HermGram

    n = len(eps) + 1
    rows = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = EisensteinInt(3)
        if i + 1 < n:
            t = THETA if eps[i] == 1 else -THETA
            rows[i][i + 1] = t
            rows[i + 1][i] = t.conj()
    return HermGram(rows)


A5_XI = (ONE, -THETA, EisensteinInt(-2), THETA, ONE)


def a5_transvection_report():
    """Search the sign patterns <r_i, r_{i+1}> = eps_i theta for those making
    xi = r1 - theta r2 - 2 r3 + theta r4 + r5 isotropic, and check that
    (a1..a5)^6 equals the transvection in xi (both product orders).

    Returns a list of dicts, one per isotropic pattern.
    """
    from itertools import product as iproduct

    from .hermitian import basis_vector, norm_of

    out = []
    for eps in iproduct((1, -1), repeat=4):
        G = chain_signed(eps)
        if norm_of(G, A5_XI):
            continue
        gens = [triflection(G, basis_vector(5, i)) for i in range(5)]
        T = transvection(G, A5_XI)
        ltr = (word_eval(gens) ** 6).m == T.m
        rtl = (word_eval(list(reversed(gens))) ** 6).m == T.m
        out.append(
            {
                "pattern": eps,
                "xi_nonzero": any(A5_XI),
                "left_to_right": ltr,
                "right_to_left": rtl,
            }
        )
    return out


def d4_star_gram():
    """Gram of the D4 star: three orthogonal roots r1, r2, r3 and a central
    root r' with <r_i, r'> = theta."""
    from .hermitian import HermGram

    t, tc, z, three = THETA, THETA.conj(), ZERO, EisensteinInt(3)
    return HermGram(
        [
            [three, z, z, t],
            [z, three, z, t],
            [z, z, three, t],
            [tc, tc, tc, three],
        ]
    )


D4_XI = (ONE, ONE, ONE, -THETA)


def d4_transvection_report():
    """(a1 a2 a3 b)^3 versus the transvection in xi = r1 + r2 + r3 - theta r'."""
    from .hermitian import basis_vector, norm_of

    G = d4_star_gram()
    gens = [triflection(G, basis_vector(4, i)) for i in range(4)]
    T = transvection(G, D4_XI)
    return {
        "xi_isotropic": not norm_of(G, D4_XI),
        "xi_nonzero": any(D4_XI),
        "left_to_right": (word_eval(gens) ** 3).m == T.m,
        "right_to_left": (word_eval(list(reversed(gens))) ** 3).m == T.m,
    }


def braid_loop_word(n: int = 11):
    """The word a1..a_{n-1} a_n^2 a_{n-1}..a1 on chain(n): the leftmost strand
    circling all others."""
    gens = chain_triflections(n)
    seq = gens[: n - 1] + [gens[n - 1], gens[n - 1]] + list(reversed(gens[: n - 1]))
    return word_eval(seq)


def f3_reduce(M: GroupElt):
    """Entrywise reduction of the matrix modulo theta, as an F_3 matrix."""
    return tuple(tuple(reduce_mod_theta(x) for x in row) for row in M.m)


def symplectic_gram(G: HermGram):
    """The F_3 pairing on L/theta L: (v, w) = reduction of <v, w>/theta mod theta."""
    if not in_theta_dual(G):
        raise ValueError("symplectic reduction needs all inner products in theta*E")
    n = G.n
    return tuple(
        tuple(reduce_mod_theta(G.g[i][j].exact_div(THETA)) for j in range(n))
        for i in range(n)
    )


def f3_rank(mat) -> int:
    rows = [list(r) for r in mat]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    rank = 0
    for col in range(m):
        piv = next((i for i in range(rank, n) if rows[i][col] % 3), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 if rows[rank][col] % 3 == 1 else 2
        rows[rank] = [(x * inv) % 3 for x in rows[rank]]
        for i in range(n):
            if i != rank and rows[i][col] % 3:
                c = rows[i][col] % 3
                rows[i] = [(x - c * y) % 3 for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank
