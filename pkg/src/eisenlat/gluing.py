"""Discriminant groups theta N*/N, index-3 gluing, and hyperplane orbits.

For a nondegenerate E-lattice N with all inner products in theta*E, the
quotient theta N*/N is an F_3-vector space carrying the symmetric form
"inner product of lifts, reduced mod theta".  Enlargements of N inside
theta N* along isotropic lines undo index-3 sublattice passages; the group
generated by reduced triflections acts on the hyperplanes of L/theta L,
whose count (3^10 - 1)/2 = 29524 for L of rank 10 is reproduced by orbit
enumeration.
"""

from __future__ import annotations

import math

import numpy as np

from .eisenstein import (
    ONE,
    THETA,
    ZERO,
    EisensteinInt,
    QOmega,
    reduce_mod_theta,
)
from .hermitian import HermGram, basis_vector, det_e, in_theta_dual, vector
from .hnf import hnf_columns_e, snf_e


class F3QuadSpace:
    """theta N*/N with its F_3-valued symmetric form and ambient lift data."""

    def __init__(self, ambient: HermGram, k, form, lifts, solve_data):
        self.ambient = ambient
        self.k = k
        self.form = form  # k x k tuple of ints mod 3
        self.lifts = lifts  # k vectors over QOmega in N-coordinates
        self._solve = solve_data  # (L_rows, positions, change) for coords()

    def norm(self, v):
        s = 0
        for i in range(self.k):
            for j in range(self.k):
                s += self.form[i][j] * v[i] * v[j]
        return s % 3

    def pairing(self, v, w):
        s = 0
        for i in range(self.k):
            for j in range(self.k):
                s += self.form[i][j] * v[i] * w[j]
        return s % 3

    def coords(self, v):
        """F_3 coordinates of a vector of theta N* (QOmega coords in N's basis)."""
        L_rows, positions, change = self._solve
        n = self.ambient.n
        gbar = [[self.ambient.g[i][j].conj() for j in range(n)] for i in range(n)]
        w = []
        for i in range(n):
            s = QOmega(0)
            for j in range(n):
                s = s + QOmega.from_e(gbar[i][j]) * v[j]
            w.append(s)
        # w = Gbar v; coordinates of v w.r.t. the P U basis are L (Gbar v / theta)
        tq = QOmega.from_e(THETA)
        w = [x / tq for x in w]
        coords = []
        for i in range(n):
            s = QOmega(0)
            for j in range(n):
                s = s + QOmega.from_e(L_rows[i][j]) * w[j]
            coords.append(s)
        raw = []
        for pos in positions:
            c = coords[pos]
            if not c.is_integral():
                raise ValueError("vector is not in theta N*")
            raw.append(reduce_mod_theta(c.to_e()))
        # raw coords are w.r.t. the SNF basis; new = (change^T)^{-1} raw
        inv_t = _f3_inverse_transpose(change)
        out = [0] * self.k
        for i in range(self.k):
            for j in range(self.k):
                out[i] = (out[i] + inv_t[i][j] * raw[j]) % 3
        return tuple(out)

    def lift(self, v):
        """A lift to theta N* (QOmega coords) of the F_3 vector v."""
        n = self.ambient.n
        out = [QOmega(0)] * n
        for i in range(self.k):
            if v[i] % 3:
                c = v[i] % 3
                for j in range(n):
                    out[j] = out[j] + QOmega(c) * self.lifts[i][j]
        return tuple(out)

    def diagonal(self):
        return tuple(self.form[i][i] for i in range(self.k))


def disc_group(N: HermGram) -> F3QuadSpace:
    """The discriminant group theta N*/N as an F_3 quadratic space.

    Requires N nondegenerate with inner products in theta*E; raises if the
    quotient has exponent larger than theta (not an F_3 space).
    """
    if not in_theta_dual(N):
        raise ValueError("inner products must lie in theta*E")
    if not det_e(N):
        raise ValueError("lattice is degenerate")
    n = N.n
    # B = E^n inside A = theta N* has coordinate matrix C = Gbar / theta
    C = [
        [N.g[i][j].conj().exact_div(THETA) for j in range(n)]
        for i in range(n)
    ]
    diag, L, Linv = snf_e(C)
    positions = []
    for i, d in enumerate(diag):
        if d.is_unit():
            continue
        if d.norm() == 3:
            positions.append(i)
        else:
            raise ValueError(
                f"theta N*/N has a cyclic factor E/({d}); not an F_3 space"
            )
    k = len(positions)
    # ambient lifts: columns of P @ Linv = theta Gbar^{-1} Linv at the positions
    lifts = []
    for pos in positions:
        col = [QOmega.from_e(Linv[i][pos]) for i in range(n)]
        lifts.append(_solve_gbar(N, col))
    form = []
    for i in range(k):
        row = []
        for j in range(k):
            val = _ip_q(N, lifts[i], lifts[j])
            if not val.is_integral():
                raise AssertionError("inner product of lifts not in E")
            row.append(reduce_mod_theta(val.to_e()))
        form.append(row)
    # canonicalize: diagonalize the form over F_3 and sort diagonal (+1s, -1s, 0s)
    change, newform = _f3_diagonalize(form)
    newlifts = []
    for i in range(k):
        acc = [QOmega(0)] * n
        for j in range(k):
            if change[i][j] % 3:
                c = change[i][j] % 3
                for t in range(n):
                    acc[t] = acc[t] + QOmega(c) * lifts[j][t]
        newlifts.append(tuple(acc))
    space = F3QuadSpace(
        N,
        k,
        tuple(tuple(r) for r in newform),
        newlifts,
        (L, positions, change),
    )
    return space


def _solve_gbar(N: HermGram, rhs):
    """Solve Gbar x = theta * rhs over Q(w)."""
    n = N.n
    a = [
        [QOmega.from_e(N.g[i][j].conj()) for j in range(n)]
        + [QOmega.from_e(THETA) * rhs[i]]
        for i in range(n)
    ]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            raise ValueError("singular Gram in dual computation")
        a[k], a[piv] = a[piv], a[k]
        inv = a[k][k].inverse()
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                c = a[i][k]
                a[i] = [x - c * y for x, y in zip(a[i], a[k])]
    return tuple(a[i][n] for i in range(n))


def _ip_q(N: HermGram, x, y):
    n = N.n
    s = QOmega(0)
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if y[j]:
                s = s + QOmega.from_e(N.g[i][j]) * x[i] * y[j].conj()
    return s


def _f3_inverse_transpose(C):
    """Inverse of C^T over F_3 (C square, invertible)."""
    k = len(C)
    a = [[C[j][i] % 3 for j in range(k)] + [1 if t == i else 0 for t in range(k)] for i in range(k)]
    for col in range(k):
        piv = next(i for i in range(col, k) if a[i][col] % 3)
        a[col], a[piv] = a[piv], a[col]
        inv = pow(a[col][col], -1, 3)
        a[col] = [(x * inv) % 3 for x in a[col]]
        for i in range(k):
            if i != col and a[i][col] % 3:
                c = a[i][col] % 3
                a[i] = [(x - c * y) % 3 for x, y in zip(a[i], a[col])]
    return [row[k:] for row in a]


def _f3_diagonalize(form):
    """Congruence diagonalization over F_3; returns (change, diag form).

    change rows express the new basis in the old one; the diagonal is sorted
    with +1 entries first, then -1 (=2), then 0.
    """
    k = len(form)
    a = [[form[i][j] % 3 for j in range(k)] for i in range(k)]
    basis = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    done = []
    live = list(range(k))

    def addrow(i, j, c):
        a[i] = [(x + c * y) % 3 for x, y in zip(a[i], a[j])]
        for t in range(k):
            a[t][i] = (a[t][i] + c * a[t][j]) % 3
        basis[i] = [(x + c * y) % 3 for x, y in zip(basis[i], basis[j])]

    while live:
        piv = next((i for i in live if a[i][i] % 3), None)
        if piv is None:
            off = None
            for i in live:
                for j in live:
                    if j != i and a[i][j] % 3:
                        off = (i, j)
                        break
                if off:
                    break
            if off is None:
                done.extend(live)
                break
            i, j = off
            # zero diagonal, a_ij != 0: adding row j to row i gives
            # a_ii' = 2 a_ij != 0 in characteristic 3
            addrow(i, j, 1)
            piv = i
            if not a[piv][piv] % 3:
                raise AssertionError("F_3 diagonalization failed")
        for i in live:
            if i != piv and a[i][piv] % 3:
                c = (-a[i][piv] * pow(a[piv][piv], -1, 3)) % 3
                addrow(i, piv, c)
        live.remove(piv)
        done.append(piv)
    # sort: +1 diag first, then 2, then 0
    def key(i):
        d = a[i][i] % 3
        return {1: 0, 2: 1, 0: 2}[d]

    order_idx = sorted(done, key=key)
    change = [basis[i] for i in order_idx]
    newform = [
        [a[order_idx[i]][order_idx[j]] % 3 for j in range(len(order_idx))]
        for i in range(len(order_idx))
    ]
    return change, newform


def enumerate_norm(S: F3QuadSpace, c):
    """All vectors of the space with norm c (exhaustive scan of 3^k)."""
    c = c % 3
    out = []
    vec = [0] * S.k
    total = 3**S.k
    for idx in range(total):
        t = idx
        for i in range(S.k):
            vec[i] = t % 3
            t //= 3
        if S.norm(vec) == c:
            out.append(tuple(vec))
    return out


def isotropic_lines(S: F3QuadSpace, orth_to=None, not_orth_to=None):
    """1-dimensional isotropic subspaces, optionally constrained.

    Lines are returned as their canonical generators (first nonzero entry 1).
    """
    seen = set()
    out = []
    for v in enumerate_norm(S, 0):
        if not any(v):
            continue
        can = _canon_line(v)
        if can in seen:
            continue
        seen.add(can)
        if orth_to is not None and S.pairing(can, orth_to) != 0:
            continue
        if not_orth_to is not None and S.pairing(can, not_orth_to) == 0:
            continue
        out.append(can)
    return out


def _canon_line(v):
    first = next(x for x in v if x % 3)
    if first % 3 == 2:
        return tuple((2 * x) % 3 for x in v)
    return tuple(x % 3 for x in v)


class GluedLattice:
    """Result of an index-3 enlargement: Gram plus basis in old coordinates."""

    def __init__(self, gram: HermGram, basis):
        self.gram = gram
        self.basis = basis  # columns over QOmega, in the old coordinate system


def glue(N: HermGram, S: F3QuadSpace, line) -> GluedLattice:
    """The enlargement of N spanned by N and a lift of the isotropic line."""
    line = tuple(x % 3 for x in line)
    if not any(line):
        return GluedLattice(N, _identity_q(N.n))
    if S.norm(line) != 0:
        raise ValueError("gluing line must be isotropic")
    lift = S.lift(line)
    return _span_with(N, [lift])


def _identity_q(n):
    return [
        tuple(QOmega(1) if i == j else QOmega(0) for i in range(n)) for j in range(n)
    ]


def _span_with(N: HermGram, extra_vectors) -> GluedLattice:
    """Lattice generated by N's basis and extra QOmega vectors, via E-HNF."""
    n = N.n
    den = 1
    for v in extra_vectors:
        for x in v:
            den = math.lcm(den, x.denominator())
    cols = []
    for j in range(n):
        cols.append([EisensteinInt(den) if i == j else ZERO for i in range(n)])
    for v in extra_vectors:
        cols.append([QOmega(x.a * den, x.b * den).to_e() for x in v])
    H = hnf_columns_e(cols)
    if len(H) != n:
        raise AssertionError("enlargement lost rank")
    basis = [
        tuple(QOmega(x.a, x.b) / QOmega(den) for x in col) for col in H
    ]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            val = _ip_q(N, basis[i], basis[j])
            if not val.is_integral():
                raise ValueError("enlargement is not integral over E")
            row.append(val.to_e())
        rows.append(row)
    return GluedLattice(HermGram(rows), basis)


def hyperplane_preimage(G: HermGram, functional) -> GluedLattice:
    """Index-3 sublattice of G: preimage of the kernel of a functional on L/theta L.

    ``functional`` is a nonzero F_3 covector in the coordinates of L/theta L.
    """
    if not in_theta_dual(G):
        raise ValueError("inner products must lie in theta*E")
    phi = tuple(x % 3 for x in functional)
    if not any(phi):
        raise ValueError("functional must be nonzero (the full space is not a hyperplane)")
    n = G.n
    piv = next(i for i in range(n) if phi[i])
    inv = pow(phi[piv], -1, 3)
    cols = []
    for j in range(n):
        col = [ZERO] * n
        if j == piv:
            col[piv] = THETA
        elif phi[j]:
            # e_j - c e_piv with c = phi_j / phi_piv lies in the kernel
            c = (phi[j] * inv) % 3
            col[j] = ONE
            col[piv] = EisensteinInt(-c)
        else:
            col[j] = ONE
        cols.append(col)
    for j in range(n):
        col = [ZERO] * n
        col[j] = THETA
        cols.append(col)
    H = hnf_columns_e(cols)
    if len(H) != n:
        raise AssertionError("sublattice lost rank")
    basis = [tuple(QOmega.from_e(x) for x in col) for col in H]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(_ip_q(G, basis[i], basis[j]).to_e())
        rows.append(row)
    return GluedLattice(HermGram(rows), basis)


def reduce_vector(v):
    """Coordinatewise reduction of an E-vector modulo theta."""
    return tuple(reduce_mod_theta(x) for x in v)


def hyperplane_orbit(roots, G: HermGram, start=None, cap: int = 200000):
    """Size of the orbit of a hyperplane under the reduced triflections.

    Hyperplanes of L/theta L are encoded by their symplectic normal vectors
    up to sign; the generators are the transvection images of the
    triflections in the given roots.  Returns (orbit size, generator count).
    """
    from .monodromy import f3_rank, f3_reduce, symplectic_gram, triflection

    n = G.n
    sg = symplectic_gram(G)
    if f3_rank(sg) != n:
        raise ValueError("symplectic form must be nondegenerate")
    gens = []
    for r in roots:
        t = triflection(G, vector(r))
        gens.append(np.array(f3_reduce(t), dtype=np.int64))
    if start is None:
        start = reduce_vector(vector(roots[0]))
    elif any(isinstance(x, EisensteinInt) for x in start):
        start = reduce_vector(vector(start))
    start = np.array([int(x) % 3 for x in start], dtype=np.int64)
    if not start.any():
        raise ValueError("start hyperplane normal must be nonzero")

    def canon(arr):
        # scale so the first nonzero entry is 1 (kills the +-v ambiguity)
        for x in arr:
            if x:
                if x == 2:
                    return tuple((2 * arr) % 3)
                return tuple(arr)
        raise AssertionError("zero vector")

    seen = {canon(start)}
    frontier = [start]
    while frontier:
        block = np.stack(frontier)
        fresh = []
        for g in gens:
            imgs = block @ g.T % 3
            for row in imgs:
                key = canon(row)
                if key not in seen:
                    if len(seen) >= cap:
                        raise ValueError(f"orbit exceeded cap {cap}")
                    seen.add(key)
                    fresh.append(np.array(key, dtype=np.int64))
        frontier = fresh
    return len(seen), len(gens)


def sp_generating_roots():
    """Roots of lambda10 whose reduced triflections generate Sp(10, F_3).

    The chain roots of the two E8 blocks, two norm-3 vectors of the
    hyperbolic summand with independent reductions, and two roots mixing
    each E8 block with the hyperbolic summand.
    """
    from .eisenstein import OMEGA

    def vec(entries):
        v = [ZERO] * 10
        for i, x in entries:
            v[i] = x
        return tuple(v)

    roots = [basis_vector(10, i) for i in range(8)]
    roots.append(vec([(8, ONE), (9, OMEGA)]))
    roots.append(vec([(8, ONE), (9, ONE + OMEGA)]))
    # norm 3 = 3 + 0: block root plus isotropic hyperbolic vector
    roots.append(vec([(3, ONE), (8, ONE)]))
    roots.append(vec([(7, ONE), (8, ONE)]))
    return roots
