import random

import pytest

from eisenlat.eisenstein import E, OMEGA, OMEGA_BAR, THETA
from eisenlat.hermitian import (
    basis_vector,
    chain,
    diag,
    direct_sum,
    hyp,
    ip,
    is_isometry,
    lambda10,
    lambda_,
    norm_of,
)
from eisenlat import monodromy as mono

NODAL_ROOT = tuple([E(0)] * 9 + [E(1), OMEGA])


def test_reflection_basics():
    L = lambda_()
    t = mono.triflection(L, NODAL_ROOT)
    assert is_isometry(L, t.m)
    assert mono.order(t) == 3
    # sends r to w r
    img = t(NODAL_ROOT)
    assert img == tuple(OMEGA * x for x in NODAL_ROOT)
    # fixes the orthogonal complement: check on vectors orthogonal to r
    e0 = basis_vector(11, 0)
    assert ip(L, e0, NODAL_ROOT) == E(0)
    assert t(e0) == e0


def test_hexaflection_is_diagonal():
    L = lambda_()
    h = mono.hexaflection(L, basis_vector(11, 0))
    for i in range(11):
        for j in range(11):
            expect = -OMEGA_BAR if i == j == 0 else (E(1) if i == j else E(0))
            assert h.m[i][j] == expect
    assert mono.projective_order(h) == 6


def test_biflection_in_nodal_root_rejected():
    # (1 - (-1)) theta / 3 = 2 theta / 3 is not in E
    L = lambda_()
    with pytest.raises(ValueError):
        mono.reflection(L, NODAL_ROOT, E(-1))


def test_reflection_requires_nonzero_norm():
    L = lambda_()
    xi = tuple([E(0)] * 9 + [E(1), E(0)])
    with pytest.raises(ValueError):
        mono.reflection(L, xi, OMEGA)


def test_reflection_determinant_is_zeta():
    G = chain(3)
    for i in range(3):
        t = mono.triflection(G, basis_vector(3, i))
        assert t.det() == OMEGA


def test_transvection_zero_is_identity():
    G = hyp()
    t = mono.transvection(G, (E(0), E(0)))
    assert t.is_identity()


def test_transvection_requires_isotropic():
    G = chain(2)
    with pytest.raises(ValueError):
        mono.transvection(G, basis_vector(2, 0))


def test_transvection_a5_vector():
    # xi = r1 - theta r2 - 2 r3 + theta r4 + r5 inside a rank-6 chain
    G = chain(6)
    xi = tuple(list(mono.A5_XI) + [E(0)])
    assert norm_of(G, xi) == E(0)
    t = mono.transvection(G, xi)
    assert not t.is_identity()
    assert mono.order(t) == mono.INFINITE
    assert is_isometry(G, t.m)


def test_transvections_on_a_line_compose():
    # the product of the transvections in xi and c*xi multiplies the shear by
    # 1 + norm(c); when that is again a norm the product is the transvection
    # in a vector on the same line (c = theta: 1 + 3 = 4 = norm(2))
    G = chain(6)
    xi = tuple(list(mono.A5_XI) + [E(0)])
    t1 = mono.transvection(G, xi)
    t2 = mono.transvection(G, tuple(THETA * x for x in xi))
    prod = t1 * t2
    t_two = mono.transvection(G, tuple(E(2) * x for x in xi))
    assert prod.m == t_two.m
    assert mono.order(prod) == mono.INFINITE


def test_a5_transvection_identity():
    reports = mono.a5_transvection_report()
    assert len(reports) == 1
    rep = reports[0]
    assert rep["pattern"] == (1, 1, 1, 1)
    assert rep["left_to_right"] and rep["right_to_left"]


def test_d4_transvection_identity():
    rep = mono.d4_transvection_report()
    assert rep["xi_isotropic"] and rep["xi_nonzero"]
    assert rep["left_to_right"] and rep["right_to_left"]


def test_word_eval_empty():
    G = chain(2)
    assert mono.word_eval_or_identity([], G).is_identity()
    with pytest.raises(ValueError):
        mono.word_eval([])


def test_word_ambient_mismatch():
    a = mono.triflection(chain(2), basis_vector(2, 0))
    b = mono.triflection(chain(3), basis_vector(3, 0))
    with pytest.raises(ValueError):
        a * b


def test_central_word_orders():
    for n, expected in zip(range(1, 5), (3, 2, 3, 6)):
        gens = mono.chain_triflections(n)
        w = mono.word_eval(gens) ** (n + 1)
        assert mono.order(w) == expected


def test_central_word_scalars():
    assert mono.central_word_scalar(1) == OMEGA_BAR
    assert mono.central_word_scalar(2) == E(-1)
    assert mono.central_word_scalar(7) == OMEGA_BAR
    # the order-6 case carries a primitive sixth root
    assert mono.central_word_scalar(4) == -OMEGA_BAR


def test_central_word_scalar_rejects_degenerate():
    with pytest.raises(ValueError):
        mono.central_word_scalar(5)


def test_chain11_loop_word_order():
    w = mono.braid_loop_word(11)
    assert mono.projective_order(w, modulo_radical=True, cap=50) == 6


def test_projective_order_identity():
    G = chain(2)
    assert mono.projective_order(mono.identity(G)) == 1
    assert mono.projective_order(mono.identity(G), modulo_radical=True) == 1


def test_f3_reductions_preserve_symplectic_form():
    rng = random.Random(47)
    G = chain(4)
    sg = mono.symplectic_gram(G)
    gens = mono.chain_triflections(4)
    for _ in range(50):
        w = mono.word_eval([gens[rng.randrange(4)] for _ in range(4)])
        r = mono.f3_reduce(w)
        n = 4
        lhs = tuple(
            tuple(
                sum(r[k][i] * sg[k][l] * r[l][j] for k in range(n) for l in range(n)) % 3
                for j in range(n)
            )
            for i in range(n)
        )
        assert lhs == tuple(tuple(x % 3 for x in row) for row in sg)


def test_braid_check():
    gens = mono.chain_triflections(3)
    assert mono.braid_check(gens[0], gens[1]) == mono.BRAID
    assert mono.braid_check(gens[0], gens[2]) == mono.COMMUTE
    # triflection and hexaflection in orthogonal roots commute
    L = lambda_()
    t = mono.triflection(L, NODAL_ROOT)
    h = mono.hexaflection(L, basis_vector(11, 0))
    assert mono.braid_check(t, h) == mono.COMMUTE


def test_braid_relation_forces_theta_pairing():
    # braid-then-neither contrast: orthogonal roots never braid
    G = direct_sum(diag([3]), diag([3]))
    a = mono.triflection(G, basis_vector(2, 0))
    b = mono.triflection(G, basis_vector(2, 1))
    assert mono.braid_check(a, b) == mono.COMMUTE
    # pairing 2*theta: triflections neither braid nor commute
    from eisenlat.hermitian import HermGram

    t2 = THETA + THETA
    G2 = HermGram([[E(3), t2], [t2.conj(), E(3)]])
    a2 = mono.triflection(G2, basis_vector(2, 0))
    b2 = mono.triflection(G2, basis_vector(2, 1))
    assert mono.braid_check(a2, b2) == mono.NEITHER


def test_group_closures_small(closures):
    assert closures(1).order == 3
    assert closures(2).order == 24
    assert closures(3).order == 648


def test_closure_cap():
    with pytest.raises(mono.CapExceeded):
        mono.group_closure(mono.chain_triflections(3), cap=100)


def test_reflections_in_r1(closures):
    refl = mono.reflections_in(closures(1))
    assert len(refl) == 2
    units = sorted(str(u) for _, u in refl)
    assert units == sorted([str(OMEGA), str(OMEGA_BAR)])


def test_reflections_in_r2(closures):
    h = closures(2)
    refl = mono.reflections_in(h)
    assert len(refl) == 8
    assert all(norm_of(h.ambient, r) == E(3) for r, _ in refl)
    assert all(u in (OMEGA, OMEGA_BAR) for _, u in refl)


def test_reflections_in_r3(closures):
    h = closures(3)
    refl = mono.reflections_in(h)
    assert len(refl) == 24
    assert all(norm_of(h.ambient, r) == E(3) for r, _ in refl)


def test_free_action_r2_r3(closures):
    assert mono.free_action_check(closures(2))
    assert mono.free_action_check(closures(3))


def test_free_action_fixed_point_free_rotation():
    # cyclic group generated by a fixed-point-free rotation: vacuously free
    G = diag([3])
    rot = mono.GroupElt(((OMEGA,),), G)
    h = mono.group_closure([rot])
    assert h.order == 3
    assert mono.free_action_check(h)


def test_f3_reduce_homomorphism():
    rng = random.Random(31)
    gens = mono.chain_triflections(4)
    for _ in range(100):
        w1 = mono.word_eval([gens[rng.randrange(4)] for _ in range(3)])
        w2 = mono.word_eval([gens[rng.randrange(4)] for _ in range(3)])
        lhs = mono.f3_reduce(w1 * w2)
        r1, r2 = mono.f3_reduce(w1), mono.f3_reduce(w2)
        prod = tuple(
            tuple(sum(r1[i][k] * r2[k][j] for k in range(4)) % 3 for j in range(4))
            for i in range(4)
        )
        assert lhs == prod


def test_symplectic_gram_shapes():
    sg10 = mono.symplectic_gram(lambda10())
    assert mono.f3_rank(sg10) == 10
    # antisymmetry with zero diagonal
    for i in range(10):
        assert sg10[i][i] == 0
        for j in range(10):
            assert (sg10[i][j] + sg10[j][i]) % 3 == 0
    sg11 = mono.symplectic_gram(lambda_())
    assert mono.f3_rank(sg11) == 10


def test_symplectic_gram_requires_theta_dual():
    with pytest.raises(ValueError):
        mono.symplectic_gram(diag([1]))


def test_f3_reduce_of_triflection_is_transvection():
    L10 = lambda10()
    sg = mono.symplectic_gram(L10)
    v = basis_vector(10, 4)
    red = mono.f3_reduce(mono.triflection(L10, v))
    vbar = tuple(1 if i == 4 else 0 for i in range(10))
    for j in range(10):
        col = tuple(red[i][j] for i in range(10))
        pair = sum(sg[j][t] * vbar[t] for t in range(10)) % 3
        expect = tuple(
            ((1 if i == j else 0) + pair * vbar[i]) % 3 for i in range(10)
        )
        assert col == expect


def test_isometry_invariant_under_generated_words():
    rng = random.Random(37)
    L = lambda_()
    t = mono.triflection(L, NODAL_ROOT)
    h = mono.hexaflection(L, basis_vector(11, 0))
    pool = [t, h]
    w = mono.word_eval([pool[rng.randrange(2)] for _ in range(6)])
    assert is_isometry(L, w.m)


def test_words_in_triflections_have_cube_root_determinant():
    rng = random.Random(41)
    gens = mono.chain_triflections(4)
    for _ in range(50):
        w = mono.word_eval([gens[rng.randrange(4)] for _ in range(rng.randint(1, 8))])
        d = w.det()
        assert d in (E(1), OMEGA, OMEGA_BAR)
