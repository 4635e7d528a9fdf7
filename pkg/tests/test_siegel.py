import pytest

from conftest import rand_q_isometry, weak_pair_sample
from torusmirror import exactlin as xl
from torusmirror.errors import NotInvertible
from torusmirror.pairspace import classify_pair, i_omega, make_weak_pair
from torusmirror.siegel import (act_on_pair, blocks, i_omega_centralizer_check,
                                siegel_act, stabilizer_check,
                                translation_element, u_membership)
from torusmirror.torus import make_torus, ns_basis

J_SQUARE = xl.mat([[0, -1], [1, 0]])
PHI = xl.mat([[0, 1], [-1, 0]])


def square_pair(t1=0, t2=1):
    A = make_torus(1, J_SQUARE)
    return make_weak_pair(A, t1 * PHI, t2 * PHI)


def test_blocks_roundtrip():
    g = translation_element(PHI, 1)
    a, b, c, d = blocks(g)
    assert xl.mat_eq(a, xl.eye(2)) and xl.is_zero(b)
    assert xl.mat_eq(c, PHI) and xl.mat_eq(d, xl.eye(2))


def test_translation_acts_by_addition():
    p = square_pair()
    for k in (1, -2, 3):
        g = translation_element(k * PHI, 1)
        phi1, phi2 = siegel_act(g, (p.phi1, p.phi2))
        assert xl.mat_eq(phi1, p.phi1 + k * PHI)
        assert xl.mat_eq(phi2, p.phi2)


def test_ns_translations_are_group_members():
    A = make_torus(1, J_SQUARE)
    for v in ns_basis(A):
        assert u_membership(translation_element(v.c, 1), A)
    # a skew form that is not of Neron-Severi type breaks the commutation
    z = xl.zeros(2)
    import numpy as np
    J = np.block([[z, xl.eye(2)], [-xl.eye(2), z]])
    eta = xl.zeros(4)
    eta[0, 1], eta[1, 0] = 1, -1
    assert not u_membership(translation_element(eta, 2), make_torus(2, J))


def test_membership_needs_special_isometry():
    A = make_torus(1, J_SQUARE)
    assert u_membership(xl.eye(4), A)
    assert not u_membership(2 * xl.eye(4), A)
    u = xl.mat([[1, 1], [0, 1]])
    g = xl.zeros(4)
    g[:2, :2] = u
    g[2:, 2:] = xl.to_int(xl.invert(u)).T
    # an isometry of Q whose Gamma-block does not commute with J
    assert not u_membership(g, A)


def test_action_is_a_left_action(rng):
    p = weak_pair_sample(rng, 2)
    omega = (p.phi1, p.phi2)
    g1 = translation_element(p.phi1 * 0 + _int_skew(rng, 4), 2)
    u = xl.eye(4)
    u[0, 1] = 2
    g2 = xl.zeros(8)
    g2[:4, :4] = u
    g2[4:, 4:] = xl.to_int(xl.invert(u)).T
    lhs = siegel_act(xl.mul(g1, g2), omega)
    rhs = siegel_act(g1, siegel_act(g2, omega))
    assert xl.mat_eq(lhs[0], rhs[0]) and xl.mat_eq(lhs[1], rhs[1])


def _int_skew(rng, k):
    m = xl.zeros(k)
    for i in range(k):
        for j in range(i + 1, k):
            v = rng.randint(-2, 2)
            m[i, j] = v
            m[j, i] = -v
    return m


def test_translation_group_law():
    p = square_pair()
    omega = (p.phi1, p.phi2)
    g1 = translation_element(PHI, 1)
    g2 = translation_element(2 * PHI, 1)
    assert xl.mat_eq(xl.mul(g1, g2), translation_element(3 * PHI, 1))
    lhs = siegel_act(xl.mul(g1, g2), omega)
    rhs = siegel_act(g1, siegel_act(g2, omega))
    assert xl.mat_eq(lhs[0], rhs[0]) and xl.mat_eq(lhs[1], rhs[1])


def test_singular_denominator_raises():
    p = square_pair()
    g = xl.zeros(4)
    g[2:, 2:] = xl.eye(2)  # a = 0, b = 0: denominator identically singular
    with pytest.raises(NotInvertible):
        siegel_act(g, (p.phi1, p.phi2))


def test_stabilizer_examples():
    p = square_pair()
    assert stabilizer_check(xl.eye(4), p)
    assert not stabilizer_check(translation_element(PHI, 1), p)
    rot = xl.zeros(4)
    rot[:2, :2] = J_SQUARE
    rot[2:, 2:] = J_SQUARE  # J^{-T} = J for the square structure
    assert u_membership(rot, p.torus)
    assert stabilizer_check(rot, p)
    assert i_omega_centralizer_check(rot, p)


def test_stabilizer_iff_centralizer(rng):
    for n in (1, 2):
        for _ in range(10):
            p = weak_pair_sample(rng, n)
            g = rand_q_isometry(rng, n)
            if not u_membership(g, p.torus):
                continue
            assert stabilizer_check(g, p) == i_omega_centralizer_check(g, p)


def test_action_equivariance_and_classification(rng):
    for _ in range(5):
        p = weak_pair_sample(rng, 1)
        g = translation_element(_ns_multiple(p), 1)
        assert u_membership(g, p.torus)
        q = act_on_pair(g, p)
        g_inv = xl.to_int(xl.invert(g))
        assert xl.mat_eq(i_omega(q), xl.mul(g, xl.mul(i_omega(p), g_inv)))
        assert classify_pair(q) == classify_pair(p)


def _ns_multiple(p):
    from torusmirror.torus import ns_basis
    return 2 * ns_basis(p.torus)[0].c
