"""The lattice Lambda = Gamma + Gamma* with the hyperbolic form Q, the
product complex structure, the operator I_omega and pair classification."""

import numpy as np

from . import exactlin as xl
from . import torus as ts
from .errors import Block12Singular, NotNSForm, SingularMatrix


class LambdaSpace:
    def __init__(self, n, Q, Jprod):
        self.n = n
        self.Q = Q
        self.Jprod = Jprod


class WeakPair:
    """A torus together with omega = phi1 + i*phi2, phi2 nondegenerate."""

    def __init__(self, torus, phi1, phi2):
        self.torus = torus
        self.phi1 = phi1
        self.phi2 = phi2

    def __eq__(self, other):
        return (isinstance(other, WeakPair) and self.torus == other.torus
                and xl.mat_eq(self.phi1, other.phi1) and xl.mat_eq(self.phi2, other.phi2))


def q_form(n):
    d = 2 * n
    q = xl.zeros(2 * d)
    for i in range(d):
        q[i, d + i] = 1
        q[d + i, i] = 1
    return q


def build_lambda(A):
    jprod = np.block([[A.J, xl.zeros(2 * A.n)], [xl.zeros(2 * A.n), -A.J.T]])
    return LambdaSpace(A.n, q_form(A.n), jprod)


def make_weak_pair(A, phi1, phi2):
    if not ts.is_ns_form(A, phi1) or not ts.is_ns_form(A, phi2):
        raise NotNSForm("phi1/phi2 must be skew and J-invariant")
    if xl.det(phi2) == 0:
        raise NotNSForm("phi2 must be nondegenerate")
    return WeakPair(A, phi1, phi2)


def conjugate_pair(p):
    """omega-bar = phi1 - i*phi2."""
    return WeakPair(p.torus, p.phi1, -p.phi2)


def i_omega(p):
    """The canonical Q-orthogonal complex structure attached to omega."""
    phi1, phi2 = p.phi1, p.phi2
    phi2_inv = xl.invert(phi2)
    tl = xl.mul(phi2_inv, phi1)
    bl = phi2 + xl.mul(phi1, xl.mul(phi2_inv, phi1))
    br = -xl.mul(phi1, phi2_inv)
    return np.block([[tl, -phi2_inv], [bl, br]])


def e_form(p):
    """Gram matrix of Q(c . , .) with c = Jprod * I_omega; symmetric."""
    lam = build_lambda(p.torus)
    c = xl.mul(lam.Jprod, i_omega(p))
    e = xl.mul(c.T, lam.Q)
    assert xl.mat_eq(e, e.T)
    return e


def classify_pair(p):
    e = e_form(p)
    if xl.is_positive_definite(e):
        return "AlgebraicPlus"
    if xl.is_positive_definite(-e):
        return "AlgebraicMinus"
    return "WeakOnly"


def recover_omega(A, I):
    """Read omega back off a complex structure of I_omega shape."""
    d = 2 * A.n
    i12 = I[:d, d:]
    i22 = I[d:, d:]
    try:
        i12_inv = xl.invert(i12)
    except SingularMatrix:
        raise Block12Singular("block (1,2) of I is singular; I is not an I_omega")
    phi2 = -i12_inv
    phi1 = xl.mul(i22, i12_inv)
    pair = make_weak_pair(A, phi1, phi2)
    assert xl.mat_eq(i_omega(pair), I)
    return pair
