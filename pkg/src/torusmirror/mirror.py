"""Mirror-symmetric pairs: verification certificates, construction from
isotropic splittings, well-becoming witnesses, and the elliptic-product case.

A certificate's alpha maps Lambda_A to Lambda_B, identifies the hyperbolic
forms, and swaps the roles of the product complex structure and I_omega.
"""

from itertools import product

import numpy as np

from . import exactlin as xl
from .clifford import IsotropicSplitting
from .errors import (DifferentSource, FormMismatch, IntertwineFailure,
                     NotABasis, NotInvariant, TransversalityNotFound)
from .pairspace import (WeakPair, build_lambda, i_omega, make_weak_pair,
                        recover_omega)
from .torus import NSVector, Torus, make_torus


class MirrorCertificate:
    def __init__(self, alpha, pairA, pairB):
        self.alpha = alpha
        self.pairA = pairA
        self.pairB = pairB


class WellBecomingWitness:
    """Bases gamma1, gamma2 of transverse halves Gamma_1, Gamma_2 of Gamma."""

    def __init__(self, gamma1, gamma2):
        self.gamma1 = np.array(gamma1, dtype=object).T  # columns
        self.gamma2 = np.array(gamma2, dtype=object).T


def verify_mirror(pA, pB, alpha):
    """Check the four defining identities exactly and issue a certificate."""
    lamA = build_lambda(pA.torus)
    lamB = build_lambda(pB.torus)
    if not (xl.is_integral(alpha) and xl.is_unimodular(alpha)):
        raise FormMismatch("alpha is not an integral unimodular matrix")
    if not xl.mat_eq(xl.mul(alpha.T, xl.mul(lamB.Q, alpha)), lamA.Q):
        raise FormMismatch("alpha does not identify the hyperbolic forms")
    if not xl.mat_eq(xl.mul(alpha, lamA.Jprod), xl.mul(i_omega(pB), alpha)):
        raise IntertwineFailure("alpha.Jprod_A != I_omegaB.alpha")
    if not xl.mat_eq(xl.mul(alpha, i_omega(pA)), xl.mul(lamB.Jprod, alpha)):
        raise IntertwineFailure("alpha.I_omegaA != Jprod_B.alpha")
    return MirrorCertificate(alpha, pA, pB)


def _span_invariant(op, basis_cols):
    """Does op map the column span of basis_cols into itself (over Q)?"""
    stacked = np.block([[basis_cols, xl.mul(op, basis_cols)]])
    return xl.rank(stacked) == basis_cols.shape[1]


def mirror_from_splitting(p, s):
    """Mirror of p across an I_omega-invariant isotropic splitting."""
    n = p.torus.n
    lam = build_lambda(p.torus)
    iw = i_omega(p)
    for half in (s.basis1, s.basis2):
        if not _span_invariant(iw, half):
            raise NotInvariant("a splitting half is not I_omega-invariant")
    alpha = s.w_inv
    i_new = xl.mul(alpha, xl.mul(iw, s.w))
    d = 2 * n
    if not (xl.is_zero(i_new[:d, d:]) and xl.is_zero(i_new[d:, :d])):
        raise NotInvariant("I_omega is not block diagonal in splitting coordinates")
    assert xl.mat_eq(i_new[d:, d:], -i_new[:d, :d].T)
    B = make_torus(n, i_new[:d, :d])
    jprod_new = xl.mul(alpha, xl.mul(lam.Jprod, s.w))
    pB = recover_omega(B, jprod_new)  # Block12Singular when transversality fails
    return pB, verify_mirror(p, pB, alpha)


def check_well_becoming(p, w):
    n = p.torus.n
    u0 = np.block([[w.gamma1, w.gamma2]])
    if not (u0.shape == (2 * n, 2 * n) and xl.is_integral(u0) and xl.is_unimodular(u0)):
        raise NotABasis("gamma1 + gamma2 is not a Z-basis of Gamma")
    for phi in (p.phi1, p.phi2):
        g = xl.mul(u0.T, xl.mul(phi, u0))
        if not (xl.is_zero(g[:n, :n]) and xl.is_zero(g[n:, n:])):
            return False
    j = xl.mul(xl.invert(u0), xl.mul(p.torus.J, u0))
    return xl.det(j[:n, n:]) != 0 and xl.det(j[n:, :n]) != 0


def _standard_witness(n):
    e = xl.eye(2 * n)
    return WellBecomingWitness([e[:, i] for i in range(n)],
                               [e[:, n + i] for i in range(n)])


def _sigma_splitting(n):
    """basis1 = (x_1..x_n, l_{n+1}..l_{2n}), basis2 = its Q-dual order."""
    e = xl.eye(4 * n)
    basis1 = [e[:, 2 * n + i] for i in range(n)] + [e[:, n + i] for i in range(n)]
    basis2 = [e[:, i] for i in range(n)] + [e[:, 3 * n + i] for i in range(n)]
    return IsotropicSplitting(n, basis1, basis2)


def g_mirror(p, w):
    """Mirror of a well-becoming pair across Sigma = Gamma_1* + Gamma_2."""
    if not check_well_becoming(p, w):
        raise NotABasis("witness does not exhibit p as well-becoming")
    n = p.torus.n
    u0 = np.block([[w.gamma1, w.gamma2]])
    u0_inv = xl.to_int(xl.invert(u0))
    # pass to the adapted coordinates on Gamma (and dual ones on Gamma*)
    A1 = make_torus(n, xl.mul(u0_inv, xl.mul(p.torus.J, u0)))
    p1 = make_weak_pair(A1, xl.mul(u0.T, xl.mul(p.phi1, u0)),
                        xl.mul(u0.T, xl.mul(p.phi2, u0)))
    u_lambda = np.block([[u0, xl.zeros(2 * n)], [xl.zeros(2 * n), u0_inv.T]])
    s = _sigma_splitting(n)
    pB, cert1 = mirror_from_splitting(p1, s)
    alpha = xl.mul(cert1.alpha, xl.to_int(xl.invert(u_lambda)))
    cert = verify_mirror(p, pB, alpha)
    assert check_well_becoming(pB, _standard_witness(n))
    return pB, cert


# ---------------------------------------------------------------------------
# elliptic-product mirrors


def _transversal(jprod, w_cols):
    stacked = np.block([[w_cols, xl.mul(jprod, w_cols)]])
    return xl.rank(stacked) == stacked.shape[0]


def _repair_candidates(n, deltas, budget):
    """Integer matrices C with Delta.C symmetric, by increasing max-norm."""
    pairs = [(i, j) for i in range(n) for j in range(n) if i <= j]
    # Delta.C symmetric means delta_i C[i,j] = delta_j C[j,i]; the upper
    # triangle is free as long as the forced lower entry comes out integral.
    for norm in range(0, budget + 1):
        for vals in product(range(-norm, norm + 1), repeat=len(pairs)):
            if norm > 0 and max(abs(v) for v in vals) != norm:
                continue
            c = xl.zeros(n)
            ok = True
            for (i, j), v in zip(pairs, vals):
                c[i, j] = v
                if i != j:
                    num = deltas[i] * v
                    if num % deltas[j]:
                        ok = False
                        break
                    c[j, i] = num // deltas[j]
            if ok:
                yield c


def elliptic_mirror(A, tau, phi, budget=5):
    """Mirror of (A, tau*phi); the mirror is a product of isogenous elliptic curves."""
    n = A.n
    c = phi.c if isinstance(phi, NSVector) else phi
    nf = xl.skew_normal_form(c)
    t1, t2 = tau
    pA = make_weak_pair(A, t1 * c, t2 * c)
    u = nf.basis_change
    deltas = nf.deltas
    e = xl.eye(4 * n)
    found = None
    for corr in _repair_candidates(n, deltas, budget):
        u2 = u.copy()
        u2[:, :n] = u[:, :n] + xl.mul(u[:, n:], corr)
        # the repaired basis still puts phi in the same block normal form
        g = xl.mul(u2.T, xl.mul(c, u2))
        assert xl.is_zero(g[:n, :n]) and xl.is_zero(g[n:, n:])
        u2_inv = xl.to_int(xl.invert(u2))
        j1 = xl.mul(u2_inv, xl.mul(A.J, u2))
        # W = span(e_1..e_n, e*_{-1}..e*_{-n}) in the new coordinates
        jprod1 = np.block([[j1, xl.zeros(2 * n)], [xl.zeros(2 * n), -j1.T]])
        cols = [i for i in range(n)] + [3 * n + i for i in range(n)]
        w_cols = e[:, cols]
        if _transversal(jprod1, w_cols):
            found = (u2, u2_inv)
            break
    if found is None:
        raise TransversalityNotFound(
            "no symplectic correction within the budget makes J W transversal")
    u2, u2_inv = found
    A1 = make_torus(n, xl.mul(u2_inv, xl.mul(A.J, u2)))
    p1 = make_weak_pair(A1, xl.mul(u2.T, xl.mul(pA.phi1, u2)),
                        xl.mul(u2.T, xl.mul(pA.phi2, u2)))
    basis1 = [e[:, i] for i in range(n)] + [e[:, 3 * n + i] for i in range(n)]
    basis2 = [e[:, 2 * n + i] for i in range(n)] + [e[:, n + i] for i in range(n)]
    s = IsotropicSplitting(n, basis1, basis2)
    pB, cert1 = mirror_from_splitting(p1, s)
    u_lambda = np.block([[u2, xl.zeros(2 * n)], [xl.zeros(2 * n), u2_inv.T]])
    alpha = xl.mul(cert1.alpha, xl.to_int(xl.invert(u_lambda)))
    cert = verify_mirror(pA, pB, alpha)
    return pA, pB, cert


def elliptic_factors(pB, deltas):
    """2x2 factor structures and the isogenies E_1 -> E_i of the product mirror.

    The mirror torus of elliptic_mirror decomposes over the index pairs
    (i, n+i); the isogeny sends the first factor's basis to (e_i, (d_i/d_1)e_{n+i}).
    """
    n = pB.torus.n
    J = pB.torus.J
    factors = []
    isogenies = []
    for i in range(n):
        idx = [i, n + i]
        block = J[np.ix_(idx, idx)]
        assert xl.mat_eq(xl.mul(block, block), -xl.eye(2))
        factors.append(make_torus(1, block))
        assert deltas[i] % deltas[0] == 0
        f = xl.mat([[1, 0], [0, deltas[i] // deltas[0]]])
        assert xl.mat_eq(xl.mul(block, f), xl.mul(f, factors[0].J))
        isogenies.append(f)
    return factors, isogenies


def compare_mirror_isos(c1, c2):
    """gamma = alpha2^{-1} alpha1, the A-side comparison of two certificates."""
    if not (c1.pairA == c2.pairA):
        raise DifferentSource("certificates do not share the source pair")
    gamma = xl.to_int(xl.mul(xl.invert(c2.alpha), c1.alpha))
    if c1.pairB.torus == c2.pairB.torus:
        iw = i_omega(c1.pairA)
        assert xl.mat_eq(xl.mul(gamma, iw), xl.mul(iw, gamma))
    if c1.pairB == c2.pairB:
        from .siegel import u_membership
        assert u_membership(gamma, c1.pairA.torus)
    return gamma
