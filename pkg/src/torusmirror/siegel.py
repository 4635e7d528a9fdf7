"""The rational symmetry group of Lambda and its action on the omega domain.

Group elements are 4n x 4n block matrices [[a, b], [c, d]] with a: Gamma ->
Gamma, b: Gamma* -> Gamma, c: Gamma -> Gamma*, d: Gamma* -> Gamma*; they act
on omega = phi1 + i*phi2 by omega -> (c + d.omega)(a + b.omega)^{-1},
computed exactly over the Gaussian rationals.
"""

from . import exactlin as xl
from .errors import NotInvertible, SingularMatrix
from .pairspace import WeakPair, build_lambda, i_omega, make_weak_pair


def blocks(g):
    d = g.shape[0] // 2
    return g[:d, :d], g[:d, d:], g[d:, :d], g[d:, d:]


def u_membership(g, A):
    """Integral unimodular special Q-isometries commuting with Jprod."""
    lam = build_lambda(A)
    if g.shape != lam.Q.shape:
        return False
    if not (xl.is_integral(g) and xl.is_unimodular(g)):
        return False
    if xl.det(g) != 1:
        return False
    if not xl.mat_eq(xl.mul(g.T, xl.mul(lam.Q, g)), lam.Q):
        return False
    return xl.mat_eq(xl.mul(g, lam.Jprod), xl.mul(lam.Jprod, g))


def siegel_act(g, omega):
    """(c + d.omega)(a + b.omega)^{-1}; returns the (phi1, phi2) pair."""
    phi1, phi2 = omega
    a, b, c, d = blocks(g)
    num = (c + xl.mul(d, phi1), xl.mul(d, phi2))
    den = (a + xl.mul(b, phi1), xl.mul(b, phi2))
    try:
        den_inv = xl.gauss_invert(den)
    except SingularMatrix:
        raise NotInvertible("a + b.omega is singular over Q(i)")
    re, im = xl.gauss_mul(num, den_inv)
    assert xl.mat_eq(re, -re.T) and xl.mat_eq(im, -im.T)
    return re, im


def act_on_pair(g, p):
    """siegel_act packaged as a WeakPair on the same torus."""
    phi1, phi2 = siegel_act(g, (p.phi1, p.phi2))
    return make_weak_pair(p.torus, phi1, phi2)


def stabilizer_check(g, p):
    """Does g fix omega?  Cross-checked against the closed-form equations.

    Expanding (c + d.omega) = omega(a + b.omega) over Q(i) gives the real and
    imaginary conditions
        c + d.phi1 = phi1.a + phi1.b.phi1 - phi2.b.phi2
        d.phi2     = phi2.a + phi2.b.phi1 + phi1.b.phi2
    """
    phi1, phi2 = siegel_act(g, (p.phi1, p.phi2))
    fixed = xl.mat_eq(phi1, p.phi1) and xl.mat_eq(phi2, p.phi2)
    a, b, c, d = blocks(g)
    f1, f2 = p.phi1, p.phi2
    real_eq = xl.mat_eq(c + xl.mul(d, f1),
                        xl.mul(f1, a) + xl.mul(f1, xl.mul(b, f1)) - xl.mul(f2, xl.mul(b, f2)))
    imag_eq = xl.mat_eq(xl.mul(d, f2),
                        xl.mul(f2, a) + xl.mul(f2, xl.mul(b, f1)) + xl.mul(f1, xl.mul(b, f2)))
    assert fixed == (real_eq and imag_eq)
    return fixed


def i_omega_centralizer_check(g, p):
    iw = i_omega(p)
    return xl.mat_eq(xl.mul(g, iw), xl.mul(iw, g))


def translation_element(eta, n):
    """g_eta = [[1, 0], [eta, 1]] acting by omega -> omega + eta."""
    g = xl.eye(4 * n)
    g[2 * n:, :2 * n] = eta
    return g
