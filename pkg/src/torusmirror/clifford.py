"""The integral Clifford algebra Cl(Lambda, Q) acting on H*(A,Z) = Wedge(Gamma*).

Basis monomials x_S of the spinor module are indexed by bitmasks over
{1..2n}; a lattice vector (l, x) acts by contraction with l plus wedge with
x (cor_A).  Clifford elements are carried as their spinor matrices, which is
faithful (the algebra is the full 2^{2n} matrix algebra over Z).
"""

from fractions import Fraction
from math import gcd

import numpy as np

from . import exactlin as xl
from .errors import MixedParity, NoIntertwiner, NotEven, NotIsotropic, NotSpin


def popcount(mask):
    return bin(mask).count("1")


def _sign_below(mask, bit):
    """(-1)^{number of set bits of mask strictly below bit}."""
    return -1 if popcount(mask & ((1 << bit) - 1)) % 2 else 1


class SpinVec:
    """Element of H*(A,Z); coeffs maps subset bitmasks to coefficients."""

    def __init__(self, n, coeffs=None):
        self.n = n
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if c != 0}

    def __eq__(self, other):
        return isinstance(other, SpinVec) and self.n == other.n and self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return SpinVec(self.n, out)

    def __neg__(self):
        return SpinVec(self.n, {m: -c for m, c in self.coeffs.items()})

    def scale(self, t):
        return SpinVec(self.n, {m: t * c for m, c in self.coeffs.items()})

    def to_vector(self):
        v = np.zeros(1 << (2 * self.n), dtype=object) + 0
        for m, c in self.coeffs.items():
            v[m] = c
        return v

    @classmethod
    def from_vector(cls, n, v):
        return cls(n, {m: v[m] for m in range(len(v)) if v[m] != 0})

    @classmethod
    def monomial(cls, n, indices, coeff=1):
        """x_{i1} ^ ... ^ x_{ik} for a sequence of distinct 1-based indices."""
        mask, sign = 0, 1
        for i in indices:
            bit = i - 1
            if mask & (1 << bit):
                return cls(n, {})
            sign *= _sign_below(mask, bit)
            mask |= 1 << bit
        return cls(n, {mask: sign * coeff})


def wedge_apply(n, j, vec):
    """Wedge with x_j (1-based) on a coefficient dict."""
    out = {}
    bit = j - 1
    for m, c in vec.items():
        if not m & (1 << bit):
            out[m | (1 << bit)] = out.get(m | (1 << bit), 0) + _sign_below(m, bit) * c
    return out


def contract_apply(n, i, vec):
    """Contraction with l_i (1-based) on a coefficient dict."""
    out = {}
    bit = i - 1
    for m, c in vec.items():
        if m & (1 << bit):
            out[m ^ (1 << bit)] = out.get(m ^ (1 << bit), 0) + _sign_below(m, bit) * c
    return out


def cor_action(lambda_vec, v):
    """cor((l, x))(v) = contraction by l plus wedge by x."""
    n = v.n
    d = 2 * n
    out = {}
    for m, c in v.coeffs.items():
        for i in range(d):
            a = lambda_vec[i]
            if a != 0 and m & (1 << i):
                key = m ^ (1 << i)
                out[key] = out.get(key, 0) + a * _sign_below(m, i) * c
        for j in range(d):
            b = lambda_vec[d + j]
            if b != 0 and not m & (1 << j):
                key = m | (1 << j)
                out[key] = out.get(key, 0) + b * _sign_below(m, j) * c
    return SpinVec(n, out)


def cor_matrix(n, lambda_vec):
    """Spinor matrix of cor(lambda) in standard coordinates."""
    size = 1 << (2 * n)
    out = xl.zeros(size)
    for m in range(size):
        col = cor_action(lambda_vec, SpinVec(n, {m: 1}))
        for key, c in col.coeffs.items():
            out[key, m] = c
    return out


def q_value(u, v):
    d = len(u) // 2
    return sum(u[i] * v[d + i] + u[d + i] * v[i] for i in range(d))


# ---------------------------------------------------------------------------
# isotropic splittings and splitting-adapted module structures


class IsotropicSplitting:
    """Lambda = M1 + M2 with both halves maximal Q-isotropic.

    basis2 is internally replaced by the Q-dual basis of basis1 (an integral
    change of basis, since the pairing between complementary isotropic halves
    of a unimodular lattice is unimodular); module coordinates are then the
    literal contraction/wedge coordinates.
    """

    def __init__(self, n, basis1, basis2):
        self.n = n
        d = 4 * n
        b1 = np.array(basis1, dtype=object).T  # columns
        b2 = np.array(basis2, dtype=object).T
        if b1.shape != (d, 2 * n) or b2.shape != (d, 2 * n):
            raise NotIsotropic("splitting bases must be 2n vectors of length 4n")
        w = np.block([[b1, b2]])
        if not xl.is_unimodular(w):
            raise NotIsotropic("basis1 + basis2 is not a Z-basis of Lambda")
        q = _q_matrix(n)
        for half in (b1, b2):
            g = xl.mul(half.T, xl.mul(q, half))
            if not xl.is_zero(g):
                raise NotIsotropic("Q does not vanish on a splitting half")
        # pairing P[j, i] = Q(basis2_j, basis1_i) is unimodular; dual basis
        pairing = xl.mul(b2.T, xl.mul(q, b1))
        b2_dual = xl.mul(b2, xl.to_int(xl.invert(pairing)).T)
        self.basis1 = b1
        self.basis2 = b2_dual
        self.w = np.block([[b1, b2_dual]])
        self.w_inv = xl.to_int(xl.invert(self.w))

    def coords(self, lambda_vec):
        return xl.mul(self.w_inv, np.array(lambda_vec, dtype=object).reshape(-1, 1))[:, 0]

    def cor(self, lambda_vec):
        return cor_matrix(self.n, self.coords(lambda_vec))


def _q_matrix(n):
    from .pairspace import q_form
    return q_form(n)


def standard_splitting(n):
    e = xl.eye(4 * n)
    return IsotropicSplitting(n, [e[:, i] for i in range(2 * n)],
                              [e[:, 2 * n + i] for i in range(2 * n)])


# ---------------------------------------------------------------------------
# reversal involution


_INVOLUTION_FORM = {}


def _apply_generators(n, word, vec):
    """Apply cor generators given as (kind, index) pairs, rightmost first."""
    coeffs = dict(vec)
    for kind, idx in reversed(word):
        coeffs = contract_apply(n, idx, coeffs) if kind == "l" else wedge_apply(n, idx, coeffs)
    return coeffs


def _involution_form(n):
    """Signed permutation B with B(z u, v) = B(u, z' v), i.e. z' = B^{-1} z^t B."""
    if n in _INVOLUTION_FORM:
        return _INVOLUTION_FORM[n]
    size = 1 << (2 * n)
    d = 2 * n
    b = xl.zeros(size)
    for s_mask in range(size):
        # reversal of x_S * l_1...l_{2n}: word l_{2n}..l_1 x_{sk}..x_{s1}
        word = [("l", i) for i in range(d, 0, -1)]
        word += [("x", i) for i in range(d, 0, -1) if s_mask & (1 << (i - 1))]
        for t_mask in range(size):
            img = _apply_generators(n, word, {t_mask: 1})
            if 0 in img:
                b[s_mask, t_mask] = img[0]
    assert xl.mat_eq(xl.mul(b, b.T), xl.eye(size))
    _INVOLUTION_FORM[n] = b
    return b


def clifford_involution(z):
    """The unique anti-automorphism of Cl(Lambda,Q) fixing Lambda pointwise."""
    size = z.shape[0]
    n = size.bit_length() // 2
    b = _involution_form(n)
    return xl.mul(b.T, xl.mul(z.T, b))


# ---------------------------------------------------------------------------
# spin group membership


def _is_even_operator(z):
    size = z.shape[0]
    for i in range(size):
        for j in range(size):
            if z[i, j] != 0 and (popcount(i) - popcount(j)) % 2:
                return False
    return True


def _conjugation_on_lambda(z):
    """Coefficient matrix R with z cor(e_k) z^{-1} = sum_i R[i,k] cor(e_i).

    Returns None when some conjugate leaves the span of Lambda-generators.
    """
    size = z.shape[0]
    n = size.bit_length() // 2
    d = 2 * n
    z_inv = xl.invert(z)
    gens = []
    e = xl.eye(4 * n)
    for k in range(4 * n):
        gens.append(cor_matrix(n, e[:, k]))
    r = xl.zeros(4 * n)
    for k in range(4 * n):
        m = xl.mul(z, xl.mul(gens[k], z_inv))
        # read coefficients off the unique single-generator matrix positions
        recon = xl.zeros(size)
        for i in range(d):
            r[i, k] = m[0, 1 << i]          # contraction l_{i+1}: e_{i+1} -> e_0
            r[d + i, k] = m[1 << i, 0]      # wedge x_{i+1}: e_0 -> e_{i+1}
            if r[i, k] != 0:
                recon = recon + r[i, k] * gens[i]
            if r[d + i, k] != 0:
                recon = recon + r[d + i, k] * gens[d + i]
        if not xl.mat_eq(m, recon):
            return None
    return r


def is_spin(z):
    """Membership in Spin(Lambda,Q): even, norm one, conjugation preserves Lambda."""
    if not _is_even_operator(z):
        raise NotEven("operator mixes the even/odd grading")
    if xl.det(z) == 0:
        return False
    if not xl.mat_eq(xl.mul(z, clifford_involution(z)), xl.eye(z.shape[0])):
        return False
    r = _conjugation_on_lambda(z)
    if r is None or not xl.is_integral(r) or abs(xl.det(r)) != 1:
        return False
    return True


def r_of_z(z):
    """The conjugation action on Lambda of a spin element; lies in SO(Q)."""
    if not is_spin(z):
        raise NotSpin("element is not in Spin(Lambda,Q)")
    return xl.to_int(_conjugation_on_lambda(z))


# ---------------------------------------------------------------------------
# the canonical module isomorphism beta


def _matvec(m, v):
    out = np.zeros(m.shape[0], dtype=object) + 0
    for j in range(m.shape[1]):
        x = v[j]
        if x != 0:
            out = out + m[:, j] * x
    return out


def vacuum_kernel(s1, annihilators):
    """Common kernel of cor_{s1}(m) over the given Lambda-vectors."""
    mats = [s1.cor(m) for m in annihilators]
    stacked = np.concatenate(mats, axis=0)
    return xl.nullspace(stacked)


def _primitive_int(mat_q):
    den = 1
    for x in mat_q.flat:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [[int(Fraction(x) * den) for x in row] for row in mat_q]
    g = 0
    for row in ints:
        for x in row:
            g = gcd(g, abs(x))
    g = g or 1
    return np.array([[x // g for x in row] for row in ints], dtype=object)


def _sign_normalize(m):
    for row in m:
        for x in row:
            if x != 0:
                return m if x > 0 else -m
    return m


def _invert_with_perm_fast_path(m):
    size = m.shape[0]
    cols = xl.col_nonzeros(m)
    if all(len(c) == 1 and abs(c[0][1]) == 1 for c in cols):
        out = xl.zeros(size)
        for j, c in enumerate(cols):
            i, v = c[0]
            out[j, i] = v
        if xl.mat_eq(xl.mul(out, m), xl.eye(size)):
            return out
    return xl.invert(m)


def beta_iso(s1, s2):
    """The unique-up-to-sign Cl-module isomorphism between the two spinor
    realizations, as a primitive integral matrix (module of s1 -> module of s2),
    sign-normalized so the first nonzero entry in row-major order is positive.

    Built by vacuum transport: the common kernel in module 1 of the
    annihilators M1(s2) is one-dimensional; pushing it through the wedge
    monomials of s2 gives the inverse intertwiner column by column.
    """
    n = s1.n
    size = 1 << (2 * n)
    kernel = vacuum_kernel(s1, [s2.basis1[:, i] for i in range(2 * n)])
    if len(kernel) != 1:
        raise NoIntertwiner(f"vacuum kernel has dimension {len(kernel)}")
    u0 = _primitive_int(kernel[0].reshape(1, -1))[0]
    wedge_ops = [s1.cor(s2.basis2[:, i]) for i in range(2 * n)]
    cols = {0: u0}
    for t_mask in range(1, size):
        low = (t_mask & -t_mask).bit_length() - 1
        cols[t_mask] = _matvec(wedge_ops[low], cols[t_mask ^ (1 << low)])
    m = np.stack([cols[t] for t in range(size)], axis=1)
    beta = _invert_with_perm_fast_path(m)
    return _sign_normalize(_primitive_int(beta))


def intertwiner_space_dimension(s1, s2):
    """Q-dimension of the intertwiner space Hom_Cl(I_{s1}, I_{s2}).

    Schur reduction: any intertwiner composed with the inverse of a fixed one
    is an endomorphism of I_{s2}, which is determined by the image of the
    vacuum vector; that image lies in the common kernel of the s2
    annihilators acting on their own module.  So the Hom-space dimension
    equals that kernel's dimension (beta_iso existence gives >= 1).
    """
    beta = beta_iso(s1, s2)
    assert xl.det(beta) != 0
    kernel = vacuum_kernel(s2, [s2.basis1[:, i] for i in range(2 * s2.n)])
    return len(kernel)


def beta_parity(t, s1, s2):
    """Even/Odd per the grading of t; cross-checked against the intersection
    dimension of the two M1 halves mod 2."""
    even_ok = all(t[i, j] == 0 or (popcount(i) + popcount(j)) % 2 == 0
                  for i in range(t.shape[0]) for j in range(t.shape[1]))
    odd_ok = all(t[i, j] == 0 or (popcount(i) + popcount(j)) % 2 == 1
                 for i in range(t.shape[0]) for j in range(t.shape[1]))
    if even_ok == odd_ok:
        raise MixedParity("intertwiner is not graded")
    stacked = np.concatenate([s1.basis1.T, s2.basis1.T], axis=0)
    inter_dim = 4 * s1.n - xl.rank(stacked)
    if even_ok != (inter_dim % 2 == 0):
        raise MixedParity("grading parity disagrees with the intersection rank")
    return "Even" if even_ok else "Odd"
