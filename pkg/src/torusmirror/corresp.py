"""Cohomological correspondences on products: Kunneth classes, the Poincare
transform, the explicit beta matrix, and the cor diagram verification.

Orientation convention used throughout: the top class x_1 ^ ... ^ x_{2n}
integrates to +1, and pushforward along the second projection keeps the
second-factor part of any term whose first-factor part is the full monomial.
"""

from fractions import Fraction
from math import factorial

from . import exactlin as xl
from .clifford import SpinVec, contract_apply, popcount, wedge_apply
from .lefschetz import _merge_sign


class ProductClass:
    """An integral class on H*(A x B) in the monomial Kunneth basis.

    coeffs maps (mask_A, mask_B) to a coefficient; the pair stands for
    p*(x_S) ^ q*(x_T) in that order.
    """

    def __init__(self, n, m, coeffs):
        self.n = n
        self.m = m
        self.coeffs = {k: v for k, v in coeffs.items() if v != 0}

    def __eq__(self, other):
        return (isinstance(other, ProductClass) and self.n == other.n
                and self.m == other.m and self.coeffs == other.coeffs)


def pc_add(a, b):
    out = dict(a.coeffs)
    for k, v in b.coeffs.items():
        out[k] = out.get(k, 0) + v
    return ProductClass(a.n, a.m, out)


def pc_scale(a, c):
    return ProductClass(a.n, a.m, {k: c * v for k, v in a.coeffs.items()})


def pc_mul(a, b):
    """Cup product; the B-part of a passes the A-part of b with a Koszul sign."""
    out = {}
    for (s1, t1), c1 in a.coeffs.items():
        for (s2, t2), c2 in b.coeffs.items():
            if s1 & s2 or t1 & t2:
                continue
            sign = -1 if (popcount(t1) * popcount(s2)) % 2 else 1
            sign *= _merge_sign(s1, s2) * _merge_sign(t1, t2)
            key = (s1 | s2, t1 | t2)
            out[key] = out.get(key, 0) + sign * c1 * c2
    return ProductClass(a.n, a.m, out)


def pc_one(n, m):
    return ProductClass(n, m, {(0, 0): 1})


def _normalize(f):
    return f.numerator if f.denominator == 1 else f


def pc_exp(a):
    """exp of a nilpotent even class; terms c^k/k! (exact division by k!)."""
    total = pc_one(a.n, a.m)
    power = pc_one(a.n, a.m)
    k = 0
    while True:
        power = pc_mul(power, a)
        k += 1
        if not power.coeffs:
            return total
        term = ProductClass(a.n, a.m, {key: _normalize(Fraction(v, factorial(k)))
                                       for key, v in power.coeffs.items()})
        total = pc_add(total, term)


def c1_poincare(n):
    """c1 of the Poincare bundle on A x A-hat: sum over i of p*(x_i)^q*(l_i)."""
    return ProductClass(n, n, {(1 << i, 1 << i): 1 for i in range(2 * n)})


def push_forward_correspondence(xi, v):
    """The map v -> q_*(xi ^ p*(v)) induced by the kernel class xi."""
    out = {}
    full = (1 << (2 * xi.n)) - 1
    for sv, cv in v.coeffs.items():
        for (s, t), c in xi.coeffs.items():
            if s & sv or (s | sv) != full:
                continue
            sign = -1 if (popcount(t) * popcount(sv)) % 2 else 1
            sign *= _merge_sign(s, sv)
            out[t] = out.get(t, 0) + sign * c * cv
    return SpinVec(xi.m, out)


def swap_factors(xi):
    """The same class read on B x A; Koszul sign (-1)^{|S||T|} per term."""
    out = {}
    for (s, t), c in xi.coeffs.items():
        sign = -1 if (popcount(s) * popcount(t)) % 2 else 1
        out[(t, s)] = sign * c
    return ProductClass(xi.m, xi.n, out)


def reverse_correspondence(xi, w):
    """The map w -> p_*(xi ^ q*(w)) of the same kernel, other direction."""
    return push_forward_correspondence(swap_factors(xi), w)


def phi_poincare(n, v):
    """H^k(A) -> H^{2n-k}(A-hat): x_S -> (-1)^{sum of complement} l_{complement}."""
    full = (1 << (2 * n)) - 1
    out = {}
    for s, c in v.coeffs.items():
        comp = full ^ s
        eps = sum(i + 1 for i in range(2 * n) if comp & (1 << i))
        out[comp] = out.get(comp, 0) + c * (-1) ** (eps % 2)
    return SpinVec(n, out)


def product_class_from_map(n, m, images):
    """The kernel class of a linear map given by images[mask] in H*(B).

    images maps A-masks to SpinVec-style coefficient dicts; the returned
    class xi satisfies push_forward_correspondence(xi, x_S) = images[S].
    """
    full = (1 << (2 * n)) - 1
    out = {}
    for alpha, image in images.items():
        comp = full ^ alpha
        base = _merge_sign(comp, alpha)
        for vmask, c in image.items():
            sign = -1 if (popcount(vmask) * popcount(alpha)) % 2 else 1
            out[(comp, vmask)] = out.get((comp, vmask), 0) + c * sign * base
    return ProductClass(n, m, out)


def xi_from_mirror(n):
    """The class tau ^ exp((-1)^{n-1} D) realizing beta on the product."""
    low = (1 << n) - 1  # indices 1..n
    images = {}
    tau_sign = (-1) ** ((n * (n - 1) // 2) % 2)
    for r in range(1 << n):
        rmask = r << n  # subsets of {n+1..2n}
        sign = tau_sign * ((-1) ** ((n * popcount(rmask)) % 2))
        images[low | rmask] = {rmask: sign}
    tau = product_class_from_map(n, n, images)
    d = ProductClass(n, n, {(1 << i, 1 << i): (-1) ** ((n - 1) % 2)
                            for i in range(n)})
    return pc_mul(tau, pc_exp(d))


def beta_explicit(n):
    """The signed permutation x_S ^ x_R -> (-1)^eps x_R ^ l_{S-bar}.

    Here S runs over {1..n}, R over {n+1..2n}, S-bar = {1..n} minus S, and
    eps = |S||R| + sum over i in S of (i-1); the answer is re-sorted so that
    the l part (bits 0..n-1) precedes the x part (bits n..2n-1).
    """
    size = 1 << (2 * n)
    low = (1 << n) - 1
    m = xl.zeros(size)
    for col in range(size):
        s = col & low
        r = col & ~low
        sbar = low ^ s
        eps = popcount(s) * popcount(r) + sum(i for i in range(n) if s & (1 << i))
        eps += popcount(r) * popcount(sbar)
        m[sbar | r, col] = (-1) ** (eps % 2)
    return m


def _mu_expand(n, factors, p1_sign):
    """Product over j in factors of (p2*(x_j) + p1_sign * p1*(x_j))."""
    acc = pc_one(n, n)
    for j in factors:
        lin = ProductClass(n, n, {(0, 1 << j): 1, (1 << j, 0): p1_sign})
        acc = pc_mul(acc, lin)
    return acc


def verify_cor_diagram(n, mu_p1_sign=-1):
    """Check that the product-side classes act as wedge(x_i) / contract(l_i).

    mu_p1_sign is the coefficient of p1*(x_j) in the pushforward rule
    mu_*(p2*(x_j)) = p2*(x_j) + mu_p1_sign * p1*(x_j); the correct value is
    -1, and any other choice makes the check fail (a usable negative control).
    """
    size = 1 << (2 * n)
    full = size - 1
    for i in range(2 * n):
        sign_i = (-1) ** (i % 2)  # (-1)^{i-1} for the 1-based index i+1
        # first family: the class mu_*(p1*(x_i) ^ p2*(top)) acts by wedging x_i
        lam = pc_mul(ProductClass(n, n, {(1 << i, 0): 1}),
                     _mu_expand(n, range(2 * n), mu_p1_sign))
        for s in range(size):
            got = push_forward_correspondence(lam, SpinVec(n, {s: 1}))
            want = wedge_apply(n, i + 1, {s: 1})
            if got.coeffs != {k: v for k, v in want.items() if v != 0}:
                return False
        # second family: mu_*((-1)^{i-1} p2*(top without x_i)) acts by contraction
        lam = pc_scale(_mu_expand(n, [j for j in range(2 * n) if j != i],
                                  mu_p1_sign), sign_i)
        for s in range(size):
            got = push_forward_correspondence(lam, SpinVec(n, {s: 1}))
            want = contract_apply(n, i + 1, {s: 1})
            if got.coeffs != {k: v for k, v in want.items() if v != 0}:
                return False
    return True
