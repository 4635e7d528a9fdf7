"""Complex tori with rational complex structure: duals, NS forms, homs, polarizations.

The lattice is always Z^{2n} in the standard basis.  The dual torus carries
J-hat = -J^t in the dual basis; at matrix level the double dual is the
identity (the geometric sign of the double-dual identification is a
convention on l**, not on matrices, and never enters the formulas here).
"""

from fractions import Fraction
from itertools import product
from math import gcd

import numpy as np

from . import exactlin as xl
from .errors import NotComplexStructure, NotNSForm


class Torus:
    def __init__(self, n, J):
        self.n = n
        self.J = J

    def __eq__(self, other):
        return isinstance(other, Torus) and self.n == other.n and xl.mat_eq(self.J, other.J)

    def __repr__(self):
        return f"Torus(n={self.n})"


class NSVector:
    """An integral or rational Neron-Severi class: skew and J-invariant."""

    def __init__(self, c):
        self.c = c

    def __eq__(self, other):
        return isinstance(other, NSVector) and xl.mat_eq(self.c, other.c)


def make_torus(n, J):
    if J.shape != (2 * n, 2 * n):
        raise NotComplexStructure(f"J must be {2 * n}x{2 * n}")
    if not xl.mat_eq(xl.mul(J, J), -xl.eye(2 * n)):
        raise NotComplexStructure("J^2 != -identity")
    return Torus(n, J)


def dual_torus(A):
    return Torus(A.n, -A.J.T)


def is_ns_form(A, c):
    return (c.shape == A.J.shape
            and xl.mat_eq(c, -c.T)
            and xl.mat_eq(xl.mul(A.J.T, xl.mul(c, A.J)), c))


def ns_vector(A, c):
    if not is_ns_form(A, c):
        raise NotNSForm("form is not skew or not J-invariant")
    return NSVector(c)


def _scale_to_int_rows(vectors):
    """Scale rational row vectors to primitive integer rows, stacked."""
    rows = []
    for v in vectors:
        den = 1
        for x in v:
            den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
        rows.append([int(Fraction(x) * den) for x in v])
    return np.array(rows, dtype=object)


def _saturated_solutions(coeff_rows, nvars):
    """Z-basis of the integer points of the rational solution space."""
    if not coeff_rows:
        coeff_matrix = xl.zeros(1, nvars)
    else:
        coeff_matrix = np.array(coeff_rows, dtype=object)
    basis = xl.nullspace(coeff_matrix)
    if not basis:
        return []
    sat = xl.saturate_rows(_scale_to_int_rows(basis))
    return [sat[i] for i in range(sat.shape[0])]


def ns_basis(A):
    """Z-basis of the lattice of integral skew J-invariant forms on Gamma."""
    d = 2 * A.n
    J = A.J
    rows = []
    for i in range(d):
        for j in range(d):
            # skewness: c_ij + c_ji = 0
            if i < j:
                rows.append({i * d + j: Fraction(1), j * d + i: Fraction(1)})
            elif i == j:
                rows.append({i * d + i: Fraction(1)})
            # invariance: (J^t c J - c)_ij = 0
            row = {}
            for a in range(d):
                if J[a, i] == 0:
                    continue
                for b in range(d):
                    if J[b, j] != 0:
                        row[a * d + b] = row.get(a * d + b, 0) + Fraction(J[a, i] * J[b, j])
            row[i * d + j] = row.get(i * d + j, 0) - 1
            rows.append({k: v for k, v in row.items() if v != 0})
    dense = xl.zeros(len(rows), d * d)
    for r, row in enumerate(rows):
        for k, v in row.items():
            dense[r, k] = v
    return [NSVector(v.reshape(d, d)) for v in _saturated_solutions(
        [dense[i] for i in range(dense.shape[0])], d * d)]


def hom_space(A, B):
    """Z-basis of { f : J_B f = f J_A } among integer matrices Gamma_A -> Gamma_B."""
    da, db = 2 * A.n, 2 * B.n
    rows = []
    for i in range(db):
        for j in range(da):
            row = {}
            for k in range(da):
                if B.J[i, k] != 0:
                    row[k * da + j] = row.get(k * da + j, 0) + Fraction(B.J[i, k])
            for k in range(da):
                if A.J[k, j] != 0:
                    row[i * da + k] = row.get(i * da + k, 0) - Fraction(A.J[k, j])
            rows.append({k: v for k, v in row.items() if v != 0})
    dense = xl.zeros(len(rows), db * da)
    for r, row in enumerate(rows):
        for k, v in row.items():
            dense[r, k] = v
    return [v.reshape(db, da) for v in _saturated_solutions(
        [dense[i] for i in range(dense.shape[0])], db * da)]


def phi_of_c(c):
    """The map V_A -> V_A-hat attached to c; in coordinates the matrix c itself."""
    c = c.c if isinstance(c, NSVector) else c
    return c.copy()


def polarization_form(A, c):
    """Gram matrix of b_c(x, y) = c(Jx, y)."""
    c = c.c if isinstance(c, NSVector) else c
    return xl.mul(-A.J.T, c)


def check_polarization(A, c):
    b = polarization_form(A, c)
    if not xl.mat_eq(b, b.T):
        return False
    return xl.is_positive_definite(b)


def find_polarization(A, budget=3):
    """Small polarization by exhaustive search over ns_basis combinations.

    Returns None when the search is exhausted; that is inconclusive, not a
    proof that A is non-algebraic.
    """
    basis = ns_basis(A)
    if not basis:
        return None
    r = len(basis)
    for m in range(1, budget + 1):
        for combo in product(range(-m, m + 1), repeat=r):
            if max(abs(x) for x in combo) != m:
                continue
            c = xl.zeros(2 * A.n)
            for coef, vec in zip(combo, basis):
                if coef:
                    c = c + coef * vec.c
            if check_polarization(A, c):
                return NSVector(c)
    return None
