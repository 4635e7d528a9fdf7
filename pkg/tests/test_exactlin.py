from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from torusmirror import exactlin as xl
from torusmirror.errors import Degenerate, NotSymmetric, SingularMatrix

small_ints = st.integers(min_value=-6, max_value=6)


def sq(entries, k):
    return np.array(entries, dtype=object).reshape(k, k)


def test_invert_known_2x2():
    m = xl.mat([[2, 1], [1, 1]])
    inv = xl.invert(m)
    assert xl.mat_eq(inv, xl.mat([[1, -1], [-1, 2]]))


def test_invert_singular_raises():
    with pytest.raises(SingularMatrix):
        xl.invert(xl.mat([[1, 2], [2, 4]]))


@settings(max_examples=30, deadline=None)
@given(st.lists(small_ints, min_size=9, max_size=9))
def test_invert_roundtrip(entries):
    m = sq(entries, 3)
    if xl.det(m) == 0:
        return
    assert xl.mat_eq(xl.mul(m, xl.invert(m)), xl.eye(3))


@settings(max_examples=30, deadline=None)
@given(st.lists(small_ints, min_size=9, max_size=9))
def test_det_multiplicative(entries):
    m = sq(entries, 3)
    assert xl.det(xl.mul(m, m)) == xl.det(m) ** 2


def test_rank_and_nullspace():
    m = xl.mat([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert xl.rank(m) == 2
    ns = xl.nullspace(m)
    assert len(ns) == 1
    assert all(x == 0 for x in xl.mul(m, ns[0].reshape(-1, 1))[:, 0])


def test_smith_normal_form_divisibility():
    m = xl.mat([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    u, d, v = xl.smith_normal_form(m)
    assert xl.mat_eq(xl.mul(u, xl.mul(m, v)), d)
    assert abs(xl.det(u)) == 1 and abs(xl.det(v)) == 1
    diag = [d[i, i] for i in range(3)]
    for a, b in zip(diag, diag[1:]):
        if a != 0 and b != 0:
            assert b % a == 0


def test_positive_definite_via_minors():
    assert xl.is_positive_definite(xl.mat([[2, -1], [-1, 2]]))
    assert not xl.is_positive_definite(xl.mat([[1, 2], [2, 1]]))
    with pytest.raises(NotSymmetric):
        xl.is_positive_definite(xl.mat([[1, 2], [0, 1]]))


def test_skew_normal_form_recovers_divisors(rng):
    base = xl.zeros(4)
    base[0, 2] = 1
    base[2, 0] = -1
    base[1, 3] = 3
    base[3, 1] = -3
    for _ in range(5):
        from conftest import rand_unimodular
        t = rand_unimodular(rng, 4)
        m = xl.mul(t.T, xl.mul(base, t))
        nf = xl.skew_normal_form(m)
        assert nf.deltas == [1, 3]
        u = nf.basis_change
        g = xl.mul(u.T, xl.mul(m, u))
        assert g[0, 2] == 1 and g[1, 3] == 3
        assert xl.is_zero(g[:2, :2]) and xl.is_zero(g[2:, 2:])


def test_skew_normal_form_degenerate():
    with pytest.raises(Degenerate):
        xl.skew_normal_form(xl.zeros(2))


def test_gaussian_arithmetic():
    # (1 + i)(1 - i) = 2 at matrix size 1
    one = xl.mat([[1]])
    re, im = xl.gauss_mul((one, one), (one, -one))
    assert re[0, 0] == 2 and im[0, 0] == 0
    re, im = xl.gauss_invert((one, one))  # 1/(1+i) = (1-i)/2
    assert re[0, 0] == Fraction(1, 2) and im[0, 0] == Fraction(-1, 2)


def test_saturate_rows_divides_out_content():
    rows = np.array([[2, 0], [0, 3]], dtype=object)
    sat = xl.saturate_rows(rows)
    assert abs(xl.det(sat)) == 1
