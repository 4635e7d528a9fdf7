import pytest

from torusmirror import exactlin as xl
from torusmirror.errors import NotComplexStructure, NotNSForm
from torusmirror.torus import (check_polarization, dual_torus,
                               find_polarization, hom_space, make_torus,
                               ns_basis, ns_vector, polarization_form)

J_SQUARE = xl.mat([[0, -1], [1, 0]])
PHI = xl.mat([[0, 1], [-1, 0]])


def test_make_torus_validates():
    make_torus(1, J_SQUARE)
    with pytest.raises(NotComplexStructure):
        make_torus(1, xl.eye(2))
    with pytest.raises(NotComplexStructure):
        make_torus(2, J_SQUARE)


def test_dual_torus_double_dual():
    A = make_torus(1, J_SQUARE)
    Ahat = dual_torus(A)
    assert xl.mat_eq(Ahat.J, -J_SQUARE.T)
    assert dual_torus(Ahat) == A


def test_ns_basis_square_torus():
    A = make_torus(1, J_SQUARE)
    basis = ns_basis(A)
    assert len(basis) == 1
    c = basis[0].c
    assert xl.mat_eq(c, PHI) or xl.mat_eq(c, -PHI)


def test_ns_vector_rejects_non_invariant():
    A = make_torus(1, J_SQUARE)
    with pytest.raises(NotNSForm):
        ns_vector(A, xl.mat([[0, 1], [1, 0]]))  # not skew
    ns_vector(A, PHI)


def test_polarization_square_torus():
    A = make_torus(1, J_SQUARE)
    b = polarization_form(A, PHI)
    assert xl.mat_eq(b, xl.eye(2))
    assert check_polarization(A, PHI)
    assert not check_polarization(A, -PHI)
    found = find_polarization(A)
    assert found is not None and check_polarization(A, found.c)


def test_hom_space_square_torus_endomorphisms():
    A = make_torus(1, J_SQUARE)
    homs = hom_space(A, A)
    assert len(homs) == 2  # Z[i] as an order: 1 and J
    for f in homs:
        assert xl.mat_eq(xl.mul(A.J, f), xl.mul(f, A.J))


def test_hom_space_rational_elliptic_curves_isogenous(rng):
    from conftest import weak_pair_sample
    # rational 2x2 complex structures all satisfy x^2 + 1, so any two such
    # elliptic curves admit a nonzero (indeed invertible-over-Q) hom
    for _ in range(3):
        A = weak_pair_sample(rng, 1).torus
        B = weak_pair_sample(rng, 1).torus
        homs = hom_space(A, B)
        assert homs
        for f in homs:
            assert xl.mat_eq(xl.mul(B.J, f), xl.mul(f, A.J))
        assert any(xl.det(f) != 0 for f in homs)
    A = weak_pair_sample(rng, 1).torus
    assert any(xl.mat_eq(f, xl.eye(2)) for f in hom_space(A, A))


def test_ns_basis_members_are_ns_forms(rng):
    from conftest import weak_pair_sample
    for n in (1, 2):
        A = weak_pair_sample(rng, n).torus
        for v in ns_basis(A):
            ns_vector(A, v.c)
