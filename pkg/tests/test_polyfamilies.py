import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from awdaha import operators as op
from awdaha.coeff import lambda_n
from awdaha.errors import DegenerateParams
from awdaha.laurent import ONE, LaurentPoly
from awdaha.polyfamilies import (
    FamilyTag, aw_p, e_lowest_coeff, e_nonsym, family, family_pdag, family_q, family_qdag,
    qdiff_lhs, qdiff_rhs, t1_on_e, y_eigenvalue,
)
from conftest import packs

# P_3 at q = 1/4, (a, b, c, d) = (1, 2, 3, 4), from the normalized 4phi3 sum in sympy.
P3_QUARTER = {-3: 1, -2: mpq(-1155, 116), -1: mpq(8043, 232), 0: mpq(-5965, 116),
              1: mpq(8043, 232), 2: mpq(-1155, 116), 3: 1}


@pytest.mark.parametrize("mode", ["hypergeometric", "recurrence"])
def test_p3_oracle(P_quarter, mode):
    assert aw_p(P_quarter, 3, mode) == LaurentPoly(P3_QUARTER)


@given(packs(depth=8), st.integers(0, 6))
def test_p_modes_agree(P, n):
    assert aw_p(P, n, "hypergeometric") == aw_p(P, n, "recurrence")


@given(packs(depth=8), st.integers(1, 6))
def test_p_is_monic_symmetric_eigenfunction(P, n):
    pn = aw_p(P, n)
    assert pn.is_symmetric() and pn.coeff(n) == 1 and pn.degree() == n
    assert op.apply(op.Dsym, pn, P) == pn.scale(lambda_n(P, n))


@given(packs(depth=8), st.integers(1, 5))
def test_shifted_families_are_d_eigenfunctions(P, n):
    lam = lambda_n(P, n)
    for f in (family_q(P, n), family_pdag(P, n), family_qdag(P, n)):
        assert f.coeff(n) == 1
        assert op.apply(op.D, f, P) == f.scale(lam)


@given(packs(depth=8), st.integers(-5, 5))
def test_e_modes_agree_and_y_eigen(P, n):
    e = e_nonsym(P, n, "via_q")
    assert e == e_nonsym(P, n, "via_qdag")
    assert op.apply(op.Y, e, P) == e.scale(y_eigenvalue(P, n))


@given(packs(depth=8), st.integers(1, 5))
def test_e_extreme_terms(P, n):
    em, ep = e_nonsym(P, -n), e_nonsym(P, n)
    assert em.window() == (-n, n - 1) and em.coeff(-n) == 1
    assert ep.window() == (-n, n) and ep.coeff(n) == 1
    assert ep.coeff(-n) == e_lowest_coeff(P, n)


@given(packs(depth=8), st.integers(1, 5))
def test_t1_on_e_pair(P, n):
    em, ep = e_nonsym(P, -n), e_nonsym(P, n)
    (x, y), (u, v) = t1_on_e(P, n)
    assert op.apply(op.T1, em, P) == em.scale(x) + ep.scale(y)
    assert op.apply(op.T1, ep, P) == em.scale(u) + ep.scale(v)


@given(packs(depth=8), st.integers(1, 6))
def test_qdiff(P, n):
    assert qdiff_lhs(P, n) == qdiff_rhs(P, n)


def test_e0_is_one(P):
    assert e_nonsym(P, 0) == ONE


def test_depth_guard(P):
    with pytest.raises(DegenerateParams, match="exceeds certified depth"):
        aw_p(P, P.max_degree_certified + 1)


def test_family_tags(P):
    assert str(FamilyTag.parse("E:-2")) == "E:-2"
    assert family(P, FamilyTag.parse("Pdag:2")) == family_pdag(P, 2)
    for bad in ("P:-1", "Q:0", "X:1", "P"):
        with pytest.raises(ValueError):
            FamilyTag.parse(bad)
