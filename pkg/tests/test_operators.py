import pytest
from hypothesis import given

from awdaha import operators as op
from awdaha.laurent import ONE, Z, ZINV, LaurentPoly
from conftest import laurent_polys, packs


def test_atom_values_oracle(P):
    # Values from the sympy re-implementation in scripts/derive_oracles.py.
    assert op.apply(op.T1, Z, P) == LaurentPoly({-1: 1, 0: -5})
    assert op.apply(op.T0, ONE, P) == -140
    assert op.apply(op.D, ONE, P) == 841


def test_zsym_and_shifts(P):
    assert op.apply(op.Zsym, ONE, P) == Z + ZINV
    assert op.apply(op.Z * op.Zinv, Z, P) == Z


@given(packs(), laurent_polys())
def test_hecke_quadratics(P, f):
    ab, cd, q = P.a * P.b, P.c * P.d, P.q
    t1 = op.apply(op.T1, f, P)
    assert op.apply(op.T1, t1, P) == t1.scale(-(ab + 1)) - f.scale(ab)
    t0 = op.apply(op.T0, f, P)
    assert op.apply(op.T0, t0, P) == t0.scale(-(cd / q + 1)) - f.scale(cd / q)


@given(packs(), laurent_polys())
def test_inverses(P, f):
    for A, B in ((op.T1, op.T1inv), (op.T0, op.T0inv), (op.Y, op.Yinv)):
        assert op.apply(A * B, f, P) == f
        assert op.apply(B * A, f, P) == f


@given(packs(), laurent_polys())
def test_closed_forms_match_compositions(P, f):
    assert op.apply(op.Y, f, P) == op.y_closed_form(f, P)
    assert op.apply(op.D, f, P) == op.d_closed_form(f, P)


@given(packs(), laurent_polys())
def test_t_atoms_match_direct_formulas(P, f):
    assert op.apply(op.T1, f, P) == op.t1_direct(f, P)
    assert op.apply(op.T0, f, P) == op.t0_direct(f, P)


@given(packs(), laurent_polys())
def test_dsym_routes_agree(P, f):
    g = f + f.reflect()
    assert op.apply(op.Dsym, g, P) == op.dsym_direct(g, P)
    assert op.apply(op.D, g, P) == op.apply(op.Dsym, g, P)


def test_equal_on_truncation(P):
    assert op.equal_on_truncation(op.D * op.T1, op.T1 * op.D, P, 6)
    assert not op.equal_on_truncation(op.Z * op.T1, op.T1 * op.Z, P, 6)
    assert op.first_difference(op.I, op.Scale(2, op.I), P, op.basis(2))[0] == LaurentPoly({-2: 1})


def test_matrix_shape(P):
    M = op.matrix_on_truncation(op.Zsym, P, 3, "symmetric")
    assert len(M) == 2 * (3 + op.GROWTH_BOUND) + 1
    assert len(M[0]) == 4


def test_parse_op(P):
    A = op.parse_op("T1*T0 + (1/4)*Yi - 2*I")
    want = op.T1 * op.T0 + op.Scale("1/4", op.Yinv) - op.Scale(2, op.I)
    assert op.equal_on_truncation(A, want, P, 4)
    assert op.equal_on_truncation(op.parse_op("Y"), op.parse_op("T1*T0"), P, 4)
    with pytest.raises(ValueError):
        op.parse_op("T2")
