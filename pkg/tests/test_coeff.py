from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from awdaha.coeff import (
    aw3_constants, elem_sym, ext_constants, is_ultraspherical, lambda_n, make_params,
    parse_params, qpochhammer, recurrence_coeffs, to_coef, ultraspherical_of,
)
from awdaha.errors import DegenerateParams
from conftest import packs


def test_to_coef_accepts_exact_inputs():
    assert to_coef("3/4") == mpq(3, 4)
    assert to_coef(Fraction(-2, 6)) == mpq(-1, 3)
    assert to_coef(5) == 5


def test_to_coef_rejects_floats():
    with pytest.raises(TypeError):
        to_coef(0.5)


@pytest.mark.parametrize("args, reason", [
    (("1", 2, 3, 5, 7), "q = 1"),
    (("-1", 2, 3, 5, 7), "q = 1"),
    ((0, 2, 3, 5, 7), "q = 0"),
    (("1/2", 0, 3, 5, 7), "a = 0"),
    (("1/2", 2, 3, 5, "1/30"), "abcd = 1"),
    (("1/2", 2, 3, 5, "8/15"), "abcd = q^{-2}"),
])
def test_degenerate_packs_name_the_condition(args, reason):
    with pytest.raises(DegenerateParams) as exc:
        make_params(*args)
    assert exc.value.reason == reason


def test_strict_rejects_pair_products():
    make_params("1/2", 1, 2, 3, 4)
    with pytest.raises(DegenerateParams, match="ad"):
        make_params("1/2", 1, 2, 3, 4, strict=True)


def test_parse_params():
    P = parse_params("1/2, 2, 3, 5, 7")
    assert (P.s, P.q, P.a, P.d) == (mpq(1, 2), mpq(1, 4), 2, 7)
    with pytest.raises(ValueError):
        parse_params("1/2,2,3")
    with pytest.raises(ValueError):
        parse_params("1/2,2,3,x,7")


def test_elem_sym(P_quarter):
    assert tuple(elem_sym(P_quarter)) == (10, 35, 50, 24)


@given(packs(), st.fractions(min_value=-5, max_value=5, max_denominator=7),
       st.integers(0, 8))
def test_qpochhammer_step(P, x, k):
    assert qpochhammer(x, P, 0) == 1
    assert qpochhammer(x, P, k + 1) == qpochhammer(x, P, k) * (1 - to_coef(x) * P.q**k)


def test_lambda_values(P_quarter):
    assert lambda_n(P_quarter, 0) == 1 + 24 * 4
    assert lambda_n(P_quarter, 1) == 28


@given(packs())
def test_lambda_distinct(P):
    lams = [lambda_n(P, n) for n in range(P.max_degree_certified + 1)]
    assert len(set(lams)) == len(lams)


def test_recurrence_oracle(P_quarter):
    # Frozen from scripts/derive_oracles.py (normalized 4phi3 sum in sympy).
    assert recurrence_coeffs(P_quarter, 0) == (mpq(40, 23), None)
    assert recurrence_coeffs(P_quarter, 1) == (mpq(415, 92), mpq(-693, 1058))


def test_structure_constants_oracle(P):
    # Solved from the operator relations in sympy by scripts/derive_oracles.py.
    assert tuple(aw3_constants(P)) == (
        mpq(9045, 4), mpq(225, 16), mpq(23625, 2), mpq(-169425, 16),
        mpq(-653715, 4), mpq(-43371675, 16))
    assert tuple(ext_constants(P)) == (
        -81, mpq(19035, 16), mpq(23625, 4), mpq(-4165695, 16))


@given(packs(ultraspherical=True))
def test_ultraspherical_kills_extension(P):
    E, F0, F1, _ = ext_constants(P)
    assert E == F0 == F1 == 0


def test_ultraspherical_projection(P):
    U = ultraspherical_of(P)
    assert is_ultraspherical(U)
    assert not is_ultraspherical(P)
    assert ext_constants(U)[:3] == (0, 0, 0)
