"""Exact symbolic engine for AW(3), the rank-one DAHA of type (C1v, C1) and the
(non-)symmetric Askey-Wilson polynomials."""

from .coeff import ParamPack, make_params, parse_params
from .errors import AlgebraMismatch, AwDahaError, DegenerateParams, NonTermination, NotDivisible
from .laurent import LaurentPoly
from .ncalg import NCPoly, rewrite_system
from .verify import SUITES, run_suite

__all__ = [
    "AlgebraMismatch", "AwDahaError", "DegenerateParams", "LaurentPoly", "NCPoly",
    "NonTermination", "NotDivisible", "ParamPack", "SUITES", "make_params",
    "parse_params", "rewrite_system", "run_suite",
]
