"""Sparse Laurent polynomials in one variable ``z`` over the rationals."""

from __future__ import annotations

import json
from dataclasses import dataclass
from numbers import Rational as _Rational
from typing import Iterable, Mapping

from .coeff import Coef, ParamPack, to_coef
from .errors import NotDivisible


class LaurentPoly:
    """Immutable map ``exponent -> Coef`` with no zero coefficients.

    Iteration is in ascending exponent order, so equal polynomials compare and
    hash equal structurally.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, Coef] = {}
        for k, v in items:
            v = to_coef(v)
            if v:
                acc[k] = acc.get(k, 0) + v
        self._c = {k: acc[k] for k in sorted(acc) if acc[k]}
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        # Trusted constructor: c has sorted keys and no zeros.
        out = cls.__new__(cls)
        out._c = c
        out._hash = None
        return out

    @classmethod
    def monomial(cls, k: int, coef=1) -> "LaurentPoly":
        return cls({k: coef})

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def from_dense(cls, low: int, coeffs: Iterable) -> "LaurentPoly":
        """Polynomial with ``coeffs[i]`` at exponent ``low + i``."""
        return cls((low + i, c) for i, c in enumerate(coeffs))

    # -- inspection --------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def items(self):
        return self._c.items()

    def exponents(self):
        return self._c.keys()

    def coeff(self, k: int) -> Coef:
        return self._c.get(k, Coef(0))

    __getitem__ = coeff

    @property
    def min_exp(self) -> int | None:
        return next(iter(self._c)) if self._c else None

    @property
    def max_exp(self) -> int | None:
        return next(reversed(self._c)) if self._c else None

    def window(self) -> tuple[int, int] | None:
        """``(min_exp, max_exp)``, or ``None`` for the zero polynomial."""
        if not self._c:
            return None
        return self.min_exp, self.max_exp

    def degree(self) -> int:
        """Largest ``|k|`` in the support; ``-1`` for the zero polynomial."""
        if not self._c:
            return -1
        return max(-self.min_exp, self.max_exp)

    def is_symmetric(self) -> bool:
        c = self._c
        return all(c.get(-k) == v for k, v in c.items())

    # -- arithmetic --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, _Rational):
            return self._c == ({0: to_coef(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._c.items()))
        return self._hash

    def __add__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        acc = dict(self._c)
        for k, v in other._c.items():
            acc[k] = acc.get(k, 0) + v
        return LaurentPoly._raw({k: acc[k] for k in sorted(acc) if acc[k]})

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def scale(self, c) -> "LaurentPoly":
        c = to_coef(c)
        if not c:
            return ZERO
        return LaurentPoly._raw({k: v * c for k, v in self._c.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        acc: dict[int, Coef] = {}
        for i, u in self._c.items():
            for j, v in other._c.items():
                acc[i + j] = acc.get(i + j, 0) + u * v
        return LaurentPoly._raw({k: acc[k] for k in sorted(acc) if acc[k]})

    def __rmul__(self, other) -> "LaurentPoly":
        return self.scale(other)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._c) == 1:
                ((k, v),) = self._c.items()
                return LaurentPoly._raw({k * n: v**n})
            raise ValueError("negative powers only for monomials")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by ``z^m``."""
        return LaurentPoly._raw({k + m: v for k, v in self._c.items()})

    # -- substitutions -----------------------------------------------------

    def scale_arg(self, t) -> "LaurentPoly":
        """``f[t z]``: coefficient of ``z^k`` picks up ``t^k``."""
        t = to_coef(t)
        return LaurentPoly._raw({k: v * t**k for k, v in self._c.items()})

    def reflect(self) -> "LaurentPoly":
        """``f[z^{-1}]``."""
        return LaurentPoly._raw({-k: v for k, v in reversed(self._c.items())})

    # -- output ------------------------------------------------------------

    def to_json_obj(self) -> list:
        return [
            {"exp": k, "num": str(v.numerator), "den": str(v.denominator)}
            for k, v in self._c.items()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: list) -> "LaurentPoly":
        return cls((int(t["exp"]), Coef(int(t["num"]), int(t["den"]))) for t in obj)

    def __repr__(self) -> str:
        if not self._c:
            return "LaurentPoly(0)"
        return "LaurentPoly(" + " + ".join(f"({v})*z^{k}" for k, v in self._c.items()) + ")"


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: Coef(1)})
Z = LaurentPoly._raw({1: Coef(1)})
ZINV = LaurentPoly._raw({-1: Coef(1)})


def poly(*coeffs, low: int = 0) -> LaurentPoly:
    """Shorthand: ``poly(c0, c1, ...)`` is ``c0 + c1 z + ...`` (shifted by ``low``)."""
    return LaurentPoly.from_dense(low, coeffs)


SUBSTITUTIONS = ("qz", "qinv_z", "zinv", "q_zinv", "qhalfinv_z", "qhalf_z")


def substitute(f: LaurentPoly, kind: str, P: ParamPack) -> LaurentPoly:
    """Apply one of the argument substitutions used by the operators.

    ``kind`` is ``"qz"`` (z -> qz), ``"qinv_z"`` (z -> z/q), ``"zinv"``
    (z -> 1/z), ``"q_zinv"`` (z -> q/z), ``"qhalfinv_z"`` (z -> z/s) or
    ``"qhalf_z"`` (z -> s z), where ``s**2 = q``.
    """
    if kind == "qz":
        return f.scale_arg(P.q)
    if kind == "qinv_z":
        return f.scale_arg(1 / P.q)
    if kind == "zinv":
        return f.reflect()
    if kind == "q_zinv":
        return _q_over_z(f, P.q)
    if kind == "qhalfinv_z":
        return f.scale_arg(1 / P.s)
    if kind == "qhalf_z":
        return f.scale_arg(P.s)
    raise ValueError(f"unknown substitution {kind!r}")


def _q_over_z(f: LaurentPoly, q: Coef) -> LaurentPoly:
    # c_k z^k -> c_k q^k z^{-k}
    return LaurentPoly._raw({-k: v * q**k for k, v in reversed(f.items())})


def is_symmetric(f: LaurentPoly) -> bool:
    return f.is_symmetric()


def divide_exact(num: LaurentPoly, den: LaurentPoly) -> LaurentPoly:
    """Return ``h`` with ``h * den == num``; raise :class:`NotDivisible` otherwise."""
    if not den:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not num:
        return ZERO
    # Strip monomial factors; the rest is ordinary polynomial long division
    # from the top, where the divisor has a nonzero constant term.
    d_lo, d_hi = den.min_exp, den.max_exp
    n_lo = num.min_exp
    dc = [den.coeff(d_lo + i) for i in range(d_hi - d_lo + 1)]
    rem = {k - n_lo: v for k, v in num.items()}
    top = max(rem)
    dlen = len(dc) - 1
    lead = dc[-1]
    quot: dict[int, Coef] = {}
    for i in range(top, dlen - 1, -1):
        r = rem.pop(i, 0)
        if not r:
            continue
        t = r / lead
        quot[i - dlen] = t
        for j in range(dlen):
            if dc[j]:
                rem[i - dlen + j] = rem.get(i - dlen + j, 0) - t * dc[j]
    if any(rem.values()):
        raise NotDivisible(f"{num!r} is not divisible by {den!r}")
    shift = n_lo - d_lo
    return LaurentPoly._raw({k + shift: quot[k] for k in sorted(quot) if quot[k]})


@dataclass(frozen=True)
class RatLaurent:
    """A quotient of Laurent polynomials awaiting exact cancellation."""

    numerator: LaurentPoly
    denominator: LaurentPoly

    def __post_init__(self):
        if not self.denominator:
            raise ZeroDivisionError("RatLaurent with zero denominator")

    def __add__(self, other: "RatLaurent") -> "RatLaurent":
        if self.denominator == other.denominator:
            return RatLaurent(self.numerator + other.numerator, self.denominator)
        return RatLaurent(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def to_laurent(self) -> LaurentPoly:
        return divide_exact(self.numerator, self.denominator)
