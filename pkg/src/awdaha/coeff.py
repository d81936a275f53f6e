"""Exact parameter packs and the scalar constants built from them.

Every scalar in the package is an exact rational ``Coef`` (gmpy2's ``mpq``;
``Fraction`` and ``int`` inputs are accepted and converted).  A parameter
pack stores ``s`` with ``q = s**2`` so that half-integer powers of ``q`` stay
rational.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _Rational
from typing import Iterator, NamedTuple, Union

from gmpy2 import mpq

from .errors import DegenerateParams

Coef = type(mpq())
Rational = Union[int, str, Fraction, Coef]


def to_coef(x: Rational) -> Coef:
    """Convert an int, ``"p/q"`` string, Fraction or mpq to a ``Coef``."""
    if type(x) is Coef:
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an exact rational")
    if isinstance(x, str):
        return mpq(Fraction(x))
    if isinstance(x, _Rational):
        return mpq(x.numerator, x.denominator)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def _fmt_power(m: int) -> str:
    if m == 0:
        return "1"
    if m == 1:
        return "q"
    return f"q^{m}"


def _fmt_inv_power(m: int) -> str:
    if m == 0:
        return "1"
    if m == 1:
        return "q^{-1}"
    return f"q^{{-{m}}}"


@dataclass(frozen=True)
class ParamPack:
    """Validated parameters ``(s, a, b, c, d)`` with ``q = s**2``.

    Build with :func:`make_params`; constructing directly skips validation.
    ``max_degree_certified`` is the degree up to which the nondegeneracy
    conditions have been checked.
    """

    s: Coef
    a: Coef
    b: Coef
    c: Coef
    d: Coef
    max_degree_certified: int
    strict: bool = False
    q: Coef = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.s * self.s)

    @property
    def abcd(self) -> Coef:
        return self.a * self.b * self.c * self.d

    def shifted(self, a=None, b=None, c=None, d=None, depth=None) -> "ParamPack":
        """Derive a pack with some parameters replaced, re-validated non-strictly."""
        return make_params(
            self.s,
            self.a if a is None else a,
            self.b if b is None else b,
            self.c if c is None else c,
            self.d if d is None else d,
            depth=self.max_degree_certified if depth is None else depth,
        )

    def as_strings(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("s", "q", "a", "b", "c", "d")}

    def describe(self) -> str:
        return ",".join(str(getattr(self, k)) for k in ("s", "a", "b", "c", "d"))


def _check_basic(q, a, b, c, d, depth):
    if q == 0:
        raise DegenerateParams("q = 0")
    for m in range(1, depth + 1):
        if q**m == 1:
            raise DegenerateParams(f"{_fmt_power(m)} = 1")
    for name, v in zip("abcd", (a, b, c, d)):
        if v == 0:
            raise DegenerateParams(f"{name} = 0")
    abcd = a * b * c * d
    # Degree n needs abcd*q^m != 1 up to m = 2n (recurrence denominators,
    # distinctness of the eigenvalues).
    for m in range(0, 2 * depth + 1):
        if abcd * q**m == 1:
            raise DegenerateParams(f"abcd = {_fmt_inv_power(m)}")


def _check_strict(q, a, b, c, d, depth):
    pairs = {
        "ab": a * b, "ac": a * c, "ad": a * d,
        "bc": b * c, "bd": b * d, "cd": c * d,
    }
    for name, v in pairs.items():
        for m in range(0, depth + 1):
            if v * q**m == 1:
                raise DegenerateParams(f"{name} = {_fmt_inv_power(m)} under strict")


def make_params(s, a, b, c, d, depth: int = 12, strict: bool = False) -> ParamPack:
    """Validate and build a :class:`ParamPack`.

    Raises :class:`DegenerateParams` naming the first violated condition.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    s, a, b, c, d = (to_coef(x) for x in (s, a, b, c, d))
    q = s * s
    _check_basic(q, a, b, c, d, depth)
    if strict:
        _check_strict(q, a, b, c, d, depth)
    return ParamPack(s, a, b, c, d, depth, strict)


def parse_params(text: str, depth: int = 12, strict: bool = False) -> ParamPack:
    """Parse ``"s,a,b,c,d"`` with each entry an integer or ``p/q``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 5:
        raise ValueError(f"expected 5 comma-separated rationals s,a,b,c,d, got {text!r}")
    try:
        vals = [Fraction(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational in {text!r}: {exc}") from None
    return make_params(*vals, depth=depth, strict=strict)


class ElemSym(NamedTuple):
    e1: Coef
    e2: Coef
    e3: Coef
    e4: Coef


def elem_sym(P: ParamPack) -> ElemSym:
    a, b, c, d = P.a, P.b, P.c, P.d
    return ElemSym(
        a + b + c + d,
        a * b + a * c + a * d + b * c + b * d + c * d,
        a * b * c + a * b * d + a * c * d + b * c * d,
        a * b * c * d,
    )


def qpochhammer(x, P: ParamPack, k: int) -> Coef:
    """``(x; q)_k``, the product of ``1 - x q^j`` for ``j < k``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    x = to_coef(x)
    out = Coef(1)
    qj = Coef(1)
    for _ in range(k):
        out *= 1 - x * qj
        qj *= P.q
    return out


class Aw3Constants(NamedTuple):
    B: Coef
    C0: Coef
    C1: Coef
    D0: Coef
    D1: Coef
    Q0: Coef


class ExtConstants(NamedTuple):
    E: Coef
    F0: Coef
    F1: Coef
    G: Coef


def aw3_constants(P: ParamPack) -> Aw3Constants:
    q = P.q
    e1, e2, e3, e4 = elem_sym(P)
    qi = 1 / q
    B = (1 - qi) ** 2 * (e3 + q * e1)
    C0 = (q - qi) ** 2
    C1 = qi * (q - qi) ** 2 * e4
    D0 = -qi**3 * (1 - q) ** 2 * (1 + q) * (e4 + q * e2 + q**2)
    D1 = -qi**3 * (1 - q) ** 2 * (1 + q) * (e1 * e4 + q * e3)
    Q0 = qi**4 * (1 - q) ** 2 * (
        q**4 * (e4 - e2)
        + q**3 * (e1**2 - e1 * e3 - 2 * e2)
        - q**2 * (e2 * e4 + 2 * e4 + e2)
        + q * (e3**2 - 2 * e2 * e4 - e1 * e3)
        + e4 * (1 - e2)
    )
    return Aw3Constants(B, C0, C1, D0, D1, Q0)


def ext_constants(P: ParamPack) -> ExtConstants:
    q, a, b, c, d = P.q, P.a, P.b, P.c, P.d
    e1, e2, e3, e4 = elem_sym(P)
    qi = 1 / q
    E = -qi**2 * (1 - q) ** 3 * (c + d)
    F0 = qi**3 * (1 - q) ** 3 * (1 + q) * (c * d + q)
    F1 = qi**3 * (1 - q) ** 3 * (1 + q) * (a + b) * c * d
    G = -qi**4 * (1 - q) ** 3 * (
        (a + b) * (c + d) * (c * d * (q**2 + 1) + q)
        - q * (a * b + 1) * ((c**2 + d**2) * (q + 1) - c * d)
        + (c * d + e4) * (q**2 + 1)
        + (e2 + e4 - a * b) * q**3
    )
    return ExtConstants(E, F0, F1, G)


def lambda_n(P: ParamPack, n: int) -> Coef:
    """Eigenvalue ``q^{-n} + abcd q^{n-1}`` of the second-order operator on ``P_n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    q = P.q
    return q ** (-n) + P.abcd * q ** (n - 1)


def _nonzero(x: Coef, reason: str) -> Coef:
    if x == 0:
        raise DegenerateParams(reason)
    return x


def recurrence_coeffs(P: ParamPack, n: int) -> tuple[Coef, Coef | None]:
    """``(beta_n, gamma_n)`` of the monic three-term recurrence.

    ``gamma_0`` is undefined and returned as ``None``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    q = P.q
    e1, e2, e3, e4 = elem_sym(P)
    if n == 0:
        # (1 - q^{-2} e4) cancels between numerator and denominator.
        beta = (e1 - e3) / _nonzero(1 - e4, "abcd = 1")
        return beta, None

    def den(m):
        return _nonzero(1 - q**m * e4, f"abcd = {_fmt_inv_power(m)}")

    beta = (
        q ** (n - 1)
        * ((1 - q**n - q ** (n + 1)) * e3 + q * e1 + q ** (2 * n - 1) * e3 * e4
           - q ** (n - 1) * (1 + q - q ** (n + 1)) * e1 * e4)
        / (den(2 * n - 2) * den(2 * n))
    )
    a, b, c, d = P.a, P.b, P.c, P.d
    qn1 = q ** (n - 1)
    gamma = Coef(1)
    for pair in (a * b, a * c, a * d, b * c, b * d, c * d):
        gamma *= 1 - qn1 * pair
    gamma *= 1 - q**n
    if n == 1:
        # (1 - q^{-1} e4) cancels.
        gamma /= den(0) ** 2 * den(1)
    else:
        gamma *= 1 - q ** (n - 2) * e4
        gamma /= den(2 * n - 3) * den(2 * n - 2) ** 2 * den(2 * n - 1)
    return beta, gamma


def _draw(rng: random.Random) -> Coef:
    nums = [k for k in range(-9, 10) if k != 0]
    return Coef(rng.choice(nums), rng.choice(nums))


def _generic_ok(P: ParamPack) -> bool:
    # Hypotheses of the eigenspace characterizations.
    if P.a**2 == 1 or P.b**2 == 1 or P.c**2 == P.q or P.d**2 == P.q:
        return False
    return True


def sample_params(rng: random.Random, depth: int, ultraspherical: bool = False,
                  max_tries: int = 10_000) -> ParamPack:
    """Draw a nondegenerate pack with numerators/denominators in [-9, 9] \\ {0}.

    Packs failing strict validation, or whose parameter-shifted children used
    by the polynomial families fail validation, are rejected and redrawn.
    With ``ultraspherical`` the pack is forced to ``c = -d = s, a = -b``.
    """
    for _ in range(max_tries):
        s = _draw(rng)
        a = _draw(rng)
        if ultraspherical:
            b, c, d = -a, s, -s
        else:
            b, c, d = _draw(rng), _draw(rng), _draw(rng)
        try:
            P = make_params(s, a, b, c, d, depth=depth, strict=True)
            if not ultraspherical and not _generic_ok(P):
                continue
            for _child in child_packs(P):
                pass
        except DegenerateParams:
            continue
        return P
    raise RuntimeError("could not sample a nondegenerate parameter pack")


def child_packs(P: ParamPack) -> Iterator[ParamPack]:
    """The parameter-shifted packs used by the shifted polynomial families."""
    s, q = P.s, P.q
    yield P.shifted(a=q * P.a, b=q * P.b)
    yield P.shifted(a=s * P.a, b=s * P.b, c=P.c / s, d=P.d / s)
    yield P.shifted(a=s * P.a, b=s * P.b, c=s * P.c, d=s * P.d)


def ultraspherical_of(P: ParamPack) -> ParamPack:
    """The q-ultraspherical specialization ``(s, t, -t, s, -s)`` of ``P``.

    ``t`` is the first of ``a, b, c, d`` giving a nondegenerate pack (``t = a``
    is degenerate exactly when ``a^2 q^{m+1} = 1``).
    """
    last = None
    for t in (P.a, P.b, P.c, P.d):
        try:
            return make_params(P.s, t, -t, P.s, -P.s, depth=P.max_degree_certified)
        except DegenerateParams as exc:
            last = exc
    raise last


def is_ultraspherical(P: ParamPack) -> bool:
    return P.a == -P.b and P.c == -P.d and P.c * P.c == P.q
