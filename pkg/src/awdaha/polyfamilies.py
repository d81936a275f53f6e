"""Symmetric and non-symmetric Askey-Wilson polynomial families.

All families are monic Laurent polynomials (coefficient of ``z^n`` is 1,
except ``E_{-n}``, which is normalized at ``z^{-n}``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .coeff import Coef, ParamPack, qpochhammer, recurrence_coeffs
from .errors import DegenerateParams
from .laurent import ONE, ZERO, LaurentPoly, divide_exact, poly

FAMILIES = ("P", "Q", "Pdag", "Qdag", "E")
P_MODES = ("hypergeometric", "recurrence")
E_MODES = ("via_q", "via_qdag")


def _require_depth(P: ParamPack, n: int):
    if n > P.max_degree_certified:
        raise DegenerateParams(
            f"degree {n} exceeds certified depth {P.max_degree_certified}")


def _nonzero(x: Coef, reason: str) -> Coef:
    if x == 0:
        raise DegenerateParams(reason)
    return x


def _aw_p_hypergeometric(P: ParamPack, n: int) -> LaurentPoly:
    q, a, b, c, d = P.q, P.a, P.b, P.c, P.d
    abcd = P.abcd
    total = ZERO
    az_poch = ONE  # (az, a/z; q)_k
    for k in range(n + 1):
        num = (qpochhammer(q ** (-n), P, k)
               * qpochhammer(a * b * q**k, P, n - k)
               * qpochhammer(a * c * q**k, P, n - k)
               * qpochhammer(a * d * q**k, P, n - k)
               * q**k)
        den = qpochhammer(q, P, k) * qpochhammer(abcd * q ** (n + k - 1), P, n - k)
        _nonzero(den, f"vanishing denominator in P_{n} sum at k={k}")
        if num:
            total = total + az_poch.scale(num / den)
        aq = a * q**k
        az_poch = az_poch * poly(1, -aq) * LaurentPoly({0: 1, -1: -aq})
    return total.scale(a ** (-n))


def _aw_p_recurrence(P: ParamPack, n: int) -> LaurentPoly:
    zsym = LaurentPoly({-1: 1, 1: 1})
    prev, cur = ZERO, ONE
    for m in range(n):
        beta, gamma = recurrence_coeffs(P, m)
        nxt = zsym * cur - cur.scale(beta)
        if m >= 1:
            nxt = nxt - prev.scale(gamma)
        prev, cur = cur, nxt
    return cur


def aw_p(P: ParamPack, n: int, mode: str = "recurrence") -> LaurentPoly:
    """Monic Askey-Wilson polynomial ``P_n[z; a, b, c, d | q]``.

    ``mode="hypergeometric"`` evaluates the terminating balanced sum;
    ``mode="recurrence"`` runs the three-term recurrence from ``P_0 = 1``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _require_depth(P, n)
    if mode == "hypergeometric":
        return _aw_p_hypergeometric(P, n)
    if mode == "recurrence":
        return _aw_p_recurrence(P, n)
    raise ValueError(f"unknown mode {mode!r}")


def family_q(P: ParamPack, n: int, mode: str = "recurrence") -> LaurentPoly:
    """``Q_n = (ab)^{-1} z^{-1} (1-az)(1-bz) P_{n-1}[z; qa, qb, c, d]``, an eigenvector of
    ``T1`` with eigenvalue ``-1``."""
    if n < 1:
        raise ValueError("Q_n needs n >= 1")
    child = P.shifted(a=P.q * P.a, b=P.q * P.b)
    pref = LaurentPoly({-1: 1}) * poly(1, -P.a) * poly(1, -P.b)
    return (pref * aw_p(child, n - 1, mode)).scale(1 / (P.a * P.b))


def family_pdag(P: ParamPack, n: int, mode: str = "recurrence") -> LaurentPoly:
    """``q^{n/2} P_n[q^{-1/2} z; q^{1/2}a, q^{1/2}b, q^{-1/2}c, q^{-1/2}d]``."""
    if n < 1:
        raise ValueError("Pdag_n needs n >= 1")
    s = P.s
    child = P.shifted(a=s * P.a, b=s * P.b, c=P.c / s, d=P.d / s)
    return aw_p(child, n, mode).scale_arg(1 / s).scale(s**n)


def family_qdag(P: ParamPack, n: int, mode: str = "recurrence") -> LaurentPoly:
    """``q^{(n-1)/2} z^{-1}(c-z)(d-z) P_{n-1}[q^{-1/2} z; q^{1/2}a, .., q^{1/2}d]``."""
    if n < 1:
        raise ValueError("Qdag_n needs n >= 1")
    s = P.s
    child = P.shifted(a=s * P.a, b=s * P.b, c=s * P.c, d=s * P.d)
    pref = LaurentPoly({-1: 1}) * poly(P.c, -1) * poly(P.d, -1)
    inner = aw_p(child, n - 1, mode).scale_arg(1 / s)
    return (pref * inner).scale(s ** (n - 1))


def e_nonsym(P: ParamPack, n: int, mode: str = "via_q") -> LaurentPoly:
    """Non-symmetric Askey-Wilson polynomial ``E_n`` for any integer ``n``.

    ``via_q`` combines ``P_n`` and ``Q_n``; ``via_qdag`` combines ``P_n`` and
    ``Qdag_n``.  Both need ``1 - q^{2|n|-1} abcd != 0``; ``via_q`` also needs
    ``ab != 1`` and ``via_qdag`` needs ``q^{|n|-1} cd != 1``.
    """
    if mode not in E_MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if n == 0:
        return ONE
    m = abs(n)
    q, ab, cd, abcd = P.q, P.a * P.b, P.c * P.d, P.abcd
    if mode == "via_q":
        one_m_ab = _nonzero(1 - ab, "ab = 1")
        if n < 0:
            return (aw_p(P, m) - family_q(P, m)).scale(-ab / one_m_ab)
        den = one_m_ab * _nonzero(1 - q ** (2 * m - 1) * abcd, f"abcd = q^{{-{2 * m - 1}}}")
        cp = (1 - q**m * ab) * (1 - q ** (m - 1) * abcd) / den
        cq = -ab * (1 - q**m) * (1 - q ** (m - 1) * cd) / den
        return aw_p(P, m).scale(cp) + family_q(P, m).scale(cq)
    if n < 0:
        den = _nonzero(1 - q ** (m - 1) * cd, f"cd = q^{{-{m - 1}}}")
        return (aw_p(P, m) - family_qdag(P, m)).scale(1 / den)
    den = _nonzero(1 - q ** (2 * m - 1) * abcd, f"abcd = q^{{-{2 * m - 1}}}")
    return (aw_p(P, m).scale(q**m * (1 - q ** (m - 1) * abcd) / den)
            + family_qdag(P, m).scale((1 - q**m) / den))


def e_lowest_coeff(P: ParamPack, n: int) -> Coef:
    """Closed form for the coefficient of ``z^{-n}`` in ``E_n`` (``n >= 1``)."""
    q = P.q
    return 1 - (1 - q**n) * (1 - q ** (n - 1) * P.c * P.d) / (1 - q ** (2 * n - 1) * P.abcd)


def y_eigenvalue(P: ParamPack, n: int) -> Coef:
    """Eigenvalue of ``Y`` on ``E_n``: ``q^n`` for ``n < 0``, ``q^{n-1} abcd`` for ``n >= 0``."""
    if n < 0:
        return P.q**n
    return P.q ** (n - 1) * P.abcd


def t1_on_e(P: ParamPack, n: int) -> tuple[tuple[Coef, Coef], tuple[Coef, Coef]]:
    """Coefficients of ``T1`` on the pair ``(E_{-n}, E_n)``, ``n >= 1``.

    Returns ``((x, y), (u, v))`` with ``T1 E_{-n} = x E_{-n} + y E_n`` and
    ``T1 E_n = u E_{-n} + v E_n``.
    """
    q, ab, cd, abcd = P.q, P.a * P.b, P.c * P.d, P.abcd
    den = 1 - abcd * q ** (2 * n - 1)
    x = -(1 + ab - abcd * q ** (n - 1) - ab * q**n) / den
    y = -ab
    u = (1 - q**n) * (1 - ab * q**n) * (1 - cd * q ** (n - 1)) * (1 - abcd * q ** (n - 1)) / den**2
    v = -ab * q ** (n - 1) * (cd + q - cd * q**n - abcd * q**n) / den
    return (x, y), (u, v)


def qdiff_lhs(P: ParamPack, n: int, mode: str = "recurrence") -> LaurentPoly:
    """``(P_n[z/s] - P_n[s z]) / ((s^{-n} - s^n)(z - 1/z))`` by exact division."""
    s = P.s
    pn = aw_p(P, n, mode)
    num = pn.scale_arg(1 / s) - pn.scale_arg(s)
    den = LaurentPoly({1: 1, -1: -1}).scale(s ** (-n) - s**n)
    return divide_exact(num, den)


def qdiff_rhs(P: ParamPack, n: int, mode: str = "recurrence") -> LaurentPoly:
    """``P_{n-1}[z; s a, s b, s c, s d]``."""
    s = P.s
    child = P.shifted(a=s * P.a, b=s * P.b, c=s * P.c, d=s * P.d)
    return aw_p(child, n - 1, mode)


@dataclass(frozen=True)
class FamilyTag:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "P" and self.n < 0:
            raise ValueError("P_n needs n >= 0")
        if self.family in ("Q", "Pdag", "Qdag") and self.n < 1:
            raise ValueError(f"{self.family}_n needs n >= 1")

    @classmethod
    def parse(cls, text: str) -> "FamilyTag":
        """Parse ``"P:3"``, ``"E:-2"`` and so on."""
        try:
            fam, idx = text.split(":")
            return cls(fam.strip(), int(idx))
        except ValueError as exc:
            raise ValueError(f"bad family tag {text!r}: {exc}") from None

    def __str__(self):
        return f"{self.family}:{self.n}"


def family(P: ParamPack, tag: FamilyTag) -> LaurentPoly:
    if tag.family == "P":
        return aw_p(P, tag.n)
    if tag.family == "Q":
        return family_q(P, tag.n)
    if tag.family == "Pdag":
        return family_pdag(P, tag.n)
    if tag.family == "Qdag":
        return family_qdag(P, tag.n)
    return e_nonsym(P, tag.n)
