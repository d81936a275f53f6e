"""q-difference-reflection operators on Laurent polynomials.

Atomic operators act through explicit rational-coefficient formulas.  Each
formula is assembled over one common denominator and cancelled by a single
exact division, so an operator producing a non-Laurent result raises
:class:`~awdaha.errors.NotDivisible` instead of silently truncating.

Operators are linear, so the atoms are applied monomial by monomial with the
image of each ``z^k`` cached per parameter pack.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .coeff import Coef, ParamPack, to_coef
from .laurent import ONE, ZERO, LaurentPoly, RatLaurent, divide_exact, poly

ATOMS = (
    "Identity", "Z", "Zinv", "Zsym", "T1", "T0", "T1inv", "T0inv",
    "Y", "Yinv", "D", "Dsym",
)

_UNIT = Coef(1)

# Per-atom bound on how far the exponent window may grow.
GROWTH_BOUND = 2


# -- direct formulas ---------------------------------------------------------

def _lin(c0, c1) -> LaurentPoly:
    return poly(c0, c1)


def _one_minus(x) -> LaurentPoly:
    """``1 - x z``."""
    return poly(1, -x)


def _minus_z(x) -> LaurentPoly:
    """``x - z``."""
    return poly(x, -1)


def t1_direct(f: LaurentPoly, P: ParamPack) -> LaurentPoly:
    a, b = P.a, P.b
    num = _lin(-(1 + a * b), a + b) * f + _one_minus(a) * _one_minus(b) * f.reflect()
    return divide_exact(num, poly(1, 0, -1))


def t0_direct(f: LaurentPoly, P: ParamPack) -> LaurentPoly:
    q, c, d = P.q, P.c, P.d
    lead = poly(0, -(c + d), (c * d + q) / q)  # q^{-1} z ((cd+q) z - (c+d) q)
    num = lead * f - _minus_z(c) * _minus_z(d) * _sub_q_over_z(f, q)
    return divide_exact(num, poly(q, 0, -1))


def _sub_q_over_z(f: LaurentPoly, q: Coef) -> LaurentPoly:
    return LaurentPoly((-k, v * q**k) for k, v in f.items())


def _abcd_factors(P: ParamPack):
    a, b, c, d = P.a, P.b, P.c, P.d
    up = _one_minus(a) * _one_minus(b) * _one_minus(c) * _one_minus(d)
    down = _minus_z(a) * _minus_z(b) * _minus_z(c) * _minus_z(d)
    return up, down


def dsym_direct(f: LaurentPoly, P: ParamPack) -> LaurentPoly:
    """The second-order Askey-Wilson q-difference operator."""
    q = P.q
    up, down = _abcd_factors(P)
    one_m_z2 = poly(1, 0, -1)
    one_m_qz2 = poly(1, 0, -q)
    q_m_z2 = poly(q, 0, -1)
    num = (
        up * q_m_z2 * (f.scale_arg(q) - f)
        + down * one_m_qz2 * (f.scale_arg(1 / q) - f)
    )
    rest = divide_exact(num, one_m_z2 * one_m_qz2 * q_m_z2)
    return rest + f.scale(1 + P.abcd / q)


def y_closed_form(f: LaurentPoly, P: ParamPack) -> LaurentPoly:
    """``Y = T1 T0`` written out as a single q-difference-reflection formula."""
    q, a, b, c, d = P.q, P.a, P.b, P.c, P.d
    one_m_z2 = poly(1, 0, -1)
    one_m_qz2 = poly(1, 0, -q)
    q_m_z2 = poly(q, 0, -1)
    ab_lin = _lin(1 + a * b, -(a + b))  # 1 + ab - (a+b) z
    up, _ = _abcd_factors(P)
    t1 = poly(0, 1) * ab_lin * _lin((c + d) * q, -(c * d + q)) * one_m_qz2
    t2 = up * q_m_z2.scale(q)
    t3 = _one_minus(a) * _one_minus(b) * _lin(-(c * d + q), (c + d) * q) * q_m_z2
    t4 = _minus_z(c) * _minus_z(d) * ab_lin * one_m_qz2.scale(q)
    num = t1 * f + t2 * f.scale_arg(q) + t3 * f.reflect() + t4 * _sub_q_over_z(f, q)
    return divide_exact(num, (one_m_z2 * q_m_z2 * one_m_qz2).scale(q))


def d_closed_form(f: LaurentPoly, P: ParamPack) -> LaurentPoly:
    """``D = Y + q^{-1} abcd Y^{-1}`` written out as a single formula."""
    q, a, b, c, d = P.q, P.a, P.b, P.c, P.d
    one_m_z2 = poly(1, 0, -1)
    one_m_qz2 = poly(1, 0, -q)
    q_m_z2 = poly(q, 0, -1)
    q2_m_z2 = poly(q * q, 0, -1)
    zq = poly(0, 1 - q)  # (1-q) z
    up, _ = _abcd_factors(P)
    ab1, cd_q = a * b + 1, c * d + q
    t1 = (zq * _one_minus(a) * _one_minus(b)
          * poly(-q * (c + d), (q + 1) * cd_q, -q * (c + d)) * q2_m_z2)
    t2 = (zq * _minus_z(c) * _minus_z(d)
          * poly((a + b) * q, -ab1 * (q + 1), a + b) * one_m_qz2.scale(q))
    bracket = (
        poly(q, 0, 1).scale((a + b) * cd_q)
        + poly(1, 0, 1).scale(q * ab1 * (c + d))
        - poly(0, (q + 1) * cd_q * ab1 + 2 * q * (a + b) * (c + d))
    )
    t3 = bracket * poly(0, 1) * one_m_qz2 * q2_m_z2
    t4 = (_minus_z(c) * _minus_z(d) * _minus_z(a * q) * _minus_z(b * q)
          * (one_m_z2 * one_m_qz2).scale(q))
    t5 = up * (q_m_z2 * q2_m_z2).scale(q)
    num = (t1 * f.reflect() + t2 * _sub_q_over_z(f, q) + t3 * f
           + t4 * f.scale_arg(1 / q) + t5 * f.scale_arg(q))
    den = (one_m_z2 * q_m_z2 * one_m_qz2 * q2_m_z2).scale(q)
    return RatLaurent(num, den).to_laurent()


# -- cached monomial images --------------------------------------------------

def _combine(terms: Iterable[tuple[Coef, LaurentPoly]]) -> LaurentPoly:
    acc: dict[int, Coef] = {}
    for c, g in terms:
        for k, v in g.items():
            acc[k] = acc.get(k, 0) + c * v
    return LaurentPoly._raw({k: acc[k] for k in sorted(acc) if acc[k]})


@lru_cache(maxsize=65536)
def _atom_on_monomial(kind: str, k: int, P: ParamPack) -> LaurentPoly:
    zk = LaurentPoly._raw({k: Coef(1)})
    if kind == "T1":
        out = t1_direct(zk, P)
    elif kind == "T0":
        out = t0_direct(zk, P)
    elif kind == "T1inv":
        ab = P.a * P.b
        out = t1_direct(zk, P).scale(-1 / ab) + zk.scale(-(1 + 1 / ab))
    elif kind == "T0inv":
        qcd = P.q / (P.c * P.d)
        out = t0_direct(zk, P).scale(-qcd) + zk.scale(-(1 + qcd))
    elif kind == "Y":
        out = apply_atom("T1", _atom_on_monomial("T0", k, P), P)
    elif kind == "Yinv":
        out = apply_atom("T0inv", _atom_on_monomial("T1inv", k, P), P)
    elif kind == "D":
        out = _atom_on_monomial("Y", k, P) + _atom_on_monomial("Yinv", k, P).scale(P.abcd / P.q)
    else:
        raise ValueError(f"no monomial cache for {kind!r}")
    assert out.degree() <= abs(k) + GROWTH_BOUND, (kind, k, out)
    return out


@lru_cache(maxsize=65536)
def _dsym_on_sym_basis(k: int, P: ParamPack) -> LaurentPoly:
    mk = ONE if k == 0 else LaurentPoly._raw({-k: Coef(1), k: Coef(1)})
    out = dsym_direct(mk, P)
    assert out.degree() <= k + GROWTH_BOUND, (k, out)
    return out


def apply_atom(kind: str, f: LaurentPoly, P: ParamPack) -> LaurentPoly:
    if not f:
        return ZERO
    if kind == "Identity":
        return f
    if kind == "Z":
        return f.shift(1)
    if kind == "Zinv":
        return f.shift(-1)
    if kind == "Zsym":
        return f.shift(1) + f.shift(-1)
    if kind == "Dsym":
        if f.is_symmetric():
            return _combine((v, _dsym_on_sym_basis(k, P)) for k, v in f.items() if k >= 0)
        return dsym_direct(f, P)
    if kind not in ATOMS:
        raise ValueError(f"unknown atomic operator {kind!r}")
    return _combine((v, _atom_on_monomial(kind, k, P)) for k, v in f.items())


# -- expression trees --------------------------------------------------------

class OpExpr:
    """Base class of operator expressions.

    ``A * B`` is composition (apply ``B`` first), ``c * A`` scales,
    ``A + B`` and ``A - B`` add.
    """

    def __add__(self, other):
        other = _as_op(other)
        return Sum(_terms(self) + _terms(other))

    def __radd__(self, other):
        return _as_op(other) + self

    def __neg__(self):
        return Scale(Coef(-1), self)

    def __sub__(self, other):
        return self + (-_as_op(other))

    def __rsub__(self, other):
        return _as_op(other) - self

    def __mul__(self, other):
        if isinstance(other, OpExpr):
            return Product(_factors(self) + _factors(other))
        return Scale(to_coef(other), self)

    def __rmul__(self, other):
        return Scale(to_coef(other), self)


@dataclass(frozen=True, eq=True)
class Atomic(OpExpr):
    kind: str

    def __post_init__(self):
        if self.kind not in ATOMS:
            raise ValueError(f"unknown atomic operator {self.kind!r}")

    def __repr__(self):
        return self.kind


@dataclass(frozen=True, eq=True)
class Scale(OpExpr):
    coef: Coef
    op: OpExpr

    def __post_init__(self):
        object.__setattr__(self, "coef", to_coef(self.coef))

    def __repr__(self):
        return f"({self.coef})*{self.op!r}"


@dataclass(frozen=True, eq=True)
class Sum(OpExpr):
    terms: tuple

    def __repr__(self):
        return "(" + " + ".join(map(repr, self.terms)) + ")"


@dataclass(frozen=True, eq=True)
class Product(OpExpr):
    factors: tuple

    def __repr__(self):
        return "*".join(map(repr, self.factors))


def _as_op(x) -> OpExpr:
    if isinstance(x, OpExpr):
        return x
    return Scale(to_coef(x), I)


def _terms(x: OpExpr) -> tuple:
    return x.terms if isinstance(x, Sum) else (x,)


def _factors(x: OpExpr) -> tuple:
    return x.factors if isinstance(x, Product) else (x,)


I = Atomic("Identity")
Z = Atomic("Z")
Zinv = Atomic("Zinv")
Zsym = Atomic("Zsym")
T1 = Atomic("T1")
T0 = Atomic("T0")
T1inv = Atomic("T1inv")
T0inv = Atomic("T0inv")
Y = Atomic("Y")
Yinv = Atomic("Yinv")
D = Atomic("D")
Dsym = Atomic("Dsym")


def compose(*ops: OpExpr) -> OpExpr:
    """Composition ``ops[0] * ops[1] * ...``; the empty composition is the identity."""
    if not ops:
        return I
    if len(ops) == 1:
        return ops[0]
    return Product(tuple(f for op in ops for f in _factors(op)))


def depth(op: OpExpr) -> int:
    """Number of atomic factors along the longest composition chain."""
    if isinstance(op, Atomic):
        return 0 if op.kind == "Identity" else 1
    if isinstance(op, Scale):
        return depth(op.op)
    if isinstance(op, Sum):
        return max((depth(t) for t in op.terms), default=0)
    return sum(depth(f) for f in op.factors)


@lru_cache(maxsize=262144)
def _apply_atoms(kinds: tuple, f: LaurentPoly, P: ParamPack) -> LaurentPoly:
    if len(kinds) == 1:
        return apply_atom(kinds[0], f, P)
    return apply_atom(kinds[0], _apply_atoms(kinds[1:], f, P), P)


def apply(op: OpExpr, f: LaurentPoly, P: ParamPack, crosscheck: bool = False) -> LaurentPoly:
    """Exact action of ``op`` on ``f``.

    With ``crosscheck`` every ``Y`` and ``D`` atom is also evaluated by its
    closed-form formula and an ``AssertionError`` is raised on mismatch.
    """
    if isinstance(op, Atomic):
        out = apply_atom(op.kind, f, P)
        if crosscheck and op.kind in ("Y", "D"):
            closed = (y_closed_form if op.kind == "Y" else d_closed_form)(f, P)
            assert closed == out, f"{op.kind} composition disagrees with closed form on {f!r}"
        return out
    if isinstance(op, Scale):
        return apply(op.op, f, P, crosscheck).scale(op.coef)
    if isinstance(op, Sum):
        parts = []
        for t in op.terms:
            if isinstance(t, Scale):
                parts.append((t.coef, apply(t.op, f, P, crosscheck)))
            else:
                parts.append((_UNIT, apply(t, f, P, crosscheck)))
        return _combine(parts)
    if isinstance(op, Product):
        if not crosscheck and all(isinstance(x, Atomic) for x in op.factors):
            return _apply_atoms(tuple(x.kind for x in op.factors), f, P)
        for x in reversed(op.factors):
            f = apply(x, f, P, crosscheck)
        return f
    raise TypeError(f"not an operator expression: {op!r}")


# -- truncation windows ------------------------------------------------------

def full_basis(N: int) -> list[LaurentPoly]:
    """``z^k`` for ``-N <= k <= N``."""
    return [LaurentPoly.monomial(k) for k in range(-N, N + 1)]


def sym_basis(N: int) -> list[LaurentPoly]:
    """``1`` and ``z^k + z^{-k}`` for ``1 <= k <= N``."""
    return [ONE] + [LaurentPoly({k: 1, -k: 1}) for k in range(1, N + 1)]


def basis(N: int, kind: str = "full") -> list[LaurentPoly]:
    if kind == "full":
        return full_basis(N)
    if kind == "symmetric":
        return sym_basis(N)
    raise ValueError(f"unknown basis {kind!r}")


def first_difference(A: OpExpr, B: OpExpr, P: ParamPack, inputs: Sequence[LaurentPoly]):
    """First input on which ``A`` and ``B`` differ, as ``(f, A f, B f)``; else ``None``."""
    for f in inputs:
        x, y = apply(A, f, P), apply(B, f, P)
        if x != y:
            return f, x, y
    return None


def equal_on_truncation(A: OpExpr, B: OpExpr, P: ParamPack, N: int,
                        basis_kind: str = "full") -> bool:
    """True iff ``A`` and ``B`` agree on every basis vector of the window."""
    return first_difference(A, B, P, basis(N, basis_kind)) is None


def matrix_on_truncation(A: OpExpr, P: ParamPack, N: int,
                         basis_kind: str = "full") -> list[list[Coef]]:
    """Exact matrix of ``A`` from the window basis to exponents ``|k| <= N + 2 depth(A)``.

    Rows are indexed by output exponent (ascending), columns by input basis
    vector.  Raises ``AssertionError`` if an image leaves the output window.
    """
    M = N + GROWTH_BOUND * depth(A)
    cols = [apply(A, f, P) for f in basis(N, basis_kind)]
    for g in cols:
        assert g.degree() <= M, f"image of degree {g.degree()} exceeds window {M}"
    return [[g.coeff(k) for g in cols] for k in range(-M, M + 1)]


# -- textual expressions -----------------------------------------------------

TEXT_ATOMS = {
    "Z": "Z", "Zi": "Zinv", "Zs": "Zsym", "T1": "T1", "T0": "T0",
    "T1i": "T1inv", "T0i": "T0inv", "Y": "Y", "Yi": "Yinv",
    "D": "D", "Ds": "Dsym", "I": "Identity",
}

_TOKEN = re.compile(r"\s*(?:(T1i|T0i|T1|T0|Zi|Zs|Z|Yi|Y|Ds|D|I)|(\(\s*-?\d+(?:\s*/\s*\d+)?\s*\))|(\d+(?:/\d+)?)|([*+\-()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse operator expression at {text[pos:]!r}")
        atom, paren_num, num, punct = m.groups()
        if atom:
            out.append(("atom", atom))
        elif paren_num:
            out.append(("num", re.sub(r"[\s()]", "", paren_num)))
        elif num:
            out.append(("num", num))
        else:
            out.append(("punct", punct))
        pos = m.end()
    return out


def parse_op(text: str) -> OpExpr:
    """Parse e.g. ``"T1*T0 + (1/4)*Yi"`` into an :class:`OpExpr`."""
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i] if i < len(toks) else (None, None)

    def take():
        nonlocal i
        i += 1
        return toks[i - 1]

    def expr():
        node = term()
        while peek() in (("punct", "+"), ("punct", "-")):
            _, sym = take()
            rhs = term()
            node = node + rhs if sym == "+" else node - rhs
        return node

    def term():
        node = factor()
        while peek() == ("punct", "*"):
            take()
            rhs = factor()
            if isinstance(node, Scale) and node.op == I:
                node = Scale(node.coef, rhs)
            else:
                node = node * rhs
        return node

    def factor():
        kind, val = peek()
        if kind == "atom":
            take()
            return Atomic(TEXT_ATOMS[val])
        if kind == "num":
            take()
            return Scale(Coef(val), I)
        if (kind, val) == ("punct", "-"):
            take()
            return -factor()
        if (kind, val) == ("punct", "("):
            take()
            node = expr()
            if take() != ("punct", ")"):
                raise ValueError("unbalanced parentheses")
            return node
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    if not toks:
        raise ValueError("empty operator expression")
    node = expr()
    if i != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return node
