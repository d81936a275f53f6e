"""Free associative algebras, rewrite systems and normal forms.

Four presentations are supported, each over a fixed generator alphabet:

``AW3Q0``    K0, K1            two cubic relations plus Casimir = Q0
``AWQ``      K0, K1, T1        central extension, Casimir = Q0
``DAHA_T``   T1, T0, Z, Zi     quadratic relations, PBW form in T1, T0, Z
``DAHA_PBW`` T1, Z, Zi, Y, Yi  PBW form in T1, Y, Z

Every rewrite rule is obtained from a defining relation by solving for one
designated word.  Reduction applies the leftmost match (rules tried in list
order at each position) until no rule applies.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from numbers import Rational as _Rational
from typing import Iterable, Mapping

from .coeff import Coef, ParamPack, aw3_constants, ext_constants, to_coef
from .errors import AlgebraMismatch, NonTermination

Word = tuple

ALGEBRAS: dict[str, tuple[str, ...]] = {
    "AW3Q0": ("K0", "K1"),
    "AWQ": ("K0", "K1", "T1"),
    "DAHA_T": ("T1", "T0", "Z", "Zi"),
    "DAHA_PBW": ("T1", "Z", "Zi", "Y", "Yi"),
}

ALGEBRA_ALIASES = {
    "aw3q0": "AW3Q0", "awq": "AWQ", "daha_t": "DAHA_T", "daha_pbw": "DAHA_PBW",
}


def algebra_id(name: str) -> str:
    """Normalize an algebra name (``daha_t`` -> ``DAHA_T``)."""
    if name in ALGEBRAS:
        return name
    try:
        return ALGEBRA_ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown algebra {name!r}; choose from {sorted(ALGEBRA_ALIASES)}") from None


def parse_word(alg: str, text: str) -> Word:
    """Parse ``"K1,K0,K0"`` into a word; the empty string is the unit word."""
    alg = algebra_id(alg)
    if not text.strip():
        return ()
    word = tuple(g.strip() for g in text.split(","))
    bad = [g for g in word if g not in ALGEBRAS[alg]]
    if bad:
        raise ValueError(f"symbols {bad} are not generators of {alg} {ALGEBRAS[alg]}")
    return word


class NCPoly:
    """Noncommutative polynomial: immutable map from words to exact rationals."""

    __slots__ = ("alg", "_t")

    def __init__(self, alg: str, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        self.alg = algebra_id(alg)
        items = terms.items() if isinstance(terms, Mapping) else terms
        gens = ALGEBRAS[self.alg]
        acc: dict[Word, Coef] = {}
        for w, c in items:
            w = tuple(w)
            for g in w:
                if g not in gens:
                    raise ValueError(f"{g!r} is not a generator of {self.alg}")
            c = to_coef(c)
            if c:
                acc[w] = acc.get(w, 0) + c
        self._t = {w: c for w, c in acc.items() if c}

    @classmethod
    def _raw(cls, alg: str, t: dict) -> "NCPoly":
        out = cls.__new__(cls)
        out.alg = alg
        out._t = t
        return out

    @classmethod
    def word(cls, alg: str, w: Iterable[str], coef=1) -> "NCPoly":
        return cls(alg, {tuple(w): coef})

    @classmethod
    def gen(cls, alg: str, g: str) -> "NCPoly":
        return cls(alg, {(g,): 1})

    @classmethod
    def scalar(cls, alg: str, c) -> "NCPoly":
        return cls(alg, {(): c})

    @classmethod
    def zero(cls, alg: str) -> "NCPoly":
        return cls(alg)

    def sort_key(self, w: Word):
        gens = ALGEBRAS[self.alg]
        return (len(w), tuple(gens.index(g) for g in w))

    def items(self):
        """Terms in canonical order: by length, then lexicographic in generator order."""
        return sorted(self._t.items(), key=lambda t: self.sort_key(t[0]))

    def words(self) -> list[Word]:
        return [w for w, _ in self.items()]

    def coeff(self, w: Iterable[str]) -> Coef:
        return self._t.get(tuple(w), Coef(0))

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self.alg == other.alg and self._t == other._t
        if isinstance(other, _Rational):
            return self._t == ({(): to_coef(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash((self.alg, frozenset(self._t.items())))

    def _coerce(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            if other.alg != self.alg:
                raise AlgebraMismatch(f"{self.alg} vs {other.alg}")
            return other
        return NCPoly.scalar(self.alg, other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self._t)
        for w, c in other._t.items():
            acc[w] = acc.get(w, 0) + c
        return NCPoly._raw(self.alg, {w: c for w, c in acc.items() if c})

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw(self.alg, {w: -c for w, c in self._t.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "NCPoly":
        c = to_coef(c)
        if not c:
            return NCPoly.zero(self.alg)
        return NCPoly._raw(self.alg, {w: v * c for w, v in self._t.items()})

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        other = self._coerce(other)
        acc: dict[Word, Coef] = {}
        for u, a in self._t.items():
            for v, b in other._t.items():
                w = u + v
                acc[w] = acc.get(w, 0) + a * b
        return NCPoly._raw(self.alg, {w: c for w, c in acc.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = NCPoly.scalar(self.alg, 1)
        for _ in range(n):
            out = out * self
        return out

    def max_len(self) -> int:
        return max((len(w) for w in self._t), default=0)

    def to_json_obj(self) -> list:
        return [
            {"word": list(w), "num": str(c.numerator), "den": str(c.denominator)}
            for w, c in self.items()
        ]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, alg: str, obj: list) -> "NCPoly":
        return cls(alg, ((tuple(t["word"]), Coef(int(t["num"]), int(t["den"]))) for t in obj))

    def __repr__(self):
        if not self._t:
            return f"NCPoly[{self.alg}](0)"
        parts = [f"({c})*{'·'.join(w) or '1'}" for w, c in self.items()]
        return f"NCPoly[{self.alg}](" + " + ".join(parts) + ")"


def commutator(x: NCPoly, y: NCPoly) -> NCPoly:
    return x * y - y * x


def q_commutator(x: NCPoly, y: NCPoly, P: ParamPack) -> NCPoly:
    """``[x, y]_q = q^{1/2} x y - q^{-1/2} y x``."""
    return (x * y).scale(P.s) - (y * x).scale(1 / P.s)


def _W(alg: str, text: str) -> NCPoly:
    """The word ``text`` (space separated generators; ``"1"`` is the unit)."""
    if text == "1":
        return NCPoly.scalar(alg, 1)
    return NCPoly.word(alg, text.split())


def _lin(alg: str, *terms) -> NCPoly:
    """Linear combination from ``(coef, "g1 g2 ...")`` pairs."""
    out = NCPoly.zero(alg)
    for c, text in terms:
        out = out + _W(alg, text).scale(c)
    return out


# -- Casimir elements --------------------------------------------------------

def casimir_element(alg: str, P: ParamPack) -> NCPoly:
    """The Casimir element of ``AW3Q0`` (``Q``) or ``AWQ`` (the extended ``Q~``)."""
    alg = algebra_id(alg)
    q = P.q
    B, C0, C1, D0, D1, _ = aw3_constants(P)
    qq = q + 1 / q
    q3 = q + 1 + 1 / q
    if alg == "AW3Q0":
        return _lin(
            alg,
            (1, "K1 K0 K1 K0"),
            (-(q * q + 1 + 1 / (q * q)), "K0 K1 K0 K1"),
            (qq, "K0 K0 K1 K1"),
            (qq * C0, "K0 K0"),
            (qq * C1, "K1 K1"),
            (B * q3, "K0 K1"),
            (B, "K1 K0"),
            (q3 * D0, "K0"),
            (q3 * D1, "K1"),
        )
    if alg == "AWQ":
        E, F0, F1, G = ext_constants(P)
        t1ab = _lin(alg, (1, "T1"), (P.a * P.b, "1"))
        base = _lin(
            alg,
            (1, "K1 K0 K1 K0"),
            (-(q * q + 1 + 1 / (q * q)), "K0 K1 K0 K1"),
            (qq, "K0 K0 K1 K1"),
            (qq * C0, "K0 K0"),
            (qq * C1, "K1 K1"),
        )
        kk = _lin(alg, (q3, "K0 K1"), (1, "K1 K0"))
        return (
            base
            + (t1ab.scale(E) + B) * kk
            + (t1ab.scale(F0) + D0) * _W(alg, "K0").scale(q3)
            + (t1ab.scale(F1) + D1) * _W(alg, "K1").scale(q3)
            + t1ab.scale(G)
        )
    raise ValueError(f"no Casimir element for {alg}")


# -- defining relations ------------------------------------------------------

@dataclass(frozen=True)
class Relation:
    """A defining relation ``poly = 0`` and the word it is solved for."""

    name: str
    poly: NCPoly
    lead: Word


def _aw_cubic(alg: str, P: ParamPack, extended: bool) -> list[Relation]:
    q = P.q
    B, C0, C1, D0, D1, _ = aw3_constants(P)
    qq = q + 1 / q
    r1 = _lin(alg, (qq, "K1 K0 K1"), (-1, "K1 K1 K0"), (-1, "K0 K1 K1"),
              (-B, "K1"), (-C0, "K0"), (-D0, "1"))
    r2 = _lin(alg, (qq, "K0 K1 K0"), (-1, "K0 K0 K1"), (-1, "K1 K0 K0"),
              (-B, "K0"), (-C1, "K1"), (-D1, "1"))
    if extended:
        E, F0, F1, _ = ext_constants(P)
        t1ab = _lin(alg, (1, "T1"), (P.a * P.b, "1"))
        r1 = r1 - (_W(alg, "K1").scale(E) + F0) * t1ab
        r2 = r2 - (_W(alg, "K0").scale(E) + F1) * t1ab
    return [
        Relation("cubic.K1", r1, ("K1", "K1", "K0")),
        Relation("cubic.K0", r2, ("K1", "K0", "K0")),
    ]


def _daha_t_relations(P: ParamPack) -> list[Relation]:
    alg = "DAHA_T"
    q, a, b, c, d = P.q, P.a, P.b, P.c, P.d
    ab, cd = a * b, c * d
    return [
        Relation("Z.Zi", _lin(alg, (1, "Z Zi"), (-1, "1")), ("Z", "Zi")),
        Relation("Zi.Z", _lin(alg, (1, "Zi Z"), (-1, "1")), ("Zi", "Z")),
        Relation("T1.T1", _lin(alg, (1, "T1 T1"), (ab + 1, "T1"), (ab, "1")), ("T1", "T1")),
        Relation("T0.T0", _lin(alg, (1, "T0 T0"), (cd / q + 1, "T0"), (cd / q, "1")), ("T0", "T0")),
        Relation("T1.Z", _lin(alg, (1, "T1 Z"), (-1, "Zi T1"), (-(ab + 1), "Zi"), (a + b, "1")),
                 ("T1", "Z")),
        Relation("T1.Zi", _lin(alg, (1, "T1 Zi"), (-1, "Z T1"), (ab + 1, "Zi"), (-(a + b), "1")),
                 ("T1", "Zi")),
        Relation("T0.Z", _lin(alg, (1, "T0 Z"), (-q, "Zi T0"), (cd / q + 1, "Z"), (-(c + d), "1")),
                 ("T0", "Z")),
        # Forced by the T0 quadratic together with (q T0 Zi + c)(q T0 Zi + d) = 0;
        # the coefficient of Z T0 is q^{-1}, not q.
        Relation("T0.Zi", _lin(alg, (1, "T0 Zi"), (-1 / q, "Z T0"), (-(cd / q + 1) / q, "Z"),
                              ((c + d) / q, "1")),
                 ("T0", "Zi")),
    ]


def _daha_pbw_relations(P: ParamPack) -> list[Relation]:
    alg = "DAHA_PBW"
    q, a, b, c, d = P.q, P.a, P.b, P.c, P.d
    ab, cd, abcd = a * b, c * d, P.abcd
    u = 1 + cd / q  # (1 + q^{-1} cd)
    rels = [
        Relation("Z.Zi", _lin(alg, (1, "Z Zi"), (-1, "1")), ("Z", "Zi")),
        Relation("Zi.Z", _lin(alg, (1, "Zi Z"), (-1, "1")), ("Zi", "Z")),
        Relation("Y.Yi", _lin(alg, (1, "Y Yi"), (-1, "1")), ("Y", "Yi")),
        Relation("Yi.Y", _lin(alg, (1, "Yi Y"), (-1, "1")), ("Yi", "Y")),
        Relation("T1.T1", _lin(alg, (1, "T1 T1"), (ab + 1, "T1"), (ab, "1")), ("T1", "T1")),
        Relation("T1.Z", _lin(alg, (1, "T1 Z"), (-1, "Zi T1"), (-(ab + 1), "Zi"), (a + b, "1")),
                 ("T1", "Z")),
        Relation("T1.Zi", _lin(alg, (1, "T1 Zi"), (-1, "Z T1"), (ab + 1, "Zi"), (-(a + b), "1")),
                 ("T1", "Zi")),
        Relation("T1.Y", _lin(alg, (1, "T1 Y"), (-abcd / q, "Yi T1"), (ab + 1, "Y"),
                              (-ab * u, "1")),
                 ("T1", "Y")),
        Relation("T1.Yi", _lin(alg, (1, "T1 Yi"), (-q / abcd, "Y T1"), (-q / abcd * (1 + ab), "Y"),
                               (q / cd * u, "1")),
                 ("T1", "Yi")),
        Relation("Y.Z", _lin(
            alg, (1, "Y Z"), (-q, "Z Y"),
            (-(1 + ab) * cd, "Zi Yi T1"),
            ((a + b) * cd, "Yi T1"),
            (u, "Zi T1"),
            ((1 - q) * (1 + ab) * u, "Zi"),
            (-(c + d), "T1"),
            (-(1 - q) * (a + b) * u, "1"),
        ), ("Y", "Z")),
        Relation("Y.Zi", _lin(
            alg, (1, "Y Zi"), (-1 / q, "Zi Y"),
            ((1 + ab) * cd / q**2, "Zi Yi T1"),
            (-(a + b) * cd / q**2, "Yi T1"),
            (-u / q, "Zi T1"),
            ((c + d) / q, "T1"),
        ), ("Y", "Zi")),
        Relation("Yi.Z", _lin(
            alg, (1, "Yi Z"), (-1 / q, "Z Yi"),
            (q / ab * (1 + ab), "Zi Yi T1"),
            (-(a + b) / ab, "Yi T1"),
            (-q / abcd * u, "Zi T1"),
            (-q / abcd * (1 - q) * (1 + ab) * u, "Zi"),
            ((c + d) / abcd, "T1"),
            ((1 - q) * (1 + ab) * (c + d) / abcd, "1"),
        ), ("Yi", "Z")),
        Relation("Yi.Zi", _lin(
            alg, (1, "Yi Zi"), (-q, "Zi Yi"),
            (-q / ab * (1 + ab), "Zi Yi T1"),
            ((a + b) / ab, "Yi T1"),
            (q * q / abcd * u, "Zi T1"),
            (-q / abcd * (c + d), "T1"),
        ), ("Yi", "Zi")),
    ]
    return rels


def defining_relations(alg: str, P: ParamPack, with_casimir: bool = True) -> list[Relation]:
    """The presentation's relations, in rule order.

    With ``with_casimir=False`` the algebras ``AW3Q0``/``AWQ`` lose the
    relation fixing the Casimir, giving ``AW(3)`` and its central extension.
    """
    alg = algebra_id(alg)
    if alg == "AW3Q0":
        rels = _aw_cubic(alg, P, extended=False)
        if with_casimir:
            Q0 = aw3_constants(P).Q0
            rels.append(Relation("casimir", casimir_element(alg, P) - Q0,
                                 ("K1", "K0", "K1", "K0")))
        return rels
    if alg == "AWQ":
        ab = P.a * P.b
        rels = [
            Relation("T1.K0", _lin(alg, (1, "T1 K0"), (-1, "K0 T1")), ("T1", "K0")),
            Relation("T1.K1", _lin(alg, (1, "T1 K1"), (-1, "K1 T1")), ("T1", "K1")),
            Relation("T1.T1", _lin(alg, (1, "T1 T1"), (ab + 1, "T1"), (ab, "1")), ("T1", "T1")),
        ] + _aw_cubic(alg, P, extended=True)
        if with_casimir:
            Q0 = aw3_constants(P).Q0
            rels.append(Relation("casimir", casimir_element(alg, P) - Q0,
                                 ("K1", "K0", "K1", "K0")))
        return rels
    if alg == "DAHA_T":
        return _daha_t_relations(P)
    return _daha_pbw_relations(P)


def daha_quadratic_relations(P: ParamPack) -> list[tuple[str, NCPoly]]:
    """The four quadratic DAHA relations in factored form, over ``DAHA_T``."""
    alg = "DAHA_T"
    q = P.q
    one = NCPoly.scalar(alg, 1)
    T1, T0 = _W(alg, "T1"), _W(alg, "T0")
    Z, Zi = _W(alg, "Z"), _W(alg, "Zi")
    return [
        ("T1 quadratic", (T1 + P.a * P.b) * (T1 + one)),
        ("T0 quadratic", (T0 + P.c * P.d / q) * (T0 + one)),
        ("T1Z quadratic", (T1 * Z + P.a) * (T1 * Z + P.b)),
        ("T0Zi quadratic", ((T0 * Zi).scale(q) + P.c) * ((T0 * Zi).scale(q) + P.d)),
    ]


# -- rewriting ---------------------------------------------------------------

@dataclass
class RewriteSystem:
    """Ordered rules ``lead -> replacement`` for one algebra and pack."""

    alg: str
    P: ParamPack
    rules: list[tuple[Word, NCPoly]]
    relations: list[Relation]
    step_factor: int = 10_000
    _memo: dict = field(default_factory=dict, repr=False)
    _by_first: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for i, (lhs, _) in enumerate(self.rules):
            self._by_first.setdefault(lhs[0], []).append((i, lhs))

    def match(self, w: Word):
        """Leftmost match ``(position, rule index)``, or ``None``."""
        for pos in range(len(w)):
            for i, lhs in self._by_first.get(w[pos], ()):
                if w[pos:pos + len(lhs)] == lhs:
                    return pos, i
        return None

    def is_normal(self, w: Word) -> bool:
        return self.match(w) is None

    def _nf(self, w: Word, budget: list) -> dict:
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        m = self.match(w)
        if m is None:
            res = {w: Coef(1)}
        else:
            budget[0] += 1
            if budget[0] > budget[1]:
                raise NonTermination(budget[0], budget[1])
            pos, i = m
            lhs, rhs = self.rules[i]
            pre, post = w[:pos], w[pos + len(lhs):]
            acc: dict = {}
            for rw, c in rhs._t.items():
                for nw, e in self._nf(pre + rw + post, budget).items():
                    acc[nw] = acc.get(nw, 0) + c * e
            res = {k: v for k, v in acc.items() if v}
        self._memo[w] = res
        return res

    def reduce(self, x: NCPoly) -> NCPoly:
        """Normal form of ``x``: rewrite until no rule applies."""
        if x.alg != self.alg:
            raise AlgebraMismatch(f"{x.alg} polynomial given to {self.alg} rewrite system")
        n = max(1, x.max_len())
        budget = [0, self.step_factor * n * n]
        acc: dict = {}
        for w, c in x._t.items():
            for nw, e in self._nf(w, budget).items():
                acc[nw] = acc.get(nw, 0) + c * e
        return NCPoly._raw(self.alg, {k: v for k, v in acc.items() if v})


def rewrite_system(alg: str, P: ParamPack, with_casimir: bool = True) -> RewriteSystem:
    """Rules for ``alg``, each solving one defining relation for its lead word."""
    alg = algebra_id(alg)
    rels = defining_relations(alg, P, with_casimir)
    rules = []
    for rel in rels:
        c = rel.poly.coeff(rel.lead)
        if not c:
            raise ValueError(f"relation {rel.name} does not contain its lead word")
        rhs = NCPoly.word(alg, rel.lead) - rel.poly.scale(1 / c)
        rules.append((rel.lead, rhs))
    return RewriteSystem(alg, P, rules, rels)


def reduce(x: NCPoly, sys: RewriteSystem) -> NCPoly:
    return sys.reduce(x)


def is_central(c: NCPoly, sys: RewriteSystem) -> bool:
    """True iff ``c`` commutes with every generator modulo the relations."""
    for g in ALGEBRAS[sys.alg]:
        gp = NCPoly.gen(sys.alg, g)
        if sys.reduce(c * gp - gp * c):
            return False
    return True


# -- spanning sets -----------------------------------------------------------

_NORMAL_PATTERNS = {
    "AW3Q0": re.compile(r"(K0 )*(K1 K0 )?(K1 )*"),
    "AWQ": re.compile(r"(K0 )*(K1 K0 )?(K1 )*(T1 )?"),
    "DAHA_T": re.compile(r"((Z )*|(Zi )*)(T0 )?(T1 T0 )*(T1 )?"),
    "DAHA_PBW": re.compile(r"((Z )*|(Zi )*)((Y )*|(Yi )*)(T1 )?"),
}


def in_spanning_set(alg: str, w: Word) -> bool:
    """Membership of a word in the PBW-type spanning set of ``alg``.

    AW3Q0: ``K0^n (K1 K0)^l K1^m``, l in {0, 1}; AWQ: the same followed by
    ``T1^j``; DAHA_T: ``Z^m T0^i (T1 T0)^n T1^j``; DAHA_PBW: ``Z^m Y^n T1^i``,
    with negative powers written through ``Zi``/``Yi``.
    """
    alg = algebra_id(alg)
    return _NORMAL_PATTERNS[alg].fullmatch("".join(g + " " for g in w)) is not None


def inversions(w: Word) -> int:
    """Number of pairs ``i < j`` with ``w[i] = K1`` and ``w[j] = K0``."""
    ones = 0
    total = 0
    for g in w:
        if g == "K1":
            ones += 1
        elif g == "K0":
            total += ones
    return total


# -- maps between algebras ---------------------------------------------------

def substitute(x: NCPoly, target: str, images: Mapping[str, NCPoly]) -> NCPoly:
    """Algebra map sending each generator ``g`` of ``x`` to ``images[g]``."""
    target = algebra_id(target)
    out = NCPoly.zero(target)
    cache: dict[Word, NCPoly] = {(): NCPoly.scalar(target, 1)}

    def img(w: Word) -> NCPoly:
        if w not in cache:
            cache[w] = img(w[:-1]) * images[w[-1]]
        return cache[w]

    for w, c in x._t.items():
        out = out + img(w).scale(c)
    return out


def t_inverses(alg: str, P: ParamPack) -> tuple[NCPoly, NCPoly | None]:
    """``T1^{-1}`` (and ``T0^{-1}`` over DAHA_T) as linear expressions in ``T1``, ``T0``."""
    ab = P.a * P.b
    t1i = _lin(alg, (-1 / ab, "T1"), (-(1 + 1 / ab), "1"))
    if alg == "DAHA_T":
        qcd = P.q / (P.c * P.d)
        t0i = _lin(alg, (-qcd, "T0"), (-(1 + qcd), "1"))
        return t1i, t0i
    return t1i, None


def embed_awq(x: NCPoly, P: ParamPack) -> NCPoly:
    """Image in DAHA_PBW: ``K0 -> Y + q^{-1}abcd Y^{-1}``, ``K1 -> Z + Z^{-1}``, ``T1 -> T1``."""
    if x.alg != "AWQ":
        raise AlgebraMismatch(f"embed_awq expects an AWQ polynomial, got {x.alg}")
    alg = "DAHA_PBW"
    images = {
        "K0": _lin(alg, (1, "Y"), (P.abcd / P.q, "Yi")),
        "K1": _lin(alg, (1, "Z"), (1, "Zi")),
        "T1": _W(alg, "T1"),
    }
    return substitute(x, alg, images)


def pbw_to_daha_t(x: NCPoly, P: ParamPack) -> NCPoly:
    """``Y -> T1 T0``, ``Y^{-1} -> T0^{-1} T1^{-1}``, other generators fixed."""
    alg = "DAHA_T"
    t1i, t0i = t_inverses(alg, P)
    images = {
        "T1": _W(alg, "T1"), "Z": _W(alg, "Z"), "Zi": _W(alg, "Zi"),
        "Y": _W(alg, "T1 T0"), "Yi": t0i * t1i,
    }
    return substitute(x, alg, images)


def daha_t_to_pbw(x: NCPoly, P: ParamPack) -> NCPoly:
    """``T0 -> T1^{-1} Y``, other generators fixed."""
    alg = "DAHA_PBW"
    t1i, _ = t_inverses(alg, P)
    images = {
        "T1": _W(alg, "T1"), "Z": _W(alg, "Z"), "Zi": _W(alg, "Zi"),
        "T0": t1i * _W(alg, "Y"),
    }
    return substitute(x, alg, images)
