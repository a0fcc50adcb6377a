"""
Skew Laurent series L = R localized at the monomials.

``LaurentElem(shift=u, body=f)`` denotes (x^u)^-1 * f, the inverse of the
normal-form monomial x^u times a power series. Since (x^u)^-1 = mu(u,u) x^-u,
the stored body maps to terms

    (x^u)^-1 c x^s = mu(u,u) mu(-u,s) c x^(s-u).

A body of precision d with shift u knows every term of total degree < d - |u|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Sequence

from ..exceptions import NotAUnitError, PrecisionError, SignatureMismatch
from ..lattice.qmatrix import QMatrix, mu
from ..scalars import FieldElem, field_embed
from .monomial import Monomial, add, grlex_key, neg, sub, total_degree
from .skew import SkewSeries, conjugate_by_monomial, format_terms, invert, mul

LaurentTerms = Dict[Monomial, FieldElem]


@dataclass(frozen=True, eq=False)
class LaurentElem:
    shift: Monomial
    body: SkewSeries

    def __post_init__(self) -> None:
        object.__setattr__(self, "shift", tuple(int(e) for e in self.shift))
        if len(self.shift) != self.body.n:
            raise SignatureMismatch(
                f"shift of length {len(self.shift)} for a series in {self.body.n} variables"
            )

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_series(cls, f: SkewSeries) -> "LaurentElem":
        return cls((0,) * f.n, f)

    @classmethod
    def from_terms(
        cls, q: QMatrix, terms: Mapping[Sequence[int], FieldElem], known_degree: int
    ) -> "LaurentElem":
        """Element with the given terms, known below total degree *known_degree*.

        The shift is the least u >= 0 with every s + u in N^n; the body is x^u * f.
        """
        n, sig = q.n, q.signature
        terms = {tuple(s): c for s, c in terms.items() if not c.is_zero()}
        u = tuple(max(0, -min((s[k] for s in terms), default=0)) for k in range(n))
        precision = known_degree + total_degree(u)
        if precision < 1:
            raise PrecisionError(f"no term is known below total degree {known_degree}")
        body: LaurentTerms = {}
        for s, c in terms.items():
            scalar = mu(q, u, s)
            body[add(u, s)] = c if scalar.is_identity() else field_embed(scalar) * c
        return cls(u, SkewSeries(n, sig, precision, body))

    @classmethod
    def monomial(
        cls, q: QMatrix, s: Sequence[int], known_degree: int, c: FieldElem | int = 1
    ) -> "LaurentElem":
        if not isinstance(c, FieldElem):
            c = FieldElem.from_rational(q.signature, c)
        return cls.from_terms(q, {tuple(s): c}, known_degree)

    # -- access ---------------------------------------------------------
    @property
    def n(self) -> int:
        return self.body.n

    def known_degree(self) -> int:
        return self.body.precision - total_degree(self.shift)

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def terms(self, q: QMatrix) -> LaurentTerms:
        """Normal-form terms c x^e (e in Z^n), grlex ordered."""
        u = self.shift
        if not any(u):
            return dict(self.body.items())
        base = mu(q, u, u)
        out: LaurentTerms = {}
        for s, c in self.body.items():
            scalar = base * mu(q, neg(u), s)
            out[sub(s, u)] = c if scalar.is_identity() else field_embed(scalar) * c
        return dict(sorted(out.items(), key=lambda kv: grlex_key(kv[0])))

    def is_series(self, q: QMatrix) -> bool:
        return all(min(s, default=0) >= 0 for s in self.terms(q))

    def to_series(self, q: QMatrix) -> SkewSeries:
        """The element as a power series (all exponents >= 0)."""
        terms = self.terms(q)
        if not all(min(s, default=0) >= 0 for s in terms):
            raise NotAUnitError("Laurent element has negative exponents and is not in R")
        d = self.known_degree()
        if d < 1:
            raise PrecisionError(f"no term is known below total degree {d}")
        return SkewSeries(self.n, self.body.signature, d, terms)

    def format(self, q: QMatrix) -> str:
        return format_terms(list(self.terms(q).items()))


def _check_ring(q: QMatrix, *elems: LaurentElem) -> None:
    for a in elems:
        if a.n != q.n or a.body.signature != q.signature:
            raise SignatureMismatch(
                f"Laurent element over {a.n} variables used with a {q.n}x{q.n} q-matrix"
            )


def laurent_mul(q: QMatrix, a: LaurentElem, b: LaurentElem) -> LaurentElem:
    """(x^u)^-1 f * (x^v)^-1 g = (x^(u+v))^-1 mu(v,u)^-1 (x^v f x^-v) g."""
    _check_ring(q, a, b)
    u, v = a.shift, b.shift
    body = mul(q, conjugate_by_monomial(q, v, a.body), b.body)
    scalar = mu(q, v, u)
    if not scalar.is_identity():
        body = body.scale(scalar.inverse())
    return LaurentElem(add(u, v), body)


def laurent_add(q: QMatrix, a: LaurentElem, b: LaurentElem) -> LaurentElem:
    _check_ring(q, a, b)
    if a.shift == b.shift:
        return LaurentElem(a.shift, a.body + b.body)
    terms = a.terms(q)
    for e, c in b.terms(q).items():
        terms[e] = terms[e] + c if e in terms else c
    return LaurentElem.from_terms(q, terms, min(a.known_degree(), b.known_degree()))


def laurent_neg(a: LaurentElem) -> LaurentElem:
    return LaurentElem(a.shift, -a.body)


def laurent_scale(a: LaurentElem, c: FieldElem) -> LaurentElem:
    return LaurentElem(a.shift, a.body.scale(c))


def laurent_inv(q: QMatrix, a: LaurentElem) -> LaurentElem:
    """Inverse of (x^u)^-1 x^w u' where u' has a nonzero constant term.

    The result is (x^w)^-1 (x^w u'^-1 x^-w) x^u.
    """
    _check_ring(q, a)
    body = a.body
    if body.is_zero():
        raise NotAUnitError("the zero Laurent element is not invertible")
    w = tuple(min(s[k] for s in body.terms) for k in range(a.n))
    if w not in body.terms:
        raise NotAUnitError(
            f"{a.format(q)} is not a monomial times a unit of R and cannot be inverted"
        )
    precision = body.precision - total_degree(w)
    if precision < 1:
        raise PrecisionError("not enough known terms to invert the unit part")
    unit_part = LaurentElem(w, body).terms(q)
    core = invert(q, SkewSeries(a.n, body.signature, precision, unit_part))
    monomial_u = SkewSeries.monomial(
        a.n, body.signature, precision + total_degree(a.shift), a.shift
    )
    inverse_body = mul(q, conjugate_by_monomial(q, w, core), monomial_u)
    return LaurentElem(w, inverse_body)


def laurent_equiv(q: QMatrix, a: LaurentElem, b: LaurentElem) -> bool:
    """Agreement on every term both sides know."""
    d = min(a.known_degree(), b.known_degree())
    diff = laurent_add(q, a, laurent_neg(b))
    return all(total_degree(e) >= d for e in diff.terms(q))


def laurent_pow(q: QMatrix, a: LaurentElem, e: int) -> LaurentElem:
    base = a if e >= 0 else laurent_inv(q, a)
    result = LaurentElem.from_series(SkewSeries.one(a.n, a.body.signature, a.body.precision))
    e = abs(e)
    while e:
        if e & 1:
            result = laurent_mul(q, result, base)
        e >>= 1
        if e:
            base = laurent_mul(q, base, base)
    return result
