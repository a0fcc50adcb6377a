"""
Truncated skew power series in R = k_q[[x1..xn]].

A ``SkewSeries`` stores the terms of total degree < precision; everything of
higher degree is unknown. Products, powers and inverses propagate precision
conservatively, never claiming an unknown coefficient as known.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..exceptions import NoLeadingTermError, NotAUnitError, PrecisionError, SignatureMismatch
from ..lattice.qmatrix import QMatrix, mu, sigma
from ..scalars import FieldElem, GroupUnit, ScalarSignature, field_embed
from ..scalars.cyclotomic import join_signed
from ..settings import check_terms
from .monomial import (
    Monomial,
    add,
    format_monomial,
    grlex_key,
    monomials_below,
    sub,
    total_degree,
    unit_vector,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SkewSeries:
    """sum c_s x^s over |s| < precision, terms kept in grlex order."""

    n: int
    signature: ScalarSignature
    precision: int
    terms: Mapping[Monomial, FieldElem] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise PrecisionError(f"series precision must be >= 1, got {self.precision}")
        kept: Dict[Monomial, FieldElem] = {}
        for s, c in self.terms.items():
            s = tuple(int(e) for e in s)
            if len(s) != self.n:
                raise SignatureMismatch(f"monomial {s} in a ring with {self.n} variables")
            if any(e < 0 for e in s):
                raise ValueError(f"negative exponent {s} in a power series")
            if c.signature != self.signature:
                raise SignatureMismatch(f"coefficient of x^{s} has signature {c.signature}")
            if total_degree(s) < self.precision and not c.is_zero():
                kept[s] = c
        check_terms(len(kept))
        ordered = dict(sorted(kept.items(), key=lambda kv: grlex_key(kv[0])))
        object.__setattr__(self, "terms", MappingProxyType(ordered))

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, n: int, signature: ScalarSignature, precision: int) -> "SkewSeries":
        return cls(n, signature, precision, {})

    @classmethod
    def constant(
        cls, n: int, signature: ScalarSignature, precision: int, c: FieldElem | int = 1
    ) -> "SkewSeries":
        if not isinstance(c, FieldElem):
            c = FieldElem.from_rational(signature, c)
        return cls(n, signature, precision, {(0,) * n: c})

    @classmethod
    def one(cls, n: int, signature: ScalarSignature, precision: int) -> "SkewSeries":
        return cls.constant(n, signature, precision, 1)

    @classmethod
    def monomial(
        cls,
        n: int,
        signature: ScalarSignature,
        precision: int,
        s: Sequence[int],
        c: FieldElem | int = 1,
    ) -> "SkewSeries":
        if not isinstance(c, FieldElem):
            c = FieldElem.from_rational(signature, c)
        return cls(n, signature, precision, {tuple(s): c})

    @classmethod
    def variable(cls, n: int, signature: ScalarSignature, precision: int, i: int) -> "SkewSeries":
        """x_i (1-based)."""
        return cls.monomial(n, signature, precision, unit_vector(n, i))

    # -- access ---------------------------------------------------------
    def items(self) -> Iterator[Tuple[Monomial, FieldElem]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> List[Monomial]:
        return list(self.terms)

    def coefficient(self, s: Sequence[int]) -> FieldElem:
        return self.terms.get(tuple(s), FieldElem.zero(self.signature))

    def constant_term(self) -> FieldElem:
        return self.coefficient((0,) * self.n)

    def order(self) -> int:
        """Least total degree of a stored term; the precision for the zero series."""
        if not self.terms:
            return self.precision
        return total_degree(next(iter(self.terms)))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # -- linear structure -----------------------------------------------
    def _check(self, other: "SkewSeries") -> None:
        if self.n != other.n or self.signature != other.signature:
            raise SignatureMismatch(
                f"series over {self.n} variables / {self.signature} vs "
                f"{other.n} variables / {other.signature}"
            )

    def __add__(self, other: "SkewSeries") -> "SkewSeries":
        self._check(other)
        out: Dict[Monomial, FieldElem] = dict(self.terms)
        for s, c in other.terms.items():
            out[s] = out[s] + c if s in out else c
        return SkewSeries(self.n, self.signature, min(self.precision, other.precision), out)

    def __neg__(self) -> "SkewSeries":
        return self.map_terms(lambda s, c: -c)

    def __sub__(self, other: "SkewSeries") -> "SkewSeries":
        return self + (-other)

    def scale(self, c: FieldElem | GroupUnit | int) -> "SkewSeries":
        """Left multiplication by a scalar (scalars are central)."""
        if isinstance(c, GroupUnit):
            c = field_embed(c)
        return self.map_terms(lambda s, v: v * c)

    def map_terms(self, fn: Callable[[Monomial, FieldElem], FieldElem]) -> "SkewSeries":
        """Replace each coefficient c_s by fn(s, c_s); support can only shrink."""
        return SkewSeries(
            self.n, self.signature, self.precision, {s: fn(s, c) for s, c in self.terms.items()}
        )

    def truncate(self, precision: int) -> "SkewSeries":
        return SkewSeries(self.n, self.signature, min(precision, self.precision), self.terms)

    def with_precision(self, precision: int) -> "SkewSeries":
        """Same stored terms, claimed known below *precision* (for exact polynomials)."""
        return SkewSeries(self.n, self.signature, precision, self.terms)

    def equiv(self, other: "SkewSeries", precision: Optional[int] = None) -> bool:
        """Agreement modulo J^d, d = min of the two precisions (or *precision*)."""
        self._check(other)
        d = min(self.precision, other.precision)
        if precision is not None:
            d = min(d, precision)
        diff = self - other
        return all(total_degree(s) >= d for s in diff.terms)

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"SkewSeries({self}, precision={self.precision})"


# ── coefficient / series printing ────────────────────────────────────
def coeff_text(c: FieldElem, *, bare: bool) -> Tuple[bool, str]:
    """(negative, text); '' for a unit coefficient in front of a monomial."""
    if c.is_rational():
        value = c.rational()
        negative = value < 0
        mag = -value if negative else value
        if mag == 1 and not bare:
            return negative, ""
        return negative, str(mag)
    text = str(c)
    if any(ch in text for ch in " /") or text.startswith("-"):
        text = f"({text})"
    return False, text


def format_terms(items: Sequence[Tuple[Sequence[int], FieldElem]]) -> str:
    """Signed sum of c*x^s; negative exponents are printed as x1^-2."""
    parts: List[Tuple[bool, str]] = []
    for s, c in items:
        mono = format_monomial(s)
        negative, coeff = coeff_text(c, bare=not mono)
        parts.append((negative, "*".join(p for p in (coeff, mono) if p)))
    return join_signed(parts) if parts else "0"


def format_series(f: SkewSeries) -> str:
    return format_terms(list(f.items()))


# ── multiplication ───────────────────────────────────────────────────
def _check_ring(q: QMatrix, *series: SkewSeries) -> None:
    for f in series:
        if f.n != q.n or f.signature != q.signature:
            raise SignatureMismatch(
                f"series over {f.n} variables / {f.signature} used with a "
                f"{q.n}x{q.n} q-matrix over {q.signature}"
            )


def mono_mul(q: QMatrix, s: Sequence[int], t: Sequence[int]) -> Tuple[GroupUnit, Monomial]:
    """x^s * x^t = mu(s, t) * x^(s+t)."""
    return mu(q, s, t), add(s, t)


class _MuCache:
    """mu(s, t) embedded in the field, memoised for one computation."""

    def __init__(self, q: QMatrix) -> None:
        self.q = q
        self._seen: Dict[Tuple[Monomial, Monomial], Optional[FieldElem]] = {}

    def __call__(self, s: Monomial, t: Monomial) -> Optional[FieldElem]:
        """None when the scalar is 1."""
        key = (s, t)
        if key not in self._seen:
            unit = mu(self.q, s, t)
            self._seen[key] = None if unit.is_identity() else field_embed(unit)
        return self._seen[key]


def mul(q: QMatrix, f: SkewSeries, g: SkewSeries) -> SkewSeries:
    _check_ring(q, f, g)
    f._check(g)
    d = min(f.precision + g.order(), g.precision + f.order())
    scalar = _MuCache(q)
    out: Dict[Monomial, FieldElem] = {}
    for s, a in f.items():
        ds = total_degree(s)
        for t, b in g.items():
            if ds + total_degree(t) >= d:
                break
            e = add(s, t)
            c = a * b
            factor = scalar(s, t)
            if factor is not None:
                c = factor * c
            out[e] = out[e] + c if e in out else c
    return SkewSeries(f.n, f.signature, d, out)


def power(q: QMatrix, f: SkewSeries, e: int) -> SkewSeries:
    """f^e by repeated squaring; negative e inverts first."""
    base = f if e >= 0 else invert(q, f)
    result = SkewSeries.one(f.n, f.signature, f.precision)
    e = abs(e)
    while e:
        if e & 1:
            result = mul(q, result, base)
        e >>= 1
        if e:
            base = mul(q, base, base)
    return result


def invert(q: QMatrix, f: SkewSeries) -> SkewSeries:
    """Two-sided inverse mod J^d, solved degree by degree."""
    _check_ring(q, f)
    c0 = f.constant_term()
    if c0.is_zero():
        raise NotAUnitError(f"{f} has zero constant term and lies in J")
    inv0 = c0.inverse()
    zero = (0,) * f.n
    scalar = _MuCache(q)
    g: Dict[Monomial, FieldElem] = {zero: inv0}
    rest = [(s, a) for s, a in f.items() if s != zero]
    for e in monomials_below(f.n, f.precision)[1:]:
        acc: Optional[FieldElem] = None
        for s, a in rest:
            if total_degree(s) > total_degree(e):
                break
            t = sub(e, s)
            if min(t) < 0 or t not in g:
                continue
            c = a * g[t]
            factor = scalar(s, t)
            if factor is not None:
                c = factor * c
            acc = c if acc is None else acc + c
        if acc is not None and not acc.is_zero():
            g[e] = -(inv0 * acc)
    logger.debug("inverted series with %d terms to precision %d", len(f), f.precision)
    return SkewSeries(f.n, f.signature, f.precision, g)


# ── automorphisms ────────────────────────────────────────────────────
def conjugate_by_monomial(q: QMatrix, v: Sequence[int], f: SkewSeries) -> SkewSeries:
    """x^v f x^-v: each term c x^s picks up sigma(v, s)."""
    _check_ring(q, f)
    return f.map_terms(lambda s, c: field_embed(sigma(q, v, s)) * c)


def conjugate_by_xi(q: QMatrix, i: int, f: SkewSeries) -> SkewSeries:
    """x_i f x_i^-1 for a 1-based i."""
    if not 1 <= i <= q.n:
        raise SignatureMismatch(f"x{i} does not exist in a ring with {q.n} variables")
    return conjugate_by_monomial(q, unit_vector(q.n, i), f)


def grlex_leading(f: SkewSeries) -> Tuple[Monomial, FieldElem]:
    if f.is_zero():
        raise NoLeadingTermError("the zero series has no leading term")
    return next(f.items())
