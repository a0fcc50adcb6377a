"""
The coefficient field k = Q(zeta_m)(t1..tr).

For r = 0 this is the cyclotomic domain itself. Otherwise it is sympy's
rational function field in t1..tr over that domain, whose fractions are kept
gcd-reduced, so equality is exact and sizes stay small. A Laurent monomial
t^e with negative exponents is the fraction 1/t^-e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Optional, Tuple

from sympy.polys.domains.domain import Domain
from sympy.polys.fields import FracField

from ..exceptions import DivisionByZero, SignatureMismatch
from .cyclotomic import CycNumber, cyclotomic_domain, join_signed, to_domain, zeta_power
from .units import GroupUnit, ScalarSignature

Exponent = Tuple[int, ...]
Terms = List[Tuple[Exponent, Any]]


@dataclass(frozen=True)
class ScalarTower:
    """sympy objects behind one signature (m, r)."""

    signature: ScalarSignature
    domain: Domain
    fractions: Optional[FracField] = None

    @property
    def matrix_domain(self) -> Domain:
        """The domain ``DomainMatrix`` computations over k run in."""
        return self.domain if self.fractions is None else self.fractions.to_domain()

    def ground(self, c: Any) -> Any:
        return c if self.fractions is None else self.fractions.ground_new(c)

    def rational(self, value: int | Fraction) -> Any:
        return self.ground(to_domain(value, self.domain))

    def embed(self, a: GroupUnit) -> Any:
        value = self.ground(zeta_power(a.torsion, self.signature.order))
        for gen, e in zip(self.fractions.gens if self.fractions else (), a.free):
            if e:
                value = value * gen ** e
        return value

    def parts(self, value: Any) -> Tuple[Terms, Terms]:
        """(numerator, denominator) as lists of (t-exponent, domain coefficient)."""
        if self.fractions is None:
            return [((), value)] if value else [], [((), self.domain.one)]
        return value.numer.terms(), value.denom.terms()


@lru_cache(maxsize=None)
def scalar_tower(signature: ScalarSignature) -> ScalarTower:
    domain = cyclotomic_domain(signature.order)
    if not signature.rank:
        return ScalarTower(signature, domain)
    names = ",".join(f"t{k}" for k in range(1, signature.rank + 1))
    return ScalarTower(signature, domain, FracField(names, domain))


def _coeff_text(c: CycNumber, *, bare: bool) -> Tuple[bool, str]:
    """(negative, text) for a coefficient; '' when it is 1 in front of factors."""
    if c.is_rational():
        value = c.rational()
        negative = value < 0
        mag = -value if negative else value
        if mag == 1 and not bare:
            return negative, ""
        return negative, str(mag)
    text = str(c)
    if bare:
        return False, text if " " not in text else f"({text})"
    return False, f"({text})" if " " in text else text


def _terms_text(terms: Terms, order: int) -> str:
    parts: List[Tuple[bool, str]] = []
    for exp, c in sorted(terms, key=lambda term: term[0], reverse=True):
        factors = [f"t{k}" if e == 1 else f"t{k}^{e}" for k, e in enumerate(exp, start=1) if e]
        negative, coeff = _coeff_text(CycNumber(c, order), bare=not factors)
        parts.append((negative, "*".join(([coeff] if coeff else []) + factors)))
    return join_signed(parts)


class FieldElem:
    """An element of k. Immutable; unhashable."""

    __slots__ = ("signature", "value")

    def __init__(self, signature: ScalarSignature, value: Any) -> None:
        self.signature = signature
        self.value = value

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_cyc(cls, signature: ScalarSignature, c: CycNumber) -> "FieldElem":
        if c.order != signature.order:
            raise SignatureMismatch(f"Q(zeta_{c.order}) in a field over Q(zeta_{signature.order})")
        return cls(signature, scalar_tower(signature).ground(c.value))

    @classmethod
    def from_rational(cls, signature: ScalarSignature, value: int | Fraction) -> "FieldElem":
        return cls(signature, scalar_tower(signature).rational(value))

    @classmethod
    def zero(cls, signature: ScalarSignature) -> "FieldElem":
        return cls.from_rational(signature, 0)

    @classmethod
    def one(cls, signature: ScalarSignature) -> "FieldElem":
        return cls.from_rational(signature, 1)

    @property
    def tower(self) -> ScalarTower:
        return scalar_tower(self.signature)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.value

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_one(self) -> bool:
        return self == 1

    def _ground_value(self) -> Optional[CycNumber]:
        """The value as an element of Q(zeta_m), or None when it involves t."""
        tower = self.tower
        if tower.fractions is None:
            return CycNumber(self.value, self.signature.order)
        numer, denom = self.value.numer, self.value.denom
        if not (numer.is_ground and denom.is_ground):
            return None
        return CycNumber(tower.domain.quo(numer.LC, denom.LC), self.signature.order)

    def is_rational(self) -> bool:
        c = self._ground_value()
        return c is not None and c.is_rational()

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._ground_value().rational()

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other: "FieldElem | int | Fraction") -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.signature != self.signature:
                raise SignatureMismatch(f"{self.signature} vs {other.signature}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElem.from_rational(self.signature, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.signature, self.value + other.value)

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        return FieldElem(self.signature, -self.value)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.signature, self.value - other.value)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.signature, self.value * other.value)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        return field_inv(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * field_inv(other)

    def __rtruediv__(self, other):
        return field_inv(self) * other

    def __pow__(self, e: int) -> "FieldElem":
        base = self if e >= 0 else field_inv(self)
        result = FieldElem.one(self.signature)
        e = abs(e)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FieldElem.from_rational(self.signature, other)
        if not isinstance(other, FieldElem):
            return NotImplemented
        if self.signature != other.signature:
            return False
        return not (self.value - other.value)

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        tower = self.tower
        order = self.signature.order
        numer, denom = tower.parts(self.value)
        if len(denom) == 1:
            # monomial denominators are units of the Laurent ring
            (low, c), = denom
            shifted = [
                (tuple(a - b for a, b in zip(exp, low)), tower.domain.quo(v, c)) for exp, v in numer
            ]
            return _terms_text(shifted, order)
        return f"({_terms_text(numer, order)})/({_terms_text(denom, order)})"

    def __repr__(self) -> str:
        return f"FieldElem({self})"


@lru_cache(maxsize=4096)
def field_embed(a: GroupUnit) -> FieldElem:
    """zeta^torsion * t^free as an element of k."""
    sig = a.signature
    return FieldElem(sig, scalar_tower(sig).embed(a))


def field_inv(a: FieldElem) -> FieldElem:
    """1/a; a must be nonzero."""
    if a.is_zero():
        raise DivisionByZero("division by the zero field element")
    tower = a.tower
    return FieldElem(a.signature, tower.ground(tower.domain.one) / a.value)
