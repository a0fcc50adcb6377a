"""
Exact arithmetic in Q(zeta_m) on top of sympy.

For m <= 2 zeta is rational and the domain is ``QQ``. Otherwise it is the
algebraic field QQ<zeta> cut out by the cyclotomic polynomial, with
zeta = exp(2 pi i / m) as primitive element.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Any, List, Sequence, Tuple

from sympy import QQ, I, Symbol, cyclotomic_poly, exp, pi, totient
from sympy.polys.domains.domain import Domain

from ..exceptions import ConfigError, DivisionByZero, SignatureMismatch

_z = Symbol("z")


def _check_order(m: int) -> None:
    if m < 1:
        raise ConfigError(f"cyclotomic order must be >= 1, got {m}")


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """Phi_m as integer coefficients, lowest degree first."""
    _check_order(m)
    poly = cyclotomic_poly(m, _z, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


def euler_phi(m: int) -> int:
    _check_order(m)
    return int(totient(m))


@lru_cache(maxsize=None)
def cyclotomic_domain(m: int) -> Domain:
    _check_order(m)
    if m <= 2:
        return QQ
    minpoly = cyclotomic_poly(m, _z, polys=True)
    return QQ.algebraic_field((minpoly, exp(2 * pi * I / m)), alias="zeta")


def to_domain(value: int | Fraction, domain: Domain) -> Any:
    f = Fraction(value)
    return domain.convert_from(QQ(f.numerator, f.denominator), QQ)


def to_fraction(c: Any) -> Fraction:
    """A QQ element as ``Fraction``."""
    return Fraction(int(c.numerator), int(c.denominator))


@lru_cache(maxsize=None)
def zeta_power(a: int, m: int) -> Any:
    """zeta^a as an element of ``cyclotomic_domain(m)``, any integer a."""
    domain = cyclotomic_domain(m)
    a %= m
    if m == 1 or a == 0:
        return domain.one
    if m == 2:
        return -domain.one
    return domain.unit ** a


def domain_coeffs(c: Any, m: int) -> Tuple[Fraction, ...]:
    """Coordinates of c in the power basis 1, zeta, ..., zeta^(phi(m)-1)."""
    size = euler_phi(m)
    if m <= 2:
        return (to_fraction(c),)
    high_to_low = [to_fraction(x) for x in c.to_list()]
    coeffs = list(reversed(high_to_low))
    coeffs.extend([Fraction(0)] * (size - len(coeffs)))
    return tuple(coeffs)


class CycNumber:
    """An element of Q(zeta_m); ``order == 1`` gives plain rationals."""

    __slots__ = ("value", "order")

    def __init__(self, value: Any, order: int = 1) -> None:
        self.value = value
        self.order = order

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int | Fraction], order: int = 1) -> "CycNumber":
        """sum c_i zeta^i over the power basis."""
        if len(coeffs) != euler_phi(order):
            raise ConfigError(
                f"Q(zeta_{order}) elements need {euler_phi(order)} coefficients, got {len(coeffs)}"
            )
        domain = cyclotomic_domain(order)
        value = domain.zero
        for i, c in enumerate(coeffs):
            if c:
                value = value + to_domain(c, domain) * zeta_power(i, order)
        return cls(value, order)

    @classmethod
    def from_rational(cls, value: int | Fraction, order: int = 1) -> "CycNumber":
        return cls(to_domain(value, cyclotomic_domain(order)), order)

    @classmethod
    def zero(cls, order: int = 1) -> "CycNumber":
        return cls(cyclotomic_domain(order).zero, order)

    @classmethod
    def one(cls, order: int = 1) -> "CycNumber":
        return cls(cyclotomic_domain(order).one, order)

    @classmethod
    def root_power(cls, a: int, order: int) -> "CycNumber":
        """zeta^a, for any integer a."""
        return cls(zeta_power(a, order), order)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return domain_coeffs(self.value, self.order)

    # -- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.value

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "CycNumber") -> None:
        if self.order != other.order:
            raise SignatureMismatch(f"Q(zeta_{self.order}) vs Q(zeta_{other.order})")

    def __add__(self, other: "CycNumber") -> "CycNumber":
        self._check(other)
        return CycNumber(self.value + other.value, self.order)

    def __sub__(self, other: "CycNumber") -> "CycNumber":
        self._check(other)
        return CycNumber(self.value - other.value, self.order)

    def __neg__(self) -> "CycNumber":
        return CycNumber(-self.value, self.order)

    def __mul__(self, other: "CycNumber | int | Fraction") -> "CycNumber":
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.value * to_domain(other, cyclotomic_domain(self.order)), self.order)
        self._check(other)
        return CycNumber(self.value * other.value, self.order)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        if self.is_zero():
            raise DivisionByZero(f"zero has no inverse in Q(zeta_{self.order})")
        return CycNumber(cyclotomic_domain(self.order).one / self.value, self.order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CycNumber):
            return NotImplemented
        return self.order == other.order and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    # -- printing -------------------------------------------------------
    def __str__(self) -> str:
        parts: List[Tuple[bool, str]] = []
        coeffs = self.coeffs
        for power in range(len(coeffs) - 1, -1, -1):
            c = coeffs[power]
            if not c:
                continue
            negative = c < 0
            mag = -c if negative else c
            if power == 0:
                body = str(mag)
            else:
                z = "zeta" if power == 1 else f"zeta^{power}"
                body = z if mag == 1 else f"{mag}*{z}"
            parts.append((negative, body))
        return join_signed(parts)

    def __repr__(self) -> str:
        return f"CycNumber({self}, order={self.order})"


def join_signed(parts: Sequence[Tuple[bool, str]]) -> str:
    """Join (negative, body) pairs into ``a - b + c``; empty means 0."""
    if not parts:
        return "0"
    out = []
    for idx, (negative, body) in enumerate(parts):
        if idx == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)
