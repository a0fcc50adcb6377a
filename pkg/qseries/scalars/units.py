"""
The multiplicative scalar group <zeta_m> x Z^r that houses every q_ij.

A ``GroupUnit`` is zeta^a * t1^e1 ... tr^er stored by its exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from ..exceptions import ConfigError, SignatureMismatch


@dataclass(frozen=True)
class ScalarSignature:
    """(m, r): torsion order of zeta and number of free generators t_k."""

    order: int = 1
    rank: int = 0

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ConfigError(f"torsion order m must be >= 1, got {self.order}")
        if self.rank < 0:
            raise ConfigError(f"free rank r must be >= 0, got {self.rank}")

    def unit(self, torsion: int = 0, free: Sequence[int] | None = None) -> "GroupUnit":
        return GroupUnit(torsion, tuple(free) if free is not None else (0,) * self.rank, self.order)

    def identity(self) -> "GroupUnit":
        return self.unit()

    def zeta(self) -> "GroupUnit":
        return self.unit(1)

    def t(self, k: int) -> "GroupUnit":
        """The free generator t_k (1-based)."""
        if not 1 <= k <= self.rank:
            raise ConfigError(f"t{k} does not exist for free rank {self.rank}")
        free = [0] * self.rank
        free[k - 1] = 1
        return self.unit(0, free)


@dataclass(frozen=True)
class GroupUnit:
    torsion: int
    free: Tuple[int, ...]
    order: int = 1

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ConfigError(f"torsion order m must be >= 1, got {self.order}")
        object.__setattr__(self, "torsion", int(self.torsion) % self.order)
        object.__setattr__(self, "free", tuple(int(e) for e in self.free))

    @property
    def signature(self) -> ScalarSignature:
        return ScalarSignature(self.order, len(self.free))

    def is_identity(self) -> bool:
        return self.torsion == 0 and not any(self.free)

    def inverse(self) -> "GroupUnit":
        return unit_pow(self, -1)

    def __mul__(self, other: "GroupUnit") -> "GroupUnit":
        return unit_mul(self, other)

    def __truediv__(self, other: "GroupUnit") -> "GroupUnit":
        return unit_mul(self, other.inverse())

    def __pow__(self, e: int) -> "GroupUnit":
        return unit_pow(self, e)

    def __str__(self) -> str:
        factors = []
        if self.torsion:
            factors.append("zeta" if self.torsion == 1 else f"zeta^{self.torsion}")
        for k, e in enumerate(self.free, start=1):
            if e:
                factors.append(f"t{k}" if e == 1 else f"t{k}^{e}")
        return "*".join(factors) or "1"


def unit_mul(a: GroupUnit, b: GroupUnit) -> GroupUnit:
    """Group law: add exponents, torsion mod m."""
    if a.order != b.order or len(a.free) != len(b.free):
        raise SignatureMismatch(
            f"cannot multiply units of signatures {a.signature} and {b.signature}"
        )
    return GroupUnit(
        a.torsion + b.torsion,
        tuple(x + y for x, y in zip(a.free, b.free)),
        a.order,
    )


def unit_pow(a: GroupUnit, e: int) -> GroupUnit:
    """e-fold group law; e may be negative."""
    return GroupUnit(a.torsion * e, tuple(x * e for x in a.free), a.order)
