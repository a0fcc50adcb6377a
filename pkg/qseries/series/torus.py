"""The torus H = (k^x)^n acting by h.x^s = h(s) x^s."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from ..exceptions import InvalidTorusElement, SignatureMismatch
from ..scalars import FieldElem, ScalarSignature
from .skew import SkewSeries


@dataclass(frozen=True, eq=False)
class TorusElement:
    entries: Tuple[FieldElem, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        for i, h in enumerate(self.entries, start=1):
            if h.is_zero():
                raise InvalidTorusElement(f"torus entry h{i} is zero")
        if len({h.signature for h in self.entries}) > 1:
            raise SignatureMismatch("torus entries come from different scalar signatures")

    @classmethod
    def from_values(
        cls, signature: ScalarSignature, values: Sequence[int | Fraction]
    ) -> "TorusElement":
        return cls(tuple(FieldElem.from_rational(signature, v) for v in values))

    @property
    def n(self) -> int:
        return len(self.entries)

    def character(self, s: Sequence[int]) -> FieldElem:
        """h(s) = h1^s1 ... hn^sn."""
        if len(s) != self.n:
            raise SignatureMismatch(f"monomial of length {len(s)} for a torus of rank {self.n}")
        if not self.entries:
            raise InvalidTorusElement("the rank-0 torus has no characters")
        value = FieldElem.one(self.entries[0].signature)
        for h, e in zip(self.entries, s):
            if e:
                value = value * h**e
        return value


def apply_torus(h: TorusElement, f: SkewSeries) -> SkewSeries:
    if h.n != f.n:
        raise InvalidTorusElement(f"torus element has {h.n} entries, series has {f.n} variables")
    if h.n and h.entries[0].signature != f.signature:
        raise SignatureMismatch(f"torus over {h.entries[0].signature}, series over {f.signature}")
    return f.map_terms(lambda s, c: h.character(s) * c if any(s) else c)
