"""
Central decomposition f = sum_t x^t z_t over coset representatives t of Z^n/S.

Each z_t has support in S, so it is central in the Laurent series ring; the
components are keyed by the canonical SNF representative of the coset.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Sequence, Tuple

from ..lattice.kernel import KernelLattice, Transversal, transversal
from ..lattice.qmatrix import QMatrix, Vector, mu
from ..scalars import FieldElem, field_embed
from ..series.laurent import LaurentElem, laurent_add, laurent_mul
from ..series.monomial import grlex_key, sub, total_degree
from ..series.skew import SkewSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CentralDecomposition:
    """t -> z_t for the cosets met by f; *precision* is the source precision d."""

    components: Mapping[Vector, LaurentElem]
    precision: int

    def __len__(self) -> int:
        return len(self.components)

    def items(self) -> Iterator[Tuple[Vector, LaurentElem]]:
        return iter(self.components.items())

    def cosets(self) -> list[Vector]:
        return list(self.components)


def is_central_monomial(lattice: KernelLattice | Transversal, s: Sequence[int]) -> bool:
    """x^s is central iff s lies in S (tested on SNF coordinates)."""
    trans = lattice if isinstance(lattice, Transversal) else transversal(lattice)
    return trans.contains(s)


def central_decompose(
    q: QMatrix, lattice: KernelLattice, trans: Transversal, f: SkewSeries
) -> CentralDecomposition:
    """Group c x^e under t = rep(e); z_t collects mu(t, e-t)^-1 c x^(e-t)."""
    if trans.lattice != lattice:
        raise ValueError("transversal was built for a different lattice")
    grouped: Dict[Vector, Dict[Vector, FieldElem]] = {}
    for e, c in f.items():
        t = trans.coset_rep(e)
        scalar = mu(q, t, sub(e, t))
        coeff = c if scalar.is_identity() else field_embed(scalar.inverse()) * c
        grouped.setdefault(t, {})[sub(e, t)] = coeff
    components = {
        t: LaurentElem.from_terms(q, terms, f.precision - total_degree(t))
        for t, terms in sorted(grouped.items(), key=lambda kv: grlex_key(kv[0]))
    }
    logger.debug("decomposed %d terms into %d coset components", len(f), len(components))
    return CentralDecomposition(components, f.precision)


def reassemble(q: QMatrix, decomposition: CentralDecomposition) -> LaurentElem:
    """sum_t x^t z_t."""
    d = decomposition.precision
    total = LaurentElem.from_terms(q, {}, d)
    for t, z in decomposition.items():
        x_t = LaurentElem.monomial(q, t, d + total_degree(z.shift))
        total = laurent_add(q, total, laurent_mul(q, x_t, z))
    return total
