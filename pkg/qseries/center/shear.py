"""Shear maps that peel one coset component off a series."""

from __future__ import annotations

import logging
from typing import Sequence

from ..exceptions import DegenerateShearError
from ..lattice.kernel import KernelLattice, Transversal
from ..lattice.qmatrix import QMatrix, Vector, sigma
from ..scalars import field_embed
from ..series.monomial import grlex_key, unit_vector
from ..series.skew import SkewSeries

logger = logging.getLogger(__name__)


def rho_shear(
    q: QMatrix, f: SkewSeries, v: Sequence[int], t0: Sequence[int], r: Sequence[int]
) -> SkewSeries:
    """(x^v f x^-v - sigma(v,r) f) / (sigma(v,t0) - sigma(v,r)).

    Terms in the coset of t0 are kept, terms in the coset of r vanish.
    """
    at_t0, at_r = sigma(q, v, t0), sigma(q, v, r)
    if at_t0 == at_r:
        raise DegenerateShearError(f"sigma(v, t0) == sigma(v, r) == {at_t0} for v = {tuple(v)}")
    base = field_embed(at_r)
    denominator = (field_embed(at_t0) - base).inverse()
    return f.map_terms(lambda s, c: (field_embed(sigma(q, v, s)) - base) * denominator * c)


def separating_vector(q: QMatrix, t0: Sequence[int], r: Sequence[int]) -> Vector:
    """A standard basis vector e_i with sigma(e_i, t0) != sigma(e_i, r)."""
    for i in range(1, q.n + 1):
        e = unit_vector(q.n, i)
        if sigma(q, e, t0) != sigma(q, e, r):
            return e
    raise DegenerateShearError(f"{tuple(t0)} and {tuple(r)} lie in the same coset of S")


def isolate_coset(
    q: QMatrix, lattice: KernelLattice, trans: Transversal, f: SkewSeries, t0: Sequence[int]
) -> SkewSeries:
    """Shear away every other coset met by f, leaving x^t0 z_t0."""
    if trans.lattice != lattice:
        raise ValueError("transversal was built for a different lattice")
    target = trans.coset_rep(t0)
    g = f
    while True:
        others = {trans.coset_rep(s) for s in g.support()} - {target}
        if not others:
            return g
        r = min(others, key=grlex_key)
        v = separating_vector(q, target, r)
        logger.debug("shear by x^%s removes coset %s", v, r)
        g = rho_shear(q, g, v, target, r)
