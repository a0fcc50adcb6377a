"""
Recover the support of f from the torus orbit of f alone.

For a pair of support monomials s, t and a torus element h with h(s) != h(t),
(h.f - h(t) f) / (h(s) - h(t)) keeps the x^s term and kills the x^t term.
Repeating this isolates each c_s x^s inside the H-stable ideal generated by f.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from sympy import prime

from ..exceptions import NoLeadingTermError, SeparationError
from ..lattice.qmatrix import QMatrix
from ..scalars import ScalarSignature
from ..series.monomial import Monomial
from ..series.skew import SkewSeries
from ..series.torus import TorusElement, apply_torus
from ..settings import probe_retries

logger = logging.getLogger(__name__)


def probe_tori(signature: ScalarSignature, n: int, retries: int) -> List[TorusElement]:
    """(2,3,5,..), then the next n primes, and so on: retries + 1 probes."""
    primes = [int(prime(k)) for k in range(1, n * (retries + 1) + 1)]
    return [
        TorusElement.from_values(signature, primes[k * n : (k + 1) * n])
        for k in range(retries + 1)
    ]


def isolate_monomial(f: SkewSeries, s: Monomial, probes: Sequence[TorusElement]) -> SkewSeries:
    """c_s x^s, obtained from f by torus averaging alone."""
    g = f
    for t in f.support():
        if t == s or t not in g.terms:
            continue
        for h in probes:
            hs, ht = h.character(s), h.character(t)
            if hs != ht:
                break
        else:
            raise SeparationError(f"no probe separates x^{s} from x^{t}")
        g = (apply_torus(h, g) - g.scale(ht)).scale((hs - ht).inverse())
    return g


def monomialize(
    q: QMatrix,
    f: SkewSeries,
    h: Optional[TorusElement] = None,
    max_retries: Optional[int] = None,
) -> List[Monomial]:
    """Support monomials of f, each certified by isolate_monomial."""
    if f.is_zero():
        raise NoLeadingTermError("monomialize needs a nonzero series")
    retries = probe_retries() if max_retries is None else max_retries
    probes = ([h] if h is not None else []) + (
        probe_tori(q.signature, q.n, retries) if q.n else []
    )
    found: List[Monomial] = []
    for s in f.support():
        isolated = isolate_monomial(f, s, probes)
        found.extend(isolated.support())
    logger.debug("monomialized %d terms", len(found))
    return found
