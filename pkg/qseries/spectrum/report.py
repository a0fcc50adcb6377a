"""
Whole-spectrum report: genericity, H-primes, strata, UFD verdict, Goldie
bound, and chain checks on the prime poset.
"""

from __future__ import annotations

import logging
from math import isqrt
from typing import Iterable, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import ConfigError, NotApplicableError
from ..lattice.kernel import INFINITE, is_generic
from ..lattice.qmatrix import QMatrix
from ..services.tracing import get_tracer
from .poset import build_poset, hasse_edges, saturated_chains
from .strata import HPrime, Stratum, Subset, analyze_stratum, h_primes

logger = logging.getLogger(__name__)

NOT_APPLICABLE: Literal["not applicable"] = "not applicable"

GOLDIE_NOTE = (
    "sqrt of [Z^n : S]; established for two variables at a primitive l-th root "
    "of unity (index l^2, Goldie rank l), reported as the same pattern for n > 2"
)


class SpectrumReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    generic: bool
    infinite_field_assumed: bool = True
    h_primes: List[HPrime]
    strata: List[Stratum]
    ufd_verdict: Literal["UFD", "inconclusive"]
    height_one: List[int] = Field(default_factory=list)
    goldie_bound: Union[int, Literal["not applicable"]] = NOT_APPLICABLE
    goldie_note: Optional[str] = None
    max_chain_length: Optional[int] = None
    hasse: List[Tuple[Subset, Subset]] = Field(default_factory=list)

    def stratum(self, w: Iterable[int]) -> Stratum:
        key = tuple(sorted(set(w)))
        for s in self.strata:
            if s.w == key:
                return s
        raise ConfigError(f"stratum {list(key)} is not a subset of 1..{self.n}")


def goldie_bound(stratum: Stratum) -> Union[int, Literal["not applicable"]]:
    """sqrt([Z^n : S]) when S has full rank and the index is a perfect square."""
    if stratum.index == INFINITE:
        return NOT_APPLICABLE
    root = isqrt(int(stratum.index))
    if root * root != stratum.index:
        logger.debug("index %s of S is not a perfect square", stratum.index)
        return NOT_APPLICABLE
    return root


def full_report(q: QMatrix) -> SpectrumReport:
    tracer = get_tracer()
    with tracer.child_span("full_report", "REPORT", {"n": q.n}):
        generic = is_generic(q)
        primes = h_primes(q)
        strata = [analyze_stratum(q, p.w) for p in primes]
        bottom = strata[0]
        bound = goldie_bound(bottom)
        poset = build_poset(primes, strata)
        report = SpectrumReport(
            n=q.n,
            generic=generic,
            h_primes=primes,
            strata=strata,
            ufd_verdict="UFD" if generic else "inconclusive",
            height_one=list(range(1, q.n + 1)) if generic else [],
            goldie_bound=bound,
            goldie_note=GOLDIE_NOTE if bound != NOT_APPLICABLE else None,
            max_chain_length=q.n if generic else None,
            hasse=hasse_edges(poset),
        )
        tracer.add_event(
            "report", {"generic": generic, "primes": len(primes), "goldie_bound": str(bound)}
        )
    return report


def chain_check(report: SpectrumReport, w: Iterable[int]) -> int:
    """Every saturated chain J_0 < ... < J_w has length |w|; returns |w|."""
    if not report.generic:
        raise NotApplicableError("chain lengths are only known for generic q-matrices")
    target = tuple(sorted(set(w)))
    if any(not 1 <= i <= report.n for i in target):
        raise ConfigError(f"stratum {list(target)} is not a subset of 1..{report.n}")
    poset = build_poset(report.h_primes)
    chains = saturated_chains(poset, (), target)
    lengths = {len(chain) - 1 for chain in chains}
    if lengths != {len(target)}:
        raise NotApplicableError(f"chains to {list(target)} have lengths {sorted(lengths)}")
    logger.debug("%d saturated chains of length %d", len(chains), len(target))
    return len(target)


def count_chains(report: SpectrumReport, w: Iterable[int]) -> int:
    poset = build_poset(report.h_primes)
    return len(saturated_chains(poset, (), tuple(sorted(set(w)))))
