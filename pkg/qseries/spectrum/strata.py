"""
H-primes J_w = <x_i : i in w> and the strata Spec_w R they index.

The stratum of w is governed by the Laurent series ring in the variables
outside w, i.e. by the restricted q-matrix q_w and its radical lattice S_w.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Iterable, List, Literal, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import ConfigError
from ..lattice.kernel import (
    INFINITE,
    center_generators,
    kernel_lattice,
    restrict_to_stratum,
    subgroup_index,
)
from ..lattice.qmatrix import QMatrix

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]


def ideal_label(w: Iterable[int]) -> str:
    w = tuple(sorted(set(w)))
    return "<" + ", ".join(f"x{i}" for i in w) + ">" if w else "0"


class HPrime(BaseModel):
    """The completely prime ideal J_w generated by x_i, i in w."""

    model_config = ConfigDict(frozen=True)

    w: Subset
    generators: List[str]
    label: str


class Stratum(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    w: Subset
    variables: Subset = Field(description="1-based indices of the surviving variables")
    q_w: QMatrix = Field(exclude=True, repr=False)
    kernel_basis: List[Tuple[int, ...]]
    center_rank: int
    simple: bool = Field(description="the Laurent series ring of the stratum is simple (its center is a field)")
    index: Union[int, Literal["infinite"]]
    center_generators: List[str] = Field(
        default_factory=list,
        description="x^b monomials whose powers (x^b)^{+-1} generate the central Laurent polynomials",
    )


def _normalise_subset(q: QMatrix, w: Iterable[int]) -> Subset:
    subset = tuple(sorted(set(int(i) for i in w)))
    if any(not 1 <= i <= q.n for i in subset):
        raise ConfigError(f"stratum {list(subset)} is not a subset of 1..{q.n}")
    return subset


def all_subsets(n: int) -> List[Subset]:
    """Subsets of 1..n by size, then lexicographically."""
    return [c for k in range(n + 1) for c in combinations(range(1, n + 1), k)]


def hprime(w: Subset) -> HPrime:
    return HPrime(w=w, generators=[f"x{i}" for i in w], label=ideal_label(w))


def h_primes(q: QMatrix) -> List[HPrime]:
    """All 2^n ideals J_w; only n matters."""
    return [hprime(w) for w in all_subsets(q.n)]


def _monomial_name(exponent: Tuple[int, ...], variables: Subset) -> str:
    factors = [
        f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in zip(variables, exponent) if e
    ]
    return "*".join(factors) or "1"


def center_is_field(basis: List[Tuple[int, ...]] | Tuple[Tuple[int, ...], ...]) -> bool:
    """The central Laurent series in x^b, b in S, form a field.

    True for S = 0 (center k) and for S = Zb with b in N^n or -N^n, where
    the center is k((x^b)). A generator with mixed signs only admits finitely
    many powers in either direction, leaving Laurent polynomials k[x^{+-b}].
    """
    if not basis:
        return True
    if len(basis) != 1:
        return False
    b = basis[0]
    return all(e >= 0 for e in b) or all(e <= 0 for e in b)


def analyze_stratum(q: QMatrix, w: Iterable[int]) -> Stratum:
    subset = _normalise_subset(q, w)
    q_w = restrict_to_stratum(q, subset)
    variables = tuple(i for i in range(1, q.n + 1) if i not in subset)
    lattice = kernel_lattice(q_w)
    index = subgroup_index(lattice)
    stratum = Stratum(
        w=subset,
        variables=variables,
        q_w=q_w,
        kernel_basis=list(lattice.basis),
        center_rank=lattice.rank,
        simple=center_is_field(lattice.basis),
        index=index,
        center_generators=[_monomial_name(b, variables) for b in center_generators(lattice)],
    )
    logger.debug("stratum %s: rank %d simple=%s", ideal_label(subset), stratum.center_rank, stratum.simple)
    return stratum


__all__ = ["HPrime", "INFINITE", "Stratum", "all_subsets", "analyze_stratum", "center_is_field", "h_primes", "hprime", "ideal_label"]
