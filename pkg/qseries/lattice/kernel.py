"""
The radical lattice S = {s : sigma(s, t) = 1 for all t}, its transversals,
genericity and index computations.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, List, Literal, Sequence, Tuple, Union

from ..exceptions import ConfigError, SignatureMismatch
from .normal_forms import (
    SmithDecomposition,
    hermite_normal_form,
    smith_decomposition,
    to_domain_matrix,
    vec_mat,
)
from .qmatrix import QMatrix, Vector, sigma

logger = logging.getLogger(__name__)

INFINITE: Literal["infinite"] = "infinite"
Index = Union[int, Literal["infinite"]]


@dataclass(frozen=True)
class KernelLattice:
    """HNF basis b_1..b_r of a sublattice of Z^n."""

    basis: Tuple[Vector, ...]
    ambient_n: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_trivial(self) -> bool:
        return not self.basis

    def contains(self, s: Sequence[int]) -> bool:
        """Membership by echelon reduction against the HNF basis."""
        if len(s) != self.ambient_n:
            raise SignatureMismatch(f"vector of length {len(s)} in Z^{self.ambient_n}")
        rest = list(s)
        for row in self.basis:
            col = next(j for j, x in enumerate(row) if x)
            if rest[col] % row[col]:
                return False
            c = rest[col] // row[col]
            rest = [a - c * b for a, b in zip(rest, row)]
        return not any(rest)


@dataclass(frozen=True)
class Transversal:
    """Canonical coset representatives for Z^n / S from the SNF of S's basis."""

    lattice: KernelLattice
    decomposition: SmithDecomposition = field(repr=False)

    @cached_property
    def elementary_divisors(self) -> List[int]:
        return self.decomposition.diagonal[: self.lattice.rank]

    def coordinates(self, e: Sequence[int]) -> List[int]:
        return vec_mat(list(e), self.decomposition.v)

    def coset_rep(self, e: Sequence[int]) -> Vector:
        if len(e) != self.lattice.ambient_n:
            raise SignatureMismatch(f"vector of length {len(e)} in Z^{self.lattice.ambient_n}")
        coords = self.coordinates(e)
        for j, d in enumerate(self.elementary_divisors):
            coords[j] %= d
        return tuple(vec_mat(coords, self.decomposition.v_inv))

    def contains(self, e: Sequence[int]) -> bool:
        return not any(self.coset_rep(e))


# ── lattice computations ─────────────────────────────────────────────
def integer_kernel(rows: Sequence[Sequence[int]], width: int) -> List[List[int]]:
    """Z-basis of {x in Z^width : A x = 0}."""
    if not rows:
        return [[int(i == j) for j in range(width)] for i in range(width)]
    dec = smith_decomposition(rows, width)
    return [[dec.v[i][j] for i in range(width)] for j in range(dec.rank, width)]


def kernel_lattice(q: QMatrix) -> KernelLattice:
    """S for q: free exponents give equations, torsion exponents congruences mod m.

    Congruences are folded in by adjoining one column m*e_j per equation.
    """
    n, m, r = q.n, q.signature.order, q.signature.rank
    extra = n if m > 1 else 0
    width = n + extra
    rows: List[List[int]] = []
    for j in range(n):
        for k in range(r):
            rows.append([q[i, j].free[k] for i in range(n)] + [0] * extra)
        if m > 1:
            row = [q[i, j].torsion for i in range(n)] + [0] * extra
            row[n + j] = m
            rows.append(row)
    rows = [row for row in rows if any(row)]
    generators = [g[:n] for g in integer_kernel(rows, width)]
    basis = hermite_normal_form(generators, n)
    logger.debug("kernel lattice of %dx%d q-matrix: rank %d", n, n, len(basis))
    return KernelLattice(tuple(tuple(b) for b in basis), n)


def subgroup_index(lattice: KernelLattice) -> Index:
    """[Z^n : S] when rank S = n, otherwise "infinite"."""
    if lattice.rank < lattice.ambient_n:
        return INFINITE
    index = 1
    for i, row in enumerate(lattice.basis):
        index *= row[i]
    return abs(index)


def is_generic(q: QMatrix) -> bool:
    """True iff <q_ij : i<j> is free abelian of rank n(n-1)/2."""
    pairs = [unit for _, _, unit in q.upper()]
    if not pairs:
        return True
    r = q.signature.rank
    if r < len(pairs):
        return False
    matrix = [[unit.free[k] for unit in pairs] for k in range(r)]
    return to_domain_matrix(matrix, len(pairs)).rank() == len(pairs)


def restrict_to_stratum(q: QMatrix, w: Iterable[int]) -> QMatrix:
    """Submatrix on the (1-based) indices not in w, order preserved."""
    drop: FrozenSet[int] = frozenset(w)
    if any(not 1 <= i <= q.n for i in drop):
        raise ConfigError(f"stratum {sorted(drop)} is not a subset of 1..{q.n}")
    keep = [i for i in range(q.n) if i + 1 not in drop]
    return QMatrix(q.signature, tuple(tuple(q[i, j] for j in keep) for i in keep))


def transversal(lattice: KernelLattice) -> Transversal:
    dec = smith_decomposition([list(b) for b in lattice.basis], lattice.ambient_n)
    return Transversal(lattice, dec)


def center_generators(lattice: KernelLattice) -> List[Vector]:
    """Exponents b_i: the center of the Laurent polynomial ring is k[(x^b_i)^{+-1}]."""
    return list(lattice.basis)


def change_of_basis(q: QMatrix, rows: Sequence[Sequence[int]]) -> QMatrix:
    """r_ij = sigma(mu_i, mu_j) for a Z-basis mu_1..mu_n (rows) of Z^n.

    Only an isomorphism of Laurent *polynomial* rings; it does not extend to
    Laurent series.
    """
    n = q.n
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ConfigError(f"change of basis needs an {n}x{n} matrix")
    if abs(to_domain_matrix(rows, n).det()) != 1:
        raise ConfigError("change of basis matrix is not unimodular")
    entries = tuple(tuple(sigma(q, rows[i], rows[j]) for j in range(n)) for i in range(n))
    return QMatrix(q.signature, entries)
