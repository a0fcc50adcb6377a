"""
Smith and Hermite normal forms of integer matrices, on sympy's ``DomainMatrix``
over ``ZZ``. Callers pass and receive plain ``int`` lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form as _hnf
from sympy.polys.matrices.normalforms import smith_normal_decomp

IntMatrix = List[List[int]]
Frozen = Tuple[Tuple[int, ...], ...]


def to_domain_matrix(matrix: Sequence[Sequence[int]], ncols: int) -> DomainMatrix:
    rows = [[ZZ(int(x)) for x in row] for row in matrix]
    return DomainMatrix(rows, (len(rows), ncols), ZZ)


def to_ints(matrix: DomainMatrix) -> IntMatrix:
    return [[int(x) for x in row] for row in matrix.to_list()]


def _freeze(matrix: DomainMatrix) -> Frozen:
    return tuple(tuple(row) for row in to_ints(matrix))


def vec_mat(v: Sequence[int], m: Sequence[Sequence[int]]) -> List[int]:
    """Row vector times matrix."""
    ncols = len(m[0]) if m else 0
    product = to_domain_matrix([v], len(v)) * to_domain_matrix(m, ncols)
    return to_ints(product)[0]


@dataclass(frozen=True)
class SmithDecomposition:
    """U * M * V == D; ``v_inv`` is V^-1 (kept for coset coordinates)."""

    u: Frozen
    d: Frozen
    v: Frozen
    v_inv: Frozen

    @property
    def diagonal(self) -> List[int]:
        return [self.d[i][i] for i in range(min(len(self.d), len(self.v)))]

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x)


def smith_decomposition(matrix: Sequence[Sequence[int]], ncols: int | None = None) -> SmithDecomposition:
    cols = len(matrix[0]) if matrix else (ncols or 0)
    d, u, v = smith_normal_decomp(to_domain_matrix(matrix, cols))
    v_inv = v.convert_to(QQ).inv().convert_to(ZZ) if cols else v
    return SmithDecomposition(_freeze(u), _freeze(d), _freeze(v), _freeze(v_inv))


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V), unimodular U and V with U*M*V == D, d1 | d2 | ..."""
    dec = smith_decomposition(matrix)
    return [list(r) for r in dec.u], [list(r) for r in dec.d], [list(r) for r in dec.v]


def hermite_normal_form(generators: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Row-style HNF basis of the lattice spanned by *generators*.

    Rows are in echelon form with positive pivots; entries above a pivot lie
    in [0, pivot). Zero rows are dropped, so the result is a basis.

    sympy reduces column lattices with pivots at the bottom, so the
    coordinates go in reversed and the columns come back reversed.
    """
    rows = [list(map(int, g)) for g in generators if any(g)]
    if not rows:
        return []
    columns = to_domain_matrix([list(reversed(row)) for row in rows], ncols).transpose()
    hnf = to_ints(_hnf(columns).transpose())
    return [list(reversed(row)) for row in reversed(hnf) if any(row)]
