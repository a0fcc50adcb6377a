"""
Precision-bounded normality test: f is normal when f x_j R = R f x_j, i.e.
for every generator x_j there is g_j with f x_j = g_j f.

Two certificates are tried in turn:

1. coset certificate (exact): if the support of f lies in one coset t + S of
   the radical lattice then f = x^t z with z central, and f is normal;
2. linear solving: for each j the coefficients of g_j of total degree
   < d - ord(f) are unknowns, and the equations are the coefficients of
   f x_j - g_j f in every total degree < d. The verdict is "normal to
   precision d".
"""

from __future__ import annotations

import logging
from typing import Dict, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from ..exceptions import NotApplicableError
from ..lattice.kernel import kernel_lattice, transversal
from ..lattice.qmatrix import QMatrix, mu
from ..scalars import FieldElem, field_embed, scalar_tower
from .monomial import Monomial, add, monomials_below, total_degree, unit_vector
from .skew import SkewSeries

logger = logging.getLogger(__name__)

Row = Dict[int, FieldElem]


def in_single_coset(q: QMatrix, f: SkewSeries) -> bool:
    """True when all support monomials of f share one coset rep modulo S."""
    trans = transversal(kernel_lattice(q))
    reps = {trans.coset_rep(s) for s in f.support()}
    return len(reps) <= 1


def _scaled(q: QMatrix, s: Monomial, t: Monomial, c: FieldElem) -> FieldElem:
    unit = mu(q, s, t)
    return c if unit.is_identity() else field_embed(unit) * c


def _consistent(q: QMatrix, rows: List[Tuple[Row, Optional[FieldElem]]], width: int) -> bool:
    """Solvable iff the rref of the augmented matrix has no pivot in its last column."""
    if not rows:
        return True
    tower = scalar_tower(q.signature)
    zero = tower.rational(0)
    dense = []
    for row, rhs in rows:
        line = [zero] * (width + 1)
        for col, value in row.items():
            line[col] = value.value
        if rhs is not None:
            line[width] = rhs.value
        dense.append(line)
    matrix = DomainMatrix(dense, (len(dense), width + 1), tower.matrix_domain)
    _, pivots = matrix.rref()
    return width not in pivots


def _generator_solvable(q: QMatrix, f: SkewSeries, j: int) -> bool:
    """Is f x_j = g f solvable for g modulo J^d?"""
    n, d = f.n, f.precision
    ej = unit_vector(n, j)
    unknowns = monomials_below(n, d - f.order())
    index = {s: k for k, s in enumerate(unknowns)}
    equations: Dict[Monomial, Row] = {}
    for s in unknowns:
        for t, c in f.items():
            e = add(s, t)
            if total_degree(e) >= d:
                break
            equations.setdefault(e, {})
            col = index[s]
            term = _scaled(q, s, t, c)
            prev = equations[e].get(col)
            equations[e][col] = term if prev is None else prev + term
    target: Dict[Monomial, FieldElem] = {}
    for t, c in f.items():
        e = add(t, ej)
        if total_degree(e) < d:
            target[e] = _scaled(q, t, ej, c)
    rows: List[Tuple[Row, Optional[FieldElem]]] = []
    for e in monomials_below(n, d):
        row = {k: v for k, v in equations.get(e, {}).items() if not v.is_zero()}
        rhs = target.get(e)
        if row or rhs is not None:
            rows.append((row, rhs))
    return _consistent(q, rows, len(unknowns))


def is_normal(q: QMatrix, f: SkewSeries) -> bool:
    if f.is_zero():
        raise NotApplicableError("normality is only defined for nonzero series")
    if in_single_coset(q, f):
        logger.debug("normal by coset certificate: %s", f)
        return True
    for j in range(1, f.n + 1):
        if not _generator_solvable(q, f, j):
            logger.debug("x%d: f x_j = g f has no solution to precision %d", j, f.precision)
            return False
    return True


def normality_certificate(q: QMatrix, f: SkewSeries) -> str:
    """Return "coset" (exact) or "linear" (precision bounded) for a normal f."""
    return "coset" if in_single_coset(q, f) else "linear"
