"""Exponent vectors x^s and the graded lexicographic order."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import List, Sequence, Tuple

Monomial = Tuple[int, ...]


def total_degree(s: Sequence[int]) -> int:
    return sum(s)


def grlex_key(s: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: total degree first, then x1-heavier monomials first (x1*x2 < x2^2)."""
    return sum(s), tuple(-x for x in s)


def grlex_less(s: Sequence[int], t: Sequence[int]) -> bool:
    return grlex_key(s) < grlex_key(t)


def add(s: Sequence[int], t: Sequence[int]) -> Monomial:
    return tuple(a + b for a, b in zip(s, t))


def sub(s: Sequence[int], t: Sequence[int]) -> Monomial:
    return tuple(a - b for a, b in zip(s, t))


def neg(s: Sequence[int]) -> Monomial:
    return tuple(-a for a in s)


def unit_vector(n: int, i: int) -> Monomial:
    """e_i for a 1-based index i."""
    return tuple(int(k == i - 1) for k in range(n))


@lru_cache(maxsize=256)
def monomials_of_degree(n: int, k: int) -> Tuple[Monomial, ...]:
    """All s in N^n with |s| == k, grlex sorted (stars and bars)."""
    if n == 0:
        return ((),) if k == 0 else ()
    out: List[Monomial] = []
    for bars in combinations(range(k + n - 1), n - 1):
        prev, parts = -1, []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(k + n - 1 - prev - 1)
        out.append(tuple(parts))
    return tuple(sorted(out, key=grlex_key))


def monomials_below(n: int, d: int) -> List[Monomial]:
    """All s in N^n with |s| < d, grlex sorted."""
    out: List[Monomial] = []
    for k in range(d):
        out.extend(monomials_of_degree(n, k))
    return out


def format_monomial(s: Sequence[int]) -> str:
    factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(s, start=1) if e]
    return "*".join(factors)
