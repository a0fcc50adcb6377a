"""Multiplicatively antisymmetric matrices q = (q_ij) and the bicharacter sigma."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Tuple

from ..exceptions import ConfigError, SignatureMismatch
from ..scalars import GroupUnit, ScalarSignature

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class QMatrix:
    """n x n matrix of units with q_ii = 1 and q_ij * q_ji = 1."""

    signature: ScalarSignature
    entries: Tuple[Tuple[GroupUnit, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ConfigError(f"q row {i + 1} has {len(row)} entries, expected {n}")
            for j, unit in enumerate(row):
                if unit.signature != self.signature:
                    raise SignatureMismatch(
                        f"q entry ({i + 1},{j + 1}) has signature {unit.signature}, "
                        f"expected {self.signature}"
                    )
        for i in range(n):
            if not self.entries[i][i].is_identity():
                raise ConfigError(f"q_{i + 1}{i + 1} must be 1")
            for j in range(i + 1, n):
                if not (self.entries[i][j] * self.entries[j][i]).is_identity():
                    raise ConfigError(f"q_{i + 1}{j + 1} * q_{j + 1}{i + 1} must be 1")

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_upper(
        cls, n: int, signature: ScalarSignature, upper: Mapping[Tuple[int, int], GroupUnit]
    ) -> "QMatrix":
        """Build from q_ij for i < j (1-based keys); missing pairs raise."""
        rows = [[signature.identity() for _ in range(n)] for _ in range(n)]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                try:
                    unit = upper[(i, j)]
                except KeyError as exc:
                    raise ConfigError(f"q entry ({i},{j}) missing") from exc
                rows[i - 1][j - 1] = unit
                rows[j - 1][i - 1] = unit.inverse()
        return cls(signature, tuple(tuple(r) for r in rows))

    @classmethod
    def trivial(cls, n: int, signature: ScalarSignature | None = None) -> "QMatrix":
        signature = signature or ScalarSignature()
        return cls.from_upper(n, signature, {(i, j): signature.identity()
                                             for i in range(1, n + 1) for j in range(i + 1, n + 1)})

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: Tuple[int, int]) -> GroupUnit:
        """0-based access q[i, j]."""
        i, j = ij
        return self.entries[i][j]

    def upper(self) -> Iterable[Tuple[int, int, GroupUnit]]:
        """(i, j, q_ij) for i < j, 1-based."""
        for i in range(self.n):
            for j in range(i + 1, self.n):
                yield i + 1, j + 1, self.entries[i][j]

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(u) for u in row) for row in self.entries) + "]"


def _check_dims(q: QMatrix, *vectors: Sequence[int]) -> None:
    for v in vectors:
        if len(v) != q.n:
            raise SignatureMismatch(f"vector of length {len(v)} for a {q.n}x{q.n} q-matrix")


def _product(q: QMatrix, weights: Iterable[Tuple[int, int, int]]) -> GroupUnit:
    """prod q_ij^w over (i, j, w), accumulated as exponents."""
    torsion = 0
    free = [0] * q.signature.rank
    for i, j, w in weights:
        if not w:
            continue
        unit = q.entries[i][j]
        torsion += unit.torsion * w
        for k, e in enumerate(unit.free):
            free[k] += e * w
    return GroupUnit(torsion, tuple(free), q.signature.order)


def sigma(q: QMatrix, s: Sequence[int], t: Sequence[int]) -> GroupUnit:
    """sigma(s, t) = prod_{i,j} q_ij^{s_i t_j}."""
    _check_dims(q, s, t)
    n = q.n
    return _product(q, ((i, j, s[i] * t[j]) for i in range(n) for j in range(n) if i != j))


def mu(q: QMatrix, s: Sequence[int], t: Sequence[int]) -> GroupUnit:
    """Reordering scalar: x^s x^t = mu(s, t) x^(s+t), mu = prod_{i<j} q_ji^{s_j t_i}."""
    n = q.n
    return _product(q, ((j, i, s[j] * t[i]) for i in range(n) for j in range(i + 1, n)))
