"""
Ring configuration documents.

    n: 3
    m: 1                # torsion order of zeta (alias torsion_order)
    r: 1                # number of free generators t1..tr (alias free_rank)
    q:                  # row i lists q_ij for j > i
      - [{free: [0]}, {free: [1]}]
      - [{free: [1]}]
    precision: 8        # optional (alias default_precision)

A unit literal {torsion: a, free: [e1..er]} stands for zeta^a * t1^e1 ... tr^er.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, List, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..exceptions import ConfigError
from ..lattice.qmatrix import QMatrix
from ..scalars import GroupUnit, ScalarSignature
from ..settings import check_precision, check_variables, default_precision
from ..tools.file_io import read_file

logger = logging.getLogger(__name__)


class UnitLiteral(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    torsion: int = 0
    free: Optional[List[int]] = None


class RingConfig(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    n: int = Field(ge=0)
    m: int = Field(1, ge=1, alias="torsion_order")
    r: int = Field(0, ge=0, alias="free_rank")
    q: List[List[UnitLiteral]] = Field(default_factory=list)
    precision: Optional[int] = Field(None, alias="default_precision")

    @model_validator(mode="after")
    def _check_shape(self) -> "RingConfig":
        check_variables(self.n)
        rows = list(self.q)
        while len(rows) > max(self.n - 1, 0) and not rows[-1]:
            rows.pop()
        if len(rows) > max(self.n - 1, 0):
            raise ConfigError(f"q has {len(rows)} rows, expected {max(self.n - 1, 0)} for n = {self.n}")
        for i in range(1, self.n):
            row = rows[i - 1] if i - 1 < len(rows) else []
            expected = self.n - i
            if len(row) < expected:
                raise ConfigError(f"q entry ({i},{i + len(row) + 1}) missing")
            if len(row) > expected:
                raise ConfigError(f"q row {i} has {len(row)} entries, expected {expected}")
            for k, lit in enumerate(row):
                if lit.free is not None and len(lit.free) != self.r:
                    raise ConfigError(
                        f"q[{i - 1}][{k}].free: expected {self.r} exponents, got {len(lit.free)}"
                    )
        if self.precision is not None:
            check_precision(self.precision)
        return self

    # -- derived objects ------------------------------------------------
    @property
    def signature(self) -> ScalarSignature:
        return ScalarSignature(self.m, self.r)

    def unit(self, i: int, j: int) -> GroupUnit:
        """q_ij for 1-based i < j."""
        lit = self.q[i - 1][j - i - 1]
        return self.signature.unit(lit.torsion, lit.free)

    def qmatrix(self) -> QMatrix:
        upper = {(i, j): self.unit(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)}
        return QMatrix.from_upper(self.n, self.signature, upper)

    def resolve_precision(self, override: Optional[int] = None) -> int:
        """--precision beats the document, which beats QSERIES_PRECISION / defaults."""
        if override is not None:
            return check_precision(override)
        if self.precision is not None:
            return self.precision
        return check_precision(default_precision())


def _location(err: dict) -> str:
    parts = []
    for p in err.get("loc", ()):
        parts.append(f"[{p}]" if isinstance(p, int) else (f".{p}" if parts else str(p)))
    return "".join(parts) or "<document>"


def parse_config(text: str) -> RingConfig:
    try:
        raw: Any = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"config is not valid YAML/JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError("config document must be a mapping")
    try:
        cfg = RingConfig.model_validate(raw)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise ConfigError(f"{_location(first)}: {first['msg']}") from exc
    logger.debug("config: n=%d m=%d r=%d", cfg.n, cfg.m, cfg.r)
    return cfg


def load_config(path: str | Path) -> RingConfig:
    try:
        text = read_file(path)
    except FileNotFoundError as exc:
        raise ConfigError(f"config file not found: {path}") from exc
    return parse_config(text)
