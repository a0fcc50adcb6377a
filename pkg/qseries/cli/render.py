"""Command results and their json / text / dot renderings."""

from __future__ import annotations

import json
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import NotApplicableError
from ..lattice.qmatrix import QMatrix
from ..scalars import FieldElem
from ..series.laurent import LaurentElem
from ..series.monomial import total_degree
from ..series.skew import SkewSeries, coeff_text

OutputFormat = Literal["json", "text", "dot"]


class CommandResult(BaseModel):
    """Envelope every subcommand renders."""

    model_config = ConfigDict(extra="forbid")

    command: str
    ok: bool = True
    precision: Optional[int] = Field(None, description="precision d the computation ran at")
    summary: str
    data: Dict[str, Any] = Field(default_factory=dict)


def coefficient_text(c: FieldElem) -> str:
    negative, text = coeff_text(c, bare=True)
    return f"-{text}" if negative else text


def series_payload(value: Union[SkewSeries, LaurentElem], q: QMatrix) -> Dict[str, Any]:
    """Printed form, known degree and the term list (grlex order)."""
    if isinstance(value, SkewSeries):
        items = list(value.items())
        text, known = str(value), value.precision
        kind = "series"
    else:
        terms = value.terms(q)
        items = list(terms.items())
        text, known = value.format(q), value.known_degree()
        kind = "laurent"
    return {
        "kind": kind,
        "series": text,
        "known_below_degree": known,
        "terms": [
            {"exponent": list(s), "degree": total_degree(s), "coefficient": coefficient_text(c)}
            for s, c in items
        ],
    }


def _text_lines(data: Dict[str, Any], indent: str = "  ") -> List[str]:
    lines: List[str] = []
    for key, value in data.items():
        if key == "dot":
            continue
        if isinstance(value, (dict, list)):
            value = json.dumps(value, separators=(", ", ": "))
        lines.append(f"{indent}{key}: {value}")
    return lines


def render(result: CommandResult, fmt: OutputFormat = "json") -> str:
    if fmt == "json":
        return result.model_dump_json(indent=2) + "\n"
    if fmt == "text":
        head = f"{result.command}: {result.summary}"
        if result.precision is not None:
            head += f"  [d={result.precision}]"
        return "\n".join([head, *_text_lines(result.data)]) + "\n"
    if fmt == "dot":
        dot = result.data.get("dot")
        if not dot:
            raise NotApplicableError(
                f"--output dot is only available for dot, spectrum and hprimes, not {result.command}"
            )
        return dot
    raise NotApplicableError(f"unknown output format {fmt!r}")


def result_schema() -> Dict[str, Any]:
    return CommandResult.model_json_schema()
