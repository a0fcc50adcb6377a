"""
Subcommand registry for qcli.

Each command is a plain function (ctx, args) -> CommandResult registered with
``@command``; main.py builds the argparse surface from the registry.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Any, Callable, Dict, List, Mapping, Optional, TextIO, Tuple, Union

from ..center import central_decompose, monomialize, reassemble
from ..exceptions import NotApplicableError, ParseError, UnknownCommandError
from ..lattice import is_generic, kernel_lattice, subgroup_index, transversal
from ..lattice.qmatrix import QMatrix
from ..series import (
    LaurentElem,
    SkewSeries,
    TorusElement,
    invert,
    is_normal,
    laurent_equiv,
    normality_certificate,
)
from ..series.laurent import laurent_inv, laurent_mul, laurent_pow
from ..services.tracing import get_tracer
from ..spectrum import (
    analyze_stratum,
    build_poset,
    chain_check,
    count_chains,
    full_report,
    h_primes,
    ideal_label,
    to_dot,
)
from .config import RingConfig
from .grammar import evaluate, parse_series
from .render import CommandResult, result_schema, series_payload

logger = logging.getLogger(__name__)

Value = Union[SkewSeries, LaurentElem]


@dataclass
class CommandContext:
    cfg: Optional[RingConfig]
    precision: Optional[int]
    stdin: TextIO = field(default_factory=lambda: sys.stdin)
    _stdin_text: Optional[str] = field(default=None, init=False, repr=False)

    @cached_property
    def q(self) -> QMatrix:
        if self.cfg is None:
            raise NotApplicableError("this command needs --config")
        return self.cfg.qmatrix()

    def expression_text(self, text: str) -> str:
        """'-' reads the expression from stdin (once)."""
        if text != "-":
            return text
        if self._stdin_text is None:
            self._stdin_text = self.stdin.read().strip()
        return self._stdin_text

    def evaluate(self, text: str) -> LaurentElem:
        q = self.q
        node = parse_series(self.expression_text(text), self.cfg)
        with get_tracer().child_span("evaluate", "SERIES", {"precision": self.precision}):
            return evaluate(node, q, self.precision)

    def value(self, elem: LaurentElem) -> Value:
        q = self.q
        return elem.to_series(q) if elem.is_series(q) else elem

    def power_series(self, text: str) -> SkewSeries:
        value = self.value(self.evaluate(text))
        if not isinstance(value, SkewSeries):
            raise NotApplicableError(f"{text!r} has negative exponents; a power series is needed")
        return value


Handler = Callable[[CommandContext, argparse.Namespace], CommandResult]


@dataclass(frozen=True)
class Command:
    name: str
    help: str
    handler: Handler
    arguments: Tuple[Tuple[Tuple[str, ...], Dict[str, Any]], ...] = ()
    needs_config: bool = True


_REGISTRY: Dict[str, Command] = {}


def command(name: str, help: str, *arguments: Tuple[Tuple[str, ...], Dict[str, Any]], needs_config: bool = True):
    def decorator(fn: Handler) -> Handler:
        _REGISTRY[name] = Command(name, help, fn, tuple(arguments), needs_config)
        return fn
    return decorator


def arg(*flags: str, **kwargs: Any) -> Tuple[Tuple[str, ...], Dict[str, Any]]:
    return flags, kwargs


def registry() -> Mapping[str, Command]:
    return MappingProxyType(_REGISTRY)


def run_command(name: str, ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    try:
        cmd = _REGISTRY[name]
    except KeyError as exc:
        raise UnknownCommandError(f"unknown subcommand {name!r}") from exc
    return cmd.handler(ctx, args)


def _subset(text: Optional[str]) -> Tuple[int, ...]:
    """'1,3' -> (1, 3); '' or '-' -> ()."""
    if not text or text.strip() in ("", "-", "{}"):
        return ()
    try:
        return tuple(sorted({int(p) for p in text.replace("{", "").replace("}", "").split(",") if p.strip()}))
    except ValueError as exc:
        raise ParseError(f"subset must be comma separated indices, got {text!r}") from exc


def _vector(text: str) -> List[str]:
    return [p.strip() for p in text.split(",") if p.strip()]


# ── lattice / spectrum commands ──────────────────────────────────────
@command("center", "radical lattice S: basis, rank, index, central monomials")
def cmd_center(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    q = ctx.q
    with get_tracer().child_span("kernel_lattice", "KERNEL", {"n": q.n}):
        lattice = kernel_lattice(q)
        trans = transversal(lattice)
    stratum = analyze_stratum(q, ())
    basis = [list(b) for b in lattice.basis]
    return CommandResult(
        command="center",
        precision=ctx.precision,
        summary=f"S has rank {lattice.rank} with basis {[tuple(b) for b in basis]}",
        data={
            "kernel_basis": basis,
            "rank": lattice.rank,
            "index": subgroup_index(lattice),
            "elementary_divisors": trans.elementary_divisors,
            "center_generators": stratum.center_generators,
            "simple": stratum.simple,
        },
    )


@command("spectrum", "full report: H-primes, strata, UFD verdict, Goldie bound")
def cmd_spectrum(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    report = full_report(ctx.q)
    data = report.model_dump(mode="json")
    data["dot"] = to_dot(build_poset(report.h_primes, report.strata))
    return CommandResult(
        command="spectrum",
        precision=ctx.precision,
        summary=(
            f"{len(report.h_primes)} H-primes, generic={report.generic}, "
            f"{report.ufd_verdict}, goldie bound {report.goldie_bound}"
        ),
        data=data,
    )


@command("strata", "per-stratum center rank and simplicity", arg("--w", default=None, help="only this subset, e.g. 1,3"))
def cmd_strata(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    q = ctx.q
    if args.w is not None:
        subsets = [_subset(args.w)]
    else:
        subsets = [p.w for p in h_primes(q)]
    strata = [analyze_stratum(q, w) for w in subsets]
    simple = sum(1 for s in strata if s.simple)
    return CommandResult(
        command="strata",
        precision=ctx.precision,
        summary=f"{len(strata)} strata, {simple} simple",
        data={"strata": [s.model_dump(mode="json") for s in strata]},
    )


@command("hprimes", "the 2^n H-prime ideals J_w")
def cmd_hprimes(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    primes = h_primes(ctx.q)
    return CommandResult(
        command="hprimes",
        precision=ctx.precision,
        summary=f"{len(primes)} H-primes: " + ", ".join(p.label for p in primes),
        data={
            "h_primes": [p.model_dump(mode="json") for p in primes],
            "dot": to_dot(build_poset(primes)),
        },
    )


@command("is-generic", "are the q_ij (i<j) multiplicatively independent")
def cmd_is_generic(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    generic = is_generic(ctx.q)
    return CommandResult(
        command="is-generic",
        precision=ctx.precision,
        summary="generic" if generic else "not generic",
        data={"generic": generic},
    )


@command("is-ufd", "UFD verdict (established for generic q only)")
def cmd_is_ufd(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    report = full_report(ctx.q)
    return CommandResult(
        command="is-ufd",
        precision=ctx.precision,
        summary=report.ufd_verdict,
        data={
            "ufd_verdict": report.ufd_verdict,
            "generic": report.generic,
            "height_one": [ideal_label((i,)) for i in report.height_one],
        },
    )


@command("goldie", "Goldie rank bound sqrt([Z^n : S]) when S has full rank")
def cmd_goldie(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    report = full_report(ctx.q)
    return CommandResult(
        command="goldie",
        precision=ctx.precision,
        summary=f"goldie bound {report.goldie_bound}",
        data={
            "goldie_bound": report.goldie_bound,
            "index": report.strata[0].index,
            "note": report.goldie_note,
        },
    )


@command("chain-check", "saturated chains from 0 to J_w (generic q)", arg("w", nargs="?", default="", help="subset, e.g. 1,2,3"))
def cmd_chain_check(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    report = full_report(ctx.q)
    w = _subset(args.w)
    length = chain_check(report, w)
    return CommandResult(
        command="chain-check",
        precision=ctx.precision,
        summary=f"every saturated chain 0 < ... < {ideal_label(w)} has length {length}",
        data={"w": list(w), "length": length, "chains": count_chains(report, w)},
    )


@command("dot", "DOT digraph of the H-prime poset with strata")
def cmd_dot(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    report = full_report(ctx.q)
    dot = to_dot(build_poset(report.h_primes, report.strata))
    return CommandResult(
        command="dot",
        precision=ctx.precision,
        summary=f"Hasse diagram with {len(report.hasse)} edges",
        data={"dot": dot},
    )


@command("schema", "JSON schema of the command result envelope", needs_config=False)
def cmd_schema(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    return CommandResult(command="schema", summary="CommandResult JSON schema", data={"schema": result_schema()})


# ── series commands ──────────────────────────────────────────────────
def _series_result(name: str, ctx: CommandContext, value: Value, summary_prefix: str = "") -> CommandResult:
    payload = series_payload(value, ctx.q)
    return CommandResult(
        command=name,
        precision=ctx.precision,
        summary=summary_prefix + payload["series"],
        data=payload,
    )


@command("mul", "product a*b", arg("a"), arg("b"))
def cmd_mul(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    q = ctx.q
    value = laurent_mul(q, ctx.evaluate(args.a), ctx.evaluate(args.b))
    return _series_result("mul", ctx, ctx.value(value))


@command("pow", "power a^e (e may be negative for invertible a)", arg("a"), arg("exponent", type=int))
def cmd_pow(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    value = laurent_pow(ctx.q, ctx.evaluate(args.a), args.exponent)
    return _series_result("pow", ctx, ctx.value(value))


@command("inv", "two-sided inverse", arg("a"))
def cmd_inv(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    q = ctx.q
    elem = ctx.evaluate(args.a)
    value = ctx.value(elem)
    if isinstance(value, SkewSeries):
        result: Value = invert(q, value)
    else:
        result = ctx.value(laurent_inv(q, elem))
    return _series_result("inv", ctx, result)


@command("normal-check", "is f normal (f R = R f)", arg("a"))
def cmd_normal_check(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    q = ctx.q
    f = ctx.power_series(args.a)
    normal = is_normal(q, f)
    certificate = normality_certificate(q, f) if normal else None
    if not normal:
        verdict = "not normal"
    elif certificate == "coset":
        verdict = "normal"
    else:
        verdict = f"normal to precision {f.precision}"
    return CommandResult(
        command="normal-check",
        precision=ctx.precision,
        summary=f"{f}: {verdict}",
        data={"series": str(f), "normal": normal, "verdict": verdict, "certificate": certificate},
    )


@command("decompose", "central decomposition f = sum_t x^t z_t", arg("a"))
def cmd_decompose(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    q = ctx.q
    f = ctx.power_series(args.a)
    lattice = kernel_lattice(q)
    trans = transversal(lattice)
    with get_tracer().child_span("central_decompose", "SERIES", {"terms": len(f)}):
        dec = central_decompose(q, lattice, trans, f)
    reassembled = laurent_equiv(q, reassemble(q, dec), LaurentElem.from_series(f))
    components = [
        {"coset": list(t), "component": series_payload(ctx.value(z), q)["series"]}
        for t, z in dec.items()
    ]
    return CommandResult(
        command="decompose",
        precision=ctx.precision,
        summary=f"{len(components)} coset components",
        data={"series": str(f), "components": components, "reassembles": reassembled},
    )


@command(
    "monomialize",
    "recover the support of f by torus averaging",
    arg("a"),
    arg("--torus", default=None, help="first probe h, e.g. 2,3"),
)
def cmd_monomialize(ctx: CommandContext, args: argparse.Namespace) -> CommandResult:
    q = ctx.q
    f = ctx.power_series(args.a)
    h = None
    if args.torus:
        try:
            values = [Fraction(v) for v in _vector(args.torus)]
        except ValueError as exc:
            raise ParseError(f"--torus must be comma separated rationals, got {args.torus!r}") from exc
        h = TorusElement.from_values(q.signature, values)
    monomials = monomialize(q, f, h)
    names = [series_payload(SkewSeries.monomial(q.n, q.signature, f.precision, s), q)["series"] for s in monomials]
    return CommandResult(
        command="monomialize",
        precision=ctx.precision,
        summary=", ".join(names),
        data={"series": str(f), "monomials": names, "exponents": [list(s) for s in monomials]},
    )

