# conftest.py
from pathlib import Path

import pytest

from qseries.lattice import QMatrix
from qseries.scalars import FieldElem, ScalarSignature
from qseries.series import SkewSeries
from qseries.services.tracing import reset_tracer

ROOT = Path(__file__).resolve().parent
EXAMPLES = ROOT / "qseries" / "config" / "examples"


def root_of_unity_q(ell: int) -> QMatrix:
    """x y = zeta y x with zeta a primitive ell-th root of unity."""
    sig = ScalarSignature(ell, 0)
    return QMatrix.from_upper(2, sig, {(1, 2): sig.zeta()})


def generic_q(n: int) -> QMatrix:
    """One free generator per pair i < j."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    sig = ScalarSignature(1, len(pairs))
    return QMatrix.from_upper(n, sig, {p: sig.t(k) for k, p in enumerate(pairs, start=1)})


def center_not_laurent_q() -> QMatrix:
    """q12 = 1, q13 = q23 = t1."""
    sig = ScalarSignature(1, 1)
    return QMatrix.from_upper(3, sig, {(1, 2): sig.identity(), (1, 3): sig.t(1), (2, 3): sig.t(1)})


def poly(q: QMatrix, precision: int, terms: dict) -> SkewSeries:
    """Series from {exponent: int coefficient}."""
    return SkewSeries(
        q.n,
        q.signature,
        precision,
        {s: FieldElem.from_rational(q.signature, c) for s, c in terms.items()},
    )


@pytest.fixture(autouse=True)
def _fresh_tracer(monkeypatch):
    """Every test starts from the no-op tracer and no journal."""
    monkeypatch.delenv("TRACE_ENABLED", raising=False)
    monkeypatch.delenv("QSERIES_JOURNAL", raising=False)
    monkeypatch.delenv("QSERIES_PRECISION", raising=False)
    reset_tracer()
    yield
    reset_tracer()


@pytest.fixture
def examples_dir() -> Path:
    return EXAMPLES
