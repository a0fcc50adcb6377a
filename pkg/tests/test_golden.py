"""Spectrum reports of the shipped example rings against stored answers."""

import json
from pathlib import Path

import pytest

from conftest import EXAMPLES
from qseries.cli.config import load_config
from qseries.spectrum import full_report

GOLDEN = Path(__file__).resolve().parent / "golden"


def summarise(report):
    bottom = report.strata[0]
    return {
        "generic": report.generic,
        "ufd_verdict": report.ufd_verdict,
        "goldie_bound": report.goldie_bound,
        "kernel_basis": [list(b) for b in bottom.kernel_basis],
        "index": bottom.index,
        "simple": {p.label: s.simple for p, s in zip(report.h_primes, report.strata)},
    }


@pytest.mark.parametrize("name", ["center_not_laurent", "generic", "root_of_unity"])
def test_example_matches_golden(name):
    report = full_report(load_config(EXAMPLES / f"{name}.yaml").qmatrix())
    expected = json.loads((GOLDEN / f"{name}.json").read_text(encoding="utf-8"))
    assert summarise(report) == expected
