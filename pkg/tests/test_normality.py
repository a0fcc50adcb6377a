import pytest

from conftest import generic_q, poly, root_of_unity_q
from qseries.exceptions import NotApplicableError
from qseries.lattice import QMatrix
from qseries.series import SkewSeries, in_single_coset, is_normal, normality_certificate


@pytest.mark.parametrize("i", [1, 2, 3])
def test_generators_are_normal(i):
    q = generic_q(3)
    x = SkewSeries.variable(3, q.signature, 4, i)
    assert is_normal(q, x)
    assert normality_certificate(q, x) == "coset"


def test_everything_is_normal_when_commutative():
    q = QMatrix.trivial(2)
    f = poly(q, 4, {(1, 0): 1, (0, 1): 1, (1, 1): 5})
    assert in_single_coset(q, f)
    assert is_normal(q, f)


def test_sum_of_generators_is_not_normal_for_generic_q():
    q = generic_q(2)
    f = poly(q, 3, {(1, 0): 1, (0, 1): 1})
    assert not in_single_coset(q, f)
    assert not is_normal(q, f)


def test_sum_of_generators_is_not_normal_at_minus_one():
    q = root_of_unity_q(2)
    assert not is_normal(q, poly(q, 3, {(1, 0): 1, (0, 1): 1}))


def test_central_sum_is_normal():
    q = root_of_unity_q(2)
    f = poly(q, 4, {(2, 0): 1, (0, 2): 1})
    assert is_normal(q, f)
    assert normality_certificate(q, f) == "coset"


def test_units_are_normal_to_precision():
    q = generic_q(2)
    f = poly(q, 4, {(0, 0): 1, (1, 0): 1})
    assert not in_single_coset(q, f)
    assert is_normal(q, f)
    assert normality_certificate(q, f) == "linear"


def test_zero_is_not_applicable():
    q = generic_q(2)
    with pytest.raises(NotApplicableError):
        is_normal(q, SkewSeries.zero(2, q.signature, 3))
