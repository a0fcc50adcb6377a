from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import generic_q, poly, root_of_unity_q
from qseries.exceptions import (
    BudgetExceeded,
    InvalidTorusElement,
    NoLeadingTermError,
    NotAUnitError,
    PrecisionError,
    SignatureMismatch,
)
from qseries.lattice import QMatrix, sigma
from qseries.scalars import FieldElem, ScalarSignature, field_embed
from qseries.series import (
    SkewSeries,
    TorusElement,
    apply_torus,
    conjugate_by_monomial,
    conjugate_by_xi,
    grlex_key,
    grlex_leading,
    grlex_less,
    invert,
    mono_mul,
    monomials_below,
    mul,
    power,
)
from qseries.series.monomial import format_monomial, monomials_of_degree, neg, unit_vector
from qseries.spectrum import all_subsets


# ── monomials and grlex ──────────────────────────────────────────────
def test_grlex_order():
    assert grlex_less((1, 0), (0, 2))
    assert grlex_less((1, 1), (0, 2))
    assert grlex_less((2, 0), (1, 1))
    assert not grlex_less((0, 2), (0, 2))
    assert monomials_of_degree(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert monomials_below(2, 2) == [(0, 0), (1, 0), (0, 1)]
    assert len(monomials_below(3, 4)) == 20


def test_format_monomial():
    assert format_monomial((2, 1)) == "x1^2*x2"
    assert format_monomial((-1, 0, 3)) == "x1^-1*x3^3"
    assert format_monomial((0, 0)) == ""


# ── construction ─────────────────────────────────────────────────────
def test_series_drops_zero_and_unknown_terms():
    q = generic_q(2)
    f = poly(q, 3, {(0, 0): 1, (1, 0): 0, (2, 0): 4, (3, 0): 7})
    assert f.support() == [(0, 0), (2, 0)]
    assert f.order() == 0
    assert str(f) == "1 + 4*x1^2"


def test_series_validation():
    q = generic_q(2)
    with pytest.raises(PrecisionError):
        SkewSeries.zero(2, q.signature, 0)
    with pytest.raises(SignatureMismatch):
        poly(q, 3, {(1, 0, 0): 1})
    with pytest.raises(ValueError):
        poly(q, 3, {(-1, 0): 1})


def test_term_cap(monkeypatch):
    from qseries import settings as qsettings

    monkeypatch.setattr(qsettings, "limits", lambda: {"max_precision": 64, "max_variables": 8, "max_terms": 2})
    q = generic_q(2)
    with pytest.raises(BudgetExceeded):
        poly(q, 4, {(0, 0): 1, (1, 0): 1, (0, 1): 1})


# ── multiplication ───────────────────────────────────────────────────
def test_mono_mul_reorders_with_q():
    q = root_of_unity_q(3)
    scalar, s = mono_mul(q, (0, 1), (1, 0))
    assert s == (1, 1)
    assert scalar == q[1, 0]


def test_product_of_generators_follows_relation():
    q = generic_q(2)
    x = SkewSeries.variable(2, q.signature, 4, 1)
    y = SkewSeries.variable(2, q.signature, 4, 2)
    xy, yx = mul(q, x, y), mul(q, y, x)
    # x y = q12 y x
    assert xy.equiv(yx.scale(q[0, 1]))
    assert xy.coefficient((1, 1)) == 1


@pytest.mark.parametrize("ell", [2, 3, 5])
def test_binomial_collapse_at_root_of_unity(ell):
    q = root_of_unity_q(ell)
    f = poly(q, ell + 1, {(1, 0): 1, (0, 1): 1})
    p = power(q, f, ell)
    assert p.support() == [(ell, 0), (0, ell)]
    assert p.coefficient((ell, 0)) == 1
    assert p.coefficient((0, ell)) == 1
    assert p.precision >= ell + 1


def test_binomial_does_not_collapse_for_generic_q():
    q = generic_q(2)
    f = poly(q, 3, {(1, 0): 1, (0, 1): 1})
    p = power(q, f, 2)
    assert p.coefficient((1, 1)) == 1 + field_embed(q[1, 0])


def test_product_precision_is_conservative():
    q = generic_q(2)
    f = poly(q, 3, {(1, 0): 1})
    g = poly(q, 5, {(0, 0): 1, (0, 1): 1})
    assert mul(q, f, g).precision == min(3 + 0, 5 + 1)


def test_ring_mismatch():
    q2, q3 = generic_q(2), generic_q(3)
    f = SkewSeries.one(3, q3.signature, 3)
    with pytest.raises(SignatureMismatch):
        mul(q2, f, f)


# ── inversion ────────────────────────────────────────────────────────
def test_invert_geometric_series():
    q = generic_q(2)
    f = poly(q, 4, {(0, 0): 1, (1, 0): -1})
    g = invert(q, f)
    assert g.support() == [(0, 0), (1, 0), (2, 0), (3, 0)]
    assert mul(q, f, g).equiv(SkewSeries.one(2, q.signature, 4))
    assert mul(q, g, f).equiv(SkewSeries.one(2, q.signature, 4))


def test_invert_rejects_non_units():
    q = generic_q(2)
    with pytest.raises(NotAUnitError):
        invert(q, poly(q, 3, {(1, 0): 1}))


def test_negative_power_inverts():
    q = root_of_unity_q(3)
    f = poly(q, 4, {(0, 0): 2, (0, 1): 1})
    one = SkewSeries.one(2, q.signature, 4)
    assert mul(q, power(q, f, -2), power(q, f, 2)).equiv(one)


# ── automorphisms and the torus ──────────────────────────────────────
def test_conjugation_by_generator():
    q = generic_q(2)
    y = SkewSeries.variable(2, q.signature, 3, 2)
    conj = conjugate_by_xi(q, 1, y)
    # x1 y x1^-1 = q12 y
    assert conj.coefficient((0, 1)) == field_embed(q[0, 1])
    assert conjugate_by_monomial(q, (0, 0), y).equiv(y)
    with pytest.raises(SignatureMismatch):
        conjugate_by_xi(q, 3, y)


def test_apply_torus():
    q = generic_q(2)
    f = poly(q, 3, {(1, 0): 1, (0, 1): 1})
    h = TorusElement.from_values(q.signature, (2, 3))
    g = apply_torus(h, f)
    assert g.coefficient((1, 0)) == 2
    assert g.coefficient((0, 1)) == 3


def test_torus_validation():
    q = generic_q(2)
    with pytest.raises(InvalidTorusElement):
        TorusElement.from_values(q.signature, (1, 0))
    with pytest.raises(InvalidTorusElement):
        apply_torus(TorusElement.from_values(q.signature, (2,)), SkewSeries.one(2, q.signature, 2))


def test_grlex_leading():
    q = generic_q(2)
    f = poly(q, 4, {(0, 2): 5, (1, 1): 3, (2, 1): 1})
    assert grlex_leading(f) == ((1, 1), FieldElem.from_rational(q.signature, 3))
    with pytest.raises(NoLeadingTermError):
        grlex_leading(SkewSeries.zero(2, q.signature, 3))


# ── ring axioms ──────────────────────────────────────────────────────
PRECISION = 6
ZETA3 = ScalarSignature(3, 0)
CUBIC_Q = QMatrix.from_upper(
    3, ZETA3, {(1, 2): ZETA3.zeta(), (1, 3): ZETA3.unit(2), (2, 3): ZETA3.zeta()}
)
MIXED = ScalarSignature(3, 1)
MIXED_Q = QMatrix.from_upper(
    3, MIXED, {(1, 2): MIXED.unit(1, [1]), (1, 3): MIXED.t(1), (2, 3): MIXED.unit(2, [-1])}
)
exponents = st.lists(st.integers(-2, 3), min_size=3, max_size=3).map(tuple)


def series(q, max_size=6):
    return st.dictionaries(
        st.sampled_from(monomials_below(3, PRECISION)), st.integers(-3, 3), max_size=max_size
    ).map(lambda terms: poly(q, PRECISION, terms))


def unit_series(q):
    return series(q).map(
        lambda f: f if not f.constant_term().is_zero() else f + SkewSeries.one(3, q.signature, PRECISION)
    )


@pytest.mark.slow
@settings(max_examples=500, deadline=None)
@given(series(CUBIC_Q), series(CUBIC_Q), series(CUBIC_Q))
def test_ring_axioms(f, g, h):
    q = CUBIC_Q
    assert mul(q, mul(q, f, g), h).equiv(mul(q, f, mul(q, g, h)), PRECISION)
    assert mul(q, f, g + h).equiv(mul(q, f, g) + mul(q, f, h))
    assert mul(q, f + g, h).equiv(mul(q, f, h) + mul(q, g, h))
    one = SkewSeries.one(3, q.signature, PRECISION)
    assert mul(q, one, f).equiv(f)


@pytest.mark.slow
@settings(max_examples=200, deadline=None)
@given(unit_series(MIXED_Q))
def test_inverse_round_trip(f):
    q = MIXED_Q
    g = invert(q, f)
    one = SkewSeries.one(3, q.signature, PRECISION)
    assert mul(q, f, g).equiv(one)
    assert mul(q, g, f).equiv(one)


@settings(max_examples=200, deadline=None)
@given(exponents, exponents)
def test_monomials_commute_up_to_sigma(s, t):
    q = MIXED_Q
    a, st_ = mono_mul(q, s, t)
    b, ts = mono_mul(q, t, s)
    assert st_ == ts
    assert a == sigma(q, s, t) * b


# ── automorphisms on random inputs ───────────────────────────────────
torus_values = st.lists(
    st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(bool), min_size=3, max_size=3
)


@settings(max_examples=60, deadline=None)
@given(series(MIXED_Q), series(MIXED_Q), st.integers(1, 3))
def test_conjugation_is_an_invertible_ring_map(f, g, i):
    q = MIXED_Q
    cf, cg = conjugate_by_xi(q, i, f), conjugate_by_xi(q, i, g)
    assert conjugate_by_xi(q, i, mul(q, f, g)).equiv(mul(q, cf, cg))
    assert conjugate_by_xi(q, i, f + g).equiv(cf + cg)
    back = conjugate_by_monomial(q, neg(unit_vector(3, i)), cf)
    assert back.equiv(f)


@settings(max_examples=60, deadline=None)
@given(series(MIXED_Q), series(MIXED_Q), torus_values)
def test_torus_acts_by_invertible_ring_maps(f, g, values):
    q = MIXED_Q
    h = TorusElement.from_values(q.signature, values)
    h_inv = TorusElement.from_values(q.signature, [1 / v for v in values])
    assert apply_torus(h, mul(q, f, g)).equiv(mul(q, apply_torus(h, f), apply_torus(h, g)))
    assert apply_torus(h_inv, apply_torus(h, f)).equiv(f)


@pytest.mark.parametrize("q", [CUBIC_Q, MIXED_Q])
def test_automorphisms_preserve_generators_of_h_primes(q):
    h = TorusElement.from_values(q.signature, (2, -3, Fraction(1, 2)))
    for w in all_subsets(3):
        for j in w:
            x = SkewSeries.variable(3, q.signature, PRECISION, j)
            images = [conjugate_by_xi(q, i, x) for i in range(1, 4)] + [apply_torus(h, x)]
            for image in images:
                assert image.support() == [unit_vector(3, j)]
                assert not image.coefficient(unit_vector(3, j)).is_zero()


def test_grlex_key_is_total_degree_first():
    assert sorted([(0, 3), (2, 0), (1, 0)], key=grlex_key) == [(1, 0), (2, 0), (0, 3)]
