import pytest
from hypothesis import given, settings, strategies as st

from conftest import center_not_laurent_q, generic_q, poly, root_of_unity_q
from qseries.center import (
    central_decompose,
    is_central_monomial,
    isolate_coset,
    isolate_monomial,
    monomialize,
    probe_tori,
    reassemble,
    rho_shear,
    separating_vector,
)
from qseries.exceptions import DegenerateShearError, NoLeadingTermError, SeparationError
from qseries.lattice import kernel_lattice, transversal
from qseries.series import LaurentElem, SkewSeries, TorusElement, grlex_key, laurent_equiv, laurent_mul, monomials_below


@pytest.fixture
def minus_one():
    """x y = -y x with f = x^2 + y^2 + x."""
    q = root_of_unity_q(2)
    lattice = kernel_lattice(q)
    return q, lattice, transversal(lattice), poly(q, 4, {(2, 0): 1, (0, 2): 1, (1, 0): 1})


# ── central decomposition ────────────────────────────────────────────
def test_decomposition_splits_by_coset(minus_one):
    q, lattice, trans, f = minus_one
    dec = central_decompose(q, lattice, trans, f)
    assert dec.cosets() == [(0, 0), (1, 0)]
    components = dict(dec.items())
    assert components[(0, 0)].terms(q) == {(2, 0): 1, (0, 2): 1}
    assert components[(1, 0)].terms(q) == {(0, 0): 1}


def test_decomposition_reassembles(minus_one):
    q, lattice, trans, f = minus_one
    dec = central_decompose(q, lattice, trans, f)
    assert laurent_equiv(q, reassemble(q, dec), LaurentElem.from_series(f))


def test_components_are_central(minus_one):
    q, lattice, trans, f = minus_one
    for _, z in central_decompose(q, lattice, trans, f).items():
        assert all(is_central_monomial(lattice, s) for s in z.terms(q))


def test_decomposition_with_a_degree_zero_central_monomial():
    q = center_not_laurent_q()
    lattice = kernel_lattice(q)
    trans = transversal(lattice)
    f = poly(q, 4, {(1, 0, 0): 1, (0, 1, 0): 1})
    dec = central_decompose(q, lattice, trans, f)
    assert len(dec) == 1
    (t, z), = dec.items()
    assert t == (0, 1, 0)
    # z = 1 + x1 x2^-1, with x1 x2^-1 central of total degree 0
    assert z.terms(q) == {(0, 0, 0): 1, (1, -1, 0): 1}
    assert laurent_equiv(q, reassemble(q, dec), LaurentElem.from_series(f))


def test_central_monomials():
    q = center_not_laurent_q()
    lattice = kernel_lattice(q)
    assert is_central_monomial(lattice, (2, -2, 0))
    assert not is_central_monomial(transversal(lattice), (1, 0, 0))


# ── shears ───────────────────────────────────────────────────────────
def test_rho_shear_keeps_one_coset(minus_one):
    q, _, _, f = minus_one
    g = rho_shear(q, f, (0, 1), (0, 0), (1, 0))
    assert g.equiv(poly(q, 4, {(2, 0): 1, (0, 2): 1}))


def test_rho_shear_degenerate(minus_one):
    q, _, _, f = minus_one
    with pytest.raises(DegenerateShearError):
        rho_shear(q, f, (1, 0), (0, 0), (1, 0))


def test_separating_vector(minus_one):
    q, _, _, _ = minus_one
    assert separating_vector(q, (0, 0), (1, 0)) == (0, 1)
    with pytest.raises(DegenerateShearError):
        separating_vector(q, (0, 0), (2, 0))


def test_isolate_coset(minus_one):
    q, lattice, trans, f = minus_one
    assert isolate_coset(q, lattice, trans, f, (0, 0)).equiv(poly(q, 4, {(2, 0): 1, (0, 2): 1}))
    assert isolate_coset(q, lattice, trans, f, (1, 0)).equiv(poly(q, 4, {(1, 0): 1}))
    # a coset f does not meet gives zero
    assert isolate_coset(q, lattice, trans, f, (1, 1)).is_zero()


# ── monomialization ──────────────────────────────────────────────────
def test_monomialize_with_given_torus():
    q = generic_q(2)
    f = poly(q, 4, {(1, 0): 1, (1, 1): 1})
    h = TorusElement.from_values(q.signature, (2, 3))
    assert monomialize(q, f, h) == [(1, 0), (1, 1)]


def test_monomialize_with_default_probes():
    q = root_of_unity_q(3)
    f = poly(q, 4, {(1, 0): 2, (1, 1): 3, (0, 2): 1})
    assert monomialize(q, f) == [(1, 0), (1, 1), (0, 2)]
    probes = probe_tori(q.signature, 2, 1)
    assert isolate_monomial(f, (1, 1), probes).equiv(poly(q, 4, {(1, 1): 3}))


def test_probe_tori_use_consecutive_primes():
    q = generic_q(2)
    probes = probe_tori(q.signature, 2, 1)
    assert len(probes) == 2
    assert [h.character((1, 0)) for h in probes] == [2, 5]
    assert [h.character((0, 1)) for h in probes] == [3, 7]


def test_isolation_needs_a_separating_probe():
    q = generic_q(2)
    f = poly(q, 3, {(1, 0): 1, (0, 1): 1})
    flat = TorusElement.from_values(q.signature, (1, 1))
    with pytest.raises(SeparationError):
        isolate_monomial(f, (1, 0), [flat])
    # the prime probes always separate distinct monomials
    assert monomialize(q, f, flat, max_retries=0) == [(1, 0), (0, 1)]


def test_monomialize_zero():
    q = generic_q(2)
    with pytest.raises(NoLeadingTermError):
        monomialize(q, SkewSeries.zero(2, q.signature, 3))


# ── properties ───────────────────────────────────────────────────────
CASES = [root_of_unity_q(3), center_not_laurent_q()]
PRECISION = 6


@st.composite
def ring_and_series(draw):
    q = draw(st.sampled_from(CASES))
    terms = draw(
        st.dictionaries(
            st.sampled_from(monomials_below(q.n, PRECISION)),
            st.integers(-3, 3).filter(bool),
            min_size=1,
            max_size=6,
        )
    )
    return q, poly(q, PRECISION, terms)


@pytest.mark.slow
@settings(max_examples=100, deadline=None)
@given(ring_and_series())
def test_decomposition_properties(case):
    q, f = case
    lattice = kernel_lattice(q)
    trans = transversal(lattice)
    dec = central_decompose(q, lattice, trans, f)
    assert laurent_equiv(q, reassemble(q, dec), LaurentElem.from_series(f))
    for t, z in dec.items():
        assert trans.coset_rep(t) == tuple(t)
        assert all(is_central_monomial(lattice, s) for s in z.terms(q))


@pytest.mark.slow
@settings(max_examples=100, deadline=None)
@given(ring_and_series())
def test_monomialize_recovers_the_support(case):
    q, f = case
    assert sorted(monomialize(q, f), key=grlex_key) == sorted(f.support(), key=grlex_key)


@pytest.mark.slow
@settings(max_examples=100, deadline=None)
@given(ring_and_series())
def test_decomposition_components_commute_with_generators(case):
    q, f = case
    lattice = kernel_lattice(q)
    dec = central_decompose(q, lattice, transversal(lattice), f)
    for i in range(1, q.n + 1):
        e_i = tuple(int(k == i - 1) for k in range(q.n))
        x_i = LaurentElem.monomial(q, e_i, PRECISION + 1)
        for _, z in dec.items():
            assert laurent_equiv(q, laurent_mul(q, x_i, z), laurent_mul(q, z, x_i))
