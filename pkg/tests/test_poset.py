"""Test the H-prime poset built with networkx."""

from conftest import center_not_laurent_q, generic_q
from qseries.spectrum import (
    analyze_stratum,
    boolean_lattice,
    build_poset,
    h_primes,
    hasse_edges,
    is_contained,
    saturated_chains,
    to_dot,
)


def test_boolean_lattice_shape():
    """2^n nodes, n*2^(n-1) cover edges."""
    g = boolean_lattice(3)
    assert len(g.nodes) == 8
    assert len(g.edges) == 12
    assert hasse_edges(g)[0] == ((), (1,))
    assert hasse_edges(g)[-1] == ((2, 3), (1, 2, 3))


def test_empty_poset():
    g = build_poset([])
    assert len(g.nodes) == 0
    assert hasse_edges(g) == []


def test_containment():
    g = boolean_lattice(3)
    assert is_contained(g, (), (1, 3))
    assert is_contained(g, (1,), (1, 2))
    assert is_contained(g, (2,), (2,))
    assert not is_contained(g, (1,), (2,))
    assert not is_contained(g, (1, 2), (1,))


def test_saturated_chains():
    g = boolean_lattice(3)
    chains = saturated_chains(g, (), (1, 2))
    assert sorted(chains) == [[(), (1,), (1, 2)], [(), (2,), (1, 2)]]
    assert saturated_chains(g, (1,), (1,)) == [[(1,)]]
    assert len(saturated_chains(g, (), (1, 2, 3))) == 6


def test_node_metadata():
    q = center_not_laurent_q()
    primes = h_primes(q)
    strata = [analyze_stratum(q, p.w) for p in primes]
    g = build_poset(primes, strata)
    assert g.nodes[()]["meta"].label == "0"
    assert g.nodes[()]["stratum"].center_rank == 1
    assert build_poset(primes).nodes[()]["stratum"] is None


def test_dot_without_strata():
    dot = to_dot(boolean_lattice(2))
    assert dot.startswith("digraph hprimes {\n  rankdir=BT;\n")
    assert '  wnone [label="0"];' in dot
    assert '  w1_2 [label="<x1, x2>"];' in dot
    assert "  wnone -> w1;" in dot
    assert "  w2 -> w1_2;" in dot
    assert dot.endswith("}\n")


def test_dot_marks_simple_strata():
    q = center_not_laurent_q()
    primes = h_primes(q)
    g = build_poset(primes, [analyze_stratum(q, p.w) for p in primes])
    dot = to_dot(g, name="spectrum")
    assert dot.startswith("digraph spectrum {")
    assert 'wnone [label="0\\nrank 1", shape=ellipse];' in dot
    assert 'w1 [label="<x1>\\nrank 0", shape=box];' in dot


def test_generic_dot_is_all_boxes():
    q = generic_q(3)
    primes = h_primes(q)
    dot = to_dot(build_poset(primes, [analyze_stratum(q, p.w) for p in primes]))
    assert dot.count("shape=box") == 8
    assert "shape=ellipse" not in dot
