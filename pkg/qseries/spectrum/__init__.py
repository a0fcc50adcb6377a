"""Stratification of Spec R by the H-primes J_w."""

from .poset import boolean_lattice, build_poset, hasse_edges, is_contained, saturated_chains, to_dot
from .report import NOT_APPLICABLE, SpectrumReport, chain_check, count_chains, full_report, goldie_bound
from .strata import HPrime, Stratum, all_subsets, analyze_stratum, h_primes, hprime, ideal_label

__all__ = [
    "HPrime",
    "NOT_APPLICABLE",
    "SpectrumReport",
    "Stratum",
    "all_subsets",
    "analyze_stratum",
    "boolean_lattice",
    "build_poset",
    "chain_check",
    "count_chains",
    "full_report",
    "goldie_bound",
    "h_primes",
    "hasse_edges",
    "hprime",
    "ideal_label",
    "is_contained",
    "saturated_chains",
    "to_dot",
]
