"""The bicharacter sigma, its radical lattice S and integer normal forms."""

from .kernel import (
    INFINITE,
    KernelLattice,
    Transversal,
    center_generators,
    change_of_basis,
    integer_kernel,
    is_generic,
    kernel_lattice,
    restrict_to_stratum,
    subgroup_index,
    transversal,
)
from .normal_forms import hermite_normal_form, smith_decomposition, smith_normal_form
from .qmatrix import QMatrix, mu, sigma

__all__ = [
    "INFINITE",
    "KernelLattice",
    "QMatrix",
    "Transversal",
    "center_generators",
    "change_of_basis",
    "hermite_normal_form",
    "integer_kernel",
    "is_generic",
    "kernel_lattice",
    "mu",
    "restrict_to_stratum",
    "sigma",
    "smith_decomposition",
    "smith_normal_form",
    "subgroup_index",
    "transversal",
]
