from .decompose import CentralDecomposition, central_decompose, is_central_monomial, reassemble
from .monomialize import isolate_monomial, monomialize, probe_tori
from .shear import isolate_coset, rho_shear, separating_vector

__all__ = [
    "CentralDecomposition",
    "central_decompose",
    "is_central_monomial",
    "isolate_coset",
    "isolate_monomial",
    "monomialize",
    "probe_tori",
    "reassemble",
    "rho_shear",
    "separating_vector",
]
