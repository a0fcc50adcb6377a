"""Scalar tower: Q(zeta_m)(t1..tr) and the unit group <zeta> x Z^r."""

from .cyclotomic import CycNumber, cyclotomic_domain, cyclotomic_polynomial, euler_phi
from .field import FieldElem, ScalarTower, field_embed, field_inv, scalar_tower
from .units import GroupUnit, ScalarSignature, unit_mul, unit_pow

__all__ = [
    "CycNumber",
    "FieldElem",
    "GroupUnit",
    "ScalarSignature",
    "ScalarTower",
    "cyclotomic_domain",
    "cyclotomic_polynomial",
    "euler_phi",
    "field_embed",
    "field_inv",
    "scalar_tower",
    "unit_mul",
    "unit_pow",
]
