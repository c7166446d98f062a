"""Exact character rings of the queer Lie supergroups Q(n), SQ(n), PQ(n), PSQ(n)."""

from qchar.laurent import LaurentPoly, DivisionFailure, MixedCosetError, exact_div, make
from qchar.schur import schur_p, schur_s, euler_char, typical_char, odd_product, rho0
from qchar.char_ring import decompose_p, ev, is_in_Jn, kernel_decompose, lift_weight
from qchar.expr import parse_poly, render
from qchar.super_rings import RingId, coset_split, is_in_ring
from qchar.weyl_groupoid import is_groupoid_invariant

__all__ = [
    "LaurentPoly", "DivisionFailure", "MixedCosetError", "exact_div", "make",
    "schur_p", "schur_s", "euler_char", "typical_char", "odd_product", "rho0",
    "decompose_p", "ev", "is_in_Jn", "kernel_decompose", "lift_weight",
    "parse_poly", "render", "RingId", "coset_split", "is_in_ring", "is_groupoid_invariant",
]
