"""
Character rings of the variant groups and algebras
==================================================
"""

from qchar import schur, super_rings
from qchar.expr import parse_poly
from qchar.super_rings import RingId

tests = [
    ("x1 + x2", RingId.GROUP_Q),
    ("x1 + x2", RingId.GROUP_PQ),
    ("x1*x2^(-1) + x2*x1^(-1)", RingId.GROUP_PQ),
    ("(x1 + x2)*x1^(1/2)*x2^(1/2)", RingId.HALF_INTEGER),
    ("x1^(1/2)*x2^(1/2)", RingId.HALF_INTEGER),
    ("(x1 + x2)*x1^(1/3)*x2^(1/3)", RingId.ALGEBRA_Q),
]
for text, ring in tests:
    reason = super_rings.ring_obstruction(parse_poly(text, 2), ring)
    print(f"{text:32s} {ring.value:6s} {'member' if reason is None else reason}")

# a half-integer typical character splits as odd_product * (symmetric part)
ch = schur.typical_char(("5/2", "1/2", "-3/2"))
split = super_rings.coset_split(ch)
print("integer part zero:", split.integer_part.is_zero())
print("cosets:", [str(a) for a in split.fractional_parts])
