"""
The evaluation map and the P-basis
==================================

Substituting x_{n-1} = -x_n sends J_n onto J_{n-2}; the kernel is the odd
product times symmetric Laurent polynomials.
"""

from fractions import Fraction

from qchar import char_ring, schur
from qchar.char_ring import PBasisExpansion
from qchar.expr import format_weight, render

big = schur.schur_p((3, 1, 0, 0))
print("ev(p_(3,1,0,0)) =", render(char_ring.ev(big)))
print("p_(3,1)         =", render(schur.schur_p((3, 1))))
print("lift of (2,-1):", char_ring.lift_weight((2, -1)))

# coordinates of an arbitrary element of J_3
f = PBasisExpansion(3, {(2, 1, 0): Fraction(1, 2), (1, 0, -1): Fraction(-3)}).to_poly()
f = f * schur.schur_p((1, 0, 0))
print("p_(1,0,0) * (1/2 p_(2,1,0) - 3 p_(1,0,-1)) =")
print("  ", char_ring.decompose_p(f).as_json())

# split f into a lifted part and a kernel part
image = char_ring.decompose_p(char_ring.ev(f)).coefficients
lifted = PBasisExpansion(3, {char_ring.lift_weight(mu): c for mu, c in image.items()}).to_poly()
rest = f - lifted
print("rest is in the kernel:", char_ring.is_in_kernel(rest))
s_part = char_ring.kernel_decompose(rest).s_coefficients
print("rest = odd_product *", " + ".join(f"({c}) s{format_weight(mu)}" for mu, c in s_part.items()))
