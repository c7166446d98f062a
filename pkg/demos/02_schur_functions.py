"""
Schur P-functions, Euler characteristics and typical characters
===============================================================
"""

from qchar import laurent, schur
from qchar.expr import format_weight, render

# p_(3,1) in two variables equals x1*x2*(x1 + x2)^2
print("p_(3,1) =", render(schur.schur_p((3, 1))))

# p-functions are symmetric, lead with x^lambda, and allow repeated zeros
p = schur.schur_p((2, 0, 0, -1))
lead = format_weight(int(e) for e in laurent.leading_exponent(p))
print("p_(2,0,0,-1) has", len(p), "terms, leading exponent", lead)

# the Euler characteristic is 2^floor(l/2) times p_lambda
for lam in [(1, 0), (2, 1), (3, 1, 0, 0)]:
    e = schur.euler_char(lam)
    ratio = laurent.leading_coefficient(e)
    print(f"E{lam} = {ratio} * p{lam}")

# typical characters: 2^ceil(l/2) * p_lambda for integral typical weights ...
print("ch L(2,1) =", render(schur.typical_char((2, 1))))
# ... and the same closed form works for half-integer weights
print("ch L(1/2,-3/2) =", render(schur.typical_char(("1/2", "-3/2"))))

# odd_product * s_mu = p_(mu + rho0): the staircase weight gives the bare odd product
print("p_(2,1,0) == prod (x_i + x_j):", schur.schur_p((2, 1, 0)) == schur.odd_product(3))
