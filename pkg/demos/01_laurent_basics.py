"""
Exact Laurent polynomials
=========================

Sparse polynomials in x1..xn with rational coefficients and rational
(usually integer or half-integer) exponents.
"""

from qchar import laurent
from qchar.expr import parse_poly, render

f = parse_poly("x1^2 - x2^2", 2)
g = parse_poly("x1 - x2", 2)
print("f =", render(f))
print("f / g =", render(laurent.exact_div(f, g)))

# negative exponents are units, so this divides exactly as well
h = parse_poly("x1^(-1) + x2^(-1)", 2)
print("h / (x1 + x2) =", render(laurent.exact_div(h, parse_poly("x1 + x2", 2))))

# a genuine non-multiple is rejected instead of looping forever
try:
    laurent.exact_div(parse_poly("x1^2 + x2^2", 2), parse_poly("x1 + x2", 2))
except laurent.DivisionFailure as exc:
    print("x1^2 + x2^2 over x1 + x2:", exc)

# half-integer exponents live on their own coset of the lattice
root = parse_poly("x1^(1/2)*x2^(1/2)", 2)
mixed = parse_poly("x1 + x2", 2) + root
for a, part in laurent.coset_components(mixed).items():
    print(f"coset {a}:", render(part))

# restriction to the wall x1 = t, x2 = -t; t is printed as the first variable, x1
print("x1^2*x2^2 on the wall:", render(laurent.wall_substitute(parse_poly("x1^2*x2^2", 2), 0, 1)))
print("LaTeX:", render(mixed, "latex"))
