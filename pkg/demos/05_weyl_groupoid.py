"""
The Weyl groupoid of q(n)
=========================

Wall objects [e_i - e_j], reflections r between [a] and [-a], and Weyl
elements.  Invariants of the groupoid are exactly the ring J_n.
"""

import random

from qchar import char_ring, schur, weyl_groupoid as wg
from qchar.expr import parse_poly, render

g = wg.build_groupoid(2)
print("objects:", ", ".join(str(o) for o in g["objects"]))
for m in g["generators"]:
    print(f"  {type(m.word[0]).__name__:12s} {m.source} -> {m.target}")

# r_a followed by r_-a collapses to the identity
a = wg.GroupoidObject((0, 1))
loop = wg.GroupoidMorphism.from_word([wg.Reflection((0, 1)), wg.Reflection((1, 0))])
print("r r normalises to the identity:", loop.normalized() == wg.GroupoidMorphism.identity(a))

# the affine realisation agrees before and after normalisation
rng = random.Random(0)
word = wg.random_word(3, 4, rng)
print("random word of length 4 keeps its realisation:",
      wg.same_realization(word, word.normalized(), 3, rng=rng))

for text in ["x1^2*x2^2", "x1*x2^(-1) + x2*x1^(-1)"]:
    f = parse_poly(text, 2)
    print(f"{text}: wall restriction {render(wg.wall_restrict(f, (0, 1)))}, "
          f"invariant {wg.is_groupoid_invariant(f)}, in J_2 {char_ring.is_in_Jn(f)}")
print("p_(2,1) invariant:", wg.is_groupoid_invariant(schur.schur_p((2, 1))))
