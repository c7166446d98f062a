"""A concrete model of the super Weyl groupoid of q(n).

Objects are the base point ``[W]`` and one wall object ``[alpha]`` for each
root ``alpha = e_i - e_j`` (i != j); ``[alpha]`` and ``[-alpha]`` share the
wall ``x_i = -x_j``.  Generating morphisms are the reflections
``r_alpha : [alpha] -> [-alpha]`` and Weyl elements ``w : [alpha] -> [w alpha]``
(plus ``w : [W] -> [W]``).  The functor to affine geometry sends a wall
object to its hyperplane, ``r_alpha`` to the shift ``x_i + 1, x_j - 1`` and
``w`` to the coordinate permutation.

Words are read left to right: ``word[0]`` is applied first.

On Laurent characters the wall is parametrised by ``x_i = t, x_j = -t``; the
shift along the wall rescales ``t``, so a t-degree ``d`` part picks up a
formal factor ``c^d``.  A character is groupoid invariant when it is
symmetric and every wall restriction is concentrated in t-degree 0.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from qchar import laurent


@dataclass(frozen=True, order=True)
class GroupoidObject:
    """``[e_i - e_j]`` for ``root == (i, j)`` (0-based), or ``[W]`` when ``root`` is None."""
    root: tuple = None

    @property
    def is_base(self):
        return self.root is None

    @property
    def negative(self):
        i, j = self.root
        return GroupoidObject((j, i))

    @property
    def wall(self):
        """Unordered index pair of the hyperplane x_i = -x_j."""
        return tuple(sorted(self.root))

    @property
    def sign(self):
        i, j = self.root
        return 1 if i < j else -1

    def __str__(self):
        if self.root is None:
            return "[W]"
        i, j = self.root
        return f"[e{i + 1}-e{j + 1}]"


BASE = GroupoidObject(None)


def _compose_perm(u, w):
    """The permutation u∘w (apply w first)."""
    return tuple(u[w[k]] for k in range(len(w)))


def _invert(w):
    inv = [0] * len(w)
    for k, v in enumerate(w):
        inv[v] = k
    return tuple(inv)


def act_on_object(w, obj):
    if obj.is_base:
        return obj
    i, j = obj.root
    return GroupoidObject((w[i], w[j]))


@dataclass(frozen=True)
class Reflection:
    root: tuple

    @property
    def source(self):
        return GroupoidObject(self.root)

    @property
    def target(self):
        return GroupoidObject(self.root).negative


@dataclass(frozen=True)
class WeylElement:
    perm: tuple
    root: tuple = None

    @property
    def source(self):
        return GroupoidObject(self.root)

    @property
    def target(self):
        return act_on_object(self.perm, GroupoidObject(self.root))


@dataclass(frozen=True)
class GroupoidMorphism:
    source: GroupoidObject
    target: GroupoidObject
    word: tuple = ()

    @classmethod
    def identity(cls, obj):
        return cls(obj, obj, ())

    @classmethod
    def from_word(cls, word, source=None):
        word = tuple(word)
        if not word:
            if source is None:
                raise ValueError("an empty word needs an explicit source object")
            return cls.identity(source)
        current = word[0].source if source is None else source
        start = current
        for gen in word:
            if gen.source != current:
                raise ValueError(f"{gen} cannot follow a morphism ending at {current}")
            current = gen.target
        return cls(start, current, word)

    def then(self, other):
        """Apply ``self`` first, then ``other``."""
        if self.target != other.source:
            raise ValueError(f"cannot compose: {self.target} != {other.source}")
        return GroupoidMorphism(self.source, other.target, self.word + other.word)

    def normalized(self):
        """Rewrite with the defining relations.

        Adjacent Weyl elements merge, ``(uw)_alpha = u_{w alpha} w_alpha``;
        identity Weyl elements drop; ``r_alpha`` followed by ``r_{-alpha}``
        cancels.
        """
        stack = []
        for gen in self.word:
            stack.append(gen)
            while len(stack) >= 1:
                top = stack[-1]
                if isinstance(top, WeylElement) and top.perm == tuple(range(len(top.perm))):
                    stack.pop()
                    continue
                if len(stack) < 2:
                    break
                prev = stack[-2]
                if isinstance(prev, WeylElement) and isinstance(top, WeylElement):
                    stack[-2:] = [WeylElement(_compose_perm(top.perm, prev.perm), prev.root)]
                    continue
                if isinstance(prev, Reflection) and isinstance(top, Reflection) \
                        and top.root == (prev.root[1], prev.root[0]):
                    del stack[-2:]
                    continue
                break
        return GroupoidMorphism(self.source, self.target, tuple(stack))


# -- affine realisation -----------------------------------------------------

@dataclass(frozen=True)
class AffineMap:
    """``x -> P_w x + shift`` where ``(P_w x)_{w(k)} = x_k``."""
    perm: tuple
    shift: tuple

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(n)), (Fraction(0),) * n)

    def __call__(self, point):
        out = [None] * len(point)
        for k, v in enumerate(point):
            out[self.perm[k]] = v
        return tuple(a + b for a, b in zip(out, self.shift))

    def then(self, other):
        """``other ∘ self``."""
        perm = _compose_perm(other.perm, self.perm)
        moved = [None] * len(self.shift)
        for k, v in enumerate(self.shift):
            moved[other.perm[k]] = v
        return AffineMap(perm, tuple(a + b for a, b in zip(moved, other.shift)))


def tau(root, n):
    """Translation x_i + 1, x_j - 1 preserving the wall x_i = -x_j."""
    i, j = root
    shift = [Fraction(0)] * n
    shift[i] += 1
    shift[j] -= 1
    return AffineMap(tuple(range(n)), tuple(shift))


def realize_generator(gen, n):
    if isinstance(gen, Reflection):
        return tau(gen.root, n)
    return AffineMap(tuple(gen.perm), (Fraction(0),) * n)


def realize(morphism, n):
    result = AffineMap.identity(n)
    for gen in morphism.word:
        result = result.then(realize_generator(gen, n))
    return result


def on_wall(point, obj):
    if obj.is_base:
        return True
    i, j = obj.root
    return point[i] == -point[j]


def sample_wall_point(obj, n, rng):
    point = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
    if not obj.is_base:
        i, j = obj.root
        point[j] = -point[i]
    return tuple(point)


def same_realization(m1, m2, n, samples=5, rng=None):
    """Compare two parallel morphisms pointwise on rational points of their source."""
    if m1.source != m2.source or m1.target != m2.target:
        return False
    rng = rng or random.Random(0)
    f1, f2 = realize(m1, n), realize(m2, n)
    for _ in range(samples):
        x = sample_wall_point(m1.source, n, rng)
        y = f1(x)
        if y != f2(x) or not on_wall(y, m1.target):
            return False
    return True


# -- construction -----------------------------------------------------------

def transpositions(n):
    for i, j in combinations(range(n), 2):
        w = list(range(n))
        w[i], w[j] = j, i
        yield tuple(w)


def build_groupoid(n):
    """Objects and generating morphisms of the Weyl groupoid for q(n)."""
    if n < 2:
        raise ValueError("the Weyl groupoid needs n >= 2")
    walls = [GroupoidObject((i, j)) for i in range(n) for j in range(n) if i != j]
    objects = [BASE] + walls
    generators = []
    for w in transpositions(n):
        generators.append(GroupoidMorphism(BASE, BASE, (WeylElement(w),)))
    for obj in walls:
        generators.append(GroupoidMorphism.from_word([Reflection(obj.root)]))
        for w in transpositions(n):
            generators.append(GroupoidMorphism.from_word([WeylElement(w, obj.root)]))
    return {"objects": objects, "generators": generators}


def random_word(n, length, rng, start=None):
    """A random composable word of generators on the wall part of the groupoid."""
    walls = [(i, j) for i in range(n) for j in range(n) if i != j]
    current = GroupoidObject(rng.choice(walls)) if start is None else start
    source = current
    word = []
    perms = [tuple(rng.sample(range(n), n)) for _ in range(3)] + list(transpositions(n))
    for _ in range(length):
        if current.is_base or rng.random() < 0.5:
            gen = WeylElement(rng.choice(perms), current.root)
        else:
            gen = Reflection(current.root)
        word.append(gen)
        current = gen.target
    return GroupoidMorphism.from_word(word, source)


def relation_pairs(n, obj, rng):
    """Instances of the defining relations starting at ``obj``, as (lhs, rhs) pairs."""
    alpha = obj.root
    u = tuple(rng.sample(range(n), n))
    w = tuple(rng.sample(range(n), n))
    w_alpha = WeylElement(w, alpha)
    walpha = w_alpha.target
    pairs = [
        # r_{-alpha} after r_alpha is the identity of [alpha]
        (GroupoidMorphism.from_word([Reflection(alpha), Reflection(obj.negative.root)]),
         GroupoidMorphism.identity(obj)),
        # (uw)_alpha = u_{w alpha} ∘ w_alpha
        (GroupoidMorphism.from_word([WeylElement(_compose_perm(u, w), alpha)]),
         GroupoidMorphism.from_word([w_alpha, WeylElement(u, walpha.root)])),
        # r_{w alpha} ∘ w_alpha = w_{-alpha} ∘ r_alpha
        (GroupoidMorphism.from_word([w_alpha, Reflection(walpha.root)]),
         GroupoidMorphism.from_word([Reflection(alpha), WeylElement(w, obj.negative.root)])),
    ]
    return pairs


# -- invariance of characters ----------------------------------------------

def wall_restrict(f, alpha):
    """Restrict ``f`` to the wall of ``alpha = (i, j)``: x_i = t, x_j = -t."""
    i, j = alpha.root if isinstance(alpha, GroupoidObject) else alpha
    return laurent.wall_substitute(f, i, j)


def translate_action(g):
    """Action of the wall translation on a restriction ``g`` in (t, ...).

    Returns ``g(c t, ...)`` as a polynomial in (c, t, ...).
    """
    n = g.nvars
    out = {}
    for key, v in g._terms.items():
        out[(key[0],) + key] = v
    return laurent._canonical(out, n + 1, g.denom)


def embed_constant_c(g):
    """``g`` viewed as a polynomial in (c, t, ...) not involving c."""
    return laurent._canonical({(0,) + k: v for k, v in g._terms.items()}, g.nvars + 1, g.denom)


def is_translation_fixed(g):
    return translate_action(g) == embed_constant_c(g)


def groupoid_obstruction(f):
    n = f.nvars
    for s in transpositions(n):
        if laurent.act_permutation(s, f) != f:
            return f"not fixed by the Weyl element {tuple(k + 1 for k in s)} at [W]"
    for i in range(n):
        for j in range(n):
            if i != j and not is_translation_fixed(wall_restrict(f, (i, j))):
                return f"restriction to [e{i + 1}-e{j + 1}] is moved by r"
    return None


def is_groupoid_invariant(f):
    return groupoid_obstruction(f) is None
