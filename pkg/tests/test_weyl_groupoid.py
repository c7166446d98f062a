import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qchar import char_ring, laurent, schur, weyl_groupoid as wg
from qchar.expr import parse_poly
from qchar.verify import groupoid_battery
from qchar.weyl_groupoid import BASE, GroupoidMorphism, GroupoidObject, Reflection, WeylElement


def P(text, n=2):
    return parse_poly(text, n)


# -- structure ----------------------------------------------------------------

def test_q2_groupoid():
    g = wg.build_groupoid(2)
    walls = [o for o in g["objects"] if not o.is_base]
    assert len(walls) == 2 and BASE in g["objects"]
    assert {str(o) for o in walls} == {"[e1-e2]", "[e2-e1]"}
    # s on [W], plus s and r out of each wall object, in both directions
    assert len(g["generators"]) == 5
    reflections = [m for m in g["generators"] if isinstance(m.word[0], Reflection)]
    assert {(str(m.source), str(m.target)) for m in reflections} == {
        ("[e1-e2]", "[e2-e1]"), ("[e2-e1]", "[e1-e2]")}


@pytest.mark.parametrize("n, walls", [(2, 2), (3, 6), (4, 12)])
def test_wall_count(n, walls):
    objects = wg.build_groupoid(n)["objects"]
    assert len(objects) == walls + 1


def test_wall_objects_pair_up():
    for obj in wg.build_groupoid(3)["objects"]:
        if obj.is_base:
            continue
        assert obj.negative.negative == obj
        assert obj.negative.wall == obj.wall
        assert obj.negative.sign == -obj.sign


def test_build_rejects_small_rank():
    with pytest.raises(ValueError):
        wg.build_groupoid(1)


def test_composability_is_checked():
    a = GroupoidObject((0, 1))
    with pytest.raises(ValueError):
        GroupoidMorphism.from_word([Reflection((0, 1)), Reflection((0, 1))])
    r = GroupoidMorphism.from_word([Reflection((0, 1))])
    with pytest.raises(ValueError):
        r.then(r)
    assert r.source == a and r.target == a.negative


# -- normalisation --------------------------------------------------------------

def test_reflection_pair_normalises_to_identity():
    m = GroupoidMorphism.from_word([Reflection((0, 1)), Reflection((1, 0))])
    assert m.normalized() == GroupoidMorphism.identity(GroupoidObject((0, 1)))


def test_weyl_elements_merge():
    a = (0, 1)
    s = (1, 0, 2)
    t = (0, 2, 1)
    first = WeylElement(s, a)
    m = GroupoidMorphism.from_word([first, WeylElement(t, first.target.root)])
    (merged,) = m.normalized().word
    assert merged == WeylElement(tuple(t[s[k]] for k in range(3)), a)
    assert m.normalized().target == m.target


def test_identity_weyl_elements_drop():
    m = GroupoidMorphism.from_word([WeylElement((0, 1, 2), (0, 2)), Reflection((0, 2))])
    assert m.normalized().word == (Reflection((0, 2)),)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 4), st.integers(1, 6), st.randoms(use_true_random=False))
def test_normalisation_preserves_the_realisation(n, length, rng):
    word = wg.random_word(n, length, rng)
    norm = word.normalized()
    assert len(norm.word) <= len(word.word)
    assert wg.same_realization(word, norm, n, rng=rng)


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 4), st.integers(0, 4), st.randoms(use_true_random=False))
def test_relations_hold_after_any_prefix(n, length, rng):
    prefix = wg.random_word(n, max(length, 1), rng)
    for lhs, rhs in wg.relation_pairs(n, prefix.target, rng):
        assert wg.same_realization(prefix.then(lhs), prefix.then(rhs), n, rng=rng)


# -- affine functor -------------------------------------------------------------

def test_tau_stays_on_the_wall():
    f = wg.tau((0, 2), 3)
    x = (Fraction(1, 2), 4, Fraction(-1, 2))
    assert f(x) == (Fraction(3, 2), 4, Fraction(-3, 2))
    assert wg.on_wall(f(x), GroupoidObject((2, 0)))


def test_functoriality():
    rng = random.Random(2)
    for _ in range(30):
        a = wg.random_word(3, 3, rng)
        b = wg.random_word(3, 2, rng, start=a.target)
        composite = wg.realize(a.then(b), 3)
        for _ in range(3):
            x = wg.sample_wall_point(a.source, 3, rng)
            assert composite(x) == wg.realize(b, 3)(wg.realize(a, 3)(x))


def test_distinct_morphisms_are_told_apart():
    a = GroupoidObject((0, 1))
    r = GroupoidMorphism.from_word([Reflection((0, 1))])
    s = GroupoidMorphism.from_word([WeylElement((1, 0), (0, 1))])
    assert r.target == s.target == a.negative
    assert not wg.same_realization(r, s, 2)


# -- invariance -----------------------------------------------------------------

def test_wall_restrict_examples():
    assert wg.wall_restrict(P("x1 + x2"), (0, 1)).is_zero()
    # x1*x2 -> t*(-t): t-dependent
    assert wg.wall_restrict(P("x1*x2"), (0, 1)) == laurent.monomial((2,), -1)
    assert wg.wall_restrict(P("x1*x2^(-1) + x2*x1^(-1)"), (0, 1)) == laurent.constant(-2, 1)
    assert wg.wall_restrict(P("x1"), GroupoidObject((1, 0))) == laurent.monomial((1,), -1)


def test_translate_action():
    five = laurent.constant(5, 1)
    assert wg.is_translation_fixed(five)
    t4 = laurent.monomial((4,))
    assert wg.translate_action(t4) == laurent.monomial((4, 4))
    assert not wg.is_translation_fixed(t4)
    assert wg.is_translation_fixed(laurent.zero(1))


def test_invariance_examples():
    assert wg.is_groupoid_invariant(schur.schur_p((2, 1)))
    assert not wg.is_groupoid_invariant(P("x1^2*x2^2"))
    assert "moved by r" in wg.groupoid_obstruction(P("x1^2*x2^2"))
    assert "Weyl element" in wg.groupoid_obstruction(P("x1"))
    for n in (1, 2, 3):
        assert wg.is_groupoid_invariant(laurent.constant(7, n))


def test_battery_agrees_with_Jn():
    members, non_members = groupoid_battery(random.Random(9))
    assert len(members) >= 50 and len(non_members) >= 20
    for f in members + non_members:
        assert wg.is_groupoid_invariant(f) == char_ring.is_in_Jn(f)
    assert all(char_ring.is_in_Jn(f) for f in members)
    assert not any(char_ring.is_in_Jn(f) for f in non_members)


@settings(max_examples=150)
@given(st.integers(1, 3).flatmap(lambda n: st.lists(
    st.tuples(st.tuples(*[st.integers(-2, 2)] * n), st.integers(-2, 2)),
    max_size=4).map(lambda ts: laurent.make(ts, n))))
def test_invariance_matches_Jn_on_random_input(f):
    assert wg.is_groupoid_invariant(f) == char_ring.is_in_Jn(f)
