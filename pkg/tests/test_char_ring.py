import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qchar import char_ring, laurent, schur
from qchar.char_ring import NotInJn, NotInSpan, PBasisExpansion
from qchar.expr import parse_poly
from qchar.verify import lambda_n, random_p_combination


def P(text, n=2):
    return parse_poly(text, n)


# -- membership -----------------------------------------------------------------

@pytest.mark.parametrize("text, expected", [
    ("x1 + x2", True),
    ("x1^2*x2^2", False),
    ("1", True),
    ("x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3", True),
    ("x1", False),
    ("x1^(-1) + x2^(-1)", True),
])
def test_is_in_Jn(text, expected):
    assert char_ring.is_in_Jn(P(text)) is expected


def test_obstruction_messages():
    assert char_ring.jn_obstruction(P("x1^2*x2^2")) == "t-dependence t^4 on wall (1,2)"
    assert "swapping x1 and x2" in char_ring.jn_obstruction(P("x1"))
    assert char_ring.jn_obstruction(P("x1 + x2")) is None


def test_membership_needs_integral_exponents():
    with pytest.raises(ValueError, match="integral"):
        char_ring.is_in_Jn(P("x1^(1/2)*x2^(1/2)"))


def test_small_ranks():
    assert char_ring.is_in_Jn(laurent.constant(3, 0))
    assert char_ring.is_in_Jn(P("x1^5 - 2*x1^(-3)", 1))


# -- ev and lift ----------------------------------------------------------------

def test_ev_examples():
    assert char_ring.ev(P("x1 + x2")).is_zero()
    assert char_ring.ev(schur.schur_p((3, 1, 0, 0))) == schur.schur_p((3, 1))
    assert char_ring.ev(P("x1 + x2 + x3", 3)) == P("x1", 1)


def test_ev_rejects_non_members():
    with pytest.raises(NotInJn):
        char_ring.ev(P("x1^2*x2^2"))
    with pytest.raises(ValueError):
        char_ring.ev(P("x1", 1))


def test_lift_examples():
    assert char_ring.lift_weight((3, 1)) == (3, 1, 0, 0)
    assert char_ring.lift_weight((2, -1)) == (2, 0, 0, -1)
    assert char_ring.lift_weight(()) == (0, 0)
    assert char_ring.lift_weight((0, -2)) == (0, 0, 0, -2)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ev_of_lift(n):
    for mu in lambda_n(n - 2, -3, 3):
        assert char_ring.ev(schur.schur_p(char_ring.lift_weight(mu))) == schur.schur_p(mu)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.randoms(use_true_random=False))
def test_ev_is_a_ring_map(n, rng):
    weights = lambda_n(n + 2, -2, 2)
    f = schur.schur_p(rng.choice(weights))
    g = schur.schur_p(rng.choice(weights))
    assert char_ring.ev(f * g) == char_ring.ev(f) * char_ring.ev(g)
    assert char_ring.ev(f + g) == char_ring.ev(f) + char_ring.ev(g)


# -- P-basis --------------------------------------------------------------------

def test_decompose_examples():
    assert char_ring.decompose_p(P("x1^2 + 2*x1*x2 + x2^2")).coefficients == {(2, 0): 1}
    assert char_ring.decompose_p(P("x1*x2*(x1 + x2)^2")).coefficients == {(3, 1): 1}
    assert char_ring.decompose_p(laurent.zero(2)).coefficients == {}


def test_decompose_rank_one():
    f = P("3*x1^2 - x1^(-4)", 1)
    assert char_ring.decompose_p(f).coefficients == {(2,): 3, (-4,): -1}


def test_decompose_json_is_sorted_and_exact():
    f = laurent.scale(Fraction(1, 3), schur.schur_p((2, 0))) + schur.schur_p((1, -1))
    assert char_ring.decompose_p(f).as_json() == {"(2,0)": "1/3", "(1,-1)": "1"}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_decompose_basis_elements(n):
    for lam in lambda_n(n, -2, 2):
        assert char_ring.decompose_p(schur.schur_p(lam)).coefficients == {lam: 1}


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4), st.randoms(use_true_random=False))
def test_decompose_roundtrip(n, rng):
    coeffs = random_p_combination(n, rng, -3, 3, rng.randint(1, 5))
    f = PBasisExpansion(n, coeffs).to_poly()
    assert char_ring.decompose_p(f).coefficients == coeffs


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.randoms(use_true_random=False))
def test_products_close(n, rng):
    weights = lambda_n(n, -2, 2)
    f = schur.schur_p(rng.choice(weights)) * schur.schur_p(rng.choice(weights))
    assert char_ring.is_in_Jn(f)
    assert char_ring.decompose_p(f).to_poly() == f


def test_linear_solve_agrees_with_greedy():
    f = schur.schur_p((3, 0, -1)) - laurent.scale(Fraction(5, 2), schur.schur_p((2, 0, 0)))
    assert char_ring.solve_in_p_basis(f) == {(3, 0, -1): 1, (2, 0, 0): Fraction(-5, 2)}


@pytest.mark.parametrize("text", ["x1^2*x2^2", "x1^2 + x2^2", "x1^3*x2 + x1^2*x2^2 + x1*x2^3"])
def test_linear_solve_certifies_non_members(text):
    with pytest.raises(NotInSpan):
        char_ring.solve_in_p_basis(P(text))


def test_lambda_candidates():
    assert sorted(char_ring.lambda_candidates(2, 2, -1, 3)) == [(2, 0), (3, -1)]
    assert char_ring.lambda_candidates(3, 0, -1, 1) == [(0, 0, 0), (1, 0, -1)]


# -- kernel ---------------------------------------------------------------------

def test_kernel_examples():
    f = P("x1*x2*(x1 + x2)^2")
    assert char_ring.is_in_kernel(f)
    assert char_ring.kernel_decompose(f).s_coefficients == {(2, 1): 1}
    g = P("x1 + x2")
    assert char_ring.is_in_kernel(g)
    assert char_ring.kernel_decompose(g).s_coefficients == {(0, 0): 1}
    assert not char_ring.is_in_kernel(P("x1 + x2 + x3", 3))


def test_kernel_decompose_rejects_non_kernel():
    with pytest.raises(ValueError):
        char_ring.kernel_decompose(P("x1 + x2 + x3", 3))


def test_kernel_p_expansion():
    fact = char_ring.kernel_decompose(schur.schur_p((4, 1, 0)))
    assert fact.s_coefficients == {(2, 0, 0): 1}
    assert fact.p_expansion().coefficients == {(4, 1, 0): 1}


def _middle_exactness(f):
    n = f.nvars
    image = char_ring.decompose_p(char_ring.ev(f)).coefficients
    lifted = PBasisExpansion(n, {char_ring.lift_weight(mu): c for mu, c in image.items()})
    rest = f - lifted.to_poly()
    assert char_ring.is_in_kernel(rest)
    fact = char_ring.kernel_decompose(rest)
    assert fact.to_poly() == rest
    assert lifted.to_poly() + fact.to_poly() == f


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4), st.randoms(use_true_random=False))
def test_exactness_in_the_middle(n, rng):
    _middle_exactness(PBasisExpansion(n, random_p_combination(n, rng, -2, 3, 4)).to_poly())


def test_exactness_on_a_product():
    _middle_exactness(schur.schur_p((2, 0, -1)) * schur.schur_p((1, 0, 0)))


# -- polynomial characters ------------------------------------------------------

@pytest.mark.parametrize("text, expected", [
    ("x1 + x2", True), ("x1^(-1) + x2^(-1)", False), ("1", True), ("x1^2*x2^2", False)])
def test_is_polynomial_character(text, expected):
    assert char_ring.is_polynomial_character(P(text)) is expected


def test_random_combination_is_seeded():
    a = random_p_combination(3, random.Random(1))
    b = random_p_combination(3, random.Random(1))
    assert a == b
