"""Weights and the closed-form symmetric functions of the queer character ring.

Every function here is an alternating sum over S_n divided by the
Vandermonde product ``V = prod_{i<j} (x_i - x_j)``.  Instead of a generic
lex division, the alternant is stored through its coefficients on strictly
decreasing exponents and divided by ``V`` with the identity

    m_nu * a_rho = sum over distinct rearrangements beta of nu of a_{beta + rho},

which peels off the symmetric quotient one dominant monomial at a time.
The generic route (:func:`qchar.laurent.exact_div`) is kept for cross-checks.

Weights are plain tuples.  Integer weights index p, E and s; the typical
character formula also accepts rational (e.g. half-integer) weights.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import NamedTuple

from qchar import laurent
from qchar.laurent import LaurentPoly


class WeightError(ValueError):
    pass


class WeightStats(NamedTuple):
    length: int
    parity: int
    stabilizer_order: int


# -- weights ----------------------------------------------------------------

def is_weakly_decreasing(parts):
    return all(a >= b for a, b in zip(parts, parts[1:]))


def is_in_Lambda_n(parts):
    """Integral, weakly decreasing, and equal neighbours only at zero."""
    parts = tuple(parts)
    if not all(Fraction(p).denominator == 1 for p in parts):
        return False
    if not is_weakly_decreasing(parts):
        return False
    return all(a != b or a == 0 for a, b in zip(parts, parts[1:]))


def is_typical(parts):
    parts = tuple(Fraction(p) for p in parts)
    n = len(parts)
    return all(parts[i] + parts[j] != 0 for i in range(n) for j in range(i + 1, n))


def weight_stats(parts):
    parts = tuple(parts)
    length = sum(1 for p in parts if p != 0)
    order = 1
    for value in set(parts):
        order *= factorial(parts.count(value))
    return WeightStats(length, length % 2, order)


def as_weight(parts):
    parts = tuple(parts)
    for p in parts:
        if Fraction(p).denominator != 1:
            raise WeightError(f"weight {parts} is not integral")
    return tuple(int(p) for p in parts)


def check_Lambda_n(parts):
    parts = as_weight(parts)
    if not is_in_Lambda_n(parts):
        raise WeightError(f"{parts} is not in Lambda_{len(parts)}: parts must weakly "
                          "decrease and only 0 may repeat")
    return parts


def check_general(parts):
    parts = as_weight(parts)
    if not is_weakly_decreasing(parts):
        raise WeightError(f"{parts} is not weakly decreasing")
    return parts


def rho0(n):
    return tuple(range(n - 1, -1, -1))


# -- permutations -----------------------------------------------------------

def coset_reps(parts):
    """Minimal-length representatives of S_n / S_lambda.

    A permutation is minimal in its coset exactly when it is increasing on
    every block of positions carrying equal entries of ``parts``.
    """
    parts = tuple(parts)
    n = len(parts)
    blocks = [[i for i in range(n) if parts[i] == v] for v in dict.fromkeys(parts)]
    reps = []
    for w in permutations(range(n)):
        if all(w[b[k]] < w[b[k + 1]] for b in blocks for k in range(len(b) - 1)):
            reps.append(w)
    return reps


def _sort_with_sign(key):
    """Sort ``key`` decreasingly; return (sorted, sign) or (None, 0) on repeats."""
    if len(set(key)) != len(key):
        return None, 0
    order = sorted(range(len(key)), key=lambda i: -key[i])
    return tuple(key[i] for i in order), laurent.permutation_sign(order)


def _distinct_rearrangements(seq):
    """All distinct permutations of ``seq``, in lex-descending order."""
    items = sorted(seq, reverse=True)
    n = len(items)
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] <= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] >= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])


# -- alternants -------------------------------------------------------------

def alternant_coefficients(f):
    """Coefficients ``c`` with ``sum_w sgn(w) w(f) = sum_gamma c[gamma] a_gamma``.

    Keys are strictly decreasing scaled exponent tuples (lattice ``f.denom``).
    """
    out = {}
    for key, v in f._terms.items():
        gamma, sign = _sort_with_sign(key)
        if sign:
            out[gamma] = out.get(gamma, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def divide_alternant(alt, n, denom=1):
    """Divide ``sum c[gamma] a_gamma`` by the Vandermonde product.

    Returns the symmetric quotient as ``{dominant scaled exponent: coeff}``.
    """
    rho = tuple(denom * r for r in rho0(n))
    rem = dict(alt)
    quotient = {}
    while rem:
        gamma = max(rem)
        c = rem[gamma]
        nu = tuple(a - b for a, b in zip(gamma, rho))
        quotient[nu] = c
        for beta in _distinct_rearrangements(nu):
            key, sign = _sort_with_sign(tuple(a + b for a, b in zip(beta, rho)))
            if sign:
                value = rem.get(key, 0) - sign * c
                if value:
                    rem[key] = value
                else:
                    rem.pop(key, None)
    return quotient


def symmetrize_dominant(dominant, n, denom=1):
    """Expand ``{dominant exponent: coeff}`` into the full symmetric polynomial."""
    terms = {}
    for nu, c in dominant.items():
        for beta in _distinct_rearrangements(nu):
            terms[beta] = c
    return laurent._canonical(terms, n, denom)


def alternant_quotient(f):
    """``sum_w sgn(w) w(f)`` divided by the Vandermonde product."""
    n = f.nvars
    dominant = divide_alternant(alternant_coefficients(f), n, f.denom)
    return symmetrize_dominant(dominant, n, f.denom)


# -- products ---------------------------------------------------------------

def _pair_product(n, pairs, sign):
    factors = []
    for i, j in pairs:
        factors.append(laurent.variable(i, n) + sign * laurent.variable(j, n))
    return laurent.product(factors, n)


@lru_cache(maxsize=None)
def odd_product(n):
    """prod_{i<j} (x_i + x_j)."""
    return _pair_product(n, [(i, j) for i in range(n) for j in range(i + 1, n)], 1)


@lru_cache(maxsize=None)
def vandermonde(n):
    """prod_{i<j} (x_i - x_j), i.e. e^{rho0} R_0."""
    return _pair_product(n, [(i, j) for i in range(n) for j in range(i + 1, n)], -1)


def weyl_denominators(n):
    """``(R0, R1)`` with R0 = prod (1 - x_j/x_i) and R1 = prod (1 + x_j/x_i)."""
    r0 = laurent.constant(1, n)
    r1 = laurent.constant(1, n)
    for i in range(n):
        for j in range(i + 1, n):
            ratio = laurent.variable(j, n) * laurent.variable(i, n) ** -1
            r0 = r0 * (1 - ratio)
            r1 = r1 * (1 + ratio)
    return r0, r1


def _unequal_pairs(parts):
    n = len(parts)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if parts[i] > parts[j]]


def _equal_pairs(parts):
    n = len(parts)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if parts[i] == parts[j]]


# -- the functions ----------------------------------------------------------

def schur_s(parts) -> LaurentPoly:
    """Schur Laurent polynomial a_{lambda+rho0} / a_{rho0} for weakly decreasing ``parts``."""
    return _schur_s(check_general(parts))


@lru_cache(maxsize=None)
def _schur_s(parts):
    n = len(parts)
    shifted = tuple(p + r for p, r in zip(parts, rho0(n)))
    return symmetrize_dominant(divide_alternant({shifted: Fraction(1)}, n), n)


def p_numerator(parts):
    """``x^lambda * prod_{lambda_i > lambda_j}(x_i + x_j) * prod_{lambda_i = lambda_j}(x_i - x_j)``.

    Summing ``sgn(w) w(.)`` of this over all of S_n gives ``|S_lambda| * V * p_lambda``.
    """
    n = len(parts)
    return laurent.monomial(parts) * _pair_product(n, _unequal_pairs(parts), 1) \
        * _pair_product(n, _equal_pairs(parts), -1)


def schur_p(parts) -> LaurentPoly:
    """Schur P-function p_{lambda,n}.

    The summand ``x^lambda prod_{lambda_i>lambda_j}(1 + x_j/x_i)/(1 - x_j/x_i)``
    is brought over the denominator V by multiplying with
    ``prod_{lambda_i = lambda_j} (x_i - x_j)``; S_lambda then acts on the
    numerator by its sign, so the coset sum is the full alternant over
    ``|S_lambda|``.
    """
    return _schur_p(check_Lambda_n(parts))


@lru_cache(maxsize=None)
def _schur_p(parts):
    stab = weight_stats(parts).stabilizer_order
    return laurent.scale(Fraction(1, stab), alternant_quotient(p_numerator(parts)))


class ProportionalityError(ArithmeticError):
    def __init__(self, message, left, right):
        super().__init__(message)
        self.left = left
        self.right = right


def euler_char(parts) -> LaurentPoly:
    """Euler characteristic E(lambda), checked against 2^floor(l/2) * p_lambda.

    Phi+(lambda) is taken to be the positive roots e_i - e_j with
    lambda_i = lambda_j.  Over the common denominator prod_{i<j}(x_i + x_j)
    the W-sum becomes an alternant of
    ``x^lambda * prod_{lambda_i=lambda_j} x_i * prod_{lambda_i>lambda_j}(x_i+x_j)``
    and R^{-1} contributes (prod (x_i+x_j)) / V.
    """
    parts = check_Lambda_n(parts)
    n = len(parts)
    equal = _equal_pairs(parts)
    shift = [0] * n
    for i, _ in equal:
        shift[i] += 1
    numerator = laurent.monomial(tuple(p + s for p, s in zip(parts, shift))) \
        * _pair_product(n, _unequal_pairs(parts), 1)
    prefactor = 2 ** (weight_stats(parts).length // 2)
    result = laurent.scale(prefactor, alternant_quotient(numerator))
    expected = laurent.scale(prefactor, schur_p(parts))
    if result != expected:
        raise ProportionalityError(
            f"E{parts} is not 2^{weight_stats(parts).length // 2} * p{parts}",
            result, expected)
    return result


def typical_char(parts) -> LaurentPoly:
    """Character of the typical simple module L(lambda).

    2^ceil(l/2) * R^{-1} * sum_w sgn(w) e^{w lambda}, evaluated as the Schur
    bialternant of lambda times prod_{i<j}(x_i + x_j).  ``parts`` may be
    rational (e.g. half-integers) but must be strictly decreasing and typical.
    """
    parts = tuple(Fraction(p) for p in parts)
    n = len(parts)
    if not all(a > b for a, b in zip(parts, parts[1:])):
        raise WeightError(f"{tuple(map(str, parts))} is not strictly decreasing")
    if not is_typical(parts):
        raise WeightError(f"{tuple(map(str, parts))} is atypical: some lambda_i + lambda_j = 0")
    alternating = laurent.monomial(parts)
    quotient = alternant_quotient(alternating)
    length = weight_stats(parts).length
    result = laurent.scale(2 ** ((length + 1) // 2), quotient * odd_product(n))
    if any(c < 0 or c.denominator != 1 for _, c in result.items()):
        raise ArithmeticError(f"typical character of {parts} has non-natural coefficients")
    return result


def coset_summand_numerator(parts, w):
    """``N_w * Q_w``: the coset summand for ``w`` written over the denominator V.

    N_w = w(x^lambda prod_{lambda_i>lambda_j}(x_i + x_j)) and
    Q_w = V / w(prod_{lambda_i>lambda_j}(x_i - x_j)).  Used by the literal
    coset-sum route in the tests.
    """
    n = len(parts)
    pairs = _unequal_pairs(parts)
    num = laurent.act_permutation(w, laurent.monomial(parts) * _pair_product(n, pairs, 1))
    den = laurent.act_permutation(w, _pair_product(n, pairs, -1))
    return num * laurent.exact_div(vandermonde(n), den)


def schur_p_by_cosets(parts):
    """p_lambda summed literally over coset representatives, with one exact division by V."""
    parts = check_Lambda_n(parts)
    n = len(parts)
    total = laurent.zero(n)
    for w in coset_reps(parts):
        total = total + coset_summand_numerator(parts, w)
    return laurent.exact_div(total, vandermonde(n))
