"""The ring J_n of symmetric Laurent polynomials with t-free wall evaluation.

J_n consists of the S_n-invariant f in Q[x_1^±1, ..., x_n^±1] for which
``f(t, -t, x_3, ..., x_n)`` does not depend on t.  The Schur P-functions
p_lambda, lambda in Lambda_n, form a basis; :func:`decompose_p` computes
coordinates in it, and :func:`ev` / :func:`lift_weight` /
:func:`kernel_decompose` expose the pieces of the inductive argument.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from qchar import laurent, schur


class NotInJn(ValueError):
    pass


class NotInSpan(ArithmeticError):
    pass


def _require_integral(f):
    if not f.is_integral():
        raise ValueError("J_n membership needs integral exponents; use "
                         "qchar.super_rings for half-integer or rational cosets")


def jn_obstruction(f):
    """Why ``f`` is not in J_n, or None if it is."""
    _require_integral(f)
    n = f.nvars
    for s in laurent.adjacent_transpositions(n):
        if laurent.act_permutation(s, f) != f:
            i = next(k for k in range(n) if s[k] != k)
            return f"not symmetric under swapping x{i + 1} and x{i + 2}"
    if n < 2:
        return None
    restricted = laurent.wall_substitute(f, 0, 1)
    degrees = sorted(d for d in laurent.degree_in(restricted, 0) if d != 0)
    if degrees:
        powers = ", ".join(f"t^{d}" for d in degrees)
        return f"t-dependence {powers} on wall (1,2)"
    return None


def is_in_Jn(f):
    return jn_obstruction(f) is None


def check_Jn(f):
    reason = jn_obstruction(f)
    if reason is not None:
        raise NotInJn(reason)
    return f


def ev(f):
    """Evaluation map J_n -> J_{n-2}: substitute x_{n-1} = -x_n."""
    n = f.nvars
    if n < 2:
        raise ValueError("the evaluation map needs at least two variables")
    check_Jn(f)
    restricted = laurent.wall_substitute(f, n - 2, n - 1)
    if any(d != 0 for d in laurent.degree_in(restricted, 0)):
        raise NotInJn(f"t-dependence on wall ({n - 1},{n})")
    return laurent.drop_variable(restricted, 0)


def lift_weight(mu):
    """Insert two zeros into ``mu`` in Lambda_{n-2}, giving a weight in Lambda_n."""
    mu = schur.check_Lambda_n(mu)
    k = sum(1 for p in mu if p > 0)
    return mu[:k] + (0, 0) + mu[k:]


# -- P-basis decomposition --------------------------------------------------

@dataclass(frozen=True)
class PBasisExpansion:
    nvars: int
    coefficients: dict = field(default_factory=dict)

    def to_poly(self):
        total = laurent.zero(self.nvars)
        for lam, c in self.coefficients.items():
            total = total + laurent.scale(c, schur.schur_p(lam))
        return total

    def as_json(self):
        return {"(" + ",".join(map(str, lam)) + ")": str(c)
                for lam, c in sorted(self.coefficients.items(), reverse=True)}


def lambda_candidates(n, degree, lo, hi):
    """All lambda in Lambda_n with parts in [lo, hi] summing to ``degree``."""
    positives = range(max(hi, 0), 0, -1)
    negatives = range(-1, min(lo, 0) - 1, -1)
    out = []
    for npos in range(n + 1):
        for pos in combinations(positives, npos):
            for nneg in range(n - npos + 1):
                zeros = n - npos - nneg
                for neg in combinations(negatives, nneg):
                    lam = pos + (0,) * zeros + neg
                    if sum(lam) == degree:
                        out.append(lam)
    return out


def solve_in_p_basis(component):
    """Exact linear solve of a homogeneous component against candidate p_lambda.

    Raises :class:`NotInSpan` if the component is not a combination of the
    candidates (all lambda in Lambda_n of the right degree within the
    component's exponent range).
    """
    from sympy import Matrix, Rational, linsolve, symbols

    n = component.nvars
    if component.is_zero():
        return {}
    (degree,) = laurent.total_degrees(component)
    lo, hi = laurent.min_max_exponents(component)
    cands = lambda_candidates(n, degree, int(lo), int(hi))
    basis = [schur.schur_p(lam) for lam in cands]
    rows = sorted(set(component.support_keys()).union(*(b.support_keys() for b in basis)))
    a = Matrix([[Rational(b._terms.get(r, 0)) for b in basis] for r in rows])
    rhs = Matrix([Rational(component._terms.get(r, 0)) for r in rows])
    unknowns = symbols(f"a0:{len(cands)}")
    solution = linsolve((a, rhs), *unknowns)
    if not solution:
        raise NotInSpan("component is not in the span of the Schur P-functions of "
                        f"degree {degree}")
    (values,) = solution
    out = {}
    for lam, v in zip(cands, values):
        v = Fraction(int(v.p), int(v.q))
        if v:
            out[lam] = v
    return out


def _greedy(component):
    rem = component
    out = {}
    while rem:
        lam = tuple(int(e) for e in laurent.leading_exponent(rem))
        if not schur.is_in_Lambda_n(lam):
            return None
        c = laurent.leading_coefficient(rem)
        out[lam] = out.get(lam, 0) + c
        rem = rem - laurent.scale(c, schur.schur_p(lam))
    return out


def decompose_p(f):
    """Coordinates of ``f`` in J_n with respect to the Schur P-functions."""
    check_Jn(f)
    coefficients = {}
    for component in laurent.homogeneous_components(f).values():
        part = _greedy(component)
        if part is None:
            part = solve_in_p_basis(component)
        coefficients.update(part)
    return PBasisExpansion(f.nvars, {k: v for k, v in coefficients.items() if v})


# -- kernel of ev -----------------------------------------------------------

@dataclass(frozen=True)
class KernelFactorization:
    """``f = odd_product(n) * sum_mu a_mu s_mu``."""
    nvars: int
    s_coefficients: dict = field(default_factory=dict)

    def to_poly(self):
        g = laurent.zero(self.nvars)
        for mu, c in self.s_coefficients.items():
            g = g + laurent.scale(c, schur.schur_s(mu))
        return schur.odd_product(self.nvars) * g

    def p_expansion(self):
        rho = schur.rho0(self.nvars)
        return PBasisExpansion(self.nvars, {
            tuple(m + r for m, r in zip(mu, rho)): c for mu, c in self.s_coefficients.items()})


def is_in_kernel(f):
    return ev(f).is_zero()


def s_coefficients(g):
    """Expand a symmetric Laurent polynomial in Schur Laurent polynomials.

    The coefficient of s_mu is the coefficient of x^{mu + rho0} in g * V.
    """
    n = g.nvars
    alternant = g * schur.vandermonde(n)
    rho = schur.rho0(n)
    d = alternant.denom
    out = {}
    for gamma, c in sorted(alternant._terms.items(), reverse=True):
        if all(a > b for a, b in zip(gamma, gamma[1:])):
            out[tuple(Fraction(a, d) - r for a, r in zip(gamma, rho))] = c
    if d == 1:
        out = {tuple(int(m) for m in mu): c for mu, c in out.items()}
    return out


def kernel_decompose(f):
    n = f.nvars
    if not is_in_kernel(f):
        raise ValueError("ev(f) is not zero")
    try:
        g = laurent.exact_div(f, schur.odd_product(n))
    except laurent.DivisionFailure as exc:
        raise ArithmeticError("kernel element not divisible by prod_{i<j}(x_i + x_j)") from exc
    if not laurent.is_symmetric(g):
        raise ArithmeticError("quotient by the odd product is not symmetric")
    return KernelFactorization(n, s_coefficients(g))


def is_polynomial_character(f):
    if not f.is_integral() or not is_in_Jn(f):
        return False
    return all(e >= 0 for key in f.support_keys() for e in key)
