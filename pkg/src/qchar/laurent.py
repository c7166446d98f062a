"""Sparse multivariate Laurent polynomials over Q with rational exponents.

A polynomial stores its exponent vectors as tuples of integers on a lattice
``(1/denom) Z^n``: the stored entry ``k`` stands for the exponent
``k / denom``.  Integral polynomials have ``denom == 1``; half-integer
characters have ``denom == 2``; other rational cosets use larger
denominators up to :func:`denominator_bound`.  ``denom`` is always the
smallest lattice carrying the support, so two equal polynomials have equal
internal representations.

Coefficients are :class:`fractions.Fraction`.  Values are immutable.
"""

import heapq
import os
from fractions import Fraction
from itertools import combinations
from math import gcd

DEFAULT_DENOM_BOUND = 12


class DivisionFailure(ArithmeticError):
    """Raised when a Laurent polynomial has no exact quotient."""


class MixedCosetError(ValueError):
    """A monomial whose exponents do not share one fractional part."""


def denominator_bound():
    value = os.environ.get("QCHAR_DENOM_BOUND")
    return int(value) if value else DEFAULT_DENOM_BOUND


def _lcm(a, b):
    return a * b // gcd(a, b)


def _as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


def _canonical(terms, nvars, denom):
    """Drop zeros and shrink ``denom`` to the smallest lattice carrying the support."""
    terms = {k: v for k, v in terms.items() if v}
    if denom != 1:
        g = denom
        for key in terms:
            for e in key:
                g = gcd(g, e)
                if g == 1:
                    break
            if g == 1:
                break
        if g > 1:
            terms = {tuple(e // g for e in k): v for k, v in terms.items()}
            denom //= g
    if not terms:
        denom = 1
    return LaurentPoly._raw(terms, nvars, denom)


def _rescale(terms, factor):
    if factor == 1:
        return terms
    return {tuple(e * factor for e in k): v for k, v in terms.items()}


class LaurentPoly:
    """An element of Q[x_1^(±1/d), ..., x_n^(±1/d)]."""

    __slots__ = ("nvars", "denom", "_terms", "_hash")

    def __init__(self, terms=(), nvars=0):
        built = make(terms, nvars)
        self.nvars = built.nvars
        self.denom = built.denom
        self._terms = built._terms
        self._hash = None

    @classmethod
    def _raw(cls, terms, nvars, denom):
        obj = object.__new__(cls)
        obj.nvars = nvars
        obj.denom = denom
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection -------------------------------------------------------

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def items(self):
        """Yield ``(exponents, coefficient)`` with exponents as Fractions, in lex-descending order."""
        d = self.denom
        for key in sorted(self._terms, reverse=True):
            yield tuple(Fraction(e, d) for e in key), self._terms[key]

    @property
    def terms(self):
        return dict(self.items())

    def coefficient(self, exponents):
        exps = [_as_fraction(e) * self.denom for e in exponents]
        if len(exps) != self.nvars or any(e.denominator != 1 for e in exps):
            return Fraction(0)
        return self._terms.get(tuple(int(e) for e in exps), Fraction(0))

    def is_integral(self):
        return self.denom == 1

    def is_constant(self):
        return all(not any(k) for k in self._terms)

    def support_keys(self):
        """Stored (scaled integer) exponent tuples."""
        return self._terms.keys()

    # -- ring structure ---------------------------------------------------

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            other = constant(other, self.nvars)
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        d, a, b = _aligned(self, other)
        out = dict(a)
        for k, v in b.items():
            out[k] = out.get(k, 0) + v
        return _canonical(out, self.nvars, d)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._terms.items()}, self.nvars, self.denom)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            return scale(other, self)
        other = self._check(other)
        d, a, b = _aligned(self, other)
        out = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                key = tuple(x + y for x, y in zip(ka, kb))
                out[key] = out.get(key, 0) + va * vb
        return _canonical(out, self.nvars, d)

    def __rmul__(self, other):
        return scale(other, self)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise DivisionFailure("only monomials are invertible in a Laurent ring")
            (key, c), = self._terms.items()
            return LaurentPoly._raw({tuple(-e * -k for e in key): Fraction(1) / c ** -k},
                                    self.nvars, self.denom)
        result = constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return (self.nvars == other.nvars and self.denom == other.denom
                    and self._terms == other._terms)
        if isinstance(other, (int, Fraction)):
            return self == constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.denom, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        from qchar.expr import render
        return f"LaurentPoly({render(self)!r}, nvars={self.nvars})"


def _aligned(f, g):
    if f.denom == g.denom:
        return f.denom, f._terms, g._terms
    d = _lcm(f.denom, g.denom)
    return d, _rescale(f._terms, d // f.denom), _rescale(g._terms, d // g.denom)


# -- construction -----------------------------------------------------------

def make(terms, nvars):
    """Build a polynomial from ``(exponents, coefficient)`` pairs.

    Exponents may be ints, Fractions or strings like ``"1/2"``.  Duplicate
    exponent vectors are summed and zero coefficients dropped.
    """
    if isinstance(terms, dict):
        terms = terms.items()
    pairs = []
    denom = 1
    for exps, coeff in terms:
        exps = tuple(_as_fraction(e) for e in exps)
        if len(exps) != nvars:
            raise ValueError(f"exponent vector {exps} does not have length {nvars}")
        for e in exps:
            denom = _lcm(denom, e.denominator)
        pairs.append((exps, _as_fraction(coeff)))
    bound = denominator_bound()
    if denom > bound:
        raise ValueError(f"exponent denominator {denom} exceeds the lattice bound {bound} "
                         "(raise QCHAR_DENOM_BOUND to allow it)")
    out = {}
    for exps, coeff in pairs:
        key = tuple(int(e * denom) for e in exps)
        out[key] = out.get(key, 0) + coeff
    return _canonical(out, nvars, denom)


def from_scaled(terms, nvars, denom=1):
    """Build from already-scaled integer keys (internal fast path)."""
    return _canonical({k: Fraction(v) for k, v in terms.items()}, nvars, denom)


def zero(nvars):
    return LaurentPoly._raw({}, nvars, 1)


def constant(c, nvars):
    c = _as_fraction(c)
    return LaurentPoly._raw({(0,) * nvars: c} if c else {}, nvars, 1)


def monomial(exponents, coeff=1, nvars=None):
    exponents = tuple(exponents)
    return make([(exponents, coeff)], len(exponents) if nvars is None else nvars)


def variable(i, nvars):
    """The variable x_{i+1} (0-based index ``i``)."""
    exps = [0] * nvars
    exps[i] = 1
    return LaurentPoly._raw({tuple(exps): Fraction(1)}, nvars, 1)


def add(f, g):
    return f + g


def mul(f, g):
    return f * g


def scale(c, f):
    c = _as_fraction(c)
    if not c:
        return zero(f.nvars)
    return LaurentPoly._raw({k: c * v for k, v in f._terms.items()}, f.nvars, f.denom)


def product(factors, nvars):
    result = constant(1, nvars)
    for factor in factors:
        result = result * factor
    return result


# -- ordering ---------------------------------------------------------------

def leading_key(f):
    if not f._terms:
        raise ValueError("the zero polynomial has no leading exponent")
    return max(f._terms)


def leading_exponent(f):
    """Lexicographically greatest exponent vector of ``f`` (x_1 > x_2 > ...)."""
    return tuple(Fraction(e, f.denom) for e in leading_key(f))


def leading_coefficient(f):
    return f._terms[leading_key(f)]


# -- division ---------------------------------------------------------------

def exact_div(f, g):
    """Return ``q`` with ``f == q * g``, or raise :class:`DivisionFailure`.

    Plain leading-term reduction in lex order.  Laurent monomials are
    units, so every step succeeds; termination comes from the box bound:
    if ``q`` exists, each coordinate of its support lies in
    ``[min_k f - min_k g, max_k f - max_k g]``, and any quotient term outside
    that box certifies that no quotient exists.
    """
    if f.nvars != g.nvars:
        raise ValueError(f"variable count mismatch: {f.nvars} vs {g.nvars}")
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    n = f.nvars
    if f.is_zero():
        return zero(n)
    d, F, G = _aligned(f, g)
    lo = [min(k[i] for k in F) - min(k[i] for k in G) for i in range(n)]
    hi = [max(k[i] for k in F) - max(k[i] for k in G) for i in range(n)]
    if any(a > b for a, b in zip(lo, hi)):
        raise DivisionFailure("support of the divisor does not fit inside the dividend")

    glead = max(G)
    gcoeff = G[glead]
    gitems = list(G.items())
    rem = dict(F)
    heap = [tuple(-e for e in k) for k in rem]
    heapq.heapify(heap)
    quotient = {}
    while rem:
        while True:
            key = tuple(-e for e in heapq.heappop(heap))
            if key in rem:
                break
        exps = tuple(a - b for a, b in zip(key, glead))
        if any(e < a or e > b for e, a, b in zip(exps, lo, hi)):
            raise DivisionFailure("remainder left the quotient support bound; "
                                  "no exact quotient exists")
        c = rem[key] / gcoeff
        quotient[exps] = c
        for gk, gv in gitems:
            k2 = tuple(a + b for a, b in zip(exps, gk))
            old = rem.get(k2)
            value = (old or 0) - c * gv
            if value:
                if old is None:
                    heapq.heappush(heap, tuple(-e for e in k2))
                rem[k2] = value
            elif old is not None:
                del rem[k2]
    return _canonical(quotient, n, d)


def divides(g, f):
    try:
        exact_div(f, g)
    except DivisionFailure:
        return False
    return True


# -- symmetry ---------------------------------------------------------------

def act_permutation(w, f):
    """Substitute x_i -> x_{w(i)}; ``w`` is a tuple of 0-based images."""
    n = f.nvars
    if len(w) != n or sorted(w) != list(range(n)):
        raise ValueError(f"{w} is not a permutation of {n} letters")
    out = {}
    for key, v in f._terms.items():
        new = [0] * n
        for i, e in enumerate(key):
            new[w[i]] = e
        out[tuple(new)] = v
    return LaurentPoly._raw(out, n, f.denom)


def adjacent_transpositions(n):
    for i in range(n - 1):
        w = list(range(n))
        w[i], w[i + 1] = i + 1, i
        yield tuple(w)


def is_symmetric(f):
    # the adjacent transpositions generate S_n
    return all(act_permutation(s, f) == f for s in adjacent_transpositions(f.nvars))


def permutation_sign(w):
    sign = 1
    for i, j in combinations(range(len(w)), 2):
        if w[i] > w[j]:
            sign = -sign
    return sign


# -- substitutions and splittings ------------------------------------------

def wall_substitute(f, i, j):
    """Substitute ``x_i = t``, ``x_j = -t`` (0-based indices).

    The result has ``n - 1`` variables: ``t`` first, then the untouched
    variables in their original order.  Non-integral exponents at ``i`` or
    ``j`` are rejected since ``(-t)^(1/2)`` has no canonical value.
    """
    n = f.nvars
    if i == j or not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"invalid wall ({i}, {j}) for {n} variables")
    d = f.denom
    rest = [k for k in range(n) if k not in (i, j)]
    out = {}
    for key, v in f._terms.items():
        a, b = key[i], key[j]
        if a % d or b % d:
            raise ValueError(f"cannot substitute x{i + 1} = -x{j + 1}: non-integral exponent "
                             f"{Fraction(a, d)} / {Fraction(b, d)}")
        sign = -1 if (b // d) % 2 else 1
        new = (a + b,) + tuple(key[k] for k in rest)
        out[new] = out.get(new, 0) + sign * v
    return _canonical(out, n - 1, d)


def drop_variable(f, index=0):
    """Remove variable ``index``, which must not occur in ``f``."""
    out = {}
    for key, v in f._terms.items():
        if key[index]:
            raise ValueError(f"variable {index + 1} occurs in the polynomial")
        out[key[:index] + key[index + 1:]] = v
    return LaurentPoly._raw(out, f.nvars - 1, f.denom)


def degree_in(f, index):
    """Set of exponents (Fractions) of variable ``index`` occurring in ``f``."""
    return {Fraction(k[index], f.denom) for k in f._terms}


def homogeneous_components(f):
    """Split by total degree: ``{degree: component}``."""
    parts = {}
    for key, v in f._terms.items():
        parts.setdefault(sum(key), {})[key] = v
    return {Fraction(deg, f.denom): _canonical(t, f.nvars, f.denom)
            for deg, t in sorted(parts.items())}


def total_degrees(f):
    return {Fraction(sum(k), f.denom) for k in f._terms}


def coset_components(f):
    """Split by the common fractional part ``a`` in [0, 1) of each monomial's exponents."""
    d = f.denom
    parts = {}
    for key, v in f._terms.items():
        residues = {e % d for e in key}
        if len(residues) > 1:
            exps = ", ".join(str(Fraction(e, d)) for e in key)
            raise MixedCosetError(f"monomial with exponents ({exps}) mixes fractional parts")
        r = residues.pop() if residues else 0
        parts.setdefault(r, {})[key] = v
    return {Fraction(r, d): _canonical(t, f.nvars, d) for r, t in sorted(parts.items())}


def min_max_exponents(f):
    """Smallest and largest exponent (Fractions) over all variables in the support."""
    flat = [e for k in f._terms for e in k]
    if not flat:
        return Fraction(0), Fraction(0)
    return Fraction(min(flat), f.denom), Fraction(max(flat), f.denom)


def multiply_monomial(f, exponents):
    """Shift every exponent vector of ``f`` by ``exponents``."""
    return f * monomial(exponents, nvars=f.nvars)
