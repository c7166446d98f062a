"""Membership in the character rings of the other queer supergroups and superalgebras.

The integral part of every ring is governed by J_n.  Weights off the
integral lattice only occur through ``prod_{i<j}(x_i + x_j) * J_{a,n}``
where J_{a,n} are the symmetric Laurent polynomials with all exponents in
``a + Z``.  Only rational ``a`` are representable; the lattice denominator
is bounded by ``QCHAR_DENOM_BOUND`` (default 12).
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from qchar import char_ring, laurent, schur


class RingId(enum.Enum):
    GROUP_Q = "q"
    GROUP_SQ = "sq"
    GROUP_PQ = "pq"
    GROUP_PSQ = "psq"
    HALF_INTEGER = "half"
    ALGEBRA_Q = "alg-q"
    ALGEBRA_PQ = "alg-pq"

    @property
    def label(self):
        return _LABELS[self]


_LABELS = {
    RingId.GROUP_Q: "Q(n)",
    RingId.GROUP_SQ: "SQ(n)",
    RingId.GROUP_PQ: "PQ(n)",
    RingId.GROUP_PSQ: "PSQ(n)",
    RingId.HALF_INTEGER: "the half-integer weight category of q(n)",
    RingId.ALGEBRA_Q: "q(n) / sq(n)",
    RingId.ALGEBRA_PQ: "pq(n) / psq(n)",
}


class NotInRing(ValueError):
    pass


@dataclass(frozen=True)
class CosetDecomposition:
    nvars: int
    integer_part: laurent.LaurentPoly
    fractional_parts: dict = field(default_factory=dict)

    def to_poly(self):
        total = self.integer_part
        odd = schur.odd_product(self.nvars)
        for g in self.fractional_parts.values():
            total = total + odd * g
        return total


def _odd_quotient(component, a):
    """Quotient of a coset-``a`` component by the odd product, or an error string."""
    n = component.nvars
    try:
        g = laurent.exact_div(component, schur.odd_product(n))
    except laurent.DivisionFailure:
        return None, f"coset {a} component is not divisible by prod_{{i<j}}(x_i + x_j)"
    if not laurent.is_symmetric(g):
        return None, f"coset {a} quotient by prod_{{i<j}}(x_i + x_j) is not symmetric"
    return g, None


def _degree_zero_obstruction(f):
    bad = sorted(d for d in laurent.total_degrees(f) if d != 0)
    if bad:
        return "total degree " + ", ".join(str(d) for d in bad) + " present (must be 0)"
    return None


def ring_obstruction(f, ring):
    """Why ``f`` is not a virtual character of ``ring``, or None."""
    ring = RingId(ring)
    try:
        components = laurent.coset_components(f)
    except laurent.MixedCosetError as exc:
        return str(exc)
    integral = components.pop(Fraction(0), laurent.zero(f.nvars))

    if ring in (RingId.GROUP_Q, RingId.GROUP_SQ, RingId.GROUP_PQ, RingId.GROUP_PSQ,
                RingId.ALGEBRA_PQ):
        if components:
            cosets = ", ".join(str(a) for a in components)
            return f"non-integral exponents (coset {cosets}) in a ring of integral weights"
        reason = char_ring.jn_obstruction(integral)
        if reason is None and ring not in (RingId.GROUP_Q, RingId.GROUP_SQ):
            reason = _degree_zero_obstruction(integral)
        return reason

    if ring is RingId.HALF_INTEGER:
        other = [a for a in components if a != Fraction(1, 2)]
        if other:
            return "exponents in coset " + ", ".join(map(str, other)) + \
                " (only integers and half-integers allowed)"

    reason = char_ring.jn_obstruction(integral)
    if reason is not None:
        return f"integral part: {reason}"
    for a, component in components.items():
        _, reason = _odd_quotient(component, a)
        if reason is not None:
            return reason
    return None


def is_in_ring(f, ring):
    return ring_obstruction(f, ring) is None


def coset_split(f):
    """Split a virtual q(n)-character as J_n part plus odd product times J_{a,n} parts."""
    components = laurent.coset_components(f)
    integral = components.pop(Fraction(0), laurent.zero(f.nvars))
    reason = char_ring.jn_obstruction(integral)
    if reason is not None:
        raise NotInRing(f"integral part: {reason}")
    quotients = {}
    for a, component in components.items():
        g, reason = _odd_quotient(component, a)
        if reason is not None:
            raise NotInRing(reason)
        quotients[a] = g
    return CosetDecomposition(f.nvars, integral, quotients)
