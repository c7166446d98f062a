"""Identity suites replayed by ``qchar verify``.

Each suite yields :class:`Check` records; nothing here raises on a failed
identity, so a report can list every failure.  Bounds: ``n`` is the largest
rank tried and ``max_entry`` bounds weight entries.  The lift suite uses
entries in ``[-max_entry, max_entry]``; the kernel, Euler and typical suites
use ``[1 - max_entry, max_entry]``.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement

from qchar import char_ring, laurent, schur, super_rings, weyl_groupoid
from qchar.expr import format_weight

SUITES = ("example", "lift", "kernel", "euler", "typical", "basis", "rings", "groupoid")


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        status = "PASS" if self.ok else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"[{status}] {self.suite}: {self.name}{tail}"


def lambda_n(n, lo, hi):
    """Every lambda in Lambda_n with entries in [lo, hi]."""
    out = []
    for degree in range(n * lo, n * hi + 1):
        out.extend(char_ring.lambda_candidates(n, degree, lo, hi))
    return sorted(set(out), reverse=True)


def weakly_decreasing(n, lo, hi):
    return [tuple(sorted(c, reverse=True))
            for c in combinations_with_replacement(range(lo, hi + 1), n)]


def suite_example(n=4, max_entry=3):
    p4 = schur.schur_p((3, 1, 0, 0))
    p2 = schur.schur_p((3, 1))
    expected = laurent.make([((3, 1), 1), ((2, 2), 2), ((1, 3), 1)], 2)
    yield Check("example", "ev(p_(3,1,0,0)) = p_(3,1)", char_ring.ev(p4) == p2)
    yield Check("example", "p_(3,1) = x1^3*x2 + 2*x1^2*x2^2 + x1*x2^3", p2 == expected)


def suite_lift(n=4, max_entry=3):
    for m in range(3, max(n, 3) + 1):
        for mu in lambda_n(m - 2, -max_entry, max_entry):
            lam = char_ring.lift_weight(mu)
            ok = char_ring.ev(schur.schur_p(lam)) == schur.schur_p(mu)
            yield Check("lift", f"n={m} ev(p{format_weight(lam)}) = p{format_weight(mu)}", ok)


def suite_kernel(n=4, max_entry=3):
    for m in range(2, n + 1):
        rho = schur.rho0(m)
        odd = schur.odd_product(m)
        for mu in weakly_decreasing(m, 1 - max_entry, max_entry):
            lam = tuple(a + b for a, b in zip(mu, rho))
            lhs = odd * schur.schur_s(mu)
            rhs = schur.schur_p(lam)
            ok = lhs == rhs
            detail = ""
            if not ok:
                scalar = laurent.leading_coefficient(lhs) / laurent.leading_coefficient(rhs) \
                    if lhs and rhs else "undefined"
                detail = f"computed scalar {scalar}"
            elif not char_ring.is_in_kernel(lhs):
                ok, detail = False, "ev does not vanish"
            yield Check("kernel", f"n={m} odd*s{format_weight(mu)} = p{format_weight(lam)}",
                        ok, detail)


def suite_euler(n=4, max_entry=3):
    for m in range(1, n + 1):
        for lam in lambda_n(m, 1 - max_entry, max_entry):
            try:
                schur.euler_char(lam)
                ok, detail = True, ""
            except schur.ProportionalityError as exc:
                ok, detail = False, str(exc)
            yield Check("euler", f"E{format_weight(lam)} = 2^floor(l/2) p", ok, detail)


def suite_typical(n=4, max_entry=3):
    for m in range(1, n + 1):
        for lam in lambda_n(m, 1 - max_entry, max_entry):
            if not schur.is_typical(lam):
                continue
            stats = schur.weight_stats(lam)
            ch = schur.typical_char(lam)
            ok = ch == laurent.scale(2 ** ((stats.length + 1) // 2), schur.schur_p(lam))
            natural = all(c >= 0 and c.denominator == 1 for _, c in ch.items())
            yield Check("typical", f"ch L{format_weight(lam)} = 2^ceil(l/2) p",
                        ok and natural)
    halves = [Fraction(2 * k + 1, 2) for k in range(-3, 3)]
    for m in range(2, min(n, 3) + 1):
        for lam in lambda_n(m, -3, 2):
            lam = tuple(x + Fraction(1, 2) for x in lam)
            if len(set(lam)) < m or not schur.is_typical(lam) or not set(lam) <= set(halves):
                continue
            ch = schur.typical_char(lam)
            ok = super_rings.is_in_ring(ch, super_rings.RingId.HALF_INTEGER)
            name = "(" + ",".join(str(x) for x in lam) + ")"
            yield Check("typical", f"ch L{name} lies in the half-integer ring", ok)


def random_p_combination(n, rng, lo=-3, hi=3, size=5):
    weights = lambda_n(n, lo, hi)
    chosen = rng.sample(weights, min(size, len(weights)))
    coeffs = {}
    for lam in chosen:
        c = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if c:
            coeffs[lam] = c
    return coeffs


def suite_basis(n=4, max_entry=3, trials=100, products=50, seed=7):
    rng = random.Random(seed)
    for k in range(trials):
        m = rng.randint(1, n)
        coeffs = random_p_combination(m, rng, -max_entry, max_entry, rng.randint(1, 5))
        f = char_ring.PBasisExpansion(m, coeffs).to_poly()
        got = char_ring.decompose_p(f).coefficients
        yield Check("basis", f"combination #{k} (n={m}) recovers coefficients", got == coeffs)
    for k in range(products):
        m = rng.randint(1, min(n, 3))
        weights = lambda_n(m, -2, 2)
        lam, mu = rng.choice(weights), rng.choice(weights)
        f = schur.schur_p(lam) * schur.schur_p(mu)
        ok = char_ring.is_in_Jn(f) and char_ring.decompose_p(f).to_poly() == f
        yield Check("basis", f"p{format_weight(lam)}*p{format_weight(mu)} closes in J_{m}", ok)


def ring_battery(rng):
    """Constructed members and non-members for the half-integer and q(n) rings."""
    R = super_rings.RingId
    members, non_members = [], []
    for k in range(30):
        n = 2 + k % 2
        odd = schur.odd_product(n)
        lam = rng.choice(lambda_n(n, -2, 2))
        integral = laurent.scale(rng.randint(-3, 3), schur.schur_p(lam))
        a = Fraction(1, 2) if k % 3 else Fraction(1, 3)
        shift = laurent.monomial((a + rng.randint(-1, 1),) * n)
        g = shift * schur.schur_s(tuple(sorted((rng.randint(-1, 2) for _ in range(n)),
                                               reverse=True)))
        f = integral + odd * g
        rings = [R.ALGEBRA_Q] + ([R.HALF_INTEGER] if a == Fraction(1, 2) else [])
        members.append((f, rings, a))
    for k in range(15):
        n = 2 + k % 2
        a = Fraction(1, 2) if k % 3 else Fraction(1, 3)
        shift = laurent.monomial((a,) * n)
        sym = shift * schur.schur_s((2,) + (0,) * (n - 1))
        kind = k % 3
        if kind == 0:
            f = sym                                 # symmetric but not divisible
        elif kind == 1:
            f = schur.odd_product(n) * shift * laurent.variable(0, n)   # not symmetric
        else:
            f = schur.schur_p((2,) + (0,) * (n - 1)) + laurent.monomial((2,) * n) \
                + schur.odd_product(n) * sym        # integral part outside J_n
        non_members.append((f, [R.HALF_INTEGER, R.ALGEBRA_Q], a))
    return members, non_members


def suite_rings(n=4, max_entry=3, seed=11):
    rng = random.Random(seed)
    members, non_members = ring_battery(rng)
    for k, (f, rings, a) in enumerate(members):
        for ring in rings:
            yield Check("rings", f"member #{k} (a={a}) in {ring.value}",
                        super_rings.is_in_ring(f, ring))
        split = super_rings.coset_split(f)
        yield Check("rings", f"member #{k} coset split reconstructs", split.to_poly() == f)
        if a == Fraction(1, 3):
            yield Check("rings", f"member #{k} (a=1/3) rejected by half",
                        not super_rings.is_in_ring(f, super_rings.RingId.HALF_INTEGER))
    for k, (f, rings, a) in enumerate(non_members):
        for ring in rings:
            yield Check("rings", f"non-member #{k} (a={a}) rejected by {ring.value}",
                        not super_rings.is_in_ring(f, ring))


def groupoid_battery(rng, n_values=(2, 3, 4)):
    members, non_members = [], []
    for k in range(60):
        n = n_values[k % len(n_values)]
        weights = lambda_n(n, -2, 2)
        if k % 2:
            f = schur.schur_p(rng.choice(weights)) * schur.schur_p(rng.choice(weights))
        else:
            f = char_ring.PBasisExpansion(n, random_p_combination(n, rng, -2, 2, 3)).to_poly()
        members.append(f)
    for k in range(24):
        n = n_values[k % len(n_values)]
        kind = k % 4
        if kind == 0:
            exps = [rng.randint(-2, 2) for _ in range(n)]
            exps[0] += 1
            f = laurent.monomial(exps) + laurent.monomial([0] * n)
            if laurent.is_symmetric(f):
                f = f + laurent.variable(0, n)
        elif kind == 1:
            f = schur.symmetrize_dominant({(2, 2) + (0,) * (n - 2): Fraction(1)}, n)
        elif kind == 2:
            f = schur.schur_s((1,) * 2 + (0,) * (n - 2)) + schur.schur_p((1,) + (0,) * (n - 1))
        else:
            e = rng.randint(1, 3)
            f = schur.symmetrize_dominant({(e,) * n: Fraction(1)}, n) \
                + schur.schur_p(rng.choice(lambda_n(n, -1, 2)))
        non_members.append(f)
    return members, non_members


def suite_groupoid(n=4, max_entry=3, seed=5):
    rng = random.Random(seed)
    members, non_members = groupoid_battery(rng, tuple(range(2, max(n, 2) + 1)))
    for k, f in enumerate(members):
        jn, inv = char_ring.is_in_Jn(f), weyl_groupoid.is_groupoid_invariant(f)
        yield Check("groupoid", f"member #{k} (n={f.nvars}): invariant = in J_n",
                    jn and inv, f"J_n={jn} groupoid={inv}")
    for k, f in enumerate(non_members):
        jn, inv = char_ring.is_in_Jn(f), weyl_groupoid.is_groupoid_invariant(f)
        yield Check("groupoid", f"non-member #{k} (n={f.nvars}): invariant = in J_n",
                    not jn and not inv, f"J_n={jn} groupoid={inv}")
    for m in range(2, max(n, 2) + 1):
        ok = True
        for _ in range(40):
            length = rng.randint(1, 4)
            word = weyl_groupoid.random_word(m, length, rng)
            if not weyl_groupoid.same_realization(word, word.normalized(), m, rng=rng):
                ok = False
            for lhs, rhs in weyl_groupoid.relation_pairs(m, word.target, rng):
                if not weyl_groupoid.same_realization(word.then(lhs), word.then(rhs), m, rng=rng):
                    ok = False
        yield Check("groupoid", f"n={m} relations on sampled words of length <= 4", ok)


_RUNNERS = {
    "example": suite_example, "lift": suite_lift, "kernel": suite_kernel,
    "euler": suite_euler, "typical": suite_typical, "basis": suite_basis,
    "rings": suite_rings, "groupoid": suite_groupoid,
}


def run(suite="all", n=4, max_entry=3):
    names = SUITES if suite == "all" else (suite,)
    for name in names:
        yield from _RUNNERS[name](n=n, max_entry=max_entry)
