import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from torsionverify import valuation as va
from torsionverify.division import coefficient_ring
from torsionverify.errors import BadJInvariant, PreconditionViolated
from torsionverify.fields import FiniteField
from torsionverify.poly import FractionField, PolyRing, RationalFunction
from torsionverify.univariate import UniPoly

R13 = coefficient_ring(13)
H = va.ss_prime_poly(13, 5)
V_H = va.ValuationSpec("h-adic", H)
V_U = va.u_adic(13)


def test_examples():
    s, t = R13.gens()
    assert va.valuate(V_H, 4 * s**3 + 27 * t**2) == 0
    K = FractionField(V_U.prime.ring)
    u = K.gen("u")
    assert va.valuate(V_U, u**3 / (u - 1)) == 3
    assert va.valuate(V_U, K.zero) == math.inf
    assert va.valuate(V_U, 7) == 0


def test_hard_case_by_parametrisation():
    # t^2 = 3 s^3 is parametrised by s = 3w^2, t = 9w^3; 4s^3 + 27t^2 does not vanish on it
    w = PolyRing(13, ("w",)).gen("w")
    s, t = R13.gens()
    assert (t**2 - 3 * s**3).substitute({"s": 3 * w**2, "t": 9 * w**3}) == 0
    assert (4 * s**3 + 27 * t**2).substitute({"s": 3 * w**2, "t": 9 * w**3}) != 0


def test_ss_prime_poly():
    s, t = R13.gens()
    assert H == t**2 - 3 * s**3
    # oracle: the printed formula evaluated with modular fractions
    inv = lambda a: pow(a, -1, 13)
    r = 5 * inv(1728)
    c_s, c_t = (1 - r) % 13, (-r * 27 * inv(4)) % 13
    assert c_s * inv(c_t) % 13 == (-3) % 13
    with pytest.raises(BadJInvariant):
        va.ss_prime_poly(13, 0)
    with pytest.raises(BadJInvariant):
        va.ss_prime_poly(5, 5)
    with pytest.raises(BadJInvariant):
        va.ss_prime_poly(13, 4)  # not supersingular


def test_pi_adic_requires_irreducible():
    ring = PolyRing(5, ("u",))
    u = ring.gen("u")
    va.ValuationSpec("pi-adic", u**2 + 2)  # 2 is not a square mod 5... -2 = 3 is not either
    with pytest.raises(va.NotIrreducible):
        va.ValuationSpec("pi-adic", u**2 - 1)


def random_fraction(spec, rng):
    ring = spec.prime.ring
    p = ring.p

    def poly():
        f = ring.zero
        for _ in range(rng.randint(1, 3)):
            term = ring(rng.randrange(1, p))
            for v in ring.vars:
                term = term * ring.gen(v) ** rng.randint(0, 2)
            f = f + term
        return f if f else ring.one

    k = rng.randint(-2, 2)
    num, den = poly(), poly()
    if k >= 0:
        return RationalFunction(num * spec.prime**k, den)
    return RationalFunction(num, den * spec.prime ** (-k))


def u_order_oracle(f):
    """Lowest power of u present; independent of exact division."""
    return min(e[0] for e in f.exponents()) if f else math.inf


@pytest.mark.parametrize("spec", [V_U, V_H], ids=["u-adic", "h-adic"])
@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_valuation_axioms(spec, seed):
    rng = random.Random(seed)
    a, b = random_fraction(spec, rng), random_fraction(spec, rng)
    v = lambda g: va.valuate(spec, g)
    assert v(a * b) == v(a) + v(b)
    assert v(a + b) >= min(v(a), v(b))
    if v(a) != v(b):
        assert v(a + b) == min(v(a), v(b))
    assert v(spec.prime.ring(rng.randrange(1, 13))) == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_u_adic_matches_lowest_exponent(seed):
    rng = random.Random(seed)
    g = random_fraction(V_U, rng)
    assert va.valuate(V_U, g) == u_order_oracle(g.num) - u_order_oracle(g.den)


def euclid_resultant(f, g):
    """Res(f, g) by the Euclidean recursion Res(f, g) = (-1)^(mn) lc(g)^(m - deg r) Res(g, r)."""
    m, n = f.degree, g.degree
    if n == 0:
        return g.lc**m
    r = f % g
    if not r:
        return f.domain.zero
    sign = -1 if (m * n) % 2 else 1
    return sign * g.lc ** (m - r.degree) * euclid_resultant(g, r)


def oracle_disc(f):
    n = f.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * euclid_resultant(f, f.derivative()) / f.lc


def test_disc_lemma_examples():
    v = va.u_adic(5)
    K = FractionField(v.prime.ring)
    u = K.gen("u")
    rep = va.disc_lemma_check(UniPoly([u.inverse(), u, 1], K), v)
    assert rep.hypotheses_hold and rep.conclusion_holds and rep.disc_valuation == -1
    rep = va.disc_lemma_check(UniPoly([1, 0, 0, 1], K), v)
    assert rep.hypotheses_hold and rep.conclusion_holds and rep.disc_valuation == 0
    # hypothesis violated: v(c_1) = 0 is not > v(c_2)/2 = 0
    rep = va.disc_lemma_check(UniPoly([1, 1, 1], K), v)
    assert not rep.hypotheses_hold
    with pytest.raises(PreconditionViolated):
        va.disc_lemma_check(UniPoly([1, 0, 0, 0, 0, 1], K), v)


@pytest.mark.parametrize("seed", range(100))
def test_disc_lemma_random(seed):
    rng = random.Random(seed)
    p = rng.choice([5, 13])
    n = rng.choice([k for k in range(2, 6) if k % p])
    f = va.random_lemma_instance(p, n, rng)
    v = va.u_adic(p)
    rep = va.disc_lemma_check(f, v)
    assert rep.hypotheses_hold
    assert rep.conclusion_holds
    assert va.valuate(v, oracle_disc(f)) == rep.disc_valuation


def coset_oracle(p, l):
    """Classify by discrete log with respect to a primitive root; count pairs by hand."""
    g = next(a for a in range(2, p) if len({pow(a, k, p) for k in range(p - 1)}) == p - 1)
    log = {pow(g, k, p): k for k in range(p - 1)}
    total = hyp = nonpow = 0
    for b1 in range(1, p):
        for b2 in range(1, p):
            total += 1
            c1, c2 = log[b1] % l, log[b2] % l
            if (c1 == 0) == (c2 == 0):
                hyp += 1
                nonpow += c1 != 0
                assert (c1 + c2) % l == 0 or (c2 - c1) % l == 0
    return total, hyp, nonpow


@pytest.mark.parametrize("l", [2, 3])
def test_kummer(l):
    rep = va.kummer_pair_check(FiniteField(13), l)
    assert rep.passed
    assert (rep.total_pairs, rep.hypothesis_pairs, rep.nonpower_pairs) == coset_oracle(13, l)


def test_kummer_counts_f13():
    # frozen from coset_oracle: cubes mod 13 are {1, 5, 8, 12}
    assert {pow(a, 3, 13) for a in range(1, 13)} == {1, 5, 8, 12}
    rep = va.kummer_pair_check(FiniteField(13), 3)
    assert (rep.total_pairs, rep.hypothesis_pairs, rep.nonpower_pairs) == (144, 80, 64)


def test_kummer_preconditions():
    with pytest.raises(PreconditionViolated):
        va.kummer_pair_check(FiniteField(5), 3)
    with pytest.raises(PreconditionViolated):
        va.kummer_pair_check(FiniteField(3), 3)


def test_exploratory_report():
    rep = va.ik24_exploratory_report(13)
    assert rep.j0 == 5
    assert len(rep.rows) == 8
    assert rep.rows[0].observed == "0"
    empty = va.ik24_exploratory_report(5)
    assert empty.rows == [] and empty.reason
