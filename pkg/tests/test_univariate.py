import itertools
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from torsionverify.errors import ZeroDerivative
from torsionverify.fields import FiniteField
from torsionverify.poly import FractionField, PolyRing, RationalFunction
from torsionverify.univariate import (
    UniPoly,
    bareiss_det,
    discriminant,
    frobenius_coeff_power,
    poly_gcd,
    resultant,
    separable_radical,
)

F5, F7, F13 = FiniteField(5), FiniteField(7), FiniteField(13)
X = sympy.Symbol("x")


def to_sympy(f):
    return sympy.Poly([int(c) for c in reversed(f.coeffs)], X, modulus=f.domain.p)


def sympy_resultant(f, g):
    """Res(f, g) = lc(f)^deg g * prod g(roots of f), via sympy.

    sympy agrees with that convention when deg f >= deg g, so call it in that
    order and apply Res(f, g) = (-1)^(mn) Res(g, f) otherwise.
    """
    a, b = to_sympy(f).as_expr(), to_sympy(g).as_expr()
    if f.degree >= g.degree:
        return int(sympy.resultant(a, b, X))
    return (-1) ** (f.degree * g.degree) * int(sympy.resultant(b, a, X))


def roots_in(F, f):
    return [a for a in F.elements() if not f(a)]


def test_gcd_examples():
    x = UniPoly.x(F5)
    assert poly_gcd(x**2, x**3) == x**2
    f = UniPoly([2, 4], F5)
    assert poly_gcd(f, UniPoly([], F5)) == UniPoly([3, 1], F5)
    a = (x - 1) ** 2 * (x - 2)
    b = (x - 1) * (x - 3)
    # oracle: common roots over F_5 (both split with simple common root 1)
    assert [int(r) for r in roots_in(F5, a) if r in roots_in(F5, b)] == [1]
    assert poly_gcd(a, b) == x - 1


def test_resultant_examples():
    x = UniPoly.x(F7)
    # rows of f first: det [[1, -2], [1, -3]] = -1
    assert int(resultant(x - 2, x - 3)) == 6
    assert int(resultant(x - 2, x - 3)) == sympy_resultant(x - 2, x - 3) % 7
    # g evaluated at the root of f
    assert int(resultant(x - 2, x**3 + 1)) == 9 % 7
    f = x**2 + 1
    assert not resultant(f, f)
    y = UniPoly.x(F5)
    assert int(resultant(y**2 + 1, y**2 - 1)) == 4
    assert int(sympy.resultant(X**2 + 1, X**2 - 1)) % 5 == 4


def test_discriminant_examples():
    assert int(discriminant(UniPoly([1, 0, 1], F7))) == 3
    assert int(discriminant(UniPoly([1, 0, 0, 1], F5))) == 3
    with pytest.raises(ZeroDerivative):
        discriminant(UniPoly([1, 0, 0, 0, 0, 1], F5))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_discriminant_of_binomials(p):
    F = FiniteField(p)
    for n in range(2, 9):
        if n % p == 0:
            continue
        d = discriminant(UniPoly([1] + [0] * (n - 1) + [1], F))
        assert int(d) == (-1) ** (n * (n - 1) // 2) * n**n % p
        assert int(d) == int(sympy.discriminant(X**n + 1)) % p


def coeff_lists(p, max_deg=4):
    return st.lists(st.integers(0, p - 1), min_size=2, max_size=max_deg + 1).filter(lambda c: c[-1] != 0)


@settings(max_examples=150, deadline=None)
@given(coeff_lists(13), coeff_lists(13))
def test_resultant_vanishes_iff_common_factor(a, b):
    f, g = UniPoly(a, F13), UniPoly(b, F13)
    r = resultant(f, g)
    assert (not r) == (poly_gcd(f, g).degree > 0)
    assert int(r) == sympy_resultant(f, g) % 13


@settings(max_examples=80, deadline=None)
@given(coeff_lists(13, 5))
def test_discriminant_matches_sympy(a):
    f = UniPoly(a, F13)
    if f.degree < 2:
        return
    assert int(discriminant(f)) == int(sympy.discriminant(to_sympy(f).as_expr(), X)) % 13


def test_bareiss_against_permutation_expansion():
    rng = random.Random(3)
    ring = PolyRing(13, ("s", "t"))
    s, t = ring.gens()
    n = 4
    M = [[rng.randrange(13) * s ** rng.randrange(2) + rng.randrange(13) * t for _ in range(n)] for _ in range(n)]
    total = ring.zero
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = ring(sign)
        for i in range(n):
            term = term * M[i][perm[i]]
        total = total + term
    assert bareiss_det(M, ring) == total


def test_frobenius_twist_examples():
    ring = PolyRing(5, ("s", "t"))
    K = FractionField(ring)
    s, t = K.gen("s"), K.gen("t")
    assert frobenius_coeff_power(UniPoly([-s, 1], K)) == UniPoly([-(s**5), 1], K)
    f = UniPoly([2, 3, 1], F5)
    assert frobenius_coeff_power(f) == f
    g1, g2 = s * t + 1, s**2 - t
    lhs = frobenius_coeff_power(UniPoly([-g1, 1], K) * UniPoly([-g2, 1], K))
    assert lhs == UniPoly([-(g1**5), 1], K) * UniPoly([-(g2**5), 1], K)


@settings(max_examples=40, deadline=None)
@given(coeff_lists(5, 3), coeff_lists(5, 3))
def test_twist_is_multiplicative(a, b):
    ring = PolyRing(5, ("s",))
    K = FractionField(ring)
    s = K.gen("s")
    f = UniPoly([c * s + 1 for c in a], K)
    g = UniPoly([c * s**2 + c for c in b], K)
    assert frobenius_coeff_power(f * g) == frobenius_coeff_power(f) * frobenius_coeff_power(g)


def test_gcd_over_function_field():
    K = FractionField(PolyRing(7, ("s", "t")))
    s, t = K.gen("s"), K.gen("t")
    x = UniPoly.x(K)
    f = (x - s) * (x - t) * (x + s * t)
    g = (x - s) * (x + s * t) * (x - 1)
    assert poly_gcd(f, g) == (x - s) * (x + s * t)
    assert poly_gcd(f, f.derivative()) == UniPoly([1], K)


def test_separable_radical():
    x = UniPoly.x(F5)
    f = (x - 1) ** 3 * (x - 2) ** 5 * (x - 3) ** 6 * (x - 4)
    assert separable_radical(f) == (x - 1) * (x - 2) * (x - 3) * (x - 4)
    K = FractionField(PolyRing(5, ("S", "T")))
    S, T = K.gen("S"), K.gen("T")
    y = UniPoly.x(K)
    g = (y - S) ** 5 * (y - T) ** 2
    assert separable_radical(g) == (y - S) * (y - T)
