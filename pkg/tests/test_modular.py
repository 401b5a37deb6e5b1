from math import gcd

import pytest
from hypothesis import given, strategies as st

from torsionverify.errors import EmptyInput, MixedModulus, NonCoprimeModuli, NotAUnit
from torsionverify.modular import (
    ResidueInt,
    crt_combine,
    euler_phi,
    inverse_mod,
    is_prime,
    prime_factors,
    unit_group,
)


def test_canonical_representative():
    assert ResidueInt(-1, 7).value == 6
    assert ResidueInt(15, 7) == ResidueInt(1, 7)


def test_arithmetic_and_int_coercion():
    a = ResidueInt(5, 12)
    assert a + 9 == ResidueInt(2, 12)
    assert 3 - a == ResidueInt(10, 12)
    assert a * a == ResidueInt(1, 12)
    assert -a == ResidueInt(7, 12)
    assert a**-1 == a


def test_mixed_modulus_rejected():
    with pytest.raises(MixedModulus):
        ResidueInt(1, 5) + ResidueInt(1, 7)


def test_inverse():
    assert inverse_mod(ResidueInt(3, 7)) == ResidueInt(5, 7)
    with pytest.raises(NotAUnit):
        inverse_mod(ResidueInt(4, 6))
    assert inverse_mod(ResidueInt(0, 1)) == ResidueInt(0, 1)


def test_crt_examples():
    assert crt_combine([ResidueInt(2, 3), ResidueInt(3, 5)]) == ResidueInt(8, 15)
    assert crt_combine([ResidueInt(0, 1), ResidueInt(4, 9)]) == ResidueInt(4, 9)
    with pytest.raises(NonCoprimeModuli):
        crt_combine([ResidueInt(1, 4), ResidueInt(1, 6)])
    with pytest.raises(EmptyInput):
        crt_combine([])


@given(st.integers(-10**6, 10**6), st.integers(1, 60), st.integers(1, 60))
def test_crt_round_trip(x, m, n):
    if gcd(m, n) != 1:
        return
    r = crt_combine([ResidueInt(x, m), ResidueInt(x, n)])
    assert r == ResidueInt(x, m * n)
    assert r.value % m == x % m and r.value % n == x % n


@given(st.integers(1, 200))
def test_unit_group_size_is_phi(n):
    units = unit_group(n)
    assert len(units) == euler_phi(n)
    # oracle: direct gcd count
    assert len(units) == sum(1 for a in range(n) if gcd(a, n) == 1) or n == 1


def test_unit_group_of_one():
    assert unit_group(1) == [ResidueInt(0, 1)]


def test_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_factors(360) == [2, 3, 5]
    assert prime_factors(1) == []
