import pytest

from torsionverify.errors import NotIrreducible
from torsionverify.fields import FiniteField, find_special_constants, sqrt


def test_prime_field_arithmetic():
    F = FiniteField(13)
    assert F(7) * F(2) == 1
    assert F(3) ** 3 == 1
    assert F(5).inverse() == F(8)
    assert F(2) / F(4) == F(7)


def test_extension_field_is_a_field():
    for p, k in ((2, 2), (3, 2), (5, 2), (7, 2), (2, 3), (3, 3)):
        F = FiniteField(p, k)
        elems = list(F.elements())
        assert len(elems) == p**k
        assert len(set(elems)) == p**k
        for a in elems:
            if a:
                assert a * a.inverse() == 1
                assert a ** (F.order - 1) == 1


def test_reducible_modulus_rejected():
    with pytest.raises(NotIrreducible):
        FiniteField(5, 2, (1, 0, 1))  # x^2 + 1 = (x - 2)(x - 3) mod 5


def test_elements_index_round_trip():
    F = FiniteField(3, 2)
    assert [e.index() for e in F.elements()] == list(range(9))


def test_special_constants_f13():
    c = find_special_constants(FiniteField(13))
    assert int(c.omega) == 3 and int(c.sqrt3) == 4


def test_special_constants_absent():
    assert not find_special_constants(FiniteField(5)).has_omega
    assert not find_special_constants(FiniteField(7)).has_sqrt3
    # oracle: squares mod 7
    assert 3 not in {x * x % 7 for x in range(7)}


def test_special_constants_in_extension():
    F = FiniteField(7, 2)
    c = find_special_constants(F)
    assert c.has_omega and c.has_sqrt3
    assert c.sqrt3 * c.sqrt3 == 3


def test_pth_root_and_squares():
    F = FiniteField(5, 2)
    for a in F.elements():
        assert a.pth_root() ** 5 == a
    assert sum(1 for a in FiniteField(13).elements() if a and a.is_square()) == 6
    assert sqrt(FiniteField(13), 3) == 4
