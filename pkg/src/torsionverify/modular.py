"""Residue arithmetic in Z/MZ, CRT, unit groups and small number-theory helpers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .errors import EmptyInput, MixedModulus, NonCoprimeModuli, NotAUnit

# Value-group comparisons (v(c_i) > (i/n) v(c_n)) are done with exact fractions.
RationalNumber = Fraction


@dataclass(frozen=True)
class ResidueInt:
    """An element of Z/MZ stored by its canonical representative."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _check(self, other) -> int:
        if isinstance(other, ResidueInt):
            if other.modulus != self.modulus:
                raise MixedModulus(f"{self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return ResidueInt(self.value + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return ResidueInt(self.value - o, self.modulus)

    def __rsub__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return ResidueInt(o - self.value, self.modulus)

    def __mul__(self, other):
        o = self._check(other)
        if o is NotImplemented:
            return o
        return ResidueInt(self.value * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ResidueInt(-self.value, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return inverse_mod(self) ** (-e)
        return ResidueInt(pow(self.value, e, self.modulus), self.modulus)

    def is_unit(self) -> bool:
        return gcd(self.value, self.modulus) == 1

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} mod {self.modulus}"


def inverse_mod(a: ResidueInt) -> ResidueInt:
    if gcd(a.value, a.modulus) != 1:
        raise NotAUnit(repr(a))
    if a.modulus == 1:
        return ResidueInt(0, 1)
    return ResidueInt(pow(a.value, -1, a.modulus), a.modulus)


def crt_combine(parts: list[ResidueInt]) -> ResidueInt:
    """Glue residues with pairwise coprime moduli into one residue mod the product."""
    if not parts:
        raise EmptyInput("crt_combine needs at least one residue")
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            if gcd(a.modulus, b.modulus) != 1:
                raise NonCoprimeModuli(f"gcd({a.modulus}, {b.modulus}) > 1")
    value, modulus = 0, 1
    for part in parts:
        # value + modulus*k ≡ part.value (mod part.modulus)
        if part.modulus == 1:
            continue
        k = (part.value - value) * pow(modulus, -1, part.modulus) % part.modulus
        value += modulus * k
        modulus *= part.modulus
    return ResidueInt(value, prod(p.modulus for p in parts))


def unit_group(modulus: int) -> list[ResidueInt]:
    """Residues coprime to ``modulus`` in ascending order; Z/1Z contributes its single element 0."""
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    if modulus == 1:
        return [ResidueInt(0, 1)]
    return [ResidueInt(a, modulus) for a in range(modulus) if gcd(a, modulus) == 1]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def euler_phi(n: int) -> int:
    result = n
    for q in prime_factors(n):
        result = result // q * (q - 1)
    return result
