"""Finite fields F_p and small extensions F_{p^k}, k <= 3."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import NotIrreducible
from .modular import is_prime

MAX_EXTENSION_DEGREE = 3


def _poly_mulmod(a, b, modulus, p):
    """Multiply coefficient tuples (ascending) modulo a monic modulus polynomial."""
    k = len(modulus) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg] % p
        if c:
            for j in range(k):
                prod[deg - k + j] -= c * modulus[j]
        prod[deg] = 0
    return tuple(v % p for v in prod[:k])


def _has_root(modulus, p) -> bool:
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(modulus)) % p == 0:
            return True
    return False


@dataclass(frozen=True)
class FiniteField:
    """F_{p^k} as F_p[w]/(modulus(w)); ``modulus`` is monic, ascending coefficients."""

    p: int
    k: int = 1
    modulus: tuple = ()

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if not 1 <= self.k <= MAX_EXTENSION_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_EXTENSION_DEGREE}")
        if self.k == 1:
            object.__setattr__(self, "modulus", (0, 1))
            return
        mod = tuple(c % self.p for c in self.modulus) if self.modulus else self._search_modulus()
        if len(mod) != self.k + 1 or mod[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        # degree <= 3: irreducible iff no root in F_p
        if _has_root(mod, self.p):
            raise NotIrreducible(f"{mod} has a root mod {self.p}")
        object.__setattr__(self, "modulus", mod)

    def _search_modulus(self) -> tuple:
        for low in itertools.product(range(self.p), repeat=self.k):
            cand = tuple(low) + (1,)
            if not _has_root(cand, self.p):
                return cand
        raise NotIrreducible("no irreducible modulus found")

    # domain protocol
    is_field = True

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def zero(self) -> "FFElem":
        return FFElem(self, (0,) * self.k)

    @property
    def one(self) -> "FFElem":
        return FFElem(self, (1,) + (0,) * (self.k - 1))

    def gen(self) -> "FFElem":
        """The class of w in F_p[w]/(modulus)."""
        if self.k == 1:
            return self.one
        return FFElem(self, (0, 1) + (0,) * (self.k - 2))

    def __call__(self, value) -> "FFElem":
        if isinstance(value, FFElem):
            if value.field != self:
                raise ValueError("element of a different field")
            return value
        if isinstance(value, (tuple, list)):
            coeffs = tuple(int(c) % self.p for c in value) + (0,) * (self.k - len(value))
            return FFElem(self, coeffs[: self.k])
        return FFElem(self, (int(value) % self.p,) + (0,) * (self.k - 1))

    def elements(self) -> Iterator["FFElem"]:
        """All elements; index n has base-p digits of n as coefficients (low degree first)."""
        for n in range(self.order):
            digits = []
            for _ in range(self.k):
                n, r = divmod(n, self.p)
                digits.append(r)
            yield FFElem(self, tuple(digits))

    def exact_div(self, a, b):
        return a / b

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"


class FFElem:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, FFElem):
            if other.field is not self.field and other.field != self.field:
                raise ValueError("mixed fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FFElem(self.field, tuple((x + y) % p for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElem(self.field, tuple((-x) % p for x in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        F = self.field
        if F.k == 1:
            return FFElem(F, (self.coeffs[0] * o.coeffs[0] % F.p,))
        return FFElem(F, _poly_mulmod(self.coeffs, o.coeffs, F.modulus, F.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FFElem":
        if not self:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.p, self.coeffs))

    def __int__(self):
        if any(self.coeffs[1:]):
            raise ValueError(f"{self} is not in the prime field")
        return self.coeffs[0]

    def index(self) -> int:
        """Position in FiniteField.elements()."""
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def is_square(self) -> bool:
        return not self or self ** ((self.field.order - 1) // 2) == 1

    def pth_root(self) -> "FFElem":
        """Inverse Frobenius: x^(p^(k-1))."""
        return self ** (self.field.p ** (self.field.k - 1))

    def __repr__(self):
        if self.field.k == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if i == 0 else (f"{c}*w" if i == 1 else f"{c}*w^{i}"))
        return " + ".join(terms) or "0"


def find_root(field: FiniteField, predicate) -> FFElem | None:
    """First element (in canonical order) satisfying predicate."""
    for x in field.elements():
        if predicate(x):
            return x
    return None


def sqrt(field: FiniteField, a) -> FFElem | None:
    a = field(a)
    return find_root(field, lambda x: x * x == a)


@dataclass
class SpecialConstants:
    omega: FFElem | None
    sqrt3: FFElem | None

    @property
    def has_omega(self) -> bool:
        return self.omega is not None

    @property
    def has_sqrt3(self) -> bool:
        return self.sqrt3 is not None


def find_special_constants(F: FiniteField) -> SpecialConstants:
    """A primitive cube root of unity and a square root of 3, by exhaustive scan."""
    omega = find_root(F, lambda x: x != 1 and x * x * x == 1)
    return SpecialConstants(omega, sqrt(F, 3))
