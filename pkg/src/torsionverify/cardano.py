"""Cardano's formula in characteristic >= 5, checked in the ring K[z]/(z^3 - beta)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import BetaZero, DiscriminantNotSquare, PreconditionViolated
from .fields import FFElem, FiniteField, find_special_constants, sqrt
from .poly import FractionField, PolyRing, RationalFunction
from .univariate import UniPoly
from .valuation import INFINITY, ValuationSpec, valuate


def domain_of(c):
    if isinstance(c, FFElem):
        return c.field
    if isinstance(c, RationalFunction):
        return c.domain
    raise TypeError(f"no coefficient domain for {c!r}")


@dataclass
class DepressedCubic:
    A: object
    B: object
    c1: object
    c2: object
    c3: object


def depress(c1, c2, c3) -> DepressedCubic:
    """x^3 + c1 x^2 + c2 x + c3 shifted by x -> x - c1/3 becomes x^3 + A x + B."""
    K = domain_of(next(c for c in (c1, c2, c3) if not isinstance(c, int)))
    c1, c2, c3 = K(c1), K(c2), K(c3)
    if K.characteristic in (2, 3):
        raise PreconditionViolated("characteristic must be at least 5")
    A = (3 * c2 - c1 * c1) / K(3)
    B = (2 * c1**3 - 9 * c1 * c2 + 27 * c3) / K(27)
    f = UniPoly([c3, c2, c1, 1], K)
    shifted = f(UniPoly([-c1 / K(3), 1], K))
    if shifted != UniPoly([B, A, 0, 1], K):
        raise AssertionError("depression identity failed")
    return DepressedCubic(A, B, c1, c2, c3)


def cardano_discriminant(dc: DepressedCubic):
    """4A^3 + 27B^2 (the negative of the classical discriminant of x^3 + Ax + B)."""
    return 4 * dc.A**3 + 27 * dc.B**2


@dataclass
class CardanoData:
    R: object
    beta_plus: object
    beta_minus: object

    def nonzero_beta(self):
        if self.beta_plus:
            return self.beta_plus
        if self.beta_minus:
            return self.beta_minus
        raise BetaZero("both branches vanish")


def cardano_beta(dc: DepressedCubic, sqrt3, R=None) -> CardanoData:
    """beta_pm = -B/2 +- R/(6 sqrt3) with R^2 = 4A^3 + 27B^2.

    Over a finite field R is found by scanning when not given; over function
    fields the caller supplies it.
    """
    K = domain_of(dc.A)
    D = cardano_discriminant(dc)
    if R is None:
        if not isinstance(K, FiniteField):
            raise DiscriminantNotSquare("a square-root witness is required over function fields")
        R = sqrt(K, D)
        if R is None:
            raise DiscriminantNotSquare(f"{D} is not a square in {K}")
    R = K(R)
    if R * R != D:
        raise DiscriminantNotSquare(f"witness {R} does not square to {D}")
    s3 = K(sqrt3)
    if s3 * s3 != K(3):
        raise ValueError(f"{sqrt3} is not a square root of 3")
    half_B = dc.B / K(2)
    shift = R / (K(6) * s3)
    return CardanoData(R, -half_B + shift, -half_B - shift)


def _qmul(a, b, beta, zero):
    """Multiply a0 + a1 z + a2 z^2 by b0 + ... modulo z^3 = beta."""
    out = [zero] * 5
    for i in range(3):
        for j in range(3):
            out[i + j] = out[i + j] + a[i] * b[j]
    return [out[0] + beta * out[3], out[1] + beta * out[4], out[2]]


def _qadd(a, b):
    return [x + y for x, y in zip(a, b)]


def _cubic_at(coeffs, r, beta, zero, one):
    """Evaluate x^3 + c1 x^2 + c2 x + c3 at r in K[z]/(z^3 - beta)."""
    c1, c2, c3 = coeffs
    acc = [one, zero, zero]
    for c in (c1, c2, c3):
        acc = _qadd(_qmul(acc, r, beta, zero), [c, zero, zero])
    return acc


@dataclass
class RootIdentityReport:
    minus_sign: bool
    plus_sign: bool
    per_root: list

    @property
    def ok(self) -> bool:
        return self.minus_sign


def root_identity_check(c1, c2, c3, beta, omega) -> RootIdentityReport:
    """Check f(-c1/3 + w^i z - A/(3 w^i z)) = 0 in K[z]/(z^3 - beta), i = 0, 1, 2, using 1/z = z^2/beta.

    The variant with +c1/3 is evaluated as well and recorded.
    """
    dc = depress(c1, c2, c3)
    K = domain_of(dc.A)
    beta = K(beta)
    if not beta:
        raise BetaZero("beta must be nonzero")
    omega = K(omega)
    if omega == 1 or omega**3 != 1:
        raise ValueError(f"{omega} is not a primitive cube root of unity")
    zero, one = K.zero, K.one
    third = one / K(3)
    per_root = []
    minus_ok = plus_ok = True
    for i in range(3):
        w = omega**i
        # w z - (A/3) w^-1 z^2 / beta
        core = [zero, w, -(dc.A * third) / (w * beta)]
        for sign, label in ((-1, "minus"), (1, "plus")):
            r = [core[0] + sign * dc.c1 * third, core[1], core[2]]
            val = _cubic_at((dc.c1, dc.c2, dc.c3), r, beta, zero, one)
            zero_val = all(not v for v in val)
            if label == "minus":
                minus_ok &= zero_val
                per_root.append(zero_val)
            else:
                plus_ok &= zero_val
    return RootIdentityReport(minus_ok, plus_ok, per_root)


def random_cyclic_cubic(F: FiniteField, rng: random.Random, max_tries: int = 1000):
    """Random (c1, c2, c3) over F with 4A^3 + 27B^2 a square and some beta nonzero."""
    consts = None
    for _ in range(max_tries):
        c1, c2, c3 = (F(rng.randrange(F.order)) for _ in range(3))
        dc = depress(c1, c2, c3)
        D = cardano_discriminant(dc)
        if not D.is_square():
            continue
        if consts is None:
            consts = find_special_constants(F)
        data = cardano_beta(dc, consts.sqrt3)
        if data.beta_plus or data.beta_minus:
            return (c1, c2, c3), dc, data
    raise RuntimeError("no suitable cubic found")


@dataclass
class CubicValuationReport:
    hypotheses_hold: bool
    v_c1: object
    v_c2: object
    v_c3: object
    v_R: object = None
    v_B: object = None
    v_beta_plus: object = None
    v_beta_minus: object = None
    conclusion_holds: bool = False


def cubic_valuation_check(c1, c2, c3, v: ValuationSpec, R, sqrt3) -> CubicValuationReport:
    """Under v(c1) > v(c3)/3 and v(c2) > 2 v(c3)/3: v(R) = v(B) = v(c3) and some beta has v(beta) = v(c3)."""
    vc = [valuate(v, c) for c in (c1, c2, c3)]
    v1, v2, v3 = vc
    if v3 == INFINITY:
        return CubicValuationReport(False, v1, v2, v3)
    hyp = (v1 == INFINITY or Fraction(v1) > Fraction(v3, 3)) and (
        v2 == INFINITY or Fraction(v2) > Fraction(2 * v3, 3)
    )
    if not hyp:
        return CubicValuationReport(False, v1, v2, v3)
    dc = depress(c1, c2, c3)
    data = cardano_beta(dc, sqrt3, R)
    vR, vB = valuate(v, data.R), valuate(v, dc.B)
    vp, vm = valuate(v, data.beta_plus), valuate(v, data.beta_minus)
    ok = vR == v3 and vB == v3 and v3 in (vp, vm)
    return CubicValuationReport(True, v1, v2, v3, vR, vB, vp, vm, ok)


def valued_cubic_instance(p: int, rng: random.Random, family: int, omega: int, sqrt_m1: int):
    """Cubic over F_p(u) together with a square root R of 4A^3 + 27B^2.

    family 1: roots u^k (w^i + u g_i(u)) so R = sqrt(-1) * prod_{i<j} (r_i - r_j).
    family 2: c1 = c2 = 0, c3 = u^k * unit, R = sqrt(27) * c3 (needs 27 to be a square).
    """
    K = FractionField(PolyRing(p, ("u",)))
    u = K.gen("u")
    k = rng.randint(-2, 2)
    uk = u**k
    if family == 1:
        roots = []
        for i in range(3):
            g = K(rng.randrange(p)) + K(rng.randrange(p)) * u
            roots.append(uk * (K(pow(omega, i, p)) + u * g))
        r0, r1, r2 = roots
        c1 = -(r0 + r1 + r2)
        c2 = r0 * r1 + r0 * r2 + r1 * r2
        c3 = -(r0 * r1 * r2)
        R = K(sqrt_m1) * (r0 - r1) * (r0 - r2) * (r1 - r2)
        return (c1, c2, c3), R
    root27 = next((r for r in range(p) if r * r % p == 27 % p), None)
    if root27 is None:
        raise PreconditionViolated(f"27 is not a square mod {p}")
    c3 = uk * (K(1) + K(rng.randrange(p)) * u) * K(rng.randrange(1, p))
    return (K.zero, K.zero, c3), K(root27) * c3
