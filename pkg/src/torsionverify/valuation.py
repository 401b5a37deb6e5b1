"""Discrete valuations at an irreducible polynomial, and the checks built on them."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .division import (
    coefficient_ring,
    is_supersingular_j,
    mu_discriminant,
    supersingular_j_list,
    theta_extract,
)
from .errors import BadJInvariant, NotDivisible, NotIrreducible, PreconditionViolated
from .fields import FiniteField
from .poly import FractionField, MultiPoly, PolyRing, RationalFunction, exact_divide
from .univariate import UniPoly, discriminant

# v(0); compares above every int and absorbs addition
INFINITY = math.inf


@dataclass(frozen=True)
class ValuationSpec:
    """Order of vanishing at ``prime``; kind is "h-adic" (F_p[s,t]) or "pi-adic" (F_p[u])."""

    kind: str
    prime: MultiPoly

    def __post_init__(self):
        if self.kind not in ("h-adic", "pi-adic"):
            raise ValueError(f"unknown valuation kind {self.kind!r}")
        if self.prime.is_constant():
            raise NotIrreducible("a constant is not a prime element")
        if self.kind == "pi-adic":
            _check_univariate_irreducible(self.prime)


def _check_univariate_irreducible(f: MultiPoly):
    ring = f.ring
    if ring.nvars != 1:
        raise ValueError("pi-adic valuations live on a one-variable ring")
    d = f.degree()
    if d > 3:
        raise NotIrreducible(f"cannot certify irreducibility of degree {d} > 3")
    if d == 1:
        return
    var = ring.vars[0]
    for r in range(ring.p):
        if f.substitute({var: r}) == 0:
            raise NotIrreducible(f"{f} has the root {r}")


def u_adic(p: int, var: str = "u") -> ValuationSpec:
    ring = PolyRing(p, (var,))
    return ValuationSpec("pi-adic", ring.gen(var))


def poly_order(prime: MultiPoly, f: MultiPoly):
    if not f:
        return INFINITY
    k = 0
    while True:
        try:
            f = exact_divide(f, prime)
        except NotDivisible:
            return k
        k += 1


def valuate(v: ValuationSpec, g) -> int | float:
    """v(num) - v(den); INFINITY for zero."""
    if isinstance(g, int):
        g = v.prime.ring(g)
    if isinstance(g, MultiPoly):
        return poly_order(v.prime, g)
    if not g.num:
        return INFINITY
    return poly_order(v.prime, g.num) - poly_order(v.prime, g.den)


def ss_prime_poly(p: int, j0: int) -> MultiPoly:
    """h = s^3 - (j0/1728)(s^3 + 27 t^2 / 4), scaled to be monic in t."""
    j0 %= p
    if j0 in (0, 1728 % p):
        raise BadJInvariant(f"j0 = {j0} is 0 or 1728 mod {p}")
    if not is_supersingular_j(p, j0):
        raise BadJInvariant(f"j0 = {j0} is not supersingular mod {p}")
    R = coefficient_ring(p)
    s, t = R.gens()
    r = j0 * pow(1728, -1, p) % p
    c_s = (1 - r) % p
    c_t = (-r * 27 * pow(4, -1, p)) % p
    # c_s s^3 + c_t t^2 is irreducible iff both are nonzero: -c_s/c_t * s^3 has odd degree, so no square
    if not c_s or not c_t:
        raise BadJInvariant(f"h degenerates for j0 = {j0} mod {p}")
    inv = pow(c_t, -1, p)
    return t**2 + (c_s * inv % p) * s**3


@dataclass
class DiscLemmaReport:
    n: int
    hypotheses_hold: bool
    conclusion_holds: bool
    coeff_valuations: list
    disc_valuation: int | float
    expected: int | float


def disc_lemma_check(f: UniPoly, v: ValuationSpec) -> DiscLemmaReport:
    """Test v(c_i) > (i/n) v(c_n) for 0 < i < n, and v(Disc f) = (n-1) v(c_n)."""
    n = f.degree
    if n < 2:
        raise PreconditionViolated("degree must be at least 2")
    if f.lc != 1:
        raise PreconditionViolated("f must be monic")
    if n % f.domain.characteristic == 0:
        raise PreconditionViolated(f"v(n) must be 0, but p divides n={n}")
    # c_i is the coefficient of x^(n-i)
    vals = [valuate(v, f[n - i]) for i in range(n + 1)]
    vn = vals[n]
    hyp = True
    for i in range(1, n):
        vi = vals[i]
        if vi == INFINITY:
            continue
        if vn == INFINITY or not Fraction(vi) > Fraction(i, n) * vn:
            hyp = False
    vd = valuate(v, discriminant(f))
    expected = (n - 1) * vn
    return DiscLemmaReport(n, hyp, vd == expected, vals, vd, expected)


def _u_power(K: FractionField, e: int) -> RationalFunction:
    u = K.ring.gen(K.ring.vars[0])
    if e >= 0:
        return RationalFunction(u**e)
    return RationalFunction(K.ring.one, u ** (-e))


def random_lemma_instance(p: int, n: int, rng: random.Random, var: str = "u") -> UniPoly:
    """Monic f = x^n + sum c_i x^(n-i), c_i = u^(e_i) (1 + u r_i(u)), with e_i > i e_n / n."""
    K = FractionField(PolyRing(p, (var,)))
    u = K.ring.gen(var)

    def unit_part():
        r = K.ring.zero
        for k in range(rng.randint(0, 2) + 1):
            r = r + rng.randrange(p) * u**k
        return RationalFunction(K.ring.one + u * r)

    e_n = rng.randint(-3, 3)
    coeffs = [None] * (n + 1)
    coeffs[n] = _u_power(K, e_n) * unit_part()
    for i in range(1, n):
        if rng.random() < 0.15:
            coeffs[i] = K.zero
            continue
        lo = math.floor(Fraction(i * e_n, n)) + 1
        e_i = lo + rng.randint(0, 2)
        coeffs[i] = _u_power(K, e_i) * unit_part() * rng.randrange(1, p)
    # coefficient of x^k is c_(n-k)
    return UniPoly([coeffs[n - k] if k < n else K.one for k in range(n + 1)], K, "x")


@dataclass
class KummerReport:
    field_order: int
    l: int
    total_pairs: int
    hypothesis_pairs: int
    nonpower_pairs: int
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def kummer_pair_check(F: FiniteField, l: int) -> KummerReport:
    """Over a finite field, beta_1 and beta_2 give the same degree-l Kummer extension iff
    both are l-th powers or both are not; then beta_1^eps * beta_2 should be an l-th power
    for some eps in {1, -1}."""
    if l not in (2, 3):
        raise ValueError("l must be 2 or 3")
    if F.characteristic == l:
        raise PreconditionViolated("characteristic equals l")
    q = F.order
    if l == 3 and (q - 1) % 3:
        raise PreconditionViolated("F has no primitive cube root of unity")
    nonzero = [x for x in F.elements() if x]
    powers = {(x**l).coeffs for x in nonzero}

    def is_power(b):
        return b.coeffs in powers

    total = hyp = nonpow = 0
    failures = []
    for b1 in nonzero:
        for b2 in nonzero:
            total += 1
            p1, p2 = is_power(b1), is_power(b2)
            if p1 != p2:
                continue
            hyp += 1
            if not p1:
                nonpow += 1
            if not (is_power(b1 * b2) or is_power(b1.inverse() * b2)):
                failures.append((b1, b2))
    return KummerReport(q, l, total, hyp, nonpow, failures)


@dataclass
class ExploratoryRow:
    label: str
    expected: str
    observed: str


@dataclass
class ExploratoryReport:
    p: int
    j0: int | None
    rows: list
    reason: str = ""


def ik24_exploratory_report(p: int, j0: int | None = None) -> ExploratoryReport:
    """h-adic valuations of theta's coefficient ratios and of mu, next to the values the
    imported valuation is expected to give. Purely informational."""
    candidates = [j for j in supersingular_j_list(p) if j not in (0, 1728 % p)]
    if j0 is None:
        if not candidates:
            return ExploratoryReport(p, None, [], f"no supersingular j outside {{0, 1728}} mod {p}")
        j0 = candidates[0]
    h = ss_prime_poly(p, j0)
    v = ValuationSpec("h-adic", h)
    theta = theta_extract(p)
    half = (p - 1) // 2
    a = theta.leading
    rows = []
    for i in range(half + 1):
        k = half + p * i
        ratio = RationalFunction(theta.coefficients[k], a) if theta.coefficients[k] else None
        observed = INFINITY if ratio is None else valuate(v, ratio)
        if i == 0:
            exp = "0"
        elif k == (p * p - 1) // 2:
            exp = "-1"
        else:
            exp = "-"
        rows.append(ExploratoryRow(f"v(a_{k}/a_{half})", exp, _fmt(observed)))
    if p % 4 == 1:
        mu = mu_discriminant(p, theta)
        rows.append(ExploratoryRow("v(mu)", str(-((p - 3) // 2)), _fmt(valuate(v, mu))))
    return ExploratoryReport(p, j0, rows)


def _fmt(x) -> str:
    return "inf" if x == INFINITY else str(x)
