"""Division polynomials of y^2 = x^3 + s x + t over F_p[s,t], theta, and related checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    BoundExceeded,
    PreconditionViolated,
    RadicalDegreeMismatch,
    TwistMismatch,
    ZeroDiscriminant,
    ZeroLeadingCoefficient,
)
from .fields import FiniteField
from .modular import is_prime
from .poly import FractionField, MultiPoly, PolyRing, RationalFunction
from .symmetric import symmetric_reduce
from .univariate import UniPoly, discriminant, frobenius_coeff_power, separable_radical

DESK_MAX_M = 13


def curve_ring(p: int) -> PolyRing:
    return PolyRing(p, ("s", "t", "x"))


def coefficient_ring(p: int) -> PolyRing:
    return PolyRing(p, ("s", "t"))


def weierstrass_rhs(ring: PolyRing) -> MultiPoly:
    s, t, x = (ring.gen(v) for v in ("s", "t", "x"))
    return x**3 + s * x + t


class _YPoly:
    """P * y^k with y^2 = x^3 + s x + t left unexpanded until normalise()."""

    __slots__ = ("poly", "k")

    def __init__(self, poly: MultiPoly, k: int):
        self.poly = poly
        self.k = k

    def __mul__(self, other):
        return _YPoly(self.poly * other.poly, self.k + other.k)

    def __pow__(self, e):
        return _YPoly(self.poly**e, self.k * e)

    def _align(self, other, rhs):
        if (self.k - other.k) % 2:
            raise ValueError("adding terms of different y-parity")
        a, b = self.poly, other.poly
        if self.k > other.k:
            a = a * rhs ** ((self.k - other.k) // 2)
        elif other.k > self.k:
            b = b * rhs ** ((other.k - self.k) // 2)
        return a, b, min(self.k, other.k)

    def sub(self, other, rhs):
        a, b, k = self._align(other, rhs)
        return _YPoly(a - b, k)

    def normalise(self, rhs) -> "_YPoly":
        return _YPoly(self.poly * rhs ** (self.k // 2), self.k % 2)


@dataclass
class DivisionPolySet:
    """psi_m for 0 <= m <= m_max; psi[m] = poly[m] * y**y_flag[m], y_flag = 1 exactly for even m."""

    p: int
    ring: PolyRing
    poly: dict = field(default_factory=dict)
    y_flag: dict = field(default_factory=dict)

    @property
    def m_max(self) -> int:
        return max(self.poly)

    def __getitem__(self, m: int) -> MultiPoly:
        return self.poly[m]

    def x_degree(self, m: int) -> int:
        return self.poly[m].degree("x")


def division_polynomials(p: int, m_max: int) -> DivisionPolySet:
    """The standard recurrences, with even-index members carrying one factor of y."""
    if not is_prime(p) or p < 5:
        raise ValueError(f"need a prime p >= 5, got {p}")
    if m_max > max(p, DESK_MAX_M):
        raise BoundExceeded(f"m_max={m_max} exceeds max(p, {DESK_MAX_M})")
    ring = curve_ring(p)
    s, t, x = (ring.gen(v) for v in ("s", "t", "x"))
    rhs = weierstrass_rhs(ring)
    inv2 = pow(2, -1, p)

    psi: dict = {
        0: _YPoly(ring.zero, 0),
        1: _YPoly(ring.one, 0),
        2: _YPoly(ring(2), 1),
        3: _YPoly(3 * x**4 + 6 * s * x**2 + 12 * t * x - s**2, 0),
        4: _YPoly(4 * (x**6 + 5 * s * x**4 + 20 * t * x**3 - 5 * s**2 * x**2 - 4 * s * t * x - 8 * t**2 - s**3), 1),
    }
    for n in range(5, m_max + 1):
        m = n // 2
        if n % 2:
            # psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            val = (psi[m + 2] * psi[m] ** 3).sub(psi[m - 1] * psi[m + 1] ** 3, rhs)
        else:
            # psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / (2y)
            inner = (psi[m + 2] * psi[m - 1] ** 2).sub(psi[m - 2] * psi[m + 1] ** 2, rhs)
            val = psi[m] * inner
            val = _YPoly(val.poly * inv2, val.k - 1)
        psi[n] = val.normalise(rhs)

    out = DivisionPolySet(p, ring)
    for n in range(0, m_max + 1):
        out.poly[n] = psi[n].poly
        out.y_flag[n] = psi[n].k
    return out


def psi3_printed(p: int) -> MultiPoly:
    ring = curve_ring(p)
    s, t, x = (ring.gen(v) for v in ("s", "t", "x"))
    return 3 * x**4 + 6 * s * x**2 + 12 * t * x - s**2


def x_coefficients(f: MultiPoly, target: PolyRing | None = None) -> list:
    """Coefficients of f in x (ascending), as polynomials in s, t."""
    target = coefficient_ring(f.ring.p) if target is None else target
    n = f.degree("x")
    return [f.coeff("x", i).embed(target) for i in range(n + 1)]


@dataclass
class Theta:
    p: int
    coefficients: dict  # k -> a_k in F_p[s,t]
    poly: UniPoly  # in X over F_p[s,t], ascending

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def leading(self) -> MultiPoly:
        return self.coefficients[(self.p - 1) // 2]

    @property
    def constant(self) -> MultiPoly:
        return self.coefficients[(self.p**2 - 1) // 2]


def a_coefficient(psi_p: MultiPoly, p: int, k: int, target: PolyRing) -> MultiPoly:
    """a_k: the coefficient of x^((p^2-1)/2 - k) in psi_p."""
    return psi_p.coeff("x", (p * p - 1) // 2 - k).embed(target)


def theta_extract(p: int, psi_p: MultiPoly | None = None) -> Theta:
    if not is_prime(p) or p < 5 or p > DESK_MAX_M:
        raise BoundExceeded(f"theta_extract needs a prime 5 <= p <= {DESK_MAX_M}")
    if psi_p is None:
        psi_p = division_polynomials(p, p)[p]
    R = coefficient_ring(p)
    half = (p - 1) // 2
    coeffs = {}
    for i in range(half + 1):
        k = half + p * i
        coeffs[k] = a_coefficient(psi_p, p, k, R)
    if not coeffs[half]:
        raise ZeroLeadingCoefficient(f"a_{half} vanishes at p={p}")
    # theta(X) = sum_i a_{half + p i} X^{half - i}
    ascending = [coeffs[half + p * (half - j)] for j in range(half + 1)]
    return Theta(p, coeffs, UniPoly(ascending, R, "X"))


@dataclass
class RadicalReport:
    p: int
    radical_degree: int
    expected_degree: int
    twist_matches: bool
    radical: UniPoly


def theta_radical_check(p: int, psi_override: MultiPoly | None = None) -> RadicalReport:
    """Compare theta with lc * (Frobenius twist of the separable radical of psi_p).

    psi_p has coefficients in F_p[s,t]; to make them p-th powers we work over
    F_p(S,T) with s = S^p, t = T^p.  The radical g lives in F_p(S,T)[x]; its
    twist has coefficients in F_p(S^p,T^p) = F_p(s,t) and is compared with theta.
    """
    if p not in (5, 7, 11, 13):
        raise PreconditionViolated(f"theta_radical_check supports p in 5..13, got {p}")
    theta = theta_extract(p)
    psi = psi_override if psi_override is not None else division_polynomials(p, p)[p]
    big = PolyRing(p, ("S", "T"))
    K = FractionField(big)
    lifted = []
    for c in x_coefficients(psi):
        # c(s,t) -> c(S^p, T^p): same exponent pattern scaled by p in the renamed ring
        lifted.append(RationalFunction(MultiPoly(big, dict(c.terms)).scale_exponents(p)))
    f = UniPoly(lifted, K, "x")
    g = separable_radical(f)
    expected = (p - 1) // 2
    if g.degree != expected:
        raise RadicalDegreeMismatch(f"radical degree {g.degree}, expected {expected}")
    twisted = frobenius_coeff_power(g)
    small = coefficient_ring(p)
    a = theta.leading
    ok = True
    for i in range(expected + 1):
        c = twisted[i]
        num = MultiPoly(small, dict(c.num.pth_root().terms))
        den = MultiPoly(small, dict(c.den.pth_root().terms))
        if theta.poly[i] * den != a * num:
            ok = False
            break
    if not ok:
        raise TwistMismatch(f"theta differs from lc * twist(radical) at p={p}")
    return RadicalReport(p, g.degree, expected, ok, g)


@dataclass
class ResolventReport:
    p: int
    t2: MultiPoly
    t1: MultiPoly
    t0: MultiPoly
    shifted: UniPoly
    vieta: dict


def three_torsion_resolvent(p: int) -> ResolventReport:
    """f(T) = prod (T + P_i) over the three pairings P of the roots of psi_3, via Vieta."""
    if not is_prime(p) or p < 5:
        raise ValueError("need a prime p >= 5")
    alpha = PolyRing(p, ("a1", "a2", "a3", "a4"))
    a1, a2, a3, a4 = alpha.gens()
    P = [a1 * a2 + a3 * a4, a1 * a3 + a2 * a4, a1 * a4 + a2 * a3]
    sym = [
        P[0] + P[1] + P[2],
        P[0] * P[1] + P[0] * P[2] + P[1] * P[2],
        P[0] * P[1] * P[2],
    ]
    R = coefficient_ring(p)
    s, t = R.gens()
    inv3 = pow(3, -1, p)
    # psi_3 / 3 = x^4 + 2s x^2 + 4t x - s^2/3, so e_k = (-1)^k * coefficient of x^(4-k)
    vieta = {"e1": R.zero, "e2": 2 * s, "e3": -4 * t, "e4": -(s**2) * inv3}
    coeffs = [symmetric_reduce(q).substitute(vieta, R) for q in sym]
    f = UniPoly([coeffs[2], coeffs[1], coeffs[0], 1], R, "T")
    shift = UniPoly([-2 * s * inv3, 1], R, "T")
    return ResolventReport(p, coeffs[0], coeffs[1], coeffs[2], f(shift), vieta)


def vieta_from_psi3(p: int) -> dict:
    """e_k of the roots of psi_3 read directly off its coefficients."""
    cs = x_coefficients(division_polynomials(p, 3)[3])
    lc_inv = pow(3, -1, p)
    return {f"e{k}": cs[4 - k] * ((-1) ** k * lc_inv) for k in range(1, 5)}


def mu_discriminant(p: int, theta: Theta | None = None) -> RationalFunction:
    """Disc(theta / a) = Disc(theta) / a^(2n-2) with n = deg theta."""
    if p % 4 != 1 or p not in (5, 13):
        raise PreconditionViolated(f"mu is only defined here for p in {{5, 13}}, got {p}")
    theta = theta_extract(p) if theta is None else theta
    n = theta.degree
    d = discriminant(theta.poly)
    if not d:
        raise ZeroDiscriminant(f"theta is inseparable at p={p}")
    return RationalFunction(d, theta.leading ** (2 * n - 2))


def point_count(p: int, a: int, b: int) -> int:
    """#E(F_p) for y^2 = x^3 + a x + b, including the point at infinity."""
    total = p + 1
    half = (p - 1) // 2
    for x in range(p):
        r = (x * x * x + a * x + b) % p
        if r:
            total += 1 if pow(r, half, p) == 1 else -1
    return total


def curve_for_j(p: int, j: int) -> tuple:
    j %= p
    if j == 0:
        return (0, 1)
    if j == 1728 % p:
        return (1, 0)
    k = j * pow((1728 - j) % p, -1, p)
    return (3 * k % p, 2 * k % p)


def is_supersingular_j(p: int, j: int) -> bool:
    a, b = curve_for_j(p, j)
    return (p + 1 - point_count(p, a, b)) % p == 0


def supersingular_j_list(p: int) -> list:
    if not is_prime(p) or not 5 <= p <= 50:
        raise BoundExceeded(f"supersingular_j_list needs a prime 5 <= p <= 50, got {p}")
    return [j for j in range(p) if is_supersingular_j(p, j)]


def supersingular_count_fp2(p: int) -> int:
    """Number of supersingular j in F_{p^2}, by counting points over F_{p^2}.

    Uses the trace over F_{p^2} of each j's model; supersingular iff trace = 0 mod p.
    """
    F = FiniteField(p, 2)
    q = F.order
    elems = list(F.elements())
    squares = {}
    for x in elems:
        sq = x * x
        squares[sq.coeffs] = squares.get(sq.coeffs, 0) + 1
    count = 0
    c1728 = F(1728)
    for j in elems:
        if not j:
            a, b = F.zero, F.one
        elif j == c1728:
            a, b = F.one, F.zero
        else:
            k = j / (c1728 - j)
            a, b = 3 * k, 2 * k
        n = 1
        for x in elems:
            n += squares.get((x * x * x + a * x + b).coeffs, 0)
        if (q + 1 - n) % p == 0:
            count += 1
    return count
