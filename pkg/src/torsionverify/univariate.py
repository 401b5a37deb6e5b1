"""Dense univariate polynomials over a coefficient domain.

A domain is any of FiniteField, PolyRing or FractionField: something with
``zero``, ``one``, ``__call__`` for coercion, ``is_field``, ``characteristic``
and ``exact_div``.
"""

from __future__ import annotations

from .errors import NotAPthPower, ZeroDerivative
from .poly import FractionField, PolyRing, RationalFunction


class UniPoly:
    __slots__ = ("coeffs", "domain", "var")

    def __init__(self, coeffs, domain, var: str = "x"):
        cs = [domain(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.domain = domain
        self.var = var

    @classmethod
    def monomial(cls, c, n: int, domain, var="x") -> "UniPoly":
        return cls([0] * n + [c], domain, var)

    @classmethod
    def x(cls, domain, var="x") -> "UniPoly":
        return cls([0, 1], domain, var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.domain.zero

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other], self.domain, self.var)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self[i] + o[i] for i in range(n)], self.domain, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.domain, self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            c = self.domain(other)
            return UniPoly([a * c for a in self.coeffs], self.domain, self.var)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.domain, self.var)
        out = [self.domain.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPoly(out, self.domain, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = UniPoly([1], self.domain, self.var)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            other = self._lift(other)
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, value):
        """Horner evaluation; value may be a coefficient or another UniPoly."""
        acc = self.domain.zero if not isinstance(value, UniPoly) else UniPoly([], self.domain, self.var)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, other: "UniPoly") -> "UniPoly":
        return self(other)

    def derivative(self) -> "UniPoly":
        return UniPoly([c * i for i, c in enumerate(self.coeffs)][1:], self.domain, self.var)

    def map_coeffs(self, fn, domain=None) -> "UniPoly":
        domain = self.domain if domain is None else domain
        return UniPoly([fn(c) for c in self.coeffs], domain, self.var)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        inv = self.domain.one / self.lc
        return self * inv

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lc == 1

    def divmod(self, other: "UniPoly") -> tuple:
        """Division with remainder; requires the divisor's leading coefficient be invertible."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly([], self.domain, self.var), self
        quot = [self.domain.zero] * (dq + 1)
        inv = self.domain.one / other.lc
        db = other.degree
        for k in range(dq, -1, -1):
            c = rem[k + db] * inv
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return UniPoly(quot, self.domain, self.var), UniPoly(rem[:db], self.domain, self.var)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def prem(self, other: "UniPoly") -> "UniPoly":
        """Pseudo-remainder lc(other)^(deg self - deg other + 1) * self mod other, fraction free."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        db = other.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < db:
            return self
        lc = other.lc
        for k in range(len(rem) - 1 - db, -1, -1):
            top = rem[k + db]
            rem = [c * lc for c in rem]
            if top:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - top * b
            rem.pop()
        return UniPoly(rem, self.domain, self.var)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if not mono:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def _euclid_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    while g:
        f, g = g, f % g
    return f.monic()


def _subresultant_gcd(A: UniPoly, B: UniPoly) -> UniPoly:
    """gcd up to a unit, for polynomials over an integral domain (subresultant PRS)."""
    if A.degree < B.degree:
        A, B = B, A
    if not B:
        return A
    exact = A.domain.exact_div
    g = A.domain.one
    h = A.domain.one
    while True:
        delta = A.degree - B.degree
        R = A.prem(B)
        if not R:
            return B
        if R.degree == 0:
            return UniPoly([1], A.domain, A.var)
        A = B
        denom = g * h**delta
        B = R.map_coeffs(lambda c: exact(c, denom))
        g = A.lc
        if delta:
            h = exact(g**delta, h ** (delta - 1))


def clear_denominators(f: UniPoly) -> UniPoly:
    """A polynomial over the underlying PolyRing with the same roots as f over a FractionField."""
    F = f.domain
    denom = F.ring.one
    for c in f.coeffs:
        if not (denom * c).den.is_constant():
            denom = denom * c.den
    scaled = [c * denom for c in f.coeffs]
    return UniPoly([c.as_poly() for c in scaled], F.ring, f.var)


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over a field; zero only if both inputs are zero."""
    domain = f.domain
    if not domain.is_field:
        raise ValueError("poly_gcd needs a field of coefficients")
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    if isinstance(domain, FractionField) and domain.ring.nvars > 1:
        d = _subresultant_gcd(clear_denominators(f), clear_denominators(g))
        return UniPoly([RationalFunction(c) for c in d.coeffs], domain, f.var).monic()
    return _euclid_gcd(f, g)


def sylvester_matrix(f: UniPoly, g: UniPoly, df: int | None = None, dg: int | None = None) -> list:
    """Rows of f (dg of them) then rows of g (df of them); coefficients listed from the top degree.

    ``df``/``dg`` are formal degrees, allowing leading zeros.
    """
    m = f.degree if df is None else df
    n = g.degree if dg is None else dg
    size = m + n
    zero = f.domain.zero
    rows = []
    fc = [f[i] for i in range(m, -1, -1)]
    gc = [g[i] for i in range(n, -1, -1)]
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def bareiss_det(matrix: list, domain):
    """Determinant by fraction-free Gaussian elimination; only exact divisions are performed."""
    n = len(matrix)
    if n == 0:
        return domain.one
    a = [list(row) for row in matrix]
    sign = 1
    prev = domain.one
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return domain.zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - aik * row_k[j]
                row_i[j] = domain.exact_div(num, prev) if num else num
            row_i[k] = domain.zero
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant(f: UniPoly, g: UniPoly, df: int | None = None, dg: int | None = None):
    """det(Sylvester(f, g)) with f's rows on top; equals prod g(roots of f) for monic f."""
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    return bareiss_det(sylvester_matrix(f, g, df, dg), f.domain)


def discriminant(f: UniPoly):
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f), with f' taken at formal degree n-1."""
    n = f.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    d = f.derivative()
    if not d:
        raise ZeroDerivative(f"derivative of {f} vanishes")
    r = resultant(f, d, n, n - 1)
    if (n * (n - 1) // 2) % 2:
        r = -r
    return f.domain.exact_div(r, f.lc)


def _coeff_frobenius(c, domain):
    if isinstance(domain, (PolyRing, FractionField)):
        return c.frobenius()
    return c**domain.characteristic


def frobenius_coeff_power(f: UniPoly) -> UniPoly:
    """Raise every coefficient to the p-th power."""
    return f.map_coeffs(lambda c: _coeff_frobenius(c, f.domain))


def pth_root_poly(f: UniPoly) -> UniPoly:
    """h with h^p == f, for f whose exponents are multiples of p and coefficients are p-th powers."""
    p = f.domain.characteristic
    if any(c for i, c in enumerate(f.coeffs) if i % p):
        raise NotAPthPower(f"{f} has exponents not divisible by {p}")

    return UniPoly([f.coeffs[i].pth_root() for i in range(0, len(f.coeffs), p)], f.domain, f.var)


def separable_radical(f: UniPoly) -> UniPoly:
    """Monic product of the distinct irreducible factors of f.

    In characteristic p a vanishing derivative means f is a p-th power, so the
    radical of its p-th root is taken instead; factors whose multiplicity is a
    multiple of p are peeled off the same way.
    """
    if not f:
        raise ValueError("radical of zero")
    f = f.monic()
    if f.degree <= 0:
        return UniPoly([1], f.domain, f.var)
    d = f.derivative()
    if not d:
        return separable_radical(pth_root_poly(f))
    c = poly_gcd(f, d)
    w = f // c
    result = w
    while w.degree > 0:
        y = poly_gcd(w, c)
        c = c // y
        w = y
    if c.degree > 0:
        result = result * separable_radical(pth_root_poly(c))
    return result.monic()
