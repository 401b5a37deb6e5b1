"""Sparse multivariate polynomials over F_p and their fractions.

Exponent vectors are packed into one Python int, first variable in the highest
bits, so monomial multiplication is integer addition and integer order is lex
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import NotAPthPower, NotDivisible

BITS = 24
MASK = (1 << BITS) - 1


@dataclass(frozen=True)
class PolyRing:
    """F_p[vars] with a fixed variable order."""

    p: int
    vars: tuple

    is_field = False

    def __post_init__(self):
        object.__setattr__(self, "vars", tuple(self.vars))
        if len(set(self.vars)) != len(self.vars):
            raise ValueError("duplicate variable names")

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def shift(self, i: int) -> int:
        return BITS * (len(self.vars) - 1 - i)

    def pack(self, exps) -> int:
        key = 0
        for e in exps:
            if e < 0 or e > MASK:
                raise ValueError(f"exponent {e} out of range")
            key = (key << BITS) | e
        return key

    def unpack(self, key: int) -> tuple:
        n = len(self.vars)
        out = [0] * n
        for i in range(n - 1, -1, -1):
            out[i] = key & MASK
            key >>= BITS
        return tuple(out)

    @property
    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    @property
    def one(self) -> "MultiPoly":
        return self(1)

    def __call__(self, value) -> "MultiPoly":
        if isinstance(value, MultiPoly):
            if value.ring == self:
                return value
            return value.embed(self)
        c = int(value) % self.p
        return MultiPoly(self, {0: c} if c else {})

    def gen(self, name: str) -> "MultiPoly":
        i = self.vars.index(name)
        return MultiPoly(self, {1 << self.shift(i): 1})

    def gens(self) -> tuple:
        return tuple(self.gen(v) for v in self.vars)

    def from_terms(self, terms: Mapping) -> "MultiPoly":
        """Build from {exponent tuple: coefficient}."""
        out: dict = {}
        for exps, c in terms.items():
            k = self.pack(exps)
            out[k] = out.get(k, 0) + c
        return MultiPoly._clean(self, out)

    def exact_div(self, a, b):
        return exact_divide(a, b)

    def __repr__(self):
        return f"GF({self.p})[{', '.join(self.vars)}]"


class MultiPoly:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @staticmethod
    def _clean(ring: PolyRing, raw: dict) -> "MultiPoly":
        p = ring.p
        out = {}
        for k, c in raw.items():
            c %= p
            if c:
                out[k] = c
        return MultiPoly(ring, out)

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring(other)
        return None

    # arithmetic
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return MultiPoly._clean(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return MultiPoly(self.ring, {k: p - c for k, c in self.terms.items()})

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
        if isinstance(other, int):
            c = other % self.ring.p
            if not c:
                return self.ring.zero
            return MultiPoly._clean(self.ring, {k: v * c for k, v in self.terms.items()})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.terms, o.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return MultiPoly._clean(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        if len(self.terms) == 1:
            (k, c), = self.terms.items()
            return MultiPoly._clean(self.ring, {k * e: pow(c, e, self.ring.p)})
        result, base = self.ring.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, int):
            return self * pow(other, -1, self.ring.p)
        return NotImplemented

    def __floordiv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return exact_divide(self, o)

    # comparison
    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (int, MultiPoly)) else None
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # structure
    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def constant_value(self) -> int:
        return self.terms.get(0, 0)

    def exponents(self) -> dict:
        """{exponent tuple: coefficient}."""
        return {self.ring.unpack(k): c for k, c in self.terms.items()}

    def leading_key(self) -> int:
        return max(self.terms)

    def leading_term(self) -> tuple:
        k = max(self.terms)
        return self.ring.unpack(k), self.terms[k]

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` (total degree if None); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(self.ring.unpack(k)) for k in self.terms)
        s = self.ring.shift(self.ring.vars.index(var))
        return max((k >> s) & MASK for k in self.terms)

    def coeff(self, var: str, n: int) -> "MultiPoly":
        """Coefficient of var^n, as a polynomial in the same ring (free of var)."""
        s = self.ring.shift(self.ring.vars.index(var))
        mask = MASK << s
        out = {k & ~mask: c for k, c in self.terms.items() if (k & mask) >> s == n}
        return MultiPoly(self.ring, out)

    def derivative(self, var: str) -> "MultiPoly":
        s = self.ring.shift(self.ring.vars.index(var))
        out = {}
        for k, c in self.terms.items():
            e = (k >> s) & MASK
            if e:
                out[k - (1 << s)] = c * e
        return MultiPoly._clean(self.ring, out)

    def embed(self, target: PolyRing) -> "MultiPoly":
        """Inject into a ring whose variables include all variables actually used."""
        if target.p != self.ring.p:
            raise ValueError("characteristic mismatch")
        idx = []
        for i, v in enumerate(self.ring.vars):
            idx.append(target.vars.index(v) if v in target.vars else None)
        out = {}
        for k, c in self.terms.items():
            exps = self.ring.unpack(k)
            tk = 0
            for i, e in enumerate(exps):
                if e:
                    if idx[i] is None:
                        raise ValueError(f"variable {self.ring.vars[i]} not in {target}")
                    tk += e << target.shift(idx[i])
            out[tk] = c
        return MultiPoly(target, out)

    def substitute(self, values: Mapping, target=None):
        """Evaluate variables named in ``values``; others are kept (embedded into ``target``).

        ``values`` may map to ints, MultiPolys of ``target``, or any ring elements
        supporting + and *.
        """
        if target is None:
            sample = next((v for v in values.values() if not isinstance(v, int)), None)
            target = sample.ring if isinstance(sample, MultiPoly) else self.ring
        keep = [v for v in self.ring.vars if v not in values]
        power_cache: dict = {}

        def power(var, e):
            key = (var, e)
            if key not in power_cache:
                power_cache[key] = values[var] ** e
            return power_cache[key]

        total = target.zero if hasattr(target, "zero") else 0
        keep_gens = {v: target.gen(v) for v in keep} if isinstance(target, PolyRing) else {}
        for k, c in self.terms.items():
            exps = self.ring.unpack(k)
            term = target(c) if callable(target) else c
            for v, e in zip(self.ring.vars, exps):
                if not e:
                    continue
                if v in values:
                    term = term * power(v, e)
                else:
                    term = term * keep_gens[v] ** e
            total = total + term
        return total

    def scale_exponents(self, factor: int) -> "MultiPoly":
        """m(x) -> m(x^factor) in every variable."""
        return MultiPoly(self.ring, {k * factor: c for k, c in self.terms.items()})

    def frobenius(self) -> "MultiPoly":
        """self^p; over F_p this just multiplies exponents by p."""
        return self.scale_exponents(self.ring.p)

    def pth_root(self) -> "MultiPoly":
        p = self.ring.p
        out = {}
        for k, c in self.terms.items():
            exps = self.ring.unpack(k)
            if any(e % p for e in exps):
                raise NotAPthPower(f"{self} is not a p-th power")
            out[self.ring.pack(e // p for e in exps)] = c
        return MultiPoly(self.ring, out)

    def monomial_content(self) -> tuple:
        """Componentwise minimum exponent vector."""
        if not self.terms:
            return (0,) * self.ring.nvars
        vecs = [self.ring.unpack(k) for k in self.terms]
        return tuple(min(col) for col in zip(*vecs))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            exps = self.ring.unpack(k)
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.ring.vars, exps) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def exact_divide(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Quotient q with q*b == a, by lex leading-term division."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.ring != b.ring:
        raise ValueError("ring mismatch")
    ring = a.ring
    p = ring.p
    if not a:
        return ring.zero
    lk = max(b.terms)
    lc_inv = pow(b.terms[lk], -1, p)
    lexp = ring.unpack(lk)
    rem = dict(a.terms)
    quot = {}
    bterms = list(b.terms.items())
    while rem:
        rk = max(rem)
        rexp = ring.unpack(rk)
        if any(r < l for r, l in zip(rexp, lexp)):
            raise NotDivisible(f"({a}) / ({b})")
        qk = rk - lk
        qc = rem[rk] * lc_inv % p
        quot[qk] = qc
        for bk, bc in bterms:
            k = bk + qk
            v = (rem.get(k, 0) - qc * bc) % p
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return MultiPoly(ring, quot)


def divides(b: MultiPoly, a: MultiPoly) -> bool:
    try:
        exact_divide(a, b)
    except NotDivisible:
        return False
    return True


def _univariate_divmod(a: MultiPoly, b: MultiPoly) -> tuple:
    ring = a.ring
    p = ring.p
    db = b.degree()
    lc_inv = pow(b.terms[max(b.terms)], -1, p)
    rem = dict(a.terms)
    quot = {}
    while rem:
        dr = max(rem)
        if dr < db:
            break
        c = rem[dr] * lc_inv % p
        shift = dr - db
        quot[shift] = c
        for k, v in b.terms.items():
            kk = k + shift
            nv = (rem.get(kk, 0) - c * v) % p
            if nv:
                rem[kk] = nv
            else:
                rem.pop(kk, None)
    return MultiPoly(ring, quot), MultiPoly(ring, rem)


def univariate_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic gcd in a one-variable ring F_p[u]."""
    if a.ring.nvars != 1:
        raise ValueError("univariate_gcd needs a one-variable ring")
    while b:
        a, b = b, _univariate_divmod(a, b)[1]
    if not a:
        return a
    return a * pow(a.terms[max(a.terms)], -1, a.ring.p)


@dataclass(frozen=True)
class FractionField:
    """F_p(vars), the fraction field of a PolyRing."""

    ring: PolyRing

    is_field = True

    @property
    def characteristic(self) -> int:
        return self.ring.p

    @property
    def zero(self) -> "RationalFunction":
        return RationalFunction(self.ring.zero, self.ring.one)

    @property
    def one(self) -> "RationalFunction":
        return RationalFunction(self.ring.one, self.ring.one)

    def __call__(self, value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return RationalFunction(self.ring(value), self.ring.one)

    def gen(self, name: str) -> "RationalFunction":
        return self(self.ring.gen(name))

    def exact_div(self, a, b):
        return a / b

    def __repr__(self):
        return f"GF({self.ring.p})({', '.join(self.ring.vars)})"


class RationalFunction:
    """num/den over F_p[vars].

    One-variable fractions are kept in lowest terms with monic denominator.
    Multivariate fractions only get cheap reductions (monomial content,
    exact division, scalar normalisation); equality is by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = num.ring.one
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num.ring != den.ring:
            raise ValueError("ring mismatch")
        self.num, self.den = _reduce_pair(num, den)

    @property
    def ring(self) -> PolyRing:
        return self.num.ring

    @property
    def domain(self) -> FractionField:
        return FractionField(self.num.ring)

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, MultiPoly):
            return RationalFunction(other)
        if isinstance(other, int):
            return RationalFunction(self.ring(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

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
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return RationalFunction(self.den, self.num)

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

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction(self.num**e, self.den**e)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self):
        return bool(self.num)

    def frobenius(self) -> "RationalFunction":
        return RationalFunction(self.num.frobenius(), self.den.frobenius())

    def pth_root(self) -> "RationalFunction":
        return RationalFunction(self.num.pth_root(), self.den.pth_root())

    def as_poly(self) -> MultiPoly:
        """The polynomial this fraction equals, or NotDivisible."""
        return exact_divide(self.num, self.den)

    def __repr__(self):
        if self.den == 1:
            return f"{self.num}"
        return f"({self.num}) / ({self.den})"


def _reduce_pair(num: MultiPoly, den: MultiPoly) -> tuple:
    ring = num.ring
    p = ring.p
    if not num:
        return num, ring.one
    if ring.nvars == 1:
        g = univariate_gcd(num, den)
        if g.degree() > 0:
            num, den = exact_divide(num, g), exact_divide(den, g)
    else:
        if den.is_constant():
            pass
        elif len(den.terms) == 1 or len(num.terms) >= len(den.terms):
            try:
                num, den = exact_divide(num, den), ring.one
            except NotDivisible:
                pass
        if not den.is_constant():
            common = tuple(min(a, b) for a, b in zip(num.monomial_content(), den.monomial_content()))
            if any(common):
                ck = ring.pack(common)
                num = MultiPoly(ring, {k - ck: c for k, c in num.terms.items()})
                den = MultiPoly(ring, {k - ck: c for k, c in den.terms.items()})
    lc = den.terms[max(den.terms)]
    if lc != 1:
        inv = pow(lc, -1, p)
        num, den = num * inv, den * inv
    return num, den
