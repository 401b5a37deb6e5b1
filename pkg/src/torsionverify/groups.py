"""Finite matrix groups over Z/MZ.

Groups are explicit hash sets of canonical elements.  Everything here is brute
force on purpose: the point is to check structure statements about SL2(Z/NZ)
at sizes where enumeration is cheap, so the constructions stay simple enough
to trust.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Hashable, Iterable, NamedTuple, Sequence

from .errors import (
    BoundExceeded,
    ClosureBoundExceeded,
    DivisibilityViolated,
    NotADivisor,
    NotAHomomorphism,
    NotCoprime,
    NotInSubgroup,
    NotSurjective,
)
from .modular import ResidueInt, is_prime, prime_factors, unit_group

SL2_BOUND = 30
CLOSURE_BOUND = 10**6


class Mat2Mod(NamedTuple):
    """2x2 matrix (a b; c d) over Z/MZ with canonical entries."""

    a: int
    b: int
    c: int
    d: int
    modulus: int

    @classmethod
    def of(cls, a, b, c, d, modulus: int) -> "Mat2Mod":
        m = modulus
        return cls(a % m, b % m, c % m, d % m, m)

    @classmethod
    def identity(cls, modulus: int) -> "Mat2Mod":
        return cls.of(1, 0, 0, 1, modulus)

    def __mul__(self, o: "Mat2Mod") -> "Mat2Mod":  # type: ignore[override]
        m = self.modulus
        if o.modulus != m:
            raise ValueError("mixed moduli")
        a, b, c, d = self.a, self.b, self.c, self.d
        return Mat2Mod(
            (a * o.a + b * o.c) % m,
            (a * o.b + b * o.d) % m,
            (c * o.a + d * o.c) % m,
            (c * o.b + d * o.d) % m,
            m,
        )

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.modulus

    def inverse(self) -> "Mat2Mod":
        m = self.modulus
        dinv = pow(self.det(), -1, m) if m > 1 else 0
        return Mat2Mod.of(self.d * dinv, -self.b * dinv, -self.c * dinv, self.a * dinv, m)

    def reduce(self, modulus: int) -> "Mat2Mod":
        if self.modulus % modulus:
            raise NotADivisor(f"{modulus} does not divide {self.modulus}")
        return Mat2Mod.of(self.a, self.b, self.c, self.d, modulus)

    def entries(self) -> tuple[ResidueInt, ...]:
        return tuple(ResidueInt(v, self.modulus) for v in self[:4])

    def __repr__(self):
        return f"({self.a} {self.b}; {self.c} {self.d}) mod {self.modulus}"


class ProductElem(NamedTuple):
    """Element (u, A) of (Z/mZ)^x × SL2(Z/MZ)."""

    unit: int
    unit_modulus: int
    matrix: Mat2Mod

    @classmethod
    def of(cls, u: int, m: int, matrix: Mat2Mod) -> "ProductElem":
        return cls(u % m, m, matrix)

    def __mul__(self, o: "ProductElem") -> "ProductElem":  # type: ignore[override]
        m = self.unit_modulus
        return ProductElem((self.unit * o.unit) % m, m, self.matrix * o.matrix)

    def inverse(self) -> "ProductElem":
        m = self.unit_modulus
        u = pow(self.unit, -1, m) if m > 1 else 0
        return ProductElem(u, m, self.matrix.inverse())

    def __repr__(self):
        return f"({self.unit} mod {self.unit_modulus}, {self.matrix!r})"


@dataclass(frozen=True)
class MatGroup:
    """A finite group given by its full element set."""

    modulus: int
    elements: frozenset
    identity: Hashable
    generators: tuple = ()
    special_linear: bool = True

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.elements

    def order(self) -> int:
        return len(self.elements)


def sl2_order_formula(M: int) -> int:
    """M^3 * prod_{q | M} (1 - q^-2), in integers."""
    n = M**3
    for q in prime_factors(M):
        n = n // (q * q) * (q * q - 1)
    return n


def unipotent_generators(M: int) -> tuple[Mat2Mod, Mat2Mod]:
    return Mat2Mod.of(1, 1, 0, 1, M), Mat2Mod.of(1, 0, 1, 1, M)


def enumerate_sl2(M: int, bound: int = SL2_BOUND) -> MatGroup:
    """All det-1 matrices mod M by scanning the M^4 candidates."""
    if M < 1:
        raise ValueError("M must be >= 1")
    if M > bound:
        raise BoundExceeded(f"M={M} exceeds bound {bound}")
    elems = set()
    rng = range(M)
    for a, d in itertools.product(rng, rng):
        ad = a * d
        for b in rng:
            for c in rng:
                if (ad - b * c) % M == 1 % M:
                    elems.add(Mat2Mod(a, b, c, d, M))
    return MatGroup(M, frozenset(elems), Mat2Mod.identity(M), unipotent_generators(M))


def closure_subgroup(
    generators: Iterable,
    multiply: Callable = lambda x, y: x * y,
    identity=None,
    bound: int = CLOSURE_BOUND,
) -> set:
    """Smallest multiplicatively closed set holding the identity and the generators.

    In a finite group this is the generated subgroup; inverses come for free.
    """
    gens = list(dict.fromkeys(generators))
    if identity is None:
        if not gens:
            raise ValueError("identity required when there are no generators")
        identity = _identity_of(gens[0])
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = multiply(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > bound:
                        raise ClosureBoundExceeded(f"closure exceeds {bound} elements")
        frontier = nxt
    return seen


def _identity_of(g):
    if isinstance(g, Mat2Mod):
        return Mat2Mod.identity(g.modulus)
    if isinstance(g, ProductElem):
        return ProductElem(1 % g.unit_modulus, g.unit_modulus, Mat2Mod.identity(g.matrix.modulus))
    raise TypeError(f"no identity known for {type(g).__name__}")


def group_from_generators(generators: Sequence, identity=None, bound: int = CLOSURE_BOUND) -> MatGroup:
    gens = tuple(generators)
    if identity is None:
        identity = _identity_of(gens[0])
    elems = closure_subgroup(gens, identity=identity, bound=bound)
    modulus = identity.modulus if isinstance(identity, Mat2Mod) else identity.matrix.modulus
    return MatGroup(modulus, frozenset(elems), identity, gens, isinstance(identity, Mat2Mod))


def generating_set(G: MatGroup) -> tuple:
    """Known generators of G, or a greedy generating set picked in sorted order."""
    if G.generators:
        return G.generators
    gens: list = []
    span = {G.identity}
    for g in sorted(G.elements):
        if g not in span:
            gens.append(g)
            span = closure_subgroup(gens, identity=G.identity)
            if len(span) == len(G.elements):
                break
    return tuple(gens)


def is_normal(H: MatGroup | set | frozenset, G: MatGroup) -> bool:
    """H normal in G, tested by conjugating every element of H by G's generators."""
    elems = H.elements if isinstance(H, MatGroup) else H
    for g in generating_set(G):
        gi = g.inverse()
        for h in elems:
            if g * h * gi not in elems:
                return False
    return True


def subgroup_s(Nl: int, N: int) -> MatGroup:
    """S(Nl, N): the matrices in SL2(Z/Nl) congruent to I2 mod N."""
    if N < 1 or Nl % N:
        raise NotADivisor(f"{N} does not divide {Nl}")
    k = Nl // N
    lifts = [(N * i) % Nl for i in range(k)]
    elems = set()
    for da, db, dc, dd in itertools.product(lifts, repeat=4):
        A = Mat2Mod.of(1 + da, db, dc, 1 + dd, Nl)
        if A.det() == 1 % Nl:
            elems.add(A)
    return MatGroup(Nl, frozenset(elems), Mat2Mod.identity(Nl))


@dataclass
class PiIsoReport:
    N: int
    l: int
    injective: bool
    surjective: bool
    bijection_size: int

    @property
    def ok(self) -> bool:
        return self.injective and self.surjective


def check_pi_iso(N: int, l: int) -> PiIsoReport:
    """Mod-l reduction S(Nl, N) -> SL2(F_l) should be a bijection when l does not divide N."""
    if gcd(N, l) != 1:
        raise NotCoprime(f"gcd({N}, {l}) != 1")
    S = subgroup_s(N * l, N)
    image = {A.reduce(l) for A in S.elements}
    target = enumerate_sl2(l, bound=max(l, SL2_BOUND)).elements
    injective = len(image) == len(S.elements)
    surjective = image == target
    return PiIsoReport(N, l, injective, surjective, len(image) if injective and surjective else 0)


def _require_divides(l: int, N: int):
    if N % l:
        raise DivisibilityViolated(f"{l} does not divide {N}")


def gamma_map(x: int, y: int, z: int, N: int, l: int) -> Mat2Mod:
    """gamma(x, y, z) = I2 + N*(x y; z -x) read mod N*l."""
    _require_divides(l, N)
    x, y, z = (int(v) % l for v in (x, y, z))
    return Mat2Mod.of(1 + N * x, N * y, N * z, 1 - N * x, N * l)


def gamma_inverse(X: Mat2Mod, N: int, l: int) -> tuple[int, int, int]:
    _require_divides(l, N)
    Nl = N * l
    if X.modulus != Nl:
        raise NotInSubgroup(f"modulus {X.modulus} != {Nl}")
    a1, b, c = (X.a - 1) % Nl, X.b, X.c
    if a1 % N or b % N or c % N or (X.d - 1) % N:
        raise NotInSubgroup(f"{X!r} is not I2 mod {N}")
    x, y, z = (a1 // N) % l, (b // N) % l, (c // N) % l
    if X.d != (1 - N * x) % Nl:
        raise NotInSubgroup(f"{X!r}: lower-right entry breaks det = 1")
    return x, y, z


class Mat3Mod(NamedTuple):
    """3x3 matrix over F_l, rows stored as a flat 9-tuple."""

    entries: tuple
    modulus: int

    @classmethod
    def from_rows(cls, rows, modulus: int) -> "Mat3Mod":
        return cls(tuple(v % modulus for row in rows for v in row), modulus)

    @classmethod
    def identity(cls, modulus: int) -> "Mat3Mod":
        return cls.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]], modulus)

    def rows(self):
        e = self.entries
        return [list(e[0:3]), list(e[3:6]), list(e[6:9])]

    def __getitem__(self, ij):  # type: ignore[override]
        if isinstance(ij, tuple):
            i, j = ij
            return self.entries[3 * i + j]
        return tuple.__getitem__(self, ij)

    def __mul__(self, o: "Mat3Mod") -> "Mat3Mod":  # type: ignore[override]
        m = self.modulus
        A, B = self.entries, o.entries
        out = tuple(
            sum(A[3 * i + k] * B[3 * k + j] for k in range(3)) % m for i in range(3) for j in range(3)
        )
        return Mat3Mod(out, m)

    def __add__(self, o):  # type: ignore[override]
        return Mat3Mod(tuple((u + v) % self.modulus for u, v in zip(self.entries, o.entries)), self.modulus)

    def apply(self, v) -> tuple[int, int, int]:
        m, e = self.modulus, self.entries
        return tuple(sum(e[3 * i + k] * v[k] for k in range(3)) % m for i in range(3))

    def det(self) -> int:
        a, b, c, d, e, f, g, h, i = self.entries
        return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % self.modulus

    def charpoly(self) -> list[int]:
        """Coefficients of det(T*I - M), ascending: [c0, c1, c2, 1]."""
        a, b, c, d, e, f, g, h, i = self.entries
        m = self.modulus
        tr = a + e + i
        minors = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
        return [(-self.det()) % m, minors % m, (-tr) % m, 1]

    def minimal_poly_degree(self) -> int:
        """Smallest k with I, M, ..., M^k linearly dependent over F_l."""
        powers = [Mat3Mod.identity(self.modulus).entries]
        cur = Mat3Mod.identity(self.modulus)
        for k in range(1, 4):
            cur = cur * self
            powers.append(cur.entries)
            if rank_mod(powers, self.modulus) < len(powers):
                return k
        return 3

    def __repr__(self):
        return f"Mat3Mod({self.rows()}, mod {self.modulus})"


def rank_mod(vectors, p: int) -> int:
    """Rank of a list of vectors over F_p by Gaussian elimination."""
    rows = [[v % p for v in vec] for vec in vectors]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [v * inv % p for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(u - f * w) % p for u, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def conj_rep(A: Mat2Mod, N: int, l: int) -> Mat3Mod:
    """Matrix of X -> A X A^-1 on S(Nl, N) in the gamma coordinates (columns = images of e_i)."""
    _require_divides(l, N)
    Nl = N * l
    if A.modulus != Nl:
        A = Mat2Mod.of(A.a, A.b, A.c, A.d, Nl)
    if A.det() != 1 % Nl:
        raise ValueError(f"{A!r} is not in SL2")
    Ai = A.inverse()
    cols = [gamma_inverse(A * gamma_map(*e, N, l) * Ai, N, l) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    return Mat3Mod.from_rows([[cols[j][i] for j in range(3)] for i in range(3)], l)


M1_ROWS = ((1, -1, 0), (0, 1, 0), (2, -1, 1))
M2_ROWS = ((1, 0, 1), (-2, 1, -1), (0, 0, 1))


class PlaneFl(NamedTuple):
    """The plane n . x = 0 in F_l^3; the covector's first nonzero entry is 1."""

    normal: tuple[int, int, int]
    modulus: int

    def contains(self, v) -> bool:
        return sum(n * x for n, x in zip(self.normal, v)) % self.modulus == 0

    def basis(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        l = self.modulus
        n = self.normal
        piv = next(i for i in range(3) if n[i])
        free = [i for i in range(3) if i != piv]
        out = []
        for f in free:
            v = [0, 0, 0]
            v[f] = 1
            v[piv] = (-n[f]) % l  # n[piv] == 1
            out.append(tuple(v))
        return out[0], out[1]


def all_planes(l: int) -> list[PlaneFl]:
    out = []
    for n in itertools.product(range(l), repeat=3):
        nz = next((v for v in n if v), 0)
        if nz == 1:
            out.append(PlaneFl(n, l))
    return out


def invariant_planes(Ms: Sequence[Mat3Mod], l: int | None = None) -> list[PlaneFl]:
    """Planes of F_l^3 mapped into themselves by every matrix in Ms."""
    if l is None:
        l = Ms[0].modulus
    if not is_prime(l) or l > 13:
        raise ValueError(f"l must be a prime <= 13, got {l}")
    out = []
    for P in all_planes(l):
        u, w = P.basis()
        if all(P.contains(M.apply(u)) and P.contains(M.apply(w)) for M in Ms):
            out.append(P)
    return out


def commutator(g, h):
    return g * h * g.inverse() * h.inverse()


def commutator_subgroup(G: MatGroup, bound: int = CLOSURE_BOUND) -> MatGroup:
    """Derived subgroup of G.

    Computed as the normal closure of the commutators of a generating set,
    which equals the subgroup generated by all commutators [g, h].
    """
    gens = generating_set(G)
    hgens = list(dict.fromkeys(commutator(a, b) for a in gens for b in gens))
    H = closure_subgroup(hgens, identity=G.identity, bound=bound)
    i = 0
    while i < len(hgens):
        x = hgens[i]
        for g in gens:
            y = g * x * g.inverse()
            if y not in H:
                hgens.append(y)
                H = closure_subgroup(hgens, identity=G.identity, bound=bound)
        i += 1
    return MatGroup(G.modulus, frozenset(H), G.identity, tuple(hgens), G.special_linear)


def commutator_subgroup_bruteforce(G: MatGroup, bound: int = CLOSURE_BOUND) -> MatGroup:
    """Closure of every commutator ghg^-1h^-1; quadratic in |G|."""
    comms = {commutator(g, h) for g in G.elements for h in G.elements}
    H = closure_subgroup(comms, identity=G.identity, bound=bound)
    return MatGroup(G.modulus, frozenset(H), G.identity, (), G.special_linear)


def abelianization_order(G: MatGroup) -> int:
    return len(G) // len(commutator_subgroup(G))


def prime_index_normal_exists(G: MatGroup, l: int) -> bool:
    """A normal subgroup of prime index l exists iff l divides |G^ab|."""
    return abelianization_order(G) % l == 0


@dataclass
class KernelDivisibilityReport:
    ab_G: int
    kernel_order: int
    ab_H: int

    @property
    def divides(self) -> bool:
        return (self.kernel_order * self.ab_H) % self.ab_G == 0


def kernel_divisibility_check(G: MatGroup, H: MatGroup, phi: Callable) -> KernelDivisibilityReport:
    """Check |G^ab| divides |ker phi| * |H^ab| for a surjection phi: G -> H."""
    for g in G.elements:
        for h in generating_set(G):
            if phi(g * h) != phi(g) * phi(h):
                raise NotAHomomorphism(f"phi({g!r} * {h!r}) mismatch")
    image = {phi(g) for g in G.elements}
    if image != set(H.elements):
        raise NotSurjective(f"image has {len(image)} of {len(H)} elements")
    kernel = [g for g in G.elements if phi(g) == H.identity]
    return KernelDivisibilityReport(abelianization_order(G), len(kernel), abelianization_order(H))


def reduction_map(N: int) -> Callable[[Mat2Mod], Mat2Mod]:
    return lambda A: A.reduce(N)


@dataclass
class ProductClosureReport:
    m: int
    M: int
    order: int
    full_order: int
    unit_projection_surjective: bool
    matrix_projection_surjective: bool
    membership: dict = field(default_factory=dict)

    @property
    def proper(self) -> bool:
        return self.order < self.full_order


def product_closure_report(m: int, M: int, generators: Sequence[ProductElem], queries=()) -> ProductClosureReport:
    """Close generators inside (Z/mZ)^x × SL2(Z/MZ) and report projections and membership."""
    identity = ProductElem(1 % m, m, Mat2Mod.identity(M))
    elems = closure_subgroup(generators, identity=identity)
    units = {u.value for u in unit_group(m)}
    sl2 = enumerate_sl2(M).elements
    return ProductClosureReport(
        m,
        M,
        len(elems),
        len(units) * len(sl2),
        {e.unit for e in elems} == units,
        {e.matrix for e in elems} == set(sl2),
        {q: q in elems for q in queries},
    )


def remark_generators() -> list[ProductElem]:
    """The two printed generators in (Z/5Z)^x × SL2(Z/2Z)."""
    return [
        ProductElem.of(2, 5, Mat2Mod.of(0, 1, 1, 0, 2)),
        ProductElem.of(1, 5, Mat2Mod.of(1, 1, 0, 1, 2)),
    ]


def remark_query() -> ProductElem:
    return ProductElem.of(1, 5, Mat2Mod.of(0, 1, 1, 0, 2))


def permutation_sign_f2(A: Mat2Mod) -> int:
    """Sign of A acting on the three nonzero vectors of F_2^2."""
    vecs = [(1, 0), (0, 1), (1, 1)]
    perm = [vecs.index(((A.a * x + A.b * y) % 2, (A.c * x + A.d * y) % 2)) for x, y in vecs]
    sign, seen = 1, set()
    for start in range(3):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def goursat_subgroup() -> set[ProductElem]:
    """{(u, A): u is a square mod 5 iff A is an even permutation}: a fiber product over Z/2Z."""
    squares = {1, 4}
    return {
        ProductElem(u.value, 5, A)
        for u in unit_group(5)
        for A in enumerate_sl2(2).elements
        if (u.value in squares) == (permutation_sign_f2(A) == 1)
    }
