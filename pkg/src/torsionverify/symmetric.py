"""Rewriting symmetric polynomials in elementary symmetric ones (Gauss's algorithm)."""

from __future__ import annotations

from itertools import combinations

from .errors import NotSymmetric
from .poly import MultiPoly, PolyRing


def elementary_symmetric(ring: PolyRing, k: int, names=None) -> MultiPoly:
    """e_k in the listed variables (all of the ring's variables by default)."""
    names = ring.vars if names is None else names
    gens = [ring.gen(v) for v in names]
    if k == 0:
        return ring.one
    total = ring.zero
    for combo in combinations(gens, k):
        term = ring.one
        for g in combo:
            term = term * g
        total = total + term
    return total


def _permute(q: MultiPoly, perm: tuple) -> MultiPoly:
    ring = q.ring
    out = {}
    for k, c in q.terms.items():
        exps = ring.unpack(k)
        out[ring.pack(exps[perm[i]] for i in range(len(exps)))] = c
    return MultiPoly(ring, out)


def is_symmetric(q: MultiPoly) -> bool:
    n = q.ring.nvars
    # adjacent transpositions generate the symmetric group
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        if _permute(q, tuple(perm)) != q:
            return False
    return True


def symmetric_reduce(q: MultiPoly, e_names=None) -> MultiPoly:
    """Express q in F_p[alpha_1..alpha_m] as a polynomial in e_1..e_m.

    Repeatedly strips the lex-leading term c*alpha^d by subtracting
    c * e_1^(d1-d2) * ... * e_m^(dm).
    """
    ring = q.ring
    m = ring.nvars
    if not is_symmetric(q):
        raise NotSymmetric(f"{q} is not symmetric in {ring.vars}")
    e_names = tuple(e_names) if e_names is not None else tuple(f"e{i}" for i in range(1, m + 1))
    target = PolyRing(ring.p, e_names)
    elem = [elementary_symmetric(ring, k) for k in range(1, m + 1)]
    out = {}
    rest = q
    while rest:
        d, c = rest.leading_term()
        powers = [d[i] - d[i + 1] for i in range(m - 1)] + [d[m - 1]]
        term = ring(c)
        for e, k in zip(elem, powers):
            if k:
                term = term * e**k
        rest = rest - term
        key = target.pack(powers)
        out[key] = (out.get(key, 0) + c) % ring.p
    return MultiPoly._clean(target, out)
