import random

import pytest

from torsionverify.errors import NotSymmetric
from torsionverify.poly import PolyRing
from torsionverify.symmetric import elementary_symmetric, is_symmetric, symmetric_reduce


def test_examples():
    R = PolyRing(13, ("a1", "a2"))
    a1, a2 = R.gens()
    E = PolyRing(13, ("e1", "e2"))
    e1, e2 = E.gens()
    assert symmetric_reduce(a1 + a2) == e1
    assert symmetric_reduce(a1**2 + a2**2) == e1**2 - 2 * e2
    with pytest.raises(NotSymmetric):
        symmetric_reduce(a1)


def random_symmetric(R, rng):
    """Symmetrise a random polynomial by summing over all its variable permutations."""
    import itertools

    names = R.vars
    f = R.zero
    for _ in range(rng.randint(1, 3)):
        term = R(rng.randrange(1, R.p))
        for v in names:
            term = term * R.gen(v) ** rng.randint(0, 3)
        f = f + term
    out = R.zero
    for perm in itertools.permutations(names):
        out = out + f.substitute(dict(zip(names, (R.gen(v) for v in perm))), R)
    return out


@pytest.mark.parametrize("seed", range(50))
def test_round_trip(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 4)
    R = PolyRing(rng.choice([5, 7, 13]), tuple(f"a{i}" for i in range(1, m + 1)))
    q = random_symmetric(R, rng)
    assert is_symmetric(q)
    reduced = symmetric_reduce(q)
    values = {f"e{k}": elementary_symmetric(R, k) for k in range(1, m + 1)}
    assert reduced.substitute(values, R) == q
