import random

import pytest
from gmpy2 import mpq

from ordercone.cone import orthant
from ordercone.corpus import InstanceSpec, random_positive, random_space, random_vector
from ordercone.disjoint import d_disjoint, make_d_disjoint_pair, perp, sym_interval_disjoint
from ordercone.errors import NotPositive
from ordercone.order import is_maximal_lower_bound, leq
from ordercone.rational import is_zero, scale, zeros

from conftest import V1, V2


def spaces(n, seed):
    rng = random.Random(seed)
    for i in range(n):
        dim = rng.randint(2, 4)
        yield random_space(InstanceSpec(dim, dim + rng.randint(0, 2), 2, seed + i))


def test_d_disjoint_examples(ex, orth2):
    assert d_disjoint(orth2, (1, 0), (0, 1)).result
    assert d_disjoint(ex, V1, V2).result
    v = d_disjoint(orth2, (1, 1), (1, 0))
    assert not v and v.witness == (1, 0)


def test_sym_examples(orth2, ex):
    assert sym_interval_disjoint(orth2, (1, 0), (0, 1)).result
    assert sym_interval_disjoint(ex, zeros(3), (1, 1, 2)).result
    assert sym_interval_disjoint(ex, V1, V2).result


def test_perp_examples(orth2, ex):
    assert perp(orth2, (1, 0), (0, 1)).result
    assert perp(ex, (1, -1, 3), zeros(3)).result
    v = perp(ex, V1, V2)
    assert not v
    assert v.witness is not None and v.witness_side


def test_positivity_required(orth2):
    with pytest.raises(NotPositive):
        d_disjoint(orth2, (1, -1), (0, 1))
    with pytest.raises(NotPositive):
        sym_interval_disjoint(orth2, (1, 0), (0, -1))
    # perp takes arbitrary vectors
    assert perp(orth2, (1, -1), (1, 1)).result is not None


def test_make_pair_examples(orth2, ex):
    assert make_d_disjoint_pair(orth2, (2, 1), (1, 3)) == ((1, 0), (0, 2))
    assert make_d_disjoint_pair(ex, V1, V2) == (V1, V2)


def test_make_pair_random():
    rng = random.Random(21)
    n = 0
    for s in spaces(40, 2100):
        for _ in range(25):
            x, y = random_vector(s.dim, rng), random_vector(s.dim, rng)
            if leq(s, x, y) or leq(s, y, x):
                continue
            u, v = make_d_disjoint_pair(s, x, y)
            assert d_disjoint(s, u, v).result
            assert not is_zero(u) and not is_zero(v)
            n += 1
    assert n >= 500


def test_chain_symmetry_and_scaling():
    rng = random.Random(22)
    for s in spaces(30, 2200):
        for _ in range(5):
            x, y = random_positive(s, rng), random_positive(s, rng)
            p, q, d = perp(s, x, y).result, sym_interval_disjoint(s, x, y).result, d_disjoint(s, x, y).result
            assert (not p or q) and (not q or d)
            assert p == perp(s, y, x).result
            assert q == sym_interval_disjoint(s, y, x).result
            assert d == d_disjoint(s, y, x).result
            for a in (mpq(1, 2), mpq(1), mpq(3)):
                assert d_disjoint(s, scale(a, x), scale(a, y)).result == d
            assert d == is_maximal_lower_bound(s, x, y, zeros(s.dim))


def test_chain_on_faces():
    # pairs of extreme rays hit the disjoint cases far more often than random interior points
    for s in spaces(30, 2300):
        g = s.generators
        for i in range(len(g)):
            for j in range(i + 1, len(g)):
                p = perp(s, g[i], g[j]).result
                d = d_disjoint(s, g[i], g[j]).result
                assert not p or sym_interval_disjoint(s, g[i], g[j]).result
                assert not p or d


def test_lattice_collapse():
    rng = random.Random(23)
    for n in (2, 3, 4):
        s = orthant(n)
        for _ in range(30):
            x = tuple(rng.choice((0, 0, 1, 2)) for _ in range(n))
            y = tuple(rng.choice((0, 0, 1, 2)) for _ in range(n))
            r = {perp(s, x, y).result, sym_interval_disjoint(s, x, y).result, d_disjoint(s, x, y).result}
            assert len(r) == 1
