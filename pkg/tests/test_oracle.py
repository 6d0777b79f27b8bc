import random

from ordercone.corpus import (
    InstanceSpec,
    corpus,
    manifest,
    pinned_space,
    random_positive,
    random_space,
)
from ordercone.discrete import is_atom, sup_scaling
from ordercone.disjoint import d_disjoint
from ordercone.lp import enumerate_vertices
from ordercone.oracle import (
    oracle_d_disjoint,
    oracle_is_atom,
    oracle_order_interval,
    oracle_sup_scaling_bracket,
    oracle_vertices,
)
from ordercone.order import order_interval
from ordercone.polyhedron import Polyhedron, box
from ordercone.rational import zeros

from conftest import V1, V2


def test_oracle_is_independent():
    import ordercone.oracle as o
    src = open(o.__file__).read()
    assert "from .lp" not in src and "from .dd" not in src


def test_oracle_examples(ex, orth2):
    assert oracle_vertices(box((0, 0), (1, 1))) == enumerate_vertices(box((0, 0), (1, 1)))
    assert oracle_vertices(Polyhedron.build(1, [((1,), 1), ((-1,), 0)])) == []
    assert oracle_d_disjoint(ex, V1, V2)
    assert not oracle_d_disjoint(orth2, (1, 1), (1, 0))


def test_determinism():
    spec = InstanceSpec(3, 5, 2, 77)
    a, b = random_space(spec), random_space(spec)
    assert a == b


def test_random_spaces_are_admitted():
    for seed in range(300):
        s = random_space(InstanceSpec(2 + seed % 4, 2 + seed % 4 + seed % 3, 3, seed))
        assert s.pointed and s.generating


def test_unit_coefficients_give_simplicial_cone():
    s = random_space(InstanceSpec(2, 2, 1, 5))
    # entries in {-1,0,1}: two generators spanning the plane give a simplicial cone
    assert len(s.generators) == 2 and len(s.inequalities) == 2


def test_manifest_pins():
    names = [e["name"] for e in manifest()["pinned"]]
    assert {"ex_discrete", "orthant2", "orthant3", "orthant4"} <= set(names)
    assert set(pinned_space("ex_discrete").generators) == {(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)}
    assert [n for n, _ in corpus()] == [n for n, _ in corpus()]


def test_oracle_agreement_on_corpus():
    rng = random.Random(41)
    for name, s in corpus():
        if 2 * len(s.inequalities) > 12:
            continue
        for _ in range(3):
            x, y = random_positive(s, rng), random_positive(s, rng)
            p = order_interval(s, zeros(s.dim), x).body
            assert enumerate_vertices(p) == oracle_vertices(p)
            assert set(oracle_order_interval(s.inequalities, zeros(s.dim), x).halfspaces) == set(p.halfspaces)
            assert d_disjoint(s, x, y).result == oracle_d_disjoint(s, x, y)
            assert is_atom(s, x) == oracle_is_atom(s, x)


def test_sup_scaling_bracket():
    rng = random.Random(42)
    for name, s in corpus():
        for _ in range(3):
            a, x = random_positive(s, rng), random_positive(s, rng)
            lo, hi = oracle_sup_scaling_bracket(s, a, x)
            assert lo <= sup_scaling(s, a, x) < hi
