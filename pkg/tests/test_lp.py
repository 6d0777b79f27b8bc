import itertools
import random

import pytest
from gmpy2 import mpq

from ordercone.lp import (
    Infeasible,
    LpSolver,
    Optimal,
    PolyhedronUnbounded,
    Unbounded,
    contains,
    enumerate_vertices,
    escape_point,
    is_singleton_zero,
    remove_redundant,
    solve_lp,
)
from ordercone.oracle import oracle_order_interval, oracle_singleton_zero, oracle_vertices
from ordercone.order import order_interval
from ordercone.polyhedron import EmptyHalfspace, Halfspace, Polyhedron, box
from ordercone.rational import add, dot, scale, zeros

SQUARE = box((0, 0), (1, 1))


def random_polytope(rng, dim, extra):
    rows = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        rows.append((tuple(e), -rng.randint(1, 3)))
        rows.append((tuple(-x for x in e), -rng.randint(1, 3)))
    for _ in range(extra):
        rows.append((tuple(rng.randint(-3, 3) for _ in range(dim)), rng.randint(-4, 1)))
    return Polyhedron.build(dim, rows)


def test_halfspace_canonical():
    h = Halfspace((mpq(2), mpq(4)), mpq(1))
    assert h.normal == (1, 2) and h.offset == mpq(1, 2)
    with pytest.raises(EmptyHalfspace):
        Halfspace((0, 0), 1)


def test_polyhedron_build_drops_and_flags():
    p = Polyhedron.build(2, [((0, 0), -1), ((1, 0), 0), ((2, 0), 1)])
    assert len(p.halfspaces) == 1 and p.halfspaces[0].offset == mpq(1, 2)
    assert Polyhedron.build(2, [((0, 0), 1)]).empty


def test_lp_examples():
    p = Polyhedron.build(2, [((1, 0), 0), ((0, 1), 0), ((-1, -1), -1)])
    out = solve_lp((1, 0), p, "max")
    assert out == Optimal(1, (1, 0))
    assert isinstance(solve_lp((1,), Polyhedron.build(1, [((1,), 0)]), "max"), Unbounded)
    out = solve_lp((1,), Polyhedron.build(1, [((1,), 1), ((-1,), 0)]))
    assert isinstance(out, Infeasible) and out.farkas_certificate == (1, 1)


def _check_outcome(p, c, sense, out, samples):
    sign = 1 if sense == "max" else -1
    if isinstance(out, Optimal):
        assert p.contains_point(out.point)
        assert dot(c, out.point) == out.value
        for w in samples:
            assert sign * dot(c, w) <= sign * out.value
    elif isinstance(out, Unbounded):
        assert p.contains_point(out.feasible_point)
        assert sign * dot(c, out.ray) > 0
        for h in p.halfspaces:
            assert dot(h.normal, out.ray) >= 0
    else:
        y = out.farkas_certificate
        assert all(v >= 0 for v in y)
        combo = zeros(p.dim)
        for v, h in zip(y, p.halfspaces):
            combo = add(combo, scale(v, h.normal))
        assert combo == zeros(p.dim)
        assert sum(v * h.offset for v, h in zip(y, p.halfspaces)) > 0


def test_certificate_soundness():
    rng = random.Random(7)
    seen = set()
    for _ in range(300):
        dim = rng.randint(1, 4)
        rows = [(tuple(rng.randint(-3, 3) for _ in range(dim)), rng.randint(-3, 3))
                for _ in range(rng.randint(1, 7))]
        p = Polyhedron.build(dim, rows)
        if p.empty:
            continue
        samples = [w for w in itertools.product(range(-3, 4), repeat=dim) if p.contains_point(w)]
        c = tuple(rng.randint(-2, 2) for _ in range(dim))
        for sense in ("max", "min"):
            out = solve_lp(c, p, sense)
            seen.add(type(out).__name__)
            _check_outcome(p, c, sense, out, samples)
    assert seen == {"Optimal", "Unbounded", "Infeasible"}


def test_solver_reuse_matches_fresh():
    rng = random.Random(3)
    p = random_polytope(rng, 3, 4)
    solver = LpSolver(p)
    for _ in range(20):
        c = tuple(rng.randint(-3, 3) for _ in range(3))
        assert solver.optimize(c, "max").value == solve_lp(c, p, "max").value


def test_free_variables_handled():
    # optimum away from the origin with negative coordinates
    p = Polyhedron.build(2, [((1, 0), -5), ((-1, 0), 3), ((0, 1), -2), ((0, -1), -1)])
    assert solve_lp((1, 1), p, "min") == Optimal(-7, (-5, -2))


def test_enumerate_vertices_examples(ex):
    assert enumerate_vertices(SQUARE) == sorted([(0, 0), (0, 1), (1, 0), (1, 1)])
    assert enumerate_vertices(Polyhedron.build(1, [((1,), 1), ((-1,), 0)])) == []
    verts = enumerate_vertices(order_interval(ex, (0, 0, 0), (1, 1, 2)).body)
    assert sorted(verts) == sorted([(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 2)])


def test_enumerate_vertices_unbounded():
    with pytest.raises(PolyhedronUnbounded):
        enumerate_vertices(Polyhedron.build(2, [((1, 0), 0), ((0, 1), 0)]))


def test_vertices_match_oracle():
    rng = random.Random(11)
    for _ in range(120):
        p = random_polytope(rng, rng.randint(1, 3), rng.randint(0, 4))
        assert enumerate_vertices(p) == oracle_vertices(p)


def test_singleton_zero(ex, orth2):
    assert is_singleton_zero(Polyhedron.build(2, [((1, 0), 0), ((0, 1), 0), ((-1, 0), 0), ((0, -1), 0)]))
    assert not is_singleton_zero(order_interval(orth2, (0, 0), (1, 0)).body)
    p = order_interval(ex, (0, 0, 0), (1, 0, 1)).body & order_interval(ex, (0, 0, 0), (0, 1, 1)).body
    assert is_singleton_zero(p)
    assert not is_singleton_zero(box((1, 1), (2, 2)))


def test_singleton_zero_matches_oracle(ex):
    rng = random.Random(5)
    for _ in range(60):
        x = tuple(rng.randint(0, 2) for _ in range(2))
        y = tuple(rng.randint(0, 2) for _ in range(2))
        ineqs = [(1, 0), (0, 1)]
        p = oracle_order_interval(ineqs, (0, 0), x) & oracle_order_interval(ineqs, (0, 0), y)
        assert is_singleton_zero(p) == oracle_singleton_zero(p)


def test_contains_examples():
    rng = random.Random(9)
    for _ in range(20):
        p = random_polytope(rng, 2, 3)
        assert contains(p, p)
    assert contains(Polyhedron.build(2, [((1, 0), 0)]), SQUARE)
    assert not contains(SQUARE, Polyhedron.build(2, [((1, 0), 0)]))
    assert contains(SQUARE, Polyhedron.build(2, [((0, 0), 1)]))


def test_escape_point_is_a_real_witness():
    outer = box((0, 0), (1, 1))
    inner = box((0, 0), (2, 1))
    w = escape_point(outer, inner)
    assert inner.contains_point(w) and not outer.contains_point(w)
    assert escape_point(inner, outer) is None


def test_equality_is_an_equivalence():
    rng = random.Random(13)
    ps = [random_polytope(rng, 2, 2) for _ in range(6)]
    ps += [remove_redundant(p) for p in ps]

    def eq(a, b):
        return contains(a, b) and contains(b, a)

    for a in ps:
        assert eq(a, a)
        for b in ps:
            assert eq(a, b) == eq(b, a)
            for c in ps:
                if eq(a, b) and eq(b, c):
                    assert eq(a, c)
    for p in ps[:6]:
        assert eq(p, remove_redundant(p))
