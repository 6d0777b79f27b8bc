"""Brute-force oracles.

Deliberately independent of the simplex and double description code: only
exact linear algebra and the polyhedron data types are used.  Everything
here is exponential and meant for desk-scale instances (about a dozen
constraints).
"""

from __future__ import annotations

import itertools
from typing import Sequence

from gmpy2 import mpq

from .polyhedron import Polyhedron
from .rational import Vector, dot, neg, rank, solve, sub, vector, zeros


def oracle_vertices(p: Polyhedron) -> list[Vector]:
    """Vertices of a bounded polyhedron by trying every ``dim``-subset of constraints."""
    if p.empty:
        return []
    n = p.dim
    hs = p.halfspaces
    found = set()
    for idx in itertools.combinations(range(len(hs)), n):
        m = [hs[i].normal for i in idx]
        if rank(m) < n:
            continue
        w = solve(m, [hs[i].offset for i in idx])
        if w is not None and p.contains_point(w):
            found.add(w)
    return sorted(found)


def _interval_rows(inequalities: Sequence[Vector], lo: Vector, hi: Vector):
    for a in inequalities:
        yield a, dot(a, lo)
        yield neg(a), -dot(a, hi)


def oracle_order_interval(inequalities: Sequence[Vector], lo: Sequence, hi: Sequence) -> Polyhedron:
    lo, hi = vector(lo), vector(hi)
    return Polyhedron.build(len(lo), _interval_rows(inequalities, lo, hi))


def oracle_singleton_zero(p: Polyhedron) -> bool:
    """A bounded polyhedron is ``{0}`` iff its only vertex is 0."""
    return oracle_vertices(p) == [zeros(p.dim)]


def oracle_d_disjoint(s, x: Sequence, y: Sequence) -> bool:
    x, y = vector(x), vector(y)
    n = len(x)
    rows = list(_interval_rows(s.inequalities, zeros(n), x))
    rows += [(neg(a), -dot(a, y)) for a in s.inequalities]
    return oracle_singleton_zero(Polyhedron.build(n, rows))


def oracle_is_atom(s, x: Sequence) -> bool:
    x = vector(x)
    verts = oracle_vertices(oracle_order_interval(s.inequalities, zeros(len(x)), x))
    return all(rank([w, x]) == 1 or not any(w) for w in verts)


def oracle_sup_scaling_bracket(s, a: Sequence, x: Sequence, steps: int = 16) -> tuple[mpq, mpq]:
    """Grid bracket ``lo <= max{c : c a <= x} < hi`` with ``hi - lo = 1/steps``.

    Sweeps ``c = k/steps`` upward; feasibility of ``c`` is checked directly
    on the facet inequalities.
    """
    a, x = vector(a), vector(x)

    def ok(c):
        w = sub(x, tuple(c * ai for ai in a))
        return all(dot(r, w) >= 0 for r in s.inequalities)

    if not ok(mpq(0)):
        raise ValueError("c = 0 infeasible: x is not positive")
    top = mpq(1)
    while ok(top):
        top *= 2
        if top > 2 ** 40:
            raise ValueError("no finite bracket: a is not a nonzero positive element")
    k = 0
    while ok(mpq(k + 1, steps)):
        k += 1
    return mpq(k, steps), mpq(k + 1, steps)
