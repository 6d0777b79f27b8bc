"""Disjointness, the symmetric-interval condition and D-disjointness.

For positive ``x, y`` the three relations form a chain::

    perp(x, y)  =>  sym_interval_disjoint(x, y)  =>  d_disjoint(x, y)

and none of the arrows reverses in general.  Every verdict carries a
witness that is re-checked exactly before it is handed out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cone import OrderedSpace, member
from .errors import CertificateError
from .lp import LpSolver, Unbounded, escape_point, find_point
from .order import down_set, leq, maximal_lower_bound, order_interval, up_set
from .polyhedron import Polyhedron
from .rational import Vector, add, format_vector, is_zero, neg, sub, unit, vector, zeros

PERP = "perp"
SYM = "symmetric_interval"
D = "d_disjoint"


@dataclass(frozen=True)
class DisjointnessVerdict:
    """Outcome of one disjointness test.

    ``witness`` is set on false verdicts: a nonzero common point for
    ``d_disjoint``/``symmetric_interval``, a point in exactly one of the two
    upper-bound sets for ``perp``.  ``optima`` lists the LP optima checked
    on a true verdict as ``(label, value)`` pairs.
    """

    kind: str
    result: bool
    witness: Optional[Vector] = None
    witness_side: Optional[str] = None
    optima: tuple = ()

    def __bool__(self) -> bool:
        return self.result


def _singleton_zero_verdict(kind: str, p: Polyhedron, check) -> DisjointnessVerdict:
    """Decide ``p == {0}`` for a polyhedron known to contain 0."""
    solver = LpSolver(p)
    if not solver.feasible:
        raise CertificateError(f"{kind}: intersection unexpectedly empty")
    optima = []
    for i in range(p.dim):
        e = unit(p.dim, i)
        for sense in ("max", "min"):
            out = solver.optimize(e, sense)
            if isinstance(out, Unbounded):
                raise CertificateError(f"{kind}: order interval is unbounded")
            if out.value != 0:
                w = out.point
                if is_zero(w) or not p.contains_point(w) or not check(w):
                    raise CertificateError(f"{kind}: witness {format_vector(w)} failed re-check")
                return DisjointnessVerdict(kind, False, witness=w)
            optima.append((f"{sense} w{i + 1}", out.value))
    return DisjointnessVerdict(kind, True, optima=tuple(optima))


def _positive_pair(s: OrderedSpace, x, y) -> tuple[Vector, Vector]:
    x, y = vector(x), vector(y)
    s.require_positive(x, "x")
    s.require_positive(y, "y")
    return x, y


def d_disjoint(s: OrderedSpace, x: Sequence, y: Sequence) -> DisjointnessVerdict:
    """``[0, x] ∩ [0, y] == {0}`` for ``x, y >= 0``."""
    x, y = _positive_pair(s, x, y)
    p = order_interval(s, zeros(s.dim), x).body & down_set(s, y)

    def check(w):
        return member(s, w) and leq(s, w, x) and leq(s, w, y)

    return _singleton_zero_verdict(D, p, check)


def sym_interval_disjoint(s: OrderedSpace, x: Sequence, y: Sequence) -> DisjointnessVerdict:
    """``[-x, x] ∩ [-y, y] == {0}`` for ``x, y >= 0``."""
    x, y = _positive_pair(s, x, y)
    p = order_interval(s, neg(x), x).body & order_interval(s, neg(y), y).body

    def check(w):
        return all(leq(s, neg(b), w) and leq(s, w, b) for b in (x, y))

    return _singleton_zero_verdict(SYM, p, check)


def perp(s: OrderedSpace, x: Sequence, y: Sequence) -> DisjointnessVerdict:
    """``{x+y, -(x+y)}`` and ``{x-y, y-x}`` have the same nonempty upper bounds.

    Arguments need not be positive.  Equality of the two bound sets is
    decided by mutual containment of their H-representations.
    """
    x, y = vector(x), vector(y)
    s.check_dim(x, y)
    plus, minus = add(x, y), sub(x, y)
    a_up = up_set(s, plus) & up_set(s, neg(plus))
    b_up = up_set(s, minus) & up_set(s, neg(minus))

    def in_a(w):
        return leq(s, plus, w) and leq(s, neg(plus), w)

    def in_b(w):
        return leq(s, minus, w) and leq(s, neg(minus), w)

    for body, name in ((a_up, "A"), (b_up, "B")):
        w = find_point(body)
        if w is None:
            return DisjointnessVerdict(PERP, False, witness_side=f"{name}^U empty")
    for outer, inner, in_inner, in_outer, side in (
        (a_up, b_up, in_b, in_a, "in B^U, not in A^U"),
        (b_up, a_up, in_a, in_b, "in A^U, not in B^U"),
    ):
        w = escape_point(outer, inner)
        if w is not None:
            if not in_inner(w) or in_outer(w):
                raise CertificateError(f"perp: witness {format_vector(w)} failed re-check")
            return DisjointnessVerdict(PERP, False, witness=w, witness_side=side)
    return DisjointnessVerdict(PERP, True)


def make_d_disjoint_pair(s: OrderedSpace, x: Sequence, y: Sequence) -> tuple[Vector, Vector]:
    """``(x - z, y - z)`` for a maximal lower bound ``z`` of ``{x, y}``.

    Translating by ``-z`` moves ``z`` to 0, which is then maximal among the
    lower bounds of the new pair; the pair is therefore D-disjoint.
    """
    x, y = vector(x), vector(y)
    s.check_dim(x, y)
    z = maximal_lower_bound(s, x, y)
    u, v = sub(x, z), sub(y, z)
    if not d_disjoint(s, u, v).result:
        raise CertificateError("translated pair is not D-disjoint")
    return u, v
