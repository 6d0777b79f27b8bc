"""Order comparisons, order intervals, bound sets and maximal lower bounds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cone import OrderedSpace, member
from .errors import CertificateError, NotALowerBound
from .lp import Optimal, is_singleton_zero, solve_lp
from .polyhedron import Polyhedron
from .rational import Vector, dot, format_vector, neg, sub, vector, zeros


def leq(s: OrderedSpace, x: Sequence, y: Sequence) -> bool:
    """``x <= y``, i.e. ``y - x`` lies in the positive cone."""
    s.check_dim(x, y)
    return member(s, sub(vector(y), vector(x)))


def up_set(s: OrderedSpace, x: Sequence) -> Polyhedron:
    """``x + V_p``."""
    x = vector(x)
    return Polyhedron.build(s.dim, ((a, dot(a, x)) for a in s.inequalities))


def down_set(s: OrderedSpace, x: Sequence) -> Polyhedron:
    """``x - V_p``."""
    x = vector(x)
    return Polyhedron.build(s.dim, ((neg(a), -dot(a, x)) for a in s.inequalities))


@dataclass(frozen=True)
class OrderInterval:
    space: OrderedSpace
    lo: Vector
    hi: Vector
    body: Polyhedron


def order_interval(s: OrderedSpace, lo: Sequence, hi: Sequence) -> OrderInterval:
    """``[lo, hi] = {w : lo <= w <= hi}``; bounded because the cone is pointed."""
    lo, hi = vector(lo), vector(hi)
    s.check_dim(lo, hi)
    return OrderInterval(s, lo, hi, up_set(s, lo) & down_set(s, hi))


@dataclass(frozen=True)
class BoundSet:
    space: OrderedSpace
    points: tuple[Vector, ...]
    kind: str  # "upper" or "lower"
    body: Polyhedron


def _bound_set(s: OrderedSpace, points, kind: str) -> BoundSet:
    points = tuple(vector(p) for p in points)
    if not points:
        raise ValueError("bound set of no points")
    s.check_dim(*points)
    make = up_set if kind == "upper" else down_set
    body = make(s, points[0])
    for p in points[1:]:
        body = body & make(s, p)
    return BoundSet(s, points, kind, body)


def upper_bound_set(s: OrderedSpace, *points: Sequence) -> BoundSet:
    """``{points}^U``: intersection of the translated cones ``p + V_p``."""
    return _bound_set(s, points, "upper")


def lower_bound_set(s: OrderedSpace, *points: Sequence) -> BoundSet:
    """``{points}^L``: intersection of the translated cones ``p - V_p``."""
    return _bound_set(s, points, "lower")


def maximal_lower_bound(
    s: OrderedSpace, x: Sequence, y: Sequence, above: Optional[Sequence] = None
) -> Vector:
    """A maximal element of ``{x, y}^L``, at or above ``above`` when given.

    Maximizes the strict functional ``f``: if ``w >= z`` were another lower
    bound then ``f(w - z) > 0`` unless ``w = z``, so the maximizer is maximal.
    Which maximal element comes back depends on ``f`` and the pivoting rule.
    """
    body = lower_bound_set(s, x, y).body
    if above is not None:
        above = vector(above)
        s.check_dim(above)
        if not (leq(s, above, x) and leq(s, above, y)):
            raise NotALowerBound(f"{format_vector(above)} is not a lower bound of the pair")
        body = body & up_set(s, above)
    out = solve_lp(s.strict_functional, body, "max")
    if not isinstance(out, Optimal):
        raise CertificateError(f"maximizing the strict functional gave {out}")
    return out.point


def is_maximal_lower_bound(s: OrderedSpace, x: Sequence, y: Sequence, z: Sequence) -> bool:
    """``z`` is a lower bound of ``{x, y}`` and no other lower bound lies above it."""
    x, y, z = vector(x), vector(y), vector(z)
    if not (leq(s, z, x) and leq(s, z, y)):
        return False
    # ({x,y}^L ∩ (z + V_p)) - z  ==  [0, x - z] ∩ [0, y - z]
    return is_singleton_zero(order_interval(s, zeros(s.dim), sub(x, z)).body
                             & down_set(s, sub(y, z)))


def minimal_upper_bound(
    s: OrderedSpace, x: Sequence, y: Sequence, below: Optional[Sequence] = None
) -> Vector:
    """A minimal element of ``{x, y}^U`` (mirror of :func:`maximal_lower_bound`)."""
    x, y = vector(x), vector(y)
    b = None if below is None else neg(vector(below))
    return neg(maximal_lower_bound(s, neg(x), neg(y), b))


def is_minimal_upper_bound(s: OrderedSpace, x: Sequence, y: Sequence, z: Sequence) -> bool:
    x, y, z = vector(x), vector(y), vector(z)
    if not (leq(s, x, z) and leq(s, y, z)):
        return False
    return is_singleton_zero(order_interval(s, zeros(s.dim), sub(z, x)).body
                             & down_set(s, sub(z, y)))
