"""Halfspaces and H-represented polyhedra.

This module only holds data; the solvers live in :mod:`ordercone.lp`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from gmpy2 import mpq

from .rational import Vector, dot, is_zero, primitive, to_rational, vector


class EmptyHalfspace(ValueError):
    """A zero normal with a positive offset describes the empty set."""


@dataclass(frozen=True)
class Halfspace:
    """``{w : normal . w >= offset}``, normal rescaled to a primitive integer vector."""

    normal: Vector
    offset: mpq

    def __post_init__(self):
        normal = vector(self.normal)
        offset = to_rational(self.offset)
        if is_zero(normal):
            if offset > 0:
                raise EmptyHalfspace("0 >= positive offset")
        else:
            prim = primitive(normal)
            # positive factor k with normal = k * prim
            k = next(a / b for a, b in zip(normal, prim) if b)
            normal = tuple(mpq(a) for a in prim)
            offset = offset / k
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "offset", offset)

    @property
    def dim(self) -> int:
        return len(self.normal)

    @property
    def trivial(self) -> bool:
        return is_zero(self.normal)

    def slack(self, w: Sequence) -> mpq:
        return dot(self.normal, w) - self.offset

    def holds(self, w: Sequence) -> bool:
        return self.slack(w) >= 0


@dataclass(frozen=True)
class Polyhedron:
    """Finite intersection of closed halfspaces in ``Q^dim``.

    Use :meth:`build` to construct one from raw ``(normal, offset)`` rows:
    trivial rows are dropped, parallel rows merged (keeping the tightest
    offset), and an unsatisfiable trivial row marks the polyhedron empty.
    """

    dim: int
    halfspaces: tuple[Halfspace, ...] = ()
    empty: bool = field(default=False)

    def __post_init__(self):
        for h in self.halfspaces:
            if h.dim != self.dim:
                raise ValueError(f"halfspace of dim {h.dim} in polyhedron of dim {self.dim}")

    @classmethod
    def build(cls, dim: int, rows: Iterable[tuple[Sequence, object]]) -> "Polyhedron":
        tightest: dict[Vector, mpq] = {}
        empty = False
        for normal, offset in rows:
            normal = vector(normal)
            offset = to_rational(offset)
            if len(normal) != dim:
                raise ValueError(f"normal of dim {len(normal)} in polyhedron of dim {dim}")
            if is_zero(normal):
                if offset > 0:
                    empty = True
                continue
            h = Halfspace(normal, offset)
            prev = tightest.get(h.normal)
            if prev is None or h.offset > prev:
                tightest[h.normal] = h.offset
        halfspaces = tuple(Halfspace(n, o) for n, o in tightest.items())
        return cls(dim, halfspaces, empty)

    @classmethod
    def from_halfspaces(cls, dim: int, halfspaces: Iterable[Halfspace]) -> "Polyhedron":
        return cls.build(dim, ((h.normal, h.offset) for h in halfspaces))

    def __and__(self, other: "Polyhedron") -> "Polyhedron":
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        p = Polyhedron.from_halfspaces(self.dim, self.halfspaces + other.halfspaces)
        if self.empty or other.empty:
            return Polyhedron(p.dim, p.halfspaces, True)
        return p

    def translate(self, t: Sequence) -> "Polyhedron":
        """The set ``self + t``."""
        rows = [(h.normal, h.offset + dot(h.normal, t)) for h in self.halfspaces]
        p = Polyhedron.build(self.dim, rows)
        return Polyhedron(p.dim, p.halfspaces, self.empty)

    def contains_point(self, w: Sequence) -> bool:
        if self.empty:
            return False
        return all(h.holds(w) for h in self.halfspaces)

    def violated(self, w: Sequence) -> list[int]:
        return [i for i, h in enumerate(self.halfspaces) if not h.holds(w)]

    def normals(self) -> list[Vector]:
        return [h.normal for h in self.halfspaces]

    def offsets(self) -> list[mpq]:
        return [h.offset for h in self.halfspaces]


def box(lo: Sequence, hi: Sequence) -> Polyhedron:
    """Axis-aligned box ``lo <= w <= hi``."""
    n = len(lo)
    rows = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        rows.append((e, lo[i]))
        rows.append(([-a for a in e], -to_rational(hi[i])))
    return Polyhedron.build(n, rows)
