"""Polyhedral positive cones and the ordered spaces they define.

A space is admitted only when its cone is closed (automatic for a finite
system of non-strict inequalities), pointed and generating.  For such a
cone the order is Archimedean and directed, hence pre-Riesz; those two flags
are set from that implication rather than tested per instance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from gmpy2 import mpq

from . import dd
from .errors import (
    CertificateError,
    DimensionMismatch,
    InconsistentReps,
    InputError,
    NotGenerating,
    NotPointed,
    NotPositive,
)
from .lp import Optimal, find_point, solve_lp
from .polyhedron import Polyhedron
from .rational import (
    Vector,
    dot,
    format_vector,
    is_zero,
    nullspace_basis,
    primitive,
    rank,
    to_rational,
    vector,
)

ARCHIMEDEAN_REASON = "closed cone in finite dimension => Archimedean"
PRE_RIESZ_REASON = "directed Archimedean ⇒ pre-Riesz"


@dataclass(frozen=True)
class ConeRep:
    """A cone given by generators, inequalities ``a . w >= 0``, or both."""

    dim: int
    generators: Optional[tuple[Vector, ...]] = None
    inequalities: Optional[tuple[Vector, ...]] = None

    def __post_init__(self):
        if self.generators is None and self.inequalities is None:
            raise InputError("a cone needs generators, inequalities or both")
        if self.dim < 1:
            raise InputError("dim must be at least 1")
        for name in ("generators", "inequalities"):
            rows = getattr(self, name)
            if rows is None:
                continue
            rows = tuple(vector(r) for r in rows)
            for r in rows:
                if len(r) != self.dim:
                    raise DimensionMismatch(
                        f"{name[:-1]} {format_vector(r)} has length {len(r)}, expected {self.dim}"
                    )
            object.__setattr__(self, name, rows)
        if self.generators is not None and any(is_zero(g) for g in self.generators):
            raise InputError("generators must be nonzero")


@dataclass(frozen=True)
class OrderedSpace:
    """``(Q^dim, <=)`` ordered by a pointed generating polyhedral cone.

    ``generators`` are the extreme rays and ``inequalities`` the facet
    normals, both as primitive integer vectors.
    """

    dim: int
    generators: tuple[Vector, ...]
    inequalities: tuple[Vector, ...]
    strict_functional: Vector
    pointed: bool = True
    generating: bool = True
    archimedean: bool = True
    pre_riesz: bool = True
    cone: Polyhedron = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "cone", Polyhedron.build(self.dim, ((a, 0) for a in self.inequalities))
        )

    @property
    def rep(self) -> ConeRep:
        return ConeRep(self.dim, self.generators, self.inequalities)

    def check_dim(self, *vectors: Sequence) -> None:
        for v in vectors:
            if len(v) != self.dim:
                raise DimensionMismatch(f"vector of length {len(v)} in a space of dim {self.dim}")

    def require_positive(self, v: Sequence, name: str = "argument") -> None:
        self.check_dim(v)
        if not member(self, v):
            raise NotPositive(f"{name} {format_vector(v)} is not in the positive cone")


@dataclass(frozen=True)
class FaceHandle:
    """Face ``{w in V_p : a_i . w = 0 for i in active_set}`` of a space's cone."""

    active_set: frozenset
    generator_point: Vector
    space: OrderedSpace = field(repr=False, compare=False)

    def contains(self, w: Sequence) -> bool:
        ineqs = self.space.inequalities
        return member(self.space, w) and all(dot(ineqs[i], w) == 0 for i in self.active_set)


def _ordered_unique(rows, keep) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for r in rows:
        p = primitive(r)
        if p in keep and p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _as_q(rows) -> tuple[Vector, ...]:
    return tuple(tuple(mpq(a) for a in r) for r in rows)


def _functional_lp(generators: Sequence[Vector], n: int):
    """Maximize t subject to f . g >= t for each generator and -1 <= f_j <= 1."""
    rows = []
    for g in generators:
        rows.append((tuple(g) + (-1,), 0))
    for j in range(n):
        e = [0] * (n + 1)
        e[j] = 1
        rows.append((e, -1))
        rows.append(([-a for a in e], -1))
    p = Polyhedron.build(n + 1, rows)
    out = solve_lp([0] * n + [1], p, "max")
    if not isinstance(out, Optimal):
        raise CertificateError(f"positive functional LP returned {out}")
    return out.point[:n], out.value


def _not_pointed_certificate(generators: Sequence[Vector], n: int) -> Vector:
    # lambda >= 0, sum lambda_i g_i = 0, sum lambda_i = 1
    k = len(generators)
    rows = []
    for i in range(k):
        e = [0] * k
        e[i] = 1
        rows.append((e, 0))
    for j in range(n):
        coeffs = [g[j] for g in generators]
        rows.append((coeffs, 0))
        rows.append(([-c for c in coeffs], 0))
    rows.append(([1] * k, 1))
    rows.append(([-1] * k, -1))
    lam = find_point(Polyhedron.build(k, rows))
    if lam is None:
        raise CertificateError("cone rejected as not pointed but no dependency found")
    i = next(i for i, a in enumerate(lam) if a > 0)
    return tuple(mpq(a) for a in primitive(generators[i]))


def build_space(rep: ConeRep) -> OrderedSpace:
    """Validate ``rep`` and materialize both representations.

    Raises :class:`NotPointed`, :class:`NotGenerating` or
    :class:`InconsistentReps` with a certificate vector.
    """
    n = rep.dim
    if rep.generators is not None:
        gens = list(rep.generators)
        if rank(gens) < n:
            raise NotGenerating(nullspace_basis(gens)[0])
        _, t = _functional_lp(gens, n)
        if t <= 0:
            raise NotPointed(_not_pointed_certificate(gens, n))
        facets = dd.extreme_rays(gens, n)
        rays = dd.extreme_rays(facets, n)
        generators = _ordered_unique(gens, set(rays))
        if rep.inequalities is None:
            inequalities = sorted(facets)
        else:
            _check_consistent(rep, facets)
            inequalities = _ordered_unique(rep.inequalities, set(facets))
    else:
        ineqs = list(rep.inequalities)
        if rank(ineqs) < n:
            raise NotPointed(nullspace_basis(ineqs)[0])
        rays = dd.extreme_rays(ineqs, n)
        if rank(rays) < n:
            raise NotGenerating(nullspace_basis(rays, n)[0])
        facets = dd.extreme_rays(rays, n)
        generators = sorted(rays)
        inequalities = _ordered_unique(ineqs, set(facets))

    if len(inequalities) != len(facets) or len(generators) != len(rays):
        raise CertificateError("facet or extreme ray lost while canonicalizing")
    f, t = _functional_lp(_as_q(generators), n)
    if t <= 0:
        raise CertificateError("pointed cone without a strictly positive functional")
    functional = tuple(a / t for a in f)
    space = OrderedSpace(n, _as_q(generators), _as_q(inequalities), functional)
    for g in space.generators:
        if dot(functional, g) < 1:
            raise CertificateError("strict functional below 1 on a generator")
    return space


def _check_consistent(rep: ConeRep, facets) -> None:
    n = rep.dim
    for g in rep.generators:
        for a in rep.inequalities:
            if dot(a, g) < 0:
                raise InconsistentReps(
                    f"generator {format_vector(g)} violates inequality {format_vector(a)}",
                    (g, a),
                )
    ineqs = list(rep.inequalities)

    def outside(w):
        return any(dot(a, w) < 0 for a in facets)

    if rank(ineqs) < n:
        w = nullspace_basis(ineqs)[0]
        w = w if outside(w) else tuple(-a for a in w)
        raise InconsistentReps(
            f"inequalities admit {format_vector(w)}, which the generators do not span", w
        )
    for r in dd.extreme_rays(ineqs, n):
        if outside(r):
            w = tuple(mpq(a) for a in r)
            raise InconsistentReps(
                f"inequalities admit ray {format_vector(w)} outside the generated cone", w
            )


def member(s: OrderedSpace, v: Sequence) -> bool:
    """True iff ``v`` lies in the positive cone."""
    return all(dot(a, v) >= 0 for a in s.inequalities)


def strictly_positive_functional(s: OrderedSpace) -> Vector:
    """``f`` with ``f . g >= 1`` on every extreme ray, so ``f . w > 0`` on ``V_p \\ {0}``."""
    f, t = _functional_lp(s.generators, s.dim)
    if t <= 0:
        raise CertificateError("positive functional LP optimum is not positive")
    return tuple(a / t for a in f)


def face_of(s: OrderedSpace, x: Sequence) -> FaceHandle:
    """The face generated by ``x``: the inequalities tight at ``x``."""
    x = vector(x)
    s.require_positive(x, "x")
    active = frozenset(i for i, a in enumerate(s.inequalities) if dot(a, x) == 0)
    return FaceHandle(active, x, s)


def closure(s: OrderedSpace, active: frozenset) -> frozenset:
    """All inequalities tight on every point of the face cut out by ``active``."""
    ineqs = s.inequalities
    rays = [g for g in s.generators if all(dot(ineqs[i], g) == 0 for i in active)]
    return frozenset(
        j for j, a in enumerate(ineqs) if all(dot(a, g) == 0 for g in rays)
    )


def face_strictly_below(f: FaceHandle, g: FaceHandle) -> bool:
    """True iff face ``f`` is a proper subface of face ``g``."""
    if f.space is not g.space and f.space != g.space:
        raise ValueError("faces belong to different spaces")
    s = f.space
    cf, cg = closure(s, f.active_set), closure(s, g.active_set)
    if not cf > cg:
        return False
    return not f.contains(g.generator_point)


# -- cone documents -----------------------------------------------------------

_DOC_KEYS = {"dim", "generators", "inequalities", "name", "description"}


def cone_rep_from_document(doc: dict) -> ConeRep:
    """Build a :class:`ConeRep` from a parsed cone document.

    Only ``dim``, ``generators``, ``inequalities`` (plus the informational
    ``name`` and ``description``) are accepted.  Vectors are lists of
    rational strings (plain JSON integers are tolerated).
    """
    if not isinstance(doc, dict):
        raise InputError("cone document must be an object")
    unknown = set(doc) - _DOC_KEYS
    if unknown:
        raise InputError(
            f"unknown cone document field(s) {sorted(unknown)}; only closed cones given by "
            "non-strict inequalities a.w >= 0 or by generators are supported (see README, "
            "'Cone documents')"
        )
    if "dim" not in doc or not isinstance(doc["dim"], int) or isinstance(doc["dim"], bool):
        raise InputError("cone document needs an integer 'dim'")

    def rows(key):
        if key not in doc:
            return None
        value = doc[key]
        if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
            raise InputError(f"'{key}' must be a list of vectors")
        out = []
        for r in value:
            entries = []
            for a in r:
                if isinstance(a, bool) or not isinstance(a, (str, int)):
                    raise InputError(f"vector entries must be rational strings, got {a!r}")
                entries.append(to_rational(a))
            out.append(tuple(entries))
        return tuple(out)

    return ConeRep(doc["dim"], rows("generators"), rows("inequalities"))


def load_cone_document(source: str) -> ConeRep:
    """Read a cone document from a file path, or inline JSON text starting with ``{``."""
    text = source if source.lstrip().startswith("{") else Path(source).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"cone document is not valid JSON: {exc}") from None
    return cone_rep_from_document(doc)


def cone_document(s: OrderedSpace) -> dict:
    return {
        "dim": s.dim,
        "generators": [format_vector(g).split(",") for g in s.generators],
        "inequalities": [format_vector(a).split(",") for a in s.inequalities],
    }


def orthant(n: int) -> OrderedSpace:
    """The standard lattice order on ``Q^n``."""
    units = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return build_space(ConeRep(n, generators=units))
