"""Atoms, D-discrete and discrete elements.

Two independent routes decide D-discreteness.  :func:`is_atom` solves LPs
over ``[0, x]`` along the annihilator of ``x``; :func:`d_disjoint_witness_below`
enumerates the vertices of ``[0, x]`` and builds an explicit D-disjoint pair.
In an Archimedean space whose cone has maximal lower bounds (every admitted
polyhedral cone) an element is an atom exactly when it is D-discrete, so the
two routes must agree; :func:`is_d_discrete` insists on it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from gmpy2 import mpq

from .cone import FaceHandle, OrderedSpace, face_of, face_strictly_below, member
from .disjoint import d_disjoint, perp
from .errors import CertificateError, ZeroElement
from .lp import Infeasible, LpSolver, Optimal, Unbounded, enumerate_vertices, solve_lp
from .order import leq, maximal_lower_bound, order_interval
from .polyhedron import Polyhedron
from .rational import (
    Vector,
    dot,
    format_vector,
    is_zero,
    nullspace_basis,
    proportional,
    rank,
    scale,
    sub,
    vector,
    zeros,
)


class Status(str, enum.Enum):
    ATOM = "atom"
    D_DISCRETE = "d_discrete"
    NOT_D_DISCRETE = "not_d_discrete"
    DISCRETE = "discrete"
    DISCRETE_UNKNOWN = "discrete_unknown"
    NOT_DISCRETE = "not_discrete"


@dataclass(frozen=True)
class DiscreteVerdict:
    status: Status
    witness: Optional[tuple[Vector, Vector]] = None
    face_chain: Optional[tuple[FaceHandle, ...]] = None


def _nonzero_positive(s: OrderedSpace, x) -> Vector:
    x = vector(x)
    s.check_dim(x)
    if is_zero(x):
        raise ZeroElement("x must be nonzero")
    s.require_positive(x, "x")
    return x


def _interval(s: OrderedSpace, x: Vector) -> Polyhedron:
    return order_interval(s, zeros(s.dim), x).body


def is_atom(s: OrderedSpace, x: Sequence) -> bool:
    """``[0, x]`` lies on the ray through ``x``.

    Every functional vanishing on ``x`` must vanish on all of ``[0, x]``;
    checked by maximizing and minimizing each annihilator basis vector.
    """
    x = _nonzero_positive(s, x)
    solver = LpSolver(_interval(s, x))
    for f in nullspace_basis([x]):
        for sense in ("max", "min"):
            out = solver.optimize(f, sense)
            if not isinstance(out, Optimal):
                raise CertificateError(f"LP over [0, x] returned {out}")
            if out.value != 0:
                return False
    return True


def sup_scaling(s: OrderedSpace, a: Sequence, x: Sequence) -> mpq:
    """``max {c : c a <= x}``, attained because the cone is closed."""
    a, x = vector(a), vector(x)
    s.check_dim(a, x)
    # one variable c: a_i . x - c a_i . a >= 0 for every facet normal a_i
    rows = [((-dot(ai, a),), -dot(ai, x)) for ai in s.inequalities]
    out = solve_lp((1,), Polyhedron.build(1, rows), "max")
    if isinstance(out, Unbounded):
        raise ZeroElement("sup_scaling is unbounded: a must be a nonzero positive element")
    if isinstance(out, Infeasible):
        raise CertificateError("no c with c a <= x")
    return out.value


def off_ray_vertex(s: OrderedSpace, x: Vector) -> Optional[Vector]:
    """Lexicographically smallest vertex of ``[0, x]`` not proportional to ``x``."""
    for w in enumerate_vertices(_interval(s, x)):
        if not proportional(w, x):
            return w
    return None


def _min_dominating_scale(s: OrderedSpace, a: Vector, v: Vector) -> Optional[mpq]:
    """``min {c >= 0 : v <= c a}``, or None when no such ``c`` exists."""
    rows = [((1,), 0)] + [((dot(ai, a),), dot(ai, v)) for ai in s.inequalities]
    out = solve_lp((1,), Polyhedron.build(1, rows), "min")
    if isinstance(out, Infeasible):
        return None
    if not isinstance(out, Optimal):
        raise CertificateError(f"min c with v <= c a returned {out}")
    return out.value


def d_disjoint_witness_below(s: OrderedSpace, x: Sequence) -> Optional[tuple[Vector, Vector]]:
    """Nonzero D-disjoint ``a, b`` in ``[0, x]``, or None when ``x`` is an atom.

    Follows the constructive argument behind "D-discrete implies atom":
    take a vertex ``w`` of ``[0, x]`` off the ray of ``x`` and stretch it to
    ``a' = alpha w`` with ``alpha`` maximal; with ``v = x - a'`` and a
    maximal lower bound ``z >= 0`` of ``{v, lam a'}`` the pair
    ``(v - z, lam a' - z)`` is D-disjoint, and nonzero for a suitable ``lam``.
    """
    x = _nonzero_positive(s, x)
    w = off_ray_vertex(s, x)
    if w is None:
        return None
    alpha = sup_scaling(s, w, x)
    a1 = scale(alpha, w)
    v = sub(x, a1)
    # The argument sweeps lam over (0, 1] and takes a limit; with a closed
    # cone beta = min{c : v <= c a1} is attained, and any lam < beta keeps
    # v - z nonzero.  lam <= 1 keeps lam a1 <= x.
    beta = _min_dominating_scale(s, a1, v)
    if beta is None:
        lam = mpq(1)
    elif beta > 0:
        lam = min(mpq(1), beta / 2)
    else:
        raise CertificateError("v <= 0 for a non-atom: off-span vertex check is broken")
    la = scale(lam, a1)
    z = maximal_lower_bound(s, v, la, above=zeros(s.dim))
    pair = (sub(v, z), sub(la, z))
    _check_pair(s, x, pair)
    return pair


def _check_pair(s: OrderedSpace, x: Vector, pair) -> None:
    a, b = pair
    for c in (a, b):
        if is_zero(c) or not member(s, c) or not leq(s, c, x):
            raise CertificateError(f"witness component {format_vector(c)} is not in [0, x] \\ {{0}}")
    if not d_disjoint(s, a, b).result:
        raise CertificateError("witness pair is not D-disjoint")


def is_d_discrete(s: OrderedSpace, x: Sequence) -> DiscreteVerdict:
    x = _nonzero_positive(s, x)
    atom = is_atom(s, x)
    pair = d_disjoint_witness_below(s, x)
    if atom != (pair is None):
        raise CertificateError(
            f"atom test ({atom}) and witness construction disagree at {format_vector(x)}"
        )
    if atom:
        return DiscreteVerdict(Status.D_DISCRETE)
    return DiscreteVerdict(Status.NOT_D_DISCRETE, witness=pair)


def is_discrete(s: OrderedSpace, x: Sequence) -> DiscreteVerdict:
    """Three-valued discreteness test.

    Atoms are discrete.  Otherwise a disjoint pair is searched among the
    vertices of ``[0, x]``, the D-disjoint witness pair and the splits
    ``(w, x - w)``.  The search is sound but not complete: when it finds
    nothing the status is ``discrete_unknown``.
    """
    x = _nonzero_positive(s, x)
    if is_atom(s, x):
        return DiscreteVerdict(Status.DISCRETE)
    verts = [w for w in enumerate_vertices(_interval(s, x)) if not is_zero(w)]
    candidates = []
    for i, p in enumerate(verts):
        for q in verts[i + 1:]:
            candidates.append((p, q))
    pair = d_disjoint_witness_below(s, x)
    if pair is not None:
        candidates.append(pair)
    for w in verts:
        rest = sub(x, w)
        if not is_zero(rest):
            candidates.append((w, rest))
    seen = set()
    for a, b in candidates:
        key = frozenset((a, b))
        if key in seen:
            continue
        seen.add(key)
        # perp implies d_disjoint for positive pairs; the cheaper test filters.
        if not d_disjoint(s, a, b).result:
            continue
        if perp(s, a, b).result:
            return DiscreteVerdict(Status.NOT_DISCRETE, witness=(a, b))
    return DiscreteVerdict(Status.DISCRETE_UNKNOWN)


def find_atom_below(s: OrderedSpace, x: Sequence) -> tuple[Vector, list[tuple[Vector, FaceHandle]]]:
    """An atom ``0 < z <= x`` found by descending through faces.

    Each step subtracts the largest multiple of an off-ray vertex of
    ``[0, x_k]``; the face generated by the remainder is a proper subface,
    so at most ``dim`` steps are taken.  Returns the atom and the trace of
    ``(x_k, face of x_k)``.
    """
    x = _nonzero_positive(s, x)
    trace = [(x, face_of(s, x))]
    current = x
    while True:
        a = off_ray_vertex(s, current)
        if a is None:
            break
        if len(trace) >= s.dim:
            raise CertificateError("face descent exceeded the dimension bound")
        alpha = sup_scaling(s, a, current)
        nxt = sub(current, scale(alpha, a))
        if is_zero(nxt) or not leq(s, nxt, current) or not member(s, nxt):
            raise CertificateError(f"descent step produced {format_vector(nxt)}")
        face = face_of(s, nxt)
        if not face_strictly_below(face, trace[-1][1]):
            raise CertificateError("descent step did not reach a proper face")
        trace.append((nxt, face))
        current = nxt
    if rank([t[0] for t in trace]) != len(trace):
        raise CertificateError("descent trace is linearly dependent")
    return current, trace
