"""Exact linear programming over H-represented polyhedra.

The solver works on the slack dictionary of ``{w : A w >= b}``: the free
variables ``w`` are pivoted into the basis first (they never leave again),
which leaves a standard-form problem over the slacks.  Feasibility uses the
single-artificial auxiliary problem, and every pivot follows Bland's rule.
Each outcome carries an exact certificate that is re-checked before it is
returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from gmpy2 import mpq

from . import dd
from .errors import CertificateError
from .polyhedron import Polyhedron
from .rational import (
    ONE,
    ZERO,
    Vector,
    dot,
    is_zero,
    neg,
    primitive,
    rank,
    unit,
    vector,
)


class PolyhedronUnbounded(ValueError):
    """Raised by vertex enumeration when the polyhedron has a recession ray."""

    def __init__(self, ray):
        super().__init__(f"polyhedron is unbounded along {ray}")
        self.ray = ray


@dataclass(frozen=True)
class Optimal:
    value: mpq
    point: Vector


@dataclass(frozen=True)
class Unbounded:
    feasible_point: Vector
    ray: Vector


@dataclass(frozen=True)
class Infeasible:
    # Multipliers on ``p.halfspaces``; empty when the polyhedron was flagged
    # empty at construction (a trivial row 0 >= c with c > 0).
    farkas_certificate: Vector


LpOutcome = Union[Optimal, Unbounded, Infeasible]

_X0 = -1  # auxiliary variable; smallest index so Bland prefers it on ties


class _Dictionary:
    """Mutable simplex dictionary: ``basic_r = rows[r][0] + sum rows[r][k+1] * nonbasic[k]``."""

    def __init__(self, p: Polyhedron):
        n, m = p.dim, len(p.halfspaces)
        self.n = n
        self.nonbasic = list(range(n))
        self.basis = [n + i for i in range(m)]
        self.rows = [[-h.offset] + list(h.normal) for h in p.halfspaces]
        self.free_rows: set[int] = set()

    def copy(self) -> "_Dictionary":
        d = _Dictionary.__new__(_Dictionary)
        d.n = self.n
        d.nonbasic = list(self.nonbasic)
        d.basis = list(self.basis)
        d.rows = [list(r) for r in self.rows]
        d.free_rows = set(self.free_rows)
        return d

    def is_free(self, var: int) -> bool:
        return 0 <= var < self.n

    def pivot(self, r: int, c: int, extra: Sequence[list] = ()) -> None:
        """Exchange basic ``basis[r]`` with nonbasic column ``c`` (0-based)."""
        row = self.rows[r]
        k = c + 1
        p = row[k]
        new = [-a / p for a in row]
        new[k] = ONE / p
        self.rows[r] = new
        for other in list(self.rows[:r]) + list(self.rows[r + 1:]) + list(extra):
            t = other[k]
            if t:
                for j in range(len(other)):
                    if j != k and new[j]:
                        other[j] += t * new[j]
                other[k] = t * new[k]
        self.basis[r], self.nonbasic[c] = self.nonbasic[c], self.basis[r]

    def drop_column(self, c: int) -> None:
        del self.nonbasic[c]
        for row in self.rows:
            del row[c + 1]

    def drop_row(self, r: int) -> None:
        del self.rows[r]
        del self.basis[r]
        self.free_rows = {i if i < r else i - 1 for i in self.free_rows if i != r}

    def column_of(self, var: int) -> Optional[int]:
        try:
            return self.nonbasic.index(var)
        except ValueError:
            return None

    def objective_row(self, c: Sequence) -> list:
        """Express ``c . w`` in the current nonbasic variables."""
        obj = [ZERO] * (len(self.nonbasic) + 1)
        for r, var in enumerate(self.basis):
            if self.is_free(var) and c[var]:
                cv = c[var]
                for j, a in enumerate(self.rows[r]):
                    if a:
                        obj[j] += cv * a
        for k, var in enumerate(self.nonbasic):
            if self.is_free(var) and c[var]:
                obj[k + 1] += c[var]
        return obj

    def point(self) -> Vector:
        w = [ZERO] * self.n
        for r, var in enumerate(self.basis):
            if self.is_free(var):
                w[var] = self.rows[r][0]
        return tuple(w)

    def ratio_row(self, c: int) -> Optional[int]:
        """Leaving row for entering column ``c``; Bland tie-break on basic index."""
        k = c + 1
        best = None
        best_ratio = None
        for r, row in enumerate(self.rows):
            if r in self.free_rows or row[k] >= 0:
                continue
            ratio = row[0] / -row[k]
            if (
                best is None
                or ratio < best_ratio
                or (ratio == best_ratio and self.basis[r] < self.basis[best])
            ):
                best, best_ratio = r, ratio
        return best

    def entering(self, obj: list) -> Optional[int]:
        """Bland: nonnegative nonbasic variable of smallest index with positive reduced cost."""
        best = None
        for k, var in enumerate(self.nonbasic):
            if self.is_free(var) or obj[k + 1] <= 0:
                continue
            if best is None or var < self.nonbasic[best]:
                best = k
        return best


class LpSolver:
    """Simplex solver for one polyhedron and many objectives.

    Phase 1 runs once on construction; each :meth:`optimize` call starts
    phase 2 from a copy of the feasible dictionary.
    """

    def __init__(self, p: Polyhedron):
        self.p = p
        self.farkas: Optional[Vector] = None
        self._dict: Optional[_Dictionary] = None
        if p.empty:
            self.farkas = ()
            return
        self._phase_one()

    @property
    def feasible(self) -> bool:
        return self.farkas is None

    def _phase_one(self) -> None:
        p = self.p
        d = _Dictionary(p)
        n = p.dim
        for j in range(n):
            c = d.column_of(j)
            row = None
            for r in range(len(d.rows)):
                if r not in d.free_rows and d.rows[r][c + 1]:
                    row = r
                    break
            if row is None:
                continue  # w_j lies in the lineality space
            d.pivot(row, c)
            d.free_rows.add(row)

        worst = None
        for r, row in enumerate(d.rows):
            if r in d.free_rows or row[0] >= 0:
                continue
            if worst is None or row[0] < d.rows[worst][0] or (
                row[0] == d.rows[worst][0] and d.basis[r] < d.basis[worst]
            ):
                worst = r
        if worst is None:
            self._dict = d
            return

        # The auxiliary variable relaxes only the rows still holding slacks;
        # the Farkas multipliers read off below stay valid for that system.
        d.nonbasic.append(_X0)
        for r, row in enumerate(d.rows):
            row.append(ZERO if r in d.free_rows else ONE)
        x0 = len(d.nonbasic) - 1
        obj = [ZERO] * (len(d.nonbasic) + 1)
        obj[x0 + 1] = -ONE
        d.pivot(worst, x0, extra=[obj])
        while True:
            c = d.entering(obj)
            if c is None:
                break
            r = d.ratio_row(c)
            if r is None:
                raise CertificateError("auxiliary problem reported unbounded")
            d.pivot(r, c, extra=[obj])

        if obj[0] < 0:
            m = len(p.halfspaces)
            y = [ZERO] * m
            for k, var in enumerate(d.nonbasic):
                if var >= n:
                    y[var - n] = -obj[k + 1]
            self.farkas = tuple(mpq(a) for a in primitive(y))
            self._check_farkas(self.farkas)
            return

        r0 = d.basis.index(_X0) if _X0 in d.basis else None
        if r0 is not None:
            row = d.rows[r0]
            c = next(
                (k for k, var in enumerate(d.nonbasic) if not d.is_free(var) and row[k + 1]),
                None,
            )
            if c is None:
                d.drop_row(r0)
            else:
                d.pivot(r0, c)
        d.drop_column(d.column_of(_X0))
        self._dict = d

    def _check_farkas(self, y: Sequence) -> None:
        p = self.p
        if any(a < 0 for a in y):
            raise CertificateError("negative Farkas multiplier")
        combo = [ZERO] * p.dim
        rhs = ZERO
        for yi, h in zip(y, p.halfspaces):
            if yi:
                rhs += yi * h.offset
                for j, a in enumerate(h.normal):
                    combo[j] += yi * a
        if not is_zero(combo) or rhs <= 0:
            raise CertificateError("Farkas certificate does not prove emptiness")

    def feasible_point(self) -> Optional[Vector]:
        if self._dict is None:
            return None
        return self._dict.point()

    def optimize(self, objective: Sequence, sense: str = "max") -> LpOutcome:
        if sense not in ("max", "min"):
            raise ValueError(f"sense must be 'max' or 'min', not {sense!r}")
        objective = vector(objective)
        if len(objective) != self.p.dim:
            raise ValueError("objective dimension does not match polyhedron")
        if self._dict is None:
            return Infeasible(self.farkas)
        c = objective if sense == "max" else neg(objective)
        d = self._dict.copy()
        obj = d.objective_row(c)
        while True:
            free_col = next(
                (k for k, var in enumerate(d.nonbasic) if d.is_free(var) and obj[k + 1]),
                None,
            )
            if free_col is not None:
                sign = ONE if obj[free_col + 1] > 0 else -ONE
                ray = self._ray(d, free_col, sign)
                return self._unbounded(d.point(), ray, objective, sense)
            col = d.entering(obj)
            if col is None:
                break
            r = d.ratio_row(col)
            if r is None:
                ray = self._ray(d, col, ONE)
                return self._unbounded(d.point(), ray, objective, sense)
            d.pivot(r, col, extra=[obj])
        point = d.point()
        value = dot(objective, point)
        if not self.p.contains_point(point):
            raise CertificateError("optimal point violates a constraint")
        if value != (obj[0] if sense == "max" else -obj[0]):
            raise CertificateError("objective row disagrees with optimal point")
        return Optimal(value, point)

    @staticmethod
    def _ray(d: _Dictionary, col: int, sign) -> Vector:
        ray = [ZERO] * d.n
        for r, var in enumerate(d.basis):
            if d.is_free(var):
                ray[var] = sign * d.rows[r][col + 1]
        var = d.nonbasic[col]
        if d.is_free(var):
            ray[var] = sign
        return tuple(ray)

    def _unbounded(self, point, ray, objective, sense) -> Unbounded:
        gain = dot(objective, ray)
        if sense == "min":
            gain = -gain
        if not self.p.contains_point(point):
            raise CertificateError("unbounded: base point infeasible")
        if gain <= 0 or any(dot(h.normal, ray) < 0 for h in self.p.halfspaces):
            raise CertificateError("unbounded: ray is not an improving recession direction")
        return Unbounded(point, ray)


def solve_lp(objective: Sequence, p: Polyhedron, sense: str = "max") -> LpOutcome:
    """Optimize ``objective . w`` over ``p``; see :class:`LpSolver`."""
    return LpSolver(p).optimize(objective, sense)


def find_point(p: Polyhedron) -> Optional[Vector]:
    """Some point of ``p`` or None when ``p`` is empty."""
    return LpSolver(p).feasible_point()


def nonzero_point(p: Polyhedron) -> Optional[Vector]:
    """A nonzero point of ``p`` if one exists, else None.

    Coordinates are maximized then minimized in turn; the first nonzero
    optimum (a vertex of ``p``) is returned.  An unbounded direction yields
    a point on the ray.
    """
    solver = LpSolver(p)
    if not solver.feasible:
        return None
    start = solver.feasible_point()
    if not is_zero(start):
        return start
    for i in range(p.dim):
        e = unit(p.dim, i)
        for sense in ("max", "min"):
            out = solver.optimize(e, sense)
            if isinstance(out, Unbounded):
                w = tuple(a + b for a, b in zip(out.feasible_point, out.ray))
                return w if not is_zero(w) else out.ray
            if out.value != 0:
                return out.point
    return None


def is_singleton_zero(p: Polyhedron) -> bool:
    """True iff ``p == {0}``."""
    if not p.contains_point((ZERO,) * p.dim):
        return False
    return nonzero_point(p) is None


def escape_point(outer: Polyhedron, inner: Polyhedron) -> Optional[Vector]:
    """A point of ``inner`` outside ``outer``, or None when ``inner`` is contained."""
    if outer.dim != inner.dim:
        raise ValueError("dimension mismatch")
    solver = None
    if outer.empty:
        solver = LpSolver(inner)
        return solver.feasible_point()
    implied = {h.normal: h.offset for h in inner.halfspaces}
    for h in outer.halfspaces:
        off = implied.get(h.normal)
        if off is not None and off >= h.offset:
            continue
        if solver is None:
            solver = LpSolver(inner)
            if not solver.feasible:
                return None
        out = solver.optimize(h.normal, "min")
        if isinstance(out, Unbounded):
            w = out.feasible_point
            while h.holds(w):
                w = tuple(a + b for a, b in zip(w, out.ray))
            return w
        if out.value < h.offset:
            return out.point
    return None


def contains(outer: Polyhedron, inner: Polyhedron) -> bool:
    """True iff ``inner`` is a subset of ``outer``."""
    return escape_point(outer, inner) is None


def remove_redundant(p: Polyhedron) -> Polyhedron:
    """Drop halfspaces implied by the remaining ones."""
    kept = list(p.halfspaces)
    i = 0
    while i < len(kept):
        h = kept[i]
        rest = Polyhedron(p.dim, tuple(kept[:i] + kept[i + 1:]), p.empty)
        out = solve_lp(h.normal, rest, "min")
        if isinstance(out, Optimal) and out.value >= h.offset or isinstance(out, Infeasible):
            kept.pop(i)
        else:
            i += 1
    return Polyhedron(p.dim, tuple(kept), p.empty)


def enumerate_vertices(p: Polyhedron) -> list[Vector]:
    """Vertices of a bounded polyhedron, lexicographically sorted.

    Runs the double description method on the homogenization
    ``{(w, t) : A w - b t >= 0, t >= 0}``, seeded from the simplicial cone of
    ``dim + 1`` independent constraints.  Rays with ``t > 0`` are vertices;
    a ray with ``t = 0`` next to a vertex means ``p`` is unbounded.
    """
    if p.empty:
        return []
    n = p.dim
    rows = [tuple(h.normal) + (-h.offset,) for h in p.halfspaces]
    rows.append((ZERO,) * n + (ONE,))
    if rank(rows) < n + 1:
        # lineality: either empty or unbounded along a line
        pt = find_point(p)
        if pt is None:
            return []
        from .rational import nullspace_basis

        line = nullspace_basis([h.normal for h in p.halfspaces], n)[0]
        raise PolyhedronUnbounded(line)
    rays = dd.extreme_rays(rows, n + 1)
    verts = set()
    recession = None
    for r in rays:
        t = r[n]
        if t > 0:
            verts.add(tuple(mpq(a, t) for a in r[:n]))
        else:
            recession = tuple(mpq(a) for a in r[:n])
    if verts and recession is not None:
        raise PolyhedronUnbounded(recession)
    return sorted(verts)
