"""Exact rational scalars, vectors and matrices.

Scalars are ``gmpy2.mpq`` values (always canonical: positive denominator,
reduced).  Vectors are tuples of scalars and matrices are tuples of vectors.
Nothing in this module ever touches floating point.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from gmpy2 import mpq

Q = mpq
Vector = tuple
Matrix = tuple

ZERO = mpq(0)
ONE = mpq(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ParseError(ValueError):
    """Raised for text that does not follow the rational grammar."""


def parse_rational(text: str) -> mpq:
    """Parse ``[sign]digits[/digits]`` into an exact rational."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return mpq(num, den)


def format_rational(q) -> str:
    q = to_rational(q)
    if q.denominator == 1:
        return str(int(q.numerator))
    return f"{int(q.numerator)}/{int(q.denominator)}"


def to_rational(value) -> mpq:
    """Coerce ints, Fractions, mpq and rational strings; floats are refused."""
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use exact rationals")
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def vector(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


def parse_vector(text: str) -> Vector:
    """Parse a comma separated list of rationals, e.g. ``"1,-1/2,0"``."""
    parts = text.strip().strip("()[]").split(",")
    if not parts or any(not p.strip() for p in parts):
        raise ParseError(f"not a vector: {text!r}")
    return tuple(parse_rational(p) for p in parts)


def format_vector(v: Sequence) -> str:
    return ",".join(format_rational(x) for x in v)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    rows = tuple(vector(r) for r in rows)
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("matrix rows must have equal length")
    return rows


# -- vector arithmetic ------------------------------------------------------

def dot(u: Sequence, v: Sequence) -> mpq:
    total = mpq(0)
    for a, b in zip(u, v):
        if a and b:
            total += a * b
    return total


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Sequence) -> Vector:
    c = mpq(c)
    return tuple(c * a for a in v)


def neg(v: Sequence) -> Vector:
    return tuple(-a for a in v)


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def is_zero(v: Sequence) -> bool:
    return not any(v)


def mat_vec(m: Sequence[Sequence], v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in m)


def primitive(v: Sequence) -> tuple[int, ...]:
    """Positive rescaling of ``v`` to a primitive integer vector."""
    v = [mpq(x) for x in v]
    den = 1
    for x in v:
        den = math.lcm(den, int(x.denominator))
    ints = [int(x * den) for x in v]
    g = 0
    for a in ints:
        g = math.gcd(g, a)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


def proportional(u: Sequence, v: Sequence) -> bool:
    """True when ``u`` and ``v`` are linearly dependent."""
    return rank([u, v]) <= 1


# -- elimination ------------------------------------------------------------

def _pivot_size(q: mpq) -> int:
    return abs(int(q.numerator)) * int(q.denominator)


def rref(m: Sequence[Sequence]) -> tuple[list[list[mpq]], list[int]]:
    """Reduced row echelon form and the list of pivot columns.

    Pivots are picked by smallest ``|numerator| * denominator`` to keep
    entry growth down.
    """
    rows = [[mpq(x) for x in r] for r in m]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        best = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                if best is None or _pivot_size(rows[i][c]) < _pivot_size(rows[best][c]):
                    best = i
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1])


def nullspace_basis(m: Sequence[Sequence], ncols: Optional[int] = None) -> list[Vector]:
    """Basis of ``{w : m w = 0}``.

    ``ncols`` is only needed when ``m`` has no rows.
    """
    if not m:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [unit(ncols, i) for i in range(ncols)]
    ncols = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        w = [ZERO] * ncols
        w[f] = ONE
        for row, pc in zip(red, pivots):
            w[pc] = -row[f]
        basis.append(tuple(w))
    return basis


def solve(m: Sequence[Sequence], b: Sequence, ncols: Optional[int] = None) -> Optional[Vector]:
    """Some solution of ``m w = b`` (free variables set to zero), or None."""
    if len(b) != len(m):
        raise ValueError("right-hand side length does not match row count")
    if not m:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return zeros(ncols)
    ncols = len(m[0])
    aug = [list(r) + [bi] for r, bi in zip(m, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    w = [ZERO] * ncols
    for row, pc in zip(red, pivots):
        w[pc] = row[ncols]
    return tuple(w)
