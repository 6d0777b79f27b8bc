"""Double description method for pointed polyhedral cones.

Rays are kept as primitive integer tuples, so the whole iteration runs on
Python ints.  Adjacency uses the combinatorial test on zero sets (stored
as bitmasks over the constraint indices processed so far).
"""

from __future__ import annotations

from typing import Sequence

from .rational import primitive, rank, solve, unit


class NotPointedCone(ValueError):
    """The constraint matrix does not have full column rank."""


def _int_dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _initial_basis(rows: list[tuple[int, ...]], dim: int) -> list[int]:
    chosen: list[int] = []
    for i, r in enumerate(rows):
        if not any(r):
            continue
        if rank([rows[j] for j in chosen] + [r]) == len(chosen) + 1:
            chosen.append(i)
            if len(chosen) == dim:
                break
    return chosen


def extreme_rays(rows: Sequence[Sequence], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of ``{x : r . x >= 0 for every r in rows}``.

    The cone must be pointed, i.e. ``rows`` must have rank ``dim``;
    otherwise :class:`NotPointedCone` is raised.  Returns primitive integer
    vectors in a deterministic order (the order they were produced).
    """
    irows = [primitive(r) for r in rows]
    if any(len(r) != dim for r in irows):
        raise ValueError("row length does not match dim")
    basis = _initial_basis(irows, dim)
    if len(basis) < dim:
        raise NotPointedCone(f"constraint rank {len(basis)} < {dim}")

    # Columns of B^-1: ray k is tight on every basis row except row k.
    bmat = [irows[i] for i in basis]
    rays: list[tuple[int, ...]] = []
    zsets: list[int] = []
    all_bits = 0
    for i in basis:
        all_bits |= 1 << i
    for k, i in enumerate(basis):
        col = solve(bmat, unit(dim, k))
        rays.append(primitive(col))
        zsets.append(all_bits & ~(1 << i))

    in_basis = set(basis)
    for i, row in enumerate(irows):
        if i in in_basis:
            continue
        bit = 1 << i
        vals = [_int_dot(row, r) for r in rays]
        pos = [k for k, s in enumerate(vals) if s > 0]
        neg = [k for k, s in enumerate(vals) if s < 0]
        zero = [k for k, s in enumerate(vals) if s == 0]
        if not neg:
            for k in zero:
                zsets[k] |= bit
            continue

        new_rays = []
        new_z = []
        for p in pos:
            for q in neg:
                common = zsets[p] & zsets[q]
                if bin(common).count("1") < dim - 2:
                    continue
                adjacent = True
                for t in range(len(rays)):
                    if t != p and t != q and (zsets[t] & common) == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                sp, sq = vals[p], vals[q]
                combo = [sp * b - sq * a for a, b in zip(rays[p], rays[q])]
                new_rays.append(primitive(combo))
                new_z.append(common | bit)

        keep = pos + zero
        for k in zero:
            zsets[k] |= bit
        rays = [rays[k] for k in keep] + new_rays
        zsets = [zsets[k] for k in keep] + new_z

    return rays
