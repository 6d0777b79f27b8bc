"""Reproducible random instances and the pinned test corpus."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources
from typing import Iterator

from gmpy2 import mpq

from .cone import ConeRep, OrderedSpace, build_space, cone_rep_from_document
from .errors import InputError
from .rational import Vector, add, scale, zeros

MAX_REJECTIONS = 500


@dataclass(frozen=True)
class InstanceSpec:
    dim: int
    generator_count: int
    coefficient_bound: int
    seed: int

    def __post_init__(self):
        if not 2 <= self.dim <= 5:
            raise ValueError("dim must be between 2 and 5")
        if self.generator_count < self.dim:
            raise ValueError("need at least dim generators for a generating cone")
        if self.coefficient_bound < 1:
            raise ValueError("coefficient_bound must be positive")


def random_space(spec: InstanceSpec) -> OrderedSpace:
    """Sample generators with entries ``p/q``, ``|p| <= b``, ``1 <= q <= b``.

    Draws are rejected until the cone is pointed and generating.
    """
    rng = random.Random(spec.seed)
    b = spec.coefficient_bound
    for _ in range(MAX_REJECTIONS):
        gens = []
        for _ in range(spec.generator_count):
            g = tuple(mpq(rng.randint(-b, b), rng.randint(1, b)) for _ in range(spec.dim))
            if any(g):
                gens.append(g)
        if len(gens) < spec.dim:
            continue
        try:
            return build_space(ConeRep(spec.dim, generators=tuple(gens)))
        except InputError:
            continue
    raise RuntimeError(f"no pointed generating cone after {MAX_REJECTIONS} draws for {spec}")


def random_positive(s: OrderedSpace, rng: random.Random, max_coeff: int = 3) -> Vector:
    """Nonzero element of the cone: a random nonnegative integer combination of
    a random subset of the extreme rays (small subsets land on proper faces)."""
    k = rng.randint(1, len(s.generators))
    chosen = rng.sample(range(len(s.generators)), k)
    x = zeros(s.dim)
    for i in chosen:
        x = add(x, scale(rng.randint(1, max_coeff), s.generators[i]))
    return x


def random_vector(dim: int, rng: random.Random, bound: int = 3) -> Vector:
    return tuple(mpq(rng.randint(-bound, bound), rng.randint(1, 2)) for _ in range(dim))


def _data(name: str) -> str:
    return resources.files("ordercone").joinpath("data").joinpath(name).read_text()


def manifest() -> dict:
    return json.loads(_data("corpus.json"))


def pinned_space(name: str) -> OrderedSpace:
    for entry in manifest()["pinned"]:
        if entry["name"] == name:
            return build_space(cone_rep_from_document(json.loads(_data(entry["cone"]))))
    raise KeyError(name)


def corpus() -> Iterator[tuple[str, OrderedSpace]]:
    """Pinned cones first, then the random specs listed in the manifest."""
    m = manifest()
    for entry in m["pinned"]:
        yield entry["name"], build_space(cone_rep_from_document(json.loads(_data(entry["cone"]))))
    for entry in m["random"]:
        spec = InstanceSpec(**entry)
        yield f"random-d{spec.dim}-g{spec.generator_count}-s{spec.seed}", random_space(spec)
