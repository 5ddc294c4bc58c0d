"""Ray generation: nine seeds, 25 row functions, projective deduplication.

The nine seeds are three mutually unbiased qutrit bases (the Fourier basis
and two partners).   25 coordinate maps applied to each selected seed and
deduplicated projectively yield the ray atlas; with all nine seeds that is
the full 165-ray catalogue, with one MUB's three seeds the 69-ray core, and
with a single seed the 25-ray configuration.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cyclo import (
    OMEGA,
    OMEGA2,
    ONE,
    ZERO,
    CycloVector,
    InvalidInputError,
    DegenerateInputError,
    ProjectiveRay,
    canonicalize,
    collinear,
    cross3,
    vector_from_json,
    vector_to_json,
)

#: the nine seeds u1..u9; consecutive triples are mutually unbiased bases
SEEDS: tuple[CycloVector, ...] = (
    CycloVector([ONE, ONE, ONE]),
    CycloVector([ONE, OMEGA, OMEGA2]),
    CycloVector([ONE, OMEGA2, OMEGA]),
    CycloVector([ONE, OMEGA, OMEGA]),
    CycloVector([ONE, OMEGA2, ONE]),
    CycloVector([ONE, ONE, OMEGA2]),
    CycloVector([ONE, OMEGA2, OMEGA2]),
    CycloVector([ONE, OMEGA, ONE]),
    CycloVector([ONE, ONE, OMEGA]),
)

SUBGROUPS: dict[int, tuple[int, ...]] = {1: (1, 2, 3), 2: (4, 5, 6), 3: (7, 8, 9)}

ROW_LABELS = (
    "a1", "a2", "a3", "u", "b1", "b2", "b3", "c1", "c2", "c3",
    "d1", "d2", "d3", "b12", "b13", "b23", "e1", "e2", "e3",
    "b112", "b212", "b113", "b313", "b223", "b323",
)

_E = (
    CycloVector([ONE, ZERO, ZERO]),
    CycloVector([ZERO, ONE, ZERO]),
    CycloVector([ZERO, ZERO, ONE]),
)


def apply_row(label: str, seed: CycloVector) -> CycloVector:
    """Apply one of the 25 row functions to a seed with nonzero entries."""
    if label not in ROW_LABELS:
        raise InvalidInputError(f"unknown row label {label!r}")
    if seed.dim != 3:
        raise InvalidInputError("row functions act on dimension 3")
    x1, x2, x3 = seed.entries
    if label[0] == "a":
        return _E[int(label[1]) - 1]
    if label == "u":
        return seed
    if label in ("b1", "b2", "b3"):
        k = int(label[1]) - 1
        ent = list(seed.entries)
        ent[k] = ZERO
        return CycloVector(ent)
    if label in ("c1", "c2", "c3"):
        return cross3(_E[int(label[1]) - 1], seed)
    if label in ("d1", "d2", "d3"):
        return cross3(seed, cross3(_E[int(label[1]) - 1], seed))
    table = {
        "b12": (x1, x2, -x3),
        "b13": (x1, -x2, x3),
        "b23": (-x1, x2, x3),
        "e1": (x1, 2 * x2, x3),
        "e2": (x1, x2, 2 * x3),
        "e3": (2 * x1, x2, x3),
        "b112": (2 * x1, -x2, x3),
        "b212": (-x1, 2 * x2, x3),
        "b113": (2 * x1, x2, -x3),
        "b313": (-x1, x2, 2 * x3),
        "b223": (x1, 2 * x2, -x3),
        "b323": (x1, -x2, 2 * x3),
    }
    return CycloVector(table[label])


class ColorClass(enum.Enum):
    RED = "Red"
    GREEN = "Green"
    BLUE = "Blue"
    UNIVERSAL = "Universal"
    MIXED = "Mixed"


_ALL_NINE = frozenset(range(1, 10))


def _strict_color(origin: frozenset[int]) -> ColorClass:
    if origin == _ALL_NINE:
        return ColorClass.UNIVERSAL
    for sub, members in SUBGROUPS.items():
        if origin <= set(members):
            return (ColorClass.RED, ColorClass.GREEN, ColorClass.BLUE)[sub - 1]
    return ColorClass.MIXED


def _first_claim_color(origin: frozenset[int]) -> ColorClass:
    if origin == _ALL_NINE:
        return ColorClass.UNIVERSAL
    first = min(origin)
    sub = (first - 1) // 3
    return (ColorClass.RED, ColorClass.GREEN, ColorClass.BLUE)[sub]


@dataclass
class RayAtlas:
    """Deduplicated ray set with provenance.

    rays are sorted by canonical form and numbered 0..n-1; origin maps each
    ray to the seed indices able to generate it; the generation log records
    which ray every (row, seed) application landed on.
    """

    seed_indices: tuple[int, ...]
    rays: tuple[ProjectiveRay, ...]
    origin: dict[int, frozenset[int]]
    log: dict[tuple[str, int], int]
    colors_first_claim: dict[int, ColorClass] = field(default_factory=dict)
    colors_strict: dict[int, ColorClass] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.rays)

    @property
    def has_global_colors(self) -> bool:
        return set(self.seed_indices) == set(range(1, 10))

    def ray_id_of(self, v: CycloVector) -> int | None:
        """Atlas id of the ray collinear with v, or None."""
        key = canonicalize(v).canon.key()
        return self._canon_index().get(key)

    def _canon_index(self) -> dict:
        if not hasattr(self, "_index"):
            self._index = {r.canon.key(): r.id for r in self.rays}
        return self._index

    def color(self, ray_id: int, policy: str = "first_claim") -> ColorClass:
        if ray_id not in self.origin:
            raise InvalidInputError(f"unknown ray id {ray_id}")
        if not self.has_global_colors:
            raise InvalidInputError("coloring requires the nine-seed atlas")
        table = {
            "first_claim": self.colors_first_claim,
            "strict": self.colors_strict,
        }
        try:
            return table[policy][ray_id]
        except KeyError:
            raise InvalidInputError(f"unknown color policy {policy!r}") from None

    def to_json(self) -> dict:
        rays = []
        for r in self.rays:
            entry = {
                "id": r.id,
                "canon": vector_to_json(r.canon),
                "pretty": vector_to_json(r.pretty),
                "origin": sorted(self.origin[r.id]),
                "log": sorted(
                    [row, seed] for (row, seed), rid in self.log.items() if rid == r.id
                ),
            }
            if self.has_global_colors:
                entry["color_first_claim"] = self.colors_first_claim[r.id].value
                entry["color_strict"] = self.colors_strict[r.id].value
            else:
                entry["color_first_claim"] = None
                entry["color_strict"] = None
            rays.append(entry)
        return {
            "dimension": 3,
            "seeds": sorted(self.seed_indices),
            "rays": rays,
        }

    @staticmethod
    def from_json(obj: Mapping) -> "RayAtlas":
        seeds = tuple(obj["seeds"])
        rays = []
        origin = {}
        log = {}
        for entry in obj["rays"]:
            rid = entry["id"]
            canon = vector_from_json(entry["canon"])
            pretty = vector_from_json(entry["pretty"])
            rays.append(ProjectiveRay(canon=canon, pretty=pretty, id=rid))
            origin[rid] = frozenset(entry["origin"])
            for row, seed in entry["log"]:
                log[(row, seed)] = rid
        atlas = RayAtlas(seed_indices=seeds, rays=tuple(rays), origin=origin, log=log)
        if atlas.has_global_colors:
            atlas.colors_first_claim = {i: _first_claim_color(o) for i, o in origin.items()}
            atlas.colors_strict = {i: _strict_color(o) for i, o in origin.items()}
        return atlas


def generate_atlas(seed_indices: Iterable[int]) -> RayAtlas:
    """Apply all 25 rows to the selected seeds and deduplicate projectively."""
    seed_indices = tuple(sorted(set(seed_indices)))
    if not seed_indices:
        raise InvalidInputError("at least one seed index required")
    if not all(1 <= j <= 9 for j in seed_indices):
        raise InvalidInputError("seed indices range over 1..9")

    by_canon: dict[tuple, ProjectiveRay] = {}
    hits: dict[tuple, list[tuple[str, int]]] = {}
    for label in ROW_LABELS:
        for j in seed_indices:
            vec = apply_row(label, SEEDS[j - 1])
            ray = canonicalize(vec)
            key = ray.canon.key()
            by_canon.setdefault(key, ray)
            hits.setdefault(key, []).append((label, j))

    ordered = sorted(by_canon, key=lambda k: k)
    rays = []
    origin = {}
    log = {}
    for rid, key in enumerate(ordered):
        base = by_canon[key]
        rays.append(ProjectiveRay(canon=base.canon, pretty=base.pretty, id=rid))
        origin[rid] = frozenset(j for _, j in hits[key])
        for row, j in hits[key]:
            log[(row, j)] = rid

    atlas = RayAtlas(
        seed_indices=seed_indices,
        rays=tuple(rays),
        origin=origin,
        log=log,
    )
    if atlas.has_global_colors:
        atlas.colors_first_claim = {i: _first_claim_color(o) for i, o in origin.items()}
        atlas.colors_strict = {i: _strict_color(o) for i, o in origin.items()}
    return atlas


def row_multiplicity(label: str, seed_indices: Iterable[int] = range(1, 10)) -> int:
    """Number of projectively distinct rays one row yields over the seeds."""
    keys = {
        canonicalize(apply_row(label, SEEDS[j - 1])).canon.key()
        for j in seed_indices
    }
    return len(keys)


def closure_probe(atlas: RayAtlas, ray_a: int, ray_b: int) -> bool:
    """True iff the Hermitian cross product of two atlas rays stays inside."""
    ra = atlas.rays[ray_a]
    rb = atlas.rays[ray_b]
    prod = cross3(ra.canon, rb.canon)
    if prod.is_zero():
        raise DegenerateInputError("collinear rays have zero cross product")
    return atlas.ray_id_of(prod) is not None
