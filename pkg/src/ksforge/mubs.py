"""Fixed unbiased-basis families for dimensions 3 and 4, with verification.

The families are shipped exactly as printed in the source appendices,
unnormalized.  ``verify_family`` reports a full intra-orthogonality and
pairwise-unbiasedness matrix instead of a single boolean: the printed
4-dimensional family is *not* pairwise unbiased (several pairs fail, among
them the two bases that literally share rays), and the library documents
that rather than repairing it.

In dimension 3 the appendix labels B2/B3 swap relative to the seed listing
used by the ray generator; SEED_ALIAS records the correspondence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cyclo import CycloVector, inner, is_unbiased, parse_vector

#: generator-section seed triple name -> appendix basis name (dimension 3)
SEED_ALIAS = {"B1": "B1", "B2": "B3", "B3": "B2"}


@dataclass(frozen=True)
class MubFamily:
    dimension: int
    labels: tuple[str, ...]
    bases: tuple[tuple[CycloVector, ...], ...]

    def basis(self, label: str) -> tuple[CycloVector, ...]:
        return self.bases[self.labels.index(label)]


def _family(dim: int, spec: dict[str, list[str]]) -> MubFamily:
    labels = tuple(spec)
    bases = tuple(tuple(parse_vector(t) for t in vs) for vs in spec.values())
    return MubFamily(dimension=dim, labels=labels, bases=bases)


def mubs3() -> MubFamily:
    return _family(
        3,
        {
            "B0": ["(1,0,0)", "(0,1,0)", "(0,0,1)"],
            "B1": ["(1,1,1)", "(1,w,w2)", "(1,w2,w)"],
            "B2": ["(1,1,w)", "(1,w,1)", "(1,w2,w2)"],
            "B3": ["(1,1,w2)", "(1,w,w)", "(1,w2,1)"],
        },
    )


def mubs4() -> MubFamily:
    return _family(
        4,
        {
            "B0": ["(1,0,0,0)", "(0,1,0,0)", "(0,0,1,0)", "(0,0,0,1)"],
            "B1": ["(1,1,1,1)", "(1,1,-1,-1)", "(1,-1,1,-1)", "(1,-1,-1,1)"],
            "B2": ["(1,1,i,i)", "(1,1,-i,-i)", "(1,-1,i,-i)", "(1,-1,-i,i)"],
            "B3": ["(1,0,0,1)", "(0,1,1,0)", "(1,0,0,-1)", "(0,1,-1,0)"],
            "B4": ["(1,1,1,1)", "(1,i,-1,-i)", "(1,-1,1,-1)", "(1,-i,-1,i)"],
        },
    )


@dataclass(frozen=True)
class FamilyVerification:
    intra: dict[str, bool]
    pairs: dict[tuple[str, str], bool]

    @property
    def all_orthogonal(self) -> bool:
        return all(self.intra.values())

    @property
    def all_unbiased(self) -> bool:
        return all(self.pairs.values())

    def failing_pairs(self) -> list[tuple[str, str]]:
        return sorted(p for p, ok in self.pairs.items() if not ok)

    def to_json(self) -> dict:
        return {
            "intra": dict(self.intra),
            "pairs": {f"{a}|{b}": ok for (a, b), ok in sorted(self.pairs.items())},
            "all_orthogonal": self.all_orthogonal,
            "all_unbiased": self.all_unbiased,
        }


def verify_family(family: MubFamily) -> FamilyVerification:
    """Exact verification: per-basis orthogonality, per-pair unbiasedness."""
    intra = {}
    for label, vs in zip(family.labels, family.bases):
        intra[label] = all(
            inner(a, b).is_zero() for a, b in combinations(vs, 2)
        )
    pairs = {}
    for (la, va), (lb, vb) in combinations(zip(family.labels, family.bases), 2):
        pairs[(la, lb)] = all(is_unbiased(a, b) for a in va for b in vb)
    return FamilyVerification(intra=intra, pairs=pairs)
