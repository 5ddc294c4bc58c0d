"""D-uniform context hypergraphs: enumeration, classification, isomorphism.

Vertices are ray ids, hyperedges are contexts (complete orthogonal bases).
Enumeration builds the exact orthogonality graph and extends vertex-ordered
cliques, so every D-clique is emitted exactly once and the edge list is
deterministic.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .atlas import ColorClass, RayAtlas, SUBGROUPS, generate_atlas
from .cyclo import (
    CycloVector,
    InvalidInputError,
    ProjectiveRay,
    inner,
    vector_from_json,
    vector_to_json,
)


class ContextColor(enum.Enum):
    RED = "Red"
    GREEN = "Green"
    BLUE = "Blue"
    MIXED = "Mixed"


_PURE = {
    ColorClass.RED: ContextColor.RED,
    ColorClass.GREEN: ContextColor.GREEN,
    ColorClass.BLUE: ContextColor.BLUE,
}


@dataclass
class ContextHypergraph:
    """Vertices plus D-element hyperedges, both kept canonically sorted."""

    dimension: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, ...], ...]
    meta: dict = field(default_factory=dict)
    vectors: dict[int, CycloVector] | None = None

    def __post_init__(self):
        self.vertices = tuple(sorted(set(self.vertices)))
        vset = set(self.vertices)
        seen = set()
        norm = []
        for e in self.edges:
            t = tuple(sorted(e))
            if len(set(t)) != self.dimension:
                raise InvalidInputError(f"edge {e} must have {self.dimension} distinct vertices")
            if not vset.issuperset(t):
                raise InvalidInputError(f"edge {e} uses unknown vertices")
            if t in seen:
                raise InvalidInputError(f"duplicate edge {e}")
            seen.add(t)
            norm.append(t)
        self.edges = tuple(sorted(norm))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ContextHypergraph)
            and self.dimension == other.dimension
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    @property
    def isolated_vertices(self) -> tuple[int, ...]:
        in_edges = {v for e in self.edges for v in e}
        return tuple(v for v in self.vertices if v not in in_edges)

    def verify_orthogonality(self) -> bool:
        """Re-check every edge pairwise orthogonal (vector-backed graphs)."""
        if self.vectors is None:
            raise InvalidInputError("hypergraph carries no vectors")
        for e in self.edges:
            for i in range(len(e)):
                for j in range(i + 1, len(e)):
                    if not inner(self.vectors[e[i]], self.vectors[e[j]]).is_zero():
                        return False
        return True

    def to_json(self) -> dict:
        obj = {
            "dimension": self.dimension,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "meta": dict(self.meta),
        }
        if self.vectors is not None:
            obj["meta"]["vectors"] = {
                str(v): vector_to_json(vec) for v, vec in sorted(self.vectors.items())
            }
        return obj

    @staticmethod
    def from_json(obj: Mapping) -> "ContextHypergraph":
        meta = dict(obj.get("meta", {}))
        vectors = None
        if "vectors" in meta:
            vectors = {int(k): vector_from_json(v) for k, v in meta.pop("vectors").items()}
        return ContextHypergraph(
            dimension=obj["dimension"],
            vertices=tuple(obj["vertices"]),
            edges=tuple(tuple(e) for e in obj["edges"]),
            meta=meta,
            vectors=vectors,
        )


def enumerate_contexts(
    rays: Sequence[ProjectiveRay | CycloVector], dimension: int | None = None,
    meta: dict | None = None,
) -> ContextHypergraph:
    """All D-subsets of pairwise orthogonal rays, as a hypergraph.

    Vertex ids are taken from ProjectiveRay.id when nonnegative, else
    positions in the input sequence.
    """
    vecs: list[CycloVector] = []
    ids: list[int] = []
    for pos, r in enumerate(rays):
        if isinstance(r, ProjectiveRay):
            vecs.append(r.canon)
            ids.append(r.id if r.id >= 0 else pos)
        else:
            vecs.append(r)
            ids.append(pos)
    if len(set(ids)) != len(ids):
        raise InvalidInputError("ray ids must be distinct")
    if dimension is None:
        dimension = vecs[0].dim if vecs else 3
    if any(v.dim != dimension for v in vecs):
        raise InvalidInputError("all rays must share the hypergraph dimension")

    n = len(vecs)
    # orthogonality adjacency as bitmasks over input positions
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if inner(vecs[i], vecs[j]).is_zero():
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    edges: list[tuple[int, ...]] = []

    def extend(prefix: list[int], cand: int):
        if len(prefix) == dimension:
            edges.append(tuple(sorted(ids[p] for p in prefix)))
            return
        c = cand
        while c:
            low = c & -c
            k = low.bit_length() - 1
            c ^= low
            # restrict to positions above k to emit each clique once
            extend(prefix + [k], cand & adj[k] & ~((1 << (k + 1)) - 1))

    full = (1 << n) - 1
    extend([], full)

    return ContextHypergraph(
        dimension=dimension,
        vertices=tuple(ids),
        edges=tuple(edges),
        meta=meta or {},
        vectors=dict(zip(ids, vecs)),
    )


def classify_contexts(
    H: ContextHypergraph, colors: Mapping[int, ColorClass]
) -> Counter:
    """Histogram of context colors under the purity rule."""
    out: Counter = Counter({c: 0 for c in ContextColor})
    for e in H.edges:
        try:
            cs = [colors[v] for v in e]
        except KeyError as missing:
            raise InvalidInputError(f"vertex {missing} has no color") from None
        first = cs[0]
        if first in _PURE and all(c == first for c in cs):
            out[_PURE[first]] += 1
        else:
            out[ContextColor.MIXED] += 1
    return out


def context_color(
    edge: Sequence[int], colors: Mapping[int, ColorClass]
) -> ContextColor:
    cs = [colors[v] for v in edge]
    if cs[0] in _PURE and all(c == cs[0] for c in cs):
        return _PURE[cs[0]]
    return ContextColor.MIXED


def restrict(atlas: RayAtlas | None, subgroup: int) -> tuple[RayAtlas, ContextHypergraph]:
    """Regenerate one MUB subgroup's atlas and its contexts (the 69-50 core)."""
    if subgroup not in SUBGROUPS:
        raise InvalidInputError("subgroup must be 1, 2 or 3")
    sub_atlas = generate_atlas(SUBGROUPS[subgroup])
    H = enumerate_contexts(sub_atlas.rays, 3, meta={"subgroup": subgroup})
    return sub_atlas, H


# --------------------------------------------------------------------------
# isomorphism via canonical labeling (refinement + individualization)
# --------------------------------------------------------------------------


def _refine(n: int, incident: list[list[int]], edges: list[tuple[int, ...]], colors: list[int]) -> list[int]:
    """Iterated color refinement; stable and input-order independent."""
    while True:
        sigs = []
        for v in range(n):
            edge_sigs = sorted(
                tuple(sorted(colors[w] for w in edges[e])) for e in incident[v]
            )
            sigs.append((colors[v], tuple(edge_sigs)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _certificate(n: int, edges: list[tuple[int, ...]], perm: list[int]) -> tuple:
    relabeled = sorted(tuple(sorted(perm[v] for v in e)) for e in edges)
    return (n, tuple(relabeled))


def canonical_labeling(H: ContextHypergraph) -> tuple[tuple, dict[int, int]]:
    """Canonical certificate plus one vertex -> canonical-position map.

    Two hypergraphs are isomorphic iff their certificates are equal; the
    composed maps then realize an explicit isomorphism.
    """
    idx = {v: i for i, v in enumerate(H.vertices)}
    n = len(H.vertices)
    edges = [tuple(idx[v] for v in e) for e in H.edges]
    incident: list[list[int]] = [[] for _ in range(n)]
    for ei, e in enumerate(edges):
        for v in e:
            incident[v].append(ei)

    best: dict = {"cert": None, "perm": None}

    def search(colors: list[int]):
        colors = _refine(n, incident, edges, colors)
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            classes.setdefault(c, []).append(v)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = classes[c]
                break
        if target is None:
            perm = colors  # discrete: color ranks are canonical positions
            cert = _certificate(n, edges, perm)
            if best["cert"] is None or cert < best["cert"]:
                best["cert"] = cert
                best["perm"] = list(perm)
            return
        for v in target:
            branched = [c * 2 for c in colors]
            branched[v] -= 1
            search(branched)

    search([0] * n)
    perm_map = {v: best["perm"][idx[v]] for v in H.vertices}
    return best["cert"], perm_map


def _quick_invariants(H: ContextHypergraph) -> tuple:
    deg = Counter()
    for e in H.edges:
        for v in e:
            deg[v] += 1
    for v in H.vertices:
        deg.setdefault(v, 0)
    return (
        len(H.vertices),
        len(H.edges),
        H.dimension,
        tuple(sorted(Counter(deg.values()).items())),
    )


def iso_check(H1: ContextHypergraph, H2: ContextHypergraph) -> bool:
    """True iff some vertex bijection maps the edge set of H1 onto H2's."""
    if H1.dimension != H2.dimension:
        return False
    if _quick_invariants(H1) != _quick_invariants(H2):
        return False
    return canonical_labeling(H1)[0] == canonical_labeling(H2)[0]


def find_isomorphism(H1: ContextHypergraph, H2: ContextHypergraph) -> dict[int, int] | None:
    """An explicit vertex bijection realizing the isomorphism, or None."""
    if H1.dimension != H2.dimension or _quick_invariants(H1) != _quick_invariants(H2):
        return None
    cert1, p1 = canonical_labeling(H1)
    cert2, p2 = canonical_labeling(H2)
    if cert1 != cert2:
        return None
    inv2 = {pos: v for v, pos in p2.items()}
    return {v: inv2[pos] for v, pos in p1.items()}


# --------------------------------------------------------------------------
# DOT export
# --------------------------------------------------------------------------

_DOT_COLORS = {
    ContextColor.RED: "red",
    ContextColor.GREEN: "green4",
    ContextColor.BLUE: "blue",
    ContextColor.MIXED: "black",
}


def to_dot(
    H: ContextHypergraph,
    style: str = "clique",
    colors: Mapping[int, ColorClass] | None = None,
    names: Mapping[int, str] | None = None,
) -> str:
    """Graphviz text: one node per vertex, one colored clique/chain per context."""
    if style not in ("clique", "chain"):
        raise InvalidInputError(f"unknown dot style {style!r}")
    lines = ["graph contexts {", "  node [shape=circle fontsize=10];"]
    for v in H.vertices:
        label = names[v] if names and v in names else str(v)
        lines.append(f'  n{v} [label="{label}"];')
    for e in H.edges:
        col = "black"
        if colors is not None:
            col = _DOT_COLORS[context_color(e, colors)]
        if style == "clique":
            pairs = [(e[i], e[j]) for i in range(len(e)) for j in range(i + 1, len(e))]
        else:
            pairs = list(zip(e, e[1:]))
        for a, b in pairs:
            lines.append(f'  n{a} -- n{b} [color="{col}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
