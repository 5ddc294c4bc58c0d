"""Two-valued states of a context hypergraph and derived verdicts.

A two-valued state assigns 1 to exactly one vertex of every hyperedge and 0
to the rest.  The backtracking enumerator propagates those constraints;
``brute_states`` rescans the full assignment space as an independent oracle.
Vertices lying in no edge are unconstrained: they are excluded from the
state bits and reported separately unless ``include_free`` is set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from . import _kernels
from .cyclo import InvalidInputError, KsForgeError
from .hypergraph import ContextHypergraph


class CapacityExceededError(KsForgeError):
    """Exhaustive scan requested beyond its vertex budget."""


class NoEmbeddingError(KsForgeError):
    """Partition logic requested for an empty state set."""


@dataclass(frozen=True)
class StateSet:
    """All two-valued states of a host hypergraph, canonically sorted."""

    host: ContextHypergraph
    states: tuple[tuple[int, ...], ...]
    free_vertices: tuple[int, ...]
    includes_free: bool = False

    @property
    def count(self) -> int:
        return len(self.states)

    def constrained_vertices(self) -> tuple[int, ...]:
        free = set(self.free_vertices)
        return tuple(v for v in self.host.vertices if v not in free)


@dataclass(frozen=True)
class StateReport:
    count: int
    separating: bool
    unital: bool
    ks: bool
    tifs: tuple[tuple[int, int], ...]
    free_vertices: tuple[int, ...]


def _expand_free(states, free: Sequence[int]):
    if not free:
        return [tuple(s) for s in states]
    out = []
    for s in states:
        for k in range(1 << len(free)):
            extra = [free[i] for i in range(len(free)) if (k >> i) & 1]
            out.append(tuple(sorted(set(s) | set(extra))))
    return out


def _finalize(host, raw_states, free, include_free) -> StateSet:
    states = _expand_free(raw_states, free) if include_free else [tuple(s) for s in raw_states]
    return StateSet(
        host=host,
        states=tuple(sorted(set(states))),
        free_vertices=tuple(free),
        includes_free=include_free,
    )


def enumerate_states(H: ContextHypergraph, include_free: bool = False) -> StateSet:
    """Backtracking enumeration with unit propagation over the edges."""
    free = H.isolated_vertices
    verts = [v for v in H.vertices if v not in set(free)]
    pos = {v: p for p, v in enumerate(verts)}
    n = len(verts)
    edges = [tuple(pos[v] for v in e) for e in H.edges]
    ne = len(edges)
    incident: list[list[int]] = [[] for _ in range(n)]
    for ei, e in enumerate(edges):
        for p in e:
            incident[p].append(ei)

    assign = [0] * n  # 0 unknown, 1 true, -1 false
    edge_true = [0] * ne
    edge_unknown = [len(e) for e in edges]
    trail: list[int] = []
    found: list[tuple[int, ...]] = []

    def set_value(p: int, val: int) -> bool:
        # returns False on conflict; records assignments on the trail.
        # bookkeeping per vertex is atomic so rollback stays symmetric.
        queue = [(p, val)]
        while queue:
            q, v = queue.pop()
            if assign[q] == v:
                continue
            if assign[q] != 0:
                return False
            assign[q] = v
            trail.append(q)
            conflict = False
            for ei in incident[q]:
                edge_unknown[ei] -= 1
                if v == 1:
                    edge_true[ei] += 1
                    if edge_true[ei] > 1:
                        conflict = True
                    else:
                        for r in edges[ei]:
                            if assign[r] == 0:
                                queue.append((r, -1))
                elif edge_true[ei] == 0:
                    if edge_unknown[ei] == 0:
                        conflict = True
                    elif edge_unknown[ei] == 1:
                        last = next(r for r in edges[ei] if assign[r] == 0)
                        queue.append((last, 1))
            if conflict:
                return False
        return True

    def rollback(mark: int):
        while len(trail) > mark:
            q = trail.pop()
            val = assign[q]
            assign[q] = 0
            for ei in incident[q]:
                edge_unknown[ei] += 1
                if val == 1:
                    edge_true[ei] -= 1

    def branch():
        target = -1
        best = None
        for ei in range(ne):
            if edge_true[ei] == 0:
                if best is None or edge_unknown[ei] < best:
                    best = edge_unknown[ei]
                    target = ei
        if target < 0:
            found.append(tuple(sorted(verts[p] for p in range(n) if assign[p] == 1)))
            return
        for p in edges[target]:
            if assign[p] != 0:
                continue
            mark = len(trail)
            if set_value(p, 1):
                branch()
            rollback(mark)

    branch()
    return _finalize(H, found, free, include_free)


def brute_states(H: ContextHypergraph, include_free: bool = False) -> StateSet:
    """Exhaustive scan over all assignments of the constrained vertices.

    Independent of the backtracking path; capped at 25 constrained vertices.
    """
    free = H.isolated_vertices
    verts = [v for v in H.vertices if v not in set(free)]
    if len(verts) > 25:
        raise CapacityExceededError(
            f"{len(verts)} constrained vertices exceed the exhaustive budget of 25"
        )
    pos = {v: p for p, v in enumerate(verts)}
    masks = [sum(1 << pos[v] for v in e) for e in H.edges]
    accepted = _kernels.scan(masks, len(verts))
    states = [
        tuple(sorted(verts[p] for p in range(len(verts)) if (a >> p) & 1))
        for a in accepted
    ]
    return _finalize(H, states, free, include_free)


def verdicts(S: StateSet) -> StateReport:
    """Separating/unital/KS verdicts plus state-derived exclusive pairs."""
    count = S.count
    ks = count == 0
    verts = S.constrained_vertices()
    images = {
        v: frozenset(i for i, s in enumerate(S.states) if v in s) for v in verts
    }
    if ks:
        separating = unital = False
    else:
        separating = len(set(images.values())) == len(verts)
        unital = all(0 < len(img) < count for img in images.values())

    tifs: list[tuple[int, int]] = []
    if count > 0:
        co = set()
        for e in S.host.edges:
            co.update((a, b) for a, b in combinations(sorted(e), 2))
        for a, b in combinations(verts, 2):
            pair = (a, b) if a < b else (b, a)
            if pair in co:
                continue
            if not images[a] & images[b]:
                tifs.append(pair)
    return StateReport(
        count=count,
        separating=separating,
        unital=unital,
        ks=ks,
        tifs=tuple(sorted(tifs)),
        free_vertices=S.free_vertices,
    )


def partition_logic(S: StateSet) -> dict[int, frozenset[int]]:
    """Vertex -> indices of states assigning it 1 (a partition per edge)."""
    if S.count == 0:
        raise NoEmbeddingError("no two-valued states: no partition-logic embedding")
    return {
        v: frozenset(i for i, s in enumerate(S.states) if v in s)
        for v in S.constrained_vertices()
    }


def same_state_set(S1: StateSet, S2: StateSet, bijection: Mapping[int, int]) -> bool:
    """True iff the bijection maps S1's states exactly onto S2's states."""
    if len(S1.host.vertices) != len(S2.host.vertices):
        raise InvalidInputError("hosts must share vertex count")
    mapped = {tuple(sorted(bijection[v] for v in s)) for s in S1.states}
    return mapped == set(S2.states)


def states_to_json(S: StateSet, with_states: bool = True) -> dict:
    rep = verdicts(S)
    obj = {
        "count": rep.count,
        "separating": rep.separating,
        "unital": rep.unital,
        "ks": rep.ks,
        "tifs": [list(p) for p in rep.tifs],
        "free": list(rep.free_vertices),
    }
    if with_states:
        obj["states"] = [list(s) for s in S.states]
    return obj
