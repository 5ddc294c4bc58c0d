"""Canonical ready-made structures used by the CLI, the report and tests."""

from __future__ import annotations

from .atlas import RayAtlas, SUBGROUPS, generate_atlas
from .fixtures.atom_blocks import BLOCKS_10, BLOCKS_13
from .gadgets import cabello18_hypergraph, peres24_hypergraph
from .hypergraph import ContextHypergraph, enumerate_contexts


def yo_hypergraph() -> ContextHypergraph:
    """The 25-ray, 16-context configuration generated by the first seed."""
    atlas = generate_atlas({1})
    return enumerate_contexts(atlas.rays, 3, meta={"set": "yo"})


def subgroup_hypergraph(subgroup: int) -> ContextHypergraph:
    """One MUB subgroup's 69-ray, 50-context core."""
    atlas = generate_atlas(SUBGROUPS[subgroup])
    return enumerate_contexts(atlas.rays, 3, meta={"set": f"subgroup{subgroup}"})


def global_atlas() -> RayAtlas:
    return generate_atlas(range(1, 10))


def global_hypergraph(atlas: RayAtlas | None = None) -> ContextHypergraph:
    """The 165-ray, 130-context catalogue hypergraph."""
    atlas = atlas or global_atlas()
    return enumerate_contexts(atlas.rays, 3, meta={"set": "global"})


def block_system_10() -> ContextHypergraph:
    """20 atoms, 10 blocks; separating but with state-level exclusions."""
    return ContextHypergraph(
        dimension=4,
        vertices=tuple(range(1, 21)),
        edges=BLOCKS_10,
        meta={"set": "blocks10"},
    )


def block_system_13() -> ContextHypergraph:
    """The 10-block system plus the three blocks formalizing its exclusions."""
    return ContextHypergraph(
        dimension=4,
        vertices=tuple(range(1, 21)),
        edges=BLOCKS_13,
        meta={"set": "blocks13"},
    )


NAMED_HYPERGRAPHS = {
    "yo": yo_hypergraph,
    "subgroup1": lambda: subgroup_hypergraph(1),
    "subgroup2": lambda: subgroup_hypergraph(2),
    "subgroup3": lambda: subgroup_hypergraph(3),
    "global": global_hypergraph,
    "b10": block_system_10,
    "b13": block_system_13,
    "peres24": peres24_hypergraph,
    "cabello18": cabello18_hypergraph,
}
