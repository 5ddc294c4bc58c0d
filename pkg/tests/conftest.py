import pytest

from ksforge.atlas import generate_atlas
from ksforge.cyclo import parse_vector
from ksforge.gadgets import build_gadget4, build_gadget5
from ksforge.hypergraph import enumerate_contexts
from ksforge.structures import (
    block_system_10,
    block_system_13,
    subgroup_hypergraph,
    yo_hypergraph,
)


@pytest.fixture(scope="session")
def atlas9():
    return generate_atlas(range(1, 10))


@pytest.fixture(scope="session")
def global_H(atlas9):
    return enumerate_contexts(atlas9.rays, 3)


@pytest.fixture(scope="session")
def yo_H():
    return yo_hypergraph()


@pytest.fixture(scope="session")
def subgroup_Hs():
    return tuple(subgroup_hypergraph(k) for k in (1, 2, 3))


@pytest.fixture(scope="session")
def b10_H():
    return block_system_10()


@pytest.fixture(scope="session")
def b13_H():
    return block_system_13()


@pytest.fixture(scope="session")
def gadget4_ones():
    return build_gadget4(parse_vector("(1,1,1,1)"))


@pytest.fixture(scope="session")
def gadget5_ones():
    return build_gadget5(parse_vector("(1,1,1,1,1)"))
