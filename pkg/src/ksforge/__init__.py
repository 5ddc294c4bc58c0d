"""ksforge: exact-arithmetic toolkit for Kochen-Specker ray/context structures.

Generates and classifies the 165-ray/130-context catalogue built from
mutually unbiased qutrit bases, enumerates two-valued states, and constructs
the higher-dimensional forcing gadgets together with the fixed 18- and
24-ray configurations they relate to.  All arithmetic is exact over the
12th cyclotomic field; no floating point is used anywhere.
"""

from .cyclo import (
    CycloNum,
    CycloVector,
    DegenerateInputError,
    InvalidInputError,
    KsForgeError,
    ProjectiveRay,
    canonicalize,
    collinear,
    complement_ray,
    cross3,
    inner,
    is_unbiased,
    norm_sq,
    parse_entry,
    parse_vector,
)
from .atlas import ColorClass, RayAtlas, SEEDS, apply_row, closure_probe, generate_atlas
from .hypergraph import (
    ContextColor,
    ContextHypergraph,
    classify_contexts,
    enumerate_contexts,
    find_isomorphism,
    iso_check,
    restrict,
    to_dot,
)
from .states import (
    CapacityExceededError,
    NoEmbeddingError,
    StateReport,
    StateSet,
    brute_states,
    enumerate_states,
    partition_logic,
    same_state_set,
    verdicts,
)
from .gadgets import (
    ForcingPreconditionError,
    GadgetBlocks,
    ModuliSystem,
    ReconstructionError,
    build_gadget4,
    build_gadget5,
    cabello18,
    cabello18_hypergraph,
    connectors4,
    forcing_check,
    pair_complement,
    pair_minor,
    peres24,
    peres24_hypergraph,
    reconstruct_missing,
    triple_minor5,
)
from .mubs import MubFamily, mubs3, mubs4, verify_family
from .report import ReportCard, run_report

__version__ = "0.1.0"
