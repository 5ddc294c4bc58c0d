"""Forcing gadgets, moduli systems, fixed sets and reconstructions."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from ksforge.cyclo import (
    CycloNum,
    CycloVector,
    InvalidInputError,
    collinear,
    inner,
    is_unbiased,
    parse_vector,
)
from ksforge.fixtures.equivalence import (
    CABELLO_VECTORS,
    CORRESPONDENCE,
    RECONSTRUCTIONS_PRINTED,
    RECONSTRUCTIONS_REPAIRED,
)
from ksforge.gadgets import (
    ForcingPreconditionError,
    GadgetBlocks,
    ReconstructionError,
    build_gadget4,
    build_gadget5,
    cabello18,
    cabello18_hypergraph,
    connectors4,
    emergent_block,
    forcing_check,
    g_connectors5,
    pair_complement,
    pair_minor,
    peres24,
    peres24_hypergraph,
    projective_subset,
    ray_union_coverage,
    reconstruct_missing,
    run_reconstructions,
    sym_gadget_vectors,
    triple_minor5,
)
from ksforge.hypergraph import find_isomorphism, iso_check
from ksforge.states import enumerate_states, same_state_set, verdicts
from ksforge.structures import block_system_10, block_system_13
from ksforge.symbolic import Sym, moduli_poly, sym_inner

I_UNIT = CycloNum((0, 0, 0, 1))


def random_center(rng, dim):
    def entry():
        while True:
            a, b = rng.randint(-6, 6), rng.randint(-6, 6)
            if a or b:
                return CycloNum.from_int(a) + CycloNum.from_int(b) * I_UNIT

    return CycloVector([entry() for _ in range(dim)])


class TestPairMinors:
    def test_printed_patterns(self):
        u = parse_vector("(1,1,1,1)")
        assert pair_minor(u, 1, 2) == parse_vector("(0,0,1,-1)")
        assert pair_complement(u, 3, 4) == parse_vector("(1,1,0,0)")

    def test_symbolic_patterns_match_printed_tables(self):
        # v12=(0,0,x4~,-x3~) .. w34=(x1,x2,0,0), entrywise
        sv = sym_gadget_vectors(4)
        x = {j: Sym.var(j) for j in range(1, 5)}
        xb = {j: Sym.varbar(j) for j in range(1, 5)}
        zero = Sym()
        minus = Sym.const(-1)
        expected_v = {
            (1, 2): (zero, zero, xb[4], minus * xb[3]),
            (1, 3): (zero, minus * xb[4], zero, xb[2]),
            (1, 4): (zero, xb[3], minus * xb[2], zero),
            (2, 3): (xb[4], zero, zero, minus * xb[1]),
            (2, 4): (minus * xb[3], zero, xb[1], zero),
            (3, 4): (xb[2], minus * xb[1], zero, zero),
        }
        expected_w = {
            (1, 2): (zero, zero, x[3], x[4]),
            (1, 3): (zero, x[2], zero, x[4]),
            (1, 4): (zero, x[2], x[3], zero),
            (2, 3): (x[1], zero, zero, x[4]),
            (2, 4): (x[1], zero, x[3], zero),
            (3, 4): (x[1], x[2], zero, zero),
        }
        for (i, j), comps in expected_v.items():
            assert tuple(sv[f"v{i}{j}"].entries) == comps, (i, j)
        for (i, j), comps in expected_w.items():
            assert tuple(sv[f"w{i}{j}"].entries) == comps, (i, j)

    def test_identity_orthogonality_random_centers(self):
        rng = random.Random(42)
        for _ in range(100):
            u = random_center(rng, 4)
            for i, j in combinations(range(1, 5), 2):
                v = pair_minor(u, i, j)
                w = pair_complement(u, i, j)
                assert inner(v, u).is_zero()
                assert inner(v, w).is_zero()

    def test_derived_example(self):
        u = parse_vector("(1,2,1,1)")
        v = pair_minor(u, 1, 2)
        assert v == parse_vector("(0,0,1,-1)")
        assert inner(v, u).is_zero()
        w = pair_minor(u, 3, 4)
        assert w == parse_vector("(2,-1,0,0)")
        assert inner(w, u).is_zero()

    def test_zero_center_entry_rejected(self):
        with pytest.raises(InvalidInputError):
            pair_minor(parse_vector("(1,0,1,1)"), 1, 2)


class TestConnectors4:
    def test_all_ones(self):
        c = connectors4(parse_vector("(1,1,1,1)"))
        assert c["v1234"] == parse_vector("(1,1,-1,-1)")
        assert c["v1324"] == parse_vector("(1,-1,1,-1)")
        assert c["v1423"] == parse_vector("(1,-1,-1,1)")

    def test_symbolic_moduli_expansion(self):
        sv = sym_gadget_vectors(4)
        assert sym_inner(sv["u"], sv["v1324"]) == moduli_poly([1, -1, 1, -1])

    def test_unequal_moduli_connector_not_orthogonal(self):
        u = parse_vector("(1,1,2,2)")
        c = connectors4(u)
        assert inner(u, c["v1234"]) == CycloNum.from_int(-6)


class TestBuildGadget4:
    def test_counts_and_verification(self, gadget4_ones):
        assert len(gadget4_ones.vectors) == 20
        assert len(gadget4_ones.blocks) == 13
        assert gadget4_ones.verify_blocks()

    def test_hidden_blocks_present(self, gadget4_ones):
        assert gadget4_ones.blocks["B1234"] == ("v12", "w12", "v34", "w34")

    def test_emergent_block(self, gadget4_ones):
        assert emergent_block(gadget4_ones) == ("w14", "w23", "v1234", "v1324")

    def test_w14_v1234_identity(self):
        sv = sym_gadget_vectors(4)
        assert sym_inner(sv["w14"], sv["v1234"]) == moduli_poly([0, 1, -1, 0])

    def test_unequal_moduli_rejected(self):
        with pytest.raises(ForcingPreconditionError):
            build_gadget4(parse_vector("(1,1,2,2)"))

    def test_other_unbiased_center_accepted(self):
        g = build_gadget4(parse_vector("(1,i,-1,-i)"))
        assert g.verify_blocks()

    def test_full_tetrad_count(self, gadget4_ones):
        full = gadget4_ones.hypergraph(constructed_only=False)
        assert len(full.edges) == 17
        name_of = {i: ns for i, ns in gadget4_ones.ray_names().items()}
        by_names = {
            tuple(sorted(name_of[v][0] for v in e)) for e in full.edges
        }
        assert tuple(sorted(("u", "v1234", "v1324", "v1423"))) in by_names
        assert tuple(sorted(("w14", "w23", "v1234", "v1324"))) in by_names

    def test_center_forced_unbiased_to_rim(self, gadget4_ones):
        u = gadget4_ones.center
        for k in range(1, 5):
            assert is_unbiased(u, gadget4_ones.vectors[f"e{k}"])


class TestGadgetStates:
    def test_constructed_13_states(self, gadget4_ones):
        S = enumerate_states(gadget4_ones.hypergraph())
        rep = verdicts(S)
        assert S.count == 36
        assert rep.separating

    def test_iso_with_block_fixture_13(self, gadget4_ones, b13_H):
        H13 = gadget4_ones.hypergraph()
        mapping = find_isomorphism(H13, b13_H)
        assert mapping is not None
        assert same_state_set(
            enumerate_states(H13), enumerate_states(b13_H), mapping
        )

    def test_constructed_10_iso_with_block_fixture_10(self, gadget4_ones, b10_H):
        ten = {
            n: gadget4_ones.blocks[n]
            for n in ("comp", "B12", "B13", "B14", "B23", "B24", "B34", "Ca", "Cb", "Cc")
        }
        g10 = GadgetBlocks(4, gadget4_ones.center, gadget4_ones.vectors, ten)
        assert iso_check(g10.hypergraph(), b10_H)


class TestForcing:
    def test_d4_nullspace(self):
        ms = forcing_check(4)
        assert ms.equations == ((1, 1, -1, -1), (1, -1, 1, -1), (1, -1, -1, 1))
        assert ms.nullspace_primitive() == [[1, 1, 1, 1]]

    def test_d5_nullspace(self):
        assert forcing_check(5).nullspace_primitive() == [[1, 1, 1, 1, 1]]

    def test_single_connector_three_dimensional(self):
        assert len(forcing_check(4, ["v1234"]).nullspace()) == 3

    def test_nullspace_entries_rational(self):
        for row in forcing_check(4).nullspace():
            assert all(isinstance(x, Fraction) for x in row)

    def test_unknown_connector(self):
        with pytest.raises(InvalidInputError):
            forcing_check(4, ["v9999"])


class TestGadget5:
    def test_triple_minor_support_and_orthogonality(self):
        u = parse_vector("(1,1,1,1,1)")
        v = triple_minor5(u, 1, 2, 3)
        assert all(v[k].is_zero() for k in (0, 1, 2))
        assert inner(v, u).is_zero()

    def test_g_connectors(self):
        u = parse_vector("(1,1,1,1,1)")
        g = g_connectors5(u)
        assert g["g3"] == parse_vector("(0,0,1,0,-1)")
        assert g["g1"] == parse_vector("(1,0,0,0,-1)")

    def test_block_structure(self, gadget5_ones):
        scaffold = [n for n in gadget5_ones.blocks if n.startswith("B")]
        conn = [n for n in gadget5_ones.blocks if n.startswith("C")]
        assert len(scaffold) == 10 and len(conn) == 4
        assert gadget5_ones.verify_blocks()

    def test_connector_blocks_have_exact_completions(self, gadget5_ones):
        for g in range(1, 5):
            block = gadget5_ones.blocks[f"C{g}"]
            assert len(block) == 5
            vs = [gadget5_ones.vectors[n] for n in block]
            for a, b in combinations(vs, 2):
                assert inner(a, b).is_zero()

    def test_random_center_minor_identity(self):
        rng = random.Random(99)
        for _ in range(100):
            u = random_center(rng, 5)
            for ijk in ((1, 2, 3), (1, 3, 5), (2, 4, 5)):
                assert inner(triple_minor5(u, *ijk), u).is_zero()

    def test_disjoint_support_principle(self, gadget5_ones):
        # any two constructed vectors with disjoint supports are orthogonal
        vecs = list(gadget5_ones.vectors.values())
        for a, b in combinations(vecs, 2):
            sa = {k for k, x in enumerate(a.entries) if not x.is_zero()}
            sb = {k for k, x in enumerate(b.entries) if not x.is_zero()}
            if not sa & sb:
                assert inner(a, b).is_zero()

    def test_unequal_moduli_rejected(self):
        with pytest.raises(ForcingPreconditionError):
            build_gadget5(parse_vector("(1,1,1,1,2)"))


class TestFixedSets:
    def test_peres_counts(self):
        P = peres24()
        H = peres24_hypergraph()
        assert len(P) == 24
        assert len(H.edges) == 24
        assert enumerate_states(H).count == 0

    def test_cabello_counts(self):
        C = cabello18()
        H = cabello18_hypergraph()
        assert len(C) == 18
        assert len(H.edges) == 9
        assert enumerate_states(H).count == 0

    def test_each_cabello_ray_in_two_contexts(self):
        H = cabello18_hypergraph()
        from collections import Counter

        deg = Counter(v for e in H.edges for v in e)
        assert set(deg.values()) == {2}

    def test_subset_relations(self, gadget4_ones):
        P, C = peres24(), cabello18()
        assert projective_subset(C, P)
        assert projective_subset(gadget4_ones.vectors, P)

    def test_union_coverage(self, gadget4_ones):
        P, C = peres24(), cabello18()
        covered, missing = ray_union_coverage([gadget4_ones.vectors, C], P)
        assert len(covered) == 23
        assert [str(P[m]) for m in missing] == ["(1,-1,1,1)"]

    def test_correspondence_rows(self, gadget4_ones):
        # paired rows agree projectively except the documented v1423/v47 row
        for glabel, gvec, clabel, cvec in CORRESPONDENCE:
            assert collinear(gadget4_ones.vectors[glabel], parse_vector(gvec))
            if clabel is None:
                continue
            same_ray = collinear(parse_vector(gvec), parse_vector(cvec))
            assert same_ray == (glabel != "v1423"), (glabel, clabel)

    def test_cabello_vectors_match_correspondence(self):
        C = cabello18()
        for _, _, clabel, cvec in CORRESPONDENCE:
            if clabel is not None:
                assert C[clabel] == parse_vector(cvec)


class TestReconstructions:
    def test_repaired_rows_all_pass(self):
        assert all(r.ok for r in run_reconstructions(RECONSTRUCTIONS_REPAIRED))

    def test_printed_rows_fail_as_documented(self):
        results = {r.target: r for r in run_reconstructions(RECONSTRUCTIONS_PRINTED)}
        assert results["e3"].ok and results["v34"].ok and results["v37"].ok
        assert not results["v23"].ok and "not a single ray" in results["v23"].detail
        assert not results["w34"].ok and "not a single ray" in results["w34"].detail
        assert not results["w13"].ok and "not the stated ray" in results["w13"].detail

    def test_reconstruct_missing_raises_on_dependent_triple(self):
        C = cabello18()
        with pytest.raises(ReconstructionError):
            reconstruct_missing(
                C, [(("v18", "v23", "v29"), parse_vector("(1,0,0,-1)"))]
            )

    def test_reconstruct_missing_checks_target(self):
        C = cabello18()
        with pytest.raises(ReconstructionError):
            reconstruct_missing(
                C, [(("v12", "v18", "v28"), parse_vector("(1,1,1,1)"))]
            )

    def test_reconstruct_missing_happy_path(self):
        C = cabello18()
        out = reconstruct_missing(
            C, [(("v12", "v18", "v28"), parse_vector("(0,0,1,0)"))]
        )
        assert collinear(out[0], parse_vector("(0,0,1,0)"))


def test_cabello_fixture_is_self_consistent():
    # every fixture label parses and the hypergraph names map back
    C = cabello18()
    assert set(C) == set(CABELLO_VECTORS)
    H = cabello18_hypergraph()
    names = H.meta["names"]
    assert sorted(names.values()) == sorted(CABELLO_VECTORS)
