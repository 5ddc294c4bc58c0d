"""Row functions, atlas generation, origins and coloring policies."""

import pytest

from ksforge.atlas import (
    ROW_LABELS,
    SEEDS,
    SUBGROUPS,
    ColorClass,
    RayAtlas,
    apply_row,
    closure_probe,
    generate_atlas,
    row_multiplicity,
)
from ksforge.cyclo import (
    DegenerateInputError,
    InvalidInputError,
    canonicalize,
    collinear,
    inner,
    is_unbiased,
    parse_vector,
)
from ksforge.fixtures import GRID_CELLS, GRID_COUNTS, RAY_CATALOG, ROW_ORDER

COLOR_OF_CODE = {
    "k": ColorClass.UNIVERSAL,
    "r": ColorClass.RED,
    "g": ColorClass.GREEN,
    "b": ColorClass.BLUE,
}


class TestSeeds:
    def test_seed_values(self):
        assert SEEDS[0] == parse_vector("(1,1,1)")
        assert SEEDS[4] == parse_vector("(1,w2,1)")
        assert SEEDS[8] == parse_vector("(1,1,w)")

    def test_each_triple_is_an_orthogonal_basis(self):
        for start in (0, 3, 6):
            triple = SEEDS[start:start + 3]
            for i in range(3):
                for j in range(i + 1, 3):
                    assert inner(triple[i], triple[j]).is_zero()

    def test_triples_mutually_unbiased_and_unbiased_to_axes(self):
        axes = [parse_vector(t) for t in ("(1,0,0)", "(0,1,0)", "(0,0,1)")]
        for a in range(9):
            for b in range(9):
                if a // 3 != b // 3:
                    assert is_unbiased(SEEDS[a], SEEDS[b])
            for ax in axes:
                assert is_unbiased(SEEDS[a], ax)


class TestRows:
    def test_row_count_and_order(self):
        assert len(ROW_LABELS) == 25
        assert tuple(ROW_ORDER) == ROW_LABELS

    @pytest.mark.parametrize("label", ROW_LABELS)
    def test_grid_reproduction(self, label):
        # every printed cell matches the row formula projectively
        for seed in range(1, 10):
            got = apply_row(label, SEEDS[seed - 1])
            want = parse_vector(GRID_CELLS[(label, seed)])
            assert collinear(got, want), (label, seed)

    def test_printed_examples(self):
        assert collinear(apply_row("d1", SEEDS[0]), parse_vector("(-2,1,1)"))
        assert collinear(apply_row("b12", SEEDS[3]), parse_vector("(w,w2,-w2)"))
        assert apply_row("a2", SEEDS[6]) == parse_vector("(0,1,0)")

    @pytest.mark.parametrize("label", ROW_LABELS)
    def test_row_multiplicities(self, label):
        assert row_multiplicity(label) == GRID_COUNTS[label]

    def test_unknown_label(self):
        with pytest.raises(InvalidInputError):
            apply_row("zz", SEEDS[0])


class TestAtlas:
    def test_counts(self, atlas9):
        assert len(atlas9) == 165
        for seeds in SUBGROUPS.values():
            assert len(generate_atlas(seeds)) == 69
        for j in range(1, 10):
            assert len(generate_atlas({j})) == 25

    def test_rays_pairwise_non_collinear(self, atlas9):
        keys = {r.canon.key() for r in atlas9.rays}
        assert len(keys) == 165

    def test_deterministic_ids(self, atlas9):
        again = generate_atlas(range(1, 10))
        assert [r.canon for r in again.rays] == [r.canon for r in atlas9.rays]

    def test_catalog_bijection_and_colors(self, atlas9):
        seen = set()
        for label, vec, code in RAY_CATALOG:
            rid = atlas9.ray_id_of(parse_vector(vec))
            assert rid is not None, label
            seen.add(rid)
            assert atlas9.color(rid, "first_claim") == COLOR_OF_CODE[code], label
        assert len(seen) == 165

    def test_catalog_labels_consistent_with_grid(self, atlas9):
        # label Xj names the ray printed in the grid at (row X, seed j)
        for label, vec, _ in RAY_CATALOG:
            row, seed = label[:-1], int(label[-1])
            assert collinear(parse_vector(vec), parse_vector(GRID_CELLS[(row, seed)]))

    def test_universal_rays_are_the_axes(self, atlas9):
        universal = [
            r for r in atlas9.rays
            if atlas9.color(r.id, "strict") == ColorClass.UNIVERSAL
        ]
        assert len(universal) == 3
        axes = {parse_vector(t).key() for t in ("(1,0,0)", "(0,1,0)", "(0,0,1)")}
        assert {r.canon.key() for r in universal} == axes

    def test_shared_ray_origin_and_policies(self, atlas9):
        rid = atlas9.ray_id_of(parse_vector("(0,1,1)"))
        assert sorted(atlas9.origin[rid]) == [1, 4, 7]
        assert atlas9.color(rid, "first_claim") == ColorClass.RED
        assert atlas9.color(rid, "strict") == ColorClass.MIXED

    def test_pure_seed_ray(self, atlas9):
        rid = atlas9.ray_id_of(parse_vector("(1,w2,1)"))
        assert atlas9.color(rid, "first_claim") == ColorClass.GREEN
        assert atlas9.color(rid, "strict") == ColorClass.GREEN

    def test_origin_monotone_under_more_seeds(self, atlas9):
        sub = generate_atlas({1, 2, 3})
        for ray in sub.rays:
            rid9 = atlas9.ray_id_of(ray.canon)
            assert sub.origin[ray.id] <= atlas9.origin[rid9]

    def test_generation_log_covers_all_pairs(self, atlas9):
        assert set(atlas9.log) == {(row, j) for row in ROW_LABELS for j in range(1, 10)}

    def test_color_requires_nine_seeds(self):
        sub = generate_atlas({1})
        with pytest.raises(InvalidInputError):
            sub.color(0, "first_claim")

    def test_empty_seed_set_rejected(self):
        with pytest.raises(InvalidInputError):
            generate_atlas(set())

    def test_json_round_trip(self, atlas9):
        again = RayAtlas.from_json(atlas9.to_json())
        assert [r.canon for r in again.rays] == [r.canon for r in atlas9.rays]
        assert again.origin == atlas9.origin
        assert again.log == atlas9.log
        assert again.colors_first_claim == atlas9.colors_first_claim


class TestClosureProbe:
    def test_escaping_product(self, atlas9):
        a11 = atlas9.ray_id_of(parse_vector("(1,0,0)"))
        d21 = atlas9.ray_id_of(parse_vector("(1,-2,1)"))
        assert closure_probe(atlas9, a11, d21) is False

    def test_closed_products(self, atlas9):
        a11 = atlas9.ray_id_of(parse_vector("(1,0,0)"))
        a21 = atlas9.ray_id_of(parse_vector("(0,1,0)"))
        assert closure_probe(atlas9, a11, a21) is True
        u1 = atlas9.ray_id_of(parse_vector("(1,1,1)"))
        c11 = atlas9.ray_id_of(parse_vector("(0,1,-1)"))
        assert closure_probe(atlas9, u1, c11) is True

    def test_parallel_inputs_degenerate(self, atlas9):
        a11 = atlas9.ray_id_of(parse_vector("(1,0,0)"))
        with pytest.raises(DegenerateInputError):
            closure_probe(atlas9, a11, a11)
