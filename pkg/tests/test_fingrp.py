from fractions import Fraction

import pytest

from anosov.corpus import d3_degree2_rep, rho3_prime
from anosov.fingrp import (
    GroupClosureError,
    HomomorphismError,
    character,
    character_inner_product,
    conjugacy_classes,
    direct_sum,
    fs_indicator_value,
    generate_group,
    group_rep_from_json_obj,
    multiple,
    natural_rep,
    rep_from_generator_images,
)
from anosov.ratmat import RatMatrix
from anosov.repdec import intertwiner_space


class TestGenerateGroup:
    def test_d3_order_and_classes(self, d3):
        assert d3.order == 6
        assert sorted(len(c) for c in conjugacy_classes(d3)) == [1, 2, 3]
        assert conjugacy_classes(d3)[0] == [0]

    def test_trivial_group(self):
        g = generate_group([RatMatrix.identity(2)])
        assert g.order == 1
        assert conjugacy_classes(g) == [[0]]

    def test_rotation_gives_c4(self):
        g = generate_group([RatMatrix.from_rows([[0, -1], [1, 0]])])
        assert g.order == 4
        assert [len(c) for c in conjugacy_classes(g)] == [1, 1, 1, 1]

    def test_infinite_group_guard(self):
        with pytest.raises(GroupClosureError):
            generate_group([RatMatrix.from_rows([[1, 1], [0, 1]])], max_order=50)

    def test_non_invertible_generator(self):
        with pytest.raises(ValueError):
            generate_group([RatMatrix.from_rows([[1, 1], [1, 1]])])

    def test_cayley_table_consistent(self, d3, q8_rep):
        for group in (d3, q8_rep.group):
            for g in range(group.order):
                for h in range(group.order):
                    assert (
                        group.elements[group.mul_table[g][h]]
                        == group.elements[g] @ group.elements[h]
                    )


class TestCharacters:
    def test_rho3_values(self, d3, rho3):
        chi = character(rho3)
        a_idx, b_idx = d3.gen_indices
        assert (chi[0], chi[a_idx], chi[b_idx]) == (2, -1, 0)

    def test_trivial_rep_constant_one(self, d3, rho1):
        assert set(character(rho1)) == {Fraction(1)}

    def test_degree2_rep_values(self, d3):
        rep = d3_degree2_rep(d3)
        chi = character(rep)
        a_idx, b_idx = d3.gen_indices
        assert (chi[0], chi[a_idx], chi[b_idx]) == (4, 1, 0)

    def test_characters_are_class_functions(self, d3, rho3, q8_rep):
        for rep in (rho3, q8_rep):
            chi = character(rep)
            for cls in conjugacy_classes(rep.group):
                assert len({chi[g] for g in cls}) == 1

    def test_inner_product_positive_integer(self, rho3, rho1, rho2, q8_rep):
        for rep in (rho3, rho1, rho2, q8_rep, multiple(rho3, 2)):
            value = character_inner_product(rep, rep)
            assert value.denominator == 1 and value >= 1


class TestIndicatorSum:
    def test_rho3(self, rho3):
        # squares of the six elements hit {1, a, a^2} with traces 2, -1, -1
        assert fs_indicator_value(rho3) == 1

    def test_trivial(self, rho1):
        assert fs_indicator_value(rho1) == 1

    def test_c4_rotation(self):
        rep = natural_rep(generate_group([RatMatrix.from_rows([[0, -1], [1, 0]])]))
        assert fs_indicator_value(rep) == 0

    def test_additive_over_direct_sums(self, d3, rho3, rho2):
        total = fs_indicator_value(direct_sum([rho3, rho2]))
        assert total == fs_indicator_value(rho3) + fs_indicator_value(rho2)


class TestRepFromGeneratorImages:
    def test_rho3_prime_valid_and_equivalent(self, d3, rho3):
        rep = rho3_prime(d3)
        rep.check_homomorphism()
        hom = intertwiner_space(rho3.image_of_generators(), rep.image_of_generators())
        assert hom, "swapped reflection must stay Q-equivalent to the natural model"

    def test_relation_violation_raises(self, d3):
        with pytest.raises(HomomorphismError):
            rep_from_generator_images(
                d3, [RatMatrix.from_rows([[-1]]), RatMatrix.identity(1)]
            )

    def test_size_mismatch(self, d3):
        with pytest.raises(ValueError):
            rep_from_generator_images(d3, [RatMatrix.identity(1)])


def test_group_rep_json_schema(d3):
    obj = {
        "generators": [[["0", "-1"], ["1", "-1"]], [["0", "-1"], ["-1", "0"]]],
        "rep_images": [[["1"]], [["-1"]]],
        "class": 2,
    }
    group, rep, c = group_rep_from_json_obj(obj)
    assert group.order == 6 and rep.dimension == 1 and c == 2
    group2, rep2, c2 = group_rep_from_json_obj({"generators": obj["generators"]})
    assert rep2.dimension == 2 and c2 is None
