import random

import pytest

from anosov.corpus import d3_degree2_rep, m_rho3
from anosov.fingrp import (
    character_inner_product,
    conjugate_rep,
    fs_indicator_value,
    generate_group,
    multiple,
    natural_rep,
)
from anosov.ratmat import RatMatrix
from anosov.repdec import (
    IrreducibleCertificate,
    commutant,
    component_profile,
    decompose,
    restrict_rep,
    split_once,
)

from conftest import random_unimodular


class TestCommutant:
    def test_rho3_scalars_only(self, rho3):
        assert commutant(rho3).dimension == 1

    def test_triple_rho3(self, rho3):
        assert commutant(multiple(rho3, 3)).dimension == 9

    def test_c4_rotation(self, c4_rep):
        assert commutant(c4_rep).dimension == 2

    def test_dimension_equals_character_inner_product(
        self, rho3, rho1, q8_rep, klein, torus, c4_rep, c5_rep
    ):
        for rep in (rho3, rho1, q8_rep, klein, torus, c4_rep, c5_rep, m_rho3(2)):
            assert commutant(rep).dimension == character_inner_product(rep, rep)

    def test_basis_elements_commute_exactly(self, q8_rep):
        for b in commutant(q8_rep).basis:
            for img in q8_rep.image_of_generators():
                assert b @ img == img @ b


class TestSplitOnce:
    def test_diagonal_c2_splits(self, klein):
        result = split_once(klein, seed=0)
        assert not isinstance(result, IrreducibleCertificate)
        b1, b2 = result
        assert b1.cols == b2.cols == 1

    def test_rho3_certified_irreducible(self, rho3):
        result = split_once(rho3, seed=0)
        assert isinstance(result, IrreducibleCertificate)
        assert result.commutant_dim == 1

    def test_degree2_rep_splits_into_1_1_2(self, d3):
        profiles = decompose(d3_degree2_rep(d3), seed=0)
        assert sorted(p.dimension for p in profiles) == [1, 1, 2]
        assert all(p.multiplicity == 1 for p in profiles)


class TestDecompose:
    def test_isotypic_multiplicity(self, rho3):
        profiles = decompose(multiple(rho3, 3), seed=0)
        assert len(profiles) == 1
        assert profiles[0].multiplicity == 3 and profiles[0].dimension == 2

    def test_klein_two_classes(self, klein):
        profiles = decompose(klein, seed=0)
        assert len(profiles) == 2
        assert all(p.multiplicity == 1 and p.dimension == 1 for p in profiles)

    def test_trivial_dim2(self, torus):
        profiles = decompose(torus, seed=0)
        assert len(profiles) == 1 and profiles[0].multiplicity == 2

    def test_dimension_bookkeeping(self, q8_rep, c5_rep):
        for rep in (q8_rep, c5_rep, m_rho3(4)):
            profiles = decompose(rep, seed=0)
            assert sum(p.multiplicity * p.dimension for p in profiles) == rep.dimension
            for p in profiles:
                assert p.dim_E == p.m_schur**2 * p.n_field
                assert p.k_dim * p.e_complex == p.dimension
                assert fs_indicator_value(p.sub_rep) in (p.e_complex, 0, -p.e_complex)

    def test_deterministic_given_seed(self, rho3):
        rep = multiple(rho3, 2)
        first = decompose(rep, seed=42)
        second = decompose(rep, seed=42)
        assert [p.to_json_obj() for p in first] == [p.to_json_obj() for p in second]
        assert [p.subspace_basis for p in first] == [p.subspace_basis for p in second]

    def test_members_carry_explicit_base_change(self, rho3):
        rep = multiple(rho3, 3)
        profiles = decompose(rep, seed=0)
        rep0 = profiles[0].sub_rep
        for member in profiles[0].members:
            sub = restrict_rep(rep, member.basis)
            t = member.intertwiner
            for g_sub, g_rep0 in zip(sub.image_of_generators(), rep0.image_of_generators()):
                assert g_sub @ t == t @ g_rep0

    def test_base_change_invariance(self, rho3):
        rng = random.Random(4)
        rep = multiple(rho3, 2)
        u = random_unimodular(rng, rep.dimension)
        moved = conjugate_rep(rep, u)
        a = [p.to_json_obj() for p in decompose(rep, seed=0)]
        b = [p.to_json_obj() for p in decompose(moved, seed=0)]
        assert a == b


class TestComponentProfile:
    def test_rho3_real_type(self, rho3):
        p = component_profile(rho3)
        assert (p.dim_E, p.n_field, p.m_schur, p.e_complex) == (1, 1, 1, 1)
        assert (p.fs_sign, p.r_components) == ("+", 1)

    def test_c4_complex_type(self, c4_rep):
        p = component_profile(c4_rep)
        assert (p.dim_E, p.n_field, p.m_schur, p.e_complex) == (2, 2, 1, 2)
        assert (p.fs_sign, p.r_components) == ("0", 1)

    def test_q8_quaternionic_type(self, q8_rep):
        p = component_profile(q8_rep)
        assert (p.dim_E, p.n_field, p.m_schur, p.e_complex) == (4, 1, 2, 2)
        assert (p.fs_sign, p.r_components) == ("-", 1)

    def test_c5_rotation(self, c5_rep):
        p = component_profile(c5_rep)
        assert (p.dim_E, p.n_field, p.m_schur, p.e_complex) == (4, 4, 1, 4)
        assert (p.fs_sign, p.r_components) == ("0", 2)
