import random

import pytest

from anosov.corpus import circle_rep, m_rho3
from anosov.decider import (
    CriterionError,
    decide,
    decide_solvable,
    decide_with_witness,
    demo,
    no_certificate_search,
    porteous_flat,
)
from anosov.fingrp import conjugate_rep, multiple
from anosov.intpoly import IntPoly
from anosov.ratmat import RatMatrix
from anosov.witness import verify_witness

from conftest import random_unimodular


class TestDecide:
    @pytest.mark.parametrize("c", [1, 2, 3])
    def test_surplus_multiplicity_is_yes(self, c):
        assert decide(m_rho3(c + 1), c).admits_anosov

    @pytest.mark.parametrize("c", [1, 2, 3])
    def test_exact_multiplicity_is_no(self, c):
        assert not decide(m_rho3(c), c).admits_anosov

    def test_boundary_sweep(self):
        for m in range(1, 5):
            rep = m_rho3(m)
            for c in range(1, 5):
                assert decide(rep, c).admits_anosov == (m >= c + 1)

    def test_klein_bottle(self, klein):
        verdict = decide(klein, 1)
        assert not verdict.admits_anosov
        assert len(verdict.components) == 2

    def test_threshold_field_is_exact_rational(self, rho3):
        verdict = decide(multiple(rho3, 3), 2)
        assert verdict.components[0]["threshold"] == "2/3"

    def test_invalid_class(self, rho3):
        with pytest.raises(ValueError):
            decide(rho3, 0)

    def test_base_change_invariance(self, rho3):
        rng = random.Random(17)
        rep = multiple(rho3, 3)
        moved = conjugate_rep(rep, random_unimodular(rng, 6))
        for c in (1, 2, 3):
            a, b = decide(rep, c), decide(moved, c)
            assert a.admits_anosov == b.admits_anosov
            assert a.components == b.components


class TestPorteous:
    def test_torus(self, torus):
        verdict = porteous_flat(torus)
        assert verdict.admits_anosov and verdict.porteous_agrees

    def test_circle(self):
        verdict = porteous_flat(circle_rep())
        assert not verdict.admits_anosov and verdict.porteous_agrees

    def test_klein(self, klein):
        verdict = porteous_flat(klein)
        assert not verdict.admits_anosov and verdict.porteous_agrees


class TestSolvableVariant:
    def test_metadata_roundtrip(self, rho3):
        verdict = decide_solvable(multiple(rho3, 2), 1, 2)
        assert verdict.model == {"family": "free-nilpotent-and-solvable", "c": 1, "d": 2}
        assert verdict.admits_anosov

    def test_same_verdicts_as_decide(self, rho3, klein):
        for rep, c in ((multiple(rho3, 3), 2), (klein, 1)):
            assert decide_solvable(rep, c, 3).admits_anosov == decide(rep, c).admits_anosov


class TestWitnessPipeline:
    @pytest.mark.parametrize("m,c", [(2, 1), (3, 2), (4, 3)])
    def test_isotypic_witnesses(self, m, c):
        verdict = decide_with_witness(m_rho3(m), c)
        assert verdict.admits_anosov and verdict.witness_status == "attached"
        cert = verdict.witness
        assert cert.is_valid and cert.construction_path == "tensor-shortcut"
        rerun = verify_witness(m_rho3(m), cert.witness, c)
        assert rerun.is_valid

    def test_torus_witness(self, torus):
        verdict = decide_with_witness(torus, 1)
        assert verdict.witness is not None
        assert IntPoly.from_rationals(verdict.witness.witness.char_poly()) == IntPoly((1, -3, 1))

    def test_c5_field_witness(self, c5_rep):
        verdict = decide_with_witness(c5_rep, 1)
        assert verdict.witness_status == "attached"
        rotation = c5_rep.image_of_generators()[0]
        assert verdict.witness.witness == RatMatrix.identity(4) + rotation
        assert verdict.witness.witness.det() == 1
        assert verdict.witness.construction_path == "field-through-commutant"

    def test_no_verdict_skips_search(self, klein):
        verdict = decide_with_witness(klein, 1)
        assert not verdict.admits_anosov
        assert verdict.witness is None and verdict.witness_status == "not-applicable"

    def test_mixed_classes_assemble(self, d3, rho3, rho1):
        from anosov.fingrp import direct_sum

        rep = direct_sum([rho1, rho1, rho3, rho3])
        verdict = decide_with_witness(rep, 1)
        assert verdict.admits_anosov and verdict.witness_status == "attached"
        assert verify_witness(rep, verdict.witness.witness, 1).is_valid

    def test_full_matrix_commutant_case(self):
        from anosov.corpus import torus_rep

        verdict = decide_with_witness(torus_rep(3), 2)
        assert verdict.witness_status == "attached"
        assert IntPoly.from_rationals(verdict.witness.witness.char_poly()) == IntPoly(
            (-1, -1, 0, 1)
        )

    def test_quaternionic_isotypic_pair(self, q8_rep):
        # doubled quaternionic component: YES at c = 1, witness reachable
        # through a real quadratic subfield of the matrix-quaternion commutant
        rep = multiple(q8_rep, 2)
        verdict = decide_with_witness(rep, 1)
        assert verdict.admits_anosov and verdict.witness_status == "attached"
        assert verify_witness(rep, verdict.witness.witness, 1).is_valid


class TestNoCertificateSearch:
    def test_isotypic_boundary(self, rho3):
        report = no_certificate_search(multiple(rho3, 2), 2, 2)
        assert report["hits"] == 0 and report["candidates_screened"] == 624

    def test_klein_bottle(self, klein):
        report = no_certificate_search(klein, 1, 5)
        assert report["hits"] == 0 and report["candidates_screened"] == 120

    def test_scalar_commutant(self, rho3):
        report = no_certificate_search(rho3, 1, 3)
        assert report["hits"] == 0

    def test_requires_no_verdict(self, torus):
        with pytest.raises(CriterionError):
            no_certificate_search(torus, 1, 3)


class TestDemos:
    def test_d3_artifacts(self):
        report = demo("d3")
        assert report["group_order"] == 6
        assert report["character_table"] == [
            ["1", "1", "1"],
            ["1", "1", "-1"],
            ["2", "-1", "0"],
        ]
        assert report["degree2_action_a"] == [
            ["0", "0", "0", "1"],
            ["0", "0", "-1", "1"],
            ["0", "-1", "0", "1"],
            ["1", "-1", "-1", "1"],
        ]
        assert report["boundary"]["3*rho3 at c=2"] is True
        assert report["boundary"]["2*rho3 at c=2"] is False

    def test_q8_profile(self):
        report = demo("q8")
        (profile,) = report["decomposition"]
        assert (profile["fs_sign"], profile["e"], profile["r_components"]) == ("-", 2, 1)
        assert report["verdict_c1"]["admits_anosov"] is False
        assert all(row["imaginary"] and row["relations_hold"] for row in report["splitting_fields"])

    def test_remaining_names(self):
        assert demo("klein")["no_certificate"]["hits"] == 0
        assert demo("torus")["verdict"]["admits_anosov"] is True
        assert demo("c5")["verdict"]["witness_status"] == "attached"
        report = demo("c4")
        assert report["verdict"]["admits_anosov"] is False
        assert report["unit_search_Q(i)"]["found"] is False

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            demo("nope")
