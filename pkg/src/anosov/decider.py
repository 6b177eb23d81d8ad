"""Top-level decision pipeline.

A representation admits a commuting c-hyperbolic integer-like matrix exactly
when every Q-irreducible component class, occurring with multiplicity m and
splitting into r real-irreducible components, satisfies r > c/m. The verdict
compares the exact rationals and cross-checks the integer form r·m > c.
Witness construction runs per isotypic block and reassembles through the
decomposition base change, then re-verifies the global matrix from scratch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import sympy

from .fingrp import RationalRep, character
from .hyper import DEFAULT_PRECISION_BITS
from .numfield import (
    cyclotomic_field,
    search_c_hyperbolic_unit,
    unit_generators_for_field,
)
from .ratmat import RatMatrix
from .repdec import ComponentProfile, decompose, restrict_rep
from .witness import (
    FIELD_THROUGH_COMMUTANT,
    LATTICE_SEARCH,
    TENSOR_SHORTCUT,
    WitnessCertificate,
    field_through_commutant,
    lattice_search,
    tensor_shortcut,
    verify_witness,
)

WITNESS_ROUNDS = 3
DEFAULT_EXPONENT_BOUND = 10
DEFAULT_LATTICE_HEIGHT = 4


class CriterionError(RuntimeError):
    pass


@dataclass(frozen=True)
class Verdict:
    admits_anosov: bool
    class_c: int
    components: tuple
    seed: int
    timings: dict
    witness: Optional[WitnessCertificate] = None
    witness_status: str = "not-requested"
    model: dict = field(default_factory=dict)
    porteous_agrees: Optional[bool] = None

    def to_json_obj(self) -> dict:
        obj = {
            "admits_anosov": self.admits_anosov,
            "class_c": self.class_c,
            "components": list(self.components),
            "seed": self.seed,
            "timings": self.timings,
        }
        if self.witness is not None:
            obj["witness"] = self.witness.to_json_obj()
        if self.witness_status != "not-requested":
            obj["witness_status"] = self.witness_status
        if self.model:
            obj["model"] = self.model
        if self.porteous_agrees is not None:
            obj["porteous_agrees"] = self.porteous_agrees
        return obj


def _component_rows(profiles: list[ComponentProfile], c: int) -> list[dict]:
    rows = []
    for p in profiles:
        threshold = Fraction(c, p.multiplicity)
        passes = Fraction(p.r_components) > threshold
        cross = p.r_components * p.multiplicity > c
        if passes is not cross:
            raise CriterionError(
                "exact rational comparison and integer cross-multiplication disagree"
            )
        rows.append(
            {
                "dimension": p.dimension,
                "multiplicity": p.multiplicity,
                "r_components": p.r_components,
                "threshold": f"{threshold.numerator}/{threshold.denominator}",
                "passes": passes,
            }
        )
    return rows


def decide(rep: RationalRep, c: int, seed: int = 0) -> Verdict:
    """Decision only; no witness construction."""
    if c < 1:
        raise ValueError("nilpotency class c must be >= 1")
    t0 = time.perf_counter()
    profiles = decompose(rep, seed)
    t1 = time.perf_counter()
    rows = _component_rows(profiles, c)
    verdict = all(r["passes"] for r in rows)
    return Verdict(
        admits_anosov=verdict,
        class_c=c,
        components=tuple(rows),
        seed=seed,
        timings={"decompose_s": round(t1 - t0, 6), "total_s": round(time.perf_counter() - t0, 6)},
    )


def porteous_flat(rep: RationalRep, seed: int = 0) -> Verdict:
    """The flat (c = 1) decision, with a cross-check that the classical
    phrasing agrees: multiplicity-1 components need r ≥ 2, components of
    multiplicity ≥ 2 always pass."""
    base = decide(rep, 1, seed)
    agrees = all(
        (row["multiplicity"] >= 2 or row["r_components"] >= 2) == row["passes"]
        for row in base.components
    )
    return Verdict(
        admits_anosov=base.admits_anosov,
        class_c=1,
        components=base.components,
        seed=seed,
        timings=base.timings,
        porteous_agrees=agrees,
    )


def decide_solvable(rep: RationalRep, c: int, d: int, seed: int = 0) -> Verdict:
    """Same criterion; the solvability class d is metadata only."""
    if d < 1:
        raise ValueError("solvability class d must be >= 1")
    base = decide(rep, c, seed)
    return Verdict(
        admits_anosov=base.admits_anosov,
        class_c=c,
        components=base.components,
        seed=seed,
        timings=base.timings,
        model={"family": "free-nilpotent-and-solvable", "c": c, "d": d},
    )


def _aligned_block_basis(profile: ComponentProfile) -> RatMatrix:
    """Columns spanning the isotypic subspace, ordered copy-major so the
    restricted representation is I_m ⊗ ρ0."""
    columns = []
    for member in profile.members:
        aligned = member.basis @ member.intertwiner
        columns.extend(list(aligned.column(j)) for j in range(aligned.cols))
    return RatMatrix.from_columns(columns)


def _block_witness(
    profile: ComponentProfile,
    block_rep: RationalRep,
    c: int,
    seed: int,
    precision_bits: int,
    round_index: int,
    exponent_bound: int,
    lattice_height: int,
) -> Optional[tuple[RatMatrix, str]]:
    if profile.absolutely_irreducible and profile.multiplicity > c:
        res = tensor_shortcut(profile, c, precision_bits, poly_skip=round_index)
        if res is not None:
            return res[0], TENSOR_SHORTCUT
    res = field_through_commutant(
        block_rep, c, seed, precision_bits, exponent_bound=exponent_bound * (2**round_index)
    )
    if res is not None:
        return res
    hit = lattice_search(block_rep, c, lattice_height * (2**round_index), seed, precision_bits)
    if hit is not None:
        return hit, LATTICE_SEARCH
    return None


def decide_with_witness(
    rep: RationalRep,
    c: int,
    seed: int = 0,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    exponent_bound: int = DEFAULT_EXPONENT_BOUND,
    lattice_height: int = DEFAULT_LATTICE_HEIGHT,
) -> Verdict:
    """Decision plus, on YES, a verified witness assembled from per-isotypic
    constructions. A YES verdict is kept even when the bounded searches fail;
    the witness is then marked not-found-within-bounds."""
    if c < 1:
        raise ValueError("nilpotency class c must be >= 1")
    t0 = time.perf_counter()
    profiles = decompose(rep, seed)
    rows = _component_rows(profiles, c)
    verdict = all(r["passes"] for r in rows)
    timings = {"decompose_s": round(time.perf_counter() - t0, 6)}
    if not verdict:
        return Verdict(
            admits_anosov=False,
            class_c=c,
            components=tuple(rows),
            seed=seed,
            timings={**timings, "total_s": round(time.perf_counter() - t0, 6)},
            witness_status="not-applicable",
        )
    t1 = time.perf_counter()
    block_bases = [_aligned_block_basis(p) for p in profiles]
    block_reps = [restrict_rep(rep, b) for b in block_bases]
    s_all = RatMatrix.from_columns(
        [list(b.column(j)) for b in block_bases for j in range(b.cols)]
    )
    s_all_inv = s_all.inverse()
    certificate = None
    for round_index in range(WITNESS_ROUNDS):
        blocks = []
        paths = []
        ok = True
        for profile, block_rep in zip(profiles, block_reps):
            res = _block_witness(
                profile, block_rep, c, seed, precision_bits, round_index,
                exponent_bound, lattice_height,
            )
            if res is None:
                ok = False
                break
            blocks.append(res[0])
            paths.append(res[1])
        if not ok:
            continue
        candidate = s_all @ RatMatrix.block_diag(blocks) @ s_all_inv
        cert = verify_witness(rep, candidate, c, precision_bits, construction_path="+".join(paths))
        if cert.is_valid:
            certificate = cert
            break
    timings["witness_s"] = round(time.perf_counter() - t1, 6)
    timings["total_s"] = round(time.perf_counter() - t0, 6)
    return Verdict(
        admits_anosov=True,
        class_c=c,
        components=tuple(rows),
        seed=seed,
        timings=timings,
        witness=certificate,
        witness_status="attached" if certificate is not None else "not-found-within-bounds",
    )


def no_certificate_search(rep: RationalRep, c: int, height_bound: int, seed: int = 0) -> dict:
    """Empirical corroboration of a NO verdict: exhaustive lattice search up
    to the height bound, reporting the (expected-zero) hit count."""
    base = decide(rep, c, seed)
    if base.admits_anosov:
        raise CriterionError("no-certificate search requires a NO verdict")
    hit, screened = lattice_search(rep, c, height_bound, seed, count_only=True)
    return {
        "class_c": c,
        "height_bound": height_bound,
        "candidates_screened": screened,
        "hits": 0 if hit is None else 1,
        "hit": None if hit is None else hit.to_json_obj(),
    }


# -- demo corpus -------------------------------------------------------------------


def demo(name: str, seed: int = 0) -> dict:
    """Run the full pipeline on a named corpus entry and return the report
    artifacts (exact matrices as string entries)."""
    from . import corpus
    from .freenilp import restricted_degree2_action
    from .repdec import decomposition_report

    if name not in corpus.DEMO_NAMES:
        raise ValueError(f"unknown demo {name!r}; choose from {corpus.DEMO_NAMES}")
    if name == "d3":
        group = corpus.d3_group()
        reps = [corpus.rho1(group), corpus.rho2(group), corpus.rho3(group)]
        class_reps = [0, group.gen_indices[0], group.gen_indices[1]]
        table = [[str(character(r)[g]) for g in class_reps] for r in reps]
        a_img, b_img = corpus.rho3(group).image_of_generators()
        pairs = [(1, 3), (1, 4), (2, 3), (2, 4)]
        mat_a = restricted_degree2_action(RatMatrix.block_diag([a_img, a_img]), pairs)
        mat_b = restricted_degree2_action(RatMatrix.block_diag([b_img, b_img]), pairs)
        return {
            "name": "d3",
            "group_order": group.order,
            "conjugacy_class_sizes": [1, 2, 3],
            "character_table": table,
            "degree2_action_a": mat_a.to_json_obj(),
            "degree2_action_b": mat_b.to_json_obj(),
            "boundary": {
                "3*rho3 at c=2": decide(corpus.m_rho3(3), 2, seed).admits_anosov,
                "2*rho3 at c=2": decide(corpus.m_rho3(2), 2, seed).admits_anosov,
            },
        }
    if name == "q8":
        rep = corpus.q8_rep()
        profiles = decompose(rep, seed)
        return {
            "name": "q8",
            "group_order": rep.group.order,
            "decomposition": decomposition_report(profiles),
            "verdict_c1": decide(rep, 1, seed).to_json_obj(),
            "splitting_fields": _q8_splitting_field_family(),
        }
    if name == "klein":
        rep = corpus.klein_rep()
        return {
            "name": "klein",
            "verdict": porteous_flat(rep, seed).to_json_obj(),
            "no_certificate": no_certificate_search(rep, 1, 5, seed),
        }
    if name == "torus":
        rep = corpus.torus_rep()
        return {
            "name": "torus",
            "verdict": decide_with_witness(rep, 1, seed).to_json_obj(),
            "porteous": porteous_flat(rep, seed).to_json_obj(),
        }
    if name == "c5":
        rep = corpus.c5_rep()
        return {"name": "c5", "verdict": decide_with_witness(rep, 1, seed).to_json_obj()}
    rep = corpus.c4_rep()
    field_ctx = cyclotomic_field(4)
    outcome = search_c_hyperbolic_unit(field_ctx, unit_generators_for_field(field_ctx), 1, 12)
    return {
        "name": "c4",
        "verdict": decide(rep, 1, seed).to_json_obj(),
        "unit_search_Q(i)": {"found": outcome.found, "reason": outcome.reason},
    }


def _q8_splitting_field_family() -> list[dict]:
    """The two-dimensional model over Q(√(−1−α²)) for small rational α: the
    defining relations hold exactly, and the field is always imaginary."""
    out = []
    for alpha in (0, 1, 2):
        d = -1 - alpha * alpha
        beta = sympy.sqrt(d)
        rho_i = sympy.Matrix([[0, -1], [1, 0]])
        rho_j = sympy.Matrix([[alpha, beta], [beta, -alpha]])
        relations = (
            sympy.simplify(rho_i**2 + sympy.eye(2)) == sympy.zeros(2)
            and sympy.simplify(rho_j**2 + sympy.eye(2)) == sympy.zeros(2)
            and sympy.simplify(rho_i * rho_j + rho_j * rho_i) == sympy.zeros(2)
        )
        out.append({"alpha": alpha, "field": f"Q(sqrt({d}))", "relations_hold": relations, "imaginary": d < 0})
    return out
