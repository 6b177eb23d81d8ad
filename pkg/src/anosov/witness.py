"""Construction and verification of c-hyperbolic integer-like matrices
commuting with a given representation.

Three construction paths, tried cheapest-certified first:

* tensor-shortcut — for an isotypic block of an absolutely irreducible
  component: a companion matrix of a degree-m hyperbolic polynomial,
  Kronecker-extended and moved through the base change aligning the copies.
* field-through-commutant — find a commutant element J with irreducible
  minimal polynomial, search a c-hyperbolic unit μ = p(θ) in the field it
  generates, and return p(J).
* lattice-search — bounded enumeration of integer combinations of the
  commutant basis.

Every certificate is re-verified from scratch: exact commutation, integer
characteristic polynomial with determinant ±1, and the hyperbolicity report.
The splitting-field calculus (Vandermonde conjugation and rationalization of
conjugate block diagonals) is exposed as independent machinery with its own
exact re-verification.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import mpmath
import sympy
from sympy.abc import x as _X, y as _Y

from .fingrp import RationalRep
from .hyper import (
    DEFAULT_PRECISION_BITS,
    HyperbolicityReport,
    PrecisionError,
    is_c_hyperbolic_matrix,
    is_integer_like,
)
from .intpoly import IntPoly, is_irreducible
from .numfield import (
    NumberFieldCtx,
    UnsupportedFieldError,
    cyclotomic_index_of,
    hyperbolic_companion_poly,
    make_field,
    max_hyperbolicity_bound,
    search_c_hyperbolic_unit,
    unit_generators_for_field,
)
from .ratmat import Permutation, RatMatrix, matrix_min_poly
from .repdec import ComponentProfile, commutant, poly_at_matrix

TENSOR_SHORTCUT = "tensor-shortcut"
FIELD_THROUGH_COMMUTANT = "field-through-commutant"
BLOCK_COMPANION = "block-companion"
LATTICE_SEARCH = "lattice-search"


class WitnessConstructionError(RuntimeError):
    pass


@dataclass(frozen=True)
class WitnessCertificate:
    witness: RatMatrix
    c: int
    commutes: bool
    integer_like: bool
    hyperbolicity: HyperbolicityReport
    construction_path: str
    per_generator_commutation: tuple

    @property
    def is_valid(self) -> bool:
        return self.commutes and self.integer_like and self.hyperbolicity.verdict

    def to_json_obj(self) -> dict:
        coeffs = self.witness.char_poly()
        return {
            "matrix": self.witness.to_json_obj(),
            "construction_path": self.construction_path,
            "char_poly": [str(c) for c in coeffs],
            "commutes": self.commutes,
            "integer_like": self.integer_like,
            "per_generator_commutation": list(self.per_generator_commutation),
            "hyperbolicity": self.hyperbolicity.to_json_obj(),
        }


def verify_witness(
    rep: RationalRep,
    candidate: RatMatrix,
    c: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    construction_path: str = "verified-input",
) -> WitnessCertificate:
    """Independent verification of the three defining properties; failures are
    recorded in the certificate rather than raised."""
    if candidate.rows != rep.dimension or not candidate.is_square:
        raise ValueError("witness size does not match the representation")
    per_gen = tuple(
        candidate @ img == img @ candidate for img in rep.image_of_generators()
    )
    commutes = all(candidate @ img == img @ candidate for img in rep.images)
    integer_like = is_integer_like(candidate)
    if candidate.det() != 0:
        hyperbolicity = is_c_hyperbolic_matrix(candidate, c, precision_bits)
    else:
        hyperbolicity = HyperbolicityReport(
            c_tested=c, verdict=False, certified_exact=True, precision_bits=precision_bits,
            offending_product={"k": 1, "indices": [], "abs_product": 0.0},
        )
    return WitnessCertificate(
        witness=candidate,
        c=c,
        commutes=commutes,
        integer_like=integer_like,
        hyperbolicity=hyperbolicity,
        construction_path=construction_path,
        per_generator_commutation=per_gen,
    )


# -- block companion ---------------------------------------------------------------


def block_companion(c_blocks: Sequence[RatMatrix], m: RatMatrix) -> RatMatrix:
    """The km×km matrix with identity blocks on the subdiagonal and −C_j down
    the last block column; commutes with I_m ⊗ M whenever every C_j commutes
    with M (checked exactly)."""
    k = m.rows
    for cj in c_blocks:
        if cj.rows != k or cj.cols != k:
            raise ValueError("blocks must match the size of M")
        if cj @ m != m @ cj:
            raise WitnessConstructionError("a block does not commute with M")
    mm = len(c_blocks)
    if mm == 1:
        return -c_blocks[0]
    out = [[Fraction(0)] * (k * mm) for _ in range(k * mm)]
    for bi in range(mm):
        for i in range(k):
            for j in range(k):
                out[bi * k + i][(mm - 1) * k + j] = -c_blocks[bi][i, j]
        if bi >= 1:
            for i in range(k):
                out[bi * k + i][(bi - 1) * k + i] += Fraction(1)
    return RatMatrix.from_rows(out)


# -- construction paths --------------------------------------------------------------


def tensor_shortcut(
    profile: ComponentProfile,
    c: int,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    poly_skip: int = 0,
) -> Optional[tuple[RatMatrix, IntPoly]]:
    """Witness for an isotypic block of an absolutely irreducible component:
    companion(f) ⊗ I_k in the aligned basis, f a degree-m hyperbolic unit
    polynomial. Refuses when m ≤ c (no such witness can exist)."""
    if not profile.absolutely_irreducible:
        return None
    m = profile.multiplicity
    if m <= c:
        raise WitnessConstructionError(
            f"multiplicity {m} <= c = {c}: no c-hyperbolic commuting matrix exists"
        )
    f = hyperbolic_companion_poly(m, c, precision_bits, poly_skip=poly_skip)
    if f is None:
        return None
    w = companion_matrix(f)
    k = profile.dimension
    return w.kron_identity(k), f


def companion_matrix(f: IntPoly) -> RatMatrix:
    """Companion matrix of a monic polynomial: subdiagonal ones, last column
    −coefficients."""
    if not f.is_monic:
        raise ValueError("companion matrix needs a monic polynomial")
    n = f.degree
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(1)
    for i in range(n):
        rows[i][n - 1] = Fraction(-f.coeffs[i])
    return RatMatrix.from_rows(rows)


def field_through_commutant(
    block_rep: RationalRep,
    c: int,
    seed: int = 0,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    exponent_bound: int = 10,
    random_candidates: int = 10,
) -> Optional[tuple[RatMatrix, str]]:
    """Find J in the commutant with irreducible integer minimal polynomial g,
    search a c-hyperbolic unit μ = p(θ) in Q[X]/(g), return p(J).

    Only fields with a supported unit-generator source (real quadratic,
    cyclotomic) are attempted; other candidates are skipped."""
    com = commutant(block_rep)
    rng = random.Random(seed)
    gen_imgs = block_rep.image_of_generators()
    candidates = [
        g for g in gen_imgs if all(g @ img == img @ g for img in gen_imgs)
    ]  # central generator images, e.g. the rotation itself for cyclic groups
    candidates.extend(com.basis)
    candidates.extend(
        com.basis[i] + com.basis[j]
        for i in range(len(com.basis))
        for j in range(i + 1, len(com.basis))
    )
    for _ in range(random_candidates):
        coeffs = [rng.randint(-3, 3) for _ in com.basis]
        if not any(coeffs):
            continue
        acc = RatMatrix.zeros(block_rep.dimension, block_rep.dimension)
        for cf, b in zip(coeffs, com.basis):
            if cf:
                acc = acc + b.scale(cf)
        candidates.append(acc)
    seen = set()
    for j_mat in candidates:
        coeffs = matrix_min_poly(j_mat)
        try:
            g = IntPoly.from_rationals(coeffs)
        except ValueError:
            continue
        if g in seen:
            continue
        seen.add(g)
        if g.degree < 2 or not is_irreducible(g):
            continue
        field = make_field(g, precision_bits)
        if c > max_hyperbolicity_bound(field):
            continue
        try:
            generators = unit_generators_for_field(field)
        except UnsupportedFieldError:
            continue
        outcome = search_c_hyperbolic_unit(field, generators, c, exponent_bound)
        if not outcome.found:
            continue
        witness = poly_at_matrix(outcome.unit.coords, j_mat)
        return witness, FIELD_THROUGH_COMMUTANT
    return None


def lattice_search(
    rep: RationalRep,
    c: int,
    height_bound: int,
    seed: int = 0,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    count_only: bool = False,
    max_candidates: int = 500_000,
):
    """Enumerate integer combinations of the commutant basis by increasing
    max-norm height; return the first combination that is integer-like and
    c-hyperbolic, or None. With count_only, return (hit, candidates_screened).

    Enumeration stops at max_candidates; high-dimensional commutants are the
    field and tensor paths' job, this is the small-case fallback.
    """
    com = commutant(rep)
    dim = rep.dimension
    screened = 0
    hit = None
    basis = com.basis
    if not basis:
        return (None, 0) if count_only else None
    for h in range(1, height_bound + 1):
        coords = list(range(h, -h - 1, -1))
        if (2 * h + 1) ** len(basis) > max_candidates:
            break
        for vec in itertools.product(coords, repeat=len(basis)):
            if not vec or max(abs(e) for e in vec) != h:
                continue
            screened += 1
            acc = RatMatrix.zeros(dim, dim)
            for cf, b in zip(vec, basis):
                if cf:
                    acc = acc + b.scale(cf)
            if not is_integer_like(acc):
                continue
            try:
                report = is_c_hyperbolic_matrix(acc, c, precision_bits)
            except PrecisionError:
                continue
            if report.verdict:
                hit = acc
                if not count_only:
                    return acc
                break
        if hit is not None:
            break
    if count_only:
        return hit, screened
    return hit


# -- splitting-field calculus ----------------------------------------------------------


@dataclass(frozen=True)
class VandermondeData:
    field: NumberFieldCtx
    k: int
    q_numeric: "mpmath.matrix"
    p_numeric: "mpmath.matrix"
    galois_permutations: dict

    @property
    def size(self) -> int:
        return self.field.degree * self.k


def _field_automorphism_permutations(field: NumberFieldCtx, tol) -> dict:
    """Permutations of the embeddings induced by the field automorphisms, for
    the shapes with explicit polynomial automorphisms: Q, real/imaginary
    quadratic, and cyclotomic fields."""
    n = field.degree
    theta = list(field.embeddings)
    perms: dict = {}
    if n == 1:
        perms["id"] = Permutation.identity(1)
        return perms
    d = cyclotomic_index_of(field.min_poly)
    if d is not None:
        exps = []
        base = mpmath.exp(2j * mpmath.pi / d)
        for th in theta:
            a = min(
                (aa for aa in range(1, d) if sympy.gcd(aa, d) == 1),
                key=lambda aa: abs(th - base**aa),
            )
            if abs(th - base**a) > tol:
                raise PrecisionError("could not identify cyclotomic embeddings")
            exps.append(a)
        for b in range(1, d):
            if sympy.gcd(b, d) != 1:
                continue
            images = [exps.index(b * a % d) for a in exps]
            perms[f"zeta->zeta^{b}"] = Permutation(images)
        return perms
    if n == 2:
        b = field.min_poly.coeffs[1]
        sigma_theta = [-th - b for th in theta]
        images = []
        for val in sigma_theta:
            j = min(range(2), key=lambda jj: abs(val - theta[jj]))
            if abs(val - theta[j]) > tol:
                raise PrecisionError("could not match quadratic conjugate")
            images.append(j)
        perms["id"] = Permutation.identity(2)
        perms["conj"] = Permutation(images)
        return perms
    return perms


def vandermonde_P(
    field: NumberFieldCtx, k: int, precision_bits: int = DEFAULT_PRECISION_BITS
) -> VandermondeData:
    """Numeric Q = (θ_i^{j−1}) ⊗ I_k and P = Q⁻¹, with a conditioning check
    and, where the Galois action is numerically realizable, the verified
    permutation of embeddings for every automorphism."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = field.degree
    with mpmath.workprec(precision_bits + 32):
        vand = mpmath.matrix(n, n)
        for i, th in enumerate(field.embeddings):
            acc = mpmath.mpc(1)
            for j in range(n):
                vand[i, j] = acc
                acc *= th
        ident_k = mpmath.eye(k)
        q_num = _mp_kron(vand, ident_k)
        p_num = mpmath.inverse(q_num)
        residual = mpmath.mnorm(q_num * p_num - mpmath.eye(n * k), "inf")
        if residual > mpmath.mpf(2) ** (-(precision_bits // 2)):
            raise PrecisionError(
                f"Vandermonde conditioning too poor at {precision_bits} bits"
            )
        tol = mpmath.mpf(2) ** (-(precision_bits // 4))
        perms = _field_automorphism_permutations(field, tol)
        # verify σ(Q) = K_π^{⊗k}·Q entrywise: row i of σ(Q) is row π(i) of Q
        for label, pi in perms.items():
            kp = _mp_perm_kron(pi, k)
            lhs = kp * q_num
            for i in range(n):
                for j in range(n):
                    if abs(lhs[i * k, j * k] - vand[pi(i), j]) > tol:
                        raise PrecisionError(f"Galois action {label} failed verification")
    return VandermondeData(field=field, k=k, q_numeric=q_num, p_numeric=p_num, galois_permutations=perms)


def _mp_kron(a, b):
    out = mpmath.matrix(a.rows * b.rows, a.cols * b.cols)
    for i in range(a.rows):
        for j in range(a.cols):
            if a[i, j] == 0:
                continue
            for p in range(b.rows):
                for q in range(b.cols):
                    out[i * b.rows + p, j * b.cols + q] = a[i, j] * b[p, q]
    return out


def _mp_perm_kron(pi: Permutation, k: int):
    n = len(pi)
    out = mpmath.matrix(n * k, n * k)
    for i in range(n):
        for p in range(k):
            out[i * k + p, pi(i) * k + p] = 1
    return out


def _norm_char_poly(field: NumberFieldCtx, field_char_poly: Sequence[tuple]) -> list:
    """Π_i σ_i(h)(X) computed exactly as Res_y(f(y), H(y, X)), for h the
    characteristic polynomial of a matrix over the field (coefficients given
    as power-basis coordinate tuples)."""
    f = field.min_poly
    fy = sympy.Poly([sympy.Integer(cc) for cc in reversed(f.coeffs)], _Y)
    h_expr = sympy.Integer(0)
    for j, coord in enumerate(field_char_poly):
        cj = sum(
            sympy.Rational(c.numerator, c.denominator) * _Y**t for t, c in enumerate(coord)
        )
        h_expr += cj * _X**j
    res = sympy.resultant(fy.as_expr(), h_expr, _Y)
    poly = sympy.Poly(res, _X)
    return [Fraction(sympy.Rational(c).p, sympy.Rational(c).q) for c in reversed(poly.all_coeffs())]


def rationalize_conjugate_blockdiag(
    vd: VandermondeData,
    c0_entries: list,
    target_rep: Optional[RationalRep] = None,
    denominator_bound: int = 10**9,
) -> RatMatrix:
    """Conjugate blockdiag(σ_1(C_0), …, σ_n(C_0)) by P numerically, round the
    result to rationals, then re-verify exactly: the characteristic polynomial
    must equal Π_i σ_i(charpoly(C_0)) (computed via resultant norms) and, when
    a target representation is given, the result must commute with it."""
    field, k = vd.field, vd.k
    n = field.degree
    if len(c0_entries) != k or any(len(r) != k for r in c0_entries):
        raise ValueError("C_0 must be k×k with power-basis coordinate entries")
    prec = field.precision_bits
    with mpmath.workprec(prec + 32):
        big = mpmath.matrix(n * k, n * k)
        for i, th in enumerate(field.embeddings):
            for r in range(k):
                for s in range(k):
                    big[i * k + r, i * k + s] = field.evaluate(c0_entries[r][s], th)
        numeric = vd.p_numeric * big * vd.q_numeric
        entries = []
        for i in range(n * k):
            for j in range(n * k):
                z = numeric[i, j]
                if abs(z.imag) > mpmath.mpf(2) ** (-(prec // 4)):
                    raise PrecisionError("conjugated matrix has a non-real entry")
                entries.append(
                    Fraction(mpmath.nstr(z.real, 40)).limit_denominator(denominator_bound)
                )
    result = RatMatrix(n * k, n * k, entries)
    # exact re-verification
    coord_entries = [[tuple(Fraction(c) for c in e) for e in row] for row in c0_entries]
    h_coeffs = _matrix_over_field_char_poly(field, coord_entries)
    expected = _norm_char_poly(field, h_coeffs)
    if list(result.char_poly()) != expected:
        raise PrecisionError("rationalization failed the exact characteristic check")
    if target_rep is not None:
        for img in target_rep.image_of_generators():
            if result @ img != img @ result:
                raise PrecisionError("rationalized matrix does not commute with the target")
    return result


def _matrix_over_field_char_poly(field: NumberFieldCtx, entries: list) -> list:
    """Characteristic polynomial of a k×k matrix with entries in the field,
    as a list of power-basis coordinate tuples (ascending degree), by
    Faddeev–LeVerrier over the field."""
    from .numfield import el_mul, _one

    n = field.degree
    k = len(entries)
    zero = tuple([Fraction(0)] * n)
    one = _one(n)

    def madd(a, b):
        return [[tuple(x + y for x, y in zip(a[i][j], b[i][j])) for j in range(k)] for i in range(k)]

    def mscale(a, s):
        return [[tuple(x * s for x in a[i][j]) for j in range(k)] for i in range(k)]

    def mmul(a, b):
        out = [[zero for _ in range(k)] for _ in range(k)]
        for i in range(k):
            for j in range(k):
                acc = zero
                for t in range(k):
                    prod = el_mul(field.min_poly, a[i][t], b[t][j])
                    acc = tuple(x + y for x, y in zip(acc, prod))
                out[i][j] = acc
        return out

    def mtrace(a):
        acc = zero
        for i in range(k):
            acc = tuple(x + y for x, y in zip(acc, a[i][i]))
        return acc

    def scalar_mat(s):
        return [[tuple(c * (1 if i == j else 0) for c in s) for j in range(k)] for i in range(k)]

    coeffs = [zero] * (k + 1)
    coeffs[k] = one
    mk = entries
    for step in range(1, k + 1):
        tr = mtrace(mk)
        c = tuple(-x / step for x in tr)
        coeffs[k - step] = c
        if step < k:
            mk = mmul(entries, madd(mk, scalar_mat(c)))
    return coeffs
