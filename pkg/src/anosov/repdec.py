"""Decomposition of rational representations into Q-irreducible components.

For each equivalence class of components the profile records: multiplicity,
endomorphism-algebra dimension dim_E, character-field degree n (dimension of
the commutant's center), the square root m of dim_E/n, the complex-component
count e = m·n, the sign of the indicator sum, and the real-component count r.

Splitting is commutant-driven: an element of the commutant with a reducible
minimal polynomial yields complementary invariant subspaces (primary kernels
when the factors are coprime, an averaged equivariant projection when the
minimal polynomial is a proper prime power). Irreducibility is declared after
a deterministic pass over the commutant basis and its pairwise sums plus a
run of seeded random combinations, cross-checked by the dim_E = m²·n
integrality constraint.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Optional, Sequence

from .fingrp import RationalRep, character_inner_product, fs_indicator_value
from .intpoly import IntPoly, factor_over_Q
from .ratmat import RatMatrix, matrix_min_poly

RANDOM_TRIALS = 20
COEFF_RANGE = 5


class DecompositionError(RuntimeError):
    pass


@dataclass(frozen=True)
class CommutantBasis:
    rep: RationalRep
    basis: tuple

    @property
    def dimension(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class ComponentMember:
    """One occurrence of a component class inside the ambient representation.

    basis columns span the invariant subspace in ambient coordinates;
    intertwiner T maps the class representative's model to this member's
    model: member_rep(g) · T = T · representative_rep(g).
    """

    basis: RatMatrix
    intertwiner: RatMatrix


@dataclass(frozen=True)
class ComponentProfile:
    subspace_basis: RatMatrix
    sub_rep: RationalRep
    multiplicity: int
    dim_E: int
    n_field: int
    m_schur: int
    e_complex: int
    fs_sign: str
    r_components: int
    k_dim: int
    members: tuple = field(default=(), repr=False)

    @property
    def dimension(self) -> int:
        return self.sub_rep.dimension

    @property
    def absolutely_irreducible(self) -> bool:
        return self.dim_E == 1

    def to_json_obj(self) -> dict:
        return {
            "dimension": self.dimension,
            "multiplicity": self.multiplicity,
            "dim_E": self.dim_E,
            "n": self.n_field,
            "m": self.m_schur,
            "e": self.e_complex,
            "fs_sign": self.fs_sign,
            "r_components": self.r_components,
        }


# -- linear-algebra helpers -----------------------------------------------------


def intertwiner_space(
    left_images: Sequence[RatMatrix], right_images: Sequence[RatMatrix]
) -> list[RatMatrix]:
    """Basis of {X : X·A_t = B_t·X for all t}, X of shape rows(B) × cols(A)."""
    c = left_images[0].cols
    r = right_images[0].rows
    rows = []
    for a, b in zip(left_images, right_images):
        for i in range(r):
            for j in range(c):
                row = [Fraction(0)] * (r * c)
                for k in range(c):
                    row[i * c + k] += a[k, j]
                for k in range(r):
                    row[k * c + j] -= b[i, k]
                rows.append(row)
    system = RatMatrix.from_rows(rows)
    return [RatMatrix(r, c, vec) for vec in system.kernel_basis()]


def commutant(rep: RationalRep) -> CommutantBasis:
    """Basis of {X : X·ρ(g) = ρ(g)·X}, solved over the generators only."""
    gens = rep.image_of_generators()
    basis = intertwiner_space(gens, gens)
    return CommutantBasis(rep=rep, basis=tuple(basis))


def poly_at_matrix(coeffs: Sequence[Fraction], m: RatMatrix) -> RatMatrix:
    acc = RatMatrix.zeros(m.rows, m.rows)
    for c in reversed(list(coeffs)):
        acc = acc @ m
        if c:
            acc = acc + RatMatrix.identity(m.rows).scale(c)
    return acc


def restrict_action(basis: RatMatrix, m: RatMatrix) -> RatMatrix:
    """Matrix of m restricted to the column span of basis; exact, and raises
    if the span is not m-invariant."""
    return basis.solve(m @ basis)


def restrict_rep(rep: RationalRep, basis: RatMatrix) -> RationalRep:
    return RationalRep(group=rep.group, images=tuple(restrict_action(basis, img) for img in rep.images))


def _equivariant_complement(rep: RationalRep, w: RatMatrix) -> RatMatrix:
    """Invariant complement of the invariant column span of w, by averaging a
    projection over the group."""
    n = rep.dimension
    cols = [list(w.column(j)) for j in range(w.cols)]
    for i in range(n):
        if len(cols) == n:
            break
        unit = [Fraction(0)] * n
        unit[i] = Fraction(1)
        candidate = RatMatrix.from_columns(cols + [unit])
        if candidate.rank() == len(cols) + 1:
            cols.append(unit)
    full = RatMatrix.from_columns(cols)
    # coordinate projection onto the w-span part of the completed basis
    proj0 = RatMatrix.from_rows(
        [[Fraction(1) if (i == j and i < w.cols) else Fraction(0) for j in range(n)] for i in range(n)]
    )
    raw = full @ proj0 @ full.inverse()
    group = rep.group
    acc = RatMatrix.zeros(n, n)
    for g in range(group.order):
        acc = acc + rep.images[g] @ raw @ rep.images[group.inv_map[g]]
    averaged = acc.scale(Fraction(1, group.order))
    kernel = averaged.kernel_basis()
    if len(kernel) != n - w.cols:
        raise DecompositionError("averaged projection has wrong corank")
    return RatMatrix.from_columns([list(v) for v in kernel])


@dataclass(frozen=True)
class IrreducibleCertificate:
    trials: int
    commutant_dim: int


def _try_split_with(rep: RationalRep, x: RatMatrix):
    """Split the module using a commutant element, or None if its minimal
    polynomial is irreducible."""
    coeffs = matrix_min_poly(x)
    mp = IntPoly.clear_denominators(coeffs)
    factors = factor_over_Q(mp)
    if len(factors) == 1 and factors[0][1] == 1:
        return None
    if len(factors) >= 2:
        f1 = factors[0][0] ** factors[0][1]
        rest = IntPoly((1,))
        for p, mult in factors[1:]:
            rest = rest * p**mult
        k1 = poly_at_matrix([Fraction(c) for c in f1.coeffs], x).kernel_basis()
        k2 = poly_at_matrix([Fraction(c) for c in rest.coeffs], x).kernel_basis()
        if not k1 or not k2 or len(k1) + len(k2) != rep.dimension:
            raise DecompositionError("primary kernels do not decompose the space")
        return (
            RatMatrix.from_columns([list(v) for v in k1]),
            RatMatrix.from_columns([list(v) for v in k2]),
        )
    # single irreducible factor with multiplicity >= 2: its kernel is a proper
    # nonzero invariant subspace; complement by averaging
    p = factors[0][0]
    kernel = poly_at_matrix([Fraction(c) for c in p.coeffs], x).kernel_basis()
    if not kernel or len(kernel) == rep.dimension:
        raise DecompositionError("prime-power kernel is not proper")
    w = RatMatrix.from_columns([list(v) for v in kernel])
    return w, _equivariant_complement(rep, w)


def _random_combination(basis: Sequence[RatMatrix], rng: random.Random) -> RatMatrix:
    while True:
        coeffs = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in basis]
        if any(coeffs):
            break
    acc = RatMatrix.zeros(basis[0].rows, basis[0].cols)
    for c, b in zip(coeffs, basis):
        if c:
            acc = acc + b.scale(c)
    return acc


def split_once(rep: RationalRep, seed: int = 0, trials: int = RANDOM_TRIALS):
    """Either an IrreducibleCertificate or a pair of complementary invariant
    subspace bases (as column matrices)."""
    return _split_once(rep, random.Random(seed), trials)


def _split_once(rep: RationalRep, rng: random.Random, trials: int = RANDOM_TRIALS):
    com = commutant(rep)
    if rep.dimension == 1 or com.dimension == 1:
        return IrreducibleCertificate(trials=0, commutant_dim=com.dimension)
    candidates = list(com.basis)
    candidates.extend(
        com.basis[i] + com.basis[j] for i in range(com.dimension) for j in range(i + 1, com.dimension)
    )
    attempted = 0
    for x in candidates:
        attempted += 1
        result = _try_split_with(rep, x)
        if result is not None:
            return result
    for _ in range(trials):
        attempted += 1
        result = _try_split_with(rep, _random_combination(com.basis, rng))
        if result is not None:
            return result
    _profile_integrality_check(rep, com)
    return IrreducibleCertificate(trials=attempted, commutant_dim=com.dimension)


def _center_dimension(basis: Sequence[RatMatrix]) -> int:
    """Dimension of the center of the algebra spanned by the commutant basis."""
    d = len(basis)
    rows = []
    for b in basis:
        brackets = [x @ b - b @ x for x in basis]
        for pos in range(basis[0].rows * basis[0].cols):
            rows.append([br.entries()[pos] for br in brackets])
    system = RatMatrix.from_rows(rows)
    return len(system.kernel_basis())


def _profile_integrality_check(rep: RationalRep, com: CommutantBasis) -> None:
    dim_e = com.dimension
    n = _center_dimension(com.basis)
    if n == 0 or dim_e % n:
        raise DecompositionError(f"dim_E={dim_e} not divisible by center dimension {n}")
    m = isqrt(dim_e // n)
    if m * m * n != dim_e:
        raise DecompositionError(
            f"dim_E={dim_e}, n={n}: dim_E/n is not a perfect square; decomposition bug"
        )


def component_profile(
    sub_rep: RationalRep,
    multiplicity: int = 1,
    subspace_basis: Optional[RatMatrix] = None,
    members: tuple = (),
) -> ComponentProfile:
    """Profile of a certified-irreducible component."""
    com = commutant(sub_rep)
    dim_e = com.dimension
    n = _center_dimension(com.basis)
    if n == 0 or dim_e % n:
        raise DecompositionError(f"dim_E={dim_e} not divisible by center dimension {n}")
    m = isqrt(dim_e // n)
    if m * m * n != dim_e:
        raise DecompositionError(f"dim_E={dim_e}/n={n} is not a perfect square")
    e = m * n
    fs_value = fs_indicator_value(sub_rep)
    if fs_value == e:
        fs_sign = "+"
        r = e
    elif fs_value == 0:
        fs_sign = "0"
        if e % 2:
            raise DecompositionError(f"e={e} odd with indicator 0")
        r = e // 2
    elif fs_value == -e:
        fs_sign = "-"
        if e % 2:
            raise DecompositionError(f"e={e} odd with indicator -e")
        r = e // 2
    else:
        raise DecompositionError(f"indicator sum {fs_value} not in {{{e}, 0, {-e}}}")
    dim = sub_rep.dimension
    if dim % e:
        raise DecompositionError(f"component dimension {dim} not divisible by e={e}")
    if subspace_basis is None:
        subspace_basis = RatMatrix.identity(dim)
    return ComponentProfile(
        subspace_basis=subspace_basis,
        sub_rep=sub_rep,
        multiplicity=multiplicity,
        dim_E=dim_e,
        n_field=n,
        m_schur=m,
        e_complex=e,
        fs_sign=fs_sign,
        r_components=r,
        k_dim=dim // e,
        members=members,
    )


def decompose(rep: RationalRep, seed: int = 0) -> list[ComponentProfile]:
    """Recursive splitting into Q-irreducibles, grouped into equivalence
    classes; deterministic given (rep, seed)."""
    rng = random.Random(seed)
    n = rep.dimension
    pending = [(RatMatrix.identity(n), rep)]
    leaves = []
    while pending:
        basis, sub = pending.pop(0)
        result = _split_once(sub, rng)
        if isinstance(result, IrreducibleCertificate):
            leaves.append((basis, sub))
            continue
        k1, k2 = result
        pending.append((basis @ k1, restrict_rep(sub, k1)))
        pending.append((basis @ k2, restrict_rep(sub, k2)))

    classes: list[dict] = []
    for basis, sub in leaves:
        placed = False
        for cls in classes:
            rep0 = cls["rep"]
            if sub.dimension != rep0.dimension:
                continue
            hom = intertwiner_space(rep0.image_of_generators(), sub.image_of_generators())
            if hom:
                t = hom[0]
                if t.det() == 0:
                    raise DecompositionError("nonzero intertwiner between irreducibles is singular")
                cls["members"].append(ComponentMember(basis=basis, intertwiner=t))
                placed = True
                break
        if not placed:
            classes.append(
                {
                    "rep": sub,
                    "basis": basis,
                    "members": [ComponentMember(basis=basis, intertwiner=RatMatrix.identity(sub.dimension))],
                }
            )

    profiles = []
    for cls in classes:
        profiles.append(
            component_profile(
                cls["rep"],
                multiplicity=len(cls["members"]),
                subspace_basis=cls["basis"],
                members=tuple(cls["members"]),
            )
        )
    total = sum(p.multiplicity * p.dimension for p in profiles)
    if total != n:
        raise DecompositionError(f"component dimensions sum to {total}, ambient is {n}")
    for p in profiles:
        inner = character_inner_product(p.sub_rep, p.sub_rep)
        if inner != p.dim_E:
            raise DecompositionError(
                f"commutant dimension {p.dim_E} disagrees with character inner product {inner}"
            )
    return profiles


def decomposition_report(profiles: Sequence[ComponentProfile]) -> list[dict]:
    return [p.to_json_obj() for p in profiles]
