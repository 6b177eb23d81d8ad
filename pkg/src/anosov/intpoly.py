"""Integer polynomial arithmetic: factorization over Q, resultants, cyclotomic
polynomials, coefficient reversal, and eigenvalue-product (composed-product)
polynomials.

Heavy exact kernels (factorization, resultants, gcd) are delegated to sympy,
which implements the standard Zassenhaus/subresultant machinery; everything
here wraps those behind a small immutable coefficient-tuple type.

Resultant sign convention: Sylvester determinant with the rows of the first
argument first, i.e. resultant(X−2, X−3) = −1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as _int_gcd, lcm as _int_lcm

import sympy
from sympy.abc import x as _X, y as _Y


class ZeroPolynomialError(ValueError):
    pass


@dataclass(frozen=True)
class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients, ascending order."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    # -- construction --------------------------------------------------------

    @classmethod
    def from_rationals(cls, coeffs) -> "IntPoly":
        """Exact conversion; raises ValueError if any coefficient is non-integral."""
        out = []
        for c in coeffs:
            c = Fraction(c)
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return cls(tuple(out))

    @classmethod
    def clear_denominators(cls, coeffs) -> "IntPoly":
        """Primitive integer polynomial with the same roots as the rational input."""
        fracs = [Fraction(c) for c in coeffs]
        if not any(fracs):
            raise ZeroPolynomialError("zero polynomial")
        denom = _int_lcm(*(c.denominator for c in fracs))
        ints = [int(c * denom) for c in fracs]
        g = 0
        for c in ints:
            g = _int_gcd(g, abs(c))
        return cls(tuple(c // g for c in ints))

    @classmethod
    def monomials(cls, *terms) -> "IntPoly":
        """Build from (degree, coefficient) pairs."""
        deg = max(d for d, _ in terms)
        coeffs = [0] * (deg + 1)
        for d, c in terms:
            coeffs[d] += c
        return cls(tuple(coeffs))

    # -- basics ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.coeffs[-1] == 1

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPoly(tuple(p + q for p, q in zip(a, b)))

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    def __pow__(self, n: int) -> "IntPoly":
        result = IntPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, k: int) -> "IntPoly":
        return IntPoly(tuple(k * c for c in self.coeffs))

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = _int_gcd(g, abs(c))
        return g

    def primitive_part(self) -> "IntPoly":
        if self.is_zero:
            raise ZeroPolynomialError("zero polynomial")
        g = self.content()
        sign = 1 if self.leading > 0 else -1
        return IntPoly(tuple(sign * c // g for c in self.coeffs))

    def eval_fraction(self, value: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                term = f"{mag}X" + (f"^{i}" if i > 1 else "")
            parts.append(("-" if c < 0 else "+", term))
        sign0, term0 = parts[0]
        text = ("-" if sign0 == "-" else "") + term0
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


# -- sympy bridge --------------------------------------------------------------


def _to_sympy(f: IntPoly) -> sympy.Poly:
    return sympy.Poly(list(reversed(f.coeffs)), _X, domain=sympy.ZZ)


def _from_sympy(p: sympy.Poly) -> IntPoly:
    return IntPoly(tuple(int(c) for c in reversed(p.all_coeffs())))


# -- operations -----------------------------------------------------------------


def factor_over_Q(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Irreducible factorization over Q.

    Factors are primitive with positive leading coefficient; the product of
    factors^multiplicities equals the input up to a rational unit.
    """
    if f.is_zero:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    _, factors = _to_sympy(f).factor_list()
    return [(_from_sympy(p), int(m)) for p, m in factors]


def is_irreducible(f: IntPoly) -> bool:
    if f.is_zero or f.degree < 1:
        return False
    factors = factor_over_Q(f)
    return len(factors) == 1 and factors[0][1] == 1


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPoly:
    """d-th cyclotomic polynomial, monic of degree φ(d)."""
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    return _from_sympy(sympy.Poly(sympy.cyclotomic_poly(d, _X), _X))


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g): Sylvester determinant with the f-rows first."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("resultant of zero polynomial")
    return int(sympy.resultant(_to_sympy(f), _to_sympy(g)))


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """gcd over Q, returned primitive with positive leading coefficient."""
    h = sympy.gcd(_to_sympy(f), _to_sympy(g))
    return _from_sympy(sympy.Poly(h, _X)).primitive_part()


def squarefree_part(f: IntPoly) -> IntPoly:
    """f / gcd(f, f'), primitive with positive leading coefficient."""
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial")
    if f.degree == 0:
        return IntPoly((1,))
    g = poly_gcd(f, f.derivative())
    q, r = sympy.div(_to_sympy(f), _to_sympy(g), _X)
    assert r.is_zero
    return _from_sympy(sympy.Poly(q, _X)).primitive_part()


def reversal(f: IntPoly) -> IntPoly:
    """X^{deg f}·f(1/X), i.e. coefficient reversal; requires f(0) != 0."""
    if f.is_zero or f.coeffs[0] == 0:
        raise ValueError("reversal requires a nonzero constant term")
    return IntPoly(tuple(reversed(f.coeffs)))


def composed_product(p: IntPoly, q: IntPoly) -> IntPoly:
    """Polynomial whose root set is {α·β : p(α) = 0, q(β) = 0}.

    Computed as Res_y(p(y), y^{deg q}·q(X/y)); requires q(0) != 0 so that the
    resultant keeps full degree in y. Result is primitive with positive
    leading coefficient.
    """
    if p.is_zero or q.is_zero:
        raise ZeroPolynomialError("composed product of zero polynomial")
    if q.coeffs[0] == 0:
        raise ValueError("composed product requires q(0) != 0")
    py = sympy.Poly(list(reversed(p.coeffs)), _Y, domain=sympy.ZZ)
    qxy = sum(int(c) * _X**j * _Y ** (q.degree - j) for j, c in enumerate(q.coeffs))
    res = sympy.resultant(py.as_expr(), qxy, _Y)
    out = _from_sympy(sympy.Poly(res, _X))
    return out.primitive_part()


def eig_product_poly(f: IntPoly, k: int, squarefree_steps: bool = False) -> IntPoly:
    """Polynomial whose root set is all products of exactly k roots of f,
    repetitions allowed.

    Built by iterated composed products h_1 = f, h_{j+1} = h_j ∘× f.
    Multiplicities are not minimal; with squarefree_steps=True each
    intermediate result is replaced by its squarefree part to keep the
    degree growth at the size of the distinct-product set.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if f.is_zero:
        raise ZeroPolynomialError("zero polynomial")
    if f.coeffs[0] == 0:
        raise ValueError("eigenvalue products need f(0) != 0")
    h = squarefree_part(f) if squarefree_steps else f
    base = squarefree_part(f) if squarefree_steps else f
    for _ in range(k - 1):
        h = composed_product(h, base)
        if squarefree_steps:
            h = squarefree_part(h)
    return h


def divides(f: IntPoly, g: IntPoly) -> bool:
    """True iff f divides g over Q."""
    if f.is_zero:
        return g.is_zero
    _, r = sympy.div(_to_sympy(g), _to_sympy(f), _X)
    return r.is_zero


def poly_to_json_obj(f: IntPoly) -> list[str]:
    return [str(c) for c in f.coeffs]


def poly_from_json_obj(obj) -> IntPoly:
    if not isinstance(obj, list):
        raise ValueError("polynomial literal must be an array of integer strings")
    return IntPoly(tuple(int(c) for c in obj))
