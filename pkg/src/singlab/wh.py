"""Lattice-point invariants of weighted-homogeneous hypersurfaces in three
variables: a-invariant, graded dimensions, geometric genus, and the normal
reduction number of the maximal ideal in the Brieskorn case x^a+y^b+z^c.

The geometric genus of the graded ring S = k[x,y,z]/(f) is the sum of the
dimensions of its graded pieces up to the a-invariant; for a hypersurface
cut out by a degree-d equation, dim S_i counts monomials of weighted
degree i minus those of degree i - d, and the a-invariant is
d - (w_x + w_y + w_z).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .parsing import parse_polynomial

__all__ = [
    "WeightedPoly",
    "a_invariant",
    "graded_dim",
    "pg_weighted_homogeneous",
    "pg_brieskorn",
    "br_maximal_ideal_brieskorn",
]


class WeightedPoly:
    """Sparse weighted-homogeneous polynomial in x, y, z.

    Terms are merged and stored sorted by exponent triple; all terms must
    share the same weighted degree and at least two terms must survive
    merging (a one-term equation does not cut out a normal surface).
    """

    __slots__ = ("weights", "terms", "degree")

    def __init__(self, weights, terms):
        wx, wy, wz = (int(w) for w in weights)
        if wx < 1 or wy < 1 or wz < 1:
            raise InputError("weights must be positive integers")
        merged: dict[tuple[int, int, int], Fraction] = {}
        for exps, coeff in terms:
            exps = tuple(int(e) for e in exps)
            if len(exps) != 3 or any(e < 0 for e in exps):
                raise InputError(f"bad exponent triple {exps!r}")
            coeff = Fraction(coeff)
            if coeff == 0:
                raise InputError("zero coefficient in polynomial term")
            merged[exps] = merged.get(exps, Fraction(0)) + coeff
        cleaned = {e: c for e, c in merged.items() if c != 0}
        if len(cleaned) < 2:
            raise InputError("polynomial must have at least two terms")
        degrees = {wx * e[0] + wy * e[1] + wz * e[2] for e in cleaned}
        if len(degrees) != 1:
            raise InputError(
                f"polynomial is not weighted homogeneous for weights "
                f"({wx}, {wy}, {wz}): degrees {sorted(degrees)}"
            )
        self.weights = (wx, wy, wz)
        self.terms = tuple(sorted(cleaned.items()))
        self.degree = degrees.pop()

    @classmethod
    def from_text(cls, weights, text: str) -> WeightedPoly:
        return cls(weights, parse_polynomial(text))

    def __repr__(self):
        return f"WeightedPoly(weights={self.weights}, degree={self.degree}, {len(self.terms)} terms)"


def a_invariant(weights, degree: int) -> int:
    """degree - (w_x + w_y + w_z); may be negative."""
    wx, wy, wz = weights
    if min(wx, wy, wz) < 1 or degree < 1:
        raise InputError("weights and degree must be positive")
    return degree - (wx + wy + wz)


def _count_exact_degree(weights, target: int) -> int:
    """Monomials x^a y^b z^c of weighted degree exactly ``target``."""
    if target < 0:
        return 0
    wx, wy, wz = weights
    count = 0
    for a in range(target // wx + 1):
        rest_a = target - a * wx
        for b in range(rest_a // wy + 1):
            if (rest_a - b * wy) % wz == 0:
                count += 1
    return count


def graded_dim(weights, degree: int, i: int) -> int:
    """dim of the i-th graded piece of k[x,y,z]/(f), deg f = degree.

    The degree must be attained by some monomial (every actual equation
    satisfies this); multiplication by f is then injective and the count
    difference below is non-negative.
    """
    if i < 0:
        raise InputError("graded index must be >= 0")
    if _count_exact_degree(weights, degree) == 0:
        raise InputError(
            f"no monomial of weights {tuple(weights)} has degree {degree}"
        )
    return _count_exact_degree(weights, i) - _count_exact_degree(weights, i - degree)


def pg_weighted_homogeneous(p: WeightedPoly) -> int:
    """Geometric genus: sum of graded dimensions up to the a-invariant.

    Trusts the caller that the equation defines a normal surface
    singularity; that is not checkable from the lattice data alone.
    """
    top = a_invariant(p.weights, p.degree)
    if top < 0:
        return 0
    return sum(graded_dim(p.weights, p.degree, i) for i in range(top + 1))


def _check_brieskorn(a: int, b: int, c: int):
    if not (2 <= a <= b <= c):
        raise InputError(f"need 2 <= a <= b <= c, got ({a}, {b}, {c})")


def pg_brieskorn(a: int, b: int, c: int) -> int:
    """Geometric genus of x^a + y^b + z^c: the number of non-negative
    (i, j, k) with i*bc + j*ac + k*ab <= abc - (ab + bc + ca)."""
    _check_brieskorn(a, b, c)
    top = a * b * c - (a * b + b * c + c * a)
    if top < 0:
        return 0
    count = 0
    for i in range(top // (b * c) + 1):
        rest_i = top - i * b * c
        for j in range(rest_i // (a * c) + 1):
            count += (rest_i - j * a * c) // (a * b) + 1
    return count


def br_maximal_ideal_brieskorn(a: int, b: int, c: int) -> int:
    """Normal reduction number of the maximal ideal of x^a + y^b + z^c:
    floor((a-1) b / a)."""
    _check_brieskorn(a, b, c)
    return (a - 1) * b // a
