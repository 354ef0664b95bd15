"""Dimension polynomials for type-A root systems at the second
fundamental weight.

The dimension of the irreducible module with highest weight n times the
second fundamental weight is a product over positive roots, computed
here exactly as a polynomial in n.  Two routes are used: the raw
root-system product in epsilon coordinates, and the simplified double
product over 1/j factors; they must agree and both tie back to the
combinatorial h family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .exactpoly import Poly, moebius_substitute
from .eulerxform import CheckResult
from .families import h_poly


@dataclass(frozen=True)
class RootSystemA:
    """Type A_ell data in epsilon coordinates.

    Positive roots are the coordinate differences e_i - e_j for i < j;
    rho is the half-sum of positive roots; varpi2 the second fundamental
    weight, whose fractional part is proportional to the all-ones vector
    and therefore cancels in every pairing with a root.
    """

    ell: int
    positive_roots: Tuple[Tuple[int, int], ...]
    rho: Tuple[Fraction, ...]
    varpi2: Tuple[Fraction, ...]

    @classmethod
    def create(cls, ell: int) -> "RootSystemA":
        if ell < 2:
            raise ValueError("rank must be at least 2")
        roots = tuple((i, j) for i in range(1, ell + 2) for j in range(i + 1, ell + 2))
        rho = tuple(Fraction(ell - 2 * i, 2) for i in range(ell + 1))
        varpi2 = tuple(
            (Fraction(1) if i < 2 else Fraction(0)) - Fraction(2, ell + 1)
            for i in range(ell + 1)
        )
        return cls(ell=ell, positive_roots=roots, rho=rho, varpi2=varpi2)


def weyl_dim_poly(ell: int) -> Poly:
    """dim of the module with highest weight n*varpi2, as a Poly in n.

    Computed as the product over positive roots of
    1 + n (varpi2 | alpha) / (rho | alpha), and checked against the
    simplified form prod_{j=1}^{ell-1} (1 + n/j) prod_{j=2}^{ell} (1 + n/j).
    """
    system = RootSystemA.create(ell)
    product = Poly([1])
    for i, j in system.positive_roots:
        lam_pairing = system.varpi2[i - 1] - system.varpi2[j - 1]
        rho_pairing = system.rho[i - 1] - system.rho[j - 1]
        # The fractional 2/(ell+1) parts must cancel against each root.
        if lam_pairing.denominator != 1:
            raise ArithmeticError("weight pairing with a root is not an integer")
        product = product * Poly([1, lam_pairing / rho_pairing])

    simplified = Poly([1])
    for j in range(1, ell):
        simplified = simplified * Poly([1, Fraction(1, j)])
    for j in range(2, ell + 1):
        simplified = simplified * Poly([1, Fraction(1, j)])
    if product != simplified:
        raise ArithmeticError("root-system product disagrees with the simplified form")
    return product


def plucker_dim(m: int) -> int:
    """Ambient projective dimension of the degree-(m+3) exterior-square
    embedding: (m+3)(m+2)/2."""
    return (m + 3) * (m + 2) // 2


def verify_hirzebruch(m: int) -> CheckResult:
    """The rank-(m+2) dimension polynomial equals h_m, exactly."""
    if m < 0:
        raise ValueError("index must be nonnegative")
    lhs = weyl_dim_poly(m + 2)
    rhs = h_poly(m)
    if lhs != rhs:
        return CheckResult(False, f"m={m}: dimension polynomial differs from h_m")
    return CheckResult(True)


def integrality_scan(m: int, n_lo: int, n_hi: int) -> CheckResult:
    """h_m is integer on [n_lo, n_hi], vanishes exactly at -1..-m-2 in
    that window, and satisfies h_m(-m-3-n) = h_m(n) as a Poly identity."""
    h = h_poly(m)
    reflected = moebius_substitute(h, -1, -(m + 3), 0, 1)
    if reflected != h:
        return CheckResult(False, f"m={m}: reflection symmetry fails")
    for n in range(n_lo, n_hi + 1):
        v = h(n)
        if v.denominator != 1:
            return CheckResult(False, f"m={m}, n={n}: h_m(n) = {v} is not an integer")
        should_vanish = -(m + 2) <= n <= -1
        if should_vanish != (v == 0):
            return CheckResult(False, f"m={m}, n={n}: unexpected zero pattern (h={v})")
    return CheckResult(True)
