"""The Euler-transform calculus.

For a polynomial Q with Q(0) = 1 and degree d, the Euler transform is the
numerator polynomial P in

    sum_{n>=0} Q(n) t^n  =  P(t) / (1-t)^(d+1),

a finite object because the series is rational.  The defect of Q is
d - deg P, which equals the number of initial integers -1, -2, ... at
which Q vanishes.  This module computes the transform and its inverse,
and machine-checks the reciprocity statements built on them (the
Popoviciu expansion of the rational function at infinity, and the
palindromy criterion tying the symmetry of Q to self-reciprocity of P).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactpoly import (
    Poly,
    backward_diff,
    discrete_order_at_minus_one,
    moebius_substitute,
    reverse,
)


@dataclass(frozen=True)
class EulerPair:
    """A polynomial Q together with its Euler transform P.

    d = deg Q, e = deg P, f = d - e (the defect).
    """

    Q: Poly
    P: Poly
    d: int
    e: int
    f: int


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class HeckeResult:
    symmetric: bool
    epsilon: Optional[int] = None


def series_prefix(P: Poly, power: int, order: int) -> list:
    """Coefficients of P(t)/(1-t)^power through t^order, exactly."""
    out = []
    for n in range(order + 1):
        c = Fraction(0)
        for k, p_k in enumerate(P.coeffs):
            if k > n:
                break
            c += p_k * math.comb(n - k + power - 1, power - 1)
        out.append(c)
    return out


def euler_transform(Q: Poly) -> EulerPair:
    """Compute the Euler transform of Q (requires Q(0) = 1).

    P is obtained by multiplying the series prefix of length 2d+2 by
    (1-t)^(d+1); the coefficients of t^(d+1)..t^(2d+1) of the product
    must vanish (the tail of the series is determined), which is checked
    and treated as an internal error if violated.
    """
    if Q(0) != 1:
        raise ValueError("euler_transform requires Q(0) = 1")
    d = Q.degree
    prefix = Poly([Q(n) for n in range(2 * d + 2)])
    onemt = Poly([1, -1]) ** (d + 1)
    prod = prefix * onemt
    for k in range(d + 1, 2 * d + 2):
        if prod.coeff(k) != 0:
            raise ArithmeticError(
                f"series tail failed to vanish at order {k}; inconsistent transform"
            )
    P = Poly(prod.coeffs[: d + 1])
    e = P.degree
    f = d - e
    if P(1) == 0:
        raise ArithmeticError("Euler transform evaluated to zero at t = 1")
    if f != defect(Q):
        raise ArithmeticError("degree drop disagrees with the root-counted defect")
    return EulerPair(Q=Q, P=P, d=d, e=e, f=f)


def inverse_euler(P: Poly) -> Poly:
    """Polynomial R with sum R(n) t^n = P(t)/(1-t)^(deg P + 1).

    R(s) = sum_k p_k * C(s - k + e, e) with the binomial taken as the
    degree-e polynomial in s.  Requires P(0) = 1 and P(1) != 0 (the
    latter guarantees deg R = deg P).
    """
    if P.is_zero or P(0) != 1:
        raise ValueError("inverse_euler requires P(0) = 1")
    if P(1) == 0:
        raise ValueError("inverse_euler requires P(1) != 0")
    e = P.degree
    fact = math.factorial(e)
    R = Poly()
    for k, p_k in enumerate(P.coeffs):
        if p_k == 0:
            continue
        basis = Poly([1])
        for j in range(1, e + 1):
            basis = basis * Poly([j - k, 1])  # (s - k + j)
        R = R + p_k * basis / fact
    return R


def defect(Q: Poly) -> int:
    """Largest a such that Q(-1) = Q(-2) = ... = Q(-a) = 0."""
    if Q.is_zero:
        raise ValueError("defect of the zero polynomial is undefined")
    a = 0
    while Q(-(a + 1)) == 0:
        a += 1
    return a


def reciprocal_expansion(pair: EulerPair, order: int) -> list:
    """Taylor coefficients at 0 of F(1/t), F = P/(1-t)^(d+1), through t^order.

    Exact algebra: F(1/t) = (-1)^(d+1) t^(f+1) rev(P)(t) / (1-t)^(d+1).
    """
    d, f = pair.d, pair.f
    base = series_prefix(reverse(pair.P), d + 1, order)
    sign = (-1) ** (d + 1)
    out = []
    for n in range(order + 1):
        out.append(sign * base[n - (f + 1)] if n >= f + 1 else Fraction(0))
    return out


def compare_reciprocal_expansion(pair: EulerPair, order: int) -> CheckResult:
    """Check F(1/t) = -sum_{n>=1} Q(-n) t^n through the given order."""
    lhs = reciprocal_expansion(pair, order)
    for n in range(order + 1):
        rhs = -pair.Q(-n) if n >= 1 else Fraction(0)
        if lhs[n] != rhs:
            return CheckResult(
                False, f"order {n}: expansion gives {lhs[n]}, -Q(-{n}) = {rhs}"
            )
    return CheckResult(True)


def popoviciu_check(Q: Poly, order: int) -> CheckResult:
    """Verify the reciprocity expansion of the generating function of Q.

    The sign convention (minus on the right-hand side) is the one forced
    by the constant case Q = 1.
    """
    return compare_reciprocal_expansion(euler_transform(Q), order)


def hecke_symmetry_check(Q: Poly) -> HeckeResult:
    """Decide whether Q(m) = eps * (-1)^d * Q(-f-1-m) for some sign eps.

    Both sides of the equivalence are evaluated: the functional symmetry
    of Q (as an exact polynomial identity) and the self-reciprocity
    rev(P) = eps * P of its Euler transform.  They are a theorem-level
    biconditional, so a disagreement raises instead of returning.
    """
    pair = euler_transform(Q)
    d, f, P = pair.d, pair.f, pair.P

    reflected = moebius_substitute(Q, -1, -(f + 1), 0, 1)  # Q(-f-1-s)
    sign_d = (-1) ** d
    if Q == sign_d * reflected:
        q_eps: Optional[int] = 1
    elif Q == -sign_d * reflected:
        q_eps = -1
    else:
        q_eps = None

    rev_P = reverse(P)
    if rev_P == P:
        p_eps: Optional[int] = 1
    elif rev_P == -P:
        p_eps = -1
    else:
        p_eps = None

    if q_eps != p_eps:
        raise ArithmeticError(
            f"symmetry criterion violated: Q side gives {q_eps}, P side gives {p_eps}"
        )
    return HeckeResult(symmetric=q_eps is not None, epsilon=q_eps)
