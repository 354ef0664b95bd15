"""Named polynomial families and the identity registry.

Exact constructions of the Jacobi, Legendre, Gegenbauer and Hahn
families (both the terminating-hypergeometric and the finite-difference
Rodrigues routes), the combinatorial families f_m, g_m, h_m, Q_m and the
Eulerian polynomials, plus one registered checker per identity relating
them.  All arithmetic is over Fraction-coefficient polynomials, so every
checker is an exact pass/fail with the first counterexample as witness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Sequence, Tuple, Union

from .exactpoly import Poly, backward_diff, forward_diff, moebius_substitute, reverse, shift
from .eulerxform import CheckResult, euler_transform, inverse_euler, series_prefix

Scalar = Union[int, Fraction]
PolyOrScalar = Union[Poly, Fraction]

_X = Poly([0, 1])


# ---------------------------------------------------------------------
# Pochhammer products and generalized binomials
# ---------------------------------------------------------------------

def pochhammer(a: Union[Scalar, Poly], n: int):
    """Rising product a(a+1)...(a+n-1); accepts a rational or a Poly."""
    out: PolyOrScalar = Fraction(1)
    for i in range(n):
        out = out * (a + i)
    return out


def falling_factorial(z: Union[Scalar, Poly], k: int):
    """Falling product z(z-1)...(z-k+1); accepts a rational or a Poly."""
    out: PolyOrScalar = Fraction(1)
    for i in range(k):
        out = out * (z - i)
    return out


def generalized_binomial(z: Union[Scalar, Poly], k: int):
    """C(z, k) as the falling product over k!.

    This is the unique polynomial continuation in z, valid for rational
    and symbolic arguments alike; factorial ratios with possibly negative
    arguments are always taken this way.
    """
    return falling_factorial(z, k) / math.factorial(k)


# ---------------------------------------------------------------------
# Terminating hypergeometric sums
# ---------------------------------------------------------------------

def hypergeometric_terminating(upper: Sequence, lower: Sequence, x) -> PolyOrScalar:
    """Finite sum of the pFq series; terminates via a nonpositive-integer
    upper parameter.

    Upper parameters and the argument may be Poly (the sum is then a
    polynomial); lower parameters must be rationals.  Raises if no
    numeric upper parameter forces termination, or if a lower parameter
    hits a nonpositive integer before the series terminates.
    """
    upper = [u if isinstance(u, Poly) else Fraction(u) for u in upper]
    lower = [Fraction(b) for b in lower]
    if not isinstance(x, Poly):
        x = Fraction(x)

    n_max = None
    for a in upper:
        if isinstance(a, Fraction) and a <= 0 and a.denominator == 1:
            cand = -int(a)
            if n_max is None or cand < n_max:
                n_max = cand
    if n_max is None:
        raise ValueError("series does not terminate: no nonpositive-integer upper parameter")
    for b in lower:
        if b.denominator == 1 and 1 - n_max <= b <= 0:
            raise ValueError(f"lower parameter {b} hits a pole before termination")

    term: PolyOrScalar = Fraction(1)
    total: PolyOrScalar = term
    for n in range(n_max):
        num: PolyOrScalar = Fraction(1)
        for a in upper:
            num = num * (a + n)
        den = Fraction(1)
        for b in lower:
            den *= b + n
        term = term * num * x / (den * (n + 1))
        total = total + term
    return total


# ---------------------------------------------------------------------
# Jacobi, Legendre, Gegenbauer
# ---------------------------------------------------------------------

def jacobi(n: int, alpha: Scalar, beta: Scalar) -> Poly:
    """Jacobi polynomial of degree n in x, exact for rational parameters.

    Built from the explicit binomial sum; the generalized binomials are
    Pochhammer products, so any rational alpha, beta are admissible.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha, beta = Fraction(alpha), Fraction(beta)
    out = Poly()
    for k in range(n + 1):
        c = generalized_binomial(n + alpha, k) * generalized_binomial(n + beta, n - k)
        out = out + c * Poly([-1, 1]) ** (n - k) * Poly([1, 1]) ** k
    return out / 2**n


def legendre(n: int) -> Poly:
    return jacobi(n, 0, 0)


def gegenbauer(n: int, lam: Scalar) -> Poly:
    # Normalized so that lam = 1/2 gives Legendre (the convention under
    # which these are plain Jacobi members with equal parameters).
    half = Fraction(1, 2)
    return jacobi(n, Fraction(lam) - half, Fraction(lam) - half)


# ---------------------------------------------------------------------
# Hahn polynomials: scheme data, explicit and Rodrigues constructions
# ---------------------------------------------------------------------

@dataclass(frozen=True)
class HahnScheme:
    """Difference-equation data sigma, tau for parameters (alpha, beta, N).

    The weight rho is never materialized (it involves Gamma at
    non-integer points); only the shift-ratios rho(x+j)/rho(x) are used,
    and those are rational functions (see rho_ratio).
    """

    alpha: Fraction
    beta: Fraction
    N: Fraction
    sigma: Poly
    tau: Poly

    @classmethod
    def create(cls, alpha: Scalar, beta: Scalar, N: Scalar) -> "HahnScheme":
        alpha, beta, N = Fraction(alpha), Fraction(beta), Fraction(N)
        sigma = _X * Poly([N + alpha, -1])  # x(N + alpha - x)
        tau = Poly([(N - 1) * (beta + 1), -(2 + alpha + beta)])
        return cls(alpha=alpha, beta=beta, N=N, sigma=sigma, tau=tau)

    def lambda_n(self, n: int) -> Fraction:
        """Eigenvalue -n tau' - n(n-1)/2 sigma'' of the difference operator."""
        tau_p = self.tau.coeff(1)
        sigma_pp = 2 * self.sigma.coeff(2)
        return -n * tau_p - Fraction(n * (n - 1), 2) * sigma_pp

    def B_n(self, n: int) -> Fraction:
        return Fraction((-1) ** n, math.factorial(n))


def hahn_explicit(m: int, alpha: Scalar, beta: Scalar, N: Scalar) -> Poly:
    """Hahn polynomial of degree m as a Poly in its discrete variable.

    Prefactor and the terminating 3F2 are evaluated exactly; the ratio of
    factorials in the prefactor is the falling product (N-m)...(N-1),
    valid for all rational N (in particular N = -1, -2).
    """
    alpha, beta, N = Fraction(alpha), Fraction(beta), Fraction(N)
    pref = (
        Fraction((-1) ** m)
        * pochhammer(beta + 1, m)
        * falling_factorial(N - 1, m)
        / math.factorial(m)
    )
    series = hypergeometric_terminating(
        [Fraction(-m), alpha + beta + m + 1, Poly([0, -1])],
        [beta + 1, 1 - N],
        Fraction(1),
    )
    out = pref * series
    return out if isinstance(out, Poly) else Poly([out])


def rho_ratio(j: int, alpha: Scalar, beta: Scalar, N: Scalar) -> Tuple[Poly, Poly]:
    """rho(x+j)/rho(x) as a (numerator, denominator) pair of Polys.

    Obtained by cancelling Gamma factors through the shift recurrence
    Gamma(z+1) = z Gamma(z); each side is a product of at most 2j linear
    factors.
    """
    if j < 0:
        raise ValueError("shift must be nonnegative")
    alpha, beta, N = Fraction(alpha), Fraction(beta), Fraction(N)
    num = Poly([1])
    den = Poly([1])
    for i in range(j):
        num = num * Poly([beta + 1 + i, 1])        # (x + beta + 1 + i)
    for i in range(1, j + 1):
        num = num * Poly([N - i, -1])              # (N - i - x)
        den = den * Poly([i, 1])                   # (x + i)
        den = den * Poly([N + alpha - i, -1])      # (N + alpha - i - x)
    return num, den


def hahn_rodrigues(m: int, alpha: Scalar, beta: Scalar, N: Scalar) -> Poly:
    """Hahn polynomial via the finite-difference Rodrigues construction.

    Expands the m-fold forward difference as a signed binomial sum of
    shifts, replaces each rho(x+k)/rho(x) by its rational shift-ratio,
    sums over the common denominator and divides out exactly.  A nonzero
    remainder signals parameters outside the scheme's validity.
    """
    alpha, beta, N = Fraction(alpha), Fraction(beta), Fraction(N)
    scheme = HahnScheme.create(alpha, beta, N)
    G = Poly([1])
    for k in range(m):
        G = G * shift(scheme.sigma, -k)
    _, den_m = rho_ratio(m, alpha, beta, N)
    S = Poly()
    for k in range(m + 1):
        num_k, _ = rho_ratio(k, alpha, beta, N)
        cofactor = Poly([1])
        for i in range(k + 1, m + 1):
            cofactor = cofactor * Poly([i, 1]) * Poly([N + alpha - i, -1])
        S = S + Fraction((-1) ** (m - k) * math.comb(m, k)) * num_k * cofactor * shift(G, k)
    quot, rem = divmod(scheme.B_n(m) * S, den_m)
    if not rem.is_zero:
        raise ArithmeticError(
            "weight ratios failed to cancel; parameters outside the scheme's validity"
        )
    return quot


def hahn_weight_at(n: int, alpha: int, beta: int, N: int) -> Fraction:
    """rho(n) for integer parameters, as an exact rational.

    Only meaningful for positive integer N, nonnegative integer alpha,
    beta and 0 <= n <= N-1, where all Gamma factors are factorials.
    """
    if not (0 <= n <= N - 1):
        raise ValueError("n must lie in 0..N-1")
    return Fraction(
        math.factorial(N + alpha - n - 1) * math.factorial(n + beta),
        math.factorial(n) * math.factorial(N - n - 1),
    )


def hahn_difference_equation_residual(m: int, alpha: Scalar, beta: Scalar, N: Scalar) -> Poly:
    """sigma * (forward of backward diff) + tau * forward diff + lambda_m, applied
    to the degree-m member; zero iff the member satisfies its difference
    equation with the scheme eigenvalue."""
    scheme = HahnScheme.create(alpha, beta, N)
    f = hahn_explicit(m, alpha, beta, N)
    res = (
        scheme.sigma * forward_diff(backward_diff(f))
        + scheme.tau * forward_diff(f)
        + scheme.lambda_n(m) * f
    )
    return res


# ---------------------------------------------------------------------
# The combinatorial families f, f~, g, h, Q and the Eulerian polynomials
# ---------------------------------------------------------------------

def f_poly(m: int) -> Poly:
    """f_m(t) = (1/(m+2)) sum_k C(m, m-k) C(2m+2-k, m+1-k) t^k."""
    coeffs = [
        Fraction(math.comb(m, m - k) * math.comb(2 * m + 2 - k, m + 1 - k), m + 2)
        for k in range(m + 1)
    ]
    return Poly(coeffs)


def f_tilde_poly(m: int) -> Poly:
    """f~_m(t) = t^m f_m(1/t) = (1/(m+2)) sum_k C(m,k) C(m+2+k, 1+k) t^k."""
    coeffs = [
        Fraction(math.comb(m, k) * math.comb(m + 2 + k, 1 + k), m + 2)
        for k in range(m + 1)
    ]
    return Poly(coeffs)


def g_poly(m: int) -> Poly:
    """g_m(t) = (1/(m+1)) sum_j C(m+1, j+1) C(m+1, j) t^j."""
    coeffs = [
        Fraction(math.comb(m + 1, j + 1) * math.comb(m + 1, j), m + 1)
        for j in range(m + 1)
    ]
    return Poly(coeffs)


def h_poly(m: int) -> Poly:
    """h_m(n) = (n+1)(n+2)^2 ... (n+m+1)^2 (n+m+2) / (1 2^2 ... (m+1)^2 (m+2))."""
    num = Poly([1, 1]) * Poly([m + 2, 1])
    for i in range(2, m + 2):
        num = num * Poly([i, 1]) ** 2
    den = math.factorial(m + 1) ** 2 * (m + 2)
    return num / den


def q_poly(m: int) -> Poly:
    """Q_m, computed two independent ways which must agree.

    Route one is the (m+2)-fold backward difference of h_m; route two is
    the inverse Euler transform of g_m.
    """
    via_diff = backward_diff(h_poly(m), m + 2)
    via_inverse = inverse_euler(g_poly(m))
    if via_diff != via_inverse:
        raise ArithmeticError(f"the two routes to Q_{m} disagree")
    return via_diff


def eulerian_triangle_row(n: int) -> list:
    """Row n of the Eulerian-number triangle, A(n, j) for j = 0..n-1.

    Recurrence: A(n, j) = (j+1) A(n-1, j) + (n-j) A(n-1, j-1), A(1, 0) = 1.
    """
    if n < 1:
        raise ValueError("rows are indexed from 1")
    row = [1]
    for size in range(2, n + 1):
        prev = row
        row = []
        for j in range(size):
            left = (j + 1) * prev[j] if j < len(prev) else 0
            right = (size - j) * prev[j - 1] if 0 <= j - 1 < len(prev) else 0
            row.append(left + right)
    return row


def eulerian_poly(n: int) -> Poly:
    """Classical Eulerian polynomial from the triangle recurrence."""
    return Poly(eulerian_triangle_row(n))


def eulerian_family(k: int) -> Tuple[Poly, Poly]:
    """The pair Q = (s+1)^(k+1) - s^(k+1) and its Euler transform P.

    P is cross-checked against the triangle recurrence before returning.
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    Q = Poly([1, 1]) ** (k + 1) - _X ** (k + 1)
    P = euler_transform(Q).P
    if P != eulerian_poly(k + 1):
        raise ArithmeticError(f"Euler transform disagrees with the Eulerian triangle at k={k}")
    return Q, P


# ---------------------------------------------------------------------
# Truncated bivariate series (Poly-in-x coefficients per power of y)
# ---------------------------------------------------------------------

class BivariateSeries:
    """Series in y truncated at y^order, with Poly-in-x coefficients.

    Products truncate to the smaller order of the operands, which is the
    largest order through which the product is exact.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[Poly], order: int):
        cs = list(coeffs[: order + 1])
        cs.extend(Poly() for _ in range(order + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order

    def __add__(self, other: "BivariateSeries") -> "BivariateSeries":
        order = min(self.order, other.order)
        return BivariateSeries(
            [self.coeffs[j] + other.coeffs[j] for j in range(order + 1)], order
        )

    def __sub__(self, other: "BivariateSeries") -> "BivariateSeries":
        order = min(self.order, other.order)
        return BivariateSeries(
            [self.coeffs[j] - other.coeffs[j] for j in range(order + 1)], order
        )

    def __mul__(self, other: "BivariateSeries") -> "BivariateSeries":
        order = min(self.order, other.order)
        out = [Poly() for _ in range(order + 1)]
        for i, a in enumerate(self.coeffs[: order + 1]):
            if a.is_zero:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero:
                    out[i + j] = out[i + j] + a * b
        return BivariateSeries(out, order)

    def scale_x(self) -> "BivariateSeries":
        """Multiply by x."""
        return BivariateSeries([c * _X for c in self.coeffs], self.order)

    def diff_x(self) -> "BivariateSeries":
        return BivariateSeries([c.derivative() for c in self.coeffs], self.order)

    def diff_y(self) -> "BivariateSeries":
        out = [(j + 1) * self.coeffs[j + 1] for j in range(self.order)]
        return BivariateSeries(out, self.order - 1)

    def first_mismatch(self, other: "BivariateSeries", through: int) -> Optional[int]:
        """Smallest y-power <= through where the two differ, or None."""
        for j in range(through + 1):
            if self.coeffs[j] != other.coeffs[j]:
                return j
        return None

    @staticmethod
    def constant(value: Scalar, order: int) -> "BivariateSeries":
        return BivariateSeries([Poly([value])], order)

    @staticmethod
    def y_power(k: int, order: int) -> "BivariateSeries":
        coeffs = [Poly() for _ in range(order + 1)]
        if k <= order:
            coeffs[k] = Poly([1])
        return BivariateSeries(coeffs, order)


# ---------------------------------------------------------------------
# The two-variable generating function of the f~ family
# ---------------------------------------------------------------------

def build_dissection_series(order: int) -> BivariateSeries:
    """f(x, y) = sum_{n>=3} f~_{n-3}(x) y^(n-1), truncated at y^order."""
    coeffs = [Poly(), Poly()]
    coeffs.extend(f_tilde_poly(j - 2) for j in range(2, order + 1))
    return BivariateSeries(coeffs, order)


def dissection_pde_check(f: BivariateSeries) -> CheckResult:
    """d/dx f = f * d/dy f, coefficient-wise through y^(order-2)."""
    lhs = f.diff_x()
    rhs = f * f.diff_y()
    bad = lhs.first_mismatch(rhs, f.order - 2)
    if bad is not None:
        return CheckResult(False, f"PDE fails at y^{bad}")
    return CheckResult(True)


def dissection_functional_equation_check(f: BivariateSeries) -> CheckResult:
    """f * (1 - y - x f) = (y + x f)^2 through y^order."""
    order = f.order
    one = BivariateSeries.constant(1, order)
    y = BivariateSeries.y_power(1, order)
    xf = f.scale_x()
    lhs = f * (one - y - xf)
    rhs_base = y + xf
    rhs = rhs_base * rhs_base
    bad = lhs.first_mismatch(rhs, order)
    if bad is not None:
        return CheckResult(False, f"functional equation fails at y^{bad}")
    return CheckResult(True)


def dissection_initial_condition_check(f: BivariateSeries) -> CheckResult:
    """f(0, y) = y^2 + y^3 + ... through y^order."""
    for j, c in enumerate(f.coeffs):
        expected = Fraction(1) if j >= 2 else Fraction(0)
        if c(0) != expected:
            return CheckResult(False, f"initial condition fails at y^{j}")
    return CheckResult(True)


def beckwith_series_check(order: int) -> CheckResult:
    """Run the PDE, functional-equation and initial-condition checks."""
    if order < 4:
        raise ValueError("order must be at least 4")
    f = build_dissection_series(order)
    for check in (
        dissection_initial_condition_check(f),
        dissection_pde_check(f),
        dissection_functional_equation_check(f),
    ):
        if not check.ok:
            return check
    return CheckResult(True)


# ---------------------------------------------------------------------
# Identity checkers
# ---------------------------------------------------------------------

_JACOBI_PARAMS = [Fraction(0), Fraction(1), Fraction(2), Fraction(1, 2)]
_HAHN_N_VALUES = [Fraction(-2), Fraction(-1), Fraction(5), Fraction(7)]


def _first_fail(pairs) -> CheckResult:
    """pairs: iterable of (label, lhs, rhs); exact comparison."""
    for label, lhs, rhs in pairs:
        if lhs != rhs:
            return CheckResult(False, f"{label}: {lhs!r} != {rhs!r}")
    return CheckResult(True)


def _check_ftilde_hypergeometric(rng: int) -> CheckResult:
    return _first_fail(
        (
            f"m={m}",
            f_tilde_poly(m),
            hypergeometric_terminating([-m, m + 3], [2], Poly([0, -1])),
        )
        for m in range(rng + 1)
    )


def _check_ftilde_jacobi(rng: int) -> CheckResult:
    # f~_m(t) = P_m^{(1,1)}(2t+1) / (m+1): affine substitution x -> 2t+1.
    return _first_fail(
        (
            f"m={m}",
            f_tilde_poly(m),
            moebius_substitute(jacobi(m, 1, 1), 2, 1, 0, 1) / (m + 1),
        )
        for m in range(rng + 1)
    )


def _check_f_jacobi_moebius(rng: int) -> CheckResult:
    # f_m(t) = t^m P_m^{(1,1)}((t+2)/t) / (m+1).
    return _first_fail(
        (
            f"m={m}",
            f_poly(m),
            moebius_substitute(jacobi(m, 1, 1), 1, 2, 1, 0) / (m + 1),
        )
        for m in range(rng + 1)
    )


def _check_g_jacobi_moebius(rng: int) -> CheckResult:
    # g_m(t) = (t-1)^m P_m^{(1,1)}((t+1)/(t-1)) / (m+1).
    return _first_fail(
        (
            f"m={m}",
            g_poly(m),
            moebius_substitute(jacobi(m, 1, 1), 1, 1, 1, -1) / (m + 1),
        )
        for m in range(rng + 1)
    )


def _check_ftilde_legendre_derivative(rng: int) -> CheckResult:
    # f~_m(t) = 2 P'_{m+1}(2t+1) / ((m+1)(m+2)).
    return _first_fail(
        (
            f"m={m}",
            f_tilde_poly(m),
            moebius_substitute(legendre(m + 1).derivative(), 2, 1, 0, 1)
            * Fraction(2, (m + 1) * (m + 2)),
        )
        for m in range(rng + 1)
    )


def _check_g_self_reciprocal(rng: int) -> CheckResult:
    return _first_fail((f"m={m}", reverse(g_poly(m)), g_poly(m)) for m in range(rng + 1))


def _check_g_from_f_shift(rng: int) -> CheckResult:
    return _first_fail((f"m={m}", g_poly(m), shift(f_poly(m), -1)) for m in range(rng + 1))


def _check_h_series(rng: int) -> CheckResult:
    # Coefficients of g_m/(1-t)^(2m+3) agree with h_m(n).
    for m in range(min(rng, 20) + 1):
        h = h_poly(m)
        coeffs = series_prefix(g_poly(m), 2 * m + 3, 3 * m + 10)
        for n, c in enumerate(coeffs):
            if c != h(n):
                return CheckResult(False, f"m={m}, n={n}: series {c} != h_m(n) {h(n)}")
    return CheckResult(True)


def _check_jacobi_reflection(rng: int) -> CheckResult:
    # P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x).
    pairs = []
    for n in range(min(rng, 10) + 1):
        for a in _JACOBI_PARAMS:
            for b in _JACOBI_PARAMS:
                lhs = moebius_substitute(jacobi(n, a, b), -1, 0, 0, 1)
                rhs = Fraction((-1) ** n) * jacobi(n, b, a)
                pairs.append((f"n={n},a={a},b={b}", lhs, rhs))
    return _first_fail(pairs)


def _check_jacobi_derivative(rng: int) -> CheckResult:
    # d/dx P_n^{(a,b)} = ((n+a+b+1)/2) P_{n-1}^{(a+1,b+1)}.
    pairs = []
    for n in range(1, min(rng, 10) + 1):
        for a in _JACOBI_PARAMS:
            for b in _JACOBI_PARAMS:
                lhs = jacobi(n, a, b).derivative()
                rhs = (n + a + b + 1) * jacobi(n - 1, a + 1, b + 1) / 2
                pairs.append((f"n={n},a={a},b={b}", lhs, rhs))
    return _first_fail(pairs)


def _check_jacobi_differential_equation(rng: int) -> CheckResult:
    # (1-x^2) y'' + (b - a - (a+b+2) x) y' + n(n+a+b+1) y = 0.
    pairs = []
    for n in range(min(rng, 10) + 1):
        for a in _JACOBI_PARAMS:
            for b in _JACOBI_PARAMS:
                y = jacobi(n, a, b)
                res = (
                    Poly([1, 0, -1]) * y.derivative().derivative()
                    + Poly([b - a, -(a + b + 2)]) * y.derivative()
                    + n * (n + a + b + 1) * y
                )
                pairs.append((f"n={n},a={a},b={b}", res, Poly()))
    return _first_fail(pairs)


def _check_legendre_generating_function(rng: int) -> CheckResult:
    # sum P_n(x) y^n = (1 - 2xy + y^2)^(-1/2), through y^order.
    order = min(rng, 12)
    acc = [Poly() for _ in range(order + 1)]
    # (1+u)^(-1/2) = sum C(-1/2, k) u^k with u = y(y - 2x).
    for k in range(order + 1):
        c = generalized_binomial(Fraction(-1, 2), k)
        # (y - 2x)^k expanded in y with Poly-in-x coefficients.
        for j in range(k + 1):
            ypow = k + j
            if ypow > order:
                continue
            coef = c * math.comb(k, j) * Poly([0, -2]) ** (k - j)
            acc[ypow] = acc[ypow] + coef
    for n in range(order + 1):
        if acc[n] != legendre(n):
            return CheckResult(False, f"y^{n}: expansion disagrees with Legendre member")
    return CheckResult(True)


def _check_legendre_derivation(rng: int) -> CheckResult:
    # (x^2 - 1) P'_n = n (x P_n - P_{n-1}).
    return _first_fail(
        (
            f"n={n}",
            Poly([-1, 0, 1]) * legendre(n).derivative(),
            n * (_X * legendre(n) - legendre(n - 1)),
        )
        for n in range(1, rng + 1)
    )


def _hahn_grid(rng: int):
    for m in range(1, min(rng, 6) + 1):
        for a in _JACOBI_PARAMS:
            for b in _JACOBI_PARAMS:
                for N in _HAHN_N_VALUES:
                    # Positive integer N bounds the family at degree N-1;
                    # beyond it the terminating sum divides by zero.
                    if N.denominator == 1 and N > 0 and m >= N:
                        continue
                    yield m, a, b, N


def _check_hahn_forward_difference(rng: int) -> CheckResult:
    # Forward difference lowers degree and shifts parameters and N.
    pairs = []
    for m, a, b, N in _hahn_grid(rng):
        lhs = forward_diff(hahn_explicit(m, a, b, N))
        rhs = (a + b + m + 1) * hahn_explicit(m - 1, a + 1, b + 1, N - 1)
        pairs.append((f"m={m},a={a},b={b},N={N}", lhs, rhs))
    return _first_fail(pairs)


def _check_hahn_reflection(rng: int) -> CheckResult:
    # Member at N-1-x equals (-1)^m member with swapped parameters.
    pairs = []
    for m, a, b, N in _hahn_grid(rng):
        lhs = moebius_substitute(hahn_explicit(m, a, b, N), -1, N - 1, 0, 1)
        rhs = Fraction((-1) ** m) * hahn_explicit(m, b, a, N)
        pairs.append((f"m={m},a={a},b={b},N={N}", lhs, rhs))
    return _first_fail(pairs)


def _check_hahn_difference_equation(rng: int) -> CheckResult:
    pairs = []
    for m, a, b, N in _hahn_grid(rng):
        pairs.append(
            (f"m={m},a={a},b={b},N={N}", hahn_difference_equation_residual(m, a, b, N), Poly())
        )
    # Degree-zero member as well.
    pairs.append(("m=0", hahn_difference_equation_residual(0, 1, 1, Fraction(-2)), Poly()))
    return _first_fail(pairs)


def _check_hahn_rodrigues_match(rng: int) -> CheckResult:
    pairs = [("m=0", hahn_rodrigues(0, 0, 0, Fraction(-1)), hahn_explicit(0, 0, 0, Fraction(-1)))]
    for m, a, b, N in _hahn_grid(rng):
        pairs.append(
            (f"m={m},a={a},b={b},N={N}", hahn_rodrigues(m, a, b, N), hahn_explicit(m, a, b, N))
        )
    return _first_fail(pairs)


def _check_q_equals_hahn(rng: int) -> CheckResult:
    # (m+1)! Q_m(n) equals the (1,1)-Hahn member at (n-1, -2).
    return _first_fail(
        (
            f"m={m}",
            math.factorial(m + 1) * q_poly(m),
            shift(hahn_explicit(m, 1, 1, Fraction(-2)), -1),
        )
        for m in range(rng + 1)
    )


def _check_hahn_orthogonality(rng: int) -> CheckResult:
    # Off-diagonal weighted sums vanish for positive integer N and
    # nonnegative integer parameters; the diagonal constants are reported
    # by value elsewhere, never asserted against a closed form.
    for N in range(2, min(rng, 8) + 1):
        for a in (0, 1, 2):
            for b in (0, 1, 2):
                members = [hahn_explicit(m, a, b, N) for m in range(N)]
                weights = [hahn_weight_at(n, a, b, N) for n in range(N)]
                for m1 in range(N):
                    for m2 in range(m1):
                        s = sum(
                            members[m1](n) * members[m2](n) * weights[n] for n in range(N)
                        )
                        if s != 0:
                            return CheckResult(
                                False, f"N={N},a={a},b={b},m={m1},m'={m2}: sum {s}"
                            )
    return CheckResult(True)


def hahn_orthogonality_diagonal(m: int, alpha: int, beta: int, N: int) -> Fraction:
    """The diagonal constant of the discrete orthogonality relation."""
    member = hahn_explicit(m, alpha, beta, N)
    return sum(
        (member(n) ** 2) * hahn_weight_at(n, alpha, beta, N) for n in range(N)
    )


def _check_hahn_jacobi_limit(rng: int) -> CheckResult:
    # Coefficient-wise limit of N^(-m) h_m(N x, N) as N -> infinity,
    # taken exactly as a ratio of leading N-coefficients, equals the
    # Jacobi member at 2x - 1.
    for m in range(min(rng, 5) + 1):
        for a in _JACOBI_PARAMS[:3]:
            for b in _JACOBI_PARAMS[:3]:
                target = moebius_substitute(jacobi(m, a, b), 2, -1, 0, 1)
                got = _hahn_scaled_limit(m, a, b)
                if got != target:
                    return CheckResult(False, f"m={m},a={a},b={b}: limit {got!r} != {target!r}")
    return CheckResult(True)


def _hahn_scaled_limit(m: int, alpha: Fraction, beta: Fraction) -> Poly:
    """Exact coefficient-wise limit of N^(-m) h_m(N x, N) in x."""
    # Prefactor in N: (-1)^m (beta+1)_m / m! * (N-1)(N-2)...(N-m).
    pref = Poly([Fraction((-1) ** m) * pochhammer(beta + 1, m) / math.factorial(m)])
    for i in range(1, m + 1):
        pref = pref * Poly([-i, 1])
    # 3F2 term data per summation index k.
    n_var = Poly([0, 1])  # the variable N
    limit_coeffs = []
    for j in range(m + 1):
        num = Poly()
        den = n_var**m
        # common denominator (1-N)_m
        for i in range(m):
            den = den * Poly([1 + i, -1])
        for k in range(j, m + 1):
            A = (
                pochhammer(Fraction(-m), k)
                * pochhammer(alpha + beta + m + 1, k)
                / (pochhammer(beta + 1, k) * math.factorial(k))
            )
            if A == 0:
                continue
            # coefficient of x^j in prod_{i=0}^{k-1} (i - N x): gamma * N^j
            # where gamma is the u^j coefficient of prod (i - u).
            e_k = Poly([1])
            for i in range(k):
                e_k = e_k * Poly([i, -1])
            gamma = e_k.coeff(j)
            if gamma == 0:
                continue
            cofactor = Poly([1])
            for i in range(k, m):
                cofactor = cofactor * Poly([1 + i, -1])  # remaining (1-N+i) factors
            num = num + A * gamma * n_var**j * pref * cofactor
        if num.is_zero:
            limit_coeffs.append(Fraction(0))
            continue
        if num.degree > den.degree:
            raise ArithmeticError("scaled member diverges coefficient-wise")
        limit_coeffs.append(
            num.leading / den.leading if num.degree == den.degree else Fraction(0)
        )
    return Poly(limit_coeffs)


def _diag_series(order: int) -> list:
    return [Fraction(1)] * (order + 1)


def _apply_t_ddt(series: list) -> list:
    # t * d/dt on a truncated series: differentiate, then shift up.
    deriv = [series[n] * n for n in range(1, len(series))]
    return [Fraction(0)] + deriv


def _apply_poly_operator(phi: Poly, series: list) -> list:
    # phi(t d/dt) via Horner in the operator.
    acc = [Fraction(0)] * len(series)
    for c in reversed(phi.coeffs):
        acc = _apply_t_ddt(acc)
        acc = [a + c * s for a, s in zip(acc, series)]
    return acc


def _check_series_operator_diagonal(rng: int) -> CheckResult:
    # phi(t d/dt) applied to 1/(1-t) has coefficients phi(n).
    order = max(rng, 8)
    for m in range(0, 6):
        phi = h_poly(m)
        got = _apply_poly_operator(phi, _diag_series(order))
        for n in range(order + 1):
            if got[n] != phi(n):
                return CheckResult(False, f"m={m}, n={n}")
    return CheckResult(True)


def _check_series_operator_binomial(rng: int) -> CheckResult:
    # prod_{j=1..l} (1 + (t d/dt)/j) maps 1/(1-t) to 1/(1-t)^(l+1).
    order = max(rng, 8)
    for ell in range(1, min(rng, 10) + 1):
        series = _diag_series(order)
        for j in range(1, ell + 1):
            stepped = _apply_t_ddt(series)
            series = [s + Fraction(1, j) * d for s, d in zip(series, stepped)]
        for n in range(order + 1):
            if series[n] != math.comb(n + ell, ell):
                return CheckResult(False, f"l={ell}, n={n}")
    return CheckResult(True)


def _check_series_operator_shifted_binomial(rng: int) -> CheckResult:
    # prod_{j=2..i+1} (1 + (t d/dt)/j) maps 1/(1-t)^(l+1) to
    # [sum_j (1/l) C(i,j) C(l,j+1) t^j] / (1-t)^(l+i+1).
    order = max(rng, 10)
    for ell in range(1, min(rng, 8) + 1):
        for i in range(1, min(rng, 8) + 1):
            series = [Fraction(math.comb(n + ell, ell)) for n in range(order + 1)]
            for j in range(2, i + 2):
                stepped = _apply_t_ddt(series)
                series = [s + Fraction(1, j) * d for s, d in zip(series, stepped)]
            numerator = Poly(
                [Fraction(math.comb(i, j) * math.comb(ell, j + 1), ell) for j in range(i + 1)]
            )
            expected = series_prefix(numerator, ell + i + 1, order)
            if series != expected:
                return CheckResult(False, f"l={ell}, i={i}")
    return CheckResult(True)


def _check_q_two_routes(rng: int) -> CheckResult:
    for m in range(rng + 1):
        q_poly(m)  # raises on disagreement
    return CheckResult(True)


def _check_q_symmetry(rng: int) -> CheckResult:
    # Q_m(-1-s) = (-1)^m Q_m(s).
    return _first_fail(
        (
            f"m={m}",
            moebius_substitute(q_poly(m), -1, -1, 0, 1),
            Fraction((-1) ** m) * q_poly(m),
        )
        for m in range(rng + 1)
    )


def _check_q_integer_valued(rng: int) -> CheckResult:
    # Degree-m polynomial integer at m+1 consecutive integers is
    # integer-valued on all of Z.
    for m in range(rng + 1):
        q = q_poly(m)
        for n in range(m + 1):
            v = q(n)
            if v.denominator != 1:
                return CheckResult(False, f"m={m}, n={n}: Q_m(n) = {v}")
    return CheckResult(True)


def _check_g_coefficient_reciprocity(rng: int) -> CheckResult:
    # b_{j,m} = h_{j-1}(m-j), reading h_{-1} as the constant 1.
    for m in range(rng + 1):
        g = g_poly(m)
        for j in range(m + 1):
            expected = Fraction(1) if j == 0 else h_poly(j - 1)(m - j)
            if g.coeff(j) != expected:
                return CheckResult(
                    False, f"m={m}, j={j}: coefficient {g.coeff(j)} != {expected}"
                )
    return CheckResult(True)


def _check_eulerian_triangle(rng: int) -> CheckResult:
    for k in range(min(rng, 12) + 1):
        eulerian_family(k)  # raises on disagreement
    return CheckResult(True)


def _check_beckwith(rng: int) -> CheckResult:
    return beckwith_series_check(max(min(rng, 14), 4))


def _check_golden_tables(rng: int) -> CheckResult:
    golden_f = [
        Poly([1]),
        Poly([2, 1]),
        Poly([5, 5, 1]),
        Poly([14, 21, 9, 1]),
    ]
    golden_g = [
        Poly([1]),
        Poly([1, 1]),
        Poly([1, 3, 1]),
        Poly([1, 6, 6, 1]),
    ]
    pairs = [(f"f_{m}", f_poly(m), golden_f[m]) for m in range(4)]
    pairs += [(f"g_{m}", g_poly(m), golden_g[m]) for m in range(4)]
    return _first_fail(pairs)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    summary: str
    fn: Callable[[int], CheckResult]


IDENTFNS = [
    IdentityCheck("golden-tables", "f_0..f_3 and g_0..g_3 match their closed forms", _check_golden_tables),
    IdentityCheck("ftilde-hypergeometric", "f~_m as a terminating 2F1", _check_ftilde_hypergeometric),
    IdentityCheck("ftilde-jacobi", "f~_m from the Jacobi member at 2t+1", _check_ftilde_jacobi),
    IdentityCheck("f-jacobi-moebius", "f_m from the Jacobi member at (t+2)/t", _check_f_jacobi_moebius),
    IdentityCheck("g-jacobi-moebius", "g_m from the Jacobi member at (t+1)/(t-1)", _check_g_jacobi_moebius),
    IdentityCheck("ftilde-legendre-derivative", "f~_m from the Legendre derivative", _check_ftilde_legendre_derivative),
    IdentityCheck("g-self-reciprocal", "g_m is palindromic", _check_g_self_reciprocal),
    IdentityCheck("g-from-f-shift", "g_m(t) = f_m(t-1)", _check_g_from_f_shift),
    IdentityCheck("h-series", "series of g_m/(1-t)^(2m+3) is h_m(n)", _check_h_series),
    IdentityCheck("jacobi-reflection", "parameter swap under x -> -x", _check_jacobi_reflection),
    IdentityCheck("jacobi-derivative", "derivative shifts parameters up", _check_jacobi_derivative),
    IdentityCheck("jacobi-differential-equation", "second-order ODE with its eigenvalue", _check_jacobi_differential_equation),
    IdentityCheck("legendre-generating-function", "inverse square-root generating function", _check_legendre_generating_function),
    IdentityCheck("legendre-derivation", "(x^2-1) P'_n = n (x P_n - P_{n-1})", _check_legendre_derivation),
    IdentityCheck("hahn-forward-difference", "difference shifts Hahn parameters", _check_hahn_forward_difference),
    IdentityCheck("hahn-reflection", "reflection swaps Hahn parameters", _check_hahn_reflection),
    IdentityCheck("hahn-difference-equation", "each member solves its difference equation", _check_hahn_difference_equation),
    IdentityCheck("hahn-rodrigues-match", "Rodrigues route equals explicit route", _check_hahn_rodrigues_match),
    IdentityCheck("Q-equals-hahn", "(m+1)! Q_m is a shifted (1,1) Hahn member", _check_q_equals_hahn),
    IdentityCheck("hahn-orthogonality", "off-diagonal weighted sums vanish", _check_hahn_orthogonality),
    IdentityCheck("hahn-jacobi-limit", "scaled large-N limit is the Jacobi member", _check_hahn_jacobi_limit),
    IdentityCheck("series-operator-diagonal", "poly of t d/dt acts diagonally on 1/(1-t)", _check_series_operator_diagonal),
    IdentityCheck("series-operator-binomial", "operator product raises the pole order", _check_series_operator_binomial),
    IdentityCheck("series-operator-shifted-binomial", "shifted operator product yields binomial numerators", _check_series_operator_shifted_binomial),
    IdentityCheck("q-two-routes", "difference route equals inverse-transform route", _check_q_two_routes),
    IdentityCheck("q-symmetry", "Q_m(-1-s) = (-1)^m Q_m(s)", _check_q_symmetry),
    IdentityCheck("q-integer-valued", "Q_m takes integer values on integers", _check_q_integer_valued),
    IdentityCheck("g-coefficient-reciprocity", "g coefficients from shifted h values", _check_g_coefficient_reciprocity),
    IdentityCheck("eulerian-triangle", "width-one duals match the Eulerian triangle", _check_eulerian_triangle),
    IdentityCheck("beckwith-pde", "two-variable series solves PDE and functional equation", _check_beckwith),
]

IDENTITIES: Dict[str, IdentityCheck] = {c.name: c for c in IDENTFNS}


class UnknownIdentityError(ValueError):
    pass


def verify_identity(name: str, rng: int) -> CheckResult:
    """Run one registered identity checker over the given range."""
    if rng < 1:
        raise ValueError("range must be at least 1")
    try:
        check = IDENTITIES[name]
    except KeyError:
        raise UnknownIdentityError(f"unknown identity: {name}") from None
    return check.fn(rng)
