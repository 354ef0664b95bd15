"""Dense univariate polynomials over exact rationals.

Coefficients are `fractions.Fraction` throughout; there is no floating
point anywhere, so every identity check performed on top of this module
is an exact equality.  A polynomial is a tuple of coefficients in
ascending degree with no trailing zeros; the zero polynomial is the
empty tuple and its degree is the distinguished marker ``NEG_INF``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Scalar = Union[int, Fraction]

# Degree of the zero polynomial.  Deliberately not -1: defect/degree
# arithmetic must fail loudly instead of silently producing off-by-ones.
NEG_INF = float("-inf")


class Poly:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- basic queries ------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree as an int, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^k (zero beyond the stored degree)."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        if scalar == 0:
            raise ZeroDivisionError("division of polynomial by zero scalar")
        return Poly([c / scalar for c in self.coeffs])

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial power must be a nonnegative integer")
        result = Poly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.leading
        if len(rem) - 1 < db:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - db - 1, -1, -1):
            c = rem[k + db] / lead
            quot[k] = c
            if c:
                for i, b in enumerate(other.coeffs):
                    rem[k + i] -= c * b
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- evaluation and calculus --------------------------------------

    def __call__(self, x):
        """Evaluate by Horner; a Poly argument performs composition."""
        if isinstance(x, Poly):
            acc: Union[Fraction, Poly] = Fraction(0)
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc if isinstance(acc, Poly) else Poly([acc])
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "Poly":
        if self.is_zero:
            raise ZeroDivisionError("cannot normalize the zero polynomial")
        return self / self.leading

    # -- protocol -----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(str(c) for c in self.coeffs)}])"

    # -- canonical serialization --------------------------------------

    def to_pairs(self) -> list:
        """Ascending ``[["num","den"], ...]`` with base-10 strings."""
        return [[str(c.numerator), str(c.denominator)] for c in self.coeffs]

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[str]]) -> "Poly":
        return cls([Fraction(int(n), int(d)) for n, d in pairs])


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([value])
    return NotImplemented


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


# ---------------------------------------------------------------------
# gcd and content normalization
# ---------------------------------------------------------------------

def primitive_part(p: Poly) -> Poly:
    """Scale by a positive rational so coefficients are coprime integers.

    Used to keep coefficient sizes bounded in remainder sequences; a
    positive scaling never changes signs, roots or divisibility.
    """
    if p.is_zero:
        return p
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    nums = [int(c * den_lcm) for c in p.coeffs]
    g = 0
    for n in nums:
        g = math.gcd(g, n)
    return Poly([Fraction(n, g) for n in nums])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via Euclid with content renormalization."""
    a, b = primitive_part(a), primitive_part(b)
    while not b.is_zero:
        a, b = b, primitive_part(a % b)
    if a.is_zero:
        raise ZeroDivisionError("gcd of two zero polynomials")
    return a.monic()


# ---------------------------------------------------------------------
# shifts, differences and substitutions
# ---------------------------------------------------------------------

def shift(p: Poly, a: Scalar) -> Poly:
    """Return q with q(x) = p(x + a), exactly."""
    return p(Poly([Fraction(a), 1]))


def forward_diff(p: Poly, n: int = 1) -> Poly:
    """n-fold forward difference: f(x+1) - f(x) iterated."""
    if n < 0:
        raise ValueError("difference order must be nonnegative")
    for _ in range(n):
        p = shift(p, 1) - p
    return p


def backward_diff(p: Poly, n: int = 1) -> Poly:
    """n-fold backward difference: f(x) - f(x-1) iterated."""
    if n < 0:
        raise ValueError("difference order must be nonnegative")
    for _ in range(n):
        p = p - shift(p, -1)
    return p


def reverse(p: Poly) -> Poly:
    """Return x^(deg p) * p(1/x), i.e. the coefficient sequence reversed."""
    if p.is_zero:
        raise ZeroDivisionError("cannot reverse the zero polynomial")
    return Poly(tuple(reversed(p.coeffs)))


def moebius_substitute(p: Poly, a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Poly:
    """Return (c*t + d)^(deg p) * p((a*t + b)/(c*t + d)).

    The map must be nondegenerate (a*d != b*c).  Affine substitutions are
    the c = 0 case.
    """
    a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
    if a * d == b * c:
        raise ValueError("degenerate substitution: a*d == b*c")
    if p.is_zero:
        return Poly()
    n = p.degree
    num = Poly([b, a])
    den = Poly([d, c])
    out = Poly()
    for k, coef in enumerate(p.coeffs):
        if coef:
            out = out + coef * num**k * den ** (n - k)
    return out


def discrete_taylor_at_minus_one(p: Poly) -> list:
    """Coefficients c_a with p(s) = sum c_a * (s+1)(s+2)...(s+a).

    c_a is the a-th backward difference of p at -1 divided by a!.  The
    zero polynomial yields an empty list.
    """
    coeffs = []
    r = p
    fact = 1
    a = 0
    while not r.is_zero:
        coeffs.append(r(Fraction(-1)) / fact)
        r = backward_diff(r)
        a += 1
        fact *= a
    return coeffs


def discrete_order_at_minus_one(p: Poly):
    """Smallest a with nonzero discrete-Taylor coefficient; None if p = 0.

    Equals the number of initial factors (s+1), (s+2), ... dividing p.
    """
    for a, c in enumerate(discrete_taylor_at_minus_one(p)):
        if c != 0:
            return a
    return None


def rising_linear_product(a: int) -> Poly:
    """The product (s+1)(s+2)...(s+a); the discrete-Taylor basis element."""
    out = ONE
    for i in range(1, a + 1):
        out = out * Poly([i, 1])
    return out


# ---------------------------------------------------------------------
# Sturm chains and real-root counting
# ---------------------------------------------------------------------

class SturmChain:
    """Signed, content-normalized remainder sequence of (p, p')."""

    __slots__ = ("chain",)

    def __init__(self, p: Poly):
        if p.is_zero:
            raise ZeroDivisionError("Sturm chain of the zero polynomial")
        chain = [primitive_part(p)]
        dp = p.derivative()
        if not dp.is_zero:
            chain.append(primitive_part(dp))
            while True:
                rem = chain[-2] % chain[-1]
                if rem.is_zero:
                    break
                chain.append(primitive_part(-rem))
        self.chain = tuple(chain)

    @property
    def is_squarefree(self) -> bool:
        # Last element is (up to positive scaling) gcd(p, p').
        return self.chain[-1].degree <= 0

    def variations_at(self, x) -> int:
        """Sign variations at x; x may be a rational or +-math.inf."""
        signs = []
        for q in self.chain:
            s = _sign_at(q, x)
            if s:
                signs.append(s)
        return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _sign_at(p: Poly, x) -> int:
    if p.is_zero:
        return 0
    if isinstance(x, float):
        if x == math.inf:
            v = p.leading
        elif x == -math.inf:
            v = p.leading if p.degree % 2 == 0 else -p.leading
        else:
            raise ValueError("only +-inf allowed as float endpoints")
    else:
        v = p(x)
    return (v > 0) - (v < 0)


def sturm_root_count(p: Poly, lo, hi) -> int:
    """Exact number of distinct real roots of squarefree p in (lo, hi].

    Endpoints are rationals or +-math.inf; infinite endpoints are handled
    by leading-coefficient sign analysis, never by finite surrogates.
    Raises if p is zero or has a repeated root.
    """
    if p.is_zero:
        raise ZeroDivisionError("root count of the zero polynomial")
    if not lo < hi:
        raise ValueError("empty interval: lo must be < hi")
    if p.degree <= 0:
        return 0
    chain = SturmChain(p)
    if not chain.is_squarefree:
        raise ValueError("polynomial has a repeated root; pass the squarefree part")
    return chain.variations_at(lo) - chain.variations_at(hi)
