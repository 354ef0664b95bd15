"""Hills, Young-diagram doubles and the polynomials they generate.

A hill is a palindromic sequence of positive integers that ascends to
its middle.  Each hill encodes the product h(s) of shifted linear
factors (s+i) with the hill entries as multiplicities; the associated
Q polynomial is the width-fold backward difference of the normalized
product, and its Euler transform is the dual polynomial P.  Hills are
in bijection with (partition, sign) pairs via the even/odd doubling
maps, which drives the exhaustive enumeration used by the sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple

from .exactpoly import Poly, backward_diff, moebius_substitute, poly_gcd, reverse, shift
from .eulerxform import euler_transform


@dataclass(frozen=True)
class Hill:
    """Palindromic, middle-unimodal sequence of positive integers.

    The empty hill is admitted as the width-0 terminal object of the
    boundary operator, with unit polynomial.
    """

    mu: Tuple[int, ...]

    def __post_init__(self):
        mu = tuple(int(x) for x in self.mu)
        object.__setattr__(self, "mu", mu)
        if any(x < 1 for x in mu):
            raise ValueError("hill entries must be positive integers")
        ell = len(mu)
        for i in range(ell):
            if mu[i] != mu[ell - 1 - i]:
                raise ValueError(f"not palindromic: {mu}")
        for i in range(1, (ell + 1) // 2):
            if mu[i - 1] > mu[i]:
                raise ValueError(f"not ascending to the middle: {mu}")

    @property
    def width(self) -> int:
        return len(self.mu)

    @property
    def height(self) -> int:
        return (len(self.mu) + 1) // 2

    @property
    def volume(self) -> int:
        return sum(self.mu)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.mu) if self.mu else "empty"

    @classmethod
    def parse(cls, text: str) -> "Hill":
        entries = [int(part) for part in text.split(",") if part.strip()]
        return cls(tuple(entries))


@dataclass(frozen=True)
class YoungDiagram:
    """Weakly increasing sequence of positive integers."""

    lam: Tuple[int, ...]

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        object.__setattr__(self, "lam", lam)
        if not lam:
            raise ValueError("diagram must be nonempty")
        if any(x < 1 for x in lam):
            raise ValueError("parts must be positive")
        if any(a > b for a, b in zip(lam, lam[1:])):
            raise ValueError("parts must be weakly increasing")

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.lam)


def double(lam: YoungDiagram, eps: str) -> Hill:
    """Even (+) or odd (-) palindromic double of a partition."""
    parts = lam.lam
    if eps == "+":
        return Hill(parts + tuple(reversed(parts)))
    if eps == "-":
        return Hill(parts + tuple(reversed(parts[:-1])))
    raise ValueError("eps must be '+' or '-'")


def undouble(hill: Hill) -> Tuple[YoungDiagram, str]:
    """Inverse of double; even-width hills came from '+', odd from '-'."""
    if hill.width == 0:
        raise ValueError("the empty hill has no double preimage")
    half = (hill.width + 1) // 2
    eps = "+" if hill.width % 2 == 0 else "-"
    return YoungDiagram(hill.mu[:half]), eps


def parse_hill_spec(text: str) -> Hill:
    """Parse either '1,2,2,1' or the Young form 'young:1,2+' / 'young:1,2-'."""
    text = text.strip()
    if text.startswith("young:"):
        body = text[len("young:"):]
        if not body or body[-1] not in "+-":
            raise ValueError("Young form needs a trailing '+' or '-' sign")
        eps = body[-1]
        lam = YoungDiagram(tuple(int(p) for p in body[:-1].split(",") if p.strip()))
        return double(lam, eps)
    return Hill.parse(text)


def hill_poly(hill: Hill) -> Tuple[Poly, Poly]:
    """(h, h~) with h(s) the product of (s+i)^mu_i and h~ = h / h(0)."""
    h = Poly([1])
    for i, mult in enumerate(hill.mu, start=1):
        h = h * Poly([i, 1]) ** mult
    return h, h / h(0)


def hill_q(hill: Hill) -> Poly:
    """Q = width-fold backward difference of h~.

    Derived facts are asserted: deg Q = volume - width, Q(0) = 1, and
    the reflection s -> -1-s fixes Q up to the sign (-1)^(deg Q).
    """
    _, h_tilde = hill_poly(hill)
    Q = backward_diff(h_tilde, hill.width)
    d = hill.volume - hill.width
    if Q.degree != d:
        raise ArithmeticError(f"degree of Q for hill {hill} is not volume - width")
    if Q(0) != 1:
        raise ArithmeticError(f"Q(0) != 1 for hill {hill}")
    reflected = moebius_substitute(Q, -1, -1, 0, 1)
    if reflected != Fraction((-1) ** d) * Q:
        raise ArithmeticError(f"Q for hill {hill} lacks the degree-parity reflection symmetry")
    return Q


def hill_dual(hill: Hill) -> Poly:
    """P = Euler transform of Q; palindromic of degree volume - width.

    Cross-checked along the second route: the transform of h~ itself has
    the same numerator with pole order volume + 1.
    """
    Q = hill_q(hill)
    pair = euler_transform(Q)
    if pair.f != 0:
        raise ArithmeticError(f"dual of hill {hill} dropped degree (defect {pair.f})")
    if reverse(pair.P) != pair.P:
        raise ArithmeticError(f"dual of hill {hill} is not palindromic")
    _, h_tilde = hill_poly(hill)
    via_h = euler_transform(h_tilde)
    if via_h.P != pair.P or via_h.f != hill.width:
        raise ArithmeticError(f"the two series routes to the dual of {hill} disagree")
    return pair.P


def boundary(hill: Hill) -> Hill:
    """Componentwise min of adjacent entries; width drops by one.

    The defining identity is cross-checked on every call (it is cheap
    and guards the module's central gcd interpretation): the boundary's
    product polynomial equals gcd(h(x), h(x-1)).
    """
    if hill.width < 1:
        raise ValueError("boundary needs width at least 1")
    smaller = Hill(tuple(min(a, b) for a, b in zip(hill.mu, hill.mu[1:])))
    h, _ = hill_poly(hill)
    expected, _ = hill_poly(smaller)
    if poly_gcd(h, shift(h, -1)) != expected:
        raise ArithmeticError(f"boundary gcd cross-check failed for {hill}")
    return smaller


def phi_factors(hill: Hill) -> Tuple[Poly, Poly]:
    """(phi_plus, phi_minus) = (h(x), h(x-1)) divided by the boundary product.

    Both divisions must be exact.  The two factors are reflections of
    each other about -width/2:  phi_minus(x) = +-phi_plus(-width - x),
    with sign (-1)^(deg phi_plus); this is asserted.
    """
    if hill.width < 1:
        raise ValueError("phi factors need width at least 1")
    h, _ = hill_poly(hill)
    dh, _ = hill_poly(boundary(hill))
    plus, rem = divmod(h, dh)
    if not rem.is_zero:
        raise ArithmeticError(f"phi_plus division not exact for {hill}")
    minus, rem = divmod(shift(h, -1), dh)
    if not rem.is_zero:
        raise ArithmeticError(f"phi_minus division not exact for {hill}")
    a = hill.width
    reflected = moebius_substitute(plus, -1, -a, 0, 1)  # phi_plus(-a - x)
    if minus != Fraction((-1) ** plus.degree) * reflected:
        raise ArithmeticError(f"phi reflection symmetry failed for {hill}")
    return plus, minus


def partitions(n: int, min_part: int = 1) -> Iterator[Tuple[int, ...]]:
    """All weakly increasing tuples of positive integers summing to n."""
    if n == 0:
        yield ()
        return
    for first in range(min_part, n + 1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def enumerate_hills(v_max: int) -> Iterator[Hill]:
    """Every hill with volume <= v_max, exactly once, in a fixed order.

    Generated through the (partition, sign) bijection; ordered by
    volume, then width, then entries, so sweep logs are reproducible
    and resumable by index.
    """
    if v_max < 1:
        raise ValueError("v_max must be at least 1")
    found = []
    for n in range(1, v_max + 1):
        for lam in partitions(n):
            diagram = YoungDiagram(lam)
            for eps in ("+", "-"):
                hill = double(diagram, eps)
                if 0 < hill.volume <= v_max:
                    found.append(hill)
    found.sort(key=lambda h: (h.volume, h.width, h.mu))
    seen = set()
    for hill in found:
        if hill.mu in seen:
            raise ArithmeticError(f"doubling bijection produced {hill} twice")
        seen.add(hill.mu)
        yield hill
