"""Exact cohomology on the projective line and on Hirzebruch surfaces.

Everything in this module is closed-form integer arithmetic.  A line bundle
on the ruled surface F_e is written a*C0 + c*f, where C0 is the minimal
section (self-intersection -e) and f is a fiber of the ruling.  Pushing such
a bundle down to the line splits it into the twists O(c), O(c-e), ...,
O(c-a*e), so both cohomology dimensions are finite sums of the two basic
counts ``h0_p1`` and ``h1_p1``.

The scroll model built by :func:`scroll_model` is the geometric home of a
factorization type (m, b): a hyperelliptic curve of genus g embeds in
F_{g+1-b} with class 2*C0 + (2g+2-b)*f, and the line bundle of type (m, b)
is the restriction of C0 + m*f.  This gives an independent route to every
dimension count in the package, which the test suite exploits heavily.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple


def h0_p1(n: int) -> int:
    """Global sections of O(n) on the projective line: max(n+1, 0)."""
    return max(n + 1, 0)


def h1_p1(n: int) -> int:
    """First cohomology of O(n) on the projective line: max(-n-1, 0)."""
    return max(-n - 1, 0)


class CohomologyPair(NamedTuple):
    h0: int
    h1: int


@dataclass(frozen=True)
class DivisorClass:
    """Class a*C0 + c*f on a Hirzebruch surface; any integer pair is a class."""

    a: int
    c: int


def intersection_number(e: int, first: DivisorClass, second: DivisorClass) -> int:
    """Intersection pairing on F_e, fixed by C0^2 = -e, C0.f = 1, f^2 = 0."""
    return -e * first.a * second.a + first.a * second.c + first.c * second.a


@dataclass(frozen=True)
class ScrollModel:
    """Ruled surface F_e carrying the curve, with its two relevant classes.

    ``curve_class`` is the class of the embedded curve and
    ``hyperplane_class`` restricts to the line bundle of type (m, b).
    """

    e: int
    curve_class: DivisorClass
    hyperplane_class: DivisorClass
    g: int
    b: int

    @property
    def bundle_degree(self) -> int:
        """Degree of the restricted bundle, hyperplane_class . curve_class."""
        return intersection_number(self.e, self.hyperplane_class, self.curve_class)


def scroll_model(g: int, m: int, b: int) -> ScrollModel:
    """Ruled-surface model of the factorization type (m, b) in genus g.

    The surface is F_e with e = g+1-b, the curve sits in class
    2*C0 + (2g+2-b)*f, and the bundle is cut out by C0 + m*f.
    """
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    if not 0 <= b <= g + 1:
        raise ValueError(f"normalized degree must satisfy 0 <= b <= g+1, got b={b} for g={g}")
    return ScrollModel(
        e=g + 1 - b,
        curve_class=DivisorClass(2, 2 * g + 2 - b),
        hyperplane_class=DivisorClass(1, m),
        g=g,
        b=b,
    )


def cohomology_scroll(e: int, divisor: DivisorClass) -> CohomologyPair:
    """Exact (h0, h1) of O(a*C0 + c*f) on F_e, for a >= -1.

    For a >= 0 the pushforward to the line is O(c) + O(c-e) + ... + O(c-a*e)
    and cohomology is computed summand by summand; for a = -1 the pushforward
    vanishes and so does all cohomology.  Classes with a <= -2 would need
    duality on the surface, which nothing here consumes, so they are
    rejected rather than silently handled.
    """
    if e < 0:
        raise ValueError(f"Hirzebruch invariant must be nonnegative, got e={e}")
    if divisor.a <= -2:
        raise ValueError(f"C0 coefficient {divisor.a} <= -2 is outside the supported range")
    if divisor.a == -1:
        return CohomologyPair(0, 0)
    twists = [divisor.c - k * e for k in range(divisor.a + 1)]
    return CohomologyPair(sum(h0_p1(n) for n in twists), sum(h1_p1(n) for n in twists))
