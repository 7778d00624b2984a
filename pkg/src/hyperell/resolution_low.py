"""Resolution invariants in the low range g+3 <= d <= 2g.

Here the embedded curve is no longer projectively normal and three integers
rule everything, all derived from (m, b):

* nu  = ceil((b-1) / (m+b-g-1)), the normality threshold: the curve is
  j-normal exactly for j >= nu, and its regularity is nu + 1;
* tau = floor((2g+1-b) / m), the last twist in which the curve's ideal
  agrees with the ideal of its scroll;
* p   = (m+b-g-1) * nu - b + 1, the number of leading vanishing entries in
  the nu-th row of the Betti diagram.

The Hartshorne-Rao dimension gamma_j = h1 of the twisted ideal sheaf has
the closed form implemented by :func:`rao_dimension`; :func:`oracle_rao`
recomputes it on the scroll side, giving an independent cross-check used
throughout the tests.  Unlike the high range, only part of the Betti
diagram is pinned down in closed form; :func:`betti_low` reports the rest
as positive or unknown rather than guessing.  The pair (nu, p) can be
inverted, together with (g, d), back to the factorization type, which is
what makes diagrams of distinct types distinct; see
:func:`invert_from_resolution`, :func:`enumerate_types` and
:func:`count_distinct_betti`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .betti import POSITIVE, UNKNOWN, BettiDiagram
from .scroll import DivisorClass, cohomology_scroll, h0_p1
from .series import FactorizationType, is_very_ample, require_very_ample


@dataclass(frozen=True)
class LowDegreeInvariants:
    nu: int
    tau: int
    p: int


@dataclass(frozen=True)
class RaoProfile:
    """Hartshorne-Rao dimensions gamma_j as (j, value) pairs, j = 1..j_max."""

    gamma: tuple[tuple[int, int], ...]

    def values(self) -> list[int]:
        return [v for _, v in self.gamma]


def in_low_degree(ft: FactorizationType) -> bool:
    return is_very_ample(ft) and ft.degree <= 2 * ft.g


def _require_low_degree(ft: FactorizationType) -> None:
    require_very_ample(ft)
    if ft.degree > 2 * ft.g:
        raise ValueError(
            f"degree {ft.degree} exceeds 2g = {2 * ft.g}; this regime covers g+3 <= d <= 2g"
        )


def low_invariants(ft: FactorizationType) -> LowDegreeInvariants:
    """The triple (nu, tau, p) controlling normality, regularity and syzygies."""
    _require_low_degree(ft)
    g, m, b = ft.g, ft.m, ft.b
    den = m + b - g - 1
    nu = (b - 1 + den - 1) // den
    tau = (2 * g + 1 - b) // m
    p = den * nu - b + 1
    assert nu >= 3 and tau >= 2, f"regime bounds violated at {ft}"
    assert 0 <= p < den and tau <= nu, f"inconsistent invariants at {ft}"
    return LowDegreeInvariants(nu=nu, tau=tau, p=p)


def rao_dimension(ft: FactorizationType, j: int) -> int:
    """gamma_j, the failure of j-normality, as the closed-form sum
    sum_{k=0}^{j-2} h0_p1(k(g+1-b) + 2g - b - j*m); zero for j in {0, 1}."""
    _require_low_degree(ft)
    if j < 0:
        raise ValueError(f"twist must be nonnegative, got j={j}")
    if j <= 1:
        return 0
    g, m, b = ft.g, ft.m, ft.b
    return sum(h0_p1(k * (g + 1 - b) + 2 * g - b - j * m) for k in range(j - 1))


def oracle_rao(ft: FactorizationType, j: int) -> int:
    """Scroll-side route to gamma_j: h1 of (j-2)C0 + (jm+b-2g-2)f on F_{g+1-b}.

    Independent of :func:`rao_dimension` (h1 of the pushforward twists
    instead of h0 of their duals); the two must agree everywhere.
    """
    _require_low_degree(ft)
    if j < 2:
        raise ValueError(f"the scroll-side computation needs j >= 2, got j={j}")
    g, m, b = ft.g, ft.m, ft.b
    divisor = DivisorClass(j - 2, j * m + b - 2 * g - 2)
    return cohomology_scroll(g + 1 - b, divisor).h1


def regularity(ft: FactorizationType) -> int:
    """Castelnuovo-Mumford regularity of the embedded curve, nu + 1."""
    return low_invariants(ft).nu + 1


def rao_profile(ft: FactorizationType, j_max: int) -> RaoProfile:
    """gamma_1..gamma_{j_max}, with the threshold behaviour sanity-checked."""
    if j_max < 1:
        raise ValueError(f"j_max must be at least 1, got {j_max}")
    nu = low_invariants(ft).nu
    pairs = []
    for j in range(1, j_max + 1):
        value = rao_dimension(ft, j)
        assert (value == 0) == (j < 2 or j >= nu), f"normality threshold broken at j={j}"
        pairs.append((j, value))
    return RaoProfile(gamma=tuple(pairs))


def betti_low(ft: FactorizationType) -> BettiDiagram:
    """Partial Betti diagram: closed forms where they exist, honest markers elsewhere.

    Row 1 is the linear strand shared with the scroll, i * C(r-1, i+1).
    Rows 2..tau-1 vanish.  Row nu starts with p zeros, is positive at step
    p+1, ends with the exact value 2g+1-d at step r, and is unknown in
    between.  Rows tau..nu-1 are unknown, rows beyond nu vanish by
    (nu+1)-regularity.
    """
    inv = low_invariants(ft)
    r = ft.degree - ft.g
    diagram = BettiDiagram(r)
    for i in range(1, r + 1):
        diagram.set(i, 1, i * comb(r - 1, i + 1))
    for j in range(inv.tau, inv.nu):
        for i in range(1, r + 1):
            diagram.set(i, j, UNKNOWN)
    diagram.set(inv.p + 1, inv.nu, POSITIVE)
    for i in range(inv.p + 2, r):
        diagram.set(i, inv.nu, UNKNOWN)
    diagram.set(r, inv.nu, 2 * ft.g + 1 - ft.degree)
    return diagram


def n_nu_p_report(ft: FactorizationType) -> tuple[int, int | None, int]:
    """Syzygy thresholds (nu, largest step with vanishing nu-row or None, first failure).

    Steps 1..p of the resolution carry no degree-nu contribution while step
    p+1 does; with p = 0 there is no positive threshold to report.
    """
    inv = low_invariants(ft)
    if inv.p == 0:
        return inv.nu, None, 1
    return inv.nu, inv.p, inv.p + 1


def invert_from_resolution(g: int, d: int, nu: int, p: int) -> FactorizationType:
    """Recover (m, b) from (g, d) and the resolution data (nu, p).

    Solves d = 2m + b together with nu = (b-1+p)/(m+b-g-1):

        m = d - g - 1 - (2g+1+p-d)/(nu-2)
        b = 2g + 2 - d + 2(2g+1+p-d)/(nu-2)

    Non-integral division, or a result that is not a very ample low-degree
    type reproducing (nu, p), signals inconsistent input.
    """
    if nu < 3:
        raise ValueError(f"nu must be at least 3, got {nu}")
    excess = 2 * g + 1 + p - d
    if excess % (nu - 2) != 0:
        raise ValueError(f"inconsistent resolution data: {nu - 2} does not divide {excess}")
    quotient = excess // (nu - 2)
    try:
        ft = FactorizationType(g, d - g - 1 - quotient, 2 * g + 2 - d + 2 * quotient)
    except ValueError as exc:
        raise ValueError(f"inconsistent resolution data: {exc}") from None
    if not in_low_degree(ft):
        raise ValueError(
            f"inconsistent resolution data: recovered type ({ft.m}, {ft.b}) is not a"
            " very ample low-degree type"
        )
    inv = low_invariants(ft)
    if (inv.nu, inv.p) != (nu, p):
        raise ValueError(
            f"inconsistent resolution data: recovered type ({ft.m}, {ft.b}) has"
            f" (nu, p) = ({inv.nu}, {inv.p})"
        )
    return ft


def enumerate_types(g: int, d: int) -> list[FactorizationType]:
    """All very ample factorization types of degree d, ordered by decreasing m.

    Degrees below g+3 yield the empty list: no very ample bundle exists there.
    """
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    types = []
    for b in range(d % 2, g + 2, 2):
        ft = FactorizationType(g, (d - b) // 2, b)
        if is_very_ample(ft):
            types.append(ft)
    return types


def count_distinct_betti(g: int, d: int) -> int:
    """Number of distinct Betti diagrams in degree d, g+3 <= d <= 2g.

    Distinct types give distinct diagrams here, so this is d//2 minus
    ceil((g+1)/2) for even d and d//2 minus ceil(g/2) for odd d.
    """
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    if not g + 3 <= d <= 2 * g:
        raise ValueError(f"counting applies for g+3 <= d <= 2g, got d={d} at g={g}")
    if d % 2 == 0:
        return d // 2 - (g + 2) // 2
    return d // 2 - (g + 1) // 2
