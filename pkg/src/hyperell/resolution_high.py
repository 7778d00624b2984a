"""Closed-form resolution data for embeddings of degree d >= 2g+1.

In this range the embedded curve is projectively normal and 3-regular, so
the Betti diagram has exactly two rows, both depending on (g, d) alone.
With p = d - 2g - 1 and r = d - g:

* row 2 is the staircase beta_{i,2} = (i - p) * C(r-1, i) for
  p+1 <= i <= r-1 and zero elsewhere (the first p steps of the
  resolution are therefore entirely linear),
* row 1 starts with the quadric count beta_{1,1} = C(r, 2) - g and is
  propagated by the recurrence obtained from equating the two exact
  expressions for the Hilbert series of the coordinate ring.

The module also certifies why linearity stops at step p: a concrete
multisecant linear space, packaged by :func:`secant_obstruction`, whose
nonvanishing count is :func:`rnc_obstruction_h1`.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .betti import BettiDiagram
from .scroll import h1_p1
from .series import FactorizationType, require_very_ample

SECANT_PLANE_FROM_DUAL = "secant_plane_from_dual"
GAMMA_ON_MINIMAL_SECTION = "gamma_on_minimal_section"


def _require_high_degree(g: int, d: int) -> None:
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    if d <= 2 * g:
        raise ValueError(f"high-degree regime requires d >= 2g+1 = {2 * g + 1}, got d={d}")


def betti_high(g: int, d: int) -> BettiDiagram:
    """Full Betti diagram, every entry exact, for d >= 2g+1 and g >= 2."""
    _require_high_degree(g, d)
    p = d - 2 * g - 1
    r = d - g
    diagram = BettiDiagram(r)

    row2 = {i: (i - p) * comb(r - 1, i) if i > p else 0 for i in range(1, r)}
    for i, value in row2.items():
        diagram.set(i, 2, value)

    diagram.set(1, 1, comb(r, 2) - g)
    for i in range(1, r - 1):
        value = row2[i] - g * comb(r - 1, i) + (r - 1) * comb(r - 1, i + 1) - comb(r - 1, i + 2)
        assert value >= 0, f"negative beta_({i + 1},1) = {value} at (g, d) = ({g}, {d})"
        diagram.set(i + 1, 1, value)
    return diagram


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _trim(coeffs: list[int]) -> list[int]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


def hilbert_numerator_check(diagram: BettiDiagram, g: int, p: int) -> bool:
    """Exact polynomial identity satisfied by a correct two-row diagram.

    Expands N(t) = 1 - beta_{1,1} t^2
                 + sum_{k>=2} ((-1)^k beta_{k,1} + (-1)^(k-1) beta_{k-1,2}) t^(k+1)
    with integer arithmetic and compares it, coefficient by coefficient,
    with (g t^2 + (g+p) t + 1) (1 - t)^(r-1).
    """
    if not diagram.fully_known:
        raise ValueError("diagram has positive/unknown entries; the identity needs exact values")
    r = diagram.r
    if r != g + p + 1:
        raise ValueError(f"diagram width r={r} incompatible with g={g}, p={p}")
    numerator = [0] * (r + 3)
    numerator[0] = 1
    numerator[2] -= diagram.entry(1, 1)
    for k in range(2, r + 2):
        numerator[k + 1] += (-1) ** k * diagram.entry(k, 1)
        numerator[k + 1] += (-1) ** (k - 1) * diagram.entry(k - 1, 2)
    target = _poly_mul([1, g + p, g], [(-1) ** k * comb(r - 1, k) for k in range(r)])
    return _trim(numerator) == _trim(target)


def np_report_high(g: int, d: int) -> tuple[int, int]:
    """Largest p with an all-linear resolution through step p, and the first failure.

    Returns (p, p+1) for d = 2g+1+p: syzygies are linear through step p
    and acquire a quadratic contribution at step p+1.
    """
    _require_high_degree(g, d)
    p = d - 2 * g - 1
    return p, p + 1


def rnc_obstruction_h1(n: int, ell: int, i: int, j: int) -> int:
    """Nonvanishing count for a length-ell subscheme of a degree-n rational
    normal curve: C(n, i) * h1 of O(n*j - i - ell) on the line."""
    if n < 1:
        raise ValueError(f"rational normal curve degree must be positive, got {n}")
    if j < 2:
        raise ValueError(f"twist must be at least 2, got j={j}")
    if not 0 <= i <= n:
        raise ValueError(f"exterior power index must satisfy 0 <= i <= n, got i={i}")
    if ell < 0:
        raise ValueError(f"subscheme length must be nonnegative, got {ell}")
    return comb(n, i) * h1_p1(-i + n * j - ell)


@dataclass(frozen=True)
class SecantObstruction:
    """A multisecant linear space certifying where linear syzygies stop.

    ``secancy``-secant ``plane_dim``-plane to the embedded curve; for the
    minimal-section kind the plane is spanned by the curve's intersection
    with the scroll's minimal section, a subscheme of length
    ``gamma_length`` (always equal to the secancy).
    """

    kind: str
    secancy: int
    plane_dim: int
    gamma_length: int | None
    note: str


def secant_obstruction(ft: FactorizationType) -> SecantObstruction:
    """Geometric witness for the failure of linearity at step p+1, d >= 2g+1.

    For m >= g-1 the witness is a (p+3)-secant (p+1)-plane spanned by an
    effective divisor of the residual of the canonical bundle.  For
    m <= g-2 no such plane exists; the witness is instead the intersection
    of the curve with the minimal section of its scroll, a subscheme of
    length b spanning a (p+g-m)-plane, with g+1-m >= 3.
    """
    require_very_ample(ft)
    _require_high_degree(ft.g, ft.degree)
    g, m = ft.g, ft.m
    p = ft.degree - 2 * g - 1
    if m >= g - 1:
        return SecantObstruction(
            kind=SECANT_PLANE_FROM_DUAL,
            secancy=p + 3,
            plane_dim=p + 1,
            gamma_length=None,
            note=f"{p + 3}-secant {p + 1}-plane spanned by a residual canonical divisor",
        )
    plane_dim = p + g - m
    secancy = (p + g - m) + (g + 1 - m)
    assert secancy == ft.b
    return SecantObstruction(
        kind=GAMMA_ON_MINIMAL_SECTION,
        secancy=secancy,
        plane_dim=plane_dim,
        gamma_length=ft.b,
        note=(
            f"{secancy}-secant {plane_dim}-plane spanned by the curve's"
            " intersection with the minimal section of its scroll"
        ),
    )
