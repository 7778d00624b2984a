"""The factorization type (m, b) and the classification of complete series.

A line bundle L on a hyperelliptic curve of arithmetic genus g factors
uniquely as L = A^m (x) B, where A is the degree-two pencil, m is the
largest twist with surviving sections, and B is normalized of degree
b in [0, g+1].  The pair (m, b) determines the dimensions h0 and h1,
base point freeness, very ampleness, and the shape of the morphism
defined by the complete series whenever that morphism exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scroll import CohomologyPair, h0_p1, h1_p1

NOT_BASE_POINT_FREE = "not_base_point_free"
BASE_POINT_FREE_ONLY = "base_point_free_only"
VERY_AMPLE = "very_ample"

ALPHA = "alpha"
BETA = "beta"
GAMMA = "gamma"


@dataclass(frozen=True)
class FactorizationType:
    """Factorization data (m, b) of a line bundle in genus g.

    m may be any integer (special and even negative-degree bundles are
    legitimate queries); b is constrained to 0 <= b <= g+1.  The degree
    d = 2m + b is always derived, never stored.
    """

    g: int
    m: int
    b: int

    def __post_init__(self) -> None:
        if self.g < 2:
            raise ValueError(f"genus must be at least 2, got {self.g}")
        if not 0 <= self.b <= self.g + 1:
            raise ValueError(
                f"normalized degree must satisfy 0 <= b <= g+1, got b={self.b} for g={self.g}"
            )

    @property
    def degree(self) -> int:
        return 2 * self.m + self.b


@dataclass(frozen=True)
class AmplenessClass:
    """Classification tag, with the failure case populated only for
    bundles that are base point free but not very ample."""

    tag: str
    case: str | None = None


@dataclass(frozen=True)
class MorphismProfile:
    """Shape of the morphism defined by a base point free complete series.

    Exactly one of the optional payloads is populated, matching ``kind``:
    ``degree`` for a double cover of a rational normal curve,
    ``points_collapsed``/``target_dim`` for a birational map contracting the
    normalized part, ``fold`` for a covering of the line.
    """

    kind: str
    birational: bool
    degree: int | None = None
    points_collapsed: int | None = None
    target_dim: int | None = None
    fold: int | None = None


def riemann_roch(ft: FactorizationType) -> CohomologyPair:
    """Exact (h0, h1): the two pushforward summands O(m) and O(m+b-g-1)."""
    n0, n1 = ft.m, ft.m + ft.b - ft.g - 1
    return CohomologyPair(h0_p1(n0) + h0_p1(n1), h1_p1(n0) + h1_p1(n1))


def is_nonspecial(ft: FactorizationType) -> bool:
    """h1 vanishes exactly when m + b >= g."""
    return ft.m + ft.b >= ft.g


def is_base_point_free(ft: FactorizationType) -> bool:
    if ft.b == 0:
        return ft.m >= 0
    return ft.m + ft.b >= ft.g + 1


def is_very_ample(ft: FactorizationType) -> bool:
    if ft.b == 0:
        return ft.m >= ft.g + 1
    if ft.b == 1:
        return ft.m >= ft.g
    return ft.m + ft.b >= ft.g + 2


def normalized_h0(g: int, b: int) -> int:
    """Sections of a normalized bundle of degree b: one except at b = g+1."""
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    if not 0 <= b <= g + 1:
        raise ValueError(f"normalized degree must satisfy 0 <= b <= g+1, got b={b} for g={g}")
    return 1 + h0_p1(b - g - 1)


def ampleness_class(ft: FactorizationType) -> AmplenessClass:
    """Partition of all types into not-base-point-free / the three
    base-point-free-but-not-very-ample cases / very ample.

    Case alpha covers b = 0 with 0 <= m <= g; the degenerate m = 0 member
    is the trivial bundle, which is base point free and not very ample but
    falls outside the ample range the three cases were designed for.
    """
    if not is_base_point_free(ft):
        return AmplenessClass(NOT_BASE_POINT_FREE)
    if is_very_ample(ft):
        return AmplenessClass(VERY_AMPLE)
    g, m, b = ft.g, ft.m, ft.b
    if b == 0 and 0 <= m <= g:
        return AmplenessClass(BASE_POINT_FREE_ONLY, ALPHA)
    if 2 <= b <= g and m + b == g + 1:
        return AmplenessClass(BASE_POINT_FREE_ONLY, BETA)
    if (m, b) == (0, g + 1):
        return AmplenessClass(BASE_POINT_FREE_ONLY, GAMMA)
    # b = 1 cannot reach here: base point free forces m >= g, already very ample.
    raise AssertionError(f"classification gap at (g, m, b) = ({g}, {m}, {b})")


def require_very_ample(ft: FactorizationType) -> None:
    """Raise ValueError carrying the classification case when ft fails to be very ample."""
    cls = ampleness_class(ft)
    if cls.tag == VERY_AMPLE:
        return
    if cls.tag == NOT_BASE_POINT_FREE:
        raise ValueError("not very ample: not base point free")
    raise ValueError(f"not very ample: base point free only (case {cls.case})")


def morphism_profile(ft: FactorizationType) -> MorphismProfile:
    """Morphism defined by the complete series of a base point free bundle."""
    cls = ampleness_class(ft)
    if cls.tag == NOT_BASE_POINT_FREE:
        raise ValueError("no morphism: the complete series has base points")
    if cls.tag == VERY_AMPLE:
        return MorphismProfile(kind="embedding", birational=True)
    if cls.case == ALPHA:
        return MorphismProfile(kind="double_cover_of_rnc", birational=False, degree=ft.m)
    if cls.case == BETA:
        return MorphismProfile(
            kind="birational_collapsing_b",
            birational=True,
            points_collapsed=ft.b,
            target_dim=ft.degree - ft.g,
        )
    return MorphismProfile(kind="multi_cover", birational=False, fold=ft.g + 1)


def canonical_type(g: int) -> FactorizationType:
    """The canonical bundle is the (g-1)-st power of the pencil: type (g-1, 0)."""
    return FactorizationType(g, g - 1, 0)
