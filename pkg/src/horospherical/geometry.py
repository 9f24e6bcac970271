"""Homogeneity of the Picard-one embedding: normal-bundle sections, models, Aut data."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .classify import FamilyMatch, match_families
from .horo import HoroPair, is_special
from .roots import (
    DomainError,
    SimpleType,
    Weight,
    apply_word,
    build_root_system,
    dominant_conjugate,
    fundamental_weight,
    group_dim,
    is_antidominant,
    longest_word,
    sub,
    weyl_dim,
)

HOMOGENEOUS_FAMILIES = frozenset({1, 2, 6})


class OrbitSide(Enum):
    """Closed orbits of X^1: ``Y = G/P(omega_alpha)``, ``Z = G/P(omega_beta)``."""

    Y = "Y"
    Z = "Z"


@dataclass(frozen=True)
class SectionModule:
    """``H^0`` of a normal bundle: zero, or irreducible with the given highest weight."""

    highest_weight: Weight | None = None
    dim: int = 0

    @property
    def is_zero(self) -> bool:
        return self.highest_weight is None


ZERO = SectionModule()


def _require_special(p: HoroPair) -> None:
    if not is_special(p):
        raise DomainError(f"{p} is not special")


def fiber_lowest_weight(p: HoroPair, side: OrbitSide) -> Weight:
    """Lowest weight of the fiber of the normal bundle of the closed orbit ``side``.

    Z: ``w0(S - beta)`` applied to ``omega_alpha - omega_beta``; Y: ``w0(S - alpha)``
    applied to ``omega_beta - omega_alpha``.
    """
    _require_special(p)
    rs = build_root_system(p.type)
    wa = fundamental_weight(p.alpha, rs.rank)
    wb = fundamental_weight(p.beta, rs.rank)
    if side is OrbitSide.Z:
        removed, weight = p.beta, sub(wa, wb)
    else:
        removed, weight = p.alpha, sub(wb, wa)
    word = longest_word([v for v in rs.vertices if v != removed], rs)
    return apply_word(word, weight, rs)


def normal_sections(p: HoroPair, side: OrbitSide) -> SectionModule:
    """Borel-Weil: nonzero exactly when the fiber's lowest weight is antidominant."""
    low = fiber_lowest_weight(p, side)
    if not is_antidominant(low):
        return ZERO
    rs = build_root_system(p.type)
    top = dominant_conjugate(low, rs)
    return SectionModule(top, weyl_dim(rs, top))


@dataclass(frozen=True)
class HomogeneityReport:
    homogeneous: bool
    model: str
    aut_description: str
    aut_dim: int
    orbit_count: int


def _so(n: int) -> int:
    return n * (n - 1) // 2


def _homogeneous_model(f: FamilyMatch) -> tuple[str, str, int]:
    m = f.params.get("m")
    if f.id == 1:
        return f"quadric Q^{2 * m}", f"PSO({2 * m + 2})", _so(2 * m + 2)
    if f.id == 2:
        i = f.params["i"]
        return f"Grassmannian Gr_{i + 1},{m + 2}", f"PGL({m + 2})", (m + 2) ** 2 - 1
    # spinor variety of B_m, whose automorphism group is of type D_{m+1}
    return f"spinor variety SO({2 * m + 1})/P(w_{m})", f"PSO({2 * m + 2})", _so(2 * m + 2)


# Lie type and highest weight of the unipotent radical of Aut^0
_UNIPOTENT = {
    3: lambda m: ("B", m, m),
    4: lambda m: ("B", 3, 3),
    5: lambda m: ("C", m, 1),
    7: lambda m: ("F", 4, 4),
    8: lambda m: ("G", 2, 1),
}


def _aut_description(f: FamilyMatch, rank: int) -> str:
    m = f.params.get("m", rank)
    if f.id == 3:
        return f"(SO({2 * m + 1}) x C*) |x V(w_{m})"
    if f.id == 4:
        return "(SO(7) x C*) |x V(w_3)"
    if f.id == 5:
        return f"((Sp({2 * m}) x C*)/{{+-1}}) |x V(w_1)"
    if f.id == 7:
        return "(F4 x C*) |x V(w_4)"
    return "(G2 x C*) |x V(w_1)"


def _nonhomogeneous_dim(f: FamilyMatch, rank: int) -> int:
    family, r, k = _UNIPOTENT[f.id](f.params.get("m", rank))
    t = SimpleType(family, r)
    return group_dim(t) + 1 + weyl_dim(t, fundamental_weight(k, r))


def aut_dim(p: HoroPair) -> int:
    """``dim Aut^0(X^1)`` for a non-homogeneous case: reductive part + C* + unipotent."""
    _require_special(p)
    families = match_families(p)
    if any(f.id in HOMOGENEOUS_FAMILIES for f in families):
        raise DomainError(f"{p} has a homogeneous X^1")
    dims = {_nonhomogeneous_dim(f, p.type.rank) for f in families}
    if len(dims) != 1:
        raise DomainError(f"families of {p} disagree on dim Aut: {sorted(dims)}")
    return dims.pop()


def homogeneity(p: HoroPair) -> HomogeneityReport:
    _require_special(p)
    families = match_families(p)
    ids = {f.id for f in families}
    if ids & HOMOGENEOUS_FAMILIES:
        if not ids <= HOMOGENEOUS_FAMILIES:
            raise DomainError(f"{p} matches both homogeneous and non-homogeneous families")
        models = [_homogeneous_model(f) for f in families]
        dims = {d for _, _, d in models}
        if len(dims) != 1:
            raise DomainError(f"homogeneous models of {p} have different dimensions")
        return HomogeneityReport(
            homogeneous=True,
            model=" = ".join(name for name, _, _ in models),
            aut_description=" = ".join(dict.fromkeys(desc for _, desc, _ in models)),
            aut_dim=dims.pop(),
            orbit_count=1,
        )
    model = ""
    if 5 in ids:
        f5 = next(f for f in families if f.id == 5)
        model = f"odd symplectic Grassmannian Gr_{f5.params['i'] + 1},{2 * f5.params['m'] + 1}"
    return HomogeneityReport(
        homogeneous=False,
        model=model,
        aut_description=" = ".join(_aut_description(f, p.type.rank) for f in families),
        aut_dim=aut_dim(p),
        orbit_count=2,
    )


def ambient_dim(p: HoroPair) -> int:
    """Dimension of ``P(V(omega_beta) + V(omega_alpha))``."""
    _require_special(p)
    rs = build_root_system(p.type)
    return (
        weyl_dim(rs, fundamental_weight(p.alpha, rs.rank))
        + weyl_dim(rs, fundamental_weight(p.beta, rs.rank))
        - 1
    )
