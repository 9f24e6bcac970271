"""Rank-one horospherical pairs, their colored fans, Picard numbers, dimensions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .dynkin import admissible_end, component_of, subdiagram
from .roots import DomainError, SimpleType, build_root_system, support


@dataclass(frozen=True, order=True)
class HoroPair:
    """``G/H`` for simple ``G``: ``H`` is the kernel of ``omega_alpha - omega_beta``
    on ``P(omega_alpha) & P(omega_beta)``."""

    type: SimpleType
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        for v in (self.alpha, self.beta):
            if v not in self.type.vertices:
                raise DomainError(f"vertex {v} is not in {self.type}")
        if self.alpha == self.beta:
            raise DomainError("alpha and beta must be distinct")

    @property
    def levi(self) -> frozenset[int]:
        """``I = S - {alpha, beta}``."""
        return frozenset(self.type.vertices) - {self.alpha, self.beta}

    def swapped(self) -> HoroPair:
        return HoroPair(self.type, self.beta, self.alpha)

    def __str__(self) -> str:
        return f"({self.type}, a{self.alpha}, a{self.beta})"


def color_images(p: HoroPair) -> dict[int, int]:
    """Image of each color in ``N = Z``, with ``M`` generated by ``omega_alpha - omega_beta``."""
    rs = build_root_system(p.type)
    gen = [0] * rs.rank
    gen[p.alpha - 1] += 1
    gen[p.beta - 1] -= 1
    return {v: gen[v - 1] for v in (p.alpha, p.beta)}


@dataclass(frozen=True)
class EmbeddingFan:
    """Complete colored fan in ``N_R = R``: the two half-lines, each with its colors."""

    pair: HoroPair
    colors: frozenset[int] = field(default_factory=frozenset)
    rays: tuple[int, int] = (1, -1)

    def __post_init__(self) -> None:
        if sorted(self.rays) != [-1, 1]:
            raise DomainError("a complete rank-one fan has the rays +1 and -1")
        images = color_images(self.pair)
        for c in self.colors:
            if c not in images:
                raise DomainError(f"{c} is not a color of {self.pair}")
            if images[c] not in self.rays:
                raise DomainError(f"color {c} does not lie on a ray")

    def cone_colors(self, ray: int) -> frozenset[int]:
        images = color_images(self.pair)
        return frozenset(c for c in self.colors if images[c] == ray)


@dataclass(frozen=True)
class PicardData:
    rho: int
    r: int
    colors_used: int


def embeddings(p: HoroPair) -> list[EmbeddingFan]:
    """The four projective embeddings, ordered toroidal, {alpha}, {beta}, {alpha, beta}."""
    colors = (p.alpha, p.beta)
    return [
        EmbeddingFan(p, frozenset(sub))
        for k in range(3)
        for sub in combinations(colors, k)
    ]


def picard_number(f: EmbeddingFan) -> PicardData:
    rank = 1
    r = len(f.rays) - rank
    n_colors = len(color_images(f.pair))  # #(S - I)
    rho = r + n_colors - len(f.colors)
    return PicardData(rho, r, len(f.colors))


def is_special(p: HoroPair) -> bool:
    """Both colors are admissible simple ends once the other one is removed."""
    for keep, drop in ((p.beta, p.alpha), (p.alpha, p.beta)):
        comp = component_of(subdiagram(p.type, [drop]), keep)
        if not admissible_end(comp, keep):
            return False
    return True


def dimension(p: HoroPair) -> int:
    """``dim G/H = 1 + #(R+ - R_I+)``."""
    rs = build_root_system(p.type)
    levi = p.levi
    return 1 + sum(1 for g in rs.positive_roots if not support(g) <= levi)
