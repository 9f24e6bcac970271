"""Enumeration of special pairs and the eight parametric families they fall into."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator

from .dynkin import Component, Diagram, Vertex, admissible_end, components, diagram_automorphisms
from .horo import HoroPair, dimension, is_special
from .roots import FAMILIES, InvalidTypeError, SimpleType

DEFAULT_MAX_RANK = 8

# printed form of each family, (alpha, beta) in the order the list gives them
FAMILY_TEMPLATES = {
    1: "(A_m, a_1, a_m)",
    2: "(A_m, a_i, a_i+1), 1 <= i <= m-1",
    3: "(B_m, a_m-1, a_m)",
    4: "(B_3, a_1, a_3)",
    5: "(C_m, a_i, a_i+1), 1 <= i <= m-1",
    6: "(D_m, a_m-1, a_m)",
    7: "(F_4, a_2, a_3)",
    8: "(G_2, a_2, a_1)",
}


@dataclass(frozen=True)
class FamilyMatch:
    id: int
    params: dict[str, int] = field(default_factory=dict, hash=False)


def family_instances(fid: int, rank: int) -> Iterator[tuple[SimpleType, int, int, dict]]:
    """Every instance of family ``fid`` whose type has the given rank."""
    m = rank
    if fid == 1 and m >= 2:
        yield SimpleType("A", m), 1, m, {"m": m}
    elif fid == 2 and m >= 2:
        for i in range(1, m):
            yield SimpleType("A", m), i, i + 1, {"m": m, "i": i}
    elif fid == 3 and m >= 2:
        yield SimpleType("B", m), m - 1, m, {"m": m}
    elif fid == 4 and m == 3:
        yield SimpleType("B", 3), 1, 3, {}
    elif fid == 5 and m >= 2:
        for i in range(1, m):
            yield SimpleType("C", m), i, i + 1, {"m": m, "i": i}
    elif fid == 6 and m >= 4:
        yield SimpleType("D", m), m - 1, m, {"m": m}
    elif fid == 7 and m == 4:
        yield SimpleType("F", 4), 2, 3, {}
    elif fid == 8 and m == 2:
        yield SimpleType("G", 2), 2, 1, {}


def _to_canonical_type(t: SimpleType, a: int, b: int) -> tuple[SimpleType, int, int]:
    """C_2 is identified with B_2 (alpha_1 <-> alpha_2)."""
    if t == SimpleType("C", 2):
        return SimpleType("B", 2), 3 - a, 3 - b
    return t, a, b


def _images(t: SimpleType, a: int, b: int) -> list[tuple[SimpleType, frozenset[int]]]:
    """``{a, b}`` under every diagram isomorphism out of ``t``; identity first."""
    out = [(t, frozenset((a, b)))]
    for perm in diagram_automorphisms(t):
        out.append((t, frozenset((perm[a - 1], perm[b - 1]))))
    if t.family in "BC" and t.rank == 2:
        other = SimpleType("C" if t.family == "B" else "B", 2)
        out.append((other, frozenset((3 - a, 3 - b))))
    return out


def match_families(p: HoroPair) -> list[FamilyMatch]:
    """All families the pair instantiates, up to exchange and diagram isomorphism.

    A literal instance (no isomorphism needed) is preferred when choosing the
    reported parameters.
    """
    images = _images(p.type, p.alpha, p.beta)
    found = []
    for fid in FAMILY_TEMPLATES:
        best = None
        for t, a, b, params in family_instances(fid, p.type.rank):
            key = (t, frozenset((a, b)))
            if key in images:
                rank_in_images = images.index(key)
                if best is None or rank_in_images < best[0]:
                    best = (rank_in_images, params)
        if best is not None:
            found.append(FamilyMatch(fid, dict(best[1])))
    return found


def _literal_order(t: SimpleType, pair: frozenset[int]) -> tuple[int, int] | None:
    """Printed (alpha, beta) order of the lowest family literally containing ``pair``."""
    for fid in FAMILY_TEMPLATES:
        for ti, a, b, _ in family_instances(fid, t.rank):
            if ti == t and frozenset((a, b)) == pair:
                return a, b
    return None


def canonical_form(p: HoroPair) -> HoroPair:
    """Orbit representative under diagram isomorphisms (C_2 is sent to B_2).

    Representatives that literally instantiate a family template are preferred,
    then the lexicographically smallest vertex pair.  The result is ordered as
    the matching template prints it.
    """
    t, a, b = _to_canonical_type(p.type, p.alpha, p.beta)
    orbit = {frozenset((perm[a - 1], perm[b - 1])) for perm in diagram_automorphisms(t)}
    scored = []
    for s in orbit:
        order = _literal_order(t, s)
        scored.append((order is None, tuple(sorted(s)), order))
    scored.sort()
    _, plain, order = scored[0]
    return HoroPair(t, *(order or plain))


def is_canonical(p: HoroPair) -> bool:
    c = canonical_form(p)
    return c.type == p.type and {c.alpha, c.beta} == {p.alpha, p.beta}


def all_types(max_rank: int) -> list[SimpleType]:
    """Simple types of rank <= max_rank without repetition (no C_2, no D_3)."""
    lowest = {"A": 1, "B": 2, "C": 3, "D": 4}
    out = []
    for family in FAMILIES:
        for rank in range(lowest.get(family, 1), max_rank + 1):
            try:
                out.append(SimpleType(family, rank))
            except InvalidTypeError:
                continue
    return out


@dataclass(frozen=True)
class ClassificationRecord:
    pair: HoroPair
    families: tuple[FamilyMatch, ...]
    dimension: int
    canonical: bool

    @property
    def family_ids(self) -> tuple[int, ...]:
        return tuple(f.id for f in self.families)


def classification_record(p: HoroPair) -> ClassificationRecord:
    families = tuple(match_families(p)) if is_special(p) else ()
    return ClassificationRecord(p, families, dimension(p), is_canonical(p))


def _sort_key(rec: ClassificationRecord) -> tuple:
    p = rec.pair
    return (rec.family_ids[:1], p.type.rank, FAMILIES.index(p.type.family), p.alpha, p.beta)


def enumerate_special(max_rank: int = DEFAULT_MAX_RANK) -> list[ClassificationRecord]:
    """Every special pair of rank <= max_rank, one per isomorphism class."""
    if max_rank < 1:
        raise ValueError("max_rank must be at least 1")
    seen = {}
    for t in all_types(max_rank):
        for a in t.vertices:
            for b in range(a + 1, t.rank + 1):
                p = HoroPair(t, a, b)
                if not is_special(p):
                    continue
                c = canonical_form(p)
                key = (c.type, frozenset((c.alpha, c.beta)))
                if key not in seen:
                    seen[key] = classification_record(c)
    return sorted(seen.values(), key=_sort_key)


def template_pairs(max_rank: int = DEFAULT_MAX_RANK) -> set[tuple[SimpleType, frozenset[int]]]:
    """The eight families instantiated at rank <= max_rank, canonicalised."""
    out = set()
    for fid in FAMILY_TEMPLATES:
        for rank in range(1, max_rank + 1):
            for t, a, b, _ in family_instances(fid, rank):
                c = canonical_form(HoroPair(t, a, b))
                out.add((c.type, frozenset((c.alpha, c.beta))))
    return out


# -- projective-space decomposition -------------------------------------------


@dataclass(frozen=True)
class MarkedDiagram:
    """A possibly disconnected diagram with marked vertices ``S - I``.

    ``n`` is the rank of ``G/H``; it defaults to ``#marked - 1``.
    """

    diagram: Diagram
    marked: tuple[Vertex, ...]
    n: int | None = None

    def __post_init__(self) -> None:
        if len(set(self.marked)) != len(self.marked):
            raise ValueError("marked vertices must be distinct")
        for v in self.marked:
            if v not in self.diagram.vertices:
                raise ValueError(f"marked vertex {v} is not in the diagram")
        if self.n is None:
            object.__setattr__(self, "n", len(self.marked) - 1)


@dataclass(frozen=True)
class Decomposition:
    parts: dict[Vertex, Component]
    # components carrying no marked vertex
    rest: tuple[Component, ...]


def projective_space_decomposition(md: MarkedDiagram) -> Decomposition | None:
    """Each marked root alone in its component of the diagram, as an admissible end
    of an A- or C-type component; None when this fails."""
    parts = {}
    rest = []
    for comp in components(md.diagram):
        inside = [v for v in md.marked if v in comp.vertices]
        if len(inside) > 1:
            return None
        if not inside:
            rest.append(comp)
            continue
        v = inside[0]
        if comp.classified_type.family not in "ABC" or not admissible_end(comp, v):
            return None
        parts[v] = comp
    return Decomposition(parts, tuple(rest))


class ShapeKind(Enum):
    PROJECTIVE_SPACE = "projective_space"
    SPECIAL_PAIR = "special_pair"
    NOT_SMOOTH_PICARD_ONE = "not_smooth_picard_one"


@dataclass(frozen=True)
class X1Shape:
    kind: ShapeKind
    pair: HoroPair | None = None


def x1_shape(md: MarkedDiagram) -> X1Shape:
    """What the smooth Picard-one embedding looks like, if there is one."""
    if len(md.marked) <= md.n:
        return X1Shape(ShapeKind.PROJECTIVE_SPACE)
    if len(md.marked) == md.n + 1 and projective_space_decomposition(md) is not None:
        return X1Shape(ShapeKind.PROJECTIVE_SPACE)
    if md.n == 1 and len(md.marked) == 2:
        u, v = md.marked
        for comp in components(md.diagram):
            if u in comp.vertices and v in comp.vertices:
                t = comp.classified_type
                p = HoroPair(t, comp.labeling[u], comp.labeling[v])
                if is_special(p):
                    return X1Shape(ShapeKind.SPECIAL_PAIR, p)
    return X1Shape(ShapeKind.NOT_SMOOTH_PICARD_ONE)
