"""Dynkin-diagram combinatorics: induced subdiagrams, components, simple ends."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Hashable, Iterable, Mapping, Sequence

from .roots import DomainError, SimpleType, build_root_system

Vertex = Hashable


class DiagramError(RuntimeError):
    """A connected diagram that is not the diagram of a simple type."""


@dataclass(frozen=True)
class Edge:
    u: Vertex
    v: Vertex
    multiplicity: int
    # endpoint carrying the short root, None for simple bonds
    short: Vertex | None = None


@dataclass(frozen=True)
class Diagram:
    """A Dynkin diagram on arbitrary vertex labels.

    ``cartan`` holds the nonzero off-diagonal entries ``(u, v) -> <alpha_v, alpha_u^vee>``.
    ``origin`` maps each label to ``(SimpleType, Bourbaki index)`` in the ambient diagram.
    """

    vertices: tuple[Vertex, ...]
    cartan: Mapping[tuple[Vertex, Vertex], int]
    origin: Mapping[Vertex, tuple[SimpleType, int]]

    @classmethod
    def from_type(cls, t: SimpleType) -> Diagram:
        return cls._build([t], single=True)

    @classmethod
    def disjoint_union(cls, types: Sequence[SimpleType]) -> Diagram:
        """Labels are ``(k, i)``: vertex ``i`` of the ``k``-th summand."""
        return cls._build(list(types), single=False)

    @classmethod
    def _build(cls, types: list[SimpleType], single: bool) -> Diagram:
        vertices, cartan, origin = [], {}, {}
        for k, t in enumerate(types):
            c = build_root_system(t).cartan
            label = (lambda i: i) if single else (lambda i, k=k: (k, i))
            for i in t.vertices:
                vertices.append(label(i))
                origin[label(i)] = (t, i)
                for j in t.vertices:
                    if i != j and c[i - 1][j - 1]:
                        cartan[label(i), label(j)] = c[i - 1][j - 1]
        return cls(tuple(vertices), cartan, origin)

    def induced(self, keep: Iterable[Vertex]) -> Diagram:
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        cartan = {(u, v): c for (u, v), c in self.cartan.items() if u in keep and v in keep}
        return Diagram(verts, cartan, {v: self.origin[v] for v in verts})

    def neighbours(self, v: Vertex) -> list[Vertex]:
        return [w for w in self.vertices if (v, w) in self.cartan]

    def edge(self, u: Vertex, v: Vertex) -> Edge | None:
        if (u, v) not in self.cartan:
            return None
        a, b = -self.cartan[u, v], -self.cartan[v, u]
        short = None
        if b > a:
            short = v  # <alpha_u, alpha_v^vee> large means alpha_v is short
        elif a > b:
            short = u
        return Edge(u, v, max(a, b), short)

    @property
    def edges(self) -> list[Edge]:
        out = []
        for i, u in enumerate(self.vertices):
            for v in self.vertices[i + 1 :]:
                e = self.edge(u, v)
                if e is not None:
                    out.append(e)
        return out


@dataclass(frozen=True)
class Component:
    vertices: frozenset
    classified_type: SimpleType
    # vertex -> canonical Bourbaki label of classified_type
    labeling: Mapping[Vertex, int]
    diagram: Diagram

    def label_of(self, v: Vertex) -> int:
        return self.labeling[v]


def subdiagram(t: SimpleType, removed: Iterable[Vertex]) -> Diagram:
    removed = set(removed)
    for v in removed:
        if v not in t.vertices:
            raise DomainError(f"vertex {v} is not in {t}")
    d = Diagram.from_type(t)
    return d.induced(v for v in d.vertices if v not in removed)


def _connected_pieces(d: Diagram) -> list[list[Vertex]]:
    seen: set = set()
    pieces = []
    for start in d.vertices:
        if start in seen:
            continue
        piece, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            piece.append(v)
            for w in d.neighbours(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        order = {v: k for k, v in enumerate(d.vertices)}
        pieces.append(sorted(piece, key=order.__getitem__))
    return pieces


def _path_from(d: Diagram, start: Vertex) -> list[Vertex]:
    path, prev = [start], None
    while True:
        nxt = [w for w in d.neighbours(path[-1]) if w != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def _arm(d: Diagram, centre: Vertex, first: Vertex) -> list[Vertex]:
    arm, prev = [first], centre
    while True:
        nxt = [w for w in d.neighbours(arm[-1]) if w != prev]
        if not nxt:
            return arm
        prev = arm[-1]
        arm.append(nxt[0])


def _classify(d: Diagram) -> tuple[SimpleType, dict]:
    verts = list(d.vertices)
    n = len(verts)
    if n == 1:
        return SimpleType("A", 1), {verts[0]: 1}
    edges = d.edges
    if len(edges) != n - 1:
        raise DiagramError("connected diagram with a cycle")
    multi = [e for e in edges if e.multiplicity > 1]
    if any(e.multiplicity > 3 for e in edges) or len(multi) > 1:
        raise DiagramError("bad edge multiplicities")
    degree = {v: len(d.neighbours(v)) for v in verts}
    leaves = [v for v in verts if degree[v] == 1]

    if multi:
        e = multi[0]
        long = e.u if e.short == e.v else e.v
        if e.multiplicity == 3:
            if n != 2:
                raise DiagramError("triple bond outside G2")
            return SimpleType("G", 2), {e.short: 1, long: 2}
        if max(degree.values()) > 2:
            raise DiagramError("branched diagram with a double bond")
        if n == 2:
            return SimpleType("B", 2), {long: 1, e.short: 2}
        bond_leaf = [v for v in (e.u, e.v) if degree[v] == 1]
        if bond_leaf:
            # B_n / C_n: number from the far end so the bond joins alpha_{n-1}, alpha_n
            (start,) = [v for v in leaves if v != bond_leaf[0]]
            path = _path_from(d, start)
            family = "B" if bond_leaf[0] == e.short else "C"
            return SimpleType(family, n), {v: k + 1 for k, v in enumerate(path)}
        if n == 4:
            (start,) = [v for v in leaves if long in d.neighbours(v)]
            return SimpleType("F", 4), {v: k + 1 for k, v in enumerate(_path_from(d, start))}
        raise DiagramError("double bond in an unsupported position")

    branch = [v for v in verts if degree[v] >= 3]
    if not branch:
        ends = sorted(leaves, key=verts.index)
        return SimpleType("A", n), {v: k + 1 for k, v in enumerate(_path_from(d, ends[0]))}
    if len(branch) > 1 or degree[branch[0]] != 3:
        raise DiagramError("diagram has too many branch points")
    centre = branch[0]
    arms = sorted((_arm(d, centre, w) for w in d.neighbours(centre)), key=len)
    lengths = tuple(len(a) for a in arms)
    if lengths[:2] == (1, 1):
        # D_n: long arm alpha_1..alpha_{n-3}, centre alpha_{n-2}, short arms alpha_{n-1}, alpha_n
        labels = {v: k + 1 for k, v in enumerate(reversed(arms[2]))}
        labels[centre] = n - 2
        labels[arms[0][0]] = n - 1
        labels[arms[1][0]] = n
        return SimpleType("D", n), labels
    if lengths[0] == 1 and lengths[1] == 2 and lengths[2] in (2, 3, 4):
        short_arm, mid_arm, long_arm = arms
        labels = {short_arm[0]: 2, centre: 4, mid_arm[0]: 3, mid_arm[1]: 1}
        for k, v in enumerate(long_arm):
            labels[v] = 5 + k
        return SimpleType("E", n), labels
    raise DiagramError(f"branched diagram with arms {lengths}")


def _verify_labeling(d: Diagram, t: SimpleType, labels: Mapping) -> None:
    c = build_root_system(t).cartan
    for u in d.vertices:
        for v in d.vertices:
            if u != v and d.cartan.get((u, v), 0) != c[labels[u] - 1][labels[v] - 1]:
                raise DiagramError(f"component does not match {t} under its labeling")


def components(d: Diagram) -> list[Component]:
    """Connected components, each classified with a Bourbaki labeling."""
    out = []
    for piece in _connected_pieces(d):
        sub = d.induced(piece)
        t, labels = _classify(sub)
        _verify_labeling(sub, t, labels)
        out.append(Component(frozenset(piece), t, labels, sub))
    return out


def component_of(d: Diagram, v: Vertex) -> Component:
    for c in components(d):
        if v in c.vertices:
            return c
    raise DomainError(f"vertex {v} is not in the diagram")


def admissible_end(c: Component, v: Vertex) -> bool:
    """Whether ``v`` is a simple end of ``c`` usable by the smoothness criterion.

    Single vertices and ends of A-chains qualify; in C_k (k >= 3) only the end
    away from the double bond; in the rank-2 doubly laced component only the
    short root.  B_k (k >= 3), D, E, F and G components never qualify.
    """
    if v not in c.vertices:
        raise DomainError(f"vertex {v} is not in the component")
    t, label = c.classified_type, c.labeling[v]
    if t.family == "A":
        return label in (1, t.rank)
    if t.family == "B" and t.rank == 2:
        return label == 2
    if t.family == "C":
        return label == 1
    return False


def diagram_automorphisms(t: SimpleType) -> list[tuple[int, ...]]:
    """All diagram automorphisms as tuples ``p`` with ``p[i - 1]`` the image of ``i``."""
    n = t.rank
    ident = tuple(range(1, n + 1))
    if t.family == "A" and n >= 2:
        return [ident, tuple(range(n, 0, -1))]
    if t.family == "D":
        if n == 4:
            out = []
            for a, b, c in permutations((1, 3, 4)):
                out.append((a, 2, b, c))
            return sorted(out, key=lambda p: p != ident)
        return [ident, ident[: n - 2] + (n, n - 1)]
    if t.family == "E" and n == 6:
        return [ident, (6, 2, 5, 4, 3, 1)]
    return [ident]
