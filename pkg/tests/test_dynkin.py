from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from horospherical.classify import all_types
from horospherical.dynkin import (
    Diagram,
    admissible_end,
    component_of,
    components,
    diagram_automorphisms,
    subdiagram,
)
from horospherical.roots import SimpleType, build_root_system

from oracles import automorphisms_brute

TYPES = all_types(8)


def _types(d):
    return sorted(str(c.classified_type) for c in components(d))


def test_subdiagram_examples():
    d = subdiagram(SimpleType("B", 3), [3])
    assert d.vertices == (1, 2) and _types(d) == ["A2"]
    d = subdiagram(SimpleType("B", 3), [1])
    (c,) = components(d)
    assert c.classified_type == SimpleType("B", 2)
    e = d.edge(2, 3)
    assert e.multiplicity == 2 and e.short == 3
    d = subdiagram(SimpleType("F", 4), [2])
    assert sorted(sorted(c.vertices) for c in components(d)) == [[1], [3, 4]]


@pytest.mark.parametrize("m", range(2, 9))
def test_components_of_type_a(m):
    for i in range(1, m + 1):
        got = _types(subdiagram(SimpleType("A", m), [i]))
        want = sorted(f"A{k}" for k in (i - 1, m - i) if k)
        assert got == want


def test_components_examples():
    assert _types(subdiagram(SimpleType("D", 4), [2])) == ["A1", "A1", "A1"]
    assert _types(subdiagram(SimpleType("G", 2), [1])) == ["A1"]
    assert _types(subdiagram(SimpleType("E", 8), [2])) == ["A7"]
    assert _types(subdiagram(SimpleType("E", 8), [1])) == ["D7"]
    assert _types(subdiagram(SimpleType("E", 7), [7])) == ["E6"]
    assert _types(subdiagram(SimpleType("F", 4), [1])) == ["C3"]
    assert _types(subdiagram(SimpleType("F", 4), [4])) == ["B3"]
    assert _types(subdiagram(SimpleType("C", 5), [3])) == ["A2", "B2"]


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_whole_diagram_is_one_component(t):
    (c,) = components(subdiagram(t, []))
    assert c.classified_type == t
    assert all(c.labeling[v] == v for v in t.vertices) or t.family in "ADE"


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_every_subdiagram_classifies(t):
    # components() re-verifies each labeling against the classified Cartan matrix
    for k in range(t.rank + 1):
        for removed in combinations(t.vertices, k):
            comps = components(subdiagram(t, removed))
            assert sum(c.classified_type.rank for c in comps) == t.rank - k


def test_admissible_end_examples():
    c = component_of(subdiagram(SimpleType("A", 5), [1]), 2)
    assert admissible_end(c, 2) and admissible_end(c, 5)
    assert not admissible_end(c, 3)
    c = component_of(subdiagram(SimpleType("C", 5), [1]), 2)
    assert c.classified_type == SimpleType("C", 4)
    assert admissible_end(c, 2)
    assert not admissible_end(c, 5)
    c = component_of(subdiagram(SimpleType("B", 3), [1]), 3)
    assert admissible_end(c, 3) and not admissible_end(c, 2)
    c = component_of(subdiagram(SimpleType("B", 5), [1]), 5)
    assert c.classified_type == SimpleType("B", 4)
    assert not any(admissible_end(c, v) for v in c.vertices)
    c = component_of(subdiagram(SimpleType("D", 5), [3]), 4)
    assert c.classified_type.rank == 1 and admissible_end(c, 4)


@pytest.mark.parametrize("t", TYPES, ids=str)
def test_type_a_components_have_two_ends(t):
    for v in t.vertices:
        for c in components(subdiagram(t, [v])):
            if c.classified_type.family == "A":
                ends = [u for u in c.vertices if admissible_end(c, u)]
                assert len(ends) == min(2, len(c.vertices))
                assert all(len(c.diagram.neighbours(u)) <= 1 for u in ends)


def test_automorphism_examples():
    assert diagram_automorphisms(SimpleType("G", 2)) == [(1, 2)]
    assert sorted(diagram_automorphisms(SimpleType("A", 3))) == [(1, 2, 3), (3, 2, 1)]
    assert len(diagram_automorphisms(SimpleType("D", 4))) == 6


@pytest.mark.parametrize("t", [t for t in TYPES if t.rank <= 7], ids=str)
def test_automorphisms_match_brute_force(t):
    cartan = build_root_system(t).cartan
    assert sorted(diagram_automorphisms(t)) == sorted(automorphisms_brute(cartan))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(TYPES), st.data())
def test_admissible_end_automorphism_invariant(t, data):
    perm = data.draw(st.sampled_from(diagram_automorphisms(t)))
    removed = data.draw(st.sets(st.sampled_from(list(t.vertices)), max_size=t.rank - 1))
    moved = {perm[v - 1] for v in removed}
    d, d2 = subdiagram(t, removed), subdiagram(t, moved)
    for v in d.vertices:
        c, c2 = component_of(d, v), component_of(d2, perm[v - 1])
        assert c.classified_type == c2.classified_type
        assert admissible_end(c, v) == admissible_end(c2, perm[v - 1])


def test_disjoint_union_labels():
    d = Diagram.disjoint_union([SimpleType("A", 2), SimpleType("A", 1)])
    assert d.vertices == ((0, 1), (0, 2), (1, 1))
    assert _types(d) == ["A1", "A2"]
    assert d.origin[(1, 1)] == (SimpleType("A", 1), 1)
