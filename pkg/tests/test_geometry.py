import pytest

from horospherical.classify import enumerate_special
from horospherical.geometry import (
    OrbitSide,
    ambient_dim,
    aut_dim,
    fiber_lowest_weight,
    homogeneity,
    normal_sections,
)
from horospherical.horo import HoroPair, dimension
from horospherical.roots import DomainError, SimpleType, group_dim, is_dominant, weyl_dim
from horospherical.selftest import instances

S = SimpleType
Y, Z = OrbitSide.Y, OrbitSide.Z


def test_fiber_lowest_weight_examples():
    for m in range(2, 9):
        low = fiber_lowest_weight(HoroPair(S("B", m), m - 1, m), Z)
        assert low[m - 1] == 1
    assert fiber_lowest_weight(HoroPair(S("G", 2), 2, 1), Z) == (2, -1)


def test_non_special_rejected():
    p = HoroPair(S("A", 4), 1, 3)
    for fn in (lambda: fiber_lowest_weight(p, Z), lambda: normal_sections(p, Y),
               lambda: homogeneity(p), lambda: ambient_dim(p), lambda: aut_dim(p)):
        with pytest.raises(DomainError):
            fn()


@pytest.mark.parametrize("rec", enumerate_special(8), ids=lambda r: str(r.pair))
def test_levi_coordinates_nonpositive(rec):
    p = rec.pair
    for side, removed in ((Z, p.beta), (Y, p.alpha)):
        low = fiber_lowest_weight(p, side)
        assert all(x <= 0 for k, x in enumerate(low) if k + 1 != removed)


def test_section_examples():
    s = normal_sections(HoroPair(S("B", 4), 3, 4), Y)
    assert s.highest_weight == (0, 0, 0, 1) and s.dim == 16
    s = normal_sections(HoroPair(S("F", 4), 2, 3), Y)
    assert s.highest_weight == (0, 0, 0, 1) and s.dim == 26
    s = normal_sections(HoroPair(S("C", 5), 2, 3), Z)
    assert s.highest_weight == (1, 0, 0, 0, 0) and s.dim == 10
    assert normal_sections(HoroPair(S("C", 5), 2, 3), Y).is_zero


@pytest.mark.parametrize("fid", [3, 4, 5, 7, 8])
def test_exactly_one_zero_side(fid):
    zero_side = Y if fid == 5 else Z
    for p, _ in instances(fid):
        assert normal_sections(p, zero_side).is_zero
        other = Z if zero_side is Y else Y
        assert not normal_sections(p, other).is_zero


def test_section_dim_is_weyl_dim_of_highest_weight():
    for rec in enumerate_special(6):
        for side in OrbitSide:
            s = normal_sections(rec.pair, side)
            if not s.is_zero:
                assert is_dominant(s.highest_weight)
                assert s.dim == weyl_dim(rec.pair.type, s.highest_weight)


def test_homogeneity_examples():
    h = homogeneity(HoroPair(S("A", 5), 1, 5))
    assert h.homogeneous and h.model == "quadric Q^10" and h.orbit_count == 1
    h = homogeneity(HoroPair(S("A", 5), 2, 3))
    assert h.homogeneous and h.model == "Grassmannian Gr_3,7"
    h = homogeneity(HoroPair(S("D", 6), 5, 6))
    assert h.homogeneous and h.model.startswith("spinor variety SO(13)")
    h = homogeneity(HoroPair(S("B", 3), 1, 3))
    assert not h.homogeneous and h.aut_description == "(SO(7) x C*) |x V(w_3)" and h.orbit_count == 2
    h = homogeneity(HoroPair(S("C", 4), 2, 3))
    assert not h.homogeneous and h.model == "odd symplectic Grassmannian Gr_3,9"


def test_homogeneous_models_have_right_dimension():
    grass = lambda k, n: k * (n - k)
    for p, params in instances(2):
        m, i = params["m"], params["i"]
        assert dimension(p) == grass(i + 1, m + 2)
    for p, params in instances(1):
        assert dimension(p) == 2 * params["m"]


def test_odd_symplectic_dimension():
    # isotropic k-planes in C^{2m+1}: k(2m+1-k) - k(k-1)/2
    for p, params in instances(5):
        m, k = params["m"], params["i"] + 1
        assert dimension(p) == k * (2 * m + 1 - k) - k * (k - 1) // 2


def test_aut_dim_examples():
    assert aut_dim(HoroPair(S("G", 2), 2, 1)) == 22
    assert aut_dim(HoroPair(S("F", 4), 2, 3)) == 79
    assert aut_dim(HoroPair(S("B", 3), 1, 3)) == 30
    with pytest.raises(DomainError):
        aut_dim(HoroPair(S("A", 3), 1, 3))


def test_aut_dim_unipotent_part_is_section_module():
    for fid in (3, 4, 5, 7, 8):
        for p, _ in instances(fid):
            side = Z if fid == 5 else Y
            assert aut_dim(p) == group_dim(p.type) + 1 + normal_sections(p, side).dim


def test_ambient_dim_examples():
    for m in range(2, 9):
        assert ambient_dim(HoroPair(S("A", m), 1, m)) == 2 * m + 1
    assert ambient_dim(HoroPair(S("B", 3), 1, 3)) == 14
    assert ambient_dim(HoroPair(S("G", 2), 2, 1)) == 20
