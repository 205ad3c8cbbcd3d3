import itertools

from zipcones.catalog import (
    cone_GS,
    cone_hw,
    cone_muord_saturated,
    cone_pol,
    cone_schubert,
    cone_schubert_saturated,
    cone_sigma,
    cone_XplusI,
    cone_zip_sp4,
    cone_zip_sp4_saturated,
    cone_zip_sp6_saturated,
    eta_weight,
    hodge_character,
    hw_functional,
    schubert_weight,
    sigma1,
    sigma1prime,
)
from zipcones.cones import (
    Weight,
    cone_contains_saturated,
    cones_equal_saturated,
    minimal_generators,
    monoid_membership,
    saturated_membership,
)
from zipcones.rootdata import SymplecticRootDatum


def box_points(n, lo, hi):
    return itertools.product(*[range(lo, hi + 1)] * n)


def test_gs_halfspaces_reduce_to_chain():
    gs = cone_GS(SymplecticRootDatum(2))
    assert gs.halfspaces.contains((-1, -1))
    assert gs.halfspaces.contains((0, 0))
    assert not gs.halfspaces.contains((1, -2))
    for pt in box_points(3, -2, 2):
        chain = 0 >= pt[0] >= pt[1] >= pt[2]
        assert cone_GS(SymplecticRootDatum(3)).halfspaces.contains(pt) == chain


def test_gs_presentations_agree():
    for n in (2, 3):
        gs = cone_GS(SymplecticRootDatum(n))
        assert cones_equal_saturated(gs.generated, gs.halfspaces)


def test_schubert_generators():
    d = SymplecticRootDatum(2)
    c = cone_schubert(d, 2)
    assert set(c.generated.generators) == {Weight((1, -2)), Weight((-1, -1))}
    d3 = SymplecticRootDatum(3)
    c3 = cone_schubert_saturated(d3, 2)
    assert Weight((1, -1, -2)) in c3.generated.generators  # S_2 at p=2
    assert schubert_weight(3, 2, 2) == Weight((1, -1, -2))


def test_schubert_saturated_presentations_agree():
    for n, p in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        c = cone_schubert_saturated(SymplecticRootDatum(n), p)
        assert cones_equal_saturated(c.generated, c.halfspaces)


def test_hodge_character_in_saturated_schubert():
    for n, p in [(2, 2), (3, 2), (3, 3)]:
        c = cone_schubert_saturated(SymplecticRootDatum(n), p)
        assert c.halfspaces.contains(hodge_character(n, p))


def test_hw_cone_sp6_etas():
    assert eta_weight(3, 2, 1) == Weight((3, -4, -4))
    assert eta_weight(3, 2, 2) == Weight((1, 1, -6))
    hw = cone_hw(SymplecticRootDatum(3), 2)
    # S_2 on the boundary: functional vanishes
    f = hw_functional(SymplecticRootDatum(3), 2)
    assert f.dot(schubert_weight(3, 2, 2)) == 0
    assert hw.halfspaces.contains(schubert_weight(3, 2, 2))
    # S_1 strictly outside
    assert f.dot(schubert_weight(3, 2, 1)) == 2
    assert not hw.halfspaces.contains(schubert_weight(3, 2, 1))


def test_hw_functional_sp2n_form():
    for n, p in [(2, 2), (2, 3), (3, 2), (4, 2)]:
        f = hw_functional(SymplecticRootDatum(n), p)
        assert f == Weight(p ** (n - i) for i in range(1, n + 1))


def test_hw_presentations_agree():
    for n, p in [(2, 2), (2, 3), (3, 2), (3, 3)]:
        hw = cone_hw(SymplecticRootDatum(n), p)
        assert cones_equal_saturated(hw.generated, hw.halfspaces)


def test_etas_on_boundary_hyperplane():
    for n, p in [(3, 2), (3, 3), (4, 2), (4, 3)]:
        f = hw_functional(SymplecticRootDatum(n), p)
        for i in range(1, n):
            assert f.dot(eta_weight(n, p, i)) == 0


def test_pol_extreme_rays():
    c = cone_pol(2, 2)
    assert minimal_generators(c.generated) == [(-2, 1), (1, -2)]
    assert not saturated_membership(c.generated, (1, 0))


def test_sigma1prime_cone_equals_zip_sp6():
    for p in (2, 3):
        csig = cone_sigma(sigma1prime(3), 3, p)
        xpi = cone_XplusI(3)
        zip6 = cone_zip_sp6_saturated(p)
        # the intersection of the monomial-support cone with the dominant
        # chamber is the saturated rank-3 cone
        inter = [Weight(pt) for pt in box_points(3, -8, 8)
                 if saturated_membership(csig.generated, pt)
                 and xpi.halfspaces.contains(pt)]
        for pt in inter:
            assert zip6.halfspaces.contains(pt)
        for g in zip6.generated.generators:
            assert saturated_membership(csig.generated, g)
            assert xpi.halfspaces.contains(g)


def test_sigma_sets():
    assert (1, 3) in sigma1(3) and (1, 1) in sigma1(3)
    assert (1, 1) not in sigma1prime(3) and (1, 3) in sigma1prime(3)
    assert sigma1prime(3) < sigma1(3)


def test_zip_sp4_monoid_generators():
    c = cone_zip_sp4(2)
    assert set(c.generated.generators) == {
        Weight((1, -2)), Weight((-1, -1)), Weight((0, -2))}
    assert monoid_membership(c.generated, (1, -2)) is not None


def test_zip_sp4_saturated_halfspaces():
    for p in (2, 3, 5):
        c = cone_zip_sp4_saturated(p)
        assert set(c.halfspaces.inequalities) == {(1, -1), (-p, -1)}
        assert cones_equal_saturated(c.generated, c.halfspaces)


def test_zip_sp6_presentations_agree():
    for p in (2, 3):
        c = cone_zip_sp6_saturated(p)
        assert cones_equal_saturated(c.generated, c.halfspaces)


def test_inclusion_chain_boxes():
    # GS inside HW inside the saturated zip cone, on a box
    for n, p, zipc in [(2, 2, cone_zip_sp4_saturated(2)),
                       (2, 3, cone_zip_sp4_saturated(3)),
                       (3, 2, cone_zip_sp6_saturated(2)),
                       (3, 3, cone_zip_sp6_saturated(3))]:
        d = SymplecticRootDatum(n)
        gs, hw = cone_GS(d), cone_hw(d, p)
        for pt in box_points(n, -3, 3):
            in_gs = gs.halfspaces.contains(pt)
            in_hw = hw.halfspaces.contains(pt)
            in_zip = zipc.halfspaces.contains(pt)
            assert (not in_gs) or in_hw
            assert (not in_hw) or in_zip


def test_schubert_inside_zip():
    for p, zipc in [(2, cone_zip_sp4_saturated(2)), (3, cone_zip_sp4_saturated(3))]:
        sbt = cone_schubert_saturated(SymplecticRootDatum(2), p)
        assert cone_contains_saturated(zipc.generated, sbt.generated)
    for p in (2, 3):
        sbt = cone_schubert_saturated(SymplecticRootDatum(3), p)
        assert cone_contains_saturated(cone_zip_sp6_saturated(p).generated,
                                       sbt.generated)


def test_zip_inside_sigma1prime_cap_dominant():
    for p in (2, 3):
        zipc = cone_zip_sp6_saturated(p)
        csig = cone_sigma(sigma1prime(3), 3, p)
        xpi = cone_XplusI(3)
        for g in zipc.generated.generators:
            assert saturated_membership(csig.generated, g)
            assert xpi.halfspaces.contains(g)


def test_muord_saturated_is_dominant_chamber():
    c = cone_muord_saturated(3)
    assert cones_equal_saturated(c.generated, c.halfspaces)
    assert c.halfspaces.contains((5, 5, 5)) and c.halfspaces.contains((-1, -2, -3))
    assert not c.halfspaces.contains((0, 1, 0))
