import math

import pytest
from fractions import Fraction
from hypothesis import given, settings, strategies as st

from zipcones.cones import (
    GeneratedCone,
    HalfspaceSystem,
    Weight,
    cones_equal_saturated,
    enumerate_lattice_points,
    extreme_rays,
    generators_of,
    halfspaces_of,
    lineality_space,
    minimal_generators,
    monoid_membership,
    nonneg_combination,
    saturated_membership,
    saturation_certificate,
)
from zipcones.errors import (
    GuardExceededError,
    NotPointedError,
    RankMismatchError,
    UndecidedAtBoundError,
)

SP4_P2_MONOID = GeneratedCone(2, [(1, -2), (-1, -1), (0, -2)])
SP4_P2_SAT = GeneratedCone(2, [(1, -2), (-1, -1)])


def test_weight_arithmetic():
    a = Weight((1, -2))
    b = Weight((0, 3))
    assert a + b == Weight((1, 1))
    assert a - b == Weight((1, -5))
    assert 2 * a == Weight((2, -4))
    assert -a == Weight((-1, 2))
    assert a.dot((3, 1)) == 1
    with pytest.raises(RankMismatchError):
        a + Weight((1, 2, 3))


def test_generated_cone_dedupes_and_drops_zero():
    c = GeneratedCone(2, [(1, 0), (1, 0), (0, 0), (2, 1)])
    assert c.generators == (Weight((1, 0)), Weight((2, 1)))


def test_monoid_membership_sp4_generator():
    assert monoid_membership(SP4_P2_MONOID, (1, -2)) == [1, 0, 0]


def test_monoid_membership_zero_is_member():
    assert monoid_membership(SP4_P2_MONOID, (0, 0)) == [0, 0, 0]


def test_monoid_membership_sp4_nonmember():
    # exhaustive: all generators have negative coordinate sum, so the
    # search over total degree is complete
    assert monoid_membership(SP4_P2_MONOID, (1, -1)) is None


def test_monoid_membership_rank_mismatch():
    with pytest.raises(RankMismatchError):
        monoid_membership(SP4_P2_MONOID, (1, 2, 3))


def test_monoid_membership_independent_generators():
    c = GeneratedCone(2, [(2, 0), (0, 3)])
    assert monoid_membership(c, (4, 3)) == [2, 1]
    assert monoid_membership(c, (1, 0)) is None
    assert monoid_membership(c, (2, -3)) is None


def test_monoid_membership_undecided_at_bound():
    # dependent generators with no negative-sum functional: (1,0) and (1,1)
    # and (2,1); target far outside the reachable set but the search cannot
    # prove it at a tiny bound
    c = GeneratedCone(2, [(1, 0), (1, 1), (2, 1)])
    with pytest.raises(UndecidedAtBoundError):
        monoid_membership(c, (-1, 5), bound=3)


def test_saturated_membership_sp4():
    assert saturated_membership(SP4_P2_SAT, (1, -2)) is True
    assert saturated_membership(SP4_P2_SAT, (0, -1)) is True
    assert saturated_membership(SP4_P2_SAT, (1, 0)) is False


def test_saturation_certificate_exact():
    cert = saturation_certificate(SP4_P2_SAT, (0, -1))
    assert cert == [Fraction(1, 3), Fraction(1, 3)]


def test_halfspaces_of_halfline():
    c = GeneratedCone(1, [(1,)])
    hs = halfspaces_of(c)
    assert hs.inequalities == ((1,),)


def test_halfspaces_of_sp4():
    hs = halfspaces_of(SP4_P2_SAT)
    assert set(hs.inequalities) == {(1, -1), (-2, -1)}


def test_halfspaces_of_full_space_is_empty_system():
    c = GeneratedCone(2, [(1, 0), (-1, 0), (0, 1), (0, -1)])
    hs = halfspaces_of(c)
    assert hs.inequalities == ()
    assert hs.contains((5, -7))


def test_halfspaces_rank_guard():
    c = GeneratedCone(9, [tuple(1 if i == j else 0 for i in range(9))
                          for j in range(9)])
    with pytest.raises(GuardExceededError):
        halfspaces_of(c)


def test_cones_equal_saturated_reflexive():
    c = GeneratedCone(1, [(1,)])
    assert cones_equal_saturated(c, c)


def test_cones_equal_saturated_sp4_both_presentations():
    hs = HalfspaceSystem(2, [(1, -1), (-2, -1)])
    assert cones_equal_saturated(SP4_P2_SAT, hs)
    assert cones_equal_saturated(SP4_P2_MONOID, hs)


def test_cones_equal_saturated_gs_vs_hw_strict():
    gs = HalfspaceSystem(2, [(-1, 0), (1, -1)])      # 0 >= a1 >= a2
    hw = HalfspaceSystem(2, [(1, -1), (-2, -1)])     # a1 >= a2, 2a1+a2 <= 0
    assert not cones_equal_saturated(gs, hw)
    assert hw.contains((1, -2)) and not gs.contains((1, -2))


def test_extreme_rays_roundtrip_sp4():
    hs = halfspaces_of(SP4_P2_SAT)
    rays = extreme_rays(hs)
    assert cones_equal_saturated(GeneratedCone(2, rays), SP4_P2_SAT)


def test_extreme_rays_not_pointed():
    hs = HalfspaceSystem(2, [(1, 0)])
    with pytest.raises(NotPointedError):
        extreme_rays(hs)
    gens = generators_of(hs)
    assert cones_equal_saturated(GeneratedCone(2, gens), hs)


def test_lineality_space():
    assert lineality_space(HalfspaceSystem(2, [(1, 0)])) == [(0, 1)]
    assert lineality_space(HalfspaceSystem(2, [(1, 0), (-1, 0), (0, 1)])) == []


def test_degenerate_cone_dualization():
    # a line plus a ray: the dual description must carry the implicit
    # equality and decide membership exactly
    c = GeneratedCone(3, [(1, 1, 0), (-1, -1, 0), (0, 0, -1)])
    hs = halfspaces_of(c)
    assert hs.contains((2, 2, 0)) and hs.contains((-3, -3, -5))
    assert not hs.contains((1, 0, 0)) and not hs.contains((0, 0, 1))
    for pt in [(1, 1, -1), (1, 2, -1), (0, 0, 0), (5, 5, 1)]:
        # independent route: direct rational feasibility, no dualization
        assert hs.contains(pt) == (saturation_certificate(c, pt) is not None)


def test_minimal_generators():
    c = GeneratedCone(2, [(1, 0), (0, 1), (1, 1)])
    assert minimal_generators(c) == [(0, 1), (1, 0)]


def test_enumerate_lattice_points_halfline():
    hs = HalfspaceSystem(1, [(1,)])
    pts = enumerate_lattice_points(hs, [(-2, 2)])
    assert pts == [Weight((0,)), Weight((1,)), Weight((2,))]


def test_enumerate_lattice_points_gs():
    gs = HalfspaceSystem(2, [(-1, 0), (1, -1)])
    pts = enumerate_lattice_points(gs, [(-1, 1), (-1, 1)])
    assert set(pts) == {Weight((0, 0)), Weight((0, -1)), Weight((-1, -1))}


def test_enumerate_lattice_points_sp4_box():
    hs = HalfspaceSystem(2, [(1, -1), (-2, -1)])
    pts = enumerate_lattice_points(hs, [(-2, 2), (-2, 2)])
    expect = {(0, 0), (0, -1), (0, -2), (-1, -1), (-1, -2), (-2, -2), (1, -2)}
    assert set(map(tuple, pts)) == expect


def test_generators_pass_membership():
    for cone in (SP4_P2_MONOID, SP4_P2_SAT):
        for g in cone.generators:
            assert monoid_membership(cone, g) is not None
            assert saturated_membership(cone, g)


small_vec = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


@settings(max_examples=60, deadline=None)
@given(st.lists(small_vec, min_size=1, max_size=4), small_vec, small_vec)
def test_membership_additivity(gens, u, v):
    cone = GeneratedCone(2, gens)
    cu = nonneg_combination([list(g) for g in cone.generators], list(u))
    cv = nonneg_combination([list(g) for g in cone.generators], list(v))
    if cu is not None and cv is not None:
        s = (u[0] + v[0], u[1] + v[1])
        assert saturated_membership(cone, s)


@settings(max_examples=40, deadline=None)
@given(st.lists(small_vec, min_size=1, max_size=3), small_vec)
def test_saturated_iff_multiple_in_monoid(gens, lam):
    # restrict to cones where the bounded search is complete
    gens = [g for g in gens if g[0] + g[1] < 0]
    if not gens:
        return
    cone = GeneratedCone(2, gens)
    cert = saturation_certificate(cone, lam)
    if cert is None:
        # no positive multiple can be in the monoid either
        for m in range(1, 4):
            assert monoid_membership(cone, (m * lam[0], m * lam[1])) is None
    else:
        m = 1
        for c in cert:
            m = m * c.denominator // math.gcd(m, c.denominator)
        got = monoid_membership(cone, (m * lam[0], m * lam[1]))
        assert got is not None


@settings(max_examples=40, deadline=None)
@given(st.lists(small_vec, min_size=1, max_size=4))
def test_halfspace_dual_agrees_with_direct_feasibility(gens):
    cone = GeneratedCone(2, gens)
    hs = halfspaces_of(cone)
    for pt in [(1, 0), (0, 1), (-1, -1), (2, -3), (-4, 1)]:
        direct = saturated_membership(cone, pt)
        assert hs.contains(pt) == direct
