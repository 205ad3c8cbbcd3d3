import itertools

import pytest

from zipcones.cones import Weight
from zipcones.errors import EmptyModuleError, GuardExceededError
from zipcones.modules import (
    _act_expand,
    build_module,
    group_elements,
    group_generators,
    group_order,
    highest_weight_vector,
    intersection_dimension,
    invariants_finite_group,
    subspace_leq0,
    thminter_check,
    verify_left_borel_law,
    weyl_dimension,
)


def test_group_enumeration_and_order():
    assert group_order(2, 2) == 6
    assert group_order(2, 3) == 48
    assert group_order(3, 2) == 168
    assert len(group_elements(2, 2)) == 6
    assert len(group_elements(3, 2)) == 168
    group_generators(2, 2)
    group_generators(2, 3)
    group_generators(3, 2)


def test_group_guard():
    with pytest.raises(GuardExceededError):
        group_elements(3, 3)


def test_build_module_examples():
    m = build_module((1, 0), 2, 2)
    assert m.dim == 2
    assert set(m.weights) == {Weight((1, 0)), Weight((0, 1))}
    m = build_module((1, 1), 2, 2)
    assert m.dim == 1 and m.weights == (Weight((1, 1)),)
    assert build_module((2, 0), 2, 2).dim == 3
    assert build_module((1, -2), 2, 2).dim == 4


def test_build_module_rejects_non_dominant():
    with pytest.raises(EmptyModuleError):
        build_module((0, 1), 2, 2)
    with pytest.raises(GuardExceededError):
        build_module((1, 0, 0, 0), 4, 2)


def test_weyl_dimension_box():
    for n, p in [(2, 2), (2, 3), (3, 2)]:
        for lam in itertools.product(range(2, -3, -1), repeat=n):
            if any(lam[i] < lam[i + 1] for i in range(n - 1)):
                continue
            m = build_module(lam, n, p)
            assert m.dim == weyl_dimension(lam)


def test_weights_symmetric_and_kostka():
    for lam in [(1, 0), (2, 0), (2, 1), (1, -2)]:
        m = build_module(lam, 2, 2)
        _check_character(m)
    for lam in [(1, 0, 0), (1, 1, 0), (2, 1, 0), (2, 0, -1)]:
        m = build_module(lam, 3, 2)
        _check_character(m)


def _check_character(module):
    from collections import Counter
    mult = Counter(tuple(w) for w in module.weights)
    # symmetry under coordinate permutation
    for w, c in mult.items():
        for perm in itertools.permutations(w):
            assert mult[perm] == c
    # multiplicities are Kostka numbers of the shifted partition
    shift = module.lam[-1]
    shape = tuple(x - shift for x in module.lam)
    for w, c in mult.items():
        content = tuple(x - shift for x in w)
        assert c == _kostka(shape, content), (w, c)


def _kostka(shape, content):
    """Number of semistandard tableaux of the given shape and content,
    by brute-force column-by-column fill."""
    rows = len(shape)

    def fill(row_fills, remaining):
        # row_fills: tuple of tuples, the entries placed in each row so far
        if all(len(rf) == shape[r] for r, rf in enumerate(row_fills)):
            return 1 if all(x == 0 for x in remaining) else 0
        total = 0
        # place the next entry in the first incomplete row
        r = next(r for r in range(rows) if len(row_fills[r]) < shape[r])
        c = len(row_fills[r])
        for v in range(1, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            if c > 0 and row_fills[r][c - 1] > v:
                continue
            if r > 0 and (len(row_fills[r - 1]) <= c or row_fills[r - 1][c] >= v):
                continue
            nf = tuple(rf + (v,) if i == r else rf
                       for i, rf in enumerate(row_fills))
            nr = tuple(x - 1 if i == v - 1 else x
                       for i, x in enumerate(remaining))
            total += fill(nf, nr)
        return total

    return fill(tuple(() for _ in range(rows)), content)


def test_left_borel_law():
    for lam, n in [((1, 0), 2), ((2, -1), 2), ((1, 1, 0), 3), ((2, 0, -1), 3)]:
        assert verify_left_borel_law(build_module(lam, n, 2))
    assert verify_left_borel_law(build_module((2, -1), 2, 3))


def test_subspace_leq0_examples():
    m = build_module((1, 0), 2, 2)
    keep = subspace_leq0(m)
    assert [tuple(m.weights[i]) for i in keep] == [(1, 0)]
    m = build_module((0, 0), 2, 2)
    assert subspace_leq0(m) == [0]
    m = build_module((1, 1), 2, 2)
    assert subspace_leq0(m) == []


def test_invariants_examples():
    assert len(invariants_finite_group(build_module((0, 0), 2, 2))) == 1
    assert len(invariants_finite_group(build_module((1, 0), 2, 2))) == 0
    assert len(invariants_finite_group(build_module((1, 1), 2, 2))) == 1


def test_invariants_match_full_group_bruteforce():
    # independent route: impose f(X s) = f(X) symbolically for every one
    # of the |GL_2(F_2)| = 6 elements
    from zipcones.fplinalg import fp_nullspace

    for lam in [(1, -2), (2, 0), (3, 0), (2, -2)]:
        m = build_module(lam, 2, 2)
        fast = invariants_finite_group(m)
        cols = []
        for i in range(m.dim):
            col = {}
            for si, s in enumerate(group_elements(2, 2)):
                diff = _act_expand(m, s, {i: 1}) - m.basis_polys[i]
                for mono, c in diff.terms.items():
                    col[(si, mono)] = c
            cols.append(col)
        slow = fp_nullspace(cols, 2)
        assert len(fast) == len(slow), lam


def test_invariants_full_group_gl2_f3():
    m = build_module((1, 1), 2, 3)
    # det is GL_2(F_3)-invariant only through det(s); det(s)=2 moves it
    assert len(invariants_finite_group(m)) == 0
    m = build_module((2, 2), 2, 3)   # det^2 is invariant: det(s)^2 = 1
    assert len(invariants_finite_group(m)) == 1


def test_highest_weight_vector():
    m = build_module((1, 1), 2, 2)
    hw = highest_weight_vector(m)
    assert hw.num == m.basis_polys[0]
    m = build_module((1, 0), 2, 2)
    hw = highest_weight_vector(m)
    assert hw.tweight == Weight((0, 1))
    m = build_module((2, 1), 2, 2)
    assert highest_weight_vector(m) is not None
    m = build_module((2, 1, 0), 3, 2)
    assert highest_weight_vector(m).tweight == Weight((0, 1, 2))


def test_thminter_examples():
    assert thminter_check((0, 0), 2, 2) == (1, 1, True)
    assert thminter_check((1, 0), 2, 2) == (0, 0, True)
    assert thminter_check((1, -2), 2, 2) == (1, 1, True)


def test_thminter_larger_rank3_weights():
    # spot checks beyond the acceptance box, exercising modules of
    # dimension up to 125
    for lam in [(4, 0, -4), (4, -4, -4), (3, 0, -4), (4, 2, -3)]:
        lhs, rhs, agree = thminter_check(lam, 3, 2)
        assert agree, (lam, lhs, rhs)


def test_intersection_dimension_direct():
    assert intersection_dimension(build_module((1, -2), 2, 2)) == 1
    assert intersection_dimension(build_module((2, 0), 2, 2)) == 0
