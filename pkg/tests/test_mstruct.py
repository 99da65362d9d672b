import pytest

from branchlab.errors import InvalidLabel, NotDominant
from branchlab.mstruct import (FiberLabel, fiber_enumerate, fiber_label,
                               is_spherical, lambda_Me_membership, m_structure,
                               m_trivial, minimal_fiber_element,
                               spherical_weights, weights_up_to)
from branchlab.scalars import qq


def test_m_structure_summary(rf_sl2r, rf_su21, rf_su31):
    ms = m_structure(rf_sl2r)
    assert ms.two_rank == 1 and ms.center_dim == 0 and ms.split_rank == 1
    assert ms.parity_of((3,)) == (-1,)
    assert ms.parity_of((4,)) == (1,)
    ms = m_structure(rf_su21)
    assert ms.two_rank == 0 and ms.center_dim == 1
    assert "Z2^0" in ms.describe()
    ms31 = m_structure(rf_su31)
    assert ms31.two_rank == 0 and ms31.center_dim == 1


def test_m_trivial(rf_sl2r, rf_su21):
    assert m_trivial((0,), rf_sl2r)
    assert m_trivial((7,), rf_sl2r)  # h_m = 0 for the split form
    assert not m_trivial((1, 0), rf_su21)
    assert m_trivial((1, 1), rf_su21)


def test_membership(rf_su21, rf_su31):
    assert lambda_Me_membership((qq(0),), rf_su21)
    assert not lambda_Me_membership((qq(1) / 2,), rf_su21)
    assert lambda_Me_membership((qq(2),), rf_su21)
    # first coordinate of the su31 basis is a compact coroot: nonnegative
    assert lambda_Me_membership((qq(1), qq(-3)), rf_su31)
    assert not lambda_Me_membership((qq(-1), qq(0)), rf_su31)
    with pytest.raises(InvalidLabel):
        lambda_Me_membership((qq(0),), rf_su31)


def test_fiber_label(rf_sl2r, rf_su21):
    lbl = fiber_label((0,), rf_sl2r)
    assert lbl.zeta == (1,) and lbl.nu == ()
    lbl = fiber_label((3,), rf_sl2r)
    assert lbl.zeta == (-1,)
    lbl = fiber_label((2, 1), rf_su21)
    assert lbl.zeta == () and lbl.nu == (qq(1),)


def test_membership_mirrors_restriction(rf_su21):
    # the restriction of any dominant weight integrates
    for lam in weights_up_to(4, 2):
        assert lambda_Me_membership(fiber_label(lam, rf_su21).nu, rf_su21)


def test_is_spherical(rf_sl2r, rf_sl3r, rf_su21, rf_su31):
    assert [is_spherical((n,), rf_sl2r) for n in range(5)] == [
        True, False, True, False, True]
    assert is_spherical((2, 2), rf_sl3r)
    assert not is_spherical((1, 2), rf_sl3r)
    assert is_spherical((3, 3), rf_su21)
    assert not is_spherical((3, 2), rf_su21)
    assert is_spherical((1, 0, 1), rf_su31)
    assert not is_spherical((1, 1, 1), rf_su31)
    with pytest.raises(NotDominant):
        is_spherical((-2,), rf_sl2r)


def test_minimal_fiber_element(rf_sl2r, rf_su21, rf_su31):
    assert minimal_fiber_element(
        FiberLabel(rf_sl2r, (1,), ()), rf_sl2r) == (0,)
    assert minimal_fiber_element(
        FiberLabel(rf_sl2r, (-1,), ()), rf_sl2r) == (1,)
    assert minimal_fiber_element(
        FiberLabel(rf_su21, (), (-2,)), rf_su21) == (0, 2)
    assert minimal_fiber_element(
        FiberLabel(rf_su21, (), (3,)), rf_su21) == (3, 0)
    assert minimal_fiber_element(
        FiberLabel(rf_su31, (), (2, -1)), rf_su31) == (0, 2, 1)


def test_label_round_trip_small_grid(rf_su21, rf_su31):
    for rf, nus in ((rf_su21, [(-2,), (-1,), (0,), (1,), (2,)]),
                    (rf_su31, [(0, 0), (1, -1), (2, 2)])):
        for nu in nus:
            label = FiberLabel(rf, (), nu)
            lam = minimal_fiber_element(label, rf)
            assert fiber_label(lam, rf) == label


def test_fiber_enumerate_examples(rf_sl2r):
    assert fiber_enumerate(FiberLabel(rf_sl2r, (1,), ()), 6, rf_sl2r) == [
        (0,), (2,), (4,), (6,)]
    assert fiber_enumerate(FiberLabel(rf_sl2r, (-1,), ()), 5, rf_sl2r) == [
        (1,), (3,), (5,)]


def test_fiber_partition_and_minimality(rf_su21):
    rf = rf_su21
    bound = 4
    seen = {}
    for lam in weights_up_to(bound, rf.rank):
        seen.setdefault(fiber_label(lam, rf), []).append(lam)
    total = 0
    for label, members in seen.items():
        fib = fiber_enumerate(label, bound, rf)
        assert fib == sorted(members)
        total += len(fib)
        base = minimal_fiber_element(label, rf)
        for lam in members:
            assert all(a >= b for a, b in zip(lam, base))
            if lam != base:
                assert not all(b >= a for a, b in zip(lam, base))
    assert total == len(weights_up_to(bound, rf.rank))


def test_fiber_equivalence_conditions(rf_su31):
    """Two weights share a label iff parities and restrictions agree."""
    rf = rf_su31
    lams = weights_up_to(3, rf.rank)
    for a in lams:
        for b in lams:
            same = fiber_label(a, rf) == fiber_label(b, rf)
            cond = all((a[i] - b[i]) % 2 == 0 for i in rf.real_simple_idx)
            cond = cond and all(a[i] == b[i] for i in rf.compact_simple_idx)
            cond = cond and all(a[i] - a[ip] == b[i] - b[ip]
                                for i, ip in rf.pairs)
            assert same == cond


def test_trivial_label_gives_spherical_set(rf_sl3r):
    label = fiber_label((0, 0), rf_sl3r)
    fib = fiber_enumerate(label, 4, rf_sl3r)
    assert fib == spherical_weights(4, rf_sl3r)
    assert (0, 0) in fib


def test_parity_trivial_weights_of_real_simples(rf_sl3r, rf_sp4r):
    # fundamental weights attached to real simple roots restrict to zero
    for rf in (rf_sl3r, rf_sp4r):
        for i in rf.real_simple_idx:
            lam = tuple(1 if k == i else 0 for k in range(rf.rank))
            assert m_trivial(lam, rf)
