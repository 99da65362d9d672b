import pytest

from branchlab.errors import IdentityViolation
from branchlab.hwmodule import build_irrep
from branchlab.ideal import (generator_set, q_polynomial,
                             verify_annihilator, z_vector)
from branchlab.linalg import apply_poly
from branchlab.scalars import ONE, ZERO, qq
from conftest import realform


def coeff_ints(poly):
    return [int(c.re) for c in poly.coeffs]


def test_q_polynomial_real_case(rf_sl2r):
    q = q_polynomial(rf_sl2r, (2,), 0)
    # roots 2, 0, -2: t^3 - 4t
    assert coeff_ints(q) == [0, -4, 0, 1]
    assert q.semisimple and q.degree == 3
    assert sorted(int(r.re) for r in q.roots()) == [-2, 0, 2]
    q0 = q_polynomial(rf_sl2r, (0,), 0)
    assert coeff_ints(q0) == [0, 1]  # single root 0


def test_q_polynomial_nilpotent_case(rf_su21):
    q = q_polynomial(rf_su21, (1, 0), 0)
    assert coeff_ints(q) == [0, 0, 1]  # t^2
    assert not q.semisimple
    assert q.roots() == [ZERO]


def test_q_polynomial_compact_case(rf_su31):
    # the compact simple root gets the pure power as well
    q = q_polynomial(rf_su31, (0, 2, 0), 1)
    assert coeff_ints(q) == [0, 0, 0, 1]


def test_z_vector_semisimple(rf_sl2r):
    g = rf_sl2r.g
    z = z_vector(rf_sl2r, 0)
    assert z == {g.e_index((-1,)): qq(0, 1), g.e_index((1,)): qq(0, -1)}
    h = {g.h_index(0): ONE}
    assert g.killing(z, z) == g.killing(h, h)


def test_z_vector_nilpotent(rf_su21):
    g = rf_su21.g
    z = z_vector(rf_su21, 0)
    # e_{-a1} + theta(e_{-a1}) with theta(-a1) = a2
    assert z == {g.e_index((-1, 0)): ONE, g.e_index((0, 1)): ONE}
    ad = g.ad(z)
    power = ad
    for _ in range(g.dim):
        power = power.matmul(ad)
    assert power.is_zero()


def test_z_vector_rejects_compact_index(rf_su31):
    with pytest.raises(IdentityViolation):
        z_vector(rf_su31, 1)


def test_generator_set_contents(rf_su31):
    gens = generator_set(rf_su31, (1, 2, 1))
    assert gens.m_powers == [(1, 3)]
    assert gens.m_raising == [1]
    assert len(gens.cartan) == 2
    assert [i for i, _ in gens.folded] == [0, 2]
    # the Cartan generators carry the weight's values
    y, val = gens.cartan[0]
    assert val == qq(2)  # h_2 pairs the middle coefficient


def test_annihilator_sl2r_explicit(rf_sl2r):
    g = rf_sl2r.g
    module = build_irrep(g, (2,))
    v = module.highest_vector()
    z = module.matrix_of(z_vector(rf_sl2r, 0))
    q = q_polynomial(rf_sl2r, (2,), 0)
    assert not apply_poly(z, q.coeffs, v)  # (z^3 - 4z) v = 0
    assert apply_poly(z, [ZERO, qq(-2), ONE], v)  # (z^2 - 2z) v != 0
    report = verify_annihilator(module, rf_sl2r)
    assert report["checked"] == 1
    assert report["minimality_witnesses"] == 3


def test_annihilator_trivial_weight(rf_su21, rf_sl3r):
    for rf in (rf_su21, rf_sl3r):
        module = build_irrep(rf.g, (0,) * rf.rank)
        assert module.dim == 1
        verify_annihilator(module, rf)


@pytest.mark.parametrize("preset,lam", [
    ("sl2r", (3,)), ("sl3r", (1, 1)), ("sl3r", (2, 0)),
    ("su21", (1, 1)), ("sp4r", (1, 1)), ("su31", (1, 0, 1)),
    ("g2s", (0, 1))])
def test_annihilator_suite(preset, lam):
    rf = realform(preset)
    module = build_irrep(rf.g, lam)
    report = verify_annihilator(module, rf)
    assert report["checked"] >= rf.rank


def test_compact_power_annihilation(rf_su31):
    # for a compact simple root the power n_i + 1 kills the highest vector
    g = rf_su31.g
    module = build_irrep(g, (0, 1, 0))
    v = module.highest_vector()
    f2 = module.matrix_of({g.e_index((0, -1, 0)): ONE})
    assert f2.apply(v)
    assert not f2.apply(f2.apply(v))
