import pytest

from branchlab.branching import branch_oracle, build_k_structure
from branchlab.hwmodule import build_irrep
from branchlab.mstruct import weights_up_to
from branchlab.psembed import (dual_weight, dualize_on_m, folded_spectrum,
                               m_primary_dimension, parity_operator,
                               ps_ktype_bound, ps_params,
                               verify_borel_weil_annihilation,
                               verify_nilradical_coinvariants,
                               verify_xi_eigenvalue)
from branchlab.scalars import ONE, qq
from conftest import realform


def test_dual_weight(rf_sl2r, rf_sl3r, rf_sp4r):
    assert dual_weight(rf_sl2r.rs, (7,)) == (7,)
    assert dual_weight(rf_sl3r.rs, (2, 1)) == (1, 2)
    assert dual_weight(rf_sp4r.rs, (2, 3)) == (2, 3)


def test_dual_weight_involution(rf_sl3r, rf_su31):
    for rf in (rf_sl3r, rf_su31):
        for lam in weights_up_to(3, rf.rank):
            assert dual_weight(rf.rs, dual_weight(rf.rs, lam)) == lam


def test_dualize_on_m(rf_su31):
    # negating and re-dominating is involutive on integrated forms
    for nu in [(0, 0), (1, 0), (2, -3)]:
        nu = tuple(qq(x) for x in nu)
        back = dualize_on_m(rf_su31, dualize_on_m(rf_su31, nu))
        assert back == nu


def test_ps_params_trivial(rf_su21):
    params = ps_params((0, 0), rf_su21)
    assert params.dual == (0, 0)
    assert all(not x for x in params.xi)
    assert all(not x for x in params.delta.nu)


def test_ps_params_sl2r(rf_sl2r):
    for n in range(6):
        params = ps_params((n,), rf_sl2r)
        assert params.delta.zeta == ((1,) if n % 2 == 0 else (-1,))
        # xi = kappa lam on the split line: -n times the value of the
        # fundamental weight
        lam_on_a = rf_sl2r.lam_on_a((qq(n),))
        assert params.xi == tuple(-x for x in lam_on_a)


def test_ps_params_su21(rf_su21):
    params = ps_params((1, 0), rf_su21)
    assert params.dual == (0, 1)
    lamc_on_hm = rf_su21.lam_on_hm((qq(0), qq(1)))
    # the restriction entry of delta is the dualized value
    assert params.delta.nu == dualize_on_m(rf_su21, lamc_on_hm)


@pytest.mark.parametrize("preset,lam", [
    ("sl2r", (2,)), ("sl2r", (3,)), ("sl3r", (1, 0)), ("sl3r", (1, 1)),
    ("su21", (1, 1)), ("sp4r", (0, 1)), ("su31", (1, 0, 0))])
def test_xi_eigenvalue_and_coinvariants(preset, lam):
    rf = realform(preset)
    module = build_irrep(rf.g, lam)
    verify_xi_eigenvalue(module, rf)
    dim = verify_nilradical_coinvariants(lam, rf)
    assert dim >= 1


@pytest.mark.parametrize("preset,lam", [
    ("sl2r", (2,)), ("sl2r", (0,)), ("sl3r", (1, 0)), ("su21", (2, 1)),
    ("sp4r", (1, 0)), ("su31", (0, 1, 0)), ("g2s", (1, 0))])
def test_borel_weil_annihilation(preset, lam):
    rf = realform(preset)
    report = verify_borel_weil_annihilation(lam, rf)
    assert report["checked"] >= 1


def test_folded_spectrum_and_parity(rf_sl3r):
    ks = build_k_structure(rf_sl3r)
    five = ks.k_type((qq(2),))
    spec = folded_spectrum(five, rf_sl3r, 0)
    assert spec == [-2, -1, 0, 1, 2]
    emat, _ = parity_operator(five, rf_sl3r, 0)
    # eigenvector of eigenvalue 0 is even, eigenvalues +-1 odd
    assert emat.matmul(emat).entry(0, 0) == ONE


def test_parity_even_odd_split(rf_sl2r):
    ks = build_k_structure(rf_sl2r)
    for m in (-3, 0, 2):
        ktype = ks.k_type((qq(m),))
        assert folded_spectrum(ktype, rf_sl2r, 0) == [m]
        emat, _ = parity_operator(ktype, rf_sl2r, 0)
        assert emat.entry(0, 0) == (ONE if m % 2 == 0 else -ONE)


def test_ktype_bound_sl2r(rf_sl2r):
    out = ps_ktype_bound((2,), rf_sl2r)
    assert len(out["types"]) == 3
    for entry in out["types"]:
        assert entry["multiplicity"] == 1
        assert entry["isotypic_bound"] == 1


def test_ktype_bound_sl3r_adjoint(rf_sl3r):
    out = ps_ktype_bound((1, 1), rf_sl3r)
    assert sorted(e["dim"] for e in out["types"]) == [3, 5]
    for entry in out["types"]:
        assert entry["multiplicity"] <= entry["isotypic_bound"]


def test_m_primary_dimension_counts(rf_su21):
    # the 2-dimensional type of the fundamental contains the delta
    # component exactly once
    params = ps_params((1, 0), rf_su21)
    ks = build_k_structure(rf_su21)
    V = build_irrep(rf_su21.g, (1, 0))
    report = branch_oracle(V, rf_su21)
    for label, dim, mult in report.entries:
        bound = m_primary_dimension(ks.k_type(label), params.delta, rf_su21)
        assert mult <= bound
