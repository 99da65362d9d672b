import json

import pytest

from branchlab.chevalley import build_lie_algebra
from branchlab.errors import (InconsistentSigns, NormalizationFailure,
                              NotInvolution, NotMaximallySplit, ParseError,
                              StructureViolation)
from branchlab.linalg import SpMat, vec_eq
from branchlab.realform import (ThetaSpec, build_real_form,
                                classify_simple_restricted, h_m_basis_153,
                                preset_names, preset_theta_spec,
                                restricted_root_module)
from branchlab.rootsys import build_root_system, named_cartan_matrix
from branchlab.scalars import ONE, qq


def test_preset_list():
    assert set(preset_names()) == {"sl2r", "sl3r", "sp4r", "g2s", "su21",
                                   "su31"}


def test_split_form_classification(rf_sl2r, rf_sl3r, rf_sp4r, rf_g2s):
    for rf in (rf_sl2r, rf_sl3r, rf_sp4r, rf_g2s):
        assert rf.split_rank == rf.rank
        assert not rf.compact_simple_idx
        assert rf.real_simple_idx == list(range(rf.rank))
        assert not rf.pairs
        assert rf.center_dim == 0
        assert not rf.hm_basis
    assert rf_sl2r.k_dim == 1
    assert rf_sl3r.k_dim == 3
    assert rf_sp4r.k_dim == 4
    assert rf_g2s.k_dim == 6


def test_su21_classification(rf_su21):
    rf = rf_su21
    assert rf.split_rank == 1
    assert rf.compact_simple_idx == []
    assert rf.restricted_simple_idx == [0, 1]
    assert rf.real_simple_idx == []
    assert rf.nilpotent_simple_idx == [0, 1]
    assert rf.pairs == [(0, 1)]
    assert rf.center_dim == 1
    assert rf.k_dim == 4
    # restricted system is nonreduced of rank one: +-beta, +-2beta
    betas = sorted(tuple(x.sort_key() for x in b)
                   for b in rf.restricted_positive)
    assert len(rf.restricted_positive) == 2
    b1 = rf.simple_restricted[0]
    assert tuple(2 * x for x in b1) in rf.restricted_all


def test_su31_classification(rf_su31):
    rf = rf_su31
    assert rf.split_rank == 1
    assert rf.compact_simple_idx == [1]
    assert rf.restricted_simple_idx == [0, 2]
    assert rf.pairs == [(0, 2)]
    assert rf.center_dim == 1
    assert rf.k_dim == 9
    assert rf.hm_dim == 2


def test_theta_is_involutive_automorphism(rf_su21, rf_g2s):
    for rf in (rf_su21, rf_g2s):
        g = rf.g
        theta = rf.theta_mat
        assert theta.matmul(theta) == SpMat.identity(g.dim)
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = g.bracket(theta.cols[i], theta.cols[j])
                assert vec_eq(lhs, theta.apply(g.bracket_basis(i, j)))


def test_restricted_root_modules(rf_sl2r, rf_su21):
    beta = rf_sl2r.simple_restricted[0]
    mod = restricted_root_module(rf_sl2r, beta)
    assert mod.dim == 1
    assert all(m.is_zero() for m in mod.action.values())

    beta = rf_su21.simple_restricted[0]
    mod = restricted_root_module(rf_su21, beta)
    assert mod.dim == 2
    two_beta = tuple(2 * x for x in beta)
    assert restricted_root_module(rf_su21, two_beta).dim == 1
    with pytest.raises(StructureViolation):
        restricted_root_module(rf_su21, tuple(3 * x for x in beta))


def test_lowest_weights(rf_sl2r, rf_su21):
    beta = rf_sl2r.simple_restricted[0]
    assert rf_sl2r.lowest_weights(beta) == [(1,)]
    beta = rf_su21.simple_restricted[0]
    low = rf_su21.lowest_weights(beta)
    assert sorted(low) == [(0, 1), (1, 0)]
    two_beta = tuple(2 * x for x in beta)
    assert rf_su21.lowest_weights(two_beta) == [(1, 1)]


def test_classify_simple_restricted(rf_sl3r, rf_su21, rf_sp4r):
    j1, j2, pairs = classify_simple_restricted(rf_sl3r)
    assert j2 == [] and len(j1) == 2 and pairs == []
    j1, j2, pairs = classify_simple_restricted(rf_su21)
    assert j2 == [0] and pairs == [(0, 1)]
    j1, j2, pairs = classify_simple_restricted(rf_sp4r)
    assert j2 == [] and pairs == []


def test_h_m_basis(rf_sl2r, rf_sl3r, rf_su21, rf_su31):
    assert h_m_basis_153(rf_sl2r) == []
    assert h_m_basis_153(rf_sl3r) == []
    basis = h_m_basis_153(rf_su21)
    g = rf_su21.g
    assert basis == [{g.h_index(0): ONE, g.h_index(1): -ONE}]
    basis31 = h_m_basis_153(rf_su31)
    g31 = rf_su31.g
    assert basis31[0] == {g31.h_index(1): ONE}
    assert basis31[1] == {g31.h_index(0): ONE, g31.h_index(2): -ONE}


def test_folded_vector_gauge(rf_sl2r):
    g = rf_sl2r.g
    z = rf_sl2r.folded_lowering[0]
    # z = i(f - e) in the split gauge
    e = g.e_index((1,))
    f = g.e_index((-1,))
    assert z == {f: qq(0, 1), e: qq(0, -1)}
    h = {g.h_index(0): ONE}
    assert g.killing(z, z) == g.killing(h, h) == qq(8)


def test_not_involution():
    spec = ThetaSpec([[2]], [[-1]], ["i"], ["i"])
    g = build_lie_algebra(build_root_system(named_cartan_matrix("A1")))
    with pytest.raises(NotInvolution):
        build_real_form(g, spec)


def test_root_map_must_be_involutive():
    with pytest.raises((NotInvolution, ParseError)):
        spec = ThetaSpec([[2, -1], [-1, 2]], [[0, -1], [1, 0]],
                         ["1", "1"], ["1", "1"])
        g = build_lie_algebra(build_root_system(named_cartan_matrix("A2")))
        build_real_form(g, spec)


def test_inconsistent_signs():
    spec = ThetaSpec([[2, -1], [-1, 2]], [[0, -1], [-1, 0]],
                     ["1", "-1"], ["-1", "1"])
    g = build_lie_algebra(build_root_system(named_cartan_matrix("A2")))
    with pytest.raises((InconsistentSigns, NotInvolution)):
        build_real_form(g, spec)


def test_not_maximally_split():
    # diagram swap on A2 fixes a two-dimensional torus part; the split
    # part is not maximal abelian in the -1 eigenspace
    spec = ThetaSpec([[2, -1], [-1, 2]], [[0, 1], [1, 0]],
                     ["1", "1"], ["1", "1"])
    g = build_lie_algebra(build_root_system(named_cartan_matrix("A2")))
    with pytest.raises(NotMaximallySplit):
        build_real_form(g, spec)


def test_normalization_failure():
    spec = ThetaSpec([[2]], [[-1]], ["i"], ["-i"])
    g = build_lie_algebra(build_root_system(named_cartan_matrix("A1")))
    with pytest.raises(NormalizationFailure):
        build_real_form(g, spec)


def test_theta_spec_file_round_trip(tmp_path):
    spec = preset_theta_spec("su21")
    path = tmp_path / "form.json"
    path.write_text(json.dumps(spec.to_dict()))
    loaded = ThetaSpec.from_file(str(path))
    assert loaded.cm == spec.cm
    assert loaded.root_map == spec.root_map
    assert loaded.signs_plus == spec.signs_plus
    assert loaded.signs_minus == spec.signs_minus
    with pytest.raises(ParseError):
        ThetaSpec.from_file(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{\"cartan_matrix\": [[2]]}")
    with pytest.raises(ParseError):
        ThetaSpec.from_file(str(bad))


def test_wrong_algebra_rejected():
    spec = preset_theta_spec("sl2r")
    g = build_lie_algebra(build_root_system(named_cartan_matrix("A2")))
    with pytest.raises(StructureViolation):
        build_real_form(g, spec)
