import itertools

import pytest

from branchlab.chevalley import build_lie_algebra
from branchlab.linalg import rank, vec_axpy, vec_eq
from branchlab.rootsys import build_root_system, named_cartan_matrix
from branchlab.scalars import ONE, ZERO, qq


def algebra(name):
    return build_lie_algebra(build_root_system(named_cartan_matrix(name)))


def test_sl2_relations():
    g = algebra("A1")
    e = {g.e_index((1,)): ONE}
    f = {g.e_index((-1,)): ONE}
    h = {g.h_index(0): ONE}
    assert vec_eq(g.bracket(e, f), h)
    assert vec_eq(g.bracket(h, e), {g.e_index((1,)): qq(2)})
    assert vec_eq(g.bracket(h, f), {g.e_index((-1,)): qq(-2)})
    assert g.killing(h, h) == qq(8)
    assert g.killing(e, f) == qq(4)


def test_killing_weight_orthogonality():
    g = algebra("A2")
    for phi in g.rs.roots:
        for psi in g.rs.roots:
            v = g.killing_basis(g.e_index(phi), g.e_index(psi))
            if tuple(-c for c in phi) == psi:
                assert v
            else:
                assert not v
    assert g.killing_basis(g.h_index(0), g.h_index(1)) == qq(-6)


@pytest.mark.parametrize("name,dim", [
    ("A1", 3), ("A2", 8), ("B2", 10), ("C2", 10), ("G2", 14), ("A3", 15)])
def test_dimension_and_jacobi(name, dim):
    g = algebra(name)
    assert g.dim == dim
    for i, j, k in itertools.combinations(range(g.dim), 3):
        acc = {}
        vec_axpy(acc, g.bracket(g.bracket_basis(i, j), {k: ONE}), ONE)
        vec_axpy(acc, g.bracket(g.bracket_basis(j, k), {i: ONE}), ONE)
        vec_axpy(acc, g.bracket(g.bracket_basis(k, i), {j: ONE}), ONE)
        assert not acc, (name, i, j, k)


def test_antisymmetry_and_integrality():
    g = algebra("G2")
    for i in range(g.dim):
        assert not g.bracket_basis(i, i)
        for j in range(g.dim):
            lhs = g.bracket_basis(i, j)
            rhs = {k: -v for k, v in g.bracket_basis(j, i).items()}
            assert vec_eq(lhs, rhs)
    for v in g._nconst_table.values():
        assert v.is_integer()


def test_cartan_action_is_root_value():
    g = algebra("B2")
    for phi in g.rs.roots:
        for i in range(g.rank):
            got = g.bracket_basis(g.h_index(i), g.e_index(phi))
            expect = qq(g.rs.pairing_root(phi, i))
            if expect:
                assert got == {g.e_index(phi): expect}
            else:
                assert not got


def test_killing_nondegenerate_and_invariant():
    for name in ("A2", "B2"):
        g = algebra(name)
        rows = [{j: g.killing_basis(i, j) for j in range(g.dim)
                 if g.killing_basis(i, j)} for i in range(g.dim)]
        assert rank(rows) == g.dim
        for i, j, k in itertools.product(range(g.dim), repeat=3):
            lhs = g.killing(g.bracket_basis(i, j), {k: ONE})
            rhs = g.killing({i: ONE}, g.bracket_basis(j, k))
            assert lhs == rhs


def test_killing_cartan_matches_root_sum():
    """Trace form on the Cartan equals the root-sum formula."""
    for name in ("A2", "G2"):
        g = algebra(name)
        for i in range(g.rank):
            for j in range(g.rank):
                expect = ZERO
                for phi in g.rs.roots:
                    expect = expect + qq(g.rs.pairing_root(phi, i)
                                         * g.rs.pairing_root(phi, j))
                assert g.killing_basis(g.h_index(i), g.h_index(j)) == expect


def test_coroot_bracket_convention():
    """[e_phi, e_-phi] equals the coroot of phi for every positive root."""
    for name in ("A2", "B2", "G2"):
        g = algebra(name)
        for phi in g.rs.positive_roots:
            e = {g.e_index(phi): ONE}
            f = {g.e_index(tuple(-c for c in phi)): ONE}
            assert vec_eq(g.bracket(e, f), g.coroot_vector(phi))
