import pytest

from branchlab.errors import NotFiniteType, NotIntegral
from branchlab.rootsys import (CartanMatrix, build_root_system,
                               named_cartan_matrix)
from branchlab.scalars import ONE, ZERO, qq


def rs(name):
    return build_root_system(named_cartan_matrix(name))


def weyl_orbit_of_simples(system):
    """Independent enumeration of the root set: orbit of the simple roots."""
    n = system.rank
    frontier = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(frontier)
    while frontier:
        nxt = []
        for r in frontier:
            for i in range(n):
                r2 = system.reflect_root(r, i)
                if r2 not in seen:
                    seen.add(r2)
                    nxt.append(r2)
        frontier = nxt
    return seen


@pytest.mark.parametrize("name,total,positive", [
    ("A1", 2, 1), ("A2", 6, 3), ("B2", 8, 4), ("C2", 8, 4),
    ("G2", 12, 6), ("A3", 12, 6)])
def test_root_counts(name, total, positive):
    system = rs(name)
    assert len(system.roots) == total
    assert len(system.positive_roots) == positive
    assert weyl_orbit_of_simples(system) == set(system.roots)


def test_not_finite_type():
    with pytest.raises(NotFiniteType):
        CartanMatrix([[2, -2], [-2, 2]])  # affine A1
    with pytest.raises(NotFiniteType):
        CartanMatrix([[2, -1], [0, 2]])  # asymmetric zero pattern
    with pytest.raises(NotFiniteType):
        CartanMatrix([[1]])


def test_weyl_closure_under_simple_reflections():
    for name in ("A2", "B2", "G2", "A3"):
        system = rs(name)
        for r in system.roots:
            for i in range(system.rank):
                assert system.is_root(system.reflect_root(r, i))


def test_fundamental_weight_pairings():
    for name in ("A2", "B2", "G2"):
        system = rs(name)
        n = system.rank
        for i in range(n):
            root_coords = system.weight_to_root_coords(
                tuple(ONE if j == i else ZERO for j in range(n)))
            for j in range(n):
                expect = ONE if i == j else ZERO
                got = ZERO
                for k, c in enumerate(root_coords):
                    got = got + c * qq(system.cm[k, j])
                assert got == expect


def test_decompose_dominant():
    a2 = rs("A2")
    assert a2.decompose_dominant((qq(2) / 3, qq(1) / 3)) == (1, 0)  # lambda_1
    assert a2.decompose_dominant((0, 0)) == (0, 0)
    coeffs = a2.decompose_dominant((1, 0))  # alpha_1 itself
    assert coeffs == (2, -1)
    assert any(c < 0 for c in coeffs)  # not dominant
    with pytest.raises(NotIntegral):
        a2.decompose_dominant((qq(1) / 2, qq(0)))


def test_longest_element_action():
    a1 = rs("A1")
    assert a1.longest_element_action((qq(5),)) == (qq(-5),)
    a2 = rs("A2")
    kappa = a2.longest_word()
    assert len(kappa) == 3
    img = a2.longest_element_action((qq(2), qq(1)))
    assert tuple(-x for x in img) == (qq(1), qq(2))
    b2 = rs("B2")
    for lam in [(1, 0), (0, 1), (2, 3)]:
        img = b2.longest_element_action(tuple(qq(x) for x in lam))
        assert tuple(-x for x in img) == tuple(qq(x) for x in lam)


def test_longest_element_is_involution():
    for name in ("A2", "B2", "G2", "A3"):
        system = rs(name)
        for lam in [(1, 0) + (0,) * (system.rank - 2),
                    (0,) * (system.rank - 1) + (2,),
                    (1,) * system.rank]:
            lam = tuple(qq(x) for x in lam)
            twice = system.longest_element_action(
                system.longest_element_action(lam))
            assert twice == lam


def test_weyl_group_orders():
    orders = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "A3": 24}
    for name, order in orders.items():
        assert len(rs(name).weyl_words()) == order


def test_killing_form_values():
    a2 = rs("A2")
    # trace of the square of a coroot over the 8-dimensional adjoint
    assert a2.killing_cartan(0, 0) == qq(12)
    assert a2.killing_cartan(0, 1) == qq(-6)
    # Killing normalization of the form on weight space for A2
    assert a2.form((1, 0), (1, 0)) == qq(1) / 3
    assert a2.form((1, 0), (0, 1)) == qq(-1) / 6


def test_coroot_of_root():
    a2 = rs("A2")
    assert a2.coroot_of_root((1, 0)) == (ONE, ZERO)
    assert a2.coroot_of_root((1, 1)) == (ONE, ONE)
    b2 = rs("B2")
    # highest root of B2 is alpha_1 + 2 alpha_2 (long simple alpha_1)
    high = b2.positive_roots[-1]
    co = b2.coroot_of_root(high)
    assert all(x.is_integer() for x in co)
