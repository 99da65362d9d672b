import pytest

from branchlab import build_lie_algebra, build_root_system
from branchlab.realform import build_real_form, preset_theta_spec

_ALGEBRAS = {}
_REALFORMS = {}


def algebra_for(spec):
    key = spec.cm.entries
    if key not in _ALGEBRAS:
        _ALGEBRAS[key] = build_lie_algebra(build_root_system(spec.cm))
    return _ALGEBRAS[key]


def realform(name):
    """Shared real form per preset; algebras shared per Cartan matrix."""
    if name not in _REALFORMS:
        spec = preset_theta_spec(name)
        g = algebra_for(spec)
        _REALFORMS[name] = build_real_form(g, spec)
    return _REALFORMS[name]


@pytest.fixture(scope="session")
def rf_sl2r():
    return realform("sl2r")


@pytest.fixture(scope="session")
def rf_sl3r():
    return realform("sl3r")


@pytest.fixture(scope="session")
def rf_su21():
    return realform("su21")


@pytest.fixture(scope="session")
def rf_sp4r():
    return realform("sp4r")


@pytest.fixture(scope="session")
def rf_g2s():
    return realform("g2s")


@pytest.fixture(scope="session")
def rf_su31():
    return realform("su31")
