import pytest

from hypertheta.Polyring import PolyRing, RATIONALS
from hypertheta.Hypersurface import HypersurfaceRing, RModulePresentation
from hypertheta.harness import FamilySpec, family_factorizations


@pytest.fixture
def QQxy():
    return PolyRing(RATIONALS, ["x", "y"])


@pytest.fixture
def QQxyz():
    return PolyRing(RATIONALS, ["x", "y", "z"])


@pytest.fixture
def node(QQxy):
    """R = Q[x,y]/(xy)"""
    return HypersurfaceRing(QQxy, QQxy.parse("x*y"))


@pytest.fixture
def Rx(node):
    return RModulePresentation.fromstrings(node, [["x"]], "R/x")


@pytest.fixture
def Ry(node):
    return RModulePresentation.fromstrings(node, [["y"]], "R/y")


@pytest.fixture
def surface1():
    """x^2 - y*z with its single factorization"""
    return family_factorizations(FamilySpec("a_n_surface", 1))


@pytest.fixture
def quadric():
    return family_factorizations(FamilySpec("quadric_3fold"))
