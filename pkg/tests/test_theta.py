import pytest

from hypertheta.Polyring import PolyRing, RATIONALS, primefield
from hypertheta.Freemap import FreeMap
from hypertheta.Groebner import INFINITE
from hypertheta.Hypersurface import RModulePresentation
from hypertheta.Matfact import mf_new, mf_cokernel, mf_combine
from hypertheta.harness import residue_field
from hypertheta.theta import theta, periodic_theta, jacobian_check, vanishing_predicted, ThetaReport, \
        SingularityReport
from hypertheta.errors import InvalidParameter


def test_node_base_cases(Rx, Ry):
    rep = theta(Rx, Ry)
    assert rep.value == 1
    assert (rep.even_length, rep.odd_length, rep.stabilization_index) == (1, 0, 0)
    assert rep.periodicity_verified and not rep.fallback
    assert theta(Rx, Rx).value == -1
    assert theta(Ry, Ry).value == -1


def test_free_and_residue_field(node, Rx, Ry):
    R = RModulePresentation.free(node, 1)
    k = residue_field(node)
    assert theta(Rx, R).value == 0
    assert theta(R, Ry).value == 0
    for N in (Rx, Ry, k):
        assert theta(k, N).value == 0


def test_biadditive(Rx, Ry):
    assert theta(Rx.directsum(Rx), Ry).value == 2
    assert theta(Rx.directsum(Ry), Ry).value == theta(Rx, Ry).value + theta(Ry, Ry).value


def test_periodic_theta(node, QQxy, Rx, Ry):
    mf = mf_new(FreeMap.fromstrings(QQxy, [["x"]]), FreeMap.fromstrings(QQxy, [["y"]]), node)
    assert periodic_theta(mf, Ry) == theta(mf_cokernel(mf), Ry).value == 1
    assert periodic_theta(mf, Rx) == -1
    assert periodic_theta(mf_combine("transpose", mf), Rx) == 1


def test_surface_vanishing(surface1):
    ring, (mf,) = surface1
    M = mf_cokernel(mf)
    assert theta(M, M).value == 0
    assert periodic_theta(mf, M) == 0


def test_milnor_numbers():
    for n in range(1, 6):
        Q = PolyRing(RATIONALS, ["x", "y"])
        rep = jacobian_check(Q.parse("x^%d - y^2" % (n + 1)), Q)
        assert rep.isolated_at_origin and rep.milnor_number == n and rep.tjurina_number == n
    for n in range(1, 7):
        Q = PolyRing(RATIONALS, ["x"])
        assert jacobian_check(Q.parse("x^%d" % (n + 1)), Q).milnor_number == n
    Q = PolyRing(RATIONALS, ["x", "y", "z"])
    rep = jacobian_check(Q.parse("x^2 + y^2 + z^2"), Q)
    assert rep.isolated_at_origin and rep.milnor_number == 1 and rep.dim == 2 and rep.parity == "even"


def test_not_isolated(QQxy):
    rep = jacobian_check(QQxy.parse("x^2*y"), QQxy)
    assert not rep.isolated_at_origin
    assert rep.milnor_number == INFINITE
    predicted, why = vanishing_predicted(rep)
    assert not predicted and "isolated" in why


def test_jacobian_errors(QQxy):
    with pytest.raises(InvalidParameter):
        jacobian_check(QQxy.parse("3"), QQxy)
    with pytest.raises(InvalidParameter):
        jacobian_check(QQxy.parse("x*y + 1"), QQxy)


def test_characteristic_warning():
    Q = PolyRing(primefield(3), ["x", "y"])
    rep = jacobian_check(Q.parse("x^3 - y^2"), Q)
    assert len(rep.char_warnings) == 1
    assert "exponent 3 of x" in rep.char_warnings[0]


def test_vanishing_prediction(QQxy, QQxyz):
    node = jacobian_check(QQxy.parse("x*y"), QQxy)
    assert vanishing_predicted(node) == (False, "dimension 1 is odd")
    surface = jacobian_check(QQxyz.parse("x^2 - y*z"), QQxyz)
    assert vanishing_predicted(surface)[0]


def test_report_roundtrip(Rx, Ry, QQxy):
    rep = theta(Rx, Ry)
    d = rep.todict()
    assert d["theta"] == 1 and "value" not in d
    assert ThetaReport.fromdict(d) == rep
    sing = jacobian_check(QQxy.parse("x^2*y"), QQxy)
    d = sing.todict()
    assert d["milnor"] == "infinite"
    assert SingularityReport.fromdict(d) == sing
