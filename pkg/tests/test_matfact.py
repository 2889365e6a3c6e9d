import pytest

from hypertheta.Polyring import PolyRing, RATIONALS
from hypertheta.Freemap import FreeMap
from hypertheta.Hypersurface import HypersurfaceRing, resolve
from hypertheta.Matfact import mf_new, mf_cokernel, mf_combine, knorrer_split, star_scaffold, \
        mirror_double_ses, LocalizedMatrix
from hypertheta.harness import FamilySpec, family_factorizations
from hypertheta.errors import NotAFactorization, RankMismatch, VariableClash, InvalidParameter


def fm(Q, table):
    return FreeMap.fromstrings(Q, table)


@pytest.fixture
def nodemf(node, QQxy):
    return mf_new(fm(QQxy, [["x"]]), fm(QQxy, [["y"]]), node, "R/x")


@pytest.fixture
def trivial(node, QQxy):
    return mf_new(fm(QQxy, [["1"]]), fm(QQxy, [["x*y"]]), node, "unit")


def test_mf_new(node, QQxy, QQxyz):
    assert mf_new(fm(QQxy, [["x"]]), fm(QQxy, [["y"]]), node).isvalid()
    R = HypersurfaceRing(QQxyz, QQxyz.parse("x^2 + y*z"))
    A = fm(QQxyz, [["x", "y"], ["z", "-x"]])
    assert mf_new(A, A, R).size == 2
    with pytest.raises(NotAFactorization) as e:
        mf_new(fm(QQxy, [["x"]]), fm(QQxy, [["x"]]), node)
    assert "A*B" in str(e.value)
    with pytest.raises(RankMismatch):
        mf_new(fm(QQxy, [["x", "y"]]), fm(QQxy, [["y"]]), node)


def test_cokernel(nodemf, trivial, node, QQxy):
    assert mf_cokernel(nodemf).matrix == fm(QQxy, [["x"]])
    # f acts as zero on coker A, witnessed by B
    M = mf_cokernel(nodemf)
    assert M.contains([node.f])
    assert mf_cokernel(trivial).length() == 0
    F = mf_cokernel(mf_combine("transpose", trivial))
    assert F.matrix.iszero() and F.gens == 1


def test_combine(nodemf, QQxy):
    t = mf_combine("transpose", nodemf)
    assert t.A == fm(QQxy, [["y"]]) and t.B == fm(QQxy, [["x"]])
    assert mf_combine("transpose", t) == nodemf
    s = mf_combine("direct_sum", [nodemf, nodemf])
    assert s.size == 2 and s.isvalid()
    assert s.A == fm(QQxy, [["x", "0"], ["0", "x"]])
    assert mf_cokernel(s).length() == mf_cokernel(nodemf).length()
    with pytest.raises(InvalidParameter):
        mf_combine("product", nodemf)
    with pytest.raises(InvalidParameter):
        mf_combine("direct_sum", [])


def test_knorrer(nodemf, trivial):
    k = knorrer_split(nodemf)
    assert k.size == 2 and k.isvalid()
    assert k.ring.f.tostring() == "x*y + u*v"
    assert k.ring.ambient.variables == ("x", "y", "u", "v")
    assert knorrer_split(trivial).isvalid()
    with pytest.raises(VariableClash):
        knorrer_split(nodemf, "x", "v")
    with pytest.raises(VariableClash):
        knorrer_split(nodemf, "u", "u")
    res = resolve(mf_cokernel(k))
    assert res.stabilization[0] <= 1


def test_localized(node, QQxy):
    A = LocalizedMatrix.fromfreemap(node, fm(QQxy, [["x"]]))
    Ainv = LocalizedMatrix.fromfreemap(node, fm(QQxy, [["y"]]), 1)
    I = LocalizedMatrix.identity(node, 1)
    assert A @ Ainv == I
    assert Ainv.tostrings() == [["(y)/f^1"]]
    assert -(-A) == A


def test_star_node(nodemf):
    rep = star_scaffold(nodemf.A, nodemf)
    assert rep.passed and rep.inverse_ok
    assert rep.size == 3
    assert rep.D.tostrings()[1][1] == "(y)/f^1"
    d = rep.todict()
    assert d["passed"] and len(d["P"]) == 3


def test_star_identity_matrix(node, QQxy):
    mf = mf_new(FreeMap.identity(QQxy, 1), fm(QQxy, [["x*y"]]), node)
    rep = star_scaffold(mf.A, mf)
    assert rep.passed
    assert rep.D.cleared(1) == rep.Dprime.cleared(1)


def test_star_quadric(quadric):
    _, (mf, _) = quadric
    rep = star_scaffold(mf.A, mf)
    assert rep.passed and rep.size == 6
    assert star_scaffold(mf.B, mf).passed


def test_star_foreign_matrix(nodemf, QQxy):
    with pytest.raises(InvalidParameter):
        star_scaffold(fm(QQxy, [["x + y"]]), nodemf)


def test_mirror_node(nodemf):
    reports = mirror_double_ses(nodemf)
    assert [r.name for r in reports] == ["E", "F", "l(E,F) row 1", "l(E,F) row 2"]
    assert all(r.exact for r in reports)
    assert [spot for r in reports for spot, _ in r.spots] == list(range(12))
    assert reports[0].todict()["homology_lengths"] == [0, 0, 0]


def test_mirror_trivial(trivial):
    assert all(r.exact for r in mirror_double_ses(trivial))


def test_mirror_quadric(quadric):
    _, (mf, _) = quadric
    assert all(r.exact for r in mirror_double_ses(mf))


def test_knorrer_stable_pattern():
    for n in (1, 2, 3):
        _, mfs = family_factorizations(FamilySpec("a_n_curve", n))
        for mf in mfs:
            k = knorrer_split(mf, "z", "w")
            res = resolve(mf_cokernel(k))
            s, found = res.stabilization
            assert s == 0 and found.size == 2 * mf.size
            assert found.B.tostrings() == k.B.tostrings()
            d = [res.differential(i).tostrings() for i in range(1, 5)]
            assert d[0] == d[2] and d[1] == d[3]
            assert res.check_complex(5)


def test_star_mirror_surface(surface1):
    _, (mf,) = surface1
    assert star_scaffold(mf.A, mf).passed
    assert star_scaffold(mf.B, mf).passed
    assert all(r.exact for r in mirror_double_ses(mf))
