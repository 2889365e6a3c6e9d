import pytest

from hypertheta.Polyring import PolyRing, primefield
from hypertheta.polyparser import parse_poly
from hypertheta.readers import TextReader
from hypertheta.errors import PolySyntaxError, UnknownVariable, NegativeExponent


def test_tokens():
    rd = TextReader("x^3 - 12*yz")
    kinds = [(t.kind, t.text) for t in rd.tokens]
    assert kinds == [("name", "x"), ("op", "^"), ("int", "3"), ("op", "-"),
                     ("int", "12"), ("op", "*"), ("name", "yz"), ("eof", "")]
    assert rd.tokens[3].pos == 4


def test_parse_examples(QQxyz):
    assert parse_poly("0", QQxyz).iszero()
    p = parse_poly("x^3 - y*z", QQxyz)
    assert dict(p.terms) == {(3, 0, 0): 1, (0, 1, 1): -1}
    F2 = PolyRing(primefield(2), ["x", "y"])
    assert parse_poly("(x+y)^2", F2).tostring() == "x^2 + y^2"


def test_unary_and_precedence(QQxy):
    assert parse_poly("-x^2", QQxy) == -(QQxy.var("x") ** 2)
    assert parse_poly("--x", QQxy) == QQxy.var("x")
    assert parse_poly("2*(x - y)^2 + 1", QQxy).tostring() == "2*x^2 - 4*x*y + 2*y^2 + 1"


def test_rational_coefficients(QQxy):
    p = parse_poly("1/2*x^2 - 3/4", QQxy)
    assert p.tostring() == "1/2*x^2 - 3/4"
    assert parse_poly(p.tostring(), QQxy) == p


def test_juxtaposition_is_an_error(QQxy):
    with pytest.raises(PolySyntaxError) as e:
        parse_poly("2x", QQxy)
    assert e.value.position == 1


def test_errors(QQxy):
    with pytest.raises(UnknownVariable):
        parse_poly("x + t", QQxy)
    with pytest.raises(NegativeExponent):
        parse_poly("x^-1", QQxy)
    with pytest.raises(PolySyntaxError):
        parse_poly("x^y", QQxy)
    with pytest.raises(PolySyntaxError):
        parse_poly("(x + y", QQxy)
    with pytest.raises(PolySyntaxError):
        parse_poly("x / y", QQxy)
    with pytest.raises(PolySyntaxError) as e:
        parse_poly("x $ y", QQxy)
    assert e.value.position == 2
    assert "^" in e.value.pointer()
