import io
import math
from fractions import Fraction

import pytest

from hypertheta.Polyring import primefield
from hypertheta.Freemap import FreeMap
from hypertheta.jobfile import JobFile, parse_field
from hypertheta.textdump import matrixlines, matrixdump, jsonsafe
from hypertheta.errors import JobFileError, InvalidParameter, UnknownVariable


def test_parse_field():
    assert parse_field("rational").characteristic() == 0
    assert parse_field({"prime": 5}) == primefield(5)
    assert parse_field("prime:11").characteristic() == 11
    with pytest.raises(JobFileError):
        parse_field({"prime": 5, "extra": 1})
    with pytest.raises(JobFileError):
        parse_field(7)


def test_fromdict():
    job = JobFile.fromdict({
        "field": {"prime": 7},
        "variables": ["x", "y"],
        "f": "x*y",
        "modules": {
            "M": {"presentation": [["x"]]},
            "F": {"free": 2},
            "E": {"presentation": [], "rows": 1},
            "P": {"mf": {"A": [["y"]], "B": [["x"]]}},
        },
        "pairs": [["M", "P"]],
        "options": {"max_steps": 8},
    })
    assert job.ring.ambient.field == primefield(7)
    assert job.modules["F"].gens == 2
    assert job.modules["E"].gens == 1 and job.modules["E"].matrix.cols == 0
    assert list(job.factorizations) == ["P"]
    assert job.pairs == [("M", "P")]
    assert job.options == {"max_steps": 8}


def test_overrides():
    job = JobFile.fromdict({"f": "a*b", "modules": {}}, variables=["a", "b"])
    assert job.ring.ambient.variables == ("a", "b")


def test_errors(tmp_path):
    base = {"variables": ["x", "y"], "f": "x*y"}
    with pytest.raises(JobFileError):
        JobFile.fromdict([])
    with pytest.raises(JobFileError):
        JobFile.fromdict({"variables": ["x"]})
    with pytest.raises(JobFileError):
        JobFile.fromdict(dict(base, modules={"M": {}}))
    with pytest.raises(JobFileError):
        JobFile.fromdict(dict(base, modules={"M": {"tensor": 1}}))
    with pytest.raises(JobFileError):
        JobFile.fromdict(dict(base, modules={"M": {"mf": {"A": [["x"]]}}}))
    with pytest.raises(JobFileError):
        JobFile.fromdict(dict(base, modules={"M": {"free": 1}}, pairs=[["M", "N"]]))
    with pytest.raises(JobFileError):
        JobFile.fromdict(dict(base, options={"seed": 1}))
    with pytest.raises(InvalidParameter):
        JobFile.fromdict(dict(base, options={"max_steps": 2.5}))
    with pytest.raises(UnknownVariable):
        JobFile.fromdict(dict(base, modules={"M": {"presentation": [["z"]]}}))
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    with pytest.raises(JobFileError):
        JobFile.load(str(bad))


def test_matrixdump(QQxy):
    m = FreeMap.fromstrings(QQxy, [["x", "y^2"], ["x*y", "1"]])
    assert matrixlines(m) == ["[   x  y^2 ]", "[ x*y    1 ]"]
    assert matrixlines(FreeMap.zero(QQxy, 2, 0)) == ["(2x0)"]
    out = io.StringIO()
    matrixdump("d1", m, out)
    assert out.getvalue() == "d1 = [   x  y^2 ]\n     [ x*y    1 ]\n"


def test_jsonsafe():
    assert jsonsafe({"a": math.inf, 1: [Fraction(1, 2), (2, 3)]}) == {"a": "infinite", "1": ["1/2", [2, 3]]}


def test_field_types():
    base = {"variables": ["x", "y"], "f": "x*y"}
    bad = [
        dict(base, modules={"M": {"free": "two"}}),
        dict(base, modules={"M": {"free": True}}),
        dict(base, f=5),
        dict(base, variables=5),
        dict(base, variables=[]),
        dict(base, modules=[["x"]]),
        dict(base, modules={"M": {"presentation": "x"}}),
        dict(base, modules={"M": {"presentation": [["x", None]]}}),
        dict(base, modules={"M": {"presentation": [], "rows": "1"}}),
        dict(base, modules={"M": {"mf": [["x"], ["y"]]}}),
        dict(base, modules={"M": {"mf": {"A": "x", "B": [["y"]]}}}),
        dict(base, modules={"M": {"free": 1}}, pairs=[["M", ["M"]]]),
        dict(base, modules={"M": {"free": 1}}, pairs="M,M"),
        dict(base, options=[1]),
        dict(base, field={"prime": "7"}),
    ]
    for d in bad:
        with pytest.raises(JobFileError):
            JobFile.fromdict(d)
    job = JobFile.fromdict(dict(base, modules={"M": {"presentation": [[1, "x"]]}}))
    assert job.modules["M"].matrix.cols == 2
