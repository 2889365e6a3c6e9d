import json

import pytest

from hypertheta.hypertheta import main


def writejob(tmp_path, d, name="job.json"):
    path = tmp_path / name
    path.write_text(json.dumps(d), encoding="utf-8")
    return str(path)


NODE = {
    "variables": ["x", "y"],
    "f": "x*y",
    "modules": {"M": {"presentation": [["x"]]}, "N": {"presentation": [["y"]]}},
    "pairs": [["M", "N"]],
}


def test_theta_node(tmp_path, capsys):
    assert main(["theta", writejob(tmp_path, NODE)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["theta"] == 1
    assert report["results"][0]["M"] == "M"
    assert report["singularity"]["parity"] == "odd"


def test_theta_output_file(tmp_path):
    out = tmp_path / "out.json"
    job = dict(NODE, pairs=[], modules={"M": {"mf": {"A": [["x"]], "B": [["y"]]}}, "F": {"free": 1}})
    assert main(["theta", "-o", str(out), writejob(tmp_path, job)]) == 0
    report = json.loads(out.read_text(encoding="utf-8"))
    values = {(r["M"], r["N"]): r["theta"] for r in report["results"]}
    assert values == {("M", "M"): -1, ("M", "F"): 0, ("F", "M"): 0, ("F", "F"): 0}


def test_theta_not_finite(tmp_path, capsys):
    job = {"variables": ["x", "y"], "f": "x^2*y",
           "modules": {"M": {"presentation": [["x"]]}}, "pairs": [["M", "M"]]}
    assert main(["theta", writejob(tmp_path, job)]) == 2
    assert "NotFiniteLength" in capsys.readouterr().err


def test_input_errors(tmp_path, capsys):
    assert main(["sing", "--vars", "x,y", "x^"]) == 1
    err = capsys.readouterr().err
    assert "PolySyntaxError" in err and "^" in err
    assert main(["theta", str(tmp_path / "missing.json")]) == 1
    bad = dict(NODE, modules={"M": {"mf": {"A": [["x"]], "B": [["x"]]}}}, pairs=[])
    assert main(["theta", writejob(tmp_path, bad)]) == 1
    assert "NotAFactorization" in capsys.readouterr().err
    assert main(["theta", writejob(tmp_path, dict(NODE, options={"max_steps": "many"}))]) == 1


def test_debug_reraises(tmp_path):
    with pytest.raises(Exception):
        main(["--debug", "theta", str(tmp_path / "missing.json")])


def test_sing(capsys):
    assert main(["sing", "x^3 - y^2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["isolated"] and report["milnor"] == 2 and report["dim"] == 1
    assert main(["sing", "--vars", "x,y", "x^2*y"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["milnor"] == "infinite" and not report["vanishing_predicted"]


def test_mfverify_deep(capsys):
    assert main(["mfverify", "--family", "quadric_3fold", "--deep"]) == 0
    report = json.loads(capsys.readouterr().out)
    mfs = report["factorizations"]
    assert len(mfs) == 2
    for rep in mfs:
        assert rep["valid"] and rep["star"]["passed"]
        assert all(m["exact"] for m in rep["mirror"])


def test_resolve(tmp_path, capsys):
    assert main(["resolve", "-m", "M", "--steps", "3", writejob(tmp_path, NODE)]) == 0
    out = capsys.readouterr().out
    assert "d1 = [ x ]" in out and "d2 = [ y ]" in out and "d3 = [ x ]" in out
    assert "stabilization at 0" in out


def test_experiment(tmp_path, capsys):
    out = tmp_path / "sweep.csv"
    assert main(["experiment", "--family", "a_n_surface", "--nmin", "1", "--nmax", "2", "-o", str(out)]) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("family,n,field,pair,theta")
    assert len(lines) == 1 + 5
    assert "determinism hash: " in capsys.readouterr().err


def test_experiment_custom(tmp_path, capsys):
    job = dict(NODE, pairs=[])
    assert main(["experiment", "--job", writejob(tmp_path, job)]) == 0
    rows = capsys.readouterr().out.splitlines()[1:]
    thetas = sorted(int(row.split(",")[-6]) for row in rows)
    assert thetas == [-1, -1, 1, 1]


def test_experiment_failed_audit(tmp_path, capsys, monkeypatch):
    import hypertheta.hypertheta as cli
    from hypertheta.harness import AuditResult

    monkeypatch.setattr(cli, "biadditivity_audit",
                        lambda M1, M2, N, max_steps=None: AuditResult("biadditivity", False, {"sum": 1, "first": 0, "second": 0}))
    monkeypatch.setattr(cli, "symmetry_audit", lambda M, N, imax=4, max_steps=None: AuditResult("symmetry", True))
    out = tmp_path / "sweep.csv"
    argv = ["experiment", "--family", "a_n_surface", "--nmin", "1", "--nmax", "1", "--audit", "1", "-o", str(out)]
    assert main(argv) == 3
    err = capsys.readouterr().err.splitlines()
    assert "audit a_n_surface(1): 3 checks, 1 failed" in err
    assert err[-1].startswith("ConformanceViolation: biadditivity audit fails on a_n_surface(1)")


def test_malformed_job(tmp_path, capsys):
    for job in (dict(NODE, modules={"M": {"free": "two"}}, pairs=[]),
                dict(NODE, f=5),
                dict(NODE, pairs=[["M", ["M"]]]),
                dict(NODE, options=[1]),
                dict(NODE, modules={"M": {"presentation": "x"}}, pairs=[])):
        assert main(["theta", writejob(tmp_path, job)]) == 1
        err = capsys.readouterr().err
        assert err.startswith("JobFileError: ")
