"""
Bundled families of hypersurfaces with their matrix factorizations,
theta sweeps over them, property audits and report output.
"""
import csv
import hashlib
import io
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, astuple, fields
from os.path import dirname, abspath, join

from .Polyring import CoefficientField, PolyRing
from .Freemap import FreeMap
from .Hypersurface import HypersurfaceRing, RModulePresentation
from .Matfact import mf_new, mf_cokernel, mf_combine, knorrer_split
from .homology import tor, window_tor_lengths
from .theta import theta, jacobian_check, vanishing_predicted
from .errors import InvalidParameter, ConformanceViolation

logger = logging.getLogger(__name__)

FAMILIES = ("a_n_curve", "a_n_surface", "a_n_threefold", "quadric_3fold", "custom")


@dataclass
class FamilySpec:
    """
    `n` is ignored by quadric_3fold; a custom family takes its ring and
    modules from `job`, a JobFile.
    """
    name: str
    n: int = 1
    field: str = "rational"
    job: object = None

    def describe(self):
        if self.name in ("quadric_3fold", "custom"):
            return self.name
        return "%s(%d)" % (self.name, self.n)


def _matrix(ring, table):
    return FreeMap.fromstrings(ring.ambient, table)


def a_n_curve(n, field):
    """
    f = x^(n+1) - y^2.  For odd n the rank one factorizations x^k -+ y with
    k = (n+1)/2, and for j <= n/2 the rank two ones.
    """
    Q = PolyRing(field, ["x", "y"])
    ring = HypersurfaceRing(Q, Q.parse("x^%d - y^2" % (n + 1)))
    mfs = []
    if n % 2:
        k = (n + 1) // 2
        mf = mf_new(_matrix(ring, [["x^%d - y" % k]]), _matrix(ring, [["x^%d + y" % k]]), ring, "M+")
        mfs.append(mf)
        mfs.append(mf_combine("transpose", mf))
    for j in range(1, n // 2 + 1):
        A = _matrix(ring, [["y", "x^%d" % j], ["x^%d" % (n + 1 - j), "y"]])
        B = _matrix(ring, [["-y", "x^%d" % j], ["x^%d" % (n + 1 - j), "-y"]])
        mfs.append(mf_new(A, B, ring, "M%d" % j))
    return ring, mfs


def a_n_surface(n, field):
    """
    f = x^(n+1) - y*z with A_j = [[x^j, y], [z, x^(n+1-j)]], j = 1..n
    """
    Q = PolyRing(field, ["x", "y", "z"])
    ring = HypersurfaceRing(Q, Q.parse("x^%d - y*z" % (n + 1)))
    mfs = []
    for j in range(1, n + 1):
        A = _matrix(ring, [["x^%d" % j, "y"], ["z", "x^%d" % (n + 1 - j)]])
        B = _matrix(ring, [["x^%d" % (n + 1 - j), "-y"], ["-z", "x^%d" % j]])
        mfs.append(mf_new(A, B, ring, "M%d" % j))
    return ring, mfs


def a_n_threefold(n, field):
    """
    f = x^(n+1) - y^2 + z*w, the curve factorizations split with z, w.
    """
    _, curve = a_n_curve(n, field)
    mfs = [knorrer_split(mf, "z", "w") for mf in curve]
    return mfs[0].ring, mfs


def quadric_3fold(field):
    Q = PolyRing(field, ["x", "y", "z", "w"])
    ring = HypersurfaceRing(Q, Q.parse("x*y - z*w"))
    mf = mf_new(_matrix(ring, [["x", "z"], ["w", "y"]]), _matrix(ring, [["y", "-z"], ["-w", "x"]]), ring, "M")
    return ring, [mf, mf_combine("transpose", mf)]


def family_factorizations(spec):
    """
    Returns the ring and the factorizations of a bundled family.
    """
    field = CoefficientField.fromstring(spec.field) if isinstance(spec.field, str) else spec.field
    if spec.name != "quadric_3fold" and (not isinstance(spec.n, int) or spec.n < 1):
        raise InvalidParameter("family parameter n must be a positive integer, got %r" % (spec.n,))
    if spec.name == "a_n_curve":
        return a_n_curve(spec.n, field)
    if spec.name == "a_n_surface":
        return a_n_surface(spec.n, field)
    if spec.name == "a_n_threefold":
        return a_n_threefold(spec.n, field)
    if spec.name == "quadric_3fold":
        return quadric_3fold(field)
    if spec.name == "custom":
        if spec.job is None:
            raise InvalidParameter("custom family needs a job file")
        return spec.job.ring, list(spec.job.factorizations.values())
    raise InvalidParameter("unknown family %r, choose one of %s" % (spec.name, ", ".join(FAMILIES)))


def build_family(spec):
    """
    Returns (ring, modules): the hypersurface ring and the cokernels of the
    family's factorizations.
    """
    if spec.name == "custom":
        if spec.job is None:
            raise InvalidParameter("custom family needs a job file")
        return spec.job.ring, list(spec.job.modules.values())
    ring, mfs = family_factorizations(spec)
    return ring, [mf_cokernel(mf) for mf in mfs]


def residue_field(ring):
    """R/m, presented by the row of variables"""
    Q = ring.ambient
    return RModulePresentation(ring, FreeMap(Q, [Q.gens()]), "k")


@dataclass
class SweepRecord:
    family: str
    n: int
    field: str
    pair: str
    theta: int
    len_even: int
    len_odd: int
    stab_index: int
    predicted_vanishing: bool
    millis: int

    @staticmethod
    def columns():
        return [f.name for f in fields(SweepRecord)]

    def row(self):
        return ["" if v is None else v for v in astuple(self)]


@dataclass
class SweepConfig:
    families: list = field(default_factory=lambda: ["a_n_surface"])
    nmin: int = 1
    nmax: int = 4
    field: str = "rational"
    max_steps: int = None
    assume_stable_at: int = None
    jobs: int = 1
    seed: int = 0
    job: object = None

    def specs(self):
        for name in self.families:
            if name in ("quadric_3fold", "custom"):
                yield FamilySpec(name, None, self.field, self.job)
            else:
                for n in range(self.nmin, self.nmax + 1):
                    yield FamilySpec(name, n, self.field, self.job)


def _evaluate(task):
    """
    theta for one pair of a family; runs in worker processes as well.
    """
    spec, i, j, max_steps, assume_stable_at, predicted = task
    _, modules = build_family(spec)
    M, N = modules[i], modules[j]
    t0 = time.perf_counter()
    rep = theta(M, N, max_steps, assume_stable_at)
    millis = int((time.perf_counter() - t0) * 1000)
    return SweepRecord(spec.name, spec.n, spec.field if isinstance(spec.field, str) else spec.field.describe(),
                       "%s,%s" % (M.label, N.label), rep.value, rep.even_length, rep.odd_length,
                       rep.stabilization_index, predicted, millis)


def sweep_tasks(config):
    tasks = []
    for spec in config.specs():
        ring, modules = build_family(spec)
        predicted, why = vanishing_predicted(jacobian_check(ring.f, ring.ambient))
        logger.info("%s: f = %s, %d modules, vanishing %spredicted (%s)",
                    spec.describe(), ring.f, len(modules), "" if predicted else "not ", why)
        for i in range(len(modules)):
            for j in range(len(modules)):
                tasks.append((spec, i, j, config.max_steps, config.assume_stable_at, predicted))
    return tasks


def run_sweep(config):
    """
    theta of every ordered pair of modules of every requested family.
    Raises ConformanceViolation when a predicted vanishing fails.
    """
    tasks = sweep_tasks(config)
    if config.jobs and config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(_evaluate, tasks))
    else:
        records = [_evaluate(t) for t in tasks]
    for rec in records:
        if rec.predicted_vanishing and rec.theta != 0:
            raise ConformanceViolation("%s(%s) pair %s: theta = %d where vanishing is predicted"
                                       % (rec.family, rec.n, rec.pair, rec.theta))
    return records


@dataclass
class AuditResult:
    name: str
    passed: bool
    values: dict = field(default_factory=dict)


def biadditivity_audit(M1, M2, N, max_steps=None):
    """
    theta(M1 + M2, N) == theta(M1, N) + theta(M2, N)
    """
    t1 = theta(M1, N, max_steps).value
    t2 = theta(M2, N, max_steps).value
    t12 = theta(M1.directsum(M2), N, max_steps).value
    res = AuditResult("biadditivity", t12 == t1 + t2, {"sum": t12, "first": t1, "second": t2})
    if not res.passed:
        logger.warning("biadditivity fails for (%s, %s, %s): %d != %d + %d",
                       M1.label, M2.label, N.label, t12, t1, t2)
    return res


def symmetry_audit(M, N, imax=4, max_steps=None):
    """
    length Tor_i(M, N) == length Tor_i(N, M) for i <= imax, each side from its own resolution
    """
    values = {}
    passed = True
    for i in range(imax + 1):
        a = tor(M, N, i, max_steps=max_steps).length
        b = tor(N, M, i, max_steps=max_steps).length
        values[i] = (a, b)
        if a != b:
            passed = False
            logger.warning("Tor_%d(%s, %s) has length %s, swapped %s", i, M.label, N.label, a, b)
    return AuditResult("symmetry", passed, values)


def residue_field_audit(ring, modules, max_steps=None):
    """
    theta(R/m, N) == 0 for all N
    """
    k = residue_field(ring)
    values = {N.label: theta(k, N, max_steps).value for N in modules}
    return AuditResult("residue field", all(v == 0 for v in values.values()), values)


def window_theta(M, N, start):
    """theta from the Tor lengths at start..start+3 of a plain resolution"""
    st = window_tor_lengths(M, N, start)
    return st.even - st.odd


def random_instances(modules, count, seed=0):
    """
    `count` triples (M1, M2, N) drawn from the modules, with R and R/m added.
    """
    ring = modules[0].ring
    pool = list(modules) + [RModulePresentation.free(ring, 1), residue_field(ring)]
    rnd = random.Random(seed)
    return [(rnd.choice(pool), rnd.choice(pool), rnd.choice(pool)) for _ in range(count)]


def csv_output(records, out, blank_millis=False):
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SweepRecord.columns())
    for rec in records:
        row = rec.row()
        if blank_millis:
            row[-1] = ""
        writer.writerow(row)


def determinism_hash(records):
    """
    sha256 of the CSV output with the timing column left empty
    """
    buf = io.StringIO()
    csv_output(records, buf, blank_millis=True)
    return hashlib.sha256(buf.getvalue().encode("utf-8")).hexdigest()


def template_output(records, template, out, **context):
    """renders the records with one of the bundled jinja2 templates"""
    try:
        from jinja2 import Environment, FileSystemLoader
    except ImportError:
        raise InvalidParameter("Jinja templating engine not found. Install using pip install jinja2")

    template_dir = join(dirname(abspath(__file__)), "templates")
    j2_env = Environment(loader=FileSystemLoader(template_dir), keep_trailing_newline=True)
    j2_templ = j2_env.get_template("sweep." + template + ".j2")
    j2_templ.stream(records=records, columns=SweepRecord.columns(), **context).dump(out)
