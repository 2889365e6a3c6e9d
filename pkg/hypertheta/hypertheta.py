"""
Commandline tool computing the theta invariant of pairs of modules over
hypersurface rings, with singularity checks, factorization checks,
resolutions and family sweeps.

    hypertheta theta job.json
    hypertheta sing --vars x,y "x^3 - y^2"
    hypertheta experiment --family a_n_surface --nmin 1 --nmax 4 -o sweep.csv
"""
import logging
import sys

from .Polyring import CoefficientField, PolyRing
from .readers import TextReader
from .Hypersurface import resolve
from .Matfact import mf_cokernel, star_scaffold, mirror_double_ses
from .theta import theta, jacobian_check
from .harness import FamilySpec, SweepConfig, family_factorizations, build_family, run_sweep, \
        csv_output, determinism_hash, template_output, random_instances, biadditivity_audit, \
        symmetry_audit, residue_field_audit, FAMILIES
from .jobfile import JobFile
from .textdump import jsondump, matrixdump
from .errors import ThetaError, PolySyntaxError, InvalidParameter, ConformanceViolation

logger = logging.getLogger(__name__)


def ring_from_flags(args, text=None):
    """
    the polynomial ring given by --field and --vars; without --vars the
    variables of `text` are taken in order of appearance.
    """
    field = CoefficientField.fromstring(args.field or "rational")
    if args.vars:
        names = [v.strip() for v in args.vars.split(",") if v.strip()]
    else:
        names = []
        for tok in TextReader(text or "").tokens:
            if tok.kind == "name" and tok.text not in names:
                names.append(tok.text)
    if not names:
        raise InvalidParameter("no variables, use --vars")
    return PolyRing(field, names)


def load_job(args):
    field = CoefficientField.fromstring(args.field) if args.field else None
    variables = [v.strip() for v in args.vars.split(",")] if args.vars else None
    return JobFile.load(args.job, field, variables)


def option(args, job, name):
    """a command line flag wins over the job file's option"""
    value = getattr(args, name, None)
    if value is None and job is not None:
        value = job.options.get(name)
    return value


def openoutput(args):
    if getattr(args, "output", None):
        return open(args.output, "w", encoding="utf-8", newline="")
    return None


def cmd_theta(args):
    """handle 'theta' subcommand"""
    job = load_job(args)
    max_steps = option(args, job, "max_steps")
    stable_at = option(args, job, "assume_stable_at")
    pairs = job.pairs or [(a, b) for a in job.modules for b in job.modules]
    results = []
    for a, b in pairs:
        rep = theta(job.modules[a], job.modules[b], max_steps, stable_at)
        results.append(rep.todict())
    report = {
        "ring": job.ring.describe(),
        "f": job.ring.f.tostring(),
        "singularity": jacobian_check(job.ring.f, job.ring.ambient).todict(),
        "results": results,
    }
    if len(results) == 1:
        report.update(results[0])
    out = openoutput(args)
    jsondump(report, out or sys.stdout)
    if out:
        out.close()


def cmd_sing(args):
    """handle 'sing' subcommand"""
    Q = ring_from_flags(args, args.f)
    f = Q.parse(args.f)
    report = jacobian_check(f, Q).todict()
    report["f"] = f.tostring()
    report["ring"] = Q.describe()
    jsondump(report, sys.stdout)


def _factorizations(args):
    if args.job:
        job = load_job(args)
        return list(job.factorizations.values())
    mfs = []
    for name in args.family or ["a_n_surface"]:
        ns = [None] if name == "quadric_3fold" else range(args.nmin, args.nmax + 1)
        for n in ns:
            mfs.extend(family_factorizations(FamilySpec(name, n, args.field or "rational"))[1])
    return mfs


def cmd_mfverify(args):
    """handle 'mfverify' subcommand"""
    reports = []
    for mf in _factorizations(args):
        # construction went through mf_new, so A*B = B*A = f*I holds here
        res = resolve(mf_cokernel(mf), args.max_steps)
        rep = {
            "ring": mf.ring.describe(),
            "module": mf.label,
            "size": mf.size,
            "valid": mf.isvalid(),
            "stabilization": res.stabilization[0],
        }
        if args.deep:
            rep["star"] = star_scaffold(mf.A, mf).todict()
            rep["mirror"] = [r.todict() for r in mirror_double_ses(mf)]
        reports.append(rep)
    jsondump({"factorizations": reports}, sys.stdout)


def cmd_resolve(args):
    """handle 'resolve' subcommand"""
    job = load_job(args)
    names = [args.module] if args.module else list(job.modules)
    for name in names:
        if name not in job.modules:
            raise InvalidParameter("unknown module %r" % name)
        res = resolve(job.modules[name], option(args, job, "max_steps"))
        print("module %s over %s" % (name, job.ring.describe()))
        upto = max(len(res.differentials), (res.stabilization[0] if res.stabilization else 0) + 2)
        if args.steps:
            upto = args.steps
        for i in range(1, upto + 1):
            matrixdump("d%d" % i, res.differential(i), sys.stdout)
        if res.finite:
            print("finite resolution, length %d" % (len(res.differentials) - 1))
        else:
            print("stabilization at %d, factorization of size %d" % (res.stabilization[0], res.stabilization[1].size))


def _audit(config, count):
    """seeded bi-additivity, symmetry and residue field audits of the swept families"""
    for spec in config.specs():
        ring, modules = build_family(spec)
        results = [residue_field_audit(ring, modules, config.max_steps)]
        for M1, M2, N in random_instances(modules, count, config.seed):
            results.append(biadditivity_audit(M1, M2, N, config.max_steps))
            results.append(symmetry_audit(M1, N, max_steps=config.max_steps))
        failed = [r for r in results if not r.passed]
        print("audit %s: %d checks, %d failed" % (spec.describe(), len(results), len(failed)), file=sys.stderr)
        if failed:
            raise ConformanceViolation("%s audit fails on %s: %s" % (failed[0].name, spec.describe(), failed[0].values))


def cmd_experiment(args):
    """handle 'experiment' subcommand"""
    job = load_job(args) if args.job else None
    config = SweepConfig(
        families=args.family or (["custom"] if job else ["a_n_surface"]),
        nmin=args.nmin, nmax=args.nmax,
        field=args.field or "rational",
        max_steps=option(args, job, "max_steps"),
        assume_stable_at=option(args, job, "assume_stable_at"),
        jobs=args.jobs, seed=args.seed, job=job)
    records = run_sweep(config)
    digest = determinism_hash(records)
    out = openoutput(args)
    if args.template:
        template_output(records, args.template, out or sys.stdout, hash=digest)
    else:
        csv_output(records, out or sys.stdout)
    if out:
        out.close()
    print("determinism hash: %s" % digest, file=sys.stderr)
    if args.audit:
        _audit(config, args.audit)


def main(argv=None):
    import argparse

    parser = argparse.ArgumentParser(description="theta invariants over hypersurface rings")
    subparsers = parser.add_subparsers(title='commands',
                        help='Use the --help option for the individual sub commands for more details')
    parser.set_defaults(handler=lambda args: parser.print_help())
    parser.add_argument("--debug", action="store_true", help="break on exceptions")
    parser.add_argument("--verbose", "-v", action="store_true", help="report progress on stderr")

    def ringflags(p):
        p.add_argument("--field", type=str, help="rational or prime:p")
        p.add_argument("--vars", type=str, help="comma separated variable names, e.g. x,y,z")

    def stepflags(p):
        p.add_argument("--max-steps", type=int, help="resolution steps before giving up on periodicity")
        p.add_argument("--assume-stable-at", type=int, help="read Tor lengths from this index when no factorization is found")

    p = subparsers.add_parser("theta", help="theta of the module pairs of a job file")
    ringflags(p)
    stepflags(p)
    p.add_argument("--output", "-o", type=str, help="write the JSON report here")
    p.add_argument("job", type=str)
    p.set_defaults(handler=cmd_theta)

    p = subparsers.add_parser("sing", help="Jacobian criterion, Milnor and Tjurina numbers")
    ringflags(p)
    p.add_argument("f", type=str, help="the polynomial")
    p.set_defaults(handler=cmd_sing)

    p = subparsers.add_parser("mfverify", help="check matrix factorizations")
    ringflags(p)
    p.add_argument("--max-steps", type=int)
    p.add_argument("--deep", action="store_true", help="also check the star identity and the mirror sequences")
    p.add_argument("--family", type=str, action="append", choices=FAMILIES[:-1])
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("job", type=str, nargs="?", help="job file, instead of bundled families")
    p.set_defaults(handler=cmd_mfverify)

    p = subparsers.add_parser("resolve", help="print the free resolution of a module")
    ringflags(p)
    stepflags(p)
    p.add_argument("--module", "-m", type=str, help="module name, default all")
    p.add_argument("--steps", type=int, help="number of differentials to print")
    p.add_argument("job", type=str)
    p.set_defaults(handler=cmd_resolve)

    p = subparsers.add_parser("experiment", help="theta sweep over families, CSV output")
    stepflags(p)
    p.add_argument("--field", type=str)
    p.add_argument("--vars", type=str)
    p.add_argument("--family", type=str, action="append", choices=FAMILIES)
    p.add_argument("--nmin", type=int, default=1)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--audit", type=int, default=0, help="number of seeded random audit instances per family")
    p.add_argument("--template", "-t", type=str, choices=["md", "html"], help="render with a template instead of CSV")
    p.add_argument("--output", "-o", type=str)
    p.add_argument("--job", type=str, help="job file for the custom family")
    p.set_defaults(handler=cmd_experiment)

    args = parser.parse_args(argv)

    level = logging.DEBUG if args.debug else logging.INFO if args.verbose else logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s: %(name)s: %(message)s", force=True)

    try:
        args.handler(args)
    except ThetaError as e:
        if args.debug:
            raise
        print("%s: %s" % (type(e).__name__, e), file=sys.stderr)
        if isinstance(e, PolySyntaxError):
            print(e.pointer(), file=sys.stderr)
        return e.exitcode
    return 0


if __name__ == "__main__":
    sys.exit(main())
