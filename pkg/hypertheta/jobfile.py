"""
JSON job files: a ring, named modules, the pairs to evaluate and default options.

    {
      "field": "rational" | {"prime": 7},
      "variables": ["x", "y"],
      "f": "x*y",
      "modules": {
        "M": {"presentation": [["x"]]},
        "F": {"free": 2},
        "P": {"mf": {"A": [["x"]], "B": [["y"]]}}
      },
      "pairs": [["M", "P"]],
      "options": {"max_steps": 8, "assume_stable_at": 2}
    }
"""
import json
import logging

from .Polyring import CoefficientField, PolyRing
from .Freemap import FreeMap
from .Hypersurface import HypersurfaceRing, RModulePresentation
from .Matfact import mf_new, mf_cokernel
from .errors import JobFileError, InvalidParameter

logger = logging.getLogger(__name__)

OPTIONS = ("max_steps", "assume_stable_at")


def _isint(value):
    return isinstance(value, int) and not isinstance(value, bool)


def _matrix(value, what):
    """
    check that `value` is a list of rows, each a list of polynomial strings or integers.
    """
    if not isinstance(value, list) or not all(isinstance(row, list) for row in value):
        raise JobFileError("%s must be a list of rows, got %r" % (what, value))
    for row in value:
        for e in row:
            if not isinstance(e, str) and not _isint(e):
                raise JobFileError("%s: entry %r is neither a polynomial string nor an integer" % (what, e))
    return value


def parse_field(value):
    """
    "rational", "prime:p" or {"prime": p}
    """
    if isinstance(value, dict):
        if set(value) != {"prime"} or not _isint(value["prime"]):
            raise JobFileError("field object must be {\"prime\": p}, got %r" % (value,))
        return CoefficientField("prime", value["prime"])
    if isinstance(value, str):
        return CoefficientField.fromstring(value)
    raise JobFileError("bad field %r" % (value,))


class JobFile:
    """
    A loaded job: `ring` is the HypersurfaceRing, `modules` maps names to
    presentations, `factorizations` holds the validated factorizations of the
    modules given as "mf".
    """
    def __init__(self, ring, modules, factorizations, pairs, options):
        self.ring = ring
        self.modules = modules
        self.factorizations = factorizations
        self.pairs = pairs
        self.options = options

    @staticmethod
    def load(path, field=None, variables=None):
        try:
            with open(path, encoding="utf-8") as fh:
                d = json.load(fh)
        except OSError as e:
            raise JobFileError("cannot read job file %s: %s" % (path, e))
        except json.JSONDecodeError as e:
            raise JobFileError("job file %s is not valid JSON: %s" % (path, e))
        return JobFile.fromdict(d, field, variables)

    @staticmethod
    def fromdict(d, field=None, variables=None):
        """
        build a job from its JSON object; `field` and `variables` override the file's values.
        """
        if not isinstance(d, dict):
            raise JobFileError("job must be a JSON object")
        for key in ("variables", "f"):
            if key not in d and not (key == "variables" and variables):
                raise JobFileError("job is missing %r" % key)
        F = field or parse_field(d.get("field", "rational"))
        names = variables or d["variables"]
        if not isinstance(names, list) or not names or not all(isinstance(v, str) for v in names):
            raise JobFileError("variables must be a nonempty list of names, got %r" % (names,))
        if not isinstance(d["f"], str):
            raise JobFileError("f must be a polynomial string, got %r" % (d["f"],))
        Q = PolyRing(F, names)
        ring = HypersurfaceRing(Q, Q.parse(d["f"]))

        entries = d.get("modules", {})
        if not isinstance(entries, dict):
            raise JobFileError("modules must be an object mapping names to modules, got %r" % (entries,))
        modules = {}
        factorizations = {}
        for name, spec in entries.items():
            if not isinstance(spec, dict) or len(spec) == 0:
                raise JobFileError("module %r needs a presentation, free or mf entry" % name)
            if "presentation" in spec:
                table = _matrix(spec["presentation"], "module %r: presentation" % name)
                rows = spec.get("rows")
                if rows is not None and (not _isint(rows) or rows < 0):
                    raise JobFileError("module %r: rows must be a nonnegative integer, got %r" % (name, rows))
                modules[name] = RModulePresentation.fromstrings(ring, table, name, rows)
            elif "free" in spec:
                if not _isint(spec["free"]) or spec["free"] < 0:
                    raise JobFileError("module %r: free must be a nonnegative integer, got %r" % (name, spec["free"]))
                modules[name] = RModulePresentation.free(ring, spec["free"], name)
            elif "mf" in spec:
                mfspec = spec["mf"]
                if not isinstance(mfspec, dict) or "A" not in mfspec or "B" not in mfspec:
                    raise JobFileError("module %r: mf needs matrices A and B" % name)
                A = FreeMap.fromstrings(Q, _matrix(mfspec["A"], "module %r: mf A" % name))
                B = FreeMap.fromstrings(Q, _matrix(mfspec["B"], "module %r: mf B" % name))
                mf = mf_new(A, B, ring, name)
                factorizations[name] = mf
                modules[name] = mf_cokernel(mf)
            else:
                raise JobFileError("module %r: unknown kind %s" % (name, ", ".join(spec)))

        pairlist = d.get("pairs", [])
        if not isinstance(pairlist, list):
            raise JobFileError("pairs must be a list, got %r" % (pairlist,))
        pairs = []
        for pair in pairlist:
            if not isinstance(pair, list) or len(pair) != 2 or not all(isinstance(n, str) for n in pair):
                raise JobFileError("pairs are lists of two module names, got %r" % (pair,))
            for name in pair:
                if name not in modules:
                    raise JobFileError("pair refers to unknown module %r" % name)
            pairs.append(tuple(pair))

        options = d.get("options", {})
        if not isinstance(options, dict):
            raise JobFileError("options must be an object, got %r" % (options,))
        options = dict(options)
        for key in options:
            if key not in OPTIONS:
                raise JobFileError("unknown option %r" % key)
            if options[key] is not None and not _isint(options[key]):
                raise InvalidParameter("option %s must be an integer" % key)
        logger.debug("job: %s, %d modules, %d pairs", ring.describe(), len(modules), len(pairs))
        return JobFile(ring, modules, factorizations, pairs, options)
