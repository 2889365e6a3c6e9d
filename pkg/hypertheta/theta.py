"""
The theta invariant of a pair of modules, and the singularity checks
that decide whether it is predicted to vanish.
"""
import logging
from dataclasses import dataclass, field, asdict

from .Groebner import INFINITE, submodule_basis, kdim_quotient, is_origin_supported
from .Matfact import mf_cokernel
from .homology import PresentedMap, subquotient_homology, stable_tor_lengths, tensor_free
from .errors import InvalidParameter, NotFiniteLength

logger = logging.getLogger(__name__)


def _encode(n):
    return "infinite" if n == INFINITE else n


def _decode(n):
    return INFINITE if n == "infinite" else n


@dataclass
class ThetaReport:
    value: int
    even_length: int
    odd_length: int
    stabilization_index: int
    periodicity_verified: bool = True
    fallback: bool = False
    M: str = None
    N: str = None
    notes: list = field(default_factory=list)

    def todict(self):
        d = asdict(self)
        d["theta"] = d.pop("value")
        return d

    @classmethod
    def fromdict(cls, d):
        d = dict(d)
        d["value"] = d.pop("theta")
        return cls(**d)


@dataclass
class SingularityReport:
    isolated_at_origin: bool
    milnor_number: float
    tjurina_number: float
    dim: int
    parity: str
    char_warnings: list = field(default_factory=list)

    def todict(self):
        predicted, why = vanishing_predicted(self)
        return {
            "isolated": self.isolated_at_origin,
            "milnor": _encode(self.milnor_number),
            "tjurina": _encode(self.tjurina_number),
            "dim": self.dim,
            "parity": self.parity,
            "char_warnings": list(self.char_warnings),
            "vanishing_predicted": predicted,
            "justification": why,
        }

    @classmethod
    def fromdict(cls, d):
        return cls(d["isolated"], _decode(d["milnor"]), _decode(d["tjurina"]), d["dim"], d["parity"],
                   list(d.get("char_warnings", [])))


def theta(M, N, max_steps=None, assume_stable_at=None):
    """
    length Tor_even(M, N) - length Tor_odd(M, N) in the periodic range.
    """
    st = stable_tor_lengths(M, N, max_steps, assume_stable_at)
    notes = []
    if st.fallback:
        notes.append("no factorization found, lengths taken from the index window at %d" % st.index)
    else:
        notes.append("resolution of %s periodic from index %d" % (M.label, st.index))
    report = ThetaReport(st.even - st.odd, st.even, st.odd, st.index, st.verified, st.fallback,
                         M.label, N.label, notes)
    logger.info("theta(%s, %s) = %d", M.label, N.label, report.value)
    return report


def periodic_theta(mf, N):
    """
    theta(coker A, N) read off the two-periodic complex ... -A-> R^m -B-> R^m -A-> ...
    tensored with N: length ker(B)/im(A) - length ker(A)/im(B).
    """
    if mf.ring != N.ring:
        raise InvalidParameter("factorization and module live over different rings")
    n0 = N.gens
    X = tensor_free(mf.size, N)
    A = PresentedMap(X, X, mf.A.kron_identity(n0), check=False)
    B = PresentedMap(X, X, mf.B.kron_identity(n0), check=False)
    even = subquotient_homology(A, B, check=False)
    odd = subquotient_homology(B, A, check=False)
    if not even.origin_supported or not odd.origin_supported:
        raise NotFiniteLength("periodic Tor of %s and %s is not of finite length"
                              % (mf_cokernel(mf).label, N.label))
    return even.length - odd.length


def jacobian_check(f, ring):
    """
    Isolatedness at the origin, Milnor and Tjurina numbers of f.
    """
    if f.ring != ring:
        raise InvalidParameter("%s is not in %s" % (f, ring.describe()))
    if f.isconstant():
        raise InvalidParameter("f must not be constant")
    if f.constantcoeff() != 0:
        raise InvalidParameter("f = %s does not vanish at the origin" % f)

    partials = [f.derivative(i) for i in range(ring.nvars)]
    tj = submodule_basis(ring, 1, [[f]] + [[d] for d in partials])
    jac = submodule_basis(ring, 1, [[d] for d in partials])
    isolated = is_origin_supported(tj, 1)
    milnor = kdim_quotient(jac, 1) if is_origin_supported(jac, 1) else INFINITE
    tjurina = kdim_quotient(tj, 1)

    warnings = []
    p = ring.field.characteristic()
    if p:
        seen = set()
        for m, _ in f.terms:
            for i, e in enumerate(m):
                if e and e % p == 0 and (i, e) not in seen:
                    seen.add((i, e))
                    msg = "characteristic %d divides the exponent %d of %s" % (p, e, ring.variables[i])
                    logger.warning(msg)
                    warnings.append(msg)

    dim = ring.nvars - 1
    return SingularityReport(isolated, milnor, tjurina, dim, "even" if dim % 2 == 0 else "odd", warnings)


def vanishing_predicted(report):
    """
    Returns (predicted, justification): theta vanishes for isolated
    singularities of even dimension.
    """
    if not report.isolated_at_origin:
        return False, "singularity is not isolated at the origin"
    if report.dim % 2:
        return False, "dimension %d is odd" % report.dim
    return True, "isolated singularity of even dimension %d over a perfect field" % report.dim
