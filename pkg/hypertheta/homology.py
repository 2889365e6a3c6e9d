"""
Homology of complexes of presented R-modules, and Tor.
"""
import logging
import math
from dataclasses import dataclass, field

from .Freemap import FreeMap
from .Groebner import LiftingBasis, syzygies, INFINITE
from .Hypersurface import RModulePresentation, r_normalize, minimalize, resolve, tensor_presentations
from .errors import RingMismatch, RankMismatch, CompositeNonzero, IllDefinedMap, \
        NotFiniteLength, PeriodicityCheckFailed, NonConstantUnit, NoStabilization, InvalidParameter

logger = logging.getLogger(__name__)


class PresentedMap:
    """
    A map source -> target of presented modules, given on generators by
    a target.gens x source.gens matrix.
    """
    def __init__(self, source, target, matrix, check=True):
        if source.ring != target.ring:
            raise RingMismatch("map between modules over %s and %s" % (source.ring.describe(), target.ring.describe()))
        if matrix.shape() != (target.gens, source.gens):
            raise RankMismatch("map matrix is %dx%d, expected %dx%d"
                               % (matrix.rows, matrix.cols, target.gens, source.gens))
        self.source = source
        self.target = target
        self.matrix = r_normalize(matrix, source.ring)
        if check:
            self.checkdefined()

    def checkdefined(self):
        """
        the image of every relation of the source must vanish in the target
        """
        images = self.matrix.withflag(False) @ self.source.matrix.withflag(False)
        for j, col in enumerate(images.columns()):
            if not self.target.contains(col):
                raise IllDefinedMap("relation %d of %s does not map to zero in %s"
                                    % (j, self.source.label, self.target.label))

    def compose(self, other):
        """self after other"""
        return PresentedMap(other.source, self.target,
                            self.matrix.withflag(False) @ other.matrix.withflag(False), check=False)

    def __repr__(self):
        return "PresentedMap(%s -> %s)" % (self.source.label, self.target.label)


@dataclass
class HomologyResult:
    presentation: RModulePresentation
    length: float
    origin_supported: bool
    kdim: float

    def todict(self):
        return {
            "length": "infinite" if self.length == INFINITE else self.length,
            "kdim": "infinite" if self.kdim == INFINITE else self.kdim,
            "origin_supported": self.origin_supported,
        }


def module_length(M):
    """
    HomologyResult describing M itself.
    """
    supported = M.origin_supported()
    kdim = M.kdim()
    return HomologyResult(M, kdim if supported else INFINITE, supported, kdim)


def subquotient_homology(alpha, beta, check=True):
    """
    ker(beta) / im(alpha) for X' -alpha-> X -beta-> X''.

    Generators are the columns of K, the X-part of the syzygies of
    [beta | relations of X'' | f*I]; the relations express the columns of
    alpha, the relations of X and f*e_j in those generators.
    """
    X = beta.source
    if alpha.target != X:
        raise RankMismatch("alpha does not land in the source of beta")
    ring = X.ring
    amb = ring.ambient
    X2 = beta.target
    n = X.gens
    if check:
        composite = beta.compose(alpha).matrix
        for j, col in enumerate(composite.columns()):
            if not X2.contains(col):
                raise CompositeNonzero("column %d of the composite is not zero in %s" % (j, X2.label))

    if n == 0:
        H = RModulePresentation.zeromodule(ring)
        return HomologyResult(H, 0, True, 0)

    f = ring.f
    big = beta.matrix.withflag(False).hstack(X2.matrix.withflag(False)) \
        .hstack(FreeMap.identity(amb, X2.gens).scale(f))
    K = syzygies(big).rowslice(0, n).withflag(False).dropzerocolumns()
    k = K.cols
    if k == 0:
        H = RModulePresentation.zeromodule(ring)
        return HomologyResult(H, 0, True, 0)

    lb = LiftingBasis(K)
    relations = lb.syzygies().columns()
    z = amb.zero()
    targets = alpha.matrix.columns() + X.matrix.columns() + \
        [[f if i == j else z for i in range(n)] for j in range(n)]
    for col in targets:
        c = lb.lift(col)
        if c is None:
            raise IllDefinedMap("%s does not map its relations into those of %s" % (beta, X2.label))
        relations.append(c)
    rel = r_normalize(FreeMap.fromcolumns(amb, k, relations), ring).dropzerocolumns()
    try:
        rel = minimalize(rel, ring)
    except NonConstantUnit as e:
        # lengths do not depend on minimality
        logger.debug("homology at %s kept unminimalized: %s", X.label, e)
    H = RModulePresentation(ring, rel, "H(%s)" % X.label)
    result = module_length(H)
    logger.debug("homology at %s: %d generators, kdim %s", X.label, H.gens, result.kdim)
    return result


def tensor_free(F_rank, N):
    """F (x) N for F free of the given rank, presented by I (x) psi"""
    return RModulePresentation(N.ring, N.matrix.withflag(False).identity_kron(F_rank),
                               "R^%d(x)%s" % (F_rank, N.label))


def tor(M, N, i, resolution=None, max_steps=None):
    """
    Tor_i(M, N), computed from a resolution of M (by default the one `resolve` finds).
    """
    if M.ring != N.ring:
        raise RingMismatch("Tor of modules over %s and %s" % (M.ring.describe(), N.ring.describe()))
    if i == 0:
        return module_length(tensor_presentations(M, N))
    res = resolution or resolve(M, max_steps)
    d_i = res.differential(i)
    d_next = res.differential(i + 1)
    n0 = N.gens
    Xprev = tensor_free(d_i.rows, N)
    X = tensor_free(d_i.cols, N)
    Xnext = tensor_free(d_next.cols, N)
    alpha = PresentedMap(Xnext, X, d_next.withflag(False).kron_identity(n0), check=False)
    beta = PresentedMap(X, Xprev, d_i.withflag(False).kron_identity(n0), check=False)
    result = subquotient_homology(alpha, beta, check=False)
    logger.debug("Tor_%d(%s, %s) has length %s", i, M.label, N.label, result.length)
    return result


@dataclass
class StableTorLengths:
    even: int
    odd: int
    index: int
    verified: bool = True
    fallback: bool = False
    lengths: dict = field(default_factory=dict)

    def astuple(self):
        return (self.even, self.odd, self.index)


def _window(M, N, start, res):
    lengths = {}
    for i in range(start, start + 4):
        h = tor(M, N, i, resolution=res)
        if not h.origin_supported:
            raise NotFiniteLength("Tor_%d(%s, %s) is not of finite length" % (i, M.label, N.label))
        lengths[i] = h.length
    for i in (start, start + 1):
        if lengths[i] != lengths[i + 2]:
            raise PeriodicityCheckFailed("length Tor_%d = %s but length Tor_%d = %s"
                                         % (i, lengths[i], i + 2, lengths[i + 2]))
    if start % 2 == 0:
        return lengths[start], lengths[start + 1], lengths
    return lengths[start + 1], lengths[start], lengths


def window_tor_lengths(M, N, start):
    """
    Stable lengths read off Tor_start .. Tor_(start+3) of a resolution computed
    without looking for a matrix factorization.
    """
    if start < 1:
        raise InvalidParameter("the index window must start at 1 or later, got %d" % start)
    res = resolve(M, start + 4, detect=False)
    even, odd, lengths = _window(M, N, start, res)
    return StableTorLengths(even, odd, start, True, True, lengths)


def stable_tor_lengths(M, N, max_steps=None, assume_stable_at=None):
    """
    Lengths of Tor_even and Tor_odd in the periodic range, with the index
    where the resolution became periodic.  When no factorization is found
    and `assume_stable_at` is given, falls back to the index window there.
    """
    try:
        res = resolve(M, max_steps)
    except NoStabilization:
        if assume_stable_at is None:
            raise
        logger.warning("no factorization found for %s, using Tor lengths from index %d on",
                       M.label, assume_stable_at)
        return window_tor_lengths(M, N, assume_stable_at)
    s = res.stabilization[0]
    start = 2 * math.ceil((s + 2) / 2)
    even, odd, lengths = _window(M, N, start, res)
    return StableTorLengths(even, odd, s, True, False, lengths)
