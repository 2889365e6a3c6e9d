"""
The hypersurface ring R = Q/f, finitely presented R-modules and their
free resolutions over R.
"""
import logging
from functools import lru_cache, cached_property

from .Freemap import FreeMap
from .Groebner import FreeElement, LiftingBasis, buchberger, submodule_basis, syzygies, \
        kdim_quotient, is_origin_supported, INFINITE
from .errors import InvalidParameter, RingMismatch, NoStabilization, NonConstantUnit

logger = logging.getLogger(__name__)


class HypersurfaceRing:
    """
    R = Q/f with Q = k[x0..xn] and f a nonzero polynomial without constant term.
    """
    def __init__(self, ambient, f):
        if f.ring != ambient:
            raise RingMismatch("f is not in %s" % ambient.describe())
        if f.iszero():
            raise InvalidParameter("f must be nonzero")
        if f.constantcoeff() != 0:
            raise InvalidParameter("f = %s has a nonzero constant term, the origin is not on the hypersurface" % f)
        self.ambient = ambient
        self.f = f
        self.gb_f = buchberger([FreeElement.fromcolumn(ambient, [f])])
        self.dim = ambient.nvars - 1

    def reduce(self, p):
        """
        normal form of `p` modulo f
        """
        if p.ring != self.ambient:
            raise RingMismatch("%s is not in %s" % (p, self.ambient.describe()))
        if not p.terms:
            return p
        return p.divide(self.f)[1]

    def describe(self):
        return "%s / (%s)" % (self.ambient.describe(), self.f)

    def __eq__(self, other):
        return isinstance(other, HypersurfaceRing) and self.ambient == other.ambient and self.f == other.f

    def __hash__(self):
        return hash((self.ambient, self.f))

    def __repr__(self):
        return "HypersurfaceRing(%s)" % self.describe()


def r_normalize(m, ring):
    """
    replace every entry by its normal form modulo f
    """
    if m.ring != ring.ambient:
        raise RingMismatch("matrix over %s, ring is %s" % (m.ring.describe(), ring.describe()))
    return m.apply(ring.reduce).withflag(True)


class RModulePresentation:
    """
    The R-module coker(matrix), with `matrix` an r x c FreeMap kept in normal form modulo f.

    The free module R^r is presented by an r x 0 matrix, the zero module by a 0 x 0 matrix.
    """
    def __init__(self, ring, matrix, label=None):
        self.ring = ring
        self.matrix = r_normalize(matrix, ring)
        self.label = label

    @classmethod
    def free(cls, ring, rank, label=None):
        return cls(ring, FreeMap.zero(ring.ambient, rank, 0), label or ("R^%d" % rank if rank != 1 else "R"))

    @classmethod
    def zeromodule(cls, ring):
        return cls(ring, FreeMap.zero(ring.ambient, 0, 0), "0")

    @classmethod
    def fromstrings(cls, ring, table, label=None, rows=None):
        """
        presentation from a matrix of polynomial strings; `rows` is needed for
        matrices without columns, where the table holds no entries.
        """
        if table and table[0]:
            m = FreeMap.fromstrings(ring.ambient, table)
        else:
            m = FreeMap.zero(ring.ambient, len(table) if rows is None else rows, 0)
        return cls(ring, m, label)

    @property
    def gens(self):
        return self.matrix.rows

    def iszero(self):
        return self.length() == 0

    def directsum(self, *others):
        for o in others:
            if o.ring != self.ring:
                raise RingMismatch("direct sum of modules over %s and %s" % (self.ring.describe(), o.ring.describe()))
        mods = (self,) + others
        label = "+".join("(%s)" % (m.label or "?") for m in mods)
        return RModulePresentation(self.ring, FreeMap.blockdiag(self.ring.ambient, [m.matrix for m in mods]), label)

    @cached_property
    def relationbasis(self):
        """
        Groebner basis over Q of the column span of the matrix plus f * Q^r
        """
        amb = self.ring.ambient
        z = amb.zero()
        columns = self.matrix.columns()
        for j in range(self.gens):
            columns.append([self.ring.f if i == j else z for i in range(self.gens)])
        return submodule_basis(amb, self.gens, columns)

    def kdim(self):
        """
        dimension over k of the module, INFINITE when unbounded
        """
        if self.gens == 0:
            return 0
        return kdim_quotient(self.relationbasis, self.gens)

    def origin_supported(self):
        if self.gens == 0:
            return True
        return is_origin_supported(self.relationbasis, self.gens)

    def length(self):
        """
        length of the module, INFINITE when it is not supported at the origin alone
        """
        if not self.origin_supported():
            return INFINITE
        return self.kdim()

    def contains(self, column):
        """
        True when the vector `column` is zero in the module
        """
        return self.relationbasis.contains(FreeElement.fromcolumn(self.ring.ambient, list(column)))

    def tostrings(self):
        return self.matrix.tostrings()

    def __eq__(self, other):
        return isinstance(other, RModulePresentation) and self.ring == other.ring and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.ring, self.matrix))

    def __repr__(self):
        return "RModulePresentation(%s, %dx%d)" % (self.label, self.matrix.rows, self.matrix.cols)


def minimalize_tracked(m, ring=None):
    """
    Eliminate constant unit entries of `m`, one pivot at a time.

    Returns the reduced matrix and the list of (row, col) pivots, as indices
    into the original matrix.  With `ring` given, entries are kept in normal
    form modulo f.  Raises NonConstantUnit when an entry with a nonzero
    constant term remains that is not itself a constant.
    """
    F = m.ring.field
    E = [list(row) for row in m.entries]
    rows = list(range(m.rows))
    cols = list(range(m.cols))
    pivots = []
    while True:
        found = None
        for a, row in enumerate(E):
            for b, e in enumerate(row):
                if e.terms and e.isconstant():
                    found = (a, b)
                    break
            if found:
                break
        if not found:
            break
        a, b = found
        uinv = F.inverse(E[a][b].constantcoeff())
        prow = [e.scale(uinv) for e in E[a]]
        newE = []
        for i, row in enumerate(E):
            if i == a:
                continue
            fac = row[b]
            if fac.terms:
                newrow = [row[k] - fac * prow[k] for k in range(len(row)) if k != b]
            else:
                newrow = row[:b] + row[b+1:]
            if ring is not None:
                newrow = [ring.reduce(e) for e in newrow]
            newE.append(newrow)
        pivots.append((rows[a], cols[b]))
        del rows[a]
        del cols[b]
        E = newE

    for i, row in enumerate(E):
        for j, e in enumerate(row):
            if e.constantcoeff() != 0:
                raise NonConstantUnit(rows[i], cols[j], e)

    result = FreeMap(m.ring, E, len(rows), len(cols), m.overR)
    return result, pivots


def minimalize(m, ring=None):
    """
    Gaussian elimination on constant unit entries; the localized cokernel is unchanged.
    """
    return minimalize_tracked(m, ring)[0]


def _raw_syzygy(d, ring):
    """
    generators of ker(d : R^c -> R^r), normalized, without zero columns.
    """
    amb = ring.ambient
    if d.cols == 0:
        return FreeMap.zero(amb, 0, 0, True)
    big = d.withflag(False).hstack(FreeMap.identity(amb, d.rows).scale(ring.f))
    S = syzygies(big)
    return r_normalize(S.rowslice(0, d.cols), ring).dropzerocolumns()


def _prune(T, ring):
    """
    drop the columns of T that are redundant, i.e. the ones where a syzygy of T has a unit entry.
    """
    if T.cols == 0:
        return T
    _, pivots = minimalize_tracked(_raw_syzygy(T, ring), ring)
    return T.dropcolumns(row for row, _ in pivots)


def r_syzygy(d, ring):
    """
    A minimal generating set of ker(d) over R, as the columns of the returned matrix.
    """
    if d.ring != ring.ambient:
        raise RingMismatch("matrix over %s, ring is %s" % (d.ring.describe(), ring.describe()))
    return _prune(_raw_syzygy(d, ring), ring)


class RResolution:
    """
    A free resolution ... -> F_2 -d2-> F_1 -d1-> F_0 of a module over R.

    `differentials[i-1]` is d_i.  When `stabilization` is (s, mf), the
    resolution continues periodically with d_{s+1} = mf.A, d_{s+2} = mf.B,
    d_{s+3} = mf.A, ...  A finite resolution ends with a differential
    without columns; its stabilization is the empty factorization.
    """
    def __init__(self, module, differentials, stabilization=None, finite=False):
        self.module = module
        self.differentials = list(differentials)
        self.stabilization = stabilization
        self.finite = finite

    @property
    def ring(self):
        return self.module.ring

    def differential(self, i):
        """
        the matrix of d_i : F_i -> F_{i-1}, i >= 1
        """
        if i < 1:
            raise InvalidParameter("differentials are numbered from 1, got %d" % i)
        if i <= len(self.differentials):
            return self.differentials[i - 1]
        amb = self.ring.ambient
        if self.finite:
            return FreeMap.zero(amb, 0, 0, True)
        if self.stabilization is None:
            raise NoStabilization(len(self.differentials),
                    "d_%d requested, only %d differentials computed" % (i, len(self.differentials)))
        s, mf = self.stabilization
        if (i - s - 1) % 2 == 0:
            return r_normalize(mf.A, self.ring)
        return r_normalize(mf.B, self.ring)

    def rank(self, i):
        """rank of the free module F_i"""
        if i == 0:
            return self.differential(1).rows
        return self.differential(i).cols

    def check_complex(self, upto=None):
        """
        True when d_i * d_(i+1) vanishes modulo f for i < upto
        """
        upto = upto or len(self.differentials) + 2
        for i in range(1, upto):
            a, b = self.differential(i), self.differential(i + 1)
            if a.cols != b.rows:
                return False
            if not r_normalize(a.withflag(False) @ b.withflag(False), self.ring).iszero():
                return False
        return True

    def __repr__(self):
        shapes = ", ".join("%dx%d" % d.shape() for d in self.differentials)
        return "RResolution(%s: %s, stabilization %s)" % (self.module.label, shapes,
                None if self.stabilization is None else self.stabilization[0])


def _factorization_from(A, ring):
    """
    The matrix B with A*B = B*A = f*I over Q, when A is square and such a B exists.
    """
    from .Matfact import MatrixFactorization

    if not A.issquare() or A.rows == 0:
        return None
    amb = ring.ambient
    A = A.withflag(False)
    lb = LiftingBasis(A)
    z = amb.zero()
    columns = []
    for j in range(A.rows):
        col = lb.lift([ring.f if i == j else z for i in range(A.rows)])
        if col is None:
            return None
        columns.append(col)
    B = FreeMap.fromcolumns(amb, A.rows, columns)
    fI = FreeMap.identity(amb, A.rows).scale(ring.f)
    if A @ B != fI or B @ A != fI:
        return None
    return MatrixFactorization(ring, A, B)


def default_max_steps(ring):
    return 2 * (ring.ambient.nvars + 2)


def resolve(M, max_steps=None, detect=True):
    """
    Minimal free resolution of M over R.

    With `detect`, stops as soon as a differential extends to a matrix
    factorization, raising NoStabilization after `max_steps` differentials.
    Without it, exactly `max_steps` differentials are computed (fewer for
    finite resolutions).
    """
    if max_steps is None:
        max_steps = default_max_steps(M.ring)
    if max_steps < 2:
        raise InvalidParameter("max_steps must be at least 2, got %d" % max_steps)
    return _resolve_cached(M, M.label, max_steps, detect)


# `label` is part of the key: presentations compare equal regardless of their labels
@lru_cache(maxsize=256)
def _resolve_cached(M, label, max_steps, detect):
    from .Matfact import MatrixFactorization

    ring = M.ring
    current = minimalize(M.matrix, ring)
    diffs = []
    while True:
        if current.cols == 0:
            diffs.append(current)
            logger.debug("resolution of %s is finite, %d differentials", M.label, len(diffs))
            empty = MatrixFactorization(ring, FreeMap.zero(ring.ambient, 0, 0), FreeMap.zero(ring.ambient, 0, 0))
            return RResolution(M, diffs, (len(diffs), empty), finite=True)
        if not detect and len(diffs) == max_steps:
            return RResolution(M, diffs)
        T = _raw_syzygy(current, ring)
        T, pivots = minimalize_tracked(T, ring)
        current = current.dropcolumns(row for row, _ in pivots)
        T = T.dropzerocolumns()
        diffs.append(current)
        logger.debug("resolution of %s: d_%d is %dx%d", M.label, len(diffs), current.rows, current.cols)
        if detect:
            mf = _factorization_from(current, ring)
            if mf is not None:
                s = len(diffs) - 1
                logger.info("resolution of %s stabilizes at %d with a %dx%d factorization",
                            M.label, s, mf.size, mf.size)
                return RResolution(M, diffs, (s, mf))
            if len(diffs) >= max_steps:
                raise NoStabilization(max_steps)
        current = T


def tensor_presentations(M, N):
    """
    M (x) N presented by [phi (x) I | I (x) psi]; generator (k, l) sits at k*gens(N) + l.
    """
    if M.ring != N.ring:
        raise RingMismatch("tensor product of modules over %s and %s" % (M.ring.describe(), N.ring.describe()))
    phi, psi = M.matrix.withflag(False), N.matrix.withflag(False)
    m = phi.kron_identity(psi.rows).hstack(psi.identity_kron(phi.rows))
    return RModulePresentation(M.ring, m, "%s(x)%s" % (M.label, N.label))
