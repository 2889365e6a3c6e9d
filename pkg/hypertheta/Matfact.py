"""
Matrix factorizations (A, B) of f, with A*B = B*A = f*I over Q, and the
matrix identities built from them.
"""
import logging
from dataclasses import dataclass, field

from .Freemap import FreeMap
from .Hypersurface import HypersurfaceRing, RModulePresentation
from .homology import PresentedMap, subquotient_homology
from .errors import NotAFactorization, RankMismatch, RingMismatch, VariableClash, \
        InvalidParameter, IdentityFailed, ExactnessFailed

logger = logging.getLogger(__name__)


class MatrixFactorization:
    """
    A pair of square matrices over Q with A*B = B*A = f*I.

    The constructor does not check the identity, use `mf_new` for
    untrusted input.
    """
    def __init__(self, ring, A, B, label=None):
        self.ring = ring
        self.A = A.withflag(False)
        self.B = B.withflag(False)
        self.size = A.rows
        self.label = label

    def validate(self):
        """
        raise NotAFactorization naming the first product entry that differs from f*I
        """
        f = self.ring.f
        for name, P in (("A*B", self.A @ self.B), ("B*A", self.B @ self.A)):
            for i in range(self.size):
                for j in range(self.size):
                    want = f if i == j else self.ring.ambient.zero()
                    if P.entry(i, j) != want:
                        raise NotAFactorization("(%s)[%d][%d] = %s, expected %s" % (name, i, j, P.entry(i, j), want))
        return self

    def isvalid(self):
        try:
            self.validate()
        except NotAFactorization:
            return False
        return True

    def tostrings(self):
        return {"A": self.A.tostrings(), "B": self.B.tostrings()}

    def __eq__(self, other):
        return isinstance(other, MatrixFactorization) and self.ring == other.ring \
            and self.A == other.A and self.B == other.B

    def __hash__(self):
        return hash((self.ring, self.A, self.B))

    def __repr__(self):
        return "MatrixFactorization(%s, size %d)" % (self.label, self.size)


def mf_new(A, B, ring, label=None):
    """
    A validated matrix factorization of ring.f
    """
    if A.ring != ring.ambient or B.ring != ring.ambient:
        raise RingMismatch("factorization matrices must be over %s" % ring.ambient.describe())
    if not A.issquare() or not B.issquare() or A.rows != B.rows:
        raise RankMismatch("factorization needs square matrices of equal size, got %dx%d and %dx%d"
                           % (A.rows, A.cols, B.rows, B.cols))
    return MatrixFactorization(ring, A, B, label).validate()


def mf_cokernel(mf):
    """the maximal Cohen-Macaulay module coker(A)"""
    return RModulePresentation(mf.ring, mf.A, mf.label or "coker(A)")


def mf_combine(op, inputs):
    """
    direct_sum: block diagonal sum of a list of factorizations.
    transpose: the swapped factorization (B, A).
    """
    if op == "transpose":
        mf = inputs
        label = "%s^T" % mf.label if mf.label else None
        return MatrixFactorization(mf.ring, mf.B, mf.A, label)
    if op == "direct_sum":
        inputs = list(inputs)
        if not inputs:
            raise InvalidParameter("direct sum of no factorizations")
        ring = inputs[0].ring
        for mf in inputs:
            if mf.ring != ring:
                raise RingMismatch("direct sum of factorizations of %s and %s" % (ring.f, mf.ring.f))
        amb = ring.ambient
        return MatrixFactorization(ring, FreeMap.blockdiag(amb, [mf.A for mf in inputs]),
                                   FreeMap.blockdiag(amb, [mf.B for mf in inputs]),
                                   "+".join(mf.label or "?" for mf in inputs))
    raise InvalidParameter("unknown factorization operation %r" % op)


def knorrer_split(mf, u="u", v="v"):
    """
    The factorization ([[A, uI], [vI, -B]], [[B, uI], [vI, -A]]) of f + u*v in Q[u, v].
    """
    amb = mf.ring.ambient
    for name in (u, v):
        if name in amb.variables:
            raise VariableClash("variable %r already in %s" % (name, amb.describe()))
    if u == v:
        raise VariableClash("the two new variables must differ")
    big = amb.extend([u, v])
    ring = HypersurfaceRing(big, big.embed(mf.ring.f) + big.var(u) * big.var(v))
    m = mf.size
    A = FreeMap(big, [[big.embed(e) for e in row] for row in mf.A.entries], m, m)
    B = FreeMap(big, [[big.embed(e) for e in row] for row in mf.B.entries], m, m)
    uI = FreeMap.identity(big, m).scale(big.var(u))
    vI = FreeMap.identity(big, m).scale(big.var(v))
    A2 = FreeMap.blocks(big, [[A, uI], [vI, -B]])
    B2 = FreeMap.blocks(big, [[B, uI], [vI, -A]])
    label = "knorrer(%s)" % mf.label if mf.label else None
    return mf_new(A2, B2, ring, label)


class LocalizedMatrix:
    """
    A square matrix over Q[1/f]; entry (i, j) is numerator / f^exponent.
    """
    def __init__(self, ring, entries):
        self.ring = ring
        self.entries = [list(row) for row in entries]
        self.size = len(self.entries)

    @classmethod
    def fromfreemap(cls, ring, m, exponent=0):
        return cls(ring, [[(e, exponent) for e in row] for row in m.entries])

    @classmethod
    def identity(cls, ring, n):
        return cls.fromfreemap(ring, FreeMap.identity(ring.ambient, n))

    @classmethod
    def blockdiag(cls, ring, mats):
        n = sum(m.size for m in mats)
        z = ring.ambient.zero()
        entries = [[(z, 0)] * n for _ in range(n)]
        o = 0
        for m in mats:
            for i in range(m.size):
                for j in range(m.size):
                    entries[o + i][o + j] = m.entries[i][j]
            o += m.size
        return cls(ring, entries)

    def exponent(self):
        return max((e for row in self.entries for _, e in row), default=0)

    def cleared(self, k=None):
        """
        the numerator matrix over the common denominator f^k
        """
        k = self.exponent() if k is None else k
        f = self.ring.f
        return FreeMap(self.ring.ambient,
                       [[p * f ** (k - e) for p, e in row] for row in self.entries], self.size, self.size)

    def __neg__(self):
        return LocalizedMatrix(self.ring, [[(-p, e) for p, e in row] for row in self.entries])

    def __matmul__(self, other):
        n = self.size
        f = self.ring.f
        z = self.ring.ambient.zero()
        entries = []
        for i in range(n):
            row = []
            for j in range(n):
                terms = [(self.entries[i][k][0] * other.entries[k][j][0],
                          self.entries[i][k][1] + other.entries[k][j][1]) for k in range(n)]
                terms = [(p, e) for p, e in terms if p.terms]
                k = max((e for _, e in terms), default=0)
                acc = z
                for p, e in terms:
                    acc = acc + p * f ** (k - e)
                row.append((acc, k))
            entries.append(row)
        return LocalizedMatrix(self.ring, entries)

    def __eq__(self, other):
        if not isinstance(other, LocalizedMatrix):
            return NotImplemented
        if self.size != other.size:
            return False
        k = max(self.exponent(), other.exponent())
        return self.cleared(k) == other.cleared(k)

    def tostrings(self):
        out = []
        for row in self.entries:
            out.append([p.tostring() if e == 0 or p.iszero() else "(%s)/f^%d" % (p, e) for p, e in row])
        return out

    def __repr__(self):
        return "LocalizedMatrix(%s)" % self.tostrings()


def _swapmatrix(ring, m):
    """
    the 3m x 3m matrix [[-I, 0, 0], [0, 0, I], [0, I, 0]]
    """
    amb = ring.ambient
    I = FreeMap.identity(amb, m)
    Z = FreeMap.zero(amb, m, m)
    return LocalizedMatrix.fromfreemap(ring, FreeMap.blocks(amb, [[-I, Z, Z], [Z, Z, I], [Z, I, Z]]))


@dataclass
class StarReport:
    size: int
    D: LocalizedMatrix
    Dprime: LocalizedMatrix
    P: LocalizedMatrix
    passed: bool
    inverse_ok: bool
    mixed_variant_matches: bool
    symmetric_variant_matches: bool

    def todict(self):
        return {
            "size": self.size,
            "passed": self.passed,
            "inverse_ok": self.inverse_ok,
            "mixed_variant_matches": self.mixed_variant_matches,
            "symmetric_variant_matches": self.symmetric_variant_matches,
            "D": self.D.tostrings(),
            "Dprime": self.Dprime.tostrings(),
            "P": self.P.tostrings(),
        }


def star_scaffold(A, mf):
    """
    Check P*D(A)*P^-1 = D'(A) over Q[1/f], where D(A) = diag(A, A^-1, I),
    D'(A) = diag(A, I, A^-1) and A^-1 = B/f.

    The report also records whether P*D(B)*P^-1 equals D'(A) and whether it
    equals D'(B); those two are data only.
    """
    ring = mf.ring
    A = A.withflag(False)
    if A == mf.A:
        other = mf.B
    elif A == mf.B:
        other = mf.A
    else:
        raise InvalidParameter("matrix is not part of the factorization")
    m = mf.size
    I = LocalizedMatrix.identity(ring, m)
    P = _swapmatrix(ring, m)

    def D(X, Xinv):
        return LocalizedMatrix.blockdiag(ring, [X, Xinv, I])

    def Dprime(X, Xinv):
        return LocalizedMatrix.blockdiag(ring, [X, I, Xinv])

    LA = LocalizedMatrix.fromfreemap(ring, A)
    LAinv = LocalizedMatrix.fromfreemap(ring, other, 1)
    LB = LocalizedMatrix.fromfreemap(ring, other)
    LBinv = LocalizedMatrix.fromfreemap(ring, A, 1)

    DA = D(LA, LAinv)
    DpA = Dprime(LA, LAinv)
    # P is its own inverse
    passed = P @ DA @ P == DpA
    inverse_ok = LA @ LAinv == I and LAinv @ LA == I
    conjB = P @ D(LB, LBinv) @ P
    report = StarReport(3 * m, DA, DpA, P, passed, inverse_ok,
                        conjB == DpA, conjB == Dprime(LB, LBinv))
    if not passed or not inverse_ok:
        raise IdentityFailed("P*D(A)*P^-1 = D'(A) fails for %s" % (mf.label or "factorization"))
    logger.debug("star identity holds at size %d", 3 * m)
    return report


def _blockmap(amb, grid, m):
    """
    block matrix from a grid of 0, 1 or FreeMap entries, every block m x m
    """
    Z = FreeMap.zero(amb, m, m)
    I = FreeMap.identity(amb, m)
    def block(b):
        if isinstance(b, FreeMap):
            return b
        return I if b == 1 else Z
    return FreeMap.blocks(amb, [[block(b) for b in row] for row in grid])


@dataclass
class SequenceReport:
    name: str
    spots: list = field(default_factory=list)

    @property
    def exact(self):
        return all(length == 0 for _, length in self.spots)

    def todict(self):
        return {"name": self.name, "exact": self.exact,
                "homology_lengths": [length for _, length in self.spots]}


def _check_short_exact(name, first, second, spot0):
    """
    homology of 0 -> X -first-> Y -second-> Z -> 0 at X, Y and Z.
    """

    X, Y, Z = first.source, first.target, second.target
    ring = X.ring
    amb = ring.ambient
    zero = RModulePresentation.zeromodule(ring)
    into = PresentedMap(zero, X, FreeMap.zero(amb, X.gens, 0))
    outof = PresentedMap(Z, zero, FreeMap.zero(amb, 0, Z.gens))
    report = SequenceReport(name)
    for k, (alpha, beta) in enumerate(((into, first), (first, second), (second, outof))):
        h = subquotient_homology(alpha, beta)
        report.spots.append((spot0 + k, h.kdim))
        if h.kdim != 0:
            raise ExactnessFailed("%s is not exact at spot %d, homology of dimension %s"
                                  % (name, spot0 + k, h.kdim), spot0 + k)
    return report


def mirror_double_ses(mf):
    """
    Exactness of the mirror image sequences
        E: 0 -> coker A -B-> R^m -> coker B -> 0
        F: 0 -> coker B -A-> R^m -> coker A -> 0
    and of the two rows of the double short exact sequence built from them
    on X+Z -> Y+Z+X -> Z+X.  Spots are numbered 0..11 in that order.
    """

    ring = mf.ring
    amb = ring.ambient
    m = mf.size
    X = RModulePresentation(ring, mf.A, "coker A")
    Y = RModulePresentation.free(ring, m)
    Z = RModulePresentation(ring, mf.B, "coker B")
    I = FreeMap.identity(amb, m)

    i = PresentedMap(X, Y, mf.B)
    p = PresentedMap(Y, Z, I)
    j = PresentedMap(Z, Y, mf.A)
    q = PresentedMap(Y, X, I)

    XZ = X.directsum(Z)
    YZX = Y.directsum(Z, X)
    ZX = Z.directsum(X)
    row1 = (PresentedMap(XZ, YZX, _blockmap(amb, [[0, mf.A], [0, 0], [1, 0]], m)),
            PresentedMap(YZX, ZX, _blockmap(amb, [[0, 1, 0], [I, 0, 0]], m)))
    row2 = (PresentedMap(XZ, YZX, _blockmap(amb, [[mf.B, 0], [0, 1], [0, 0]], m)),
            PresentedMap(YZX, ZX, _blockmap(amb, [[I, 0, 0], [0, 0, 1]], m)))

    reports = [
        _check_short_exact("E", i, p, 0),
        _check_short_exact("F", j, q, 3),
        _check_short_exact("l(E,F) row 1", *row1, 6),
        _check_short_exact("l(E,F) row 2", *row2, 9),
    ]
    logger.debug("mirror sequences of %s are exact", mf.label)
    return reports
