"""
Matrices of polynomials, read as maps of free modules.
"""
from .errors import RingMismatch, RankMismatch


class FreeMap:
    """
    An r x c matrix of polynomials, i.e. a map Q^c -> Q^r.

    `overR` marks matrices over the hypersurface ring R = Q/f; such matrices
    hold normal forms modulo f as entries.  The flag is bookkeeping only, all
    arithmetic happens over Q.
    """
    __slots__ = ("ring", "rows", "cols", "entries", "overR")

    def __init__(self, ring, entries, rows=None, cols=None, overR=False):
        entries = tuple(tuple(row) for row in entries)
        self.ring = ring
        self.rows = len(entries) if rows is None else rows
        self.cols = (len(entries[0]) if entries else 0) if cols is None else cols
        if len(entries) != self.rows or any(len(row) != self.cols for row in entries):
            raise RankMismatch("matrix entries do not match the shape %dx%d" % (self.rows, self.cols))
        for row in entries:
            for e in row:
                if e.ring != ring:
                    raise RingMismatch("matrix entry %s not in %s" % (e, ring.describe()))
        self.entries = entries
        self.overR = overR

    @classmethod
    def zero(cls, ring, rows, cols, overR=False):
        z = ring.zero()
        return cls(ring, [[z] * cols for _ in range(rows)], rows, cols, overR)

    @classmethod
    def identity(cls, ring, n, overR=False):
        one, z = ring.one(), ring.zero()
        return cls(ring, [[one if i == j else z for j in range(n)] for i in range(n)], n, n, overR)

    @classmethod
    def fromcolumns(cls, ring, rows, columns, overR=False):
        """
        build from a list of columns, each a list of `rows` polynomials.
        """
        return cls(ring, [[col[i] for col in columns] for i in range(rows)], rows, len(columns), overR)

    @classmethod
    def fromstrings(cls, ring, table, overR=False, cols=None):
        """
        parse a list of rows of polynomial strings.
        """
        entries = [[ring.parse(str(e)) for e in row] for row in table]
        return cls(ring, entries, len(entries), cols, overR)

    @classmethod
    def blockdiag(cls, ring, maps, overR=False):
        rows = sum(m.rows for m in maps)
        cols = sum(m.cols for m in maps)
        z = ring.zero()
        entries = [[z] * cols for _ in range(rows)]
        r0 = c0 = 0
        for m in maps:
            for i in range(m.rows):
                for j in range(m.cols):
                    entries[r0 + i][c0 + j] = m.entries[i][j]
            r0 += m.rows
            c0 += m.cols
        return cls(ring, entries, rows, cols, overR)

    @classmethod
    def blocks(cls, ring, grid, overR=False):
        """
        assemble a block matrix from a grid of FreeMaps with compatible shapes.
        """
        rows = []
        for blockrow in grid:
            height = blockrow[0].rows
            for i in range(height):
                rows.append([e for b in blockrow for e in b.entries[i]])
        cols = sum(b.cols for b in grid[0]) if grid else 0
        return cls(ring, rows, len(rows), cols, overR)

    def shape(self):
        return (self.rows, self.cols)

    def entry(self, i, j):
        return self.entries[i][j]

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def iszero(self):
        return all(e.iszero() for row in self.entries for e in row)

    def issquare(self):
        return self.rows == self.cols

    def isconstant(self):
        return all(e.isconstant() for row in self.entries for e in row)

    def withflag(self, overR):
        return FreeMap(self.ring, self.entries, self.rows, self.cols, overR)

    def apply(self, fn):
        """
        apply `fn` to every entry
        """
        return FreeMap(self.ring, [[fn(e) for e in row] for row in self.entries], self.rows, self.cols, self.overR)

    def _check(self, other):
        if other.ring != self.ring:
            raise RingMismatch("%s and %s" % (self.ring.describe(), other.ring.describe()))

    def __add__(self, other):
        self._check(other)
        if other.shape() != self.shape():
            raise RankMismatch("adding %dx%d and %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        return FreeMap(self.ring, [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
                       self.rows, self.cols, self.overR)

    def __neg__(self):
        return self.apply(lambda e: -e)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        """
        multiply every entry by the polynomial or scalar `c`
        """
        return self.apply(lambda e: e * c)

    def __matmul__(self, other):
        return self.matmul(other)

    def matmul(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise RankMismatch("multiplying %dx%d by %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        z = self.ring.zero()
        entries = []
        for row in self.entries:
            out = []
            for j in range(other.cols):
                acc = z
                for k, a in enumerate(row):
                    if a.terms:
                        b = other.entries[k][j]
                        if b.terms:
                            acc = acc + a * b
                out.append(acc)
            entries.append(out)
        return FreeMap(self.ring, entries, self.rows, other.cols, self.overR)

    def transpose(self):
        return FreeMap(self.ring, [self.column(j) for j in range(self.cols)], self.cols, self.rows, self.overR)

    def hstack(self, other):
        self._check(other)
        if self.rows != other.rows:
            raise RankMismatch("hstack of %d and %d rows" % (self.rows, other.rows))
        return FreeMap(self.ring, [r1 + r2 for r1, r2 in zip(self.entries, other.entries)],
                       self.rows, self.cols + other.cols, self.overR)

    def vstack(self, other):
        self._check(other)
        if self.cols != other.cols:
            raise RankMismatch("vstack of %d and %d columns" % (self.cols, other.cols))
        return FreeMap(self.ring, self.entries + other.entries, self.rows + other.rows, self.cols, self.overR)

    def rowslice(self, a, b):
        return FreeMap(self.ring, self.entries[a:b], b - a, self.cols, self.overR)

    def selectcolumns(self, idx):
        idx = list(idx)
        return FreeMap(self.ring, [[row[j] for j in idx] for row in self.entries], self.rows, len(idx), self.overR)

    def dropcolumns(self, idx):
        idx = set(idx)
        return self.selectcolumns(j for j in range(self.cols) if j not in idx)

    def dropzerocolumns(self):
        return self.selectcolumns(j for j in range(self.cols) if any(row[j].terms for row in self.entries))

    def kron_identity(self, n):
        """
        self (x) I_n, with the generator (k, l) at position k*n + l.
        """
        z = self.ring.zero()
        entries = [[z] * (self.cols * n) for _ in range(self.rows * n)]
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                if e.terms:
                    for l in range(n):
                        entries[i * n + l][j * n + l] = e
        return FreeMap(self.ring, entries, self.rows * n, self.cols * n, self.overR)

    def identity_kron(self, n):
        """
        I_n (x) self, the block diagonal of n copies.
        """
        return FreeMap.blockdiag(self.ring, [self] * n, self.overR)

    def tostrings(self):
        return [[e.tostring() for e in row] for row in self.entries]

    def __eq__(self, other):
        if not isinstance(other, FreeMap):
            return NotImplemented
        return self.ring == other.ring and self.shape() == other.shape() and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "FreeMap(%dx%d%s: %s)" % (self.rows, self.cols, ", over R" if self.overR else "", self.tostrings())
