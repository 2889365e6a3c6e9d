"""
Groebner bases for submodules of free modules Q^r, ideals being rank 1.

Module terms are (component, exponents) pairs, ordered position-over-term
with component 0 the highest.  Basis elements are kept monic.
"""
import logging
import math

from .Polyring import monomial_mul, monomial_div, monomial_divides, monomial_lcm
from .Freemap import FreeMap
from .errors import RankMismatch, RingMismatch

logger = logging.getLogger(__name__)

INFINITE = math.inf


class FreeElement:
    """
    An element of the free module Q^rank.

    `terms` is a tuple of (component, exponents, coefficient) sorted descending
    in the position-over-term order.
    """
    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring, rank, terms):
        self.ring = ring
        self.rank = rank
        self.terms = terms

    @classmethod
    def fromdict(cls, ring, rank, d):
        key = ring.order.modulekey
        items = sorted(((k, c) for k, c in d.items() if c != 0), key=lambda t: key(t[0]), reverse=True)
        return cls(ring, rank, tuple((k[0], k[1], c) for k, c in items))

    @classmethod
    def fromcolumn(cls, ring, column, offset=0, rank=None):
        """
        the vector with entries `column`, placed from component `offset` on.
        """
        d = {}
        for i, p in enumerate(column):
            for m, c in p.terms:
                d[(offset + i, m)] = c
        return cls.fromdict(ring, len(column) + offset if rank is None else rank, d)

    def todict(self):
        return {(comp, m): c for comp, m, c in self.terms}

    def tocolumn(self, start=0, stop=None):
        """
        the polynomial entries of components start..stop-1
        """
        stop = self.rank if stop is None else stop
        parts = [[] for _ in range(stop - start)]
        for comp, m, c in self.terms:
            if start <= comp < stop:
                parts[comp - start].append((m, c))
        return [self.ring.frompairs(p) for p in parts]

    def iszero(self):
        return not self.terms

    def lead(self):
        return self.terms[0]

    def leadcomponent(self):
        return self.terms[0][0]

    def monic(self):
        if not self.terms:
            return self
        F = self.ring.field
        inv = F.inverse(self.terms[0][2])
        return FreeElement(self.ring, self.rank, tuple((k, m, F.reduce(c * inv)) for k, m, c in self.terms))

    def __eq__(self, other):
        return isinstance(other, FreeElement) and self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, self.terms))

    def __repr__(self):
        return "FreeElement(%s)" % ", ".join(str(p) for p in self.tocolumn())


class GroebnerBasis:
    """
    A reduced Groebner basis of a submodule of Q^rank.
    """
    def __init__(self, ring, rank, generators):
        self.ring = ring
        self.rank = rank
        self.order = ring.order
        self.generators = list(generators)
        # leading terms, indexed by component
        self.leads = {}
        for g in self.generators:
            comp, m, _ = g.terms[0]
            self.leads.setdefault(comp, []).append((m, g))

    def leadterms(self):
        return [(g.terms[0][0], g.terms[0][1]) for g in self.generators]

    def divisor(self, comp, m):
        """
        Returns the first generator whose leading term divides (comp, m), or None
        """
        for lm, g in self.leads.get(comp, ()):
            if monomial_divides(lm, m):
                return g
        return None

    def reducedict(self, rem):
        """
        Fully reduce the term dict `rem` (consumed), returning the remainder dict.
        """
        F = self.ring.field
        key = self.order.modulekey
        result = {}
        while rem:
            t = max(rem, key=key)
            a = rem.pop(t)
            g = self.divisor(*t)
            if g is None:
                result[t] = a
                continue
            q = monomial_div(t[1], g.terms[0][1])
            for comp, m, c in g.terms[1:]:
                k = (comp, monomial_mul(m, q))
                v = F.reduce(rem.get(k, 0) - a * c)
                if v == 0:
                    rem.pop(k, None)
                else:
                    rem[k] = v
        return result

    def normal_form(self, e):
        if e.rank != self.rank:
            raise RankMismatch("element of rank %d, basis of rank %d" % (e.rank, self.rank))
        if e.ring != self.ring:
            raise RingMismatch("%s and %s" % (e.ring.describe(), self.ring.describe()))
        return FreeElement.fromdict(self.ring, self.rank, self.reducedict(e.todict()))

    def contains(self, e):
        return self.normal_form(e).iszero()

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return "GroebnerBasis(rank %d, %d generators)" % (self.rank, len(self.generators))


def _spolynomial(g1, g2):
    """
    S-vector of two monic elements with leading terms in the same component.
    """
    F = g1.ring.field
    l = monomial_lcm(g1.terms[0][1], g2.terms[0][1])
    q1 = monomial_div(l, g1.terms[0][1])
    q2 = monomial_div(l, g2.terms[0][1])
    d = {}
    for comp, m, c in g1.terms[1:]:
        k = (comp, monomial_mul(m, q1))
        d[k] = F.reduce(d.get(k, 0) + c)
    for comp, m, c in g2.terms[1:]:
        k = (comp, monomial_mul(m, q2))
        d[k] = F.reduce(d.get(k, 0) - c)
    return {k: c for k, c in d.items() if c != 0}


def buchberger(gens, order=None, ring=None, rank=None):
    """
    Reduced Groebner basis of the submodule generated by `gens`.

    `ring` and `rank` are only needed when `gens` is empty.  When `order` is
    given and differs from the ring's order, the generators are moved into a
    ring with that order first.
    """
    gens = list(gens)
    ring = ring or gens[0].ring
    rank = rank if rank is not None else gens[0].rank
    for g in gens:
        if g.rank != rank:
            raise RankMismatch("generators of rank %d and %d" % (rank, g.rank))
        if g.ring.variables != ring.variables or g.ring.field != ring.field:
            raise RingMismatch("%s and %s" % (g.ring.describe(), ring.describe()))
    if order is not None and order != ring.order:
        ring = ring.withorder(order)
    gens = [FreeElement.fromdict(ring, rank, g.todict()) for g in gens]

    G = []
    pairs = set()

    def add(h):
        n = len(G)
        comp = h.terms[0][0]
        for i, g in enumerate(G):
            if g.terms[0][0] == comp:
                pairs.add((i, n))
        G.append(h)

    for g in gens:
        if not g.iszero():
            add(g.monic())

    def lcmdegree(p):
        return sum(monomial_lcm(G[p[0]].terms[0][1], G[p[1]].terms[0][1]))

    def chain(i, j):
        comp = G[i].terms[0][0]
        l = monomial_lcm(G[i].terms[0][1], G[j].terms[0][1])
        for k, g in enumerate(G):
            if k == i or k == j or g.terms[0][0] != comp:
                continue
            if not monomial_divides(g.terms[0][1], l):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                return True
        return False

    npairs = nzero = 0
    while pairs:
        i, j = min(pairs, key=lambda p: (lcmdegree(p), p))
        pairs.remove((i, j))
        li, lj = G[i].terms[0][1], G[j].terms[0][1]
        if rank == 1 and all(a == 0 or b == 0 for a, b in zip(li, lj)):
            # coprime leading monomials
            continue
        if chain(i, j):
            continue
        npairs += 1
        work = GroebnerBasis(ring, rank, G)
        h = work.reducedict(_spolynomial(G[i], G[j]))
        if not h:
            nzero += 1
            continue
        add(FreeElement.fromdict(ring, rank, h).monic())

    logger.debug("buchberger: rank %d, %d S-pairs reduced, %d to zero, %d elements",
                 rank, npairs, nzero, len(G))
    return GroebnerBasis(ring, rank, _reduce_basis(ring, rank, G))


def _reduce_basis(ring, rank, G):
    """
    make a Groebner basis minimal, then interreduce the tails.
    """
    minimal = []
    for i, g in enumerate(G):
        comp, m, _ = g.terms[0]
        redundant = False
        for k, h in enumerate(G):
            if k == i or h.terms[0][0] != comp:
                continue
            hm = h.terms[0][1]
            if monomial_divides(hm, m) and (hm != m or k < i):
                redundant = True
                break
        if not redundant:
            minimal.append(g)

    result = []
    for i, g in enumerate(minimal):
        others = GroebnerBasis(ring, rank, minimal[:i] + minimal[i+1:])
        comp, m, c = g.terms[0]
        tail = others.reducedict({(k, mm): cc for k, mm, cc in g.terms[1:]})
        tail[(comp, m)] = c
        result.append(FreeElement.fromdict(ring, rank, tail))
    key = ring.order.modulekey
    result.sort(key=lambda g: key((g.terms[0][0], g.terms[0][1])), reverse=True)
    return result


def normal_form(e, gb):
    return gb.normal_form(e)


def submodule_basis(ring, rank, columns):
    """
    Groebner basis of the submodule of Q^rank generated by the given columns
    (lists of polynomials).
    """
    return buchberger([FreeElement.fromcolumn(ring, col) for col in columns], ring=ring, rank=rank)


class LiftingBasis:
    """
    Groebner basis of the columns (m_j, e_j) of the stacked matrix [m; I]
    inside Q^(r+c), the m block dominating in position-over-term.

    Elements of the basis living entirely in the identity block generate the
    syzygies of m; the normal form of (v, 0) decides membership of v in the
    column span of m and yields the cofactors.
    """
    def __init__(self, m):
        self.map = m
        self.ring = m.ring
        self.r = m.rows
        self.c = m.cols
        rank = self.r + self.c
        gens = []
        for j, col in enumerate(m.columns()):
            d = {}
            for i, p in enumerate(col):
                for mono, coef in p.terms:
                    d[(i, mono)] = coef
            d[(self.r + j, (0,) * self.ring.nvars)] = self.ring.field.convert(1)
            gens.append(FreeElement.fromdict(self.ring, rank, d))
        self.gb = buchberger(gens, ring=self.ring, rank=rank)

    def syzygies(self):
        """
        Returns a c x s FreeMap whose columns generate the kernel of m.
        """
        cols = []
        for g in self.gb.generators:
            if g.terms[0][0] >= self.r:
                cols.append(g.tocolumn(self.r, self.r + self.c))
        return FreeMap.fromcolumns(self.ring, self.c, cols)

    def lift(self, v):
        """
        Returns coefficients a with m * a = v, or None when v is not in the column span.
        """
        e = FreeElement.fromcolumn(self.ring, list(v), 0, self.r + self.c)
        nf = self.gb.normal_form(e)
        if nf.terms and nf.terms[0][0] < self.r:
            return None
        return [-p for p in nf.tocolumn(self.r, self.r + self.c)]


def syzygies(m):
    """
    columns generating the kernel of m : Q^c -> Q^r, as a c x s FreeMap over Q.
    """
    if m.cols == 0:
        return FreeMap.zero(m.ring, 0, 0)
    return LiftingBasis(m).syzygies()


def standard_monomials(gb, rank, limit=None):
    """
    Returns the list of standard (component, exponents) pairs, or None when
    there are infinitely many (or more than `limit`).
    """
    n = gb.ring.nvars
    result = []
    for comp in range(rank):
        leads = [m for m, _ in gb.leads.get(comp, ())]
        if any(not any(m) for m in leads):
            # the unit lies in the submodule, nothing survives in this component
            continue
        for i in range(n):
            if not any(m[i] and not any(m[:i] + m[i+1:]) for m in leads):
                return None
        start = (0,) * n
        seen = {start}
        todo = [start]
        while todo:
            m = todo.pop()
            result.append((comp, m))
            if limit is not None and len(result) > limit:
                return None
            for i in range(n):
                nm = m[:i] + (m[i] + 1,) + m[i+1:]
                if nm in seen:
                    continue
                seen.add(nm)
                if not any(monomial_divides(l, nm) for l in leads):
                    todo.append(nm)
    key = gb.order.modulekey
    result.sort(key=key, reverse=True)
    return result


def kdim_quotient(gb, rank):
    """
    k-dimension of Q^rank / submodule, INFINITE when unbounded.
    """
    std = standard_monomials(gb, rank)
    if std is None:
        return INFINITE
    return len(std)


def is_origin_supported(gb, rank):
    """
    True when the quotient has finite length and every variable acts nilpotently,
    i.e. the quotient is supported at the origin only.
    """
    L = kdim_quotient(gb, rank)
    if L == INFINITE:
        return False
    ring = gb.ring
    one = ring.field.convert(1)
    for comp in range(rank):
        for i in range(ring.nvars):
            exps = tuple(L if k == i else 0 for k in range(ring.nvars))
            e = FreeElement(ring, rank, ((comp, exps, one),))
            if not gb.contains(e):
                return False
    return True
