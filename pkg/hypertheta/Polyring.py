"""
Exact coefficient fields, monomial orders, polynomial rings and polynomials.

Monomials are plain tuples of nonnegative exponents, one per ring variable.
Polynomials keep their terms as a tuple of (exponents, coefficient) pairs,
sorted in strictly descending monomial order, without zero coefficients.
"""
from fractions import Fraction
from sympy import isprime

from .errors import RingMismatch, UnknownVariable, InvalidParameter


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    """a / b, assuming b divides a"""
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(a, b):
    """True when the monomial `a` divides `b`"""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a):
    return sum(a)


class CoefficientField:
    """
    Either the rationals, or the prime field F_p.

    rationals are kept as `Fraction` objects, prime field elements as
    canonical residues in [0, p).
    """
    def __init__(self, kind="rational", p=None):
        if kind == "rational":
            p = None
        elif kind == "prime":
            if not isinstance(p, int) or not isprime(p):
                raise InvalidParameter("prime field needs a prime, got %r" % (p,))
        else:
            raise InvalidParameter("unknown field kind %r" % kind)
        self.kind = kind
        self.p = p

    @staticmethod
    def fromstring(text):
        """
        parse the `--field` flag notation: "rational" or "prime:p"
        """
        if text in ("rational", "QQ", "Q"):
            return CoefficientField()
        if text.startswith("prime:"):
            try:
                p = int(text[6:])
            except ValueError:
                raise InvalidParameter("bad prime in field spec %r" % text)
            return CoefficientField("prime", p)
        raise InvalidParameter("unknown field spec %r, use rational or prime:p" % text)

    def describe(self):
        return "rational" if self.p is None else "prime:%d" % self.p

    def characteristic(self):
        return self.p or 0

    def isperfect(self):
        # both Q and F_p are perfect
        return True

    def convert(self, x):
        """
        Convert an int or Fraction into a canonical field element.
        """
        if self.p is None:
            return Fraction(x)
        x = Fraction(x)
        if x.denominator % self.p == 0:
            raise ZeroDivisionError("%s is not defined in F_%d" % (x, self.p))
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def reduce(self, v):
        """
        bring the result of +, -, * on field elements back in canonical form
        """
        if self.p is None:
            return v
        return v % self.p

    def inverse(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / a
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.reduce(a * self.inverse(b))

    def isnegative(self, c):
        return self.p is None and c < 0

    def format(self, c):
        if self.p is None:
            if c.denominator != 1:
                return "%d/%d" % (c.numerator, c.denominator)
            return "%d" % c.numerator
        return "%d" % c

    def __eq__(self, other):
        return isinstance(other, CoefficientField) and self.p == other.p

    def __hash__(self):
        return hash(("field", self.p))

    def __repr__(self):
        return "CoefficientField(%s)" % self.describe()


RATIONALS = CoefficientField()


def primefield(p):
    return CoefficientField("prime", p)


class MonomialOrder:
    """
    grevlex or lex, with variable precedence x0 > x1 > ... as declared.

    `key` maps an exponent tuple to a sort key; a larger key is a larger monomial.
    Module elements are ordered position-over-term, component 0 highest.
    """
    def __init__(self, kind="grevlex"):
        if kind not in ("grevlex", "lex"):
            raise InvalidParameter("unknown monomial order %r" % kind)
        self.kind = kind
        if kind == "grevlex":
            self.key = self.grevlexkey
        else:
            self.key = self.lexkey

    @staticmethod
    def grevlexkey(exps):
        return (sum(exps), tuple(-e for e in reversed(exps)))

    @staticmethod
    def lexkey(exps):
        return exps

    def modulekey(self, term):
        comp, exps = term
        return (-comp, self.key(exps))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(("order", self.kind))

    def __repr__(self):
        return "MonomialOrder(%s)" % self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


class PolyRing:
    """
    k[x0, ..., xn] with a fixed monomial order.
    """
    def __init__(self, field, variables, order=GREVLEX):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise InvalidParameter("duplicate variable names in %s" % (variables,))
        self.field = field
        self.variables = variables
        self.order = order
        self.nvars = len(variables)
        self.key = order.key

    def index(self, name):
        """
        Returns the position of variable `name`
        """
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable("unknown variable %r, ring has %s" % (name, ", ".join(self.variables)))

    def withorder(self, order):
        return PolyRing(self.field, self.variables, order)

    def extend(self, names):
        """
        Returns a ring with the variables `names` appended.
        """
        return PolyRing(self.field, self.variables + tuple(names), self.order)

    def embed(self, p):
        """
        map a polynomial of a ring whose variables are a prefix of ours into this ring.
        """
        pad = (0,) * (self.nvars - p.ring.nvars)
        return self.frompairs((m + pad, c) for m, c in p.terms)

    def unit(self, i):
        return tuple(1 if k == i else 0 for k in range(self.nvars))

    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field.convert(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, (((0,) * self.nvars, c),))

    def var(self, v):
        """
        Returns the variable given by name or index as a polynomial.
        """
        i = self.index(v) if isinstance(v, str) else v
        return Polynomial(self, ((self.unit(i), self.field.convert(1)),))

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, c=1):
        c = self.field.convert(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, ((tuple(exps), c),))

    def frompairs(self, pairs):
        """
        Build a polynomial from (exponents, coefficient) pairs; duplicates are summed.
        Coefficients must already be field elements.
        """
        d = {}
        F = self.field
        for m, c in pairs:
            d[m] = F.reduce(d.get(m, 0) + c)
        return self.fromdict(d)

    def fromdict(self, d):
        key = self.key
        terms = sorted(((m, c) for m, c in d.items() if c != 0), key=lambda t: key(t[0]), reverse=True)
        return Polynomial(self, tuple(terms))

    def parse(self, text):
        from .polyparser import parse_poly
        return parse_poly(text, self)

    def describe(self):
        return "%s[%s] (%s)" % (self.field.describe(), ",".join(self.variables), self.order.kind)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.variables == other.variables and self.order == other.order)

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return "PolyRing(%s)" % self.describe()


class Polynomial:
    """
    An immutable polynomial in a PolyRing.
    """
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch("%s and %s" % (self.ring.describe(), other.ring.describe()))
            return other
        return self.ring.constant(other)

    def iszero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def isconstant(self):
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def constantcoeff(self):
        """the coefficient of the monomial 1"""
        if self.terms and not any(self.terms[-1][0]):
            return self.terms[-1][1]
        return 0

    def leadmonomial(self):
        return self.terms[0][0]

    def leadcoeff(self):
        return self.terms[0][1]

    def degree(self):
        """total degree, -1 for the zero polynomial"""
        return max((sum(m) for m, _ in self.terms), default=-1)

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, tuple((m, F.reduce(-c)) for m, c in self.terms))

    def __add__(self, other):
        other = self._coerce(other)
        d = dict(self.terms)
        F = self.ring.field
        for m, c in other.terms:
            d[m] = F.reduce(d.get(m, 0) + c)
        return self.ring.fromdict(d)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        F = self.ring.field
        c = F.convert(c)
        if c == 0:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, F.reduce(a * c)) for m, a in self.terms))

    def multerm(self, exps, c):
        """
        multiply by the term c * x^exps, c a field element.
        """
        if c == 0:
            return self.ring.zero()
        F = self.ring.field
        return Polynomial(self.ring, tuple((monomial_mul(m, exps), F.reduce(a * c)) for m, a in self.terms))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._coerce(other)
        if len(other.terms) == 1:
            return self.multerm(*other.terms[0])
        d = {}
        F = self.ring.field
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = monomial_mul(m1, m2)
                d[m] = F.reduce(d.get(m, 0) + c1 * c2)
        return self.ring.fromdict(d)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self):
        if not self.terms:
            return self
        return self.scale(self.ring.field.inverse(self.leadcoeff()))

    def derivative(self, i):
        """
        formal partial derivative by the variable with index `i`.
        """
        F = self.ring.field
        pairs = []
        for m, c in self.terms:
            e = m[i]
            if e:
                pairs.append((m[:i] + (e - 1,) + m[i+1:], F.reduce(c * e)))
        return self.ring.frompairs(pairs)

    def divide(self, g):
        """
        Multivariate division by the single polynomial `g`.
        Returns (q, r) with self = q*g + r and no term of r divisible by lm(g).
        """
        g = self._coerce(g)
        if g.iszero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.ring.field
        key = self.ring.key
        lm, lc = g.terms[0]
        lcinv = F.inverse(lc)
        rem = dict(self.terms)
        quot = {}
        result = {}
        while rem:
            m = max(rem, key=key)
            c = rem.pop(m)
            if not monomial_divides(lm, m):
                result[m] = c
                continue
            q = monomial_div(m, lm)
            a = F.reduce(c * lcinv)
            quot[q] = a
            for gm, gc in g.terms[1:]:
                k = monomial_mul(gm, q)
                v = F.reduce(rem.get(k, 0) - a * gc)
                if v == 0:
                    rem.pop(k, None)
                else:
                    rem[k] = v
        return self.ring.fromdict(quot), self.ring.fromdict(result)

    def substitute_ring(self, ring):
        """the same terms, viewed in another ring with the same variables"""
        return ring.frompairs(self.terms)

    def tostring(self):
        if not self.terms:
            return "0"
        F = self.ring.field
        names = self.ring.variables
        out = []
        for i, (m, c) in enumerate(self.terms):
            neg = F.isnegative(c)
            a = -c if neg else c
            mono = "*".join(names[k] if e == 1 else "%s^%d" % (names[k], e)
                            for k, e in enumerate(m) if e)
            if not mono:
                body = F.format(a)
            elif a == 1:
                body = mono
            else:
                body = "%s*%s" % (F.format(a), mono)
            if i == 0:
                out.append("-" + body if neg else body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.tostring()

    def __repr__(self):
        return "Polynomial(%s)" % self.tostring()

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)


def poly_arith(op, a, b):
    """
    add, sub, mul or scale; `b` is a Polynomial, or a coefficient for scale.
    """
    if op == "add":
        return a + a._coerce(b)
    elif op == "sub":
        return a - a._coerce(b)
    elif op == "mul":
        return a * a._coerce(b)
    elif op == "scale":
        return a.scale(b)
    raise InvalidParameter("unknown polynomial operation %r" % op)


def partial_derivative(p, var):
    """
    d p / d var, with `var` a variable index or name.
    """
    i = p.ring.index(var) if isinstance(var, str) else var
    if not 0 <= i < p.ring.nvars:
        raise UnknownVariable("variable index %d out of range" % i)
    return p.derivative(i)
