"""
Recursive descent parser for the polynomial text grammar.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-' factor | '+' factor | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Juxtaposition is not multiplication, `2x` is an error.
Division is only allowed by nonzero constants, so that rational
coefficients like `1/2*x^2` can be written.
"""
from .readers import TextReader
from .errors import PolySyntaxError, NegativeExponent


class PolyParser:
    def __init__(self, text, ring):
        self.rd = TextReader(text)
        self.ring = ring

    def parse(self):
        p = self.expr()
        if not self.rd.eof():
            raise self.rd.error("unexpected token")
        return p

    def expr(self):
        p = self.term()
        while self.rd.testop("+") or self.rd.testop("-"):
            op = self.rd.readtoken().text
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.factor()
        while self.rd.testop("*") or self.rd.testop("/"):
            tok = self.rd.readtoken()
            q = self.factor()
            if tok.text == "*":
                p = p * q
            else:
                if not q.isconstant() or q.iszero():
                    raise PolySyntaxError("division by a non-constant or zero", self.rd.text, tok.pos)
                F = self.ring.field
                p = p.scale(F.inverse(q.constantcoeff()))
        return p

    def factor(self):
        if self.rd.testop("-"):
            self.rd.readtoken()
            return -self.factor()
        if self.rd.testop("+"):
            self.rd.readtoken()
            return self.factor()
        return self.power()

    def power(self):
        base = self.atom()
        if self.rd.testop("^"):
            self.rd.readtoken()
            tok = self.rd.peek()
            if tok.kind == "op" and tok.text == "-":
                raise NegativeExponent("negative exponent at column %d" % tok.pos)
            return base ** self.rd.readint()
        return base

    def atom(self):
        tok = self.rd.readtoken()
        if tok.kind == "int":
            return self.ring.constant(int(tok.text))
        if tok.kind == "name":
            return self.ring.var(tok.text)
        if tok.kind == "op" and tok.text == "(":
            p = self.expr()
            self.rd.readop(")")
            return p
        raise self.rd.error("expected a number, variable or '('", tok)


def parse_poly(text, ring):
    """
    parse `text` into a canonical Polynomial of `ring`.
    """
    return PolyParser(text, ring).parse()
