import re
from .errors import PolySyntaxError


class Token:
    """
    A single lexical item of the polynomial grammar.

    `kind` is one of: "int", "name", "op", "eof".
    """
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind, text, pos):
        self.kind = kind
        self.text = text
        self.pos = pos

    def __repr__(self):
        return "Token(%s, %r, %d)" % (self.kind, self.text, self.pos)


TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
OPERATORS = "+-*/^()"


class TextReader:
    """
    The TextReader object splits polynomial text into tokens.
    all functions raise PolySyntaxError when the text contains a character
    outside the grammar.

    functions starting with `read` advance the current position.
    """
    def __init__(self, text):
        self.text = text
        self.tokens = list(self.tokenize(text))
        self.o = 0

    def tokenize(self, text):
        o = 0
        while True:
            m = TOKEN_RE.match(text, o)
            if not m:
                # only trailing whitespace left
                break
            num, name, op = m.groups()
            if num is not None:
                yield Token("int", num, m.start(1))
            elif name is not None:
                yield Token("name", name, m.start(2))
            else:
                if op not in OPERATORS:
                    raise PolySyntaxError("unexpected character %r" % op, text, m.start(3))
                yield Token("op", op, m.start(3))
            o = m.end()
        yield Token("eof", "", len(text))

    def peek(self):
        """
        Returns the current token without advancing.
        """
        return self.tokens[self.o]

    def testop(self, op):
        """
        returns True when the current token is the operator `op`.
        """
        tok = self.tokens[self.o]
        return tok.kind == "op" and tok.text == op

    def readtoken(self):
        """
        Reads a single token
        """
        tok = self.tokens[self.o]
        if tok.kind != "eof":
            self.o += 1
        return tok

    def readop(self, op):
        """
        Reads the operator `op`, raising when something else is found.
        """
        tok = self.readtoken()
        if tok.kind != "op" or tok.text != op:
            raise self.error("expected %r" % op, tok)
        return tok

    def readint(self):
        """
        Reads a nonnegative integer literal
        """
        tok = self.readtoken()
        if tok.kind != "int":
            raise self.error("expected an integer literal", tok)
        return int(tok.text)

    def error(self, message, tok=None):
        tok = tok or self.peek()
        if tok.kind == "eof":
            message += ", found end of input"
        else:
            message += ", found %r" % tok.text
        return PolySyntaxError(message, self.text, tok.pos)

    def eof(self):
        """
        return True when all tokens have been consumed.
        """
        return self.tokens[self.o].kind == "eof"
