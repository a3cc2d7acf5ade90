"""Recursive-descent parser for polynomial expressions.

Grammar (tightest binding first): ``^`` with a nonnegative integer literal
exponent, unary minus, ``*``, then ``+``/``-``.  Multiplication is always
explicit; numbers are integers or rational literals ``a/b``.  Variables are
``z1`` .. ``zn``.  The printed form of a Polynomial parses back to the
identical term map.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial

MAX_EXPONENT = 10 ** 6


class ParseError(ValueError):
    """Syntax or semantic error, carrying position and expectation info."""

    def __init__(self, message: str, line: int, column: int,
                 expected: tuple[str, ...] = ()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = expected
        suffix = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{message} at line {line}, column {column}{suffix}")


class _Token:
    __slots__ = ("kind", "value", "line", "column")

    def __init__(self, kind, value, line, column):
        self.kind = kind
        self.value = value
        self.line = line
        self.column = column


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line = 1
    col = 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(_Token("int", int(text[i:j]), line, start_col))
            col += j - i
            i = j
            continue
        if ch == "z":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError("variable name needs an index", line,
                                 start_col, ("z<k>",))
            tokens.append(_Token("var", int(text[i + 1:j]), line, start_col))
            col += j - i
            i = j
            continue
        if ch in "+-*^()/":
            tokens.append(_Token(ch, ch, line, start_col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, start_col)
    tokens.append(_Token("end", None, line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], nvars: int):
        self.tokens = tokens
        self.pos = 0
        self.nvars = nvars

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"unexpected {self._describe(tok)}", tok.line,
                             tok.column, (kind,))
        return self.advance()

    @staticmethod
    def _describe(tok: _Token) -> str:
        return "end of input" if tok.kind == "end" else f"token {tok.value!r}"

    def parse(self) -> Polynomial:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {self._describe(tok)}", tok.line,
                             tok.column, ("+", "-", "*", "end of input"))
        return value

    def expr(self) -> Polynomial:
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.factor()
        while self.peek().kind == "*":
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Polynomial:
        if self.peek().kind == "-":
            self.advance()
            return -self.factor()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek().kind == "^":
            self.advance()
            tok = self.expect("int")
            if tok.value > MAX_EXPONENT:
                raise ParseError("exponent overflow", tok.line, tok.column)
            return base ** tok.value
        return base

    def atom(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            value = Fraction(tok.value)
            if self.peek().kind == "/":
                self.advance()
                denom = self.expect("int")
                if denom.value == 0:
                    raise ParseError("zero denominator", denom.line,
                                     denom.column)
                value = Fraction(tok.value, denom.value)
            return Polynomial.constant(self.nvars, value)
        if tok.kind == "var":
            self.advance()
            if not 1 <= tok.value <= self.nvars:
                raise ParseError(
                    f"unknown variable z{tok.value} (nvars={self.nvars})",
                    tok.line, tok.column)
            return Polynomial.variable(self.nvars, tok.value - 1)
        if tok.kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise ParseError(f"unexpected {self._describe(tok)}", tok.line,
                         tok.column, ("number", "variable", "("))


def parse_polynomial(text: str, nvars: int) -> Polynomial:
    """Parse an expression string into a canonical Polynomial."""
    if nvars < 1:
        raise ValueError("nvars must be at least 1")
    return _Parser(_tokenize(text), nvars).parse()


def format_polynomial(p: Polynomial) -> str:
    """Canonical textual form; round-trips through parse_polynomial."""
    return str(p)
