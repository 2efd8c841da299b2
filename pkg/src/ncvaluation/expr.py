"""Text form of free-algebra polynomials.

Grammar (whitespace insignificant)::

    poly := ['+'|'-'] term (('+'|'-') term)*
    term := [rational '*'] word | rational
    word := factor ('*' factor)*
    factor := name ['^' int]
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from .coefficients import QQ, CoefficientRing
from .free_algebra import MonomialOrder, Poly


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class _Tok(NamedTuple):
    kind: str
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*/^])|(?P<bad>.)"
)


def _tokenize(text: str, line: int, col0: int) -> List[_Tok]:
    toks = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group()!r}", line, col0 + m.start())
        toks.append(_Tok(kind, m.group(), m.start()))
    toks.append(_Tok("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text, order, ring, line, col0):
        self.toks = _tokenize(text, line, col0)
        self.i = 0
        self.order = order
        self.ring = ring
        self.line = line
        self.col0 = col0

    def error(self, message, tok=None):
        tok = tok or self.toks[self.i]
        return ParseError(message, self.line, self.col0 + tok.pos)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind, text=None):
        tok = self.peek()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = repr(text) if text else kind
            got = repr(tok.text) if tok.kind != "end" else "end of input"
            raise self.error(f"expected {want}, got {got}")
        return self.take()

    def parse(self):
        terms = []
        sign = 1
        tok = self.peek()
        if tok.kind == "op" and tok.text in "+-":
            sign = -1 if tok.text == "-" else 1
            self.take()
        while True:
            terms.append(self.term(sign))
            tok = self.peek()
            if tok.kind == "end":
                break
            if tok.kind == "op" and tok.text in "+-":
                sign = -1 if tok.text == "-" else 1
                self.take()
                continue
            raise self.error(f"unexpected {tok.text!r}")
        return Poly(self.ring, self.order, terms)

    def rational(self):
        start = self.expect("int")
        num = int(start.text)
        tok = self.peek()
        if tok.kind == "op" and tok.text == "/":
            self.take()
            den_tok = self.peek()
            if den_tok.kind != "int":
                raise self.error("malformed rational: expected denominator", den_tok)
            self.take()
            den = int(den_tok.text)
            if den == 0:
                raise self.error("malformed rational: zero denominator", den_tok)
            value = Fraction(num, den)
        else:
            value = Fraction(num)
        try:
            return self.ring.convert(value)
        except (ValueError, ArithmeticError) as exc:
            raise self.error(str(exc), start) from None

    def term(self, sign):
        coeff = self.ring.one
        tok = self.peek()
        if tok.kind == "int":
            coeff = self.rational()
            nxt = self.peek()
            if not (nxt.kind == "op" and nxt.text == "*"):
                return (), self.ring.mul(coeff, self.ring.convert(sign))
            self.take()
        word = self.word()
        return word, self.ring.mul(coeff, self.ring.convert(sign))

    def word(self):
        letters = list(self.factor())
        while self.peek().kind == "op" and self.peek().text == "*":
            self.take()
            letters.extend(self.factor())
        return tuple(letters)

    def factor(self):
        tok = self.peek()
        if tok.kind != "name":
            got = repr(tok.text) if tok.kind != "end" else "end of input"
            raise self.error(f"expected generator name, got {got}")
        self.take()
        try:
            idx = self.order.alphabet.index(tok.text)
        except KeyError:
            raise self.error(f"unknown generator {tok.text!r}", tok) from None
        power = 1
        if self.peek().kind == "op" and self.peek().text == "^":
            self.take()
            exp_tok = self.peek()
            if exp_tok.kind != "int":
                raise self.error("expected exponent after '^'")
            self.take()
            power = int(exp_tok.text)
            if power < 1:
                raise self.error("exponent must be positive", exp_tok)
        return (idx,) * power


def parse_poly(text: str, order: MonomialOrder, ring: CoefficientRing = QQ, *, line: int = 1, column: int = 1) -> Poly:
    """Parse ``text`` into a :class:`Poly`; errors carry line and column."""
    return _Parser(text, order, ring, line, column).parse()


def format_poly(f: Poly) -> str:
    """Descending terms, explicit ``*`` between letters; ``0`` for zero."""
    if f.is_zero():
        return "0"
    ring = f.ring
    fmt_word = f.order.alphabet.format_word
    out = []
    for k, (word, c) in enumerate(f.terms):
        text = ring.format(c)
        negative = text.startswith("-")
        if negative:
            text = text[1:]
        if word:
            body = fmt_word(word) if text == "1" else f"{text}*{fmt_word(word)}"
        else:
            body = text
        if k == 0:
            out.append(f"-{body}" if negative else body)
        else:
            out.append(f" - {body}" if negative else f" + {body}")
    return "".join(out)
