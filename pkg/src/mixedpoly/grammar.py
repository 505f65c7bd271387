"""Text grammar for mixed polynomials.

Grammar (no implicit multiplication, ^ binds tighter than * which binds
tighter than + and -):

    expr   := ['-' | '+'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INTEGER]
    atom   := NUMBER | NUMBER 'i' | 'i' | VAR | 'conj' '(' VAR ')'
            | '(' expr ')'
    VAR    := 'z1' .. 'z9'

An exponent on conj applies to the conjugated variable: conj(z1)^2 is
the square of zbar_1.  ``format_poly`` produces a canonical rendering
that parses back to the same polynomial with bit-identical
coefficients.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .poly import MixedPolynomial

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)(?P<imag>i?)
  | (?P<var>z[1-9])
  | (?P<conj>conj)
  | (?P<iunit>i)
  | (?P<op>[-+*^()])
""", re.VERBOSE)

_MAX_VARS = 9


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup if m.lastgroup != "imag" else "number"
        if m.group("ws") is None:
            if m.group("number") is not None:
                kind = "imag" if m.group("imag") else "number"
                tokens.append((kind, m.group("number"), pos))
            elif m.group("iunit") is not None:
                tokens.append(("imag", "1", pos))
            elif m.group("var") is not None:
                tokens.append(("var", m.group("var"), pos))
            elif m.group("conj") is not None:
                tokens.append(("conj", "conj", pos))
            else:
                tokens.append(("op", m.group("op"), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, value, pos = self.peek()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)
        self.advance()

    def parse(self) -> MixedPolynomial:
        poly = self.expr()
        kind, value, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {value!r}", pos)
        return poly

    def expr(self) -> MixedPolynomial:
        kind, value, _ = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            negate = value == "-"
            self.advance()
        poly = self.term()
        if negate:
            poly = -poly
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                rhs = self.term()
                poly = poly - rhs if value == "-" else poly + rhs
            else:
                return poly

    def term(self) -> MixedPolynomial:
        poly = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                poly = poly * self.factor()
            else:
                return poly

    def factor(self) -> MixedPolynomial:
        base = self.atom()
        kind, value, pos = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, pos = self.peek()
            if kind != "number" or not re.fullmatch(r"\d+", value):
                raise ParseError("exponent must be a non-negative integer", pos)
            self.advance()
            return base ** int(value)
        return base

    def atom(self) -> MixedPolynomial:
        kind, value, pos = self.advance()
        if kind == "number":
            return MixedPolynomial.constant(_MAX_VARS, float(value))
        if kind == "imag":
            return MixedPolynomial.constant(_MAX_VARS, complex(0.0, float(value)))
        if kind == "var":
            return MixedPolynomial.variable(_MAX_VARS, int(value[1]) - 1)
        if kind == "conj":
            self.expect_op("(")
            vkind, vvalue, vpos = self.advance()
            if vkind != "var":
                raise ParseError("conj() takes a single variable", vpos)
            self.expect_op(")")
            return MixedPolynomial.conj_variable(_MAX_VARS, int(vvalue[1]) - 1)
        if kind == "op" and value == "(":
            poly = self.expr()
            self.expect_op(")")
            return poly
        raise ParseError(f"unexpected {value!r}" if value else "unexpected end of input", pos)


def _shrink(f: MixedPolynomial, n) -> MixedPolynomial:
    """Trim trailing unused variables so n is the highest index in use."""
    used = 1
    for (nu, mu), _ in f.terms:
        for j in range(f.n):
            if nu[j] or mu[j]:
                used = max(used, j + 1)
    if n is not None:
        if n < used:
            raise ParseError(f"text uses z{used} but n={n} was requested", 0)
        used = n
    return MixedPolynomial(
        used, {(nu[:used], mu[:used]): c for (nu, mu), c in f.terms})


def parse(text: str, n: int = None) -> MixedPolynomial:
    """Parse polynomial text.

    The variable count defaults to the highest z-index used; pass ``n``
    to embed the result in a larger ambient space (text cannot express
    variables that appear in no term).
    """
    return _shrink(_Parser(text).parse(), n)


def _float_text(x: float) -> str:
    if x.is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def _coeff_parts(c: complex) -> tuple[str, str]:
    """(sign, magnitude text) for a canonical coefficient rendering."""
    re_, im = c.real, c.imag
    if im == 0.0:
        sign = "-" if re_ < 0 else "+"
        return sign, _float_text(abs(re_))
    if re_ == 0.0:
        sign = "-" if im < 0 else "+"
        return sign, _float_text(abs(im)) + "i"
    imag_sign = "-" if im < 0 else "+"
    return "+", f"({_float_text(re_)}{imag_sign}{_float_text(abs(im))}i)"


def _monomial_text(nu, mu) -> str:
    parts = []
    for j, e in enumerate(nu):
        if e:
            parts.append(f"z{j + 1}" + (f"^{e}" if e > 1 else ""))
    for j, e in enumerate(mu):
        if e:
            parts.append(f"conj(z{j + 1})" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts)


def format_poly(f: MixedPolynomial) -> str:
    """Canonical text form; parse(format_poly(f)) == f exactly."""
    if f.is_zero():
        return "0"
    if f.n > _MAX_VARS:
        raise ParseError(f"grammar supports at most {_MAX_VARS} variables", 0)
    pieces = []
    for (nu, mu), c in f.terms:
        mono = _monomial_text(nu, mu)
        sign, mag = _coeff_parts(c)
        if mono and mag == "1" and c.imag == 0.0:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = mag
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
