"""Input language: expressions in z, point literals, divisors, curves, pair documents.

The grammar is documented in ``docs/grammar.md``.  Parsing evaluates
expressions directly to exact :class:`RationalFunction` values; printing
produces canonical text with ``parse(print(x)) == x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import DpdError, SemanticError, SyntaxErrorAt
from .points import INF, CurvePoint, sorted_points
from .scalars import Gauss, format_gauss, format_rational

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t]+)
    |(?P<num>\d+)
    |(?P<name>[A-Za-z_][A-Za-z_0-9]*)
    |(?P<op>[-+*/^()\[\],=])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str, line: int = 1, column: int = 1) -> list:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SyntaxErrorAt(f"unexpected character {text[pos]!r}", line, column + pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append(Token(kind, m.group(), line, column + pos))
        pos = m.end()
    tokens.append(Token("end", "", line, column + len(text)))
    return tokens


class _Parser:
    def __init__(self, tokens, env=None):
        self.tokens = tokens
        self.pos = 0
        self.env = env or {}

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def error(self, message: str, tok: Optional[Token] = None):
        tok = tok or self.tok
        what = "end of input" if tok.kind == "end" else repr(tok.text)
        return SyntaxErrorAt(f"{message}, found {what}", tok.line, tok.column)

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind == "end":
            raise self.error(f"expected {text!r}")
        return self.advance()

    def at(self, *texts) -> bool:
        return self.tok.kind == "op" and self.tok.text in texts

    # expr := term (('+' | '-') term)*
    def expr(self):
        value = self.term()
        while self.at("+", "-"):
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    # term := unary (('*' | '/') unary)*
    def term(self):
        value = self.unary()
        while self.at("*", "/"):
            op_tok = self.advance()
            rhs = self.unary()
            if op_tok.text == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise SyntaxErrorAt("division by zero", op_tok.line, op_tok.column)
                value = value / rhs
        return value

    # unary := ('-' | '+') unary | power
    def unary(self):
        if self.at("-"):
            self.advance()
            return -self.unary()
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    # power := atom ('^' exponent)?
    def power(self):
        base = self.atom()
        if self.at("^"):
            caret = self.advance()
            n = self.exponent(caret)
            if n < 0 and base.is_zero():
                raise SyntaxErrorAt("negative power of zero", caret.line, caret.column)
            return base**n
        return base

    # exponent := ['-'] INT | '(' ['-'] INT ')'
    def exponent(self, caret: Token) -> int:
        paren = False
        if self.at("("):
            self.advance()
            paren = True
        sign = 1
        if self.at("-"):
            self.advance()
            sign = -1
        if self.tok.kind != "num":
            raise self.error("expected an integer exponent after '^'")
        n = sign * int(self.advance().text)
        if paren:
            self.expect(")")
        return n

    def atom(self):
        from .funcfield import ZV, RationalFunction

        tok = self.tok
        if tok.kind == "num":
            self.advance()
            return RationalFunction.constant(int(tok.text))
        if tok.kind == "name":
            self.advance()
            if tok.text == "z":
                return ZV
            if tok.text == "i":
                return RationalFunction.constant(Gauss(0, 1))
            if tok.text in self.env:
                return self.env[tok.text]
            raise SyntaxErrorAt(f"unknown name {tok.text!r}", tok.line, tok.column)
        if self.at("("):
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        raise self.error("expected a number, 'z', 'i' or '('")

    def finish(self):
        if self.tok.kind != "end":
            raise self.error("unexpected trailing input")


def parse_expression(text: str, env=None, line: int = 1, column: int = 1):
    """Parse an expression in z (and optional named values) to a RationalFunction."""
    p = _Parser(tokenize(text, line, column), env)
    value = p.expr()
    p.finish()
    return value


def _constant_of(value, tok: Token) -> Gauss:
    if not value.is_constant():
        raise SyntaxErrorAt("point coordinates must not involve z", tok.line, tok.column)
    return value.constant_value()


def _point(p: _Parser) -> CurvePoint:
    tok = p.tok
    if tok.kind == "name" and tok.text in ("inf", "oo"):
        p.advance()
        return INF
    return CurvePoint(_constant_of(p.expr(), tok))


def parse_point(text: str, line: int = 1, column: int = 1) -> CurvePoint:
    p = _Parser(tokenize(text.strip(), line, column))
    pt = _point(p)
    p.finish()
    return pt


def parse_rational(text: str) -> Fraction:
    value = parse_expression(text)
    c = _constant_of(value, Token("num", text, 1, 1))
    if not c.is_real():
        raise SyntaxErrorAt(f"{text!r} is not a rational number", 1, 1)
    return c.re


def _divisor_terms(p: _Parser):
    terms: dict = {}
    positions: dict = {}
    if p.tok.kind == "num" and p.tok.text == "0" and p.tokens[p.pos + 1].kind == "end":
        p.advance()
        return terms, positions
    first = True
    while True:
        sign = 1
        if p.at("+", "-"):
            sign = -1 if p.advance().text == "-" else 1
        elif not first:
            raise p.error("expected '+' or '-' between divisor terms")
        first = False
        coef = Fraction(1)
        if not p.at("["):
            coef = _divisor_coefficient(p)
            p.expect("*")
        bracket = p.expect("[")
        pt = _point(p)
        p.expect("]")
        terms[pt] = terms.get(pt, Fraction(0)) + sign * coef
        positions.setdefault(pt, bracket)
        if p.tok.kind == "end":
            return terms, positions


def _divisor_coefficient(p: _Parser) -> Fraction:
    tok = p.tok
    if p.at("("):
        p.advance()
        value = p.expr()
        p.expect(")")
        c = _constant_of(value, tok)
    else:
        if tok.kind != "num":
            raise p.error("expected a rational coefficient or '['")
        num = int(p.advance().text)
        den = 1
        if p.at("/"):
            p.advance()
            if p.tok.kind != "num":
                raise p.error("expected a denominator")
            den = int(p.advance().text)
            if den == 0:
                raise SyntaxErrorAt("zero denominator", tok.line, tok.column)
        c = Gauss(Fraction(num, den))
    if not c.is_real():
        raise SyntaxErrorAt("divisor coefficients must be rational", tok.line, tok.column)
    return c.re


def parse_divisor_with_positions(text: str, line: int = 1, column: int = 1):
    from .curves import QDivisor

    p = _Parser(tokenize(text, line, column))
    terms, positions = _divisor_terms(p)
    p.finish()
    return QDivisor(terms), positions


def parse_divisor(text: str, line: int = 1, column: int = 1):
    return parse_divisor_with_positions(text, line, column)[0]


def parse_curve(text: str, line: int = 1, column: int = 1):
    from .curves import RealCurve

    p = _Parser(tokenize(text, line, column))
    tok = p.tok
    if tok.kind != "name" or tok.text not in ("P1", "p1"):
        raise p.error("expected 'P1 minus [...]'")
    p.advance()
    if p.tok.kind != "name" or p.tok.text != "minus":
        raise p.error("expected 'minus'")
    p.advance()
    p.expect("[")
    removed = [_point(p)]
    while p.at(","):
        p.advance()
        removed.append(_point(p))
    p.expect("]")
    p.finish()
    return RealCurve(removed)


# -- documents ---------------------------------------------------------------

_KEY = re.compile(r"^(\s*)([A-Za-z_]+)\s*:\s?")


@dataclass
class PairDocument:
    """A parsed pair document; ``pair()`` runs the validity check."""

    source: str
    curve: object
    D: object
    h: object
    spans: dict = field(default_factory=dict)

    def pair(self):
        from .dpd import dpd_validate

        return dpd_validate(self.curve, self.D, self.h)

    def __str__(self):
        return format_document(self.curve, self.D, self.h)


def parse_document(text: str) -> PairDocument:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0]
        if not stripped.strip():
            continue
        m = _KEY.match(stripped)
        if m is None:
            col = len(stripped) - len(stripped.lstrip()) + 1
            raise SyntaxErrorAt("expected 'key: value'", lineno, col)
        key = m.group(2)
        if key not in ("curve", "D", "h"):
            raise SyntaxErrorAt(f"unknown key {key!r}", lineno, len(m.group(1)) + 1)
        if key in values:
            raise SyntaxErrorAt(f"duplicate key {key!r}", lineno, len(m.group(1)) + 1)
        values[key] = (stripped[m.end():].rstrip(), lineno, m.end() + 1)
    for key in ("curve", "D", "h"):
        if key not in values:
            raise SyntaxErrorAt(f"missing key {key!r}", len(text.splitlines()) or 1, 1)

    ctext, cline, ccol = values["curve"]
    curve = parse_curve(ctext, cline, ccol)
    try:
        curve.validate()
    except DpdError as exc:
        raise SemanticError(str(exc), cline, ccol) from exc

    dtext, dline, dcol = values["D"]
    D, positions = parse_divisor_with_positions(dtext, dline, dcol)
    for pt in D.support():
        if not curve.contains(pt):
            tok = positions.get(pt)
            line, col = (tok.line, tok.column) if tok else (dline, dcol)
            raise SemanticError(f"support point {pt} removed from curve", line, col)

    htext, hline, hcol = values["h"]
    h = parse_expression(htext, line=hline, column=hcol)
    if h.is_zero():
        raise SemanticError("h must be nonzero", hline, hcol)
    spans = {k: (v[1], v[2]) for k, v in values.items()}
    return PairDocument(text, curve, D, h, spans)


def parse_pair(text: str) -> PairDocument:
    return parse_document(text)


# -- printing ----------------------------------------------------------------


def _coef_body(c: Gauss):
    """(negative?, body) for a coefficient printed in front of a monomial."""
    if c.is_real():
        return c.re < 0, format_rational(abs(c.re))
    if not c.re:
        return c.im < 0, format_gauss(Gauss(0, abs(c.im)))
    return False, f"({format_gauss(c)})"


def format_poly(p) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c.is_zero():
            continue
        if k == 0:
            if c.is_real() or not c.re:
                neg, body = _coef_body(c)
            else:
                neg, body = False, format_gauss(c) if len(p.coeffs) == 1 else f"({format_gauss(c)})"
        else:
            mono = "z" if k == 1 else f"z^{k}"
            if c == 1 or c == -1:
                neg, body = c == -1, mono
            else:
                neg, body = _coef_body(c)
                body = f"{body}*{mono}"
        parts.append((neg, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _single_term(p) -> bool:
    return sum(1 for c in p.coeffs if not c.is_zero()) == 1


def format_rf(f) -> str:
    num = format_poly(f.num)
    if f.den.degree == 0:
        return num
    if not _single_term(f.num) or (f.num.degree == 0 and not f.num.lc().is_real() and f.num.lc().re):
        num = f"({num})"
    den = format_poly(f.den)
    if not _single_term(f.den):
        den = f"({den})"
    return f"{num}/{den}"


def format_point(p: CurvePoint) -> str:
    return str(p)


def format_divisor(D) -> str:
    items = D.items()
    if not items:
        return "0"
    out = ""
    for k, (pt, c) in enumerate(items):
        neg = c < 0
        mag = abs(c)
        body = f"[{format_point(pt)}]" if mag == 1 else f"{format_rational(mag)}*[{format_point(pt)}]"
        if k == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def format_curve(C) -> str:
    return "P1 minus [" + ", ".join(format_point(p) for p in sorted_points(C.removed)) + "]"


def format_document(curve, D, h) -> str:
    return f"curve: {format_curve(curve)}\nD: {format_divisor(D)}\nh: {format_rf(h)}\n"
