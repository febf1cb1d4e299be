"""Text syntax for polynomials.

Grammar (whitespace ignored)::

    expr    := ['+' | '-'] term (('+' | '-') term)*
    term    := power (['*'] power)*          # juxtaposition multiplies
    power   := primary ['^' exponent]
    exponent:= INT | 'p'                      # p is the field characteristic
    primary := INT | 't' | 'x' | 'x' INT | '(' expr ')'

Integer literals are element codes (radix-p indices, the order of
:func:`~sqfsparse.ffield.enumerate_field`), so in GF(4) the literal ``2`` is
the generator g, not 1 + 1.  ``x`` abbreviates ``x1`` when there is a single
x-variable.
"""
from __future__ import annotations

import re

from .ffield import FieldDescriptor
from .polyring import TPoly, XPoly

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>x\d*|t|p)|(?P<op>[-+*^()]))")


class PolyParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        self.text, self.pos = text, pos
        super().__init__(f"{msg} at position {pos}\n  {text}\n  {' ' * pos}^")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            while text[pos].isspace():
                pos += 1
            raise PolyParseError(text, pos, f"unexpected character {text[pos]!r}")
        kind = m.lastgroup
        start = m.start(kind)
        toks.append((kind, m.group(kind), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, field: FieldDescriptor, nvars: int | None):
        self.text, self.field = text, field
        self.toks = _tokenize(text)
        self.i = 0
        idx = [int(v[1:]) for k, v, _ in self.toks if k == "var" and v.startswith("x") and len(v) > 1]
        bare = [pos for k, v, pos in self.toks if k == "var" and v == "x"]
        for k, v, pos in self.toks:
            if k == "var" and v.startswith("x") and len(v) > 1 and int(v[1:]) == 0:
                raise PolyParseError(text, pos, "x-variables are numbered from 1")
        inferred = max(idx + ([1] if bare else []), default=0)
        if nvars is None:
            nvars = inferred
        elif inferred > nvars:
            pos = next(pos for k, v, pos in self.toks if k == "var" and v.startswith("x")
                       and (int(v[1:]) if len(v) > 1 else 1) > nvars)
            raise PolyParseError(text, pos, f"variable index exceeds {nvars} x-variables")
        if bare and nvars != 1:
            raise PolyParseError(text, bare[0], "bare 'x' is only allowed with one x-variable")
        self.nvars = nvars

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolyParseError(self.text, tok[2], msg)

    def parse(self) -> XPoly:
        if self.peek()[0] == "end":
            self.fail("empty polynomial")
        f = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return f

    def expr(self) -> XPoly:
        sign = None
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = self.take()[1]
        acc = self.term()
        if sign == "-":
            acc = -acc
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def _starts_primary(self, tok) -> bool:
        return tok[0] == "int" or (tok[0] == "var" and tok[1] != "p") or tok[1] == "("

    def term(self) -> XPoly:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = acc * self.power()
            elif self._starts_primary(tok):
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> XPoly:
        base = self.primary()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            tok = self.take()
            if tok[0] == "int":
                e = int(tok[1])
            elif tok == ("var", "p", tok[2]):
                e = self.field.p
            else:
                self.fail("exponent must be an integer or p", tok)
            return base**e
        return base

    def primary(self) -> XPoly:
        tok = self.take()
        kind, val, pos = tok
        F, nv = self.field, self.nvars
        if kind == "int":
            code = int(val)
            if code >= F.q:
                self.fail(f"literal {code} is not an element code of GF({F.spec}) (codes are 0..{F.q - 1})", tok)
            return XPoly.constant(F, nv, code)
        if kind == "var":
            if val == "t":
                return XPoly.var(F, nv, 0)
            if val == "p":
                self.fail("'p' may only appear as an exponent", tok)
            return XPoly.var(F, nv, int(val[1:]) if len(val) > 1 else 1)
        if val == "(":
            inner = self.expr()
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return inner
        self.fail(f"unexpected {val!r}" if kind != "end" else "unexpected end of input", tok)


def parse_xpoly(text: str, field: FieldDescriptor, nvars: int | None = None) -> XPoly:
    """Parse ``text`` as an element of F_q[t][x_1..x_nvars].

    With ``nvars=None`` the number of x-variables is the largest index used.
    """
    return _Parser(text, field, nvars).parse()


def parse_tpoly(text: str, field: FieldDescriptor) -> TPoly:
    return parse_xpoly(text, field, nvars=0).to_tpoly()


def _monomial(code: int, names: list[str], e: tuple) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    if code != 1 or not parts:
        parts.insert(0, str(code))
    return "*".join(parts)


def _var_names(nvars: int) -> list[str]:
    if nvars == 1:
        return ["t", "x"]
    return ["t"] + [f"x{i}" for i in range(1, nvars + 1)]


def format_xpoly(f: XPoly) -> str:
    """Deterministic text form: terms by descending total degree, then lex."""
    if not f:
        return "0"
    names = _var_names(f.nvars)
    # x-variables before t, so x-degree dominates the ordering
    order = sorted(f.terms.items(), key=lambda it: (sum(it[0]), it[0][1:], it[0][0]), reverse=True)
    return " + ".join(_monomial(c, names, e) for e, c in order)


def format_tpoly(u: TPoly) -> str:
    if not u:
        return "0"
    return " + ".join(_monomial(c, ["t"], (k,)) for k, c in reversed(list(enumerate(u.coeffs))) if c)
