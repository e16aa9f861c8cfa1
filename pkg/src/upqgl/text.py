"""
Text grammar for RatFunc values and fixture matrices.

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'|'+'] INT)?
    atom   := INT | NAME | '(' expr ')'

Matrix files::

    matrix <rows> <cols> m=<m> n=<n>
    <i> <j> : <expr>          # 1-based flattened indices, omitted = 0
"""

from __future__ import annotations

import re
from pathlib import Path

from .field import REGISTRY, DivisionByZero, RatFunc

_MINUS = "−"


class ParseError(ValueError):
    def __init__(self, msg, line=1, col=1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text, line):
    text = text.replace(_MINUS, "-")
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos or (m.group(0).strip() == "" and m.end() == len(text)):
            break
        num, name, op = m.groups()
        col = m.start(m.lastindex) + 1 if m.lastindex else pos + 1
        if num is not None:
            toks.append(("int", int(num), col))
        elif name is not None:
            toks.append(("name", name, col))
        elif op is not None:
            if op not in "+-*/^()":
                raise ParseError(f"unexpected character {op!r}", line, col)
            toks.append(("op", op, col))
        pos = m.end()
    toks.append(("end", None, len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text, line, allowed):
        self.toks = _tokenize(text, line)
        self.i = 0
        self.line = line
        self.allowed = allowed

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.line, tok[2])

    def expect(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            self.error(f"expected {op!r}", t)

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        v = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            r = self.term()
            v = v + r if op == "+" else v - r
        return v

    def term(self):
        v = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            r = self.unary()
            if tok[1] == "*":
                v = v * r
            else:
                if r.is_zero():
                    raise ParseError("division by zero", self.line, tok[2])
                v = v / r
        return v

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            v = self.unary()
            return -v if t[1] == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            sign = 1
            s = self.peek()
            if s[0] == "op" and s[1] in "+-":
                self.take()
                sign = -1 if s[1] == "-" else 1
            e = self.take()
            if e[0] != "int":
                self.error("exponent must be an integer", e)
            k = sign * e[1]
            if k < 0 and base.is_zero():
                raise ParseError("division by zero", self.line, t[2])
            return base ** k
        return base

    def atom(self):
        t = self.take()
        if t[0] == "int":
            return RatFunc.const(t[1])
        if t[0] == "name":
            if self.allowed is not None and t[1] not in self.allowed:
                self.error(f"unknown variable {t[1]!r}", t)
            return RatFunc.var(t[1])
        if t[0] == "op" and t[1] == "(":
            v = self.expr()
            self.expect(")")
            return v
        self.error("expected a number, variable or '('", t)


def parse_expr(text, *, allowed=None, line=1):
    """Parse a RatFunc.  ``allowed`` defaults to the registered variable names."""
    if allowed is None:
        allowed = set(REGISTRY.names())
    try:
        return _Parser(text, line, allowed).parse()
    except DivisionByZero as exc:
        raise ParseError(str(exc), line, 1) from None


def format_expr(value):
    return value.to_text()


# matrices ---------------------------------------------------------------------

_HEADER = re.compile(r"^matrix\s+(\d+)\s+(\d+)\s+m=(\d+)\s+n=(\d+)\s*$")


def parse_matrix_text(text, *, allowed=None):
    from .superlinalg import GradedSpace, GradedTensor

    header = None
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError("expected 'matrix <rows> <cols> m=<m> n=<n>'", lineno, 1)
            header = tuple(int(x) for x in m.groups())
            continue
        if ":" not in line:
            raise ParseError("expected '<i> <j> : <expr>'", lineno, 1)
        idx, expr = line.split(":", 1)
        parts = idx.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError("bad entry index", lineno, 1)
        i, j = int(parts[0]), int(parts[1])
        rows, cols = header[0], header[1]
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise ParseError(f"entry ({i}, {j}) outside {rows}x{cols}", lineno, 1)
        if (i, j) in entries:
            raise ParseError(f"duplicate entry ({i}, {j})", lineno, 1)
        entries[(i, j)] = parse_expr(expr, allowed=allowed, line=lineno)
    if header is None:
        raise ParseError("empty matrix file", 1, 1)
    rows, cols, m, n = header
    space = GradedSpace(m, n)
    legs = 1
    while space.N ** legs < rows:
        legs += 1
    if rows != cols or space.N ** legs != rows:
        raise ParseError(f"{rows}x{cols} is not a square power of N={space.N}", 1, 1)
    t = GradedTensor(space, legs)
    ent = {(t.unflat(i), t.unflat(j)): v for (i, j), v in entries.items()}
    return GradedTensor(space, legs, ent)


def parse_matrix(path, *, allowed=None):
    return parse_matrix_text(Path(path).read_text(encoding="utf-8"), allowed=allowed)


def format_matrix(t):
    d = t.dim
    lines = [f"matrix {d} {d} m={t.space.m} n={t.space.n}"]
    keyed = sorted((t.flat(r), t.flat(c), v) for (r, c), v in t.entries.items())
    for i, j, v in keyed:
        lines.append(f"{i} {j} : {v.to_text()}")
    return "\n".join(lines) + "\n"
