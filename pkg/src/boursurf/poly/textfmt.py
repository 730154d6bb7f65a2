"""Canonical text form of polynomials and the ``.poly`` file format.

A ``.poly`` file has two lines::

    vars: x,y,z
    43046721*z^16 - 859963392*x^4*z^6 + ...

Terms are listed in strictly descending monomial order (grevlex over the
declared variable order unless stated otherwise). Non-real coefficients are
written ``(a/b+c/d*i)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .monomial import MonomialOrder
from .polynomial import GREVLEX, Polynomial, RegistryError
from .rational import GaussianRational


class PolyParseError(ValueError):
    def __init__(self, message: str, line: int, col: int, token: str):
        super().__init__(f"line {line}, column {col}: {message} (at {token!r})")
        self.line = line
        self.col = col
        self.token = token


def _rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _mono(registry, exps) -> str:
    parts = []
    for name, e in zip(registry, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def canonical_text(p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    if p.is_zero():
        return "0"
    out = []
    for idx, (exps, c) in enumerate(p.sorted_terms(order)):
        mono = _mono(p.registry, exps)
        if c.is_real():
            neg = c.re < 0
            mag = -c.re if neg else c.re
            if mono:
                body = mono if mag == 1 else f"{_rat(mag)}*{mono}"
            else:
                body = _rat(mag)
        else:
            sign = "-" if c.im < 0 else "+"
            coeff = f"({_rat(c.re)}{sign}{_rat(abs(c.im))}*i)"
            body = f"{coeff}*{mono}" if mono else coeff
            neg = False
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str, line: int):
    toks = []
    pos = 0
    text = text.rstrip("\n")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", m.group(1), line, start + 1))
        elif m.group(2):
            toks.append(("name", m.group(2), line, start + 1))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise PolyParseError("unexpected character", line, start + 1, ch)
            toks.append((ch, ch, line, start + 1))
        pos = m.end()
    toks.append(("end", "", line, len(text) + 1))
    return toks


class _Parser:
    def __init__(self, toks, registry):
        self.toks = toks
        self.i = 0
        self.registry = registry

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None):
        tok = self.toks[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}")
        self.i += 1
        return tok

    def fail(self, msg):
        kind, text, line, col = self.peek()
        raise PolyParseError(msg, line, col, text or "<end of input>")

    def poly(self):
        total = Polynomial.zero(self.registry)
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        total = total + self.term().scale(sign)
        while self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            total = total + self.term().scale(sign)
        return total

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        kind, text, line, col = self.peek()
        if kind == "int":
            return Polynomial.const(self.registry, self.rational())
        if kind == "(":
            # covers Gaussian coefficients "(a/b+c/d*i)" and grouped subexpressions
            self.take()
            inner = self.poly()
            self.take(")")
            if self.peek()[0] == "^":
                self.take()
                return inner ** int(self.take("int")[1])
            return inner
        if kind == "name":
            self.take()
            if text == "i":
                return Polynomial.const(self.registry, GaussianRational(0, 1))
            if text not in self.registry:
                raise PolyParseError("unknown variable", line, col, text)
            base = Polynomial.var(self.registry, text)
            if self.peek()[0] == "^":
                self.take()
                e = int(self.take("int")[1])
                return base ** e
            return base
        self.fail("expected a coefficient, variable or '('")

    def rational(self) -> Fraction:
        num = int(self.take("int")[1])
        if self.peek()[0] == "/":
            self.take()
            tok = self.peek()
            den = int(self.take("int")[1])
            if den == 0:
                raise PolyParseError("zero denominator", tok[2], tok[3], tok[1])
            return Fraction(num, den)
        return Fraction(num)


def _infer_registry(toks):
    names = []
    for kind, text, _, _ in toks:
        if kind == "name" and text != "i" and text not in names:
            names.append(text)
    return tuple(names)


def parse_expr(text: str, registry=None, line: int = 1) -> Polynomial:
    toks = _tokenize(text, line)
    if registry is None:
        registry = _infer_registry(toks)
    p = _Parser(toks, tuple(registry))
    try:
        out = p.poly()
    except RegistryError as exc:  # pragma: no cover - defensive
        kind, t, ln, col = p.peek()
        raise PolyParseError(str(exc), ln, col, t) from exc
    if p.peek()[0] != "end":
        p.fail("unexpected trailing input")
    return out


def poly_parse(text: str, registry=None) -> Polynomial:
    """Parse ``.poly`` text (header + polynomial) or a bare expression."""
    lines = text.splitlines()
    body_lines = [(n + 1, ln) for n, ln in enumerate(lines) if ln.strip()]
    if body_lines and body_lines[0][1].lstrip().startswith("vars:"):
        n, header = body_lines[0]
        names = header.split(":", 1)[1].strip()
        reg = tuple(v.strip() for v in names.split(",")) if names else ()
        for v in reg:
            if not v.isidentifier():
                raise PolyParseError("bad variable name in header", n, header.index(v) + 1 if v else 1, v)
        if registry is not None and tuple(registry) != reg:
            raise RegistryError(f"header declares {reg}, expected {tuple(registry)}")
        rest = body_lines[1:]
        if len(rest) != 1:
            line = rest[1][0] if len(rest) > 1 else n + 1
            raise PolyParseError("expected exactly one polynomial line", line, 1,
                                 rest[1][1] if len(rest) > 1 else "<end of input>")
        return parse_expr(rest[0][1], reg, rest[0][0])
    if len(body_lines) != 1:
        raise PolyParseError("expected one polynomial", 1, 1, text[:20])
    return parse_expr(body_lines[0][1], registry, body_lines[0][0])


def poly_file_text(p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    return f"vars: {','.join(p.registry)}\n{canonical_text(p, order)}\n"


def write_poly(path, p: Polynomial, order: MonomialOrder = GREVLEX) -> None:
    Path(path).write_text(poly_file_text(p, order), encoding="utf-8")


def read_poly(path) -> Polynomial:
    return poly_parse(Path(path).read_text(encoding="utf-8"))
