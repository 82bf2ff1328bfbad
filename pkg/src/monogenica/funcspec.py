"""Tiny expression grammar for naming test functions on the command line.

Atoms: basis elements ``A(k,l)`` and ``phi(k,l)``, the shifted Cauchy
kernel ``kernel(cx,cy,cz)``, monogenic-constant powers ``zeta(p)``, the
coordinate functions ``x0 x1 x2``, the units ``e1 e2 e3`` and real number
literals.  Expressions combine atoms with ``+ - *`` and parentheses;
products are evaluated pointwise in the written (non-commutative) order,
so constant factors attached on the right of a basis atom act as
right-module coefficients.

Parse errors carry the 0-based position in the input string.
"""

from __future__ import annotations

import re
from typing import Callable

from .basis import BasisIndex, appell, cauchy_kernel, phi
from .quaternion import E1, E2, E3, Point3, Quaternion, zeta

__all__ = ["SpecParseError", "parse_function_spec"]

FunctionField = Callable[[Point3], Quaternion]

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+\.\d*|\.\d+|\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*(),]))"
)

_UNITS = {"e1": E1, "e2": E2, "e3": E3}
_COORDS = {"x0": 0, "x1": 1, "x2": 2}


class SpecParseError(ValueError):
    """Malformed function spec; ``position`` is the offending input offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == pos:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                raise SpecParseError(
                    f"unexpected character {stripped[0]!r}", len(text) - len(stripped)
                )
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.next()
        if text != value:
            raise SpecParseError(f"expected {value!r}, found {text or 'end of input'!r}", pos)


def _const(q: Quaternion) -> FunctionField:
    return lambda _x: q


def _coord(which: int) -> FunctionField:
    return lambda x: Quaternion(x.components()[which])


def _number_args(toks: _Tokenizer, count: int) -> list[float]:
    toks.expect("(")
    out = []
    for j in range(count):
        if j:
            toks.expect(",")
        sign = 1.0
        kind, text, pos = toks.peek()
        if text == "-":
            toks.next()
            sign = -1.0
        kind, text, pos = toks.next()
        if kind != "number":
            raise SpecParseError(f"expected a number, found {text or 'end of input'!r}", pos)
        out.append(sign * float(text))
    toks.expect(")")
    return out


def _atom(name: str, pos: int, toks: _Tokenizer) -> FunctionField:
    if name in _UNITS:
        return _const(_UNITS[name])
    if name in _COORDS:
        return _coord(_COORDS[name])
    if name in ("A", "phi"):
        k, l = _number_args(toks, 2)
        if k != int(k) or l != int(l):
            raise SpecParseError(f"{name} needs integer indices", pos)
        try:
            idx = BasisIndex(int(k), int(l)).validate()
        except ValueError as err:
            raise SpecParseError(str(err), pos) from None
        if name == "A":
            return lambda x: appell(idx.k, idx.l, x)
        return lambda x: phi(idx.k, idx.l, x)
    if name == "kernel":
        cx, cy, cz = _number_args(toks, 3)
        center = Point3(cx, cy, cz)
        return lambda x: cauchy_kernel(x - center)
    if name == "zeta":
        (p,) = _number_args(toks, 1)
        if p != int(p) or p < 0:
            raise SpecParseError("zeta needs a nonnegative integer power", pos)
        power = int(p)
        return lambda x: zeta(x) ** power
    raise SpecParseError(f"unknown name {name!r}", pos)


def _primary(toks: _Tokenizer) -> FunctionField:
    kind, text, pos = toks.next()
    if kind == "number":
        return _const(Quaternion(float(text)))
    if kind == "name":
        return _atom(text, pos, toks)
    if text == "(":
        inner = _expr(toks)
        toks.expect(")")
        return inner
    raise SpecParseError(f"expected a term, found {text or 'end of input'!r}", pos)


def _unary(toks: _Tokenizer) -> FunctionField:
    kind, text, pos = toks.peek()
    if text == "-":
        toks.next()
        inner = _unary(toks)
        return lambda x: -inner(x)
    return _primary(toks)


def _term(toks: _Tokenizer) -> FunctionField:
    left = _unary(toks)
    while toks.peek()[1] == "*":
        toks.next()
        right = _unary(toks)
        left = (lambda a, b: lambda x: a(x) * b(x))(left, right)
    return left


def _expr(toks: _Tokenizer) -> FunctionField:
    left = _term(toks)
    while toks.peek()[1] in ("+", "-"):
        _, op, _ = toks.next()
        right = _term(toks)
        if op == "+":
            left = (lambda a, b: lambda x: a(x) + b(x))(left, right)
        else:
            left = (lambda a, b: lambda x: a(x) - b(x))(left, right)
    return left


def parse_function_spec(text: str) -> FunctionField:
    """Compile a function spec into a pointwise evaluator."""
    toks = _Tokenizer(text)
    fn = _expr(toks)
    kind, trailing, pos = toks.peek()
    if kind != "end":
        raise SpecParseError(f"trailing input {trailing!r}", pos)
    return fn
