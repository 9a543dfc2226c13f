"""Parsing of Lie algebra labels in Cartan-type and compact-real-form notation.

Both 'A5+A1+A1+R' and 's(u(6)+u(2))+su(2)' parse to the same LieType.
Accepted atoms: A1..G2 (optionally '^k'), e6/e7/e8/f4/g2, so(n), su(n),
sp(n), u(n), s(...) (removes one abelian summand), R (optionally '^k'),
parenthesized sums and 'k*atom' repetition.
"""
from __future__ import annotations

import re

from .rootsys import LieType, RootSystemError, SimpleType
from .symmetric import plus, so, sp, su, u


class LabelError(RootSystemError):
    pass


_MULT = re.compile(r"(\d+)\*")
_CLASSICAL = re.compile(r"(so|su|sp|u)\((\d+)\)")
_CARTAN = re.compile(r"([A-G])_?(\d+)(?:\^(\d+))?")
_EXC = re.compile(r"(e6|e7|e8|f4|g2)")
_ABEL = re.compile(r"R(?:\^(\d+))?")
_FUNCS = {"so": so, "su": su, "sp": sp, "u": u}


class _Parser:
    def __init__(self, s: str):
        self.s = s.replace(" ", "").replace("⊕", "+").replace("ℝ", "R")
        self.i = 0

    def fail(self) -> LabelError:
        return LabelError(f"cannot parse label {self.s!r} at position {self.i}")

    def parse(self) -> LieType:
        if self.s in ("", "0"):
            return LieType.make([], 0)
        lt = self.expr()
        if self.i != len(self.s):
            raise self.fail()
        return lt

    def expr(self) -> LieType:
        parts = [self.term()]
        while self.s.startswith("+", self.i):
            self.i += 1
            parts.append(self.term())
        return plus(*parts)

    def term(self) -> LieType:
        m = _MULT.match(self.s, self.i)
        if m:
            self.i = m.end()
            a = self.atom()
            return plus(*[a] * int(m.group(1)))
        return self.atom()

    def group(self) -> LieType:
        inner = self.expr()
        if not self.s.startswith(")", self.i):
            raise self.fail()
        self.i += 1
        return inner

    def atom(self) -> LieType:
        s, i = self.s, self.i
        if s.startswith("s(", i):
            self.i += 2
            inner = self.group()
            if inner.abelian < 1:
                raise self.fail()
            return LieType.make(inner.simple, inner.abelian - 1)
        if s.startswith("(", i):
            self.i += 1
            return self.group()
        for pat in (_CLASSICAL, _EXC, _CARTAN, _ABEL):
            m = pat.match(s, i)
            if not m:
                continue
            self.i = m.end()
            if pat is _CLASSICAL:
                return _FUNCS[m.group(1)](int(m.group(2)))
            if pat is _EXC:
                return LieType.make([SimpleType(m.group(1)[0].upper(), int(m.group(1)[1]))])
            if pat is _CARTAN:
                k = int(m.group(3) or 1)
                if m.group(1) == "D" and m.group(2) == "1":
                    return LieType.make([], k)
                return LieType.make([SimpleType(m.group(1), int(m.group(2)))] * k)
            return LieType.make([], int(m.group(1) or 1))
        raise self.fail()


def parse_label(s: str) -> LieType:
    return _Parser(s).parse()
