"""Text notation: ``sigma(a1,...,ak) [b=[b1,...,bk]] [m=[m1,...,mn]]``.

Whitespace is ignored and integers may carry a sign.  ``b`` and ``m`` may
appear in either order, each at most once.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError
from .fibration import SeifertMultilink
from .seifert import SeifertData, seifert

_INT = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class SpecText:
    a: tuple[int, ...]
    b: Optional[tuple[int, ...]] = None
    m: Optional[tuple[int, ...]] = None

    def data(self) -> SeifertData:
        return seifert(self.a, self.b)

    def multilink(self) -> SeifertMultilink:
        if self.m is None:
            raise ParseError("a multiplicity list m=[...] is required", 0)
        return SeifertMultilink(self.data(), self.m)


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def peek_word(self) -> str:
        self.skip()
        m = re.compile(r"[A-Za-z]+").match(self.text, self.pos)
        return m.group(0) if m else ""

    def expect(self, token: str):
        self.skip()
        if not self.text.startswith(token, self.pos):
            found = self.text[self.pos : self.pos + len(token)] or "end of input"
            raise ParseError(f"expected {token!r}, found {found!r}", self.pos)
        self.pos += len(token)

    def integer(self) -> int:
        self.skip()
        m = _INT.match(self.text, self.pos)
        if not m:
            raise ParseError("expected an integer", self.pos)
        self.pos = m.end()
        return int(m.group(0))

    def int_list(self, close: str) -> tuple[int, ...]:
        values = [self.integer()]
        while True:
            self.skip()
            if self.text.startswith(",", self.pos):
                self.pos += 1
                values.append(self.integer())
            else:
                self.expect(close)
                return tuple(values)


def parse_spec(text: str) -> SpecText:
    s = _Scanner(text)
    if s.peek_word().lower() != "sigma":
        raise ParseError("expected 'sigma('", s.pos)
    s.pos += len("sigma")
    s.expect("(")
    a = s.int_list(")")
    fields: dict[str, tuple[int, ...]] = {}
    while not s.at_end():
        start = s.pos
        word = s.peek_word()
        if word not in ("b", "m"):
            raise ParseError("expected 'b=[' or 'm=['", start)
        if word in fields:
            raise ParseError(f"{word} given twice", start)
        s.pos += 1
        s.expect("=")
        s.expect("[")
        fields[word] = s.int_list("]")
    return SpecText(a, fields.get("b"), fields.get("m"))


def parse_multilink(text: str) -> SeifertMultilink:
    return parse_spec(text).multilink()


def format_spec(spec: SpecText) -> str:
    out = "sigma(" + ",".join(map(str, spec.a)) + ")"
    if spec.b is not None:
        out += " b=[" + ",".join(map(str, spec.b)) + "]"
    if spec.m is not None:
        out += " m=[" + ",".join(map(str, spec.m)) + "]"
    return out


def format_multilink(ml: SeifertMultilink) -> str:
    return format_spec(SpecText(ml.data.a, ml.data.b, ml.m))
