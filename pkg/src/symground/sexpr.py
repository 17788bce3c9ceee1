"""Minimal s-expression reader shared by the atom text format and rule files."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


class SexprError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class Sym:
    """A bare symbol (as opposed to a quoted string)."""

    name: str
    line: int = 0
    col: int = 0

    def __eq__(self, other):
        if isinstance(other, Sym):
            return self.name == other.name
        return NotImplemented

    def __hash__(self):
        return hash(self.name)

    def __str__(self):
        return self.name


Expr = Union[Sym, str, list]


def _tokens(text: str):
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == ";":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            yield ch, ch, line, col
            i += 1
            col += 1
            continue
        if ch == '"':
            start_line, start_col = line, col
            buf = []
            i += 1
            col += 1
            while True:
                if i >= n:
                    raise SexprError("unterminated string", start_line, start_col)
                c = text[i]
                if c == "\\" and i + 1 < n:
                    buf.append(text[i + 1])
                    i += 2
                    col += 2
                    continue
                if c == '"':
                    i += 1
                    col += 1
                    break
                if c == "\n":
                    line, col = line + 1, 0
                buf.append(c)
                i += 1
                col += 1
            yield "str", "".join(buf), start_line, start_col
            continue
        start = i
        start_col = col
        while i < n and not text[i].isspace() and text[i] not in '()";':
            i += 1
            col += 1
        yield "sym", text[start:i], line, start_col


def parse_all(text: str) -> list:
    """Parse every top-level expression in ``text``."""
    stack: list[list] = [[]]
    opened: list[tuple[int, int]] = []
    for kind, value, line, col in _tokens(text):
        if kind == "(":
            stack.append([])
            opened.append((line, col))
        elif kind == ")":
            if len(stack) == 1:
                raise SexprError("unexpected ')'", line, col)
            done = stack.pop()
            opened.pop()
            stack[-1].append(done)
        elif kind == "str":
            stack[-1].append(value)
        else:
            stack[-1].append(Sym(value, line, col))
    if len(stack) != 1:
        line, col = opened[-1]
        raise SexprError("unclosed '('", line, col)
    return stack[0]


def quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'
