"""Tokenizer, recursive-descent parser and printer for propositional formulas.

Grammar, loosest binding first::

    formula := iff
    iff     := imp ("<->" imp)*
    imp     := or ("->" or)*          (right associative)
    or      := and ("|" and)*
    and     := unary ("&" unary)*
    unary   := "!" unary | "(" formula ")" | atom | "top" | "bot"

The parser knows nothing about signatures; atom checking happens when a
tree is bound to a signature in :mod:`belief_kernel.logic`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterator, Union

from .errors import FormulaSyntaxError

KEYWORDS = frozenset({"top", "bot"})

_TOKEN = re.compile(
    r"\s*(?:(?P<iff><->)|(?P<imp>->)|(?P<op>[!&|()])|(?P<name>[A-Za-z_][A-Za-z0-9_]*))"
)


@dataclass(frozen=True)
class Atom:
    name: str
    position: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Const:
    value: bool


@dataclass(frozen=True)
class Not:
    operand: "Node"


@dataclass(frozen=True)
class Binary:
    op: str  # one of "&", "|", "->", "<->"
    left: "Node"
    right: "Node"


Node = Union[Atom, Const, Not, Binary]

TOP = Const(True)
BOT = Const(False)

# binding strength used by the printer
_PRECEDENCE = {"<->": 1, "->": 2, "|": 3, "&": 4}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    position: int


def tokenize(text: str) -> Iterator[Token]:
    pos = 0
    end = len(text)
    while pos < end:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise FormulaSyntaxError(f"unexpected character {text[bad]!r}", bad, text)
        kind = m.lastgroup
        start = m.start(kind)
        yield Token(kind if kind != "op" else m.group(kind), m.group(kind), start)
        pos = m.end()
    yield Token("end", "", len(text))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = list(tokenize(text))
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str) -> FormulaSyntaxError:
        return FormulaSyntaxError(message, self.peek.position, self.text)

    def parse(self) -> Node:
        if self.peek.kind == "end":
            raise self.fail("empty formula")
        node = self.iff()
        if self.peek.kind != "end":
            raise self.fail(f"unexpected {self.peek.text!r}")
        return node

    def iff(self) -> Node:
        node = self.imp()
        while self.peek.kind == "iff":
            self.take()
            node = Binary("<->", node, self.imp())
        return node

    def imp(self) -> Node:
        left = self.disj()
        if self.peek.kind == "imp":
            self.take()
            return Binary("->", left, self.imp())
        return left

    def disj(self) -> Node:
        node = self.conj()
        while self.peek.kind == "|":
            self.take()
            node = Binary("|", node, self.conj())
        return node

    def conj(self) -> Node:
        node = self.unary()
        while self.peek.kind == "&":
            self.take()
            node = Binary("&", node, self.unary())
        return node

    def unary(self) -> Node:
        tok = self.peek
        if tok.kind == "!":
            self.take()
            return Not(self.unary())
        if tok.kind == "(":
            self.take()
            node = self.iff()
            if self.peek.kind != ")":
                raise self.fail("expected ')'")
            self.take()
            return node
        if tok.kind == "name":
            self.take()
            if tok.text == "top":
                return TOP
            if tok.text == "bot":
                return BOT
            return Atom(tok.text, tok.position)
        if tok.kind == "end":
            raise self.fail("unexpected end of formula")
        raise self.fail(f"unexpected {tok.text!r}")


def parse(text: str) -> Node:
    """Parse formula text into a tree; raises FormulaSyntaxError with a position."""
    return _Parser(text).parse()


def atoms_in(node: Node) -> Iterator[Atom]:
    if isinstance(node, Atom):
        yield node
    elif isinstance(node, Not):
        yield from atoms_in(node.operand)
    elif isinstance(node, Binary):
        yield from atoms_in(node.left)
        yield from atoms_in(node.right)


def to_text(node: Node) -> str:
    """Render a tree with the minimum parentheses needed to parse back identically."""
    if isinstance(node, Const):
        return "top" if node.value else "bot"
    if isinstance(node, Atom):
        return node.name
    if isinstance(node, Not):
        inner = to_text(node.operand)
        if isinstance(node.operand, Binary):
            inner = f"({inner})"
        return "!" + inner
    prec = _PRECEDENCE[node.op]
    left = to_text(node.left)
    right = to_text(node.right)
    if isinstance(node.left, Binary):
        lp = _PRECEDENCE[node.left.op]
        # "->" groups to the right, so a left operand of equal strength needs brackets
        if lp < prec or (lp == prec and node.op == "->"):
            left = f"({left})"
    if isinstance(node.right, Binary):
        rp = _PRECEDENCE[node.right.op]
        if rp < prec or (rp == prec and node.op != "->"):
            right = f"({right})"
    return f"{left} {node.op} {right}"
