"""Expression trees for regular expressions extended with multitildes.

Concrete syntax::

    expr    := term ('+' term)*
    term    := factor+              (juxtaposition is catenation)
    factor  := atom '*'*
    atom    := '0' | '1' | letter | '(' expr ')' | tilde
    tilde   := '~' '{' '[' pair (',' pair)* ']' '}' '(' expr (',' expr)* ')'
    pair    := '(' int ',' int ')'

``0`` is the empty language, ``1`` the empty word and a letter is any other
single alphanumeric character.  Whitespace is ignored.  A tilde's arity is
its number of arguments; ``~{[]}(a,b)`` is the plain binary catenation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from ..errors import ArityError, InputError, ParseError
from ..tilde import Multitilde


@dataclass(frozen=True)
class Empty:
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Epsilon:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Letter:
    symbol: str

    def __str__(self):
        return self.symbol


@dataclass(frozen=True)
class Sum:
    left: "Emtre"
    right: "Emtre"

    def __str__(self):
        return f"({self.left}+{self.right})"


@dataclass(frozen=True)
class Cat:
    left: "Emtre"
    right: "Emtre"

    def __str__(self):
        return f"({self.left}{self.right})"


@dataclass(frozen=True)
class Star:
    child: "Emtre"

    def __str__(self):
        return f"({self.child})*"


@dataclass(frozen=True)
class Tilde:
    tilde: Multitilde
    children: Tuple["Emtre", ...]

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) != self.tilde.arity:
            raise ArityError(
                f"multitilde of arity {self.tilde.arity} given {len(self.children)} arguments"
            )

    def __str__(self):
        pairs = ",".join(f"({x},{y})" for x, y in self.tilde.pairs)
        args = ",".join(str(c) for c in self.children)
        return f"~{{[{pairs}]}}({args})"


Emtre = Union[Empty, Epsilon, Letter, Sum, Cat, Star, Tilde]


def has_star(e: Emtre) -> bool:
    if isinstance(e, Star):
        return True
    if isinstance(e, (Sum, Cat)):
        return has_star(e.left) or has_star(e.right)
    if isinstance(e, Tilde):
        return any(has_star(c) for c in e.children)
    return False


def depth(e: Emtre) -> int:
    if isinstance(e, (Sum, Cat)):
        return 1 + max(depth(e.left), depth(e.right))
    if isinstance(e, Star):
        return 1 + depth(e.child)
    if isinstance(e, Tilde):
        return 1 + max(depth(c) for c in e.children)
    return 0


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise ParseError(f"expected {ch!r}, found {found!r}", self.pos)
        self.pos += 1

    def parse(self) -> Emtre:
        e = self.expr()
        if self.peek():
            raise ParseError(f"unexpected {self.peek()!r}", self.pos)
        return e

    def expr(self) -> Emtre:
        e = self.term()
        while self.peek() == "+":
            self.pos += 1
            e = Sum(e, self.term())
        return e

    def starts_atom(self, ch: str) -> bool:
        return ch == "(" or ch == "~" or (ch.isalnum() and ch.isascii())

    def term(self) -> Emtre:
        if not self.starts_atom(self.peek()):
            found = self.peek() or "end of input"
            raise ParseError(f"expected an expression, found {found!r}", self.pos)
        e = self.factor()
        while self.starts_atom(self.peek()):
            e = Cat(e, self.factor())
        return e

    def factor(self) -> Emtre:
        e = self.atom()
        while self.peek() == "*":
            self.pos += 1
            e = Star(e)
        return e

    def atom(self) -> Emtre:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        if ch == "~":
            return self.tilde()
        self.pos += 1
        if ch == "0":
            return Empty()
        if ch == "1":
            return Epsilon()
        return Letter(ch)

    def integer(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])

    def tilde(self) -> Emtre:
        start = self.pos
        self.expect("~")
        self.expect("{")
        self.expect("[")
        pairs = []
        if self.peek() == "(":
            while True:
                self.expect("(")
                x = self.integer()
                self.expect(",")
                y = self.integer()
                self.expect(")")
                pairs.append((x, y))
                if self.peek() != ",":
                    break
                self.pos += 1
        self.expect("]")
        self.expect("}")
        self.expect("(")
        children = [self.expr()]
        while self.peek() == ",":
            self.pos += 1
            children.append(self.expr())
        self.expect(")")
        try:
            t = Multitilde(len(children), tuple(pairs))
        except InputError as exc:
            raise ParseError(f"tilde arguments do not match its pairs: {exc}", start) from None
        return Tilde(t, tuple(children))


def parse(text: str) -> Emtre:
    """Parse expression text; raises :class:`ParseError` with an offset."""
    return _Parser(text).parse()
