"""Propositional extended logic programs: data model, parser and printer.

Surface syntax::

    % comment
    p :- q, not r.
    -p.
    q :- not -p.

``-`` is explicit negation, ``not`` is default negation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

__all__ = [
    "Literal",
    "Rule",
    "Program",
    "ParseError",
    "complement",
    "lit",
    "parse_literal",
    "parse_program",
    "render",
    "herbrand_base",
    "semi_normal",
    "sort_literals",
]

ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, order=True)
class Literal:
    """An objective literal: an atom, possibly under explicit negation."""

    atom: str
    negated: bool = False

    def __post_init__(self) -> None:
        if not ATOM_RE.match(self.atom) or self.atom == "not":
            raise ValueError(f"invalid atom name: {self.atom!r}")

    def __str__(self) -> str:
        return f"-{self.atom}" if self.negated else self.atom

    def __repr__(self) -> str:
        return f"Literal({str(self)!r})"


def complement(L: Literal) -> Literal:
    return Literal(L.atom, not L.negated)


def sort_literals(lits: Iterable[Literal]) -> list[Literal]:
    return sorted(lits, key=str)


@dataclass(frozen=True)
class Rule:
    """``head :- objective_body, not default_body``.

    Both bodies are sets, so two rules that differ only in body order or
    repetition are the same rule.
    """

    head: Literal
    objective_body: frozenset[Literal] = frozenset()
    default_body: frozenset[Literal] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "objective_body", frozenset(self.objective_body))
        object.__setattr__(self, "default_body", frozenset(self.default_body))

    @property
    def is_fact(self) -> bool:
        return not self.objective_body and not self.default_body

    def __str__(self) -> str:
        body = [str(L) for L in sort_literals(self.objective_body)]
        body += [f"not {L}" for L in sort_literals(self.default_body)]
        if not body:
            return str(self.head)
        return f"{self.head} :- {', '.join(body)}"

    def __repr__(self) -> str:
        return f"Rule({str(self)!r})"


@dataclass(frozen=True)
class Program:
    """A finite program; duplicate rules are dropped, first occurrence wins."""

    rules: tuple[Rule, ...] = ()
    _index: frozenset[Rule] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        seen: dict[Rule, None] = dict.fromkeys(self.rules)
        object.__setattr__(self, "rules", tuple(seen))
        object.__setattr__(self, "_index", frozenset(seen))

    def __iter__(self):
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __contains__(self, rule: object) -> bool:
        return rule in self._index

    def __str__(self) -> str:
        return render(self)

    def without(self, i: int) -> "Program":
        return Program(self.rules[:i] + self.rules[i + 1:])


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)"
    r"|(?P<comment>%[^\n]*)"
    r"|(?P<neck>:-)"
    r"|(?P<ident>[a-z][A-Za-z0-9_]*)"
    r"|(?P<punct>[-,.])"
)


def _tokenize(text: str) -> list[tuple[str, str, int, int]]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        value = m.group()
        col = pos - line_start + 1
        if kind == "ident" and value == "not":
            kind = "not"
        if kind not in ("ws", "comment"):
            tokens.append((kind if kind != "punct" else value, value, line, col))
        nl = value.count("\n")
        if nl:
            line += nl
            line_start = pos + value.rfind("\n") + 1
        pos = m.end()
    tokens.append(("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int, int]:
        return self.tokens[self.i]

    def take(self, kind: str, what: str) -> tuple[str, str, int, int]:
        tok = self.tokens[self.i]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {what}, found {found}", tok[2], tok[3])
        self.i += 1
        return tok

    def objective(self) -> Literal:
        negated = False
        if self.peek()[0] == "-":
            self.i += 1
            negated = True
        tok = self.peek()
        if tok[0] == "not":
            raise ParseError("default negation is not allowed here", tok[2], tok[3])
        _, name, _, _ = self.take("ident", "an atom")
        return Literal(name, negated)

    def rule(self) -> Rule:
        tok = self.peek()
        if tok[0] == "not":
            raise ParseError("default negation is not allowed in a rule head", tok[2], tok[3])
        head = self.objective()
        pos: set[Literal] = set()
        neg: set[Literal] = set()
        if self.peek()[0] == "neck":
            self.i += 1
            while True:
                if self.peek()[0] == "not":
                    self.i += 1
                    if self.peek()[0] == "not":
                        t = self.peek()
                        raise ParseError("nested default negation", t[2], t[3])
                    neg.add(self.objective())
                else:
                    pos.add(self.objective())
                if self.peek()[0] != ",":
                    break
                self.i += 1
        self.take(".", "',' or '.'" if pos or neg else "':-' or '.'")
        return Rule(head, frozenset(pos), frozenset(neg))

    def program(self) -> Program:
        rules = []
        while self.peek()[0] != "eof":
            rules.append(self.rule())
        return Program(tuple(rules))


def parse_program(text: str) -> Program:
    """Parse program text; raises :class:`ParseError` with a line and column."""
    return _Parser(text).program()


def parse_literal(text: str) -> Literal:
    p = _Parser(text)
    L = p.objective()
    p.take("eof", "end of literal")
    return L


def lit(text: str) -> Literal:
    """Shorthand: ``lit("-p")``."""
    return parse_literal(text)


def render(P: Program) -> str:
    return "".join(f"{r}.\n" for r in P.rules)


def herbrand_base(P: Program) -> frozenset[Literal]:
    """Both polarities of every atom mentioned in ``P``."""
    atoms = set()
    for r in P.rules:
        atoms.add(r.head.atom)
        atoms.update(L.atom for L in r.objective_body)
        atoms.update(L.atom for L in r.default_body)
    return frozenset(Literal(a, neg) for a in atoms for neg in (False, True))


def semi_normal(P: Program) -> Program:
    """Guard every rule ``L :- Body`` with ``not -L``."""
    return Program(tuple(
        Rule(r.head, r.objective_body, r.default_body | {complement(r.head)})
        for r in P.rules
    ))
