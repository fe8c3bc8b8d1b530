"""Arguments of a program and enumeration of the minimal ones."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .syntax import Literal, Program, Rule, sort_literals

__all__ = [
    "Argument",
    "is_argument",
    "is_minimal",
    "subarguments",
    "minimal_arguments",
]


class Argument:
    """A chained, nonempty sequence of rules.

    Equality and hashing use the *set* of rules: every semantic notion
    depends only on conclusions and assumptions.
    """

    __slots__ = ("rules", "conclusions", "assumptions", "_key", "_text")

    def __init__(self, rules: Iterable[Rule]):
        self.rules: tuple[Rule, ...] = tuple(rules)
        if not self.rules:
            raise ValueError("an argument is a nonempty rule sequence")
        self.conclusions: frozenset[Literal] = frozenset(r.head for r in self.rules)
        self.assumptions: frozenset[Literal] = frozenset().union(
            *(r.default_body for r in self.rules))
        self._key = frozenset(self.rules)
        self._text = "[" + "; ".join(str(r) for r in self.rules) + "]"

    @property
    def root(self) -> Literal:
        return self.rules[0].head

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Argument) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __len__(self) -> int:
        return len(self.rules)

    def __str__(self) -> str:
        return self._text

    def __repr__(self) -> str:
        return f"Argument({self._text!r})"

    def to_json(self) -> dict:
        return {
            "rules": [str(r) for r in self.rules],
            "conclusions": [str(L) for L in sort_literals(self.conclusions)],
            "assumptions": [str(L) for L in sort_literals(self.assumptions)],
        }


def _chained(seq: Sequence[Rule]) -> bool:
    for i, r in enumerate(seq):
        later = {s.head for s in seq[i + 1:]}
        if not r.objective_body <= later:
            return False
    return True


def is_argument(P: Program, seq: Sequence[Rule]) -> bool:
    return bool(seq) and all(r in P for r in seq) and _chained(seq)


def _proper_subsequences(seq: Sequence[Rule]):
    n = len(seq)
    for k in range(1, n):
        for idx in combinations(range(n), k):
            yield [seq[i] for i in idx]


def is_minimal(P: Program, A: Argument) -> bool:
    """True iff ``A`` is minimal for one of its conclusions.

    Checked literally: no proper subsequence which is itself an argument
    shares that conclusion.
    """
    sub_conclusions = [
        {r.head for r in sub}
        for sub in _proper_subsequences(A.rules) if _chained(sub)
    ]
    return any(
        all(L not in concl for concl in sub_conclusions)
        for L in A.conclusions
    )


def subarguments(A: Argument) -> set[Argument]:
    subs = {Argument(s) for s in _proper_subsequences(A.rules) if _chained(s)}
    subs.add(A)
    return subs


def _canonical_order(root: Rule, chosen: dict[Literal, Rule]) -> list[Rule]:
    # reversed DFS postorder: every rule precedes the rules it depends on
    post: list[Rule] = []
    seen: set[Literal] = set()

    def visit(L: Literal) -> None:
        seen.add(L)
        r = chosen[L]
        for M in sort_literals(r.objective_body):
            if M not in seen:
                visit(M)
        post.append(r)

    visit(root.head)
    post.reverse()
    return post


def _reaches(chosen: dict[Literal, Rule], start: Iterable[Literal], target: Literal) -> bool:
    stack = list(start)
    seen: set[Literal] = set()
    while stack:
        L = stack.pop()
        if L == target:
            return True
        if L in seen or L not in chosen:
            continue
        seen.add(L)
        stack.extend(chosen[L].objective_body)
    return False


def _rooted_at(P: Program, root: Rule, by_head: dict[Literal, list[Rule]]) -> list[Argument]:
    found: list[Argument] = []

    def extend(chosen: dict[Literal, Rule], pending: list[Literal]) -> None:
        if not pending:
            found.append(Argument(_canonical_order(root, chosen)))
            return
        L, rest = pending[0], pending[1:]
        if L in chosen:
            extend(chosen, rest)
            return
        for r in by_head.get(L, ()):
            # one rule per literal; reject as soon as a dependency cycle closes
            if _reaches(chosen, r.objective_body, L):
                continue
            chosen[L] = r
            extend(chosen, rest + sort_literals(r.objective_body - chosen.keys()))
            del chosen[L]

    if root.head in root.objective_body:
        return found
    extend({root.head: root}, sort_literals(root.objective_body))
    return found


@lru_cache(maxsize=512)
def minimal_arguments(P: Program) -> tuple[Argument, ...]:
    """All minimal arguments of ``P``, sorted by rendered form.

    A minimal argument picks exactly one rule per derived literal, the
    dependencies between the picked rules are acyclic, and every rule is
    reachable from the first one.
    """
    by_head: dict[Literal, list[Rule]] = {}
    for r in P.rules:
        by_head.setdefault(r.head, []).append(r)
    args: set[Argument] = set()
    for root in P.rules:
        args.update(_rooted_at(P, root, by_head))
    return tuple(sorted(args, key=str))
