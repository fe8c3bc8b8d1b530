"""Dialogue games between a proponent and an opponent.

The opponent answers each proponent move with every ``x``-attacker; the
proponent needs one ``y``-counterattack per opponent move and may not
reuse an argument it already played on the same branch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .arguments import Argument, minimal_arguments
from .attacks import relation
from .semantics import JustificationConfig, _cfg
from .syntax import Literal, Program

__all__ = [
    "Move",
    "DialogueTree",
    "legal_moves",
    "prove",
    "provable_conclusion",
    "provable_arguments",
    "export_tree",
]

PROPONENT = "P"
OPPONENT = "O"


@dataclass(frozen=True)
class Move:
    player: str
    argument: Argument
    index: int

    def __post_init__(self) -> None:
        expected = PROPONENT if self.index % 2 == 1 else OPPONENT
        if self.index < 1 or self.player != expected:
            raise ValueError(f"move {self.index} belongs to {expected}, not {self.player}")

    def __str__(self) -> str:
        return f"{self.player}: {self.argument}"


@dataclass
class DialogueTree:
    move: Move
    children: list["DialogueTree"] = field(default_factory=list)

    def nodes(self):
        yield self
        for c in self.children:
            yield from c.nodes()

    def branches(self):
        if not self.children:
            yield [self.move]
            return
        for c in self.children:
            for b in c.branches():
                yield [self.move, *b]

    def size(self) -> int:
        return sum(1 for _ in self.nodes())


def legal_moves(history: Sequence[Move], cfg, P: Program) -> set[Argument]:
    cfg = _cfg(cfg)
    if not history:
        return set(minimal_arguments(P))
    args = minimal_arguments(P)
    last = args.index(history[-1].argument)
    if len(history) % 2 == 1:
        att = relation(P, cfg.attack).attackers()
        return {args[b] for b in att[last]}
    used = {m.argument for m in history if m.player == PROPONENT}
    att = relation(P, cfg.defence).attackers()
    return {args[c] for c in att[last]} - used


class _Prover:
    """Exhaustive AND/OR search over dialogue trees.

    Positions are ``(a, used)``: the proponent just played ``a`` and
    ``used`` (a bitmask) holds its moves on the branch. Two exchange
    facts keep the search small without changing any answer. A smallest
    finite winning tree never repeats a proponent move on a branch, so an
    argument that loses as a root loses in every position, and arguments
    that lose as roots can be dropped from ``used`` before memo lookup.
    """

    def __init__(self, P: Program, cfg: JustificationConfig):
        self.args = minimal_arguments(P)
        x_att = relation(P, cfg.attack).attackers()
        y_att = relation(P, cfg.defence).attackers()
        # opponent: fewest possible replies first; proponent: least attacked first
        self.x_att = [sorted(bs, key=lambda b: len(y_att[b])) for bs in x_att]
        self.y_att = [sorted(cs, key=lambda c: len(x_att[c])) for cs in y_att]
        self.memo: dict[tuple[int, int], bool] = {}
        self.root: dict[int, bool] = {}
        self.losers = 0
        self.active: set[int] = set()

    def root_wins(self, a: int) -> bool:
        hit = self.root.get(a)
        if hit is None:
            self.active.add(a)
            hit = self.wins(a, 1 << a)
            self.active.discard(a)
            self.root[a] = hit
            if not hit:
                self.losers |= 1 << a
        return hit

    def wins(self, a: int, used: int) -> bool:
        used = (used & ~self.losers) | (1 << a)
        key = (a, used)
        hit = self.memo.get(key)
        if hit is None:
            hit = all(self.reply(b, used) is not None for b in self.x_att[a])
            self.memo[key] = hit
        return hit

    def reply(self, b: int, used: int) -> int | None:
        for c in self.y_att[b]:
            if used >> c & 1:
                continue
            if c not in self.active and not self.root_wins(c):
                continue
            if self.wins(c, used | 1 << c):
                return c
        return None

    def tree(self, a: int, used: int, index: int) -> DialogueTree:
        node = DialogueTree(Move(PROPONENT, self.args[a], index))
        for b in self.x_att[a]:
            c = self.reply(b, used)
            o = DialogueTree(Move(OPPONENT, self.args[b], index + 1))
            o.children.append(self.tree(c, used | 1 << c, index + 2))
            node.children.append(o)
        return node


@lru_cache(maxsize=64)
def _prover(P: Program, cfg: JustificationConfig) -> _Prover:
    # results for one argument are reused when asking about the next
    return _Prover(P, cfg)


def prove(P: Program, A: Argument, cfg) -> DialogueTree | None:
    """A winning dialogue tree rooted at ``A``, or ``None`` if none exists."""
    prover = _prover(P, _cfg(cfg))
    a = prover.args.index(A)
    if not prover.root_wins(a):
        return None
    return prover.tree(a, 1 << a, 1)


def provable_conclusion(P: Program, L: Literal, cfg) -> bool:
    prover = _prover(P, _cfg(cfg))
    return any(
        prover.root_wins(i)
        for i, A in enumerate(prover.args) if L in A.conclusions
    )


def provable_arguments(P: Program, cfg) -> frozenset[Argument]:
    prover = _prover(P, _cfg(cfg))
    return frozenset(A for i, A in enumerate(prover.args) if prover.root_wins(i))


def export_tree(t: DialogueTree) -> str:
    """Render a dialogue tree as a DOT digraph, nodes numbered in preorder."""
    lines = ["digraph dialogue {"]
    ids: dict[int, int] = {}
    for k, node in enumerate(t.nodes()):
        ids[id(node)] = k
        label = str(node.move).replace("\\", "\\\\").replace('"', '\\"')
        shape = "box" if node.move.player == PROPONENT else "ellipse"
        lines.append(f'  n{k} [label="{label}", shape={shape}];')
    for node in t.nodes():
        for c in node.children:
            lines.append(f"  n{ids[id(node)]} -> n{ids[id(c)]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
