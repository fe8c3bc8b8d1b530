"""The six notions of attack between arguments."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .arguments import Argument, minimal_arguments
from .syntax import Program, complement

__all__ = [
    "AttackKind",
    "AttackRelation",
    "HIERARCHY_KINDS",
    "undercuts",
    "rebuts",
    "attacks_by",
    "relation",
    "inverse",
    "kind_leq",
    "to_dot",
]


class AttackKind(str, Enum):
    UNDERCUTS = "u"
    REBUTS = "r"
    ATTACKS = "a"
    DEFEATS = "d"
    STRONGLY_ATTACKS = "sa"
    STRONGLY_UNDERCUTS = "su"

    def __str__(self) -> str:
        return self.value


K = AttackKind
# rebuts is symmetric and left out of the hierarchy of justification notions
HIERARCHY_KINDS = (K.STRONGLY_UNDERCUTS, K.UNDERCUTS, K.STRONGLY_ATTACKS, K.DEFEATS, K.ATTACKS)

# covering pairs (smaller, larger) of the inclusion order on kinds
_COVERS = {
    (K.STRONGLY_UNDERCUTS, K.UNDERCUTS),
    (K.STRONGLY_UNDERCUTS, K.STRONGLY_ATTACKS),
    (K.UNDERCUTS, K.DEFEATS),
    (K.STRONGLY_ATTACKS, K.DEFEATS),
    (K.DEFEATS, K.ATTACKS),
    (K.REBUTS, K.ATTACKS),
}


def kind_leq(x: AttackKind, y: AttackKind) -> bool:
    """Whether ``x`` is contained in ``y`` for every program."""
    if x == y:
        return True
    return any(a == x and kind_leq(b, y) for a, b in _COVERS)


def undercuts(A: Argument, B: Argument) -> bool:
    return not A.conclusions.isdisjoint(B.assumptions)


def rebuts(A: Argument, B: Argument) -> bool:
    return any(complement(L) in B.conclusions for L in A.conclusions)


def attacks_by(kind: AttackKind, A: Argument, B: Argument) -> bool:
    """Does ``A`` attack ``B`` in the sense of ``kind``? (pairwise definitions)"""
    kind = AttackKind(kind)
    if kind is K.UNDERCUTS:
        return undercuts(A, B)
    if kind is K.REBUTS:
        return rebuts(A, B)
    if kind is K.ATTACKS:
        return undercuts(A, B) or rebuts(A, B)
    if kind is K.DEFEATS:
        return undercuts(A, B) or (rebuts(A, B) and not undercuts(B, A))
    if kind is K.STRONGLY_ATTACKS:
        return attacks_by(K.ATTACKS, A, B) and not undercuts(B, A)
    return undercuts(A, B) and not undercuts(B, A)


@dataclass(frozen=True)
class AttackRelation:
    """Pairs ``(i, j)``: argument ``i`` attacks argument ``j``.

    Indices refer to ``arguments``, normally ``minimal_arguments(P)``.
    """

    kind: AttackKind
    arguments: tuple[Argument, ...]
    pairs: frozenset[tuple[int, int]]
    inverted: bool = False

    def __contains__(self, pair: tuple[int, int]) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def holds(self, A: Argument, B: Argument) -> bool:
        return (self.arguments.index(A), self.arguments.index(B)) in self.pairs

    def attackers(self) -> list[list[int]]:
        """``attackers()[j]`` lists every ``i`` with ``(i, j)`` in the relation."""
        out: list[list[int]] = [[] for _ in self.arguments]
        for i, j in sorted(self.pairs):
            out[j].append(i)
        return out

    def lines(self) -> list[str]:
        return [f"{i} -> {j}  [{self.kind}]" for i, j in sorted(self.pairs)]


@lru_cache(maxsize=512)
def _base_pairs(P: Program) -> tuple[frozenset, frozenset]:
    args = minimal_arguments(P)
    n = range(len(args))
    u = frozenset((i, j) for i in n for j in n if undercuts(args[i], args[j]))
    r = frozenset((i, j) for i in n for j in n if rebuts(args[i], args[j]))
    return u, r


def _flip(pairs) -> frozenset:
    return frozenset((j, i) for i, j in pairs)


@lru_cache(maxsize=4096)
def relation(P: Program, kind: AttackKind) -> AttackRelation:
    """Materialize ``kind`` over the minimal arguments of ``P``.

    Built from undercut and rebut with set algebra; :func:`attacks_by`
    gives the pairwise reading of the same notions.
    """
    kind = AttackKind(kind)
    u, r = _base_pairs(P)
    u_inv = _flip(u)
    pairs = {
        K.UNDERCUTS: u,
        K.REBUTS: r,
        K.ATTACKS: u | r,
        K.DEFEATS: u | (r - u_inv),
        K.STRONGLY_ATTACKS: (u | r) - u_inv,
        K.STRONGLY_UNDERCUTS: u - u_inv,
    }[kind]
    return AttackRelation(kind, minimal_arguments(P), pairs)


def inverse(rel: AttackRelation) -> AttackRelation:
    return AttackRelation(rel.kind, rel.arguments, _flip(rel.pairs), not rel.inverted)


def to_dot(rels: list[AttackRelation]) -> str:
    if not rels:
        return "digraph attacks {\n}\n"
    args = rels[0].arguments
    out = ["digraph attacks {"]
    for i, A in enumerate(args):
        out.append(f'  a{i} [label="{i}: {_dot_escape(str(A))}"];')
    for rel in rels:
        for i, j in sorted(rel.pairs):
            out.append(f'  a{i} -> a{j} [label="{rel.kind}"];')
    out.append("}")
    return "\n".join(out) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')
