"""Acceptability, the least-fixpoint semantics J_{x/y}, labellings and A(P)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Collection, Iterable

from .arguments import Argument, minimal_arguments
from .attacks import AttackKind, relation
from .syntax import Literal, Program, herbrand_base, sort_literals

__all__ = [
    "JustificationConfig",
    "ArgumentLabelling",
    "Consequences",
    "acceptable",
    "f_operator",
    "least_fixpoint",
    "fixpoint_stages",
    "fixpoint_of_pairs",
    "labelling",
    "consequences",
    "all_configs",
]


@dataclass(frozen=True)
class JustificationConfig:
    """Opponent attacks with ``attack``; proponent defends with ``defence``."""

    attack: AttackKind
    defence: AttackKind

    def __post_init__(self) -> None:
        object.__setattr__(self, "attack", AttackKind(self.attack))
        object.__setattr__(self, "defence", AttackKind(self.defence))

    @classmethod
    def parse(cls, text: str) -> "JustificationConfig":
        x, _, y = text.partition("/")
        return cls(AttackKind(x), AttackKind(y))

    def __str__(self) -> str:
        return f"{self.attack}/{self.defence}"


def all_configs(kinds: Iterable[AttackKind] = tuple(AttackKind)) -> list[JustificationConfig]:
    kinds = list(kinds)
    return [JustificationConfig(x, y) for x in kinds for y in kinds]


def _cfg(cfg) -> JustificationConfig:
    return cfg if isinstance(cfg, JustificationConfig) else JustificationConfig.parse(cfg)


def _acceptable_idx(a: int, S: Collection[int], x_att: list[list[int]], y_att: list[list[int]]) -> bool:
    return all(any(c in S for c in y_att[b]) for b in x_att[a])


def _stages(n: int, x_att, y_att) -> list[frozenset[int]]:
    S: frozenset[int] = frozenset()
    stages = [S]
    while True:
        nxt = frozenset(a for a in range(n) if _acceptable_idx(a, S, x_att, y_att))
        if nxt == S:
            return stages
        stages.append(nxt)
        S = nxt


def fixpoint_of_pairs(n: int, x_pairs: Iterable[tuple[int, int]],
                      y_pairs: Iterable[tuple[int, int]]) -> frozenset[int]:
    """Least fixpoint over ``n`` arguments for arbitrary attack/defence relations."""
    x_att: list[list[int]] = [[] for _ in range(n)]
    y_att: list[list[int]] = [[] for _ in range(n)]
    for i, j in x_pairs:
        x_att[j].append(i)
    for i, j in y_pairs:
        y_att[j].append(i)
    return _stages(n, x_att, y_att)[-1]


def _attackers(P: Program, cfg: JustificationConfig):
    return relation(P, cfg.attack).attackers(), relation(P, cfg.defence).attackers()


def acceptable(P: Program, A: Argument, S: Iterable[Argument], cfg) -> bool:
    """Every ``x``-attacker of ``A`` is ``y``-attacked by some member of ``S``."""
    cfg = _cfg(cfg)
    args = minimal_arguments(P)
    pos = {B: i for i, B in enumerate(args)}
    x_att, y_att = _attackers(P, cfg)
    return _acceptable_idx(pos[A], {pos[B] for B in S}, x_att, y_att)


def f_operator(P: Program, cfg, S: Iterable[Argument]) -> frozenset[Argument]:
    cfg = _cfg(cfg)
    args = minimal_arguments(P)
    pos = {B: i for i, B in enumerate(args)}
    idx = {pos[B] for B in S}
    x_att, y_att = _attackers(P, cfg)
    return frozenset(A for i, A in enumerate(args) if _acceptable_idx(i, idx, x_att, y_att))


@lru_cache(maxsize=8192)
def _stage_indices(P: Program, cfg: JustificationConfig) -> tuple[frozenset[int], ...]:
    x_att, y_att = _attackers(P, cfg)
    return tuple(_stages(len(minimal_arguments(P)), x_att, y_att))


def fixpoint_stages(P: Program, cfg) -> list[frozenset[Argument]]:
    """The Kleene chain J^0 = {} , J^1, ... up to and including the fixpoint."""
    args = minimal_arguments(P)
    return [frozenset(args[i] for i in S) for S in _stage_indices(P, _cfg(cfg))]


def least_fixpoint(P: Program, cfg) -> frozenset[Argument]:
    args = minimal_arguments(P)
    return frozenset(args[i] for i in _stage_indices(P, _cfg(cfg))[-1])


@dataclass(frozen=True)
class ArgumentLabelling:
    """Justified / overruled / defensible arguments.

    ``overruled`` means attacked (undercut or rebut) by a justified
    argument. For contradictory programs a justified argument can be
    overruled too; ``defensible`` is always what is left.
    """

    justified: frozenset[Argument]
    overruled: frozenset[Argument]
    defensible: frozenset[Argument]

    def to_json(self) -> dict:
        return {k: sorted(str(A) for A in getattr(self, k))
                for k in ("justified", "overruled", "defensible")}


def labelling(P: Program, cfg) -> ArgumentLabelling:
    cfg = _cfg(cfg)
    args = minimal_arguments(P)
    J = _stage_indices(P, cfg)[-1]
    att = relation(P, AttackKind.ATTACKS).attackers()
    over = {j for j in range(len(args)) if any(i in J for i in att[j])}
    rest = set(range(len(args))) - J - over
    pick = lambda ids: frozenset(args[i] for i in ids)  # noqa: E731
    return ArgumentLabelling(pick(J), pick(over), pick(rest))


@dataclass(frozen=True)
class Consequences:
    """Literal-level result ``T ∪ not F``; ``T`` and ``F`` may overlap."""

    T: frozenset[Literal]
    F: frozenset[Literal]

    @property
    def contradictory(self) -> bool:
        return not self.T.isdisjoint(self.F)

    def to_json(self) -> dict:
        return {"T": [str(L) for L in sort_literals(self.T)],
                "notF": [str(L) for L in sort_literals(self.F)]}


def consequences(P: Program, cfg="u/a") -> Consequences:
    """Conclusions of justified arguments, and literals all of whose
    arguments are overruled (vacuously when there is none)."""
    lab = labelling(P, cfg)
    T = frozenset().union(*(A.conclusions for A in lab.justified))
    args = minimal_arguments(P)
    F = frozenset(
        L for L in herbrand_base(P)
        if all(A in lab.overruled for A in args if L in A.conclusions)
    )
    return Consequences(T, F)
