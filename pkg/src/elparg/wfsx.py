"""Gamma operators and the paraconsistent well-founded model (WFSX)."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .syntax import Literal, Program, herbrand_base, semi_normal, sort_literals

__all__ = [
    "Operator",
    "PseudoInterpretation",
    "ModelResult",
    "Contradiction",
    "least_model",
    "gamma",
    "gamma_s",
    "lfp_compose",
    "wfm_p",
    "wfm",
]


class Operator(str, Enum):
    GAMMA = "G"
    GAMMA_S = "Gs"


@dataclass(frozen=True)
class PseudoInterpretation:
    T: frozenset[Literal]
    F: frozenset[Literal]

    @property
    def is_interpretation(self) -> bool:
        return self.T.isdisjoint(self.F)

    def is_two_valued(self, base: frozenset[Literal]) -> bool:
        return self.is_interpretation and (self.T | self.F) == base

    def __str__(self) -> str:
        t = ", ".join(str(L) for L in sort_literals(self.T))
        f = ", ".join(f"not {L}" for L in sort_literals(self.F))
        return "{" + ", ".join(s for s in (t, f) if s) + "}"


@dataclass(frozen=True)
class ModelResult:
    wfm_p: PseudoInterpretation
    contradictory: bool
    stages: tuple[frozenset[Literal], ...]

    def to_json(self) -> dict:
        return {
            "T": [str(L) for L in sort_literals(self.wfm_p.T)],
            "notF": [str(L) for L in sort_literals(self.wfm_p.F)],
            "contradictory": self.contradictory,
            "stages": [[str(L) for L in sort_literals(s)] for s in self.stages],
        }


class Contradiction(Exception):
    """The program has no well-founded model; ``overlap`` is T ∩ F."""

    def __init__(self, overlap: frozenset[Literal], model: ModelResult):
        super().__init__("contradictory program: " + ", ".join(str(L) for L in sort_literals(overlap)))
        self.overlap = overlap
        self.model = model


def least_model(rules) -> frozenset[Literal]:
    """Least model of a definite program given as ``(head, body)`` pairs.

    Literals are opaque atoms here, which is what renaming ``-A`` to a
    fresh atom amounts to.
    """
    model: set[Literal] = set()
    changed = True
    while changed:
        changed = False
        for head, body in rules:
            if head not in model and body <= model:
                model.add(head)
                changed = True
    return frozenset(model)


def gamma(P: Program, I) -> frozenset[Literal]:
    """Gelfond-Lifschitz style operator: least model of ``P`` reduced by ``I``."""
    I = frozenset(I)
    reduct = [(r.head, r.objective_body) for r in P.rules if r.default_body.isdisjoint(I)]
    return least_model(reduct)


def gamma_s(P: Program, I) -> frozenset[Literal]:
    return gamma(semi_normal(P), I)


def _apply(P: Program, op: Operator, I) -> frozenset[Literal]:
    return gamma(P, I) if Operator(op) is Operator.GAMMA else gamma_s(P, I)


def _lfp_stages(P: Program, outer: Operator, inner: Operator) -> tuple[frozenset[Literal], ...]:
    I: frozenset[Literal] = frozenset()
    stages = [I]
    while True:
        nxt = _apply(P, outer, _apply(P, inner, I))
        if nxt == I:
            return tuple(stages)
        stages.append(nxt)
        I = nxt


def lfp_compose(P: Program, outer: Operator, inner: Operator) -> frozenset[Literal]:
    """Least fixpoint of ``I -> outer(inner(I))``, iterated from the empty set."""
    return _lfp_stages(P, outer, inner)[-1]


def wfm_p(P: Program) -> ModelResult:
    stages = _lfp_stages(P, Operator.GAMMA, Operator.GAMMA_S)
    T = stages[-1]
    F = herbrand_base(P) - gamma_s(P, T)
    return ModelResult(PseudoInterpretation(T, F), not T.isdisjoint(F), stages)


def wfm(P: Program) -> PseudoInterpretation:
    """The well-founded model; raises :class:`Contradiction` if there is none."""
    res = wfm_p(P)
    if res.contradictory:
        raise Contradiction(res.wfm_p.T & res.wfm_p.F, res)
    return res.wfm_p
