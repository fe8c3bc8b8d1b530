"""Seeded random programs and the bundled example programs P1-P6."""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from importlib import resources

from .syntax import Literal, Program, Rule, parse_program

__all__ = ["GeneratorConfig", "gen_program", "gen_programs", "fixtures", "ATOM_NAMES"]

ATOM_NAMES = ("p", "q", "r", "s", "t", "v", "w", "x", "y", "z")


@dataclass(frozen=True)
class GeneratorConfig:
    seed: int = 0
    atoms: int = 6
    rules: int = 12
    max_body: int = 2
    explicit_neg_prob: float = 0.3
    default_neg_prob: float = 0.6

    def __post_init__(self) -> None:
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if not 1 <= self.atoms <= len(ATOM_NAMES):
            raise ValueError(f"atoms must be in 1..{len(ATOM_NAMES)}")
        if self.rules < 0 or self.max_body < 0:
            raise ValueError("rules and max_body must be non-negative")
        for name in ("explicit_neg_prob", "default_neg_prob"):
            if not 0.0 <= getattr(self, name) <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")


def gen_program(cfg: GeneratorConfig) -> Program:
    """Draw ``cfg.rules`` random rules; duplicates collapse, so the result can be shorter."""
    rng = random.Random(cfg.seed)
    atoms = ATOM_NAMES[:cfg.atoms]
    universe = [Literal(a, neg) for a in atoms for neg in (False, True)]
    rules = []
    for _ in range(cfg.rules):
        head = Literal(rng.choice(atoms), rng.random() < cfg.explicit_neg_prob)
        k = rng.randint(0, min(cfg.max_body, len(universe)))
        pos, neg = set(), set()
        for L in rng.sample(universe, k):
            (neg if rng.random() < cfg.default_neg_prob else pos).add(L)
        rules.append(Rule(head, frozenset(pos), frozenset(neg)))
    return Program(tuple(rules))


def gen_programs(cfg: GeneratorConfig, count: int):
    """``count`` programs with varied sizes, seeded from ``cfg.seed``.

    Atom and rule counts are drawn up to the limits in ``cfg``.
    """
    rng = random.Random(cfg.seed)
    for _ in range(count):
        sub = replace(
            cfg,
            seed=rng.getrandbits(64),
            atoms=rng.randint(1, cfg.atoms),
            rules=rng.randint(1, cfg.rules) if cfg.rules else 0,
        )
        yield gen_program(sub)


def fixtures() -> dict[str, Program]:
    """P1..P6 from the bundled ``.lp`` files."""
    root = resources.files("elparg") / "fixtures"
    return {
        f"P{i}": parse_program((root / f"p{i}.lp").read_text(encoding="utf-8"))
        for i in range(1, 7)
    }
