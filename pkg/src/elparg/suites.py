"""Property suites over fixtures and generated programs.

Each property takes a program and returns a list of violation messages;
an empty list means the property held. Failing programs are shrunk by
greedy rule removal before they are reported.
"""

from __future__ import annotations

import logging
import random
import time
from functools import lru_cache
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from .arguments import Argument, is_argument, is_minimal, minimal_arguments, subarguments
from .attacks import HIERARCHY_KINDS, AttackKind, attacks_by, inverse, kind_leq, relation
from .dialectic import DialogueTree, provable_arguments, prove
from .generator import GeneratorConfig, fixtures, gen_programs
from .semantics import JustificationConfig, consequences, fixpoint_of_pairs, least_fixpoint
from .syntax import Program, complement, herbrand_base, parse_program, render
from .wfsx import Operator, _apply, gamma, gamma_s, lfp_compose, wfm_p

log = logging.getLogger(__name__)

K = AttackKind
G, GS = Operator.GAMMA, Operator.GAMMA_S

Property = Callable[[Program], list[str]]

# Hasse diagram of justification notions: groups of equal configurations,
# and covering edges (lower group, upper group).
HIERARCHY_NODES: dict[str, tuple[str, ...]] = {
    "su/a": ("su/a", "su/d"),
    "su/u": ("su/u",),
    "su/sa": ("su/sa",),
    "sa/u": ("sa/u", "sa/d", "sa/a"),
    "su/su": ("su/su",),
    "u/a": ("u/a", "u/d", "u/sa"),
    "sa/su": ("sa/su", "sa/sa"),
    "u/u": ("u/su", "u/u"),
    "d/u": ("d/su", "d/u", "d/a", "d/d", "d/sa"),
    "a/u": ("a/su", "a/u", "a/a", "a/d", "a/sa"),
}
HIERARCHY_EDGES: tuple[tuple[str, str], ...] = (
    ("su/u", "su/a"),
    ("su/sa", "su/a"),
    ("sa/u", "su/u"),
    ("su/su", "su/u"),
    ("su/su", "su/sa"),
    ("u/a", "su/sa"),
    ("sa/su", "sa/u"),
    ("sa/su", "su/su"),
    ("u/u", "su/su"),
    ("u/u", "u/a"),
    ("d/u", "sa/su"),
    ("d/u", "u/u"),
    ("a/u", "d/u"),
)


def _golden() -> dict[str, dict[str, frozenset[str]]]:
    def every(x_kinds, args):
        return {f"{x}/{y}": frozenset(args) for x in x_kinds for y in K}

    pq = ("[p :- not q]", "[q :- not p]")
    return {
        "P1": {**every((K.STRONGLY_UNDERCUTS, K.STRONGLY_ATTACKS), pq),
               **every((K.ATTACKS, K.DEFEATS, K.UNDERCUTS), ())},
        "P2": {**every((K.DEFEATS, K.ATTACKS), ()),
               "sa/su": frozenset({"[q :- not p]"}), "sa/sa": frozenset({"[q :- not p]"}),
               "u/su": frozenset({"[-p]"}), "u/u": frozenset({"[-p]"}),
               "u/a": frozenset({"[-p]", "[q :- not p]"}),
               "sa/u": frozenset({"[-p]", "[q :- not p]"})},
        "P3": {**every((K.STRONGLY_ATTACKS,), ()),
               "su/u": frozenset({"[-p]"}), "su/su": frozenset({"[-p]"}),
               **{c: frozenset({"[-p]", "[q :- not r]", "[s :- not p]"})
                  for c in ("u/a", "su/sa", "su/a")}},
        "P4": {**every((K.UNDERCUTS, K.DEFEATS, K.ATTACKS), ()),
               **{c: frozenset(pq) for c in ("su/su", "su/sa", "sa/su", "sa/sa")},
               **{c: frozenset((*pq, "[r :- not p]")) for c in ("su/u", "su/a", "sa/u", "sa/a")}},
        "P5": {**every((K.ATTACKS,), ()), **every((K.DEFEATS,), ("[-p]",))},
        "P6": {**every((K.STRONGLY_ATTACKS, K.DEFEATS, K.ATTACKS), ()),
               **every((K.UNDERCUTS, K.STRONGLY_UNDERCUTS), ("[p]", "[q]"))},
    }


# justified sets for the bundled programs, keyed by fixture then x/y
GOLDEN = _golden()


def J(P: Program, cfg: str) -> frozenset[Argument]:
    return least_fixpoint(P, cfg)


def _show(S) -> str:
    return "{" + ", ".join(sorted(str(A) for A in S)) + "}"


# --- parsing -----------------------------------------------------------------

def prop_round_trip(P: Program) -> list[str]:
    return [] if parse_program(render(P)) == P else ["parse(render(P)) != P"]


# --- minimal arguments -------------------------------------------------------

def brute_force_minimal(P: Program) -> set[frozenset]:
    """Minimal arguments by enumerating every rule sequence up to length |P|.

    Rules may repeat inside a sequence. Arguments are returned as rule sets.
    """
    found = set()
    rules = P.rules
    for n in range(1, len(rules) + 1):
        for seq in product(rules, repeat=n):
            if is_argument(P, seq) and is_minimal(P, Argument(seq)):
                found.add(frozenset(seq))
    return found


def prop_minimality(P: Program) -> list[str]:
    out = []
    args = minimal_arguments(P)
    for A in args:
        if not is_argument(P, A.rules):
            out.append(f"{A} is not an argument")
        if not is_minimal(P, A):
            out.append(f"{A} is not minimal")
        heads = [r.head for r in A.rules]
        if len(set(heads)) != len(heads):
            out.append(f"{A} has two rules with one head")
        for L in A.conclusions:
            if not any(L in S.conclusions and is_minimal_for(S, L) for S in subarguments(A)):
                out.append(f"{A} has no minimal subargument for {L}")
    if len(P) <= 5:
        expected = brute_force_minimal(P)
        got = {frozenset(A.rules) for A in args}
        if got != expected:
            out.append(f"enumeration differs from brute force: extra {len(got - expected)}, "
                       f"missing {len(expected - got)}")
    return out


def is_minimal_for(A: Argument, L) -> bool:
    return all(L not in S.conclusions for S in subarguments(A) if S != A)


# --- attacks and the justification hierarchy ---------------------------------

def prop_attack_relations(P: Program) -> list[str]:
    out = []
    args = minimal_arguments(P)
    rel = {k: relation(P, k) for k in AttackKind}
    for k in AttackKind:
        pairwise = {(i, j) for i, A in enumerate(args) for j, B in enumerate(args)
                    if attacks_by(k, A, B)}
        if pairwise != rel[k].pairs:
            out.append(f"relational and pairwise {k} disagree")
    for x, y in product(AttackKind, AttackKind):
        if kind_leq(x, y) and not rel[x].pairs <= rel[y].pairs:
            out.append(f"{x} is not contained in {y}")
    if rel[K.REBUTS].pairs != inverse(rel[K.REBUTS]).pairs:
        out.append("rebuts is not symmetric")
    su = rel[K.STRONGLY_UNDERCUTS].pairs
    if su & inverse(rel[K.STRONGLY_UNDERCUTS]).pairs:
        out.append("strong undercut is not asymmetric")
    return out


def prop_kind_monotonicity(P: Program) -> list[str]:
    """Weaker attack or stronger defence never shrinks J."""
    out = []
    kinds = list(AttackKind)
    for x, y, x2, y2 in product(kinds, repeat=4):
        if kind_leq(x2, x) and kind_leq(y, y2):
            if not J(P, f"{x}/{y}") <= J(P, f"{x2}/{y2}"):
                out.append(f"J_{x}/{y} not within J_{x2}/{y2}")
    return out


def prop_strong_defence(P: Program) -> list[str]:
    """For x containing u, defence y and y minus inverse undercut agree."""
    out = []
    n = len(minimal_arguments(P))
    u_inv = inverse(relation(P, K.UNDERCUTS)).pairs
    for x in (K.UNDERCUTS, K.DEFEATS, K.ATTACKS):
        xs = relation(P, x).pairs
        for y in AttackKind:
            ys = relation(P, y).pairs
            if fixpoint_of_pairs(n, xs, ys) != fixpoint_of_pairs(n, xs, ys - u_inv):
                out.append(f"J_{x}/{y} differs from strong-defence variant")
        if not J(P, f"{x}/u") == J(P, f"{x}/su"):
            out.append(f"J_{x}/u != J_{x}/su")
        if not J(P, f"{x}/a") == J(P, f"{x}/d") == J(P, f"{x}/sa"):
            out.append(f"J_{x}/a, J_{x}/d, J_{x}/sa differ")
    for x in (K.STRONGLY_ATTACKS, K.DEFEATS, K.ATTACKS):
        if not J(P, f"{x}/u") == J(P, f"{x}/d") == J(P, f"{x}/a"):
            out.append(f"J_{x}/u, J_{x}/d, J_{x}/a differ")
    if J(P, "sa/su") != J(P, "sa/sa"):
        out.append("J_sa/su != J_sa/sa")
    if J(P, "su/a") != J(P, "su/d"):
        out.append("J_su/a != J_su/d")
    return out


def prop_hierarchy(P: Program) -> list[str]:
    out = []
    for name, group in HIERARCHY_NODES.items():
        sets = {J(P, c) for c in group}
        if len(sets) != 1:
            out.append(f"node {name} is not one set: {', '.join(group)}")
    for lo, hi in HIERARCHY_EDGES:
        if not J(P, lo) <= J(P, hi):
            out.append(f"J_{lo} not within J_{hi}")
    bottom = J(P, "a/u")
    for x, y in product(HIERARCHY_KINDS, HIERARCHY_KINDS):
        if not bottom <= J(P, f"{x}/{y}"):
            out.append(f"J_a/u not within J_{x}/{y}")
        if x != K.ATTACKS and not J(P, "d/su") <= J(P, f"{x}/{y}"):
            out.append(f"J_d/su not within J_{x}/{y}")
    return out


def strict_edge_witnesses(programs: dict[str, Program]) -> dict[tuple[str, str], list[str]]:
    """For each covering edge, the programs on which it is a strict inclusion."""
    return {
        (lo, hi): [name for name, P in programs.items() if J(P, lo) < J(P, hi)]
        for lo, hi in HIERARCHY_EDGES
    }


@lru_cache(maxsize=1)
def _fixture_items() -> tuple[tuple[str, Program], ...]:
    return tuple(fixtures().items())


def prop_golden(P: Program) -> list[str]:
    """On a bundled example program, every recorded justified set is reproduced."""
    out = []
    for name, F in _fixture_items():
        if F == P:
            for cfg, expected in GOLDEN[name].items():
                got = frozenset(map(str, J(P, cfg)))
                if got != expected:
                    out.append(f"{name} J_{cfg}: got {sorted(got)}, expected {sorted(expected)}")
    return out


# --- well-founded semantics ---------------------------------------------------

def prop_wfsx_equivalence(P: Program) -> list[str]:
    res = wfm_p(P)
    cons = consequences(P, "u/a")
    out = []
    if (res.wfm_p.T, res.wfm_p.F) != (cons.T, cons.F):
        out.append(f"WFM_p = {res.wfm_p} but A(P) gives T={sorted(map(str, cons.T))} "
                   f"F={sorted(map(str, cons.F))}")
    if res.contradictory != cons.contradictory:
        out.append("contradiction flags differ")
    return out


def prop_lfp_chain(P: Program) -> list[str]:
    out = []
    sg = lfp_compose(P, GS, G)
    ss = lfp_compose(P, GS, GS)
    gg = lfp_compose(P, G, G)
    gs = lfp_compose(P, G, GS)
    if not (sg == ss and ss <= gg <= gs):
        out.append("lfp chain GsG = GsGs <= GG <= GGs fails")

    def concl(cfg):
        return frozenset().union(*(A.conclusions for A in J(P, cfg)))

    for got, cfg, name in ((gg, "u/u", "GG"), (sg, "a/u", "GsG"),
                           (ss, "a/a", "GsGs"), (gs, "u/a", "GGs")):
        if got != concl(cfg):
            out.append(f"lfp({name}) differs from conclusions of J_{cfg}")
    return out


def prop_gamma_antitone(P: Program, rng: random.Random) -> list[str]:
    base = sorted(herbrand_base(P), key=str)
    small = {L for L in base if rng.random() < 0.4}
    big = small | {L for L in base if rng.random() < 0.4}
    out = []
    for f, name in ((gamma, "G"), (gamma_s, "Gs")):
        if not f(P, big) <= f(P, small):
            out.append(f"{name} is not antitone")
    for o, i in product((G, GS), repeat=2):
        if not _apply(P, o, _apply(P, i, small)) <= _apply(P, o, _apply(P, i, big)):
            out.append(f"{o.value}{i.value} is not monotone")
    return out


def prop_gamma_arguments(P: Program, rng: random.Random) -> list[str]:
    """Gamma / Gamma_s membership against argument conditions, random two-valued I."""
    base = herbrand_base(P)
    I = frozenset(L for L in sorted(base, key=str) if rng.random() < 0.5)
    args = minimal_arguments(P)
    g, gs = gamma(P, I), gamma_s(P, I)
    out = []
    for L in sorted(base, key=str):
        for_L = [A for A in args if L in A.conclusions]
        plain = [A for A in for_L if A.assumptions.isdisjoint(I)]
        strict = [A for A in plain if {complement(M) for M in A.conclusions}.isdisjoint(I)]
        if (L in g) != bool(plain):
            out.append(f"(1) fails for {L} with I={sorted(map(str, I))}")
        if (L in gs) != bool(strict):
            out.append(f"(2) fails for {L} with I={sorted(map(str, I))}")
        if (L not in g) != all(not A.assumptions.isdisjoint(I) for A in for_L):
            out.append(f"(3) fails for {L}")
        if (L not in gs) != all(
            not A.assumptions.isdisjoint(I)
            or not {complement(M) for M in A.conclusions}.isdisjoint(I)
            for A in for_L
        ):
            out.append(f"(4) fails for {L}")
    return out


# --- dialectic -----------------------------------------------------------------

def tree_violations(P: Program, t: DialogueTree, cfg: JustificationConfig) -> list[str]:
    """Check a winning tree move by move using the pairwise attack definitions."""
    out = []
    args = minimal_arguments(P)
    limit = 2 * len(args) + 1
    for branch in t.branches():
        if len(branch) > limit:
            out.append(f"branch longer than {limit}")
        for k, m in enumerate(branch, start=1):
            if m.index != k or m.player != ("P" if k % 2 else "O"):
                out.append(f"bad move numbering at {k}")
            if k > 1:
                prev = branch[k - 2].argument
                kind = cfg.defence if m.player == "P" else cfg.attack
                if not attacks_by(kind, m.argument, prev):
                    out.append(f"move {k} does not {kind}-attack move {k - 1}")
        played = [m.argument for m in branch if m.player == "P"]
        if len(set(played)) != len(played):
            out.append("proponent repeats an argument")
        if branch[-1].player != "P":
            out.append("branch ends with an opponent move")
    for node in t.nodes():
        if node.move.player == "P":
            expected = {B for B in args if attacks_by(cfg.attack, B, node.move.argument)}
            if {c.move.argument for c in node.children} != expected:
                out.append(f"children of {node.move} are not all its attackers")
        elif len(node.children) != 1:
            out.append(f"opponent move {node.move} needs exactly one answer")
    return out


def prop_dialectic(P: Program) -> list[str]:
    out = []
    for x, y in product(AttackKind, AttackKind):
        cfg = JustificationConfig(x, y)
        justified = least_fixpoint(P, cfg)
        provable = provable_arguments(P, cfg)
        if provable != justified:
            out.append(f"{cfg}: provable {_show(provable)} vs justified {_show(justified)}")
            continue
        for A in justified:
            t = prove(P, A, cfg)
            if t is None:
                out.append(f"{cfg}: no tree for {A}")
            else:
                out.extend(f"{cfg}: {v}" for v in tree_violations(P, t, cfg))
    return out


# --- runner ---------------------------------------------------------------------

SUITES: dict[str, list[tuple[str, Property]]] = {
    "minimality": [("round-trip", prop_round_trip), ("minimality", prop_minimality)],
    "hierarchy": [
        ("golden", prop_golden),
        ("attack-relations", prop_attack_relations),
        ("kind-monotonicity", prop_kind_monotonicity),
        ("strong-defence", prop_strong_defence),
        ("hierarchy", prop_hierarchy),
    ],
    "wfsx": [("wfsx-equivalence", prop_wfsx_equivalence), ("lfp-chain", prop_lfp_chain)],
    "gamma-args": [],  # randomized, see _randomized
    "dialectic": [("dialectic", prop_dialectic)],
}
SUITE_NAMES = (*SUITES, "all")


def _randomized(seed: int) -> list[tuple[str, Property]]:
    def seeded(f):
        # fresh generator per call, so shrinking replays the same draws
        return lambda P: f(P, random.Random(f"{seed}:{render(P)}"))

    return [("gamma-arguments", seeded(prop_gamma_arguments)),
            ("gamma-antitone", seeded(prop_gamma_antitone))]


@dataclass
class Failure:
    property: str
    program: str
    details: list[str]


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.failures)})"
        return f"{self.suite}: {self.cases} cases, {status}, {self.seconds:.2f}s"


def shrink(P: Program, prop: Property) -> Program:
    """Drop rules one at a time while ``prop`` keeps failing."""
    changed = True
    while changed:
        changed = False
        for i in range(len(P)):
            smaller = P.without(i)
            if prop(smaller):
                P, changed = smaller, True
                break
    return P


def _properties(name: str, seed: int) -> list[tuple[str, Property]]:
    if name == "gamma-args":
        return _randomized(seed)
    return SUITES[name]


def run_suite(name: str, cases: int, cfg: GeneratorConfig = GeneratorConfig(),
              extra: Iterable[Program] = ()) -> SuiteReport:
    """Run suite ``name`` on P1-P6, then ``extra``, then ``cases`` generated programs."""
    extra = tuple(extra)
    if name == "all":
        total = SuiteReport("all")
        for sub in SUITES:
            rep = run_suite(sub, cases, cfg, extra)
            total.cases += rep.cases
            total.failures += rep.failures
            total.seconds += rep.seconds
        return total
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    props = _properties(name, cfg.seed)
    report = SuiteReport(name)
    start = time.perf_counter()
    programs = [P for _, P in _fixture_items()]
    programs += extra
    programs += gen_programs(cfg, cases)
    for P in programs:
        report.cases += 1
        for pname, prop in props:
            if prop(P):
                small = shrink(P, prop)
                report.failures.append(Failure(pname, render(small), prop(small)))
    report.seconds = time.perf_counter() - start
    log.info(report.summary())
    return report
