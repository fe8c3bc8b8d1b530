from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from elparg import (AttackKind, JustificationConfig, acceptable, attacks_by, consequences,
                    f_operator, labelling, least_fixpoint, lit, minimal_arguments,
                    parse_program)
from elparg.attacks import HIERARCHY_KINDS, inverse, kind_leq, relation
from elparg.generator import fixtures
from elparg.semantics import all_configs, fixpoint_of_pairs, fixpoint_stages
from elparg.suites import HIERARCHY_EDGES, HIERARCHY_NODES, strict_edge_witnesses

from .golden import GOLDEN_CASES, PQ
from .strategies import programs

K = AttackKind
FX = fixtures()


def J(P, cfg):
    return least_fixpoint(P, cfg)


def names(S):
    return frozenset(str(A) for A in S)


def by_name(P, text):
    return next(A for A in minimal_arguments(P) if str(A) == text)


def kleene(P, cfg):
    """Independent least fixpoint using the pairwise attack definitions."""
    cfg = JustificationConfig.parse(cfg)
    args = minimal_arguments(P)
    S = set()
    while True:
        nxt = {
            A for A in args
            if all(any(attacks_by(cfg.defence, C, B) for C in S)
                   for B in args if attacks_by(cfg.attack, B, A))
        }
        if nxt == S:
            return frozenset(S)
        S = nxt


@pytest.mark.parametrize("name,cfg,expected", GOLDEN_CASES,
                         ids=[f"{n}-{c}" for n, c, _ in GOLDEN_CASES])
def test_golden(name, cfg, expected):
    assert names(J(FX[name], cfg)) == expected


def test_config_parsing():
    cfg = JustificationConfig.parse("sa/su")
    assert cfg == JustificationConfig(K.STRONGLY_ATTACKS, K.STRONGLY_UNDERCUTS)
    assert str(cfg) == "sa/su"
    assert JustificationConfig("u", "a").defence is K.ATTACKS
    with pytest.raises(ValueError):
        JustificationConfig.parse("u/x")
    assert len(all_configs()) == 36


def test_acceptable_examples():
    P1, P2 = FX["P1"], FX["P2"]
    assert acceptable(P2, by_name(P2, "[-p]"), set(), "u/a")
    assert acceptable(P2, by_name(P2, "[q :- not p]"), {by_name(P2, "[-p]")}, "u/a")
    assert not acceptable(P1, by_name(P1, "[p :- not q]"), set(), "u/u")


def test_f_operator_examples():
    P2 = FX["P2"]
    assert names(f_operator(P2, "u/a", set())) == {"[-p]"}
    assert names(f_operator(P2, "u/a", {by_name(P2, "[-p]")})) == {"[-p]", "[q :- not p]"}


def test_stages_p2():
    assert [names(S) for S in fixpoint_stages(FX["P2"], "u/a")] == [
        set(), {"[-p]"}, {"[-p]", "[q :- not p]"}]


def test_labelling_examples():
    lab = labelling(FX["P2"], "u/a")
    assert names(lab.justified) == {"[-p]", "[q :- not p]"}
    assert names(lab.overruled) == {"[p :- not q]"}
    assert lab.defensible == frozenset()
    lab = labelling(FX["P1"], "u/u")
    assert lab.justified == lab.overruled == frozenset()
    assert names(lab.defensible) == PQ
    lab = labelling(parse_program(""), "u/a")
    assert lab.justified == lab.overruled == lab.defensible == frozenset()
    assert lab.to_json() == {"justified": [], "overruled": [], "defensible": []}


def test_consequences_examples():
    c = consequences(FX["P2"], "u/a")
    assert c.T == {lit("-p"), lit("q")} and c.F == {lit("p"), lit("-q")}
    assert not c.contradictory
    c = consequences(FX["P5"], "u/a")
    assert c.T == {lit("-p")} and c.F == {lit("p")}
    c = consequences(parse_program("p. -p."), "u/a")
    assert c.T == c.F == {lit("p"), lit("-p")}
    assert c.contradictory
    assert c.to_json() == {"T": ["-p", "p"], "notF": ["-p", "p"]}


def test_labelling_overlaps_when_contradictory():
    lab = labelling(parse_program("p. -p."), "u/a")
    assert lab.justified == lab.overruled
    assert lab.defensible == frozenset()


def test_strong_defence_fails_for_strong_attack():
    # x must contain undercut: with x = sa the two defences differ on P4
    P4 = FX["P4"]
    assert J(P4, "sa/u") != J(P4, "sa/su")
    assert J(P4, "sa/a") != J(P4, "sa/sa")


def test_every_edge_strict_on_some_fixture():
    witnesses = strict_edge_witnesses(FX)
    assert set(witnesses) == set(HIERARCHY_EDGES)
    assert all(witnesses.values()), [e for e, w in witnesses.items() if not w]


@settings(deadline=None)
@given(programs(), st.sampled_from(all_configs()))
def test_matches_pairwise_kleene(P, cfg):
    assert J(P, cfg) == kleene(P, str(cfg))


@settings(deadline=None)
@given(programs(), st.sampled_from(all_configs()))
def test_kleene_chain(P, cfg):
    stages = fixpoint_stages(P, cfg)
    assert stages[0] == frozenset()
    assert all(a < b for a, b in zip(stages, stages[1:]))
    assert len(stages) - 1 <= len(minimal_arguments(P))
    assert f_operator(P, cfg, stages[-1]) == stages[-1]


@settings(deadline=None)
@given(programs(), st.sampled_from(all_configs()), st.data())
def test_f_monotone(P, cfg, data):
    args = minimal_arguments(P)
    if not args:
        return
    S = data.draw(st.sets(st.sampled_from(args)))
    T = S | data.draw(st.sets(st.sampled_from(args)))
    assert f_operator(P, cfg, S) <= f_operator(P, cfg, T)


@settings(deadline=None)
@given(programs())
def test_kind_monotonicity(P):
    for x, y, x2, y2 in product(K, repeat=4):
        if kind_leq(x2, x) and kind_leq(y, y2):
            assert J(P, f"{x}/{y}") <= J(P, f"{x2}/{y2}")


@settings(deadline=None)
@given(programs())
def test_strong_defence(P):
    n = len(minimal_arguments(P))
    u_inv = inverse(relation(P, K.UNDERCUTS)).pairs
    for x in ("u", "a", "d"):
        xs = relation(P, K(x)).pairs
        for y in K:
            ys = relation(P, y).pairs
            assert fixpoint_of_pairs(n, xs, ys) == fixpoint_of_pairs(n, xs, ys - u_inv)
        assert J(P, f"{x}/u") == J(P, f"{x}/su")
        assert J(P, f"{x}/a") == J(P, f"{x}/sa")
        assert J(P, f"{x}/a") == J(P, f"{x}/d")


@settings(deadline=None)
@given(programs())
def test_attack_containing_strong_attack(P):
    for x in ("sa", "d", "a"):
        assert J(P, f"{x}/u") == J(P, f"{x}/d") == J(P, f"{x}/a")
    assert J(P, "sa/su") == J(P, "sa/sa")
    assert J(P, "su/a") == J(P, "su/d")


@settings(deadline=None)
@given(programs())
def test_hierarchy(P):
    for group in HIERARCHY_NODES.values():
        assert len({J(P, c) for c in group}) == 1, group
    for lo, hi in HIERARCHY_EDGES:
        assert J(P, lo) <= J(P, hi), (lo, hi)


@settings(deadline=None)
@given(programs())
def test_attack_defence_grounded_is_bottom(P):
    base = J(P, "a/u")
    for y in HIERARCHY_KINDS:
        assert J(P, f"a/{y}") == base
    for x, y in product(HIERARCHY_KINDS, repeat=2):
        assert base <= J(P, f"{x}/{y}")


@settings(deadline=None)
@given(programs())
def test_labelling_cover(P):
    lab = labelling(P, "u/a")
    args = set(minimal_arguments(P))
    assert lab.justified | lab.overruled | lab.defensible == args
    assert not lab.defensible & (lab.justified | lab.overruled)
    if not consequences(P, "u/a").contradictory:
        assert not lab.justified & lab.overruled
