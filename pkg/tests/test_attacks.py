from itertools import product

from hypothesis import given, settings

from elparg import (Argument, AttackKind, attacks_by, inverse, minimal_arguments, parse_program,
                    rebuts, relation, undercuts)
from elparg.attacks import kind_leq, to_dot
from elparg.generator import fixtures

from .strategies import programs

K = AttackKind


def arg(text):
    return Argument(parse_program(text).rules)


def prose(kind, A, B):
    """Attack kinds spelled out from conclusions and assumptions only."""
    def u(X, Y):
        return any(L in Y.assumptions for L in X.conclusions)

    def r(X, Y):
        return any(
            L.atom == M.atom and L.negated != M.negated
            for L in X.conclusions for M in Y.conclusions
        )

    return {
        "u": lambda: u(A, B),
        "r": lambda: r(A, B),
        "a": lambda: u(A, B) or r(A, B),
        "d": lambda: u(A, B) or (r(A, B) and not u(B, A)),
        "sa": lambda: (u(A, B) or r(A, B)) and not u(B, A),
        "su": lambda: u(A, B) and not u(B, A),
    }[kind.value]()


def named_pairs(P, kind):
    args = minimal_arguments(P)
    return {(str(args[i]), str(args[j])) for i, j in relation(P, kind).pairs}


def test_undercut_examples():
    assert undercuts(arg("p :- not q."), arg("q :- not p."))
    assert not undercuts(arg("-p."), arg("q :- not p."))
    A = arg("p :- not p.")
    assert undercuts(A, A)


def test_rebut_examples():
    P2 = minimal_arguments(fixtures()["P2"])
    neg_p, p, q = P2
    assert str(neg_p) == "[-p]" and str(p) == "[p :- not q]" and str(q) == "[q :- not p]"
    assert rebuts(neg_p, p)
    assert not rebuts(neg_p, q)
    for A, B in product(P2, repeat=2):
        assert rebuts(A, B) == rebuts(B, A)


def test_attacks_by_examples():
    assert attacks_by(K.DEFEATS, arg("p :- not q."), arg("-p."))
    assert not attacks_by(K.DEFEATS, arg("p :- not -p."), arg("-p."))
    assert attacks_by(K.DEFEATS, arg("-p."), arg("p :- not -p."))
    P1 = minimal_arguments(fixtures()["P1"])
    assert not any(attacks_by(K.STRONGLY_UNDERCUTS, A, B) for A, B in product(P1, repeat=2))


def test_relation_examples():
    fx = fixtures()
    assert named_pairs(fx["P1"], K.UNDERCUTS) == {
        ("[p :- not q]", "[q :- not p]"), ("[q :- not p]", "[p :- not q]")}
    assert named_pairs(fx["P1"], K.STRONGLY_ATTACKS) == set()
    for k in K:
        assert relation(parse_program(""), k).pairs == frozenset()


def test_relation_p5():
    P5 = fixtures()["P5"]
    assert named_pairs(P5, K.ATTACKS) == {
        ("[-p]", "[p :- not -p]"), ("[p :- not -p]", "[-p]")}
    assert named_pairs(P5, K.DEFEATS) == {("[-p]", "[p :- not -p]")}
    assert named_pairs(P5, K.STRONGLY_UNDERCUTS) == {("[-p]", "[p :- not -p]")}


def test_inverse_examples():
    P1, P2 = fixtures()["P1"], fixtures()["P2"]
    u = relation(P1, K.UNDERCUTS)
    assert inverse(inverse(u)) == u
    assert inverse(u).pairs == u.pairs
    assert inverse(relation(P2, K.STRONGLY_UNDERCUTS)).pairs == frozenset()


def test_kind_order():
    chains = [("su", "u"), ("u", "d"), ("d", "a"), ("su", "sa"), ("sa", "d"), ("r", "a"),
              ("su", "a"), ("u", "a")]
    for x, y in chains:
        assert kind_leq(K(x), K(y))
    for x, y in [("u", "sa"), ("sa", "u"), ("r", "d"), ("a", "d"), ("u", "r"), ("su", "r")]:
        assert not kind_leq(K(x), K(y))


def test_lines_and_dot():
    P2 = fixtures()["P2"]
    assert relation(P2, K.UNDERCUTS).lines() == ["1 -> 2  [u]", "2 -> 1  [u]"]
    dot = to_dot([relation(P2, K.UNDERCUTS), relation(P2, K.REBUTS)])
    assert dot.startswith("digraph attacks {")
    assert dot.count(" -> ") == 4
    assert '[label="0: [-p]"]' in dot


def test_attackers_lists():
    rel = relation(fixtures()["P2"], K.ATTACKS)
    assert rel.attackers() == [[1], [0, 2], [1]]


@settings(deadline=None)
@given(programs())
def test_relational_matches_prose(P):
    args = minimal_arguments(P)
    for k in K:
        rel = relation(P, k)
        for (i, A), (j, B) in product(enumerate(args), repeat=2):
            expected = prose(k, A, B)
            assert attacks_by(k, A, B) == expected
            assert ((i, j) in rel) == expected


@settings(deadline=None)
@given(programs())
def test_hasse_inclusions(P):
    rel = {k: relation(P, k).pairs for k in K}
    assert rel[K.STRONGLY_UNDERCUTS] <= rel[K.UNDERCUTS] <= rel[K.DEFEATS] <= rel[K.ATTACKS]
    assert rel[K.STRONGLY_UNDERCUTS] <= rel[K.STRONGLY_ATTACKS] <= rel[K.DEFEATS]
    assert rel[K.REBUTS] <= rel[K.ATTACKS]
    for x, y in product(K, repeat=2):
        if kind_leq(x, y):
            assert rel[x] <= rel[y]


@settings(deadline=None)
@given(programs())
def test_symmetry_facts(P):
    r = relation(P, K.REBUTS)
    assert inverse(r).pairs == r.pairs
    su = relation(P, K.STRONGLY_UNDERCUTS)
    assert not su.pairs & inverse(su).pairs
    assert all(i != j for i, j in su.pairs)
    for k in K:
        rel = relation(P, k)
        assert inverse(inverse(rel)) == rel
