from itertools import product

import pytest
from hypothesis import given, settings

from elparg import (Argument, is_argument, is_minimal, lit, minimal_arguments, parse_program,
                    subarguments)
from elparg.generator import fixtures

from .strategies import programs


def rules_of(text):
    return parse_program(text).rules


def arg(text):
    return Argument(rules_of(text))


def names(args):
    return {str(A) for A in args}


def oracle(P):
    """Every rule sequence up to length |P|, filtered by the definitions.

    Written without the package's helpers: chaining and minimality are
    checked directly on tuples of rules.
    """
    def chained(seq):
        return all(
            r.objective_body <= {s.head for s in seq[i + 1:]}
            for i, r in enumerate(seq)
        )

    def sub_seqs(seq):
        n = len(seq)
        for mask in range(1, 2**n - 1):
            yield tuple(seq[i] for i in range(n) if mask >> i & 1)

    found = set()
    for n in range(1, len(P) + 1):
        for seq in product(P.rules, repeat=n):
            if not chained(seq):
                continue
            heads = {r.head for r in seq}
            subs = [{r.head for r in s} for s in sub_seqs(seq) if chained(s)]
            if any(all(L not in c for c in subs) for L in heads):
                found.add(frozenset(seq))
    return found


def test_is_argument_examples():
    P1 = fixtures()["P1"]
    assert is_argument(P1, rules_of("q :- not p."))
    P = parse_program("p :- q, not r. q.")
    assert not is_argument(P, rules_of("p :- q, not r."))
    assert is_argument(P, rules_of("p :- q, not r. q."))
    assert not is_argument(P, rules_of("q. p :- q, not r."))
    assert not is_argument(P, ())
    assert not is_argument(P, rules_of("s."))


def test_is_minimal_examples():
    P1, P2 = fixtures()["P1"], fixtures()["P2"]
    assert is_minimal(P2, arg("-p."))
    assert not is_minimal(P1, arg("p :- not q. q :- not p."))
    P = parse_program("p :- q, not r. q.")
    assert is_minimal(P, arg("p :- q, not r. q."))


def test_subarguments_examples():
    assert subarguments(arg("q.")) == {arg("q.")}
    assert subarguments(arg("p :- q, not r. q.")) == {arg("p :- q, not r. q."), arg("q.")}
    assert subarguments(arg("-p.")) == {arg("-p.")}


def test_argument_accessors():
    A = arg("p :- q, not r. q :- not -s.")
    assert A.conclusions == {lit("p"), lit("q")}
    assert A.assumptions == {lit("r"), lit("-s")}
    assert A.root == lit("p")
    assert str(A) == "[p :- q, not r; q :- not -s]"
    assert A.to_json() == {
        "rules": ["p :- q, not r", "q :- not -s"],
        "conclusions": ["p", "q"],
        "assumptions": ["-s", "r"],
    }
    with pytest.raises(ValueError):
        Argument(())


def test_identity_is_rule_set():
    assert arg("p :- q. q.") == arg("p :- q. q.")
    assert Argument(rules_of("q. p :- q.")) == arg("p :- q. q.")
    assert len({arg("p :- q. q."), Argument(rules_of("q. p :- q."))}) == 1


def test_minimal_arguments_examples():
    fx = fixtures()
    assert names(minimal_arguments(fx["P1"])) == {"[p :- not q]", "[q :- not p]"}
    assert names(minimal_arguments(fx["P3"])) == {
        "[p :- not q]", "[q :- not r]", "[r :- not s]", "[s :- not p]", "[-p]"}
    assert minimal_arguments(parse_program("p :- p.")) == ()
    assert names(minimal_arguments(parse_program("p :- q, not r. q."))) == {
        "[q]", "[p :- q, not r; q]"}


def test_minimal_arguments_sorted_and_rooted():
    P = parse_program("p :- q, r. q :- s. r :- s. s. q.")
    args = minimal_arguments(P)
    assert [str(A) for A in args] == sorted(str(A) for A in args)
    # shared subargument s is used once; the two rules for q give two arguments for p
    assert names(args) == {"[p :- q, r; r :- s; q :- s; s]", "[p :- q, r; r :- s; s; q]",
                           "[q :- s; s]", "[q]", "[r :- s; s]", "[s]"}
    for A in args:
        assert is_argument(P, A.rules)


def test_cycle_through_alternative_rule():
    # p needs q, q can come from p (cyclic) or from the fact
    P = parse_program("p :- q. q :- p. q.")
    assert names(minimal_arguments(P)) == {"[q]", "[p :- q; q]"}


@pytest.mark.parametrize("name", [f"P{i}" for i in range(1, 7)])
def test_fixtures_match_oracle(name):
    P = fixtures()[name]
    assert {frozenset(A.rules) for A in minimal_arguments(P)} == oracle(P)


@settings(max_examples=150, deadline=None)
@given(programs(max_rules=4))
def test_oracle_agreement(P):
    assert {frozenset(A.rules) for A in minimal_arguments(P)} == oracle(P)


@settings(deadline=None)
@given(programs())
def test_members_are_minimal_arguments(P):
    for A in minimal_arguments(P):
        assert is_argument(P, A.rules)
        assert is_minimal(P, A)
        heads = [r.head for r in A.rules]
        assert len(heads) == len(set(heads))
        # minimal only for its root
        assert A.root not in set().union(*(S.conclusions for S in subarguments(A) if S != A))


@settings(deadline=None)
@given(programs())
def test_minimal_subargument_for_each_conclusion(P):
    args = set(minimal_arguments(P))
    for A in args:
        for L in A.conclusions:
            assert any(L == S.root for S in subarguments(A) if S in args)
