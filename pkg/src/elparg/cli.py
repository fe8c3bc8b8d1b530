"""Command-line front end: ``elparg <command> [options]``.

Exit codes: 0 on success (for ``prove``, the literal is provable; for
``check``, no property failed), 1 for a negative answer, 2 on errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace

from .arguments import minimal_arguments
from .attacks import AttackKind, relation, to_dot
from .dialectic import DialogueTree, export_tree, prove
from .generator import GeneratorConfig, gen_program
from .semantics import JustificationConfig, consequences, labelling
from .suites import SUITE_NAMES, run_suite
from .syntax import ParseError, Program, parse_literal, parse_program, render, sort_literals
from .wfsx import wfm_p

KINDS = [k.value for k in AttackKind]


class UsageError(Exception):
    pass


def _read(path: str) -> Program:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e.strerror}") from e
    return parse_program(text)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _lits(lits) -> str:
    return " ".join(str(L) for L in sort_literals(lits))


def _section(title: str, items) -> list[str]:
    return [f"{title}:", *(f"  {s}" for s in sorted(map(str, items)))]


def cmd_parse(ns) -> int:
    P = _read(ns.file)
    if ns.json:
        _emit({"rules": [str(r) for r in P]})
    else:
        sys.stdout.write(render(P))
    return 0


def cmd_args(ns) -> int:
    args = minimal_arguments(_read(ns.file))
    if ns.json:
        _emit([A.to_json() for A in args])
    else:
        for i, A in enumerate(args):
            print(f"{i}: {A}")
    return 0


def cmd_attacks(ns) -> int:
    P = _read(ns.file)
    kinds = ns.kind or KINDS
    rels = [relation(P, AttackKind(k)) for k in kinds]
    if ns.dot:
        sys.stdout.write(to_dot(rels))
    elif ns.json:
        _emit({
            "arguments": [str(A) for A in minimal_arguments(P)],
            "attacks": {str(r.kind): sorted(map(list, r.pairs)) for r in rels},
        })
    else:
        for r in rels:
            for line in r.lines():
                print(line)
    return 0


def cmd_justify(ns) -> int:
    P = _read(ns.file)
    cfg = JustificationConfig(ns.attack, ns.defence)
    lab = labelling(P, cfg)
    cons = consequences(P, cfg)
    if ns.json:
        _emit({"config": str(cfg), **lab.to_json(), **cons.to_json()})
        return 0
    lines = (_section("JUSTIFIED", lab.justified) + _section("OVERRULED", lab.overruled)
             + _section("DEFENSIBLE", lab.defensible))
    lines += [f"T: {_lits(cons.T)}".rstrip(), f"notF: {_lits(cons.F)}".rstrip()]
    print("\n".join(lines))
    return 0


def cmd_wfm(ns) -> int:
    res = wfm_p(_read(ns.file))
    if ns.json:
        out = res.to_json()
        if not ns.stages:
            del out["stages"]
        _emit(out)
        return 0
    if ns.stages:
        for k, I in enumerate(res.stages):
            print(f"I{k}: {_lits(I)}".rstrip())
    print(f"T: {_lits(res.wfm_p.T)}".rstrip())
    print(f"notF: {_lits(res.wfm_p.F)}".rstrip())
    print(f"contradictory: {'true' if res.contradictory else 'false'}")
    return 0


def _tree_lines(t: DialogueTree, depth: int = 0) -> list[str]:
    out = [f"{'  ' * depth}{t.move.index} {t.move}"]
    for c in t.children:
        out += _tree_lines(c, depth + 1)
    return out


def cmd_prove(ns) -> int:
    P = _read(ns.file)
    try:
        L = parse_literal(ns.literal)
    except ParseError as e:
        raise UsageError(f"bad literal {ns.literal!r}: {e}") from e
    cfg = JustificationConfig(ns.attack, ns.defence)
    tree = None
    for A in minimal_arguments(P):
        if L in A.conclusions:
            tree = prove(P, A, cfg)
            if tree is not None:
                break
    if ns.json:
        _emit({"literal": str(L), "config": str(cfg), "provable": tree is not None,
               "argument": str(tree.move.argument) if tree else None})
    elif tree is None:
        print(f"{L}: not provable under {cfg}")
    else:
        print(f"{L}: provable under {cfg}")
        print("\n".join(_tree_lines(tree)))
    if tree is not None and ns.dot:
        with open(ns.dot, "w", encoding="utf-8") as fh:
            fh.write(export_tree(tree))
    return 0 if tree is not None else 1


def _gen_config(ns) -> GeneratorConfig:
    try:
        return GeneratorConfig(
            seed=ns.seed, atoms=ns.atoms, rules=ns.rules, max_body=ns.max_body,
            explicit_neg_prob=ns.explicit_neg_prob, default_neg_prob=ns.default_neg_prob,
        )
    except ValueError as e:
        raise UsageError(str(e)) from e


def cmd_gen(ns) -> int:
    cfg = _gen_config(ns)
    programs = [gen_program(replace(cfg, seed=(cfg.seed + k) % 2**64)) for k in range(ns.count)]
    if ns.json:
        _emit([[str(r) for r in P] for P in programs])
        return 0
    for k, P in enumerate(programs):
        if k:
            print()
        print(f"% program {k}")
        sys.stdout.write(render(P))
    return 0


def cmd_check(ns) -> int:
    report = run_suite(ns.suite, ns.cases, _gen_config(ns))
    if ns.json:
        _emit({
            "suite": report.suite, "cases": report.cases, "ok": report.ok,
            "seconds": round(report.seconds, 3),
            "failures": [vars(f) for f in report.failures],
        })
    else:
        print(report.summary())
        for f in report.failures:
            print(f"\n[{f.property}]")
            sys.stdout.write(f.program)
            for d in f.details:
                print(f"  - {d}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    # --json/--seed may come before or after the subcommand; the subparser
    # copies use SUPPRESS so they only override when actually given
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit JSON instead of text")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help="random seed for gen/check (default 0)")

    parser = argparse.ArgumentParser(prog="elparg", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--seed", type=int, default=0, help="random seed for gen/check")
    parser.add_argument("-v", "--verbose", action="store_true", help="log timing to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    def kinds(p):
        p.add_argument("--attack", choices=KINDS, default="u")
        p.add_argument("--defence", choices=KINDS, default="a")

    def gen_opts(p):
        p.add_argument("--atoms", type=int, default=GeneratorConfig.atoms)
        p.add_argument("--rules", type=int, default=GeneratorConfig.rules)
        p.add_argument("--max-body", type=int, default=GeneratorConfig.max_body)
        p.add_argument("--explicit-neg-prob", type=float, default=GeneratorConfig.explicit_neg_prob)
        p.add_argument("--default-neg-prob", type=float, default=GeneratorConfig.default_neg_prob)

    p = add("parse", cmd_parse, "parse a program and print it normalised")
    p.add_argument("file", help="program file, or - for stdin")
    p = add("args", cmd_args, "list minimal arguments")
    p.add_argument("file")
    p = add("attacks", cmd_attacks, "list attack pairs between arguments")
    p.add_argument("file")
    p.add_argument("--kind", action="append", choices=KINDS, help="repeatable; default all")
    p.add_argument("--dot", action="store_true", help="print the attack graph as DOT")
    p = add("justify", cmd_justify, "justified, overruled and defensible arguments")
    p.add_argument("file")
    kinds(p)
    p = add("wfm", cmd_wfm, "well-founded model of the program")
    p.add_argument("file")
    p.add_argument("--stages", action="store_true", help="print each iteration")
    p = add("prove", cmd_prove, "search for a winning dialogue tree")
    p.add_argument("file")
    p.add_argument("literal")
    kinds(p)
    p.add_argument("--dot", metavar="OUT", help="write the winning tree as DOT")
    p = add("gen", cmd_gen, "generate random programs")
    gen_opts(p)
    p.add_argument("--count", type=int, default=1)
    p = add("check", cmd_check, "run a property suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    p.add_argument("--cases", type=int, default=100)
    gen_opts(p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    # dialogue search recurses once per move
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))
    try:
        return ns.func(ns)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
