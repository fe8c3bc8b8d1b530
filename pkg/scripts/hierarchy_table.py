"""Justified sets of P1-P6 under every configuration, and which fixtures
make each edge of the hierarchy strict.

    python3 scripts/hierarchy_table.py [--markdown]
"""

import argparse

from elparg import least_fixpoint
from elparg.attacks import AttackKind
from elparg.generator import fixtures
from elparg.suites import HIERARCHY_NODES, strict_edge_witnesses


def show(S):
    return "{" + ", ".join(sorted(map(str, S))) + "}"


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--markdown", action="store_true")
    ns = ap.parse_args()
    fx = fixtures()
    kinds = [k.value for k in AttackKind]

    for name, P in fx.items():
        print(f"{name}:")
        for x in kinds:
            row = [f"{x}/{y}={len(least_fixpoint(P, f'{x}/{y}'))}" for y in kinds]
            print("  " + "  ".join(row))
        for node, group in HIERARCHY_NODES.items():
            print(f"  {' = '.join(group):30} {show(least_fixpoint(P, node))}")

    print()
    witnesses = strict_edge_witnesses(fx)
    if ns.markdown:
        print("| lower | upper | strict on |")
        print("|---|---|---|")
    for (lo, hi), names in witnesses.items():
        if ns.markdown:
            print(f"| {lo} | {hi} | {', '.join(names) or '-'} |")
        else:
            print(f"{lo:6} < {hi:6}  {', '.join(names) or 'NOT WITNESSED'}")


if __name__ == "__main__":
    main()
