"""Wall-clock cost of the dialogue prover against the fixpoint, per program size.

    python3 scripts/prover_timing.py --count 100 --atoms 6 --rules 12 --max-body 3
"""

import argparse
import sys
import time
from dataclasses import replace

from elparg import GeneratorConfig, least_fixpoint, minimal_arguments
from elparg.dialectic import provable_arguments
from elparg.generator import gen_programs
from elparg.semantics import all_configs


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--atoms", type=int, default=6)
    ap.add_argument("--rules", type=int, default=12)
    ap.add_argument("--max-body", type=int, default=2)
    ap.add_argument("--slow", type=float, default=1.0, help="report programs slower than this")
    ns = ap.parse_args()
    sys.setrecursionlimit(20000)
    cfg = replace(GeneratorConfig(), seed=ns.seed, atoms=ns.atoms, rules=ns.rules,
                  max_body=ns.max_body)

    by_size: dict[int, list[float]] = {}
    disagreements = 0
    for k, P in enumerate(gen_programs(cfg, ns.count)):
        n = len(minimal_arguments(P))
        start = time.perf_counter()
        for c in all_configs():
            disagreements += provable_arguments(P, c) != least_fixpoint(P, c)
        dt = time.perf_counter() - start
        by_size.setdefault(n, []).append(dt)
        if dt > ns.slow:
            print(f"slow: program {k}, {n} arguments, {dt:.2f}s")

    print(f"{'args':>5} {'programs':>9} {'mean s':>8} {'max s':>8}")
    for n in sorted(by_size):
        ts = by_size[n]
        print(f"{n:5d} {len(ts):9d} {sum(ts) / len(ts):8.4f} {max(ts):8.4f}")
    print(f"disagreements with the fixpoint: {disagreements}")
    return 1 if disagreements else 0


if __name__ == "__main__":
    sys.exit(main())
