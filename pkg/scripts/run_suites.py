"""Run every property suite over a generated corpus and print a report.

    python3 scripts/run_suites.py --cases 300 --seed 1
"""

import argparse
import logging
import sys
from dataclasses import dataclass

from elparg import GeneratorConfig, run_suite
from elparg.suites import SUITES


@dataclass(frozen=True)
class Experiment:
    cases: int = 200
    seed: int = 0
    atoms: int = 6
    rules: int = 12
    max_body: int = 2


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(Experiment()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    ap.add_argument("--suite", action="append", choices=list(SUITES))
    ns = ap.parse_args()
    exp = Experiment(ns.cases, ns.seed, ns.atoms, ns.rules, ns.max_body)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    sys.setrecursionlimit(20000)

    cfg = GeneratorConfig(seed=exp.seed, atoms=exp.atoms, rules=exp.rules, max_body=exp.max_body)
    failed = 0
    for name in ns.suite or SUITES:
        report = run_suite(name, exp.cases, cfg)
        for f in report.failures:
            print(f"  [{f.property}] {f.program.strip()!r}: {'; '.join(f.details)}")
        failed += len(report.failures)
    print(f"{exp}: {'all suites passed' if not failed else f'{failed} failures'}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
