"""Timing smoke test for the two heaviest exact kernels.

Runs the determinant-permanent Hamiltonian path count on a random
digraph and the Ryser permanent on a random adjacency matrix, printing
one line per kernel.  Informational by default; --enforce makes the
stated budgets gate the exit code.
"""

import argparse
import time
from dataclasses import dataclass

from redeiberge.digraph import random_digraph
from redeiberge.hamilton import ham_detper
from redeiberge.ringmat import permanent_ryser


@dataclass
class SmokeConfig:
    detper_n: int = 16
    detper_seed: int = 160
    detper_budget_s: float = 300.0
    ryser_n: int = 18
    ryser_seed: int = 180
    ryser_budget_s: float = 120.0
    density: float = 0.5
    enforce: bool = False


def run(config: SmokeConfig) -> int:
    failures = 0

    def stage(label: str, budget: float, fn):
        nonlocal failures
        start = time.monotonic()
        value = fn()
        elapsed = time.monotonic() - start
        ok = elapsed <= budget
        verdict = "ok" if ok else "OVER BUDGET"
        print(f"{label}: value={value} time={elapsed:.1f}s budget={budget:.0f}s {verdict}")
        if not ok:
            failures += 1

    stage(
        f"ham_detper n={config.detper_n}",
        config.detper_budget_s,
        lambda: ham_detper(
            random_digraph(config.detper_n, config.density, config.detper_seed)
        ),
    )
    stage(
        f"ryser permanent n={config.ryser_n}",
        config.ryser_budget_s,
        lambda: permanent_ryser(
            random_digraph(
                config.ryser_n, config.density, config.ryser_seed
            ).adjacency()
        ),
    )
    return 1 if (config.enforce and failures) else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--detper-n", type=int, default=16)
    parser.add_argument("--ryser-n", type=int, default=18)
    parser.add_argument("--density", type=float, default=0.5)
    parser.add_argument("--seed", type=int, default=None,
                        help="override both stage seeds")
    parser.add_argument("--enforce", action="store_true")
    args = parser.parse_args()
    config = SmokeConfig(
        detper_n=args.detper_n,
        ryser_n=args.ryser_n,
        density=args.density,
        enforce=args.enforce,
    )
    if args.seed is not None:
        config.detper_seed = args.seed
        config.ryser_seed = args.seed
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
