#!/usr/bin/env python3
"""Sweep the law catalogue over randomly generated spaces.

Runs the exhaustive checker on a batch of seeded random spaces and prints,
per law, how many spaces produced a counterexample. Useful for exploring
which laws survive beyond the worked example; the gamma-vs-semi upper chain
is the one that does not.

    python3 scripts/random_sweep.py --count 100 --sizes 3,4,5 --seed 0
"""

from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from gotas.oracle import PROPOSITION_IDS, check_propositions, random_space


@dataclass
class SweepConfig:
    count: int = 100
    sizes: tuple[int, ...] = (3, 4, 5)
    seed: int = 0
    show_witnesses: int = 3


def run(config: SweepConfig) -> int:
    rng = random.Random(config.seed)
    failing_spaces = Counter()
    witnesses: list[str] = []
    started = time.monotonic()
    for i in range(config.count):
        size = config.sizes[i % len(config.sizes)]
        space = random_space(rng, size)
        label = f"space #{i} (size {size})"
        for report in check_propositions(space, space_label=label):
            if not report.passed:
                failing_spaces[report.proposition] += 1
                if len(witnesses) < config.show_witnesses:
                    v = report.violations[0]
                    witnesses.append(f"{report.proposition} @ {v.space}: {v.detail}")
    elapsed = time.monotonic() - started

    print(f"{config.count} spaces, sizes {config.sizes}, seed {config.seed}, "
          f"{elapsed:.1f}s")
    for pid in PROPOSITION_IDS:
        print(f"  {pid:<9} failed on {failing_spaces.get(pid, 0)} spaces")
    if witnesses:
        print("sample witnesses:")
        for line in witnesses:
            print(f"  {line}")
    return 1 if failing_spaces else 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--sizes", default="3,4,5",
                        help="comma separated universe sizes, cycled")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--show-witnesses", type=int, default=3)
    args = parser.parse_args()
    config = SweepConfig(
        count=args.count,
        sizes=tuple(int(s) for s in args.sizes.split(",")),
        seed=args.seed,
        show_witnesses=args.show_witnesses,
    )
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
