"""Odd writhe census: distribution of J and the mirror antisymmetry J(d*) = -J(d).

    python3 scripts/j_mirror_census.py --max-arrows 4 --random 20000
"""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from vknot.gauss import GaussDiagram, Token, mirror
from vknot.invariants import odd_writhe
from vknot.surface import is_realizable


@dataclass
class Config:
    max_arrows: int = 8
    samples: int = 20_000
    seed: int = 0


def random_knot(rng, n):
    slots = list(range(2 * n))
    rng.shuffle(slots)
    word = [None] * (2 * n)
    for lab in range(1, n + 1):
        sign = rng.choice((1, -1))
        word[slots[2 * lab - 2]] = Token(True, lab, sign)
        word[slots[2 * lab - 1]] = Token(False, lab, sign)
    return GaussDiagram((tuple(word),))


def run(cfg: Config) -> None:
    rng = random.Random(cfg.seed)
    by_n = {n: Counter() for n in range(cfg.max_arrows + 1)}
    violations = classical_nonzero = 0
    for _ in range(cfg.samples):
        n = rng.randint(0, cfg.max_arrows)
        d = random_knot(rng, n)
        j = odd_writhe(d)
        by_n[n][j] += 1
        violations += odd_writhe(mirror(d)) != -j
        classical_nonzero += j != 0 and is_realizable(d)
    for n, hist in by_n.items():
        print(f"n={n}: " + " ".join(f"J={j}:{c}" for j, c in sorted(hist.items())))
    print(f"mirror antisymmetry violations: {violations}")
    print(f"realizable diagrams with J != 0: {classical_nonzero}")


def main() -> None:
    p = argparse.ArgumentParser(description="odd writhe census")
    p.add_argument("--max-arrows", type=int, default=Config.max_arrows)
    p.add_argument("--random", type=int, default=Config.samples, dest="samples")
    p.add_argument("--seed", type=int, default=Config.seed)
    a = p.parse_args()
    run(Config(a.max_arrows, a.samples, a.seed))


if __name__ == "__main__":
    main()
