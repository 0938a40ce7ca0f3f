"""Carrier genus census of knot diagrams and of their connected sums.

For each arrow count the script tallies canonical knot diagrams by genus,
then checks every connected sum of two small diagrams at every pair of break
points.  A sum is additive unless both break arcs have one boundary curve on
both sides; then it loses exactly one handle.

    python3 scripts/genus_census.py --max-arrows 4 --sum-arrows 2
"""

from __future__ import annotations

import argparse
import itertools
from collections import Counter
from dataclasses import dataclass

from vknot.gauss import GaussDiagram, Token, canonical_form, connected_sum
from vknot.surface import OVER_IN, OVER_OUT, UNDER_IN, UNDER_OUT, genus, rotation_system


@dataclass
class Config:
    max_arrows: int = 4
    sum_arrows: int = 2


def knot_words(n):
    """Every labelled single-circle word with ``n`` arrows."""

    def matchings(points):
        if not points:
            yield ()
            return
        for i in range(1, len(points)):
            rest = points[1:i] + points[i + 1:]
            for m in matchings(rest):
                yield ((points[0], points[i]),) + m

    for m in matchings(list(range(2 * n))):
        for dirs in itertools.product((True, False), repeat=n):
            for signs in itertools.product((1, -1), repeat=n):
                word = [None] * (2 * n)
                for k, (p, q) in enumerate(m):
                    tail, head = (p, q) if dirs[k] else (q, p)
                    word[tail] = Token(True, k + 1, signs[k])
                    word[head] = Token(False, k + 1, signs[k])
                yield GaussDiagram((tuple(word),))


def canonical_knots(n):
    reps = {}
    for d in knot_words(n):
        reps.setdefault(canonical_form(d), d)
    return list(reps.values())


def one_faced(d, b):
    """Whether the arc entering slot ``b`` has the same boundary curve on both sides."""
    if not d.n_arrows:
        return False
    rs = rotation_system(d)
    face_of = {}
    for i, f in enumerate(rs.faces()):
        for x in f:
            face_of[x] = i
    word = d.circles[0]
    vid = {lab: k for k, lab in enumerate(rs.labels)}
    t, u = word[b - 1], word[b]
    out_dart = 4 * vid[t.label] + (OVER_OUT if t.over else UNDER_OUT)
    in_dart = 4 * vid[u.label] + (OVER_IN if u.over else UNDER_IN)
    return face_of[out_dart] == face_of[in_dart]


def run(cfg: Config) -> None:
    print("arrows  diagrams  genus histogram")
    for n in range(cfg.max_arrows + 1):
        reps = canonical_knots(n)
        hist = Counter(genus(d).genus for d in reps)
        print(f"{n:6d}  {len(reps):8d}  {dict(sorted(hist.items()))}")

    reps = [d for n in range(cfg.sum_arrows + 1) for d in canonical_knots(n)]
    g = [genus(d).genus for d in reps]
    tally = Counter()
    predicted = 0
    for i, d1 in enumerate(reps):
        for k, d2 in enumerate(reps):
            for b1 in range(max(1, 2 * d1.n_arrows)):
                for b2 in range(max(1, 2 * d2.n_arrows)):
                    defect = g[i] + g[k] - genus(connected_sum(d1, b1, d2, b2)).genus
                    tally[defect] += 1
                    predicted += defect == (one_faced(d1, b1) and one_faced(d2, b2))
    total = sum(tally.values())
    print(f"\nconnected sums of knots with <= {cfg.sum_arrows} arrows: {total}")
    print(f"genus defect g1 + g2 - g(sum): {dict(sorted(tally.items()))}")
    print(f"defect predicted by one-faced break arcs: {predicted}/{total}")


def main() -> None:
    p = argparse.ArgumentParser(description="carrier genus census")
    p.add_argument("--max-arrows", type=int, default=Config.max_arrows)
    p.add_argument("--sum-arrows", type=int, default=Config.sum_arrows)
    a = p.parse_args()
    run(Config(a.max_arrows, a.sum_arrows))


if __name__ == "__main__":
    main()
