"""Bounded bidirectional move search over canonical forms.

The search is a semi-decision procedure.  It returns

* :class:`Proven` with a replayable move path,
* :class:`Distinguished` when an invariant of the regime differs, or
* :class:`Unknown` when the budget runs out.

It never reports inequivalence without an invariant witness.

Search proceeds in stages of increasing diagram-size cap, from the larger
input size up to ``max_arrows``.  Each stage is a level-synchronised
bidirectional breadth-first search.  Every level is expanded in parallel
chunks and then merged in frontier order, so the verdict depends on neither
scheduling nor thread count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import BudgetExceeded, NotAKnot
from .gauss import GaussDiagram, canonical_form, parse
from .invariants import f_polynomial, odd_writhe
from .moves import MoveSet, apply, enumerate_moves

__all__ = [
    "SearchBudget",
    "Proven",
    "Distinguished",
    "Unknown",
    "equivalent_within",
    "unknot_with_forbidden",
    "orbit",
    "replay_path",
]


@dataclass(frozen=True)
class SearchBudget:
    """Caps for one search.

    ``max_arrows`` of ``None`` means four more than the larger input.  The
    node cap applies to each size stage separately.  ``seed`` is recorded in
    certificates; the breadth-first order itself needs no randomness.
    """

    max_arrows: int | None = None
    max_nodes: int = 10**6
    max_depth: int = 24
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        if self.max_arrows is not None and self.max_arrows < 0:
            raise ValueError("max_arrows must be non-negative")
        if self.max_nodes < 1 or self.max_depth < 1 or self.threads < 1:
            raise ValueError("max_nodes, max_depth and threads must be positive")

    def resolve_arrows(self, *diagrams) -> int:
        if self.max_arrows is not None:
            return self.max_arrows
        return max(d.n_arrows for d in diagrams) + 4


@dataclass(frozen=True)
class Proven:
    path: tuple
    chain: tuple = field(default=(), compare=False)

    def __len__(self):
        return len(self.path)


@dataclass(frozen=True)
class Distinguished:
    invariant: str
    values: tuple


@dataclass(frozen=True)
class Unknown:
    reason: str
    nodes: int
    stages: tuple = ()


def _expand(codes, regime, cap, threads):
    def children(code):
        d = parse(code)
        seen = set()
        out = []
        for m in enumerate_moves(d, regime, max_arrows=cap):
            c = canonical_form(apply(d, m))
            if c not in seen:
                seen.add(c)
                out.append(c)
        return out

    if threads > 1 and len(codes) > 1:
        chunk = -(-len(codes) // threads)
        groups = [codes[i:i + chunk] for i in range(0, len(codes), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda g: [children(c) for c in g], groups))
        return [kids for part in parts for kids in part]
    return [children(c) for c in codes]


def _chain(parents, node):
    out = []
    while node is not None:
        out.append(node)
        node = parents[node]
    return out


def _bidirectional(c1, c2, regime, cap, budget):
    """One size stage.  Returns (chain or None, status, nodes)."""
    parents = ({c1: None}, {c2: None})
    if c1 == c2:
        return [c1], "met", 1
    frontiers = [[c1], [c2]]
    depth = [0, 0]
    nodes = 2
    while frontiers[0] and frontiers[1]:
        if depth[0] + depth[1] >= budget.max_depth:
            return None, "depth", nodes
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        own, other = parents[side], parents[1 - side]
        expanded = _expand(frontiers[side], regime, cap, budget.threads)
        new = []
        for parent, kids in zip(frontiers[side], expanded):
            for k in kids:
                if k in own:
                    continue
                own[k] = parent
                new.append(k)
                nodes += 1
                if k in other:
                    left = _chain(parents[0], k)[::-1]
                    right = _chain(parents[1], k)[1:]
                    return left + right, "met", nodes
                if nodes >= budget.max_nodes:
                    return None, "nodes", nodes
        frontiers[side] = new
        depth[side] += 1
    return None, "exhausted", nodes


def replay_path(d1: GaussDiagram, chain, regime: MoveSet) -> tuple:
    """Turn a chain of canonical forms into moves applicable to ``d1`` itself."""
    moves = []
    current = d1
    for target in chain[1:]:
        for m in enumerate_moves(current, regime):
            nxt = apply(current, m)
            if canonical_form(nxt) == target:
                moves.append(m)
                current = nxt
                break
        else:
            raise AssertionError(f"no {regime.value} move reaches {target} from {current}")
    return tuple(moves)


def _invariant_witness(d1, d2, regime):
    k1, k2 = len(d1.circles), len(d2.circles)
    if k1 != k2:
        return Distinguished("component_count", (k1, k2))
    if regime is not MoveSet.VIRTUAL:
        return None
    if k1 == 1:
        j1, j2 = odd_writhe(d1), odd_writhe(d2)
        if j1 != j2:
            return Distinguished("odd_writhe", (j1, j2))
    try:
        f1, f2 = f_polynomial(d1), f_polynomial(d2)
    except BudgetExceeded:
        return None
    if f1 != f2:
        return Distinguished("f_polynomial", (str(f1), str(f2)))
    return None


def equivalent_within(
    d1: GaussDiagram,
    d2: GaussDiagram,
    s: MoveSet = MoveSet.VIRTUAL,
    b: SearchBudget | None = None,
):
    """Try to connect ``d1`` to ``d2`` by moves of regime ``s`` within budget ``b``."""
    b = b or SearchBudget()
    c1, c2 = canonical_form(d1), canonical_form(d2)
    if c1 == c2:
        return Proven(replay_path(d1, [c1], s), (c1,))
    witness = _invariant_witness(d1, d2, s)
    if witness is not None:
        return witness
    top = b.resolve_arrows(d1, d2)
    start = max(d1.n_arrows, d2.n_arrows)
    stages = []
    total = 0
    for cap in range(start, max(top, start) + 1):
        chain, status, nodes = _bidirectional(c1, c2, s, cap, b)
        total += nodes
        stages.append((cap, status, nodes))
        if chain is not None:
            return Proven(replay_path(d1, chain, s), tuple(chain))
        if status == "nodes":
            return Unknown("node budget exhausted", total, tuple(stages))
    reason = "depth limit reached" if stages and stages[-1][1] == "depth" else "no path within size cap"
    return Unknown(reason, total, tuple(stages))


def unknot_with_forbidden(d: GaussDiagram, b: SearchBudget | None = None):
    """Search for an unknotting sequence using both forbidden moves."""
    if len(d.circles) != 1:
        raise NotAKnot(f"expected a knot, got {len(d.circles)} circles")
    return equivalent_within(d, parse("@"), MoveSet.ALL_FORBIDDEN, b)


def orbit(d: GaussDiagram, s: MoveSet = MoveSet.VIRTUAL, b: SearchBudget | None = None) -> frozenset:
    """Canonical forms reachable from ``d`` within the budget, in a deterministic prefix."""
    b = b or SearchBudget()
    cap = b.resolve_arrows(d)
    root = canonical_form(d)
    seen = {root}
    if b.max_nodes <= 1:
        return frozenset(seen)
    frontier = [root]
    for _ in range(b.max_depth):
        if not frontier:
            break
        new = []
        for kids in _expand(frontier, s, cap, b.threads):
            for k in kids:
                if k not in seen:
                    seen.add(k)
                    new.append(k)
                    if len(seen) >= b.max_nodes:
                        return frozenset(seen)
        frontier = new
    return frozenset(seen)

