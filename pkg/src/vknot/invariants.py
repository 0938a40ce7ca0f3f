"""Writhe, crossing parity, odd writhe and the bracket / f-polynomial state sum."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceeded, NotAKnot
from .gauss import GaussDiagram
from .poly import LOOP_VALUE, ONE, LaurentPoly
from .unionfind import UnionFind

__all__ = [
    "ParityVector",
    "writhe",
    "parity",
    "odd_writhe",
    "interlacement",
    "bracket",
    "f_polynomial",
    "state_loops",
    "DEFAULT_STATE_CAP",
]

DEFAULT_STATE_CAP = 24
_CHUNK = 1 << 13


@dataclass(frozen=True)
class ParityVector:
    """Parity bit per arrow label (1 = odd), labels in order of first appearance."""

    labels: tuple
    bits: tuple

    def as_dict(self) -> dict:
        return dict(zip(self.labels, self.bits))

    @property
    def odd_labels(self) -> frozenset:
        return frozenset(lab for lab, b in zip(self.labels, self.bits) if b)


def writhe(d: GaussDiagram) -> int:
    return sum(a.sign for a in d.arrows.values())


def _knot_word(d):
    if len(d.circles) != 1:
        raise NotAKnot(f"parity is defined for knots only, got {len(d.circles)} circles")
    return d.circles[0]


def parity(d: GaussDiagram) -> ParityVector:
    """Tokens strictly between the two occurrences of each label, mod 2."""
    word = _knot_word(d)
    first = {}
    bits = {}
    for i, tok in enumerate(word):
        if tok.label in first:
            bits[tok.label] = (i - first[tok.label] - 1) % 2
        else:
            first[tok.label] = i
    labels = tuple(first)
    return ParityVector(labels, tuple(bits[lab] for lab in labels))


def odd_writhe(d: GaussDiagram) -> int:
    """Sum of the signs of the odd crossings of a knot diagram."""
    odd = parity(d).odd_labels
    return sum(a.sign for lab, a in d.arrows.items() if lab in odd)


def interlacement(d: GaussDiagram) -> np.ndarray:
    """Symmetric 0/1 matrix: chords ``i`` and ``j`` interleave on the circle."""
    word = _knot_word(d)
    spans = {}
    for i, tok in enumerate(word):
        spans.setdefault(tok.label, []).append(i)
    labels = list(spans)
    n = len(labels)
    out = np.zeros((n, n), dtype=np.int8)
    for a in range(n):
        lo, hi = spans[labels[a]]
        for b in range(n):
            if a != b:
                p, q = spans[labels[b]]
                out[a, b] = (lo < p < hi) != (lo < q < hi)
    return out


# -- bracket -----------------------------------------------------------------
#
# Every slot g is split into an incoming strand end (node 2g) and an outgoing
# one (node 2g+1).  Circle arcs join out(g) to in(next g).  Smoothing an arrow
# with tail p and head q either respects orientation (in_p-out_q, in_q-out_p)
# or reverses it (in_p-in_q, out_p-out_q).  The A-smoothing is the
# orientation-respecting one on a positive arrow and the reversing one on a
# negative arrow.

def _layout(d):
    index = {}
    arcs = []
    g = 0
    for c, circle in enumerate(d.circles):
        L = len(circle)
        for s in range(L):
            index[(c, s)] = g + s
        for s in range(L):
            arcs.append((2 * (g + s) + 1, 2 * (g + (s + 1) % L)))
        g += L
    free = sum(1 for c in d.circles if not c)
    arrows = []
    for a in d.arrows.values():
        arrows.append((index[a.tail], index[a.head], a.sign))
    return g, arcs, arrows, free


def _smoothing_pairs(p, q, sign, a_smoothing):
    ip, op, iq, oq = 2 * p, 2 * p + 1, 2 * q, 2 * q + 1
    oriented = (sign > 0) == a_smoothing
    if oriented:
        return ((ip, oq), (iq, op))
    return ((ip, iq), (op, oq))


def state_loops(d: GaussDiagram, state: int) -> int:
    """Loop count of one state by union-find; bit ``k`` set = A-smoothing of arrow ``k``."""
    n_slots, arcs, arrows, free = _layout(d)
    uf = UnionFind(2 * n_slots)
    for x, y in arcs:
        uf.union(x, y)
    for k, (p, q, sign) in enumerate(arrows):
        for x, y in _smoothing_pairs(p, q, sign, bool(state >> k & 1)):
            uf.union(x, y)
    return uf.count + free


def _histogram(n_slots, arcs, arrows, start, stop):
    n = len(arrows)
    N = 2 * n_slots
    alpha = np.empty(N, dtype=np.int64)
    for x, y in arcs:
        alpha[x], alpha[y] = y, x
    states = np.arange(start, stop, dtype=np.int64)
    S = len(states)
    beta = np.empty((S, N), dtype=np.int64)
    a_count = np.zeros(S, dtype=np.int64)
    for k, (p, q, sign) in enumerate(arrows):
        bit = ((states >> k) & 1).astype(bool)
        a_count += bit
        pa = dict(x for pair in _smoothing_pairs(p, q, sign, True) for x in (pair, pair[::-1]))
        pb = dict(x for pair in _smoothing_pairs(p, q, sign, False) for x in (pair, pair[::-1]))
        for node in (2 * p, 2 * p + 1, 2 * q, 2 * q + 1):
            beta[:, node] = np.where(bit, pa[node], pb[node])
    # pi = beta . alpha; every loop splits into two orbits of pi.
    # Work on flat indices so each jump is a single gather.
    offset = (np.arange(S, dtype=np.int64) * N)[:, None]
    pi = (beta[:, alpha] + offset).ravel()
    label = np.arange(S * N, dtype=np.int64)
    for _ in range(max(1, math.ceil(math.log2(N))) + 1):
        np.minimum(label, label[pi], out=label)
        pi = pi[pi]
    orbits = (label == np.arange(S * N)).reshape(S, N).sum(axis=1)
    loops = orbits // 2
    width = N // 2 + 1
    hist = np.bincount(a_count * width + loops, minlength=(n + 1) * width)
    return hist.reshape(n + 1, width)


def bracket(d: GaussDiagram, max_arrows: int = DEFAULT_STATE_CAP, threads: int = 1) -> LaurentPoly:
    """Bracket polynomial by a full state sum, normalised so the unknot gives 1.

    The states are split into fixed chunks; with ``threads > 1`` the chunks
    are evaluated concurrently and their integer histograms summed, which
    gives exactly the sequential result.
    """
    n_slots, arcs, arrows, free = _layout(d)
    n = len(arrows)
    if n > max_arrows:
        raise BudgetExceeded(f"{n} arrows exceed the state-sum cap of {max_arrows}")
    if n == 0:
        return LOOP_VALUE ** (free - 1)
    total = 1 << n
    bounds = [(lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK)]
    if threads > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda b: _histogram(n_slots, arcs, arrows, *b), bounds))
    else:
        parts = [_histogram(n_slots, arcs, arrows, *b) for b in bounds]
    hist = parts[0]
    for h in parts[1:]:
        hist = hist + h
    loop_powers = [ONE]
    result = {}
    for a_count in range(n + 1):
        for loops in range(hist.shape[1]):
            mult = int(hist[a_count, loops])
            if not mult:
                continue
            k = loops + free - 1
            while len(loop_powers) <= k:
                loop_powers.append(loop_powers[-1] * LOOP_VALUE)
            shift = 2 * a_count - n
            for e, c in loop_powers[k].items():
                result[e + shift] = result.get(e + shift, 0) + mult * c
    return LaurentPoly(result)


def f_polynomial(d: GaussDiagram, max_arrows: int = DEFAULT_STATE_CAP, threads: int = 1) -> LaurentPoly:
    """Writhe-normalised bracket ``(-A^3)^(-w) <d>``."""
    w = writhe(d)
    return LaurentPoly.monomial(-1 if w % 2 else 1, -3 * w) * bracket(d, max_arrows, threads)
