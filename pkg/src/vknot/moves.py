"""Reidemeister and forbidden moves acting on Gauss diagrams.

Virtual and semivirtual moves leave the Gauss diagram unchanged, so only the
classical moves (R1, R2, R3) and the two forbidden endpoint exchanges need
an encoding here.

Sites are given as :class:`~vknot.gauss.Position` tuples.  For the deleting
moves they refer to the diagram being rewritten; for the inserting moves
they are the slots the new endpoints occupy in the *result*.  With this
convention a deletion and its inverse insertion share the same site, so
``apply(apply(d, m), inverse(m)) == d`` holds exactly, basepoints included.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .errors import PreconditionViolated
from .gauss import GaussDiagram, Position, Token

__all__ = [
    "MoveKind",
    "MoveSet",
    "Move",
    "enumerate_moves",
    "apply",
    "inverse",
    "walk",
    "random_walk",
]


class MoveKind(str, Enum):
    R1_ADD = "R1Add"
    R1_DEL = "R1Del"
    R2_ADD = "R2Add"
    R2_DEL = "R2Del"
    R3 = "R3"
    FORBIDDEN_OVER = "ForbiddenOver"
    FORBIDDEN_UNDER = "ForbiddenUnder"


_CLASSICAL = frozenset(
    {MoveKind.R1_ADD, MoveKind.R1_DEL, MoveKind.R2_ADD, MoveKind.R2_DEL, MoveKind.R3}
)


class MoveSet(Enum):
    """Equivalence regimes, nested as virtual < welded < all-forbidden."""

    VIRTUAL = "virtual"
    WELDED = "welded"
    ALL_FORBIDDEN = "all-forbidden"

    @property
    def kinds(self) -> frozenset:
        if self is MoveSet.VIRTUAL:
            return _CLASSICAL
        if self is MoveSet.WELDED:
            return _CLASSICAL | {MoveKind.FORBIDDEN_OVER}
        return _CLASSICAL | {MoveKind.FORBIDDEN_OVER, MoveKind.FORBIDDEN_UNDER}

    @classmethod
    def from_name(cls, name: str) -> "MoveSet":
        for member in cls:
            if member.value == name:
                return member
        raise ValueError(f"unknown regime {name!r}; expected one of virtual, welded, all-forbidden")


@dataclass(frozen=True)
class Move:
    """A located rewrite.

    ``params`` is a tuple of ``(name, value)`` pairs.  R1 moves carry
    ``sign`` and ``tail_first`` (the tail sits at ``site[0]``); R2 moves carry
    ``sign`` (of the arrow whose tail is ``site[0]``) and ``parallel`` (that
    arrow's head is ``site[2]``).  R3 and forbidden moves have no parameters.
    """

    kind: MoveKind
    site: tuple
    params: tuple = ()

    def param(self, name):
        for k, v in self.params:
            if k == name:
                return v
        raise KeyError(name)

    def to_line(self) -> str:
        parts = [self.kind.value]
        parts.extend(f"{p[0]}:{p[1]}" for p in self.site)
        for k, v in self.params:
            if k == "sign":
                parts.append(f"sign={'+' if v > 0 else '-'}")
            else:
                parts.append(f"{k}={int(v)}")
        return " ".join(parts)

    @classmethod
    def from_line(cls, line: str) -> "Move":
        fields = line.split()
        if not fields:
            raise ValueError("empty move line")
        kind = MoveKind(fields[0])
        site, params = [], []
        for f in fields[1:]:
            if "=" in f:
                k, v = f.split("=", 1)
                if k == "sign":
                    if v not in ("+", "-"):
                        raise ValueError(f"bad sign {v!r}")
                    params.append((k, 1 if v == "+" else -1))
                elif k in ("tail_first", "parallel"):
                    if v not in ("0", "1"):
                        raise ValueError(f"bad flag {f!r}")
                    params.append((k, v == "1"))
                else:
                    raise ValueError(f"unknown move parameter {k!r}")
            else:
                c, s = f.split(":")
                site.append(Position(int(c), int(s)))
        return cls(kind, tuple(site), tuple(params))

    def __str__(self):
        return self.to_line()


# -- low level rewriting -----------------------------------------------------

def _insert(circles, placements):
    """Place new tokens at result slots; old tokens fill the rest in order."""
    by_circle = {}
    for pos, tok in placements:
        by_circle.setdefault(pos[0], {})[pos[1]] = tok
    out = list(circles)
    for c, placed in by_circle.items():
        if not 0 <= c < len(circles):
            raise PreconditionViolated(f"component {c} does not exist")
        old = circles[c]
        new_len = len(old) + len(placed)
        if any(not 0 <= s < new_len for s in placed):
            raise PreconditionViolated("insertion slot out of range")
        it = iter(old)
        out[c] = tuple(placed[i] if i in placed else next(it) for i in range(new_len))
    return tuple(out)


def _delete(circles, positions):
    by_circle = {}
    for c, s in positions:
        by_circle.setdefault(c, set()).add(s)
    out = list(circles)
    for c, slots in by_circle.items():
        out[c] = tuple(t for i, t in enumerate(circles[c]) if i not in slots)
    return tuple(out)


def _swap_pairs(circles, pairs):
    out = [list(c) for c in circles]
    for p, q in pairs:
        out[p[0]][p[1]], out[q[0]][q[1]] = circles[q[0]][q[1]], circles[p[0]][p[1]]
    return tuple(tuple(c) for c in out)


def _in_range(d, pos):
    c, s = pos
    return 0 <= c < len(d.circles) and 0 <= s < len(d.circles[c])


def _adjacent(d, p, q):
    """``q`` directly follows ``p`` on a circle with at least two slots."""
    if not (_in_range(d, p) and _in_range(d, q)) or p[0] != q[0]:
        return False
    L = len(d.circles[p[0]])
    return L >= 2 and q[1] == (p[1] + 1) % L


def _adjacent_after_insert(d, p, q, added):
    # Adjacency of result slots on circle p[0], which grows by ``added``.
    if p[0] != q[0] or not 0 <= p[0] < len(d.circles):
        return False
    L = len(d.circles[p[0]]) + added
    return 0 <= p[1] < L and 0 <= q[1] < L and q[1] == (p[1] + 1) % L


def _adjacent_pairs(d):
    for c, circle in enumerate(d.circles):
        L = len(circle)
        if L >= 2:
            for i in range(L):
                yield Position(c, i), Position(c, (i + 1) % L)


def _next_label(d):
    return max((t.label for c in d.circles for t in c), default=0) + 1


def _r3_roles(d, site):
    """Check an R3 site (top pair, middle pair, bottom pair); return None if invalid."""
    if len(site) != 6:
        return None
    pairs = [(site[0], site[1]), (site[2], site[3]), (site[4], site[5])]
    for p, q in pairs:
        if not _adjacent(d, p, q):
            return None
    if len(set(site)) != 6:
        return None
    (tp, tq), (mp, mq), (bp, bq) = [(d.token(p), d.token(q)) for p, q in pairs]
    if not (tp.over and tq.over and not bp.over and not bq.over and mp.over != mq.over):
        return None
    top = {tp.label, tq.label}
    m_head = mq if mp.over else mp
    m_tail = mp if mp.over else mq
    a, c = m_head.label, m_tail.label
    if a not in top or c in top:
        return None
    b = (top - {a}).pop()
    if {bp.label, bq.label} != {b, c}:
        return None
    signs = {t.label: t.sign for t in (tp, tq, mp, mq, bp, bq)}
    a_first_on_top = tp.label == a
    a_first_on_middle = mp.label == a
    b_first_on_bottom = bp.label == b
    # Orders along the three strands are tied to the crossing signs; this is
    # the full set of configurations realised by a triangle of three lines.
    if (a_first_on_top == a_first_on_middle) != (signs[b] == signs[c]):
        return None
    if (a_first_on_top == b_first_on_bottom) != (signs[a] == signs[c]):
        return None
    return a, b, c


# -- public API ----------------------------------------------------------------

def apply(d: GaussDiagram, m: Move) -> GaussDiagram:
    """Rewrite ``d`` by ``m``; raises :class:`PreconditionViolated` on a stale site."""
    kind, site = m.kind, m.site
    try:
        params = dict(m.params)
    except (TypeError, ValueError):
        raise PreconditionViolated("malformed move parameters") from None

    if kind is MoveKind.R1_DEL:
        if len(site) != 2 or not _adjacent(d, *site):
            raise PreconditionViolated("R1Del needs two adjacent endpoints")
        t0, t1 = d.token(site[0]), d.token(site[1])
        if t0.label != t1.label:
            raise PreconditionViolated("R1Del endpoints belong to different arrows")
        if params.get("sign", t0.sign) != t0.sign or params.get("tail_first", t0.over) != t0.over:
            raise PreconditionViolated("R1Del parameters do not match the arrow")
        return GaussDiagram._trusted(_delete(d.circles, site))

    if kind is MoveKind.R1_ADD:
        if len(site) != 2 or not _adjacent_after_insert(d, site[0], site[1], 2):
            raise PreconditionViolated("R1Add needs two adjacent result slots on one circle")
        try:
            sign, tail_first = params["sign"], bool(params["tail_first"])
        except KeyError:
            raise PreconditionViolated("R1Add needs sign and tail_first") from None
        if sign not in (1, -1):
            raise PreconditionViolated("bad sign")
        lab = _next_label(d)
        first, second = Token(tail_first, lab, sign), Token(not tail_first, lab, sign)
        return GaussDiagram._trusted(_insert(d.circles, [(site[0], first), (site[1], second)]))

    if kind is MoveKind.R2_DEL:
        if len(site) != 4 or not (_adjacent(d, site[0], site[1]) and _adjacent(d, site[2], site[3])):
            raise PreconditionViolated("R2Del needs two adjacent endpoint pairs")
        x1, x2, y1, y2 = (d.token(p) for p in site)
        if not (x1.over and x2.over) or y1.over or y2.over:
            raise PreconditionViolated("R2Del needs a tail pair followed by a head pair")
        if x1.sign != -x2.sign:
            raise PreconditionViolated("R2Del arrows must have opposite signs")
        if {y1.label, y2.label} != {x1.label, x2.label}:
            raise PreconditionViolated("R2Del head pair does not match the tail pair")
        parallel = y1.label == x1.label
        if params.get("sign", x1.sign) != x1.sign or params.get("parallel", parallel) != parallel:
            raise PreconditionViolated("R2Del parameters do not match the arrows")
        return GaussDiagram._trusted(_delete(d.circles, site))

    if kind is MoveKind.R2_ADD:
        if len(site) != 4 or len(set(site)) != 4:
            raise PreconditionViolated("R2Add needs four distinct result slots")
        added = {}
        for p in site:
            added[p[0]] = added.get(p[0], 0) + 1
        if not all(
            _adjacent_after_insert(d, p, q, added.get(p[0], 0)) for p, q in (site[:2], site[2:])
        ):
            raise PreconditionViolated("R2Add slots must form two adjacent pairs")
        try:
            sign, parallel = params["sign"], bool(params["parallel"])
        except KeyError:
            raise PreconditionViolated("R2Add needs sign and parallel") from None
        if sign not in (1, -1):
            raise PreconditionViolated("bad sign")
        a = _next_label(d)
        b = a + 1
        ta, tb = Token(True, a, sign), Token(True, b, -sign)
        ha, hb = Token(False, a, sign), Token(False, b, -sign)
        heads = (ha, hb) if parallel else (hb, ha)
        placements = [(site[0], ta), (site[1], tb), (site[2], heads[0]), (site[3], heads[1])]
        return GaussDiagram._trusted(_insert(d.circles, placements))

    if kind is MoveKind.R3:
        if _r3_roles(d, site) is None:
            raise PreconditionViolated("not an R3 site")
        return GaussDiagram._trusted(_swap_pairs(d.circles, [site[0:2], site[2:4], site[4:6]]))

    if kind in (MoveKind.FORBIDDEN_OVER, MoveKind.FORBIDDEN_UNDER):
        if len(site) != 2 or not _adjacent(d, *site):
            raise PreconditionViolated("forbidden move needs two adjacent endpoints")
        t0, t1 = d.token(site[0]), d.token(site[1])
        want_over = kind is MoveKind.FORBIDDEN_OVER
        if t0.over != want_over or t1.over != want_over:
            raise PreconditionViolated(f"{kind.value} needs two adjacent {'tails' if want_over else 'heads'}")
        return GaussDiagram._trusted(_swap_pairs(d.circles, [site]))

    raise PreconditionViolated(f"unknown move kind {kind!r}")


def inverse(m: Move) -> Move:
    """The move undoing ``m`` on the diagram ``m`` produced."""
    swap = {
        MoveKind.R1_ADD: MoveKind.R1_DEL,
        MoveKind.R1_DEL: MoveKind.R1_ADD,
        MoveKind.R2_ADD: MoveKind.R2_DEL,
        MoveKind.R2_DEL: MoveKind.R2_ADD,
    }
    return Move(swap.get(m.kind, m.kind), m.site, m.params)


def _r1_del_moves(d):
    for p, q in _adjacent_pairs(d):
        t0, t1 = d.token(p), d.token(q)
        if t0.label == t1.label:
            yield Move(MoveKind.R1_DEL, (p, q), (("sign", t0.sign), ("tail_first", t0.over)))


def _r2_del_moves(d):
    arrows = d.arrows
    for p, q in _adjacent_pairs(d):
        t0, t1 = d.token(p), d.token(q)
        if not (t0.over and t1.over) or t0.sign != -t1.sign:
            continue
        ha, hb = arrows[t0.label].head, arrows[t1.label].head
        if _adjacent(d, ha, hb):
            yield Move(MoveKind.R2_DEL, (p, q, ha, hb), (("sign", t0.sign), ("parallel", True)))
        if _adjacent(d, hb, ha):
            yield Move(MoveKind.R2_DEL, (p, q, hb, ha), (("sign", t0.sign), ("parallel", False)))


def _r3_moves(d):
    tops, mids, bottoms = [], {}, {}
    for p, q in _adjacent_pairs(d):
        t0, t1 = d.token(p), d.token(q)
        if t0.label == t1.label:
            continue
        if t0.over and t1.over:
            tops.append((p, q))
        elif not t0.over and not t1.over:
            bottoms.setdefault(frozenset((t0.label, t1.label)), []).append((p, q))
        else:
            mids.setdefault(frozenset((t0.label, t1.label)), []).append((p, q))
    labels = list(d.arrows)
    for tp in tops:
        x, y = d.token(tp[0]).label, d.token(tp[1]).label
        for a, b in ((x, y), (y, x)):
            for c in labels:
                if c in (a, b):
                    continue
                for mp in mids.get(frozenset((a, c)), ()):
                    for bp in bottoms.get(frozenset((b, c)), ()):
                        site = tp + mp + bp
                        if _r3_roles(d, site) is not None:
                            yield Move(MoveKind.R3, site)


def _forbidden_moves(d, over):
    kind = MoveKind.FORBIDDEN_OVER if over else MoveKind.FORBIDDEN_UNDER
    for p, q in _adjacent_pairs(d):
        t0, t1 = d.token(p), d.token(q)
        if t0.over == over and t1.over == over:
            yield Move(kind, (p, q))


def _arcs(d):
    """Arc (c, i) lies just before slot i; a crossing-free circle has one arc."""
    for c, circle in enumerate(d.circles):
        for i in range(max(len(circle), 1)):
            yield c, i


_R1_VARIANTS = ((1, True), (1, False), (-1, True), (-1, False))
_R2_VARIANTS = tuple(
    (over_first, sign, parallel)
    for over_first in (True, False)
    for sign in (1, -1)
    for parallel in (True, False)
)


def _r1_add_move(arc, variant):
    c, i = arc
    sign, tail_first = variant
    return Move(
        MoveKind.R1_ADD,
        (Position(c, i), Position(c, i + 1)),
        (("sign", sign), ("tail_first", tail_first)),
    )


def _r2_add_move(arc_x, arc_y, variant):
    # ``arc_x`` precedes or equals ``arc_y`` in arc order.
    (c1, i1), (c2, i2) = arc_x, arc_y
    first = (Position(c1, i1), Position(c1, i1 + 1))
    if c1 == c2:
        shift = 2 if i2 >= i1 else 0
        second = (Position(c2, i2 + shift), Position(c2, i2 + shift + 1))
    else:
        second = (Position(c2, i2), Position(c2, i2 + 1))
    over_first, sign, parallel = variant
    tails, heads = (first, second) if over_first else (second, first)
    return Move(MoveKind.R2_ADD, tails + heads, (("sign", sign), ("parallel", parallel)))


def enumerate_moves(
    d: GaussDiagram,
    s: MoveSet = MoveSet.VIRTUAL,
    insertion_cap: int | None = None,
    max_arrows: int | None = None,
) -> list:
    """All moves of regime ``s`` applicable to ``d``, in a fixed order.

    Deletions, R3 and forbidden exchanges are listed exhaustively.  Insertions
    are listed at every arc (pair of arcs for R2), at most ``insertion_cap``
    variants each, and only while the result stays within ``max_arrows``.
    """
    kinds = s.kinds
    out = list(_r1_del_moves(d))
    out.extend(_r2_del_moves(d))
    out.extend(_r3_moves(d))
    if MoveKind.FORBIDDEN_OVER in kinds:
        out.extend(_forbidden_moves(d, True))
    if MoveKind.FORBIDDEN_UNDER in kinds:
        out.extend(_forbidden_moves(d, False))
    n = d.n_arrows
    cap = len(_R2_VARIANTS) if insertion_cap is None else insertion_cap
    arcs = list(_arcs(d))
    if max_arrows is None or n + 1 <= max_arrows:
        for arc in arcs:
            out.extend(_r1_add_move(arc, v) for v in _R1_VARIANTS[:cap])
    if max_arrows is None or n + 2 <= max_arrows:
        for ix, arc_x in enumerate(arcs):
            for arc_y in arcs[ix:]:
                out.extend(_r2_add_move(arc_x, arc_y, v) for v in _R2_VARIANTS[:cap])
    return out


_WALK_KINDS = (
    MoveKind.R1_DEL,
    MoveKind.R2_DEL,
    MoveKind.R3,
    MoveKind.FORBIDDEN_OVER,
    MoveKind.FORBIDDEN_UNDER,
    MoveKind.R1_ADD,
    MoveKind.R2_ADD,
)


def walk(
    d: GaussDiagram,
    s: MoveSet,
    steps: int,
    seed: int,
    max_arrows: int | None = None,
) -> Iterator[tuple]:
    """Yield ``(move, diagram)`` for a seeded random walk.

    Each step picks a move kind uniformly among those available, then a site
    uniformly within that kind, so insertions do not swamp the walk.
    ``max_arrows`` defaults to four more than the starting size.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    rng = random.Random(seed)
    cap = d.n_arrows + 4 if max_arrows is None else max_arrows
    for _ in range(steps):
        pools = {
            MoveKind.R1_DEL: list(_r1_del_moves(d)),
            MoveKind.R2_DEL: list(_r2_del_moves(d)),
            MoveKind.R3: list(_r3_moves(d)),
        }
        if MoveKind.FORBIDDEN_OVER in s.kinds:
            pools[MoveKind.FORBIDDEN_OVER] = list(_forbidden_moves(d, True))
        if MoveKind.FORBIDDEN_UNDER in s.kinds:
            pools[MoveKind.FORBIDDEN_UNDER] = list(_forbidden_moves(d, False))
        arcs = list(_arcs(d))
        n = d.n_arrows
        available = [k for k in _WALK_KINDS if pools.get(k)]
        if n + 1 <= cap:
            available.append(MoveKind.R1_ADD)
        if n + 2 <= cap:
            available.append(MoveKind.R2_ADD)
        available.sort(key=_WALK_KINDS.index)
        if not available:
            return
        kind = rng.choice(available)
        if kind is MoveKind.R1_ADD:
            m = _r1_add_move(rng.choice(arcs), rng.choice(_R1_VARIANTS))
        elif kind is MoveKind.R2_ADD:
            i = rng.randrange(len(arcs))
            j = rng.randrange(len(arcs))
            i, j = min(i, j), max(i, j)
            m = _r2_add_move(arcs[i], arcs[j], rng.choice(_R2_VARIANTS))
        else:
            m = rng.choice(pools[kind])
        d = apply(d, m)
        yield m, d


def random_walk(d: GaussDiagram, s: MoveSet, steps: int, seed: int, max_arrows: int | None = None) -> GaussDiagram:
    """Final diagram of :func:`walk`; equivalent to ``d`` under ``s``."""
    for _, d in walk(d, s, steps, seed, max_arrows):
        pass
    return d
