"""Gauss diagrams: the data model, the textual code grammar and structural operations.

A diagram is a sequence of oriented circles.  Each circle is a cyclic word of
endpoint tokens read from a fixed basepoint; a token records whether the
strand passes over or under, the arrow label and the crossing sign.  Every
label occurs exactly twice in the whole diagram: once as the tail (over
passage) and once as the head (under passage) of the same signed arrow.

Grammar::

    code      := component (';' component)*
    component := '@' | token+
    token     := ('O'|'U') integer ('+'|'-')
    integer   := [1-9][0-9]*
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum, IntEnum
from functools import cached_property
from typing import NamedTuple, Sequence

from .errors import GaussSyntaxError, NotAKnot, ValidationError

__all__ = [
    "Sign",
    "Passage",
    "Position",
    "Token",
    "Arrow",
    "GaussDiagram",
    "parse",
    "serialize",
    "canonical_form",
    "canonical_diagram",
    "component_count",
    "mirror",
    "reverse_component",
    "connected_sum",
]


class Sign(IntEnum):
    PLUS = 1
    MINUS = -1

    def __neg__(self):
        return Sign(-int(self))

    @property
    def symbol(self):
        return "+" if self is Sign.PLUS else "-"


class Passage(str, Enum):
    OVER = "O"
    UNDER = "U"


class Position(NamedTuple):
    component: int
    slot: int

    def __str__(self):
        return f"{self.component}:{self.slot}"


class Token(NamedTuple):
    """One endpoint occurrence on a circle."""

    over: bool
    label: int
    sign: int

    @property
    def passage(self) -> Passage:
        return Passage.OVER if self.over else Passage.UNDER

    def __str__(self):
        return ("O" if self.over else "U") + str(self.label) + ("+" if self.sign > 0 else "-")


class Arrow(NamedTuple):
    """A classical crossing: directed from the over endpoint to the under endpoint."""

    tail: Position
    head: Position
    sign: int


def _validate(circles):
    seen = {}
    for c, circle in enumerate(circles):
        for s, tok in enumerate(circle):
            if tok.label < 1:
                raise ValidationError(f"label {tok.label} is not a positive integer", "count", tok.label)
            if tok.sign not in (1, -1):
                raise ValidationError(f"sign of label {tok.label} must be +1 or -1", "sign", tok.label)
            seen.setdefault(tok.label, []).append(tok)
    for label, toks in seen.items():
        if len(toks) != 2:
            raise ValidationError(
                f"label {label} appears {len(toks)} time(s), expected exactly 2", "count", label
            )
        a, b = toks
        if a.over == b.over:
            kind = "O" if a.over else "U"
            raise ValidationError(f"label {label} appears twice as {kind}", "passage", label)
        if a.sign != b.sign:
            raise ValidationError(f"label {label} has mismatched signs", "sign", label)


@dataclass(frozen=True, eq=False)
class GaussDiagram:
    """An immutable Gauss diagram.

    ``circles`` holds one tuple of :class:`Token` per circle, starting at the
    circle's basepoint.  An empty tuple is a crossing-free circle.  Label
    values carry no meaning: two diagrams are equal when they agree after
    renumbering labels by first appearance.
    """

    circles: tuple

    def __post_init__(self):
        circles = tuple(tuple(Token(bool(t[0]), int(t[1]), int(t[2])) for t in c) for c in self.circles)
        object.__setattr__(self, "circles", circles)
        _validate(circles)

    @classmethod
    def _trusted(cls, circles):
        # Skips validation; callers guarantee a well-formed tuple of Token tuples.
        d = object.__new__(cls)
        object.__setattr__(d, "circles", circles)
        return d

    @cached_property
    def _key(self):
        mapping = {}
        return tuple(
            tuple((t.over, mapping.setdefault(t.label, len(mapping) + 1), t.sign) for t in c)
            for c in self.circles
        )

    def __eq__(self, other):
        if not isinstance(other, GaussDiagram):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    @cached_property
    def arrows(self) -> dict:
        """Map from label to :class:`Arrow`, in order of first appearance."""
        tails, heads, signs, order = {}, {}, {}, []
        for c, circle in enumerate(self.circles):
            for s, tok in enumerate(circle):
                if tok.label not in signs:
                    order.append(tok.label)
                    signs[tok.label] = tok.sign
                (tails if tok.over else heads)[tok.label] = Position(c, s)
        return {lab: Arrow(tails[lab], heads[lab], signs[lab]) for lab in order}

    @property
    def n_arrows(self) -> int:
        return sum(len(c) for c in self.circles) // 2

    @property
    def n_circles(self) -> int:
        return len(self.circles)

    @property
    def is_knot(self) -> bool:
        return len(self.circles) == 1

    def token(self, pos: Position) -> Token:
        return self.circles[pos[0]][pos[1]]

    def succ(self, pos: Position) -> Position:
        c, s = pos
        return Position(c, (s + 1) % len(self.circles[c]))

    def word(self) -> tuple:
        """The token word of a knot diagram."""
        if len(self.circles) != 1:
            raise NotAKnot(f"expected a single circle, got {len(self.circles)}")
        return self.circles[0]

    def relabeled(self) -> "GaussDiagram":
        """Copy with labels renumbered 1, 2, ... by first appearance."""
        mapping = {}
        out = []
        for circle in self.circles:
            new = []
            for tok in circle:
                lab = mapping.setdefault(tok.label, len(mapping) + 1)
                new.append(Token(tok.over, lab, tok.sign))
            out.append(tuple(new))
        return GaussDiagram._trusted(tuple(out))

    def __str__(self):
        return serialize(self)

    def __repr__(self):
        return f"GaussDiagram({serialize(self)!r})"


_TOKEN_RE = re.compile(r"\s*(?:(@)|([OU])([1-9][0-9]*)([+-])|(;))", re.ASCII)


def parse(text: str) -> GaussDiagram:
    """Parse a Gauss code.

    >>> parse("O1+O2+U1+U2+").n_arrows
    2
    >>> parse("@").circles
    ((),)
    """
    if not isinstance(text, str):
        raise TypeError("Gauss code must be a string")
    if not text.isascii():
        raise GaussSyntaxError("Gauss code must be ASCII", 0)
    circles = []
    current = []
    empty_marker = False
    expect_component = True
    pos = 0
    n = len(text)
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise GaussSyntaxError(f"malformed token at offset {pos}: {text[pos:pos + 8]!r}", pos)
        if m.group(5):
            if expect_component:
                raise GaussSyntaxError(f"empty component before ';' at offset {m.start(5)}", m.start(5))
            circles.append(tuple(current))
            current, empty_marker, expect_component = [], False, True
        elif m.group(1):
            if current or empty_marker:
                raise GaussSyntaxError(f"'@' must be a component by itself (offset {m.start(1)})", m.start(1))
            empty_marker, expect_component = True, False
        else:
            if empty_marker:
                raise GaussSyntaxError(f"token after '@' at offset {m.start(2)}", m.start(2))
            current.append(Token(m.group(2) == "O", int(m.group(3)), 1 if m.group(4) == "+" else -1))
            expect_component = False
        pos = m.end()
    if expect_component:
        raise GaussSyntaxError("code ends without a component", n)
    circles.append(tuple(current))
    return GaussDiagram(tuple(circles))


def serialize(d: GaussDiagram) -> str:
    """Render ``d`` in the code grammar with labels renumbered by first appearance."""
    mapping = {}
    parts = []
    for circle in d.circles:
        if not circle:
            parts.append("@")
            continue
        buf = []
        for tok in circle:
            lab = mapping.setdefault(tok.label, len(mapping) + 1)
            buf.append(("O" if tok.over else "U") + str(lab) + ("+" if tok.sign > 0 else "-"))
        parts.append("".join(buf))
    return ";".join(parts)


def component_count(d: GaussDiagram) -> int:
    return len(d.circles)


# Canonical form.  Tokens compare as (passage, label, sign) with O < U and
# + < -; a crossing-free circle sorts before any token, and a shorter block
# that is a prefix of a longer one sorts first (the ';' separator is the
# smallest character of the grammar).

_EMPTY_BLOCK = ((1, 0, 0),)


def _encode(circle, start, mapping, next_label):
    """Relabel ``circle`` read from ``start``; returns (key, mapping, next_label)."""
    mapping = dict(mapping)
    key = []
    L = len(circle)
    for i in range(L):
        tok = circle[(start + i) % L]
        lab = mapping.get(tok.label)
        if lab is None:
            lab = next_label
            mapping[tok.label] = lab
            next_label += 1
        key.append((2 if tok.over else 3, lab, 0 if tok.sign > 0 else 1))
    return tuple(key), mapping, next_label


def _knot_canonical(circle):
    L = len(circle)
    if L == 0:
        return (), 0
    # Integer keys ordered like (passage, label, sign); rotations are abandoned
    # as soon as they exceed the best prefix seen so far.
    width = 2 * L + 2
    kind = [(0 if t.over else width) + (0 if t.sign > 0 else 1) for t in circle]
    labels = [t.label for t in circle]
    lead = min(kind)
    best = None
    best_start = 0
    for start in range(L):
        if kind[start] != lead:
            continue
        mapping = {}
        key = []
        nxt = 1
        worse = key_less = False
        for i in range(L):
            j = start + i
            if j >= L:
                j -= L
            lab = mapping.get(labels[j])
            if lab is None:
                lab = mapping[labels[j]] = nxt
                nxt += 1
            v = kind[j] + 2 * lab
            if best is not None and not key_less:
                b = best[i]
                if v > b:
                    worse = True
                    break
                if v < b:
                    key_less = True
            key.append(v)
        if worse:
            continue
        if best is None or key_less:
            best, best_start = key, start
    return tuple((2 if v < width else 3, (v % width) // 2, v % 2) for v in best), best_start


def _canonical_layout(d: GaussDiagram):
    """Return the list of (circle index, rotation) realising the canonical form."""
    circles = d.circles
    if len(circles) == 1:
        _, start = _knot_canonical(circles[0])
        return [(0, start)]
    k = len(circles)
    # Each beam state: (tuple of (circle, start) chosen so far, mapping, next_label).
    beam = [((), {}, 1)]
    for _ in range(k):
        best_block = None
        candidates = []
        for chosen, mapping, nxt in beam:
            used = {c for c, _ in chosen}
            for c in range(k):
                if c in used:
                    continue
                circle = circles[c]
                starts = range(len(circle)) if circle else (0,)
                for start in starts:
                    if circle:
                        block, m2, n2 = _encode(circle, start, mapping, nxt)
                    else:
                        block, m2, n2 = _EMPTY_BLOCK, mapping, nxt
                    if best_block is None or block < best_block:
                        best_block = block
                        candidates = [(chosen + ((c, start),), m2, n2)]
                    elif block == best_block:
                        candidates.append((chosen + ((c, start),), m2, n2))
        seen = set()
        beam = []
        for chosen, mapping, nxt in candidates:
            sig = (frozenset(c for c, _ in chosen), tuple(sorted(mapping.items())))
            if sig not in seen:
                seen.add(sig)
                beam.append((chosen, mapping, nxt))
    return list(beam[0][0])


def canonical_diagram(d: GaussDiagram) -> GaussDiagram:
    """The diagram whose serialization is :func:`canonical_form` of ``d``."""
    layout = _canonical_layout(d)
    out = []
    for c, start in layout:
        circle = d.circles[c]
        out.append(circle[start:] + circle[:start])
    return GaussDiagram._trusted(tuple(out)).relabeled()


def canonical_form(d: GaussDiagram) -> str:
    """Minimum serialization over basepoint rotations and circle orders.

    Component reversals and mirrors are deliberately not quotiented out.
    """
    if len(d.circles) == 1:
        circle = d.circles[0]
        if not circle:
            return "@"
        key, _ = _knot_canonical(circle)
        return "".join(("O" if p == 2 else "U") + str(lab) + ("-" if neg else "+") for p, lab, neg in key)
    return serialize(canonical_diagram(d))


def mirror(d: GaussDiagram) -> GaussDiagram:
    """Switch every classical crossing: reverse each arrow and negate its sign."""
    return GaussDiagram._trusted(
        tuple(tuple(Token(not t.over, t.label, -t.sign) for t in c) for c in d.circles)
    )


def reverse_component(d: GaussDiagram, c: int) -> GaussDiagram:
    """Reverse the orientation of circle ``c``.

    Arrows with exactly one endpoint on ``c`` change sign; arrows with both
    endpoints on ``c`` keep theirs.
    """
    if not 0 <= c < len(d.circles):
        raise IndexError(f"component {c} out of range for {len(d.circles)} circle(s)")
    on_c = {}
    for tok in d.circles[c]:
        on_c[tok.label] = on_c.get(tok.label, 0) + 1
    flip = {lab for lab, cnt in on_c.items() if cnt == 1}
    out = []
    for i, circle in enumerate(d.circles):
        seq = circle[::-1] if i == c else circle
        out.append(tuple(Token(t.over, t.label, -t.sign if t.label in flip else t.sign) for t in seq))
    return GaussDiagram._trusted(tuple(out))


def connected_sum(d1: GaussDiagram, b1: int, d2: GaussDiagram, b2: int) -> GaussDiagram:
    """Splice two knot diagrams.

    ``b1`` and ``b2`` name break points: the circle of ``d1`` is cut on the
    arc just before slot ``b1`` and read from there, then the word of ``d2``
    read from slot ``b2`` follows.  Labels of ``d2`` are shifted past those
    of ``d1``.  Different break points generally give inequivalent knots.
    """
    for d in (d1, d2):
        if len(d.circles) != 1:
            raise NotAKnot(f"connected sum needs knots, got {len(d.circles)} circle(s)")
    w1, w2 = d1.circles[0], d2.circles[0]
    for w, b in ((w1, b1), (w2, b2)):
        if not 0 <= b < max(len(w), 1):
            raise IndexError(f"break point {b} out of range for a word of length {len(w)}")
    shift = max((t.label for t in w1), default=0)
    r1 = w1[b1:] + w1[:b1]
    r2 = tuple(Token(t.over, t.label + shift, t.sign) for t in w2[b2:] + w2[:b2])
    return GaussDiagram._trusted((r1 + r2,))


def from_words(words: Sequence[Sequence[Token]]) -> GaussDiagram:
    return GaussDiagram(tuple(tuple(w) for w in words))
