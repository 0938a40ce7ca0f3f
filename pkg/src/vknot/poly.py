"""Sparse integer Laurent polynomials in one variable ``A``."""

from __future__ import annotations

import re
from typing import Mapping

__all__ = ["LaurentPoly", "A", "ONE", "ZERO", "LOOP_VALUE"]


class LaurentPoly:
    """Exact integer Laurent polynomial stored as ``{exponent: coefficient}``.

    Zero coefficients are never stored, so equality of the term maps is
    equality of polynomials.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = int(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "LaurentPoly":
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def degree_span(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms), max(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient must be a unit to invert")
            return LaurentPoly({-e * -k: c ** -k})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def invert_variable(self) -> "LaurentPoly":
        """Substitute ``A -> A^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def __str__(self):
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*A^{e}" for e, c in sorted(self._terms.items()))

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(r"^\s*(-?\d+)\*A\^(-?\d+)\s*$")

    @classmethod
    def from_string(cls, text: str) -> "LaurentPoly":
        text = text.strip()
        if text == "0":
            return cls()
        out = {}
        for part in text.split(" + "):
            m = cls._TERM.match(part)
            if m is None:
                raise ValueError(f"bad polynomial term {part!r}")
            e = int(m.group(2))
            out[e] = out.get(e, 0) + int(m.group(1))
        return cls(out)


ONE = LaurentPoly({0: 1})
ZERO = LaurentPoly()
A = LaurentPoly({1: 1})
# Value of a crossing-free loop in the bracket: -A^2 - A^-2.
LOOP_VALUE = LaurentPoly({2: -1, -2: -1})
