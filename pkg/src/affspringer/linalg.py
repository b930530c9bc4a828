"""Exact rank and span membership over Q for sparse rows.

Rows are dicts from column to rational.  Internally every row is scaled to
a primitive integer vector and eliminated fraction-free, which is exact and
much faster than carrying Fractions through the elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping


def primitive(row: Mapping[int, object]) -> dict[int, int]:
    """Integer multiple of ``row`` with coprime entries (empty for zero)."""
    items = [(k, Fraction(c)) for k, c in row.items() if c]
    if not items:
        return {}
    den = math.lcm(*(c.denominator for _, c in items))
    ints = [(k, int(c * den)) for k, c in items]
    g = math.gcd(*(v for _, v in ints))
    if ints[min(range(len(ints)), key=lambda i: ints[i][0])][1] < 0:
        g = -g
    return {k: v // g for k, v in ints}


class Span:
    """Row echelon basis of a subspace of Q^n, grown one row at a time."""

    def __init__(self, rows: Iterable[Mapping[int, object]] = ()):
        # pivot column -> primitive integer row whose least column is the pivot
        self.rows: dict[int, dict[int, int]] = {}
        self._order: list[int] = []
        for r in rows:
            self.add(r)

    def __len__(self):
        return len(self.rows)

    def reduce(self, row: Mapping[int, object]) -> dict[int, int]:
        v = primitive(row)
        for p in self._order:
            c = v.get(p)
            if not c:
                continue
            prow = self.rows[p]
            a = prow[p]
            v = {k: a * x for k, x in v.items()}
            for k, y in prow.items():
                nv = v.get(k, 0) - c * y
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
            if not v:
                return v
            g = math.gcd(*v.values())
            if g > 1:
                v = {k: x // g for k, x in v.items()}
        return v

    def add(self, row: Mapping[int, object]) -> bool:
        """Insert a row; returns False when it was already in the span."""
        v = self.reduce(row)
        if not v:
            return False
        p = min(v)
        self.rows[p] = v
        self._order.append(p)
        self._order.sort()
        return True

    def __contains__(self, row: Mapping[int, object]) -> bool:
        return not self.reduce(row)


def rank(rows: Iterable[Mapping[int, object]]) -> int:
    return len(Span(rows))
