"""Fraction-free sparse row echelon forms over Q.

Vectors are dicts from sortable keys to rationals. Rows are kept as
primitive integer vectors; the pivot of a row is its smallest key, so the
basis obtained for a given insertion order is deterministic.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def primitive(vec: dict) -> dict:
    """Clear denominators and divide out the content; leading entry positive."""
    vec = {k: v for k, v in vec.items() if v}
    if not vec:
        return {}
    den = 1
    for v in vec.values():
        d = v.denominator if isinstance(v, Fraction) else 1
        den = den * d // gcd(den, d)
    ints = {k: int(v * den) for k, v in vec.items()}
    g = gcd(*ints.values())
    lead = min(ints)
    if ints[lead] < 0:
        g = -g
    return {k: v // g for k, v in ints.items()}


def _combine(a: int, v: dict, b: int, row: dict) -> dict:
    """a*v - b*row, divided by its content."""
    out = {k: a * x for k, x in v.items()}
    for k, y in row.items():
        x = out.get(k, 0) - b * y
        if x:
            out[k] = x
        else:
            out.pop(k, None)
    if out:
        g = gcd(*out.values())
        if g > 1:
            out = {k: x // g for k, x in out.items()}
    return out


class Echelon:
    """Incrementally maintained row echelon basis of a subspace."""

    def __init__(self, rows=()):
        self.pivots: dict = {}
        for r in rows:
            self.add(r)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> list[dict]:
        return [self.pivots[k] for k in sorted(self.pivots)]

    def _reduce_lead(self, v: dict) -> dict:
        while v:
            lead = min(v)
            row = self.pivots.get(lead)
            if row is None:
                return v
            a, b = row[lead], v[lead]
            g = gcd(a, b)
            v = _combine(a // g, v, b // g, row)
        return v

    def add(self, vec: dict) -> bool:
        """Insert a vector; True if the rank grew."""
        v = self._reduce_lead(primitive(vec))
        if not v:
            return False
        if v[min(v)] < 0:
            v = {k: -x for k, x in v.items()}
        self.pivots[min(v)] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self._reduce_lead(primitive(vec))

    def remainder(self, vec: dict) -> dict:
        """Canonical residue of ``vec`` modulo the span (rational coefficients).

        Every key that is a pivot gets eliminated, so two vectors have the same
        remainder iff their difference lies in the span.
        """
        vec = {k: Fraction(x) for k, x in vec.items() if x}
        if not vec:
            return {}
        den = 1
        for x in vec.values():
            den = den * x.denominator // gcd(den, x.denominator)
        v = {k: int(x * den) for k, x in vec.items()}
        scale = Fraction(den)
        while True:
            hits = [k for k in v if k in self.pivots]
            if not hits:
                break
            k = min(hits)
            row = self.pivots[k]
            a, b = row[k], v[k]
            g = gcd(a, b)
            a, b = a // g, b // g
            # v <- a*v - b*row, tracking the scale applied to the original
            out = {kk: a * x for kk, x in v.items()}
            for kk, y in row.items():
                x = out.get(kk, 0) - b * y
                if x:
                    out[kk] = x
                else:
                    out.pop(kk, None)
            v = out
            scale *= a
        return {k: Fraction(x) / scale for k, x in v.items()}


def span_equal(rows_a, rows_b) -> bool:
    ea, eb = Echelon(rows_a), Echelon(rows_b)
    if ea.rank != eb.rank:
        return False
    return all(eb.contains(r) for r in ea.rows())


def rank(rows) -> int:
    return Echelon(rows).rank
