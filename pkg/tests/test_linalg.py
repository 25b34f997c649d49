from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from mckaycone.linalg import Echelon, primitive, rank, span_equal

entries = st.integers(-4, 4).map(Fraction) | st.fractions(min_value=-3, max_value=3, max_denominator=5)
matrices = st.integers(1, 6).flatmap(
    lambda cols: st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=0, max_size=6))


def as_dicts(rows):
    return [{k: x for k, x in enumerate(r) if x} for r in rows]


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_rank_matches_sympy(rows):
    expect = sympy.Matrix(rows).rank() if rows else 0
    assert rank(as_dicts(rows)) == expect


@settings(max_examples=100, deadline=None)
@given(matrices, st.data())
def test_contains_and_remainder(rows, data):
    if not rows:
        return
    e = Echelon(as_dicts(rows))
    coefs = data.draw(st.lists(st.integers(-3, 3), min_size=len(rows), max_size=len(rows)))
    combo = {}
    for c, r in zip(coefs, rows):
        for k, x in enumerate(r):
            combo[k] = combo.get(k, 0) + c * x
    assert e.contains(combo)
    assert e.remainder(combo) == {}
    extra = {len(rows[0]) + 1: Fraction(1)}
    shifted = dict(combo)
    shifted.update(extra)
    assert e.remainder(shifted) == extra


@settings(max_examples=100, deadline=None)
@given(matrices, st.data())
def test_remainder_is_canonical(rows, data):
    if not rows:
        return
    e = Echelon(as_dicts(rows))
    v = dict(enumerate(data.draw(st.lists(entries, min_size=len(rows[0]), max_size=len(rows[0])))))
    w = dict(v)
    for k, x in enumerate(rows[0]):
        w[k] = w.get(k, 0) + 2 * x
    assert e.remainder(v) == e.remainder(w)
    # v - remainder(v) lies in the span
    r = e.remainder(v)
    diff = {k: v.get(k, 0) - r.get(k, 0) for k in set(v) | set(r)}
    assert e.contains(diff)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_span_equal_under_row_operations(rows):
    if len(rows) < 2:
        return
    mixed = [[a + 3 * b for a, b in zip(rows[0], rows[1])]] + rows[1:]
    assert span_equal(as_dicts(rows), as_dicts(mixed))


def test_primitive():
    assert primitive({1: Fraction(2, 3), 2: Fraction(-4, 9)}) == {1: 3, 2: -2}
    assert primitive({0: -2, 5: 4}) == {0: 1, 5: -2}
    assert primitive({3: 0}) == {}
