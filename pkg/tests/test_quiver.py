from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_quiver
from mckaycone.quiver import (Arrow, BoundQuiver, CompositionError, Connecting, Coord,
                              InhomogeneousRelationError, Level, Leveled, Path, PathCombo,
                              Quiver, QuiverError, QuiverIsoWitness, Returning, UnknownArrowError,
                              compose, identity_witness, label_key, match_arrows,
                              quiver_equal_under, render, trivial_path, validate_relation)


@pytest.fixture
def square():
    # a: 1->2, b: 2->4, c: 1->3, d: 3->4
    return Quiver.from_edges([1, 2, 3, 4], [("a", 1, 2), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)])


def test_path_written_right_to_left(square):
    p = square.path("b", "a")
    assert p.source == 1 and p.target == 4 and p.vertices == (1, 2, 4)
    assert p.length == 2
    assert str(p) == "b*a"


def test_compose_and_identity(square):
    a, b = square.path("a"), square.path("b")
    assert compose(b, a) == square.path("b", "a")
    assert compose(b, trivial_path(2)) == b
    assert compose(trivial_path(4), b) == b
    with pytest.raises(CompositionError):
        compose(a, b)
    with pytest.raises(CompositionError):
        square.path("a", "b")


def test_path_combo_canonical(square):
    c = square.combo((1, "b", "a"), (-1, "d", "c"), (2, "b", "a"))
    assert c.as_dict() == {square.path("b", "a"): 3, square.path("d", "c"): -1}
    assert c.monic().as_dict()[square.path("b", "a")] == 1
    assert str(square.combo((1, "b", "a"), (-1, "d", "c"))) == "b*a - d*c"
    assert square.combo((1, "b", "a"), (-1, "b", "a")).is_zero


def test_inhomogeneous_rejected(square):
    with pytest.raises(InhomogeneousRelationError):
        PathCombo.build([(square.path("b", "a"), 1), (square.path("a"), 1)])
    with pytest.raises(InhomogeneousRelationError):
        PathCombo.build([(square.path("b", "a"), 1), (square.path("b"), 1)])


def test_validate_relation(square):
    r = square.combo((1, "b", "a"), (-1, "d", "c"))
    rep = validate_relation(square, r)
    assert (rep.source, rep.target, rep.length, rep.num_terms) == (1, 4, 2, 2)
    other = Quiver.from_edges([1, 2, 4], [("a", 1, 2), ("b", 2, 4)])
    with pytest.raises(UnknownArrowError):
        validate_relation(other, r)


def test_quiver_rejects_bad_input():
    with pytest.raises(QuiverError):
        Quiver.from_edges([1], [("a", 1, 2)])
    with pytest.raises(QuiverError):
        Quiver.from_edges([1, 2], [("a", 1, 2), ("a", 2, 1)])
    with pytest.raises(QuiverError):
        Quiver((1, 1), ())


def test_bound_quiver_validation(square):
    with pytest.raises(QuiverError):
        BoundQuiver(square, (), nakayama={1: 1})
    with pytest.raises(QuiverError):
        BoundQuiver(square, (), translation={4: 1, 3: 1})
    ok = BoundQuiver(square, (square.combo((1, "b", "a"), (-1, "d", "c")),), translation={4: 1})
    assert ok.tau_inverse() == {1: 4}


def test_labels_do_not_collide():
    a = Connecting(Level(1, 0), 2)
    b = Leveled(Connecting(1, 0), 2)
    assert a != b and label_key(a) != label_key(b)
    assert Level(1, 2) != (1, 2)
    assert render(Leveled(Returning((0, 1)), 2)) == "(beta@(0,1)|2)"
    assert render(Coord(1, (3,))) == "alpha1@(3)"


def test_label_key_is_total():
    labels = [1, "x", (1, 2), Level(1, 0), Coord(0, (1,)), Returning(2), Leveled("a", 1), Connecting(3, 1)]
    assert len({label_key(x) for x in labels}) == len(labels)
    sorted(labels, key=label_key)


def test_vertices_sorted_canonically():
    q = Quiver.from_edges([3, 1, 2], [("b", 2, 3), ("a", 1, 2)])
    assert q.vertices == (1, 2, 3)
    assert [a.id for a in q.arrows] == ["a", "b"]


def test_iso_witness_detects_mismatch(square):
    w = identity_witness(square)
    assert quiver_equal_under(w, square, square)
    flipped = Quiver.from_edges([1, 2, 3, 4], [("a", 2, 1), ("b", 2, 4), ("c", 1, 3), ("d", 3, 4)])
    assert not quiver_equal_under(w, square, flipped)
    assert match_arrows(square, flipped, {v: v for v in square.vertices}) is None


def test_match_arrows_with_parallel_arrows():
    a = Quiver.from_edges([0, 1], [("x", 0, 1), ("y", 0, 1)])
    b = Quiver.from_edges(["p", "q"], [("u", "p", "q"), ("v", "p", "q")])
    w = match_arrows(a, b, {0: "p", 1: "q"})
    assert w is not None and quiver_equal_under(w, a, b)
    c = Quiver.from_edges(["p", "q"], [("u", "p", "q")])
    assert match_arrows(a, c, {0: "p", 1: "q"}) is None


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_relabeled_quiver_is_isomorphic(data):
    q = random_quiver(data.draw, st)
    perm = data.draw(st.permutations(list(q.vertices)))
    vm = dict(zip(q.vertices, perm))
    r = Quiver.from_edges([vm[v] for v in q.vertices],
                          [(f"y{a.id}", vm[a.source], vm[a.target]) for a in q.arrows])
    w = match_arrows(q, r, vm)
    assert w is not None and quiver_equal_under(w, q, r)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_composition_is_associative(data):
    q = random_quiver(data.draw, st)
    if not q.arrows:
        return
    # random walk of up to three arrows, composed two ways
    a = data.draw(st.sampled_from(q.arrows))
    walk = [a]
    for _ in range(2):
        outs = q.out_arrows(walk[-1].target)
        if not outs:
            break
        walk.append(data.draw(st.sampled_from(outs)))
    steps = [Path((x.id,), (x.source, x.target)) for x in walk]
    if len(steps) == 3:
        p1 = compose(steps[2], compose(steps[1], steps[0]))
        p2 = compose(compose(steps[2], steps[1]), steps[0])
        assert p1 == p2 == q.path(*[x.id for x in reversed(walk)])
