from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from mckaycone.constructions import (cone, cyclic_cover, linear_a, mckay_returning_arrows_rho,
                                     mckay_returning_arrows_theta, returning_arrow_quiver,
                                     t_algebra, translation_depth, twisted_trivial_extension)
from mckaycone.linalg import span_equal
from mckaycone.mckay import AbelianMcKaySpec, abelian_bound_mckay
from mckaycone.pathalg import QuotientEngine, quadratic_orthocheck, stable_translation_check
from mckaycone.quiver import (BoundQuiver, Connecting, Coord, Level, Leveled, PathCombo, Path,
                              Quiver, QuiverError, Returning, label_key)
from mckaycone.truncation import QuiverEmbedding, cover_relabeling, extended_spec

SPECS = [AbelianMcKaySpec((3,), ((1,),)), AbelianMcKaySpec((4,), ((1,), (1,))),
         AbelianMcKaySpec((2, 2), ((1, 0), (0, 1))), AbelianMcKaySpec((5,), ((1,), (2,))),
         AbelianMcKaySpec((2, 3), ((1, 0), (0, 1), (1, 2)))]


def cells(rels):
    out = {}
    for r in rels:
        if not r.is_zero:
            out.setdefault((r.source, r.target, r.length), []).append(
                {tuple(label_key(a) for a in p.arrows): c for p, c in r.terms})
    return out


def same_ideal_generators(r1, r2) -> bool:
    c1, c2 = cells(r1), cells(r2)
    return all(span_equal(c1.get(k, []), c2.get(k, [])) for k in set(c1) | set(c2))


def relabel(rels, vmap, amap):
    w = QuiverEmbedding(vmap, amap)
    return [w.combo(r) for r in rels]


def returning_relabeling(spec):
    n = spec.n
    vmap = {v: v for v in spec.vertices()}
    amap = {Coord(j, v): Coord(j, v) for v in spec.vertices() for j in range(n)}
    amap.update({Returning(v): Coord(n, v) for v in spec.vertices()})
    return vmap, amap


def sl_spec(spec):
    return AbelianMcKaySpec(spec.orders, spec.weights + (spec.neg(spec.weight_sum()),))


@pytest.mark.parametrize("spec", SPECS)
def test_returning_arrows_give_mckay_data_of_sl_embedding(spec):
    b = abelian_bound_mckay(spec)
    target = abelian_bound_mckay(sl_spec(spec))
    vmap, amap = returning_relabeling(spec)
    rho = mckay_returning_arrows_rho(b)
    theta = mckay_returning_arrows_theta(b)
    assert same_ideal_generators(relabel(rho.relations, vmap, amap), target.relations)
    assert same_ideal_generators(relabel(theta.relations, vmap, amap), target.dual_relations)
    assert same_ideal_generators(relabel(rho.dual_relations, vmap, amap), target.dual_relations)
    assert rho.loewy_length == spec.n + 2
    assert all(rho.nakayama[v] == v for v in rho.quiver.vertices)


@pytest.mark.parametrize("spec", SPECS)
def test_positive_twist_differs_from_sl_relations(spec):
    b = abelian_bound_mckay(spec)
    target = abelian_bound_mckay(sl_spec(spec))
    vmap, amap = returning_relabeling(spec)
    theta = mckay_returning_arrows_theta(b, twist=1)
    assert not same_ideal_generators(relabel(theta.relations, vmap, amap), target.dual_relations)


@pytest.mark.parametrize("spec", SPECS)
@pytest.mark.parametrize("m", [1, 2, 3])
def test_cover_is_mckay_data_of_extended_group(spec, m):
    b = abelian_bound_mckay(spec)
    cov = cyclic_cover(b, m, side="rho")
    ext = abelian_bound_mckay(extended_spec(spec, m))
    vmap, amap = cover_relabeling(spec, m)
    assert sorted(vmap.values()) == sorted(ext.quiver.vertices)
    for a in cov.quiver.arrows:
        e = ext.quiver.arrow(amap[a.id])
        assert (e.source, e.target) == (vmap[a.source], vmap[a.target])
    assert same_ideal_generators(relabel(cov.relations, vmap, amap), ext.relations)
    assert same_ideal_generators(relabel(cov.dual_relations, vmap, amap), ext.dual_relations)
    assert all(vmap[cov.nakayama[v]] == ext.nakayama[vmap[v]] for v in cov.quiver.vertices)


@pytest.mark.parametrize("spec", SPECS[:4])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_cover_theta_side_is_self_injective(spec, m):
    cov = cyclic_cover(abelian_bound_mckay(spec), m, side="theta")
    rep = stable_translation_check(cov, spec.n + 1)
    assert rep.passed, rep.violations
    assert sum(rep.dims.totals()) == spec.group_order * m * 2 ** (spec.n + 1)
    assert quadratic_orthocheck(cov.quiver, cov.relations, cov.dual_relations).ok


def test_cover_order_one_is_returning_arrow_construction():
    spec = SPECS[2]
    b = abelian_bound_mckay(spec)
    cov = cyclic_cover(b, 1, side="rho")
    ret = mckay_returning_arrows_rho(b)
    vmap = {Level(v, 0): v for v in b.quiver.vertices}
    amap = {a.id: a.id.arrow for a in cov.quiver.arrows}
    assert same_ideal_generators(relabel(cov.relations, vmap, amap), ret.relations)


@pytest.mark.parametrize("spec", SPECS)
def test_twisted_trivial_extension_variants_agree(spec):
    b = abelian_bound_mckay(spec).on_side("theta")
    for eps in (1, -1):
        fwd = twisted_trivial_extension(b, eps, "forward")
        rev = twisted_trivial_extension(b, eps, "reverse")
        assert same_ideal_generators(fwd.relations, rev.relations)
        assert fwd.loewy_length == b.loewy_length + 1


def test_trivial_extension_of_exterior_algebra_is_mckay_of_sl():
    spec = SPECS[3]
    b = abelian_bound_mckay(spec).on_side("theta")
    t = twisted_trivial_extension(b, -1)
    theta = mckay_returning_arrows_theta(abelian_bound_mckay(spec))
    assert same_ideal_generators(t.relations, theta.relations)


def test_constructions_need_nakayama():
    q = Quiver.from_edges([1, 2], [("a", 1, 2)])
    with pytest.raises(QuiverError):
        returning_arrow_quiver(BoundQuiver(q))
    with pytest.raises(QuiverError):
        cyclic_cover(BoundQuiver(q), 2)
    with pytest.raises(ValueError):
        twisted_trivial_extension(abelian_bound_mckay(SPECS[0]), twist=2)


def test_cover_arrow_shape():
    b = abelian_bound_mckay(AbelianMcKaySpec((3,), ((1,),)))
    cov = cyclic_cover(b, 2, side="rho")
    beta = cov.quiver.arrow(Leveled(Returning((0,)), 1))
    assert beta.source == Level((0,), 1) and beta.target == Level((2,), 0)
    assert len(cov.quiver.vertices) == 6 and len(cov.quiver.arrows) == 12


# cone


def test_t_algebra_2_2():
    b = t_algebra(2, 2)
    assert b.quiver.vertices == (Level(1, 0), Level(2, 0), Level(2, 1))
    assert {a.id for a in b.quiver.arrows} == {Leveled("a1", 0), Connecting(2, 1)}
    (r,) = b.relations
    assert r.terms == ((Path((Leveled("a1", 0), Connecting(2, 1)), (Level(2, 1), Level(1, 0), Level(2, 0))), 1),)
    assert b.translation == {Level(2, 0): Level(2, 1)}


def test_linear_a():
    b = linear_a(4)
    assert b.translation == {2: 1, 3: 2, 4: 3}
    assert translation_depth(b) == {1: 0, 2: 1, 3: 2, 4: 3}
    assert t_algebra(4, 1) == b
    assert b.relations == ()


def interval_hom_count(s):
    # Auslander algebra of A_s: pairs of intervals [a,b], [c,d] with c <= a <= d <= b
    return sum(1 for a in range(s) for b in range(a, s) for c in range(a + 1) for d in range(a, b + 1))


@pytest.mark.parametrize("s", range(1, 7))
def test_cone_of_a_s_is_auslander_algebra_sized(s):
    b = t_algebra(s, 2)
    assert len(b.quiver.vertices) == s * (s + 1) // 2
    eng = QuotientEngine(b.quiver, b.relations, s + 1)
    assert sum(eng.dims().totals()) == interval_hom_count(s)


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 6), st.integers(1, 4))
def test_cone_counts(s, n):
    b = t_algebra(s, n)
    assert len(b.quiver.vertices) == comb(s + n - 1, n)
    if s + n <= 7:
        eng = QuotientEngine(b.quiver, b.relations, s + 1)
        assert eng.vanish_from == s
        assert sum(eng.dims().totals()) == comb(s + 2 * n - 1, 2 * n)


def test_cone_translation_is_compatible():
    b = t_algebra(4, 3)
    for a, ta in b.translation_arrows.items():
        arr, img = b.quiver.arrow(a), b.quiver.arrow(ta)
        assert b.translation[arr.source] == img.source and b.translation[arr.target] == img.target


def test_cone_without_translation_is_a_copy():
    q = Quiver.from_edges([1, 2, 3], [("a", 1, 2), ("b", 2, 3)])
    b = BoundQuiver(q, (q.combo((1, "b", "a")),), translation={})
    c = cone(b)
    assert len(c.quiver.vertices) == 3 and len(c.relations) == 1
    with pytest.raises(QuiverError):
        cone(BoundQuiver(q))


def test_ambiguous_tau_minus_needs_arrow_map():
    q = Quiver.from_edges([1, 2, 3, 4], [("a", 1, 2), ("b", 1, 2), ("c", 3, 4), ("d", 3, 4)])
    b = BoundQuiver(q, (), translation={3: 1, 4: 2})
    with pytest.raises(QuiverError, match="ambiguous"):
        cone(b)
    ok = b.with_(translation_arrows={"c": "a", "d": "b"})
    assert len(cone(ok).quiver.vertices) == 6


def test_cover_rejects_quiver_with_returning_arrows():
    b = abelian_bound_mckay(AbelianMcKaySpec((3,), ((1,),)))
    with pytest.raises(QuiverError):
        cyclic_cover(mckay_returning_arrows_rho(b), 2)
