"""Quiver embeddings, induced relations, truncation checks and the cone-to-cover pipeline."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .constructions import cone, cyclic_cover, linear_a, translation_depth
from .linalg import Echelon
from .mckay import AbelianMcKaySpec, abelian_bound_mckay
from .pathalg import QuotientEngine, GradedDims
from .quiver import (BoundQuiver, Connecting, Coord, Level, Leveled, Path, PathCombo, Quiver,
                     Returning, label_key, path_key, render)


@dataclass(frozen=True)
class QuiverEmbedding:
    vertex_map: Mapping
    arrow_map: Mapping

    def vertex(self, v):
        return self.vertex_map[v]

    def path(self, p: Path) -> Path:
        return Path(tuple(self.arrow_map[a] for a in p.arrows), tuple(self.vertex_map[v] for v in p.vertices))

    def combo(self, c: PathCombo) -> PathCombo:
        return PathCombo.build(((self.path(p), x) for p, x in c.terms),
                               self.vertex_map[c.source], self.vertex_map[c.target])

    def then(self, vertex_relabel: Mapping, arrow_relabel: Mapping) -> "QuiverEmbedding":
        return QuiverEmbedding({k: vertex_relabel[v] for k, v in self.vertex_map.items()},
                               {k: arrow_relabel[v] for k, v in self.arrow_map.items()})


def validate_embedding(w: QuiverEmbedding, sub: Quiver, amb: Quiver) -> bool:
    """Maps are total, compatible with sources and targets, and injective."""
    vm, am = w.vertex_map, w.arrow_map
    if any(v not in vm for v in sub.vertices) or any(a.id not in am for a in sub.arrows):
        return False
    if any(not amb.has_vertex(vm[v]) for v in sub.vertices):
        return False
    if len({vm[v] for v in sub.vertices}) != len(sub.vertices):
        return False
    if len({am[a.id] for a in sub.arrows}) != len(sub.arrows):
        return False
    for a in sub.arrows:
        if not amb.has_arrow(am[a.id]):
            return False
        img = amb.arrow(am[a.id])
        if img.source != vm[a.source] or img.target != vm[a.target]:
            return False
    return True


def component(a: PathCombo, image) -> Optional[PathCombo]:
    """Terms of ``a`` whose paths stay inside ``image``; None when nothing survives."""
    image = set(image)
    terms = [(p, c) for p, c in a.terms if all(v in image for v in p.vertices)]
    if not terms:
        return None
    return PathCombo.build(terms, a.source, a.target)


def induced_relations(rels: Iterable[PathCombo], image) -> list:
    """Nonzero components inside ``image``, deduplicated up to scalars."""
    out, seen = [], set()
    for r in rels:
        c = component(r, image)
        if c is None:
            continue
        m = c.monic()
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


@dataclass
class TruncationReport:
    embedding_valid: bool
    full_subquiver: bool
    relations_induced: bool
    translation_commutes: bool = True
    witnesses: list = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return self.embedding_valid and self.full_subquiver and self.relations_induced \
            and self.translation_commutes

    def __bool__(self):
        return self.verdict

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "embedding_valid": self.embedding_valid,
                "full_subquiver": self.full_subquiver, "relations_induced": self.relations_induced,
                "translation_commutes": self.translation_commutes, "witnesses": list(self.witnesses)}


def _cells(rels) -> dict:
    out: dict = {}
    for r in rels:
        if r.is_zero:
            continue
        out.setdefault((r.source, r.target, r.length), []).append({path_key(p): c for p, c in r.terms})
    return out


def is_truncation(w: QuiverEmbedding, sub: BoundQuiver, amb: BoundQuiver) -> TruncationReport:
    """Embedding is valid, its image is a full subquiver, and the image of the
    sub-relations spans the same space as the induced relations in every cell."""
    rep = TruncationReport(validate_embedding(w, sub.quiver, amb.quiver), True, True)
    if not rep.embedding_valid:
        rep.full_subquiver = rep.relations_induced = False
        rep.witnesses.append("map is not a quiver embedding")
        return rep
    image = {w.vertex_map[v] for v in sub.quiver.vertices}
    image_arrows = {w.arrow_map[a.id] for a in sub.quiver.arrows}
    for a in amb.quiver.arrows:
        if a.source in image and a.target in image and a.id not in image_arrows:
            rep.full_subquiver = False
            rep.witnesses.append(f"arrow {render(a.id)} between image vertices is not in the image")
    mapped = _cells(w.combo(r) for r in sub.relations)
    induced = _cells(induced_relations(amb.relations, image))
    for cell in sorted(set(mapped) | set(induced), key=lambda c: (label_key(c[0]), label_key(c[1]), c[2])):
        ea, eb = Echelon(mapped.get(cell, ())), Echelon(induced.get(cell, ()))
        same = ea.rank == eb.rank and all(eb.contains(r) for r in ea.rows())
        if not same:
            rep.relations_induced = False
            rep.witnesses.append(
                f"cell {render(cell[0])} -> {render(cell[1])} length {cell[2]}: "
                f"image relations span rank {ea.rank}, induced relations rank {eb.rank}")
    return rep


def mckay_truncation_check(w: QuiverEmbedding, b: BoundQuiver, mck: BoundQuiver) -> TruncationReport:
    """Truncation plus omega_0 tau = nu omega_0 (and on arrows when both maps are known)."""
    rep = is_truncation(w, b, mck)
    if not rep.embedding_valid:
        rep.translation_commutes = False
        return rep
    tau, nu = b.translation or {}, mck.nakayama
    if nu is None:
        rep.translation_commutes = False
        rep.witnesses.append("ambient quiver has no Nakayama permutation")
        return rep
    for x, tx in tau.items():
        if w.vertex_map[tx] != nu[w.vertex_map[x]]:
            rep.translation_commutes = False
            rep.witnesses.append(
                f"omega(tau {render(x)}) = {render(w.vertex_map[tx])} but nu(omega {render(x)}) = "
                f"{render(nu[w.vertex_map[x]])}")
    if b.translation_arrows and mck.nakayama_arrows:
        for a, ta in b.translation_arrows.items():
            if w.arrow_map[ta] != mck.nakayama_arrows[w.arrow_map[a]]:
                rep.translation_commutes = False
                rep.witnesses.append(f"translation and Nakayama maps disagree on arrow {render(a)}")
    return rep


def loewy_bound(b: BoundQuiver, cap: int = 64) -> int:
    """First degree in which kQ/(rho) vanishes."""
    eng = QuotientEngine(b.quiver, b.relations, cap)
    if eng.vanish_from is None:
        raise ValueError(f"algebra does not vanish below degree {cap}")
    return eng.vanish_from


@dataclass
class QuotientComparison:
    ok: bool
    max_degree: int
    sub_dims: GradedDims
    ambient_dims: GradedDims

    def __bool__(self):
        return self.ok


def idempotent_quotient_check(w: QuiverEmbedding, sub: BoundQuiver, amb: BoundQuiver, max_degree: Optional[int] = None) -> QuotientComparison:
    """kQ'/(rho') and kQ/(rho, E) have the same graded dimensions on image cells,
    E being the vertices outside the image."""
    D = loewy_bound(sub) if max_degree is None else max_degree
    image = {w.vertex_map[v] for v in sub.quiver.vertices}
    drop = [v for v in amb.quiver.vertices if v not in image]
    left = QuotientEngine(sub.quiver, sub.relations, D).dims().relabeled(w.vertex_map)
    right = QuotientEngine(amb.quiver, amb.relations, D, drop).dims()
    ok = left.cells == right.restricted(image).cells and right.cells == right.restricted(image).cells
    return QuotientComparison(ok, D, left, right)


class PipelinePreconditionError(ValueError):
    def __init__(self, msg, report):
        super().__init__(msg)
        self.report = report


@dataclass
class PipelineResult:
    report: TruncationReport
    precondition: TruncationReport
    m: int
    cone: BoundQuiver
    cover: BoundQuiver
    embedding: QuiverEmbedding
    group: AbelianMcKaySpec
    extended_group: AbelianMcKaySpec

    @property
    def verdict(self) -> bool:
        return self.report.verdict


def minimal_cover_order(b: BoundQuiver) -> int:
    """1 + max{d : tau^d x is defined for some x}."""
    return 1 + max(translation_depth(b).values(), default=0)


def cover_embedding(w: QuiverEmbedding, b: BoundQuiver, c: BoundQuiver, m: int) -> QuiverEmbedding:
    """omega~(x, d) = (omega x, -d), omega~(a, d) = (omega a, -d), omega~((x, d)_1) = (beta_{omega x}, -d)."""
    vm = {v: Level(w.vertex_map[v.base], (-v.level) % m) for v in c.quiver.vertices}
    am = {}
    for a in c.quiver.arrows:
        aid = a.id
        if isinstance(aid, Leveled):
            am[aid] = Leveled(w.arrow_map[aid.arrow], (-aid.level) % m)
        elif isinstance(aid, Connecting):
            am[aid] = Leveled(Returning(w.vertex_map[aid.vertex]), (-aid.level) % m)
        else:
            raise ValueError(f"unexpected cone arrow {render(aid)}")
    return QuiverEmbedding(vm, am)


def extended_spec(g: AbelianMcKaySpec, m: int) -> AbelianMcKaySpec:
    """G' x C_m as a diagonal abelian group: weights (w_j, 0) and (-sum w, 1)."""
    ws = [tuple(w) + (0,) for w in g.weights]
    ws.append(tuple(g.neg(g.weight_sum())) + (1 % m,))
    return AbelianMcKaySpec(g.orders + (m,), tuple(ws))


def cover_relabeling(g: AbelianMcKaySpec, m: int):
    """Vertex and arrow maps from the cyclic cover of G onto the abelian McKay quiver of G' x C_m."""
    n = g.n
    vmap, amap = {}, {}
    for t in range(m):
        for i in g.vertices():
            vmap[Level(i, t)] = i + (t,)
            for j in range(n):
                amap[Leveled(Coord(j, i), t)] = Coord(j, i + (t,))
            amap[Leveled(Returning(i), t)] = Coord(n, i + (t,))
    return vmap, amap


def cone_cover_pipeline(base: BoundQuiver, g: AbelianMcKaySpec, w: QuiverEmbedding,
                          m: Optional[int] = None, twist: int = -1) -> PipelineResult:
    """Check that the cone of ``base`` is a truncation of the cover of the McKay quiver of ``g``."""
    mck = abelian_bound_mckay(g)
    pre = mckay_truncation_check(w, base, mck)
    if not pre.verdict:
        raise PipelinePreconditionError("base is not a truncation of the bound McKay quiver", pre)
    m_min = minimal_cover_order(base)
    if m is None:
        m = m_min
    elif m < m_min:
        raise ValueError(f"m = {m} is below the minimal order {m_min}")
    cover = cyclic_cover(mck, m, side="rho", twist=twist)
    cb = cone(base)
    wt = cover_embedding(w, base, cb, m)
    rep = mckay_truncation_check(wt, cb, cover)
    return PipelineResult(rep, pre, m, cb, cover, wt, g, extended_spec(g, m))


def linear_embedding(s: int, r: int) -> QuiverEmbedding:
    """A_s into the cyclic McKay quiver of Z_r: i -> i, a_i -> alpha(i)."""
    vm = {i: (i % r,) for i in range(1, s + 1)}
    am = {f"a{i}": Coord(0, (i % r,)) for i in range(1, s)}
    return QuiverEmbedding(vm, am)


def t_algebra_chain(s: int, n: int, group_order: Optional[int] = None,
                    m: Optional[int] = None, twist: int = -1) -> list:
    """Run the pipeline n times starting from (A_s, Z_r weight 1); step k verifies T^{k+1}_s.

    Intermediate covers get one level above the minimal order so that the next
    cone fits without its levels wrapping around; the last step uses the
    minimal order, or ``m`` when given.
    """
    r = s + 1 if group_order is None else group_order
    base = linear_a(s)
    g = AbelianMcKaySpec((r,), ((1,),))
    w = linear_embedding(s, r)
    results = []
    for step in range(n):
        last = step == n - 1
        mk = m if last else minimal_cover_order(base) + 1
        res = cone_cover_pipeline(base, g, w, mk, twist)
        results.append(res)
        if not res.verdict:
            break
        vmap, amap = cover_relabeling(g, res.m)
        base, g, w = res.cone, res.extended_group, res.embedding.then(vmap, amap)
    return results
