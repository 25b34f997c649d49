"""Quiver-level constructions: returning arrows, twisted trivial extensions,
cyclic covers and the cone of an n-complete algebra."""
from __future__ import annotations

from typing import Optional

from .quiver import (Arrow, BoundQuiver, Connecting, Level, Leveled, Path, PathCombo,
                     Quiver, QuiverError, Returning, render)


def _need_nakayama(b: BoundQuiver, arrows: bool = True):
    if b.nakayama is None:
        raise QuiverError("construction needs a Nakayama permutation")
    if arrows and b.nakayama_arrows is None:
        raise QuiverError("construction needs the Nakayama map on arrows")


def _check_twist(eps: int) -> int:
    if eps not in (1, -1):
        raise ValueError("twist must be +1 or -1")
    return eps


def _inverse(m: dict) -> dict:
    return {v: k for k, v in m.items()}


def returning_arrow_quiver(b: BoundQuiver) -> Quiver:
    """Add ``beta_i: i -> nu(i)`` at every vertex."""
    _need_nakayama(b, arrows=False)
    q = b.quiver
    extra = [Arrow(Returning(i), i, b.nakayama[i]) for i in q.vertices]
    return Quiver(q.vertices, q.arrows + tuple(extra))


def _identity_nakayama(q: Quiver):
    return {v: v for v in q.vertices}, {a.id: a.id for a in q.arrows}


def _bump(loewy: Optional[int]) -> Optional[int]:
    return None if loewy is None else loewy + 1


def twisted_trivial_extension(b: BoundQuiver, twist: int = -1, variant: str = "forward") -> BoundQuiver:
    """Bound quiver of the twisted trivial extension, sigma acting on arrows by ``twist``.

    forward: rel u {b_{nu i} b_i} u {b_j a - twist * nu(a) b_i : a: i -> j}
    reverse: rel u {b_{nu i} b_i} u {a b_{nu^-1 i} - twist * b_{nu^-1 j} nu^-1(a)}
    """
    _need_nakayama(b)
    eps = _check_twist(twist)
    if variant not in ("forward", "reverse"):
        raise ValueError(f"unknown variant {variant!r}")
    q2 = returning_arrow_quiver(b)
    nu, nua = b.nakayama, b.nakayama_arrows
    rels = list(b.relations)
    rels += [q2.combo((1, Returning(nu[i]), Returning(i))) for i in b.quiver.vertices]
    if variant == "forward":
        for a in b.quiver.arrows:
            rels.append(q2.combo((1, Returning(a.target), a.id), (-eps, nua[a.id], Returning(a.source))))
    else:
        rels += _commuting_relations(q2, b, eps)
    nu2, nua2 = _identity_nakayama(q2)
    return BoundQuiver(q2, tuple(rels), nu2, nua2, loewy_length=_bump(b.loewy_length), side=b.side)


def _commuting_relations(q2: Quiver, b: BoundQuiver, coef: int) -> list:
    """{a b_{nu^-1 i} - coef * b_{nu^-1 j} nu^-1(a) : a: i -> j}."""
    nuinv, nuainv = _inverse(b.nakayama), _inverse(b.nakayama_arrows)
    out = []
    for a in b.quiver.arrows:
        out.append(q2.combo((1, a.id, Returning(nuinv[a.source])),
                            (-coef, Returning(nuinv[a.target]), nuainv[a.id])))
    return out


def _returning(b: BoundQuiver, side: str, twist: int) -> tuple:
    q2 = returning_arrow_quiver(b)
    if side == "rho":
        rels = list(b.relations) + _commuting_relations(q2, b, 1)
    else:
        rels = list(b.relations)
        rels += [q2.combo((1, Returning(b.nakayama[i]), Returning(i))) for i in b.quiver.vertices]
        rels += _commuting_relations(q2, b, twist)
    return q2, tuple(rels)


def _returning_pair(b: BoundQuiver, side: str, twist: int) -> BoundQuiver:
    _need_nakayama(b)
    _check_twist(twist)
    q2, rels = _returning(b, side, twist)
    dual = None
    if b.dual_relations is not None:
        other = "theta" if side == "rho" else "rho"
        _, dual = _returning(b.dual(), other, twist)
    nu2, nua2 = _identity_nakayama(q2)
    return BoundQuiver(q2, rels, nu2, nua2, loewy_length=_bump(b.loewy_length), side=side,
                       dual_relations=dual)


def mckay_returning_arrows_rho(b: BoundQuiver, twist: int = -1) -> BoundQuiver:
    """(Q_G', rho_G'): rho_G plus a b_{nu^-1 i} - b_{nu^-1 j} nu^-1(a) for every arrow a: i -> j.

    If ``b`` carries theta_G as its dual, theta_G' is attached as the dual.
    """
    return _returning_pair(b.on_side("rho"), "rho", twist)


def mckay_returning_arrows_theta(b: BoundQuiver, twist: int = -1) -> BoundQuiver:
    """(Q_G', theta_G'): theta_G, the squares b_{nu i} b_i and
    a b_{nu^-1 i} - twist * b_{nu^-1 j} nu^-1(a)."""
    return _returning_pair(b.on_side("theta"), "theta", twist)


def _lift(p: Path, t: int) -> Path:
    return Path(tuple(Leveled(a, t) for a in p.arrows), tuple(Level(v, t) for v in p.vertices))


def _cover_relations(b: BoundQuiver, side: str, m: int, eps: int, qc: Quiver) -> list:
    nu, nua = b.nakayama, b.nakayama_arrows
    nuinv, nuainv = _inverse(nu), _inverse(nua)
    coef = 1 if side == "rho" else eps
    out = []
    for t in range(m):
        for r in b.relations:
            out.append(PathCombo.build(((_lift(p, t), c) for p, c in r.terms),
                                       Level(r.source, t), Level(r.target, t)))
        if side == "theta":
            for i in b.quiver.vertices:
                out.append(qc.combo((1, Leveled(Returning(nu[i]), (t + 1) % m), Leveled(Returning(i), t))))
        s = (t - 1) % m
        for a in b.quiver.arrows:
            out.append(qc.combo(
                (1, Leveled(a.id, t), Leveled(Returning(nuinv[a.source]), s)),
                (-coef, Leveled(Returning(nuinv[a.target]), s), Leveled(nuainv[a.id], s))))
    return out


def cyclic_cover(b: BoundQuiver, m: int, side: Optional[str] = None, twist: int = -1) -> BoundQuiver:
    """Bound quiver on Q_0 x Z/m with level arrows (a, t) and returning arrows
    (beta_i, t): (i, t) -> (nu i, t + 1); nu(i, t) = (i, t - 1)."""
    if m < 1:
        raise ValueError("m must be positive")
    _need_nakayama(b)
    if any(isinstance(a.id, Returning) for a in b.quiver.arrows):
        raise QuiverError("cover adds its own returning arrows; pass the quiver without them")
    eps = _check_twist(twist)
    side = side or b.side or "rho"
    if side not in ("rho", "theta"):
        raise ValueError(f"unknown side {side!r}")
    b = b.on_side(side)
    q, nu = b.quiver, b.nakayama
    verts = [Level(i, t) for t in range(m) for i in q.vertices]
    arrows = [Arrow(Leveled(a.id, t), Level(a.source, t), Level(a.target, t)) for t in range(m) for a in q.arrows]
    arrows += [Arrow(Leveled(Returning(i), t), Level(i, t), Level(nu[i], (t + 1) % m))
               for t in range(m) for i in q.vertices]
    qc = Quiver(tuple(verts), tuple(arrows))
    rels = _cover_relations(b, side, m, eps, qc)
    dual = None
    if b.dual_relations is not None:
        other = "theta" if side == "rho" else "rho"
        dual = tuple(_cover_relations(b.dual(), other, m, eps, qc))
    nuc = {Level(i, t): Level(i, (t - 1) % m) for t in range(m) for i in q.vertices}
    nuca = {a.id: Leveled(a.id.arrow, (a.id.level - 1) % m) for a in qc.arrows}
    return BoundQuiver(qc, tuple(rels), nuc, nuca, loewy_length=_bump(b.loewy_length), side=side,
                       dual_relations=dual)


def translation_depth(b: BoundQuiver) -> dict:
    """Largest d with tau^d x defined, per vertex."""
    tau = b.translation or {}
    out = {}
    for x in b.quiver.vertices:
        d, y = 0, x
        seen = {x}
        while y in tau:
            y = tau[y]
            if y in seen:
                raise QuiverError(f"translation is periodic at {render(x)}")
            seen.add(y)
            d += 1
        out[x] = d
    return out


def _tau_minus_arrow(b: BoundQuiver):
    """Arrow map alpha: tau x -> y  |->  tau^- alpha: x -> tau^- y (None where undefined)."""
    q = b.quiver
    tau_inv = b.tau_inverse()
    if b.translation_arrows is not None:
        inv = _inverse(b.translation_arrows)
        return lambda a: inv.get(a)

    def infer(a):
        arr = q.arrow(a)
        x, ty = tau_inv.get(arr.source), tau_inv.get(arr.target)
        if x is None or ty is None:
            return None
        cands = q.arrows_between(x, ty)
        if len(cands) > 1:
            raise QuiverError(f"tau^- of arrow {render(a)} is ambiguous; supply translation_arrows")
        return cands[0].id if cands else None
    return infer


def cone(b: BoundQuiver) -> BoundQuiver:
    """Bound quiver and translation of the cone, built level by level.

    Terms of a relation that would pass through a missing vertex or arrow are
    dropped, which can leave zero relations.
    """
    if b.translation is None:
        raise QuiverError("cone needs a translation (use an empty map if every vertex is projective)")
    q = b.quiver
    tau = b.translation
    tau_inv = b.tau_inverse()
    depth = translation_depth(b)

    def exists(x, d):
        return x is not None and 0 <= d <= depth[x]

    verts = [Level(x, d) for x in q.vertices for d in range(depth[x] + 1)]
    arrows = [Arrow(Leveled(a.id, d), Level(a.source, d), Level(a.target, d))
              for a in q.arrows for d in range(min(depth[a.source], depth[a.target]) + 1)]
    arrows += [Arrow(Connecting(x, d), Level(x, d), Level(tau[x], d - 1))
               for x in q.vertices for d in range(1, depth[x] + 1)]
    qc = Quiver(tuple(verts), tuple(arrows))

    rels = []
    top = max(depth.values(), default=0)
    for r in b.relations:
        for d in range(top + 1):
            terms = [(_cone_lift(p, d), c) for p, c in r.terms
                     if all(exists(v, d) for v in p.vertices)]
            if terms:
                rels.append(PathCombo.build(terms))

    tau_minus = _tau_minus_arrow(b)
    for a in q.arrows:
        x = tau_inv.get(a.source)
        if x is None:
            continue
        y = a.target
        ty = tau_inv.get(y)
        am = tau_minus(a.id)
        for d in range(1, depth[x] + 1):
            terms = []
            if exists(y, d - 1):
                terms.append((1, Leveled(a.id, d - 1), Connecting(x, d)))
            if am is not None and exists(ty, d):
                terms.append((-1, Connecting(ty, d), Leveled(am, d)))
            if terms:
                rels.append(qc.combo(*terms))

    tau2 = {Level(x, d): Level(x, d + 1) for x in q.vertices for d in range(depth[x])}
    tau2a = {}
    for arr in qc.arrows:
        aid = arr.id
        if isinstance(aid, Leveled):
            nxt = Leveled(aid.arrow, aid.level + 1)
        else:
            nxt = Connecting(aid.vertex, aid.level + 1)
        if qc.has_arrow(nxt):
            tau2a[aid] = nxt
    return BoundQuiver(qc, tuple(rels), translation=tau2, translation_arrows=tau2a)


def _cone_lift(p: Path, d: int) -> Path:
    return Path(tuple(Leveled(a, d) for a in p.arrows), tuple(Level(v, d) for v in p.vertices))


def linear_a(s: int) -> BoundQuiver:
    """A_s: 1 -> 2 -> ... -> s with tau(i) = i - 1."""
    if s < 1:
        raise ValueError("s must be positive")
    q = Quiver.from_edges(range(1, s + 1), [(f"a{i}", i, i + 1) for i in range(1, s)])
    tau = {i: i - 1 for i in range(2, s + 1)}
    taua = {f"a{i}": f"a{i - 1}" for i in range(2, s)}
    return BoundQuiver(q, (), translation=tau, translation_arrows=taua)


def t_algebra(s: int, n: int) -> BoundQuiver:
    """Bound quiver with translation of T^n_s: A_s, then n - 1 cones."""
    if n < 1:
        raise ValueError("n must be positive")
    b = linear_a(s)
    for _ in range(n - 1):
        b = cone(b)
    return b
