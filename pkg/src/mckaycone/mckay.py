"""McKay quivers from character data, and bound McKay quivers of diagonal abelian groups."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .character import (CharacterTable, RepCharacter, TableInconsistencyError,
                        tensor_decompose)
from .quiver import Arrow, BoundQuiver, Coord, Quiver, QuiverError, render


@dataclass(frozen=True)
class AbelianMcKaySpec:
    """Diagonal action of Z_{r_1} x ... x Z_{r_t} on V = k^n by the given weights.

    ``weights[j]`` is the character by which the group acts on coordinate j.
    """
    orders: tuple
    weights: tuple

    def __post_init__(self):
        orders = tuple(int(r) for r in self.orders)
        if not orders or any(r < 1 for r in orders):
            raise ValueError("orders must be a non-empty list of positive integers")
        ws = []
        for w in self.weights:
            w = tuple(w) if isinstance(w, (tuple, list)) else (w,)
            if len(w) != len(orders):
                raise ValueError(f"weight {w} does not match orders {orders}")
            ws.append(tuple(int(x) % r for x, r in zip(w, orders)))
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "weights", tuple(ws))

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def group_order(self) -> int:
        out = 1
        for r in self.orders:
            out *= r
        return out

    def vertices(self) -> list:
        return list(itertools.product(*(range(r) for r in self.orders)))

    def add(self, a, b) -> tuple:
        return tuple((x + y) % r for x, y, r in zip(a, b, self.orders))

    def neg(self, a) -> tuple:
        return tuple((-x) % r for x, r in zip(a, self.orders))

    def weight_sum(self) -> tuple:
        total = tuple(0 for _ in self.orders)
        for w in self.weights:
            total = self.add(total, w)
        return total

    def to_json(self) -> dict:
        return {"orders": list(self.orders), "weights": [list(w) for w in self.weights]}

    @classmethod
    def from_json(cls, doc) -> "AbelianMcKaySpec":
        return cls(tuple(doc["orders"]), tuple(tuple(w) for w in doc["weights"]))


def mckay_quiver(t: CharacterTable, chi_v: RepCharacter) -> Quiver:
    """One vertex per irreducible, a_{i,j} arrows i -> j."""
    labels = t.labels
    edges = []
    for i, src in enumerate(labels):
        mult = tensor_decompose(t, chi_v, i)
        for j, a in enumerate(mult):
            for k in range(a):
                edges.append((f"{render(src)}>{render(labels[j])}:{k}", src, labels[j]))
    return Quiver.from_edges(labels, edges)


def abelian_bound_mckay(spec: AbelianMcKaySpec) -> BoundQuiver:
    """Bound McKay quiver with rho (commutativity) as relations and theta (exterior) as dual.

    Arrow ``Coord(j, i)`` is alpha_j(i): i -> i + w_j; nu(i) = i - sum(w).
    """
    verts = spec.vertices()
    w = spec.weights
    n = spec.n
    arrows = [Arrow(Coord(j, i), i, spec.add(i, w[j])) for i in verts for j in range(n)]
    q = Quiver(tuple(verts), tuple(arrows))
    rho, theta = [], []
    for i in verts:
        for j in range(n):
            ij = spec.add(i, w[j])
            theta.append(q.combo((1, Coord(j, ij), Coord(j, i))))
            for l in range(j + 1, n):
                il = spec.add(i, w[l])
                one = (Coord(l, ij), Coord(j, i))
                two = (Coord(j, il), Coord(l, i))
                rho.append(q.combo((1,) + one, (-1,) + two))
                theta.append(q.combo((1,) + one, (1,) + two))
    shift = spec.neg(spec.weight_sum())
    nu = {i: spec.add(i, shift) for i in verts}
    nu_arrows = {Coord(j, i): Coord(j, nu[i]) for i in verts for j in range(n)}
    return BoundQuiver(q, tuple(rho), nu, nu_arrows, loewy_length=n + 1, side="rho",
                       dual_relations=tuple(theta), abelian=spec)


class NakayamaOrientationError(QuiverError):
    pass


def nakayama_from_det(t: CharacterTable, det_values=None, validate_with: BoundQuiver = None) -> dict:
    """nu(i) = j where chi_j = chi_i * det^{-1}.

    With ``validate_with`` (a theta-side bound quiver on the McKay quiver) the
    permutation is checked against the stable translation conditions; on
    failure the opposite orientation is tested and reported.
    """
    det = det_values if det_values is not None else t.det_values
    if det is None:
        raise ValueError("Nakayama permutation needs determinant values")

    def twist(inverse: bool) -> dict:
        factors = [d.conj() if inverse else d for d in det]
        out = {}
        for irr in t.irreducibles:
            target = [v * f for v, f in zip(irr.values, factors)]
            hits = [o.key for o in t.irreducibles if list(o.values) == target]
            if len(hits) != 1:
                raise TableInconsistencyError(f"no unique twist of {irr.name} by the determinant")
            out[irr.key] = hits[0]
        return out

    nu = twist(True)
    if validate_with is not None:
        from .pathalg import stable_translation_check
        rep = stable_translation_check(validate_with.with_(nakayama=nu, nakayama_arrows=None))
        if not rep.passed:
            other = twist(False)
            rep2 = stable_translation_check(validate_with.with_(nakayama=other, nakayama_arrows=None))
            hint = "the opposite orientation (tensor by det) passes" if rep2.passed else \
                "the opposite orientation fails as well"
            raise NakayamaOrientationError(
                f"nu = tensor by det^-1 fails the stable translation check ({rep.violations[0][1]}); {hint}")
    return nu
