"""Sweeps over small diagonal abelian groups, shared by the scripts and the test suite."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .character import abelian_table, product_with_cyclic, sl_embed, weights_character
from .constructions import cyclic_cover, mckay_returning_arrows_rho
from .mckay import AbelianMcKaySpec, abelian_bound_mckay, mckay_quiver
from .pathalg import quadratic_orthocheck, quotient_dims, stable_translation_check
from .quiver import BoundQuiver, Level, match_arrows, quiver_equal_under


@dataclass(frozen=True)
class AbelianSweepConfig:
    cyclic_max: int = 8          # Z_r in GL(1) for r <= cyclic_max, weight 1
    pair_max: int = 4            # Z_a x Z_b in GL(2), weights (1,0), (0,1)
    cover_max: int = 4           # cyclic covers of order 1..cover_max
    gl3: tuple = (((2, 2, 2), ((1, 0, 0), (0, 1, 0), (0, 0, 1))),
                  ((3,), ((1,), (1,), (1,))),
                  ((4,), ((1,), (1,), (2,))),
                  ((2, 3), ((1, 0), (0, 1), (1, 1))))

    def specs(self) -> list:
        out = [AbelianMcKaySpec((r,), ((1,),)) for r in range(1, self.cyclic_max + 1)]
        for a, b in itertools.product(range(1, self.pair_max + 1), repeat=2):
            out.append(AbelianMcKaySpec((a, b), ((1, 0), (0, 1))))
        out.extend(AbelianMcKaySpec(o, w) for o, w in self.gl3)
        return out

    def oracle_specs(self) -> list:
        """The GL(1) and GL(2) part, compared against character tables."""
        return [s for s in self.specs() if s.n <= 2]


@dataclass
class OracleOutcome:
    spec: AbelianMcKaySpec
    m: int
    returning_matches: bool
    cover_matches: bool
    ortho: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.returning_matches and self.cover_matches and all(self.ortho.values())


def equal_under_vertex_map(a, b, vertex_map) -> bool:
    w = match_arrows(a, b, vertex_map)
    return w is not None and quiver_equal_under(w, a, b)


def cover_vertex_map(cover: BoundQuiver, m: int) -> dict:
    """Cover vertex (i, t) to the label of chi_i (x) lambda_t; plain i when m = 1."""
    if m == 1:
        return {v: v.base for v in cover.quiver.vertices}
    return {v: Level(v.base, v.level) for v in cover.quiver.vertices}


def orthocheck(b: BoundQuiver) -> bool:
    return quadratic_orthocheck(b.quiver, b.relations, b.dual_relations).ok


def character_oracle(spec: AbelianMcKaySpec, m_max: int) -> list:
    """Compare the returning-arrow quiver and its cyclic covers with character computations."""
    b = abelian_bound_mckay(spec)
    t = abelian_table(spec.orders)
    chi = sl_embed(t, weights_character(t, spec.weights))
    ret = mckay_returning_arrows_rho(b)
    ret_ok = equal_under_vertex_map(ret.quiver, mckay_quiver(t, chi), {v: v for v in ret.quiver.vertices})
    base_ortho = {"G": orthocheck(b), "G'": orthocheck(ret)}
    out = []
    for m in range(1, m_max + 1):
        cov = cyclic_cover(b, m, side="rho")
        tm, chim = product_with_cyclic(t, chi, m)
        cov_ok = equal_under_vertex_map(cov.quiver, mckay_quiver(tm, chim), cover_vertex_map(cov, m))
        ortho = dict(base_ortho, **{"G~": orthocheck(cov)})
        out.append(OracleOutcome(spec, m, ret_ok, cov_ok, ortho))
    return out


@dataclass
class STQOutcome:
    spec: AbelianMcKaySpec
    base_passed: bool
    base_total: int
    extended_passed: bool
    extended_total: int

    @property
    def ok(self) -> bool:
        g, n = self.spec.group_order, self.spec.n
        return (self.base_passed and self.extended_passed
                and self.base_total == g * 2 ** n and self.extended_total == g * 2 ** (n + 1))


def stq_outcome(spec: AbelianMcKaySpec) -> STQOutcome:
    b = abelian_bound_mckay(spec).on_side("theta")
    ext = mckay_returning_arrows_rho(abelian_bound_mckay(spec)).on_side("theta")
    r1 = stable_translation_check(b, spec.n)
    r2 = stable_translation_check(ext, spec.n + 1)
    return STQOutcome(spec, r1.passed, sum(r1.dims.totals()), r2.passed, sum(r2.dims.totals()))
