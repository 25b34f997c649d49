"""Degree-by-degree linear algebra in path algebras modulo homogeneous ideals."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .linalg import Echelon
from .quiver import (BoundQuiver, InhomogeneousRelationError, Path, PathCombo, Quiver,
                     QuiverError, label_key, render)

log = logging.getLogger(__name__)


def paths_of_length(q: Quiver, d: int, i=None, j=None) -> list[Path]:
    """All length-``d`` paths (optionally from ``i`` and/or to ``j``), lexicographic in arrow ids."""
    if d < 0:
        raise ValueError("negative length")
    starts = q.vertices if i is None else (i,)
    out = []
    for s in starts:
        frontier = [Path((), (s,))]
        for _ in range(d):
            nxt = []
            for p in frontier:
                for a in q.out_arrows(p.target):
                    nxt.append(Path((a.id,) + p.arrows, p.vertices + (a.target,)))
            frontier = nxt
        out.extend(p for p in frontier if j is None or p.target == j)
    out.sort(key=lambda p: (label_key(p.source), tuple(label_key(a) for a in p.arrows)))
    return out


@dataclass
class GradedDims:
    """dim e_j (kQ/I)_d e_i for every cell (i, j, d) with d <= max_degree."""
    max_degree: int
    cells: dict = field(default_factory=dict)  # (i, j, d) -> int, nonzero entries only

    def get(self, i, j, d) -> int:
        return self.cells.get((i, j, d), 0)

    def total(self, d: Optional[int] = None) -> int:
        if d is None:
            return sum(self.cells.values())
        return sum(v for (i, j, dd), v in self.cells.items() if dd == d)

    def totals(self) -> list[int]:
        return [self.total(d) for d in range(self.max_degree + 1)]

    def top_degree_from(self, i) -> int:
        """Largest d with a nonzero cell starting at ``i`` (-1 if none)."""
        return max((d for (s, t, d), v in self.cells.items() if s == i and v), default=-1)

    def top_degree_to(self, j) -> int:
        return max((d for (s, t, d), v in self.cells.items() if t == j and v), default=-1)

    def restricted(self, vertices) -> "GradedDims":
        vs = set(vertices)
        return GradedDims(self.max_degree, {k: v for k, v in self.cells.items() if k[0] in vs and k[1] in vs})

    def relabeled(self, vertex_map) -> "GradedDims":
        return GradedDims(self.max_degree,
                          {(vertex_map[i], vertex_map[j], d): v for (i, j, d), v in self.cells.items()})

    def to_json(self) -> dict:
        keys = sorted({(i, j) for i, j, _ in self.cells}, key=lambda c: (label_key(c[0]), label_key(c[1])))
        return {
            "max_degree": self.max_degree,
            "totals": self.totals(),
            "cells": [{"source": render(i), "target": render(j),
                       "dims": [self.get(i, j, d) for d in range(self.max_degree + 1)]} for i, j in keys],
        }


class QuotientEngine:
    """Graded slices of the ideal generated by relations and idempotents ``e_v``, v in ``drop``.

    Uses I_d = kQ_1 I_{d-1} + I_{d-1} kQ_1 + R_d with I_0 spanned by the
    dropped idempotents. Cells touching a dropped vertex are entirely in the
    ideal; paths through a dropped vertex are added as unit vectors.
    """

    def __init__(self, q: Quiver, relations: Iterable[PathCombo], max_degree: int, drop=()):
        if max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        self.quiver = q
        self.max_degree = max_degree
        self.drop = frozenset(drop)
        for v in self.drop:
            if not q.has_vertex(v):
                raise QuiverError(f"unknown vertex {render(v)}")
        self._aidx = {a.id: n for n, a in enumerate(q.arrows)}
        self._arrows = q.arrows
        rels: dict = {}
        for r in relations:
            for p, _ in r.terms:
                if p.length != r.length or p.source != r.source or p.target != r.target:
                    raise InhomogeneousRelationError(f"relation {r} is not homogeneous")
            if r.is_zero:
                continue
            rels.setdefault(r.length, []).append(r)
        self._rels = rels
        self.paths: list[dict] = []   # degree -> {(i, j): [key, ...]}
        self.ideal: list[dict] = []   # degree -> {(i, j): Echelon or None (full)}
        self.vanish_from: Optional[int] = None
        self._build()

    def key(self, p: Path) -> tuple:
        return tuple(self._aidx[a] for a in p.arrows)

    def _vec(self, c: PathCombo) -> dict:
        return {self.key(p): x for p, x in c.terms}

    def _passes_drop(self, i, key) -> bool:
        v = i
        if v in self.drop:
            return True
        for a in reversed(key):
            v = self._arrows[a].target
            if v in self.drop:
                return True
        return False

    def _build(self):
        q = self.quiver
        drop = self.drop
        paths0 = {(v, v): [()] for v in q.vertices}
        ideal0 = {}
        for v in q.vertices:
            if v in drop:
                ideal0[(v, v)] = None
            else:
                e = Echelon()
                for r in self._rels.get(0, []):
                    if r.source == v:
                        e.add(self._vec(r))
                ideal0[(v, v)] = e
        self.paths.append(paths0)
        self.ideal.append(ideal0)
        if self._all_zero(0):
            self.vanish_from = 0
        for d in range(1, self.max_degree + 1):
            if self.vanish_from is not None:
                break
            self._step(d)
            if self._all_zero(d):
                self.vanish_from = d

    def _all_zero(self, d) -> bool:
        for cell, keys in self.paths[d].items():
            e = self.ideal[d][cell]
            if e is not None and e.rank < len(keys):
                return False
        return True

    def _step(self, d):
        arrows = self._arrows
        prev_paths, prev_ideal = self.paths[d - 1], self.ideal[d - 1]
        paths: dict = {}
        for (i, k), keys in prev_paths.items():
            for a in self.quiver.out_arrows(k):
                ai = self._aidx[a.id]
                paths.setdefault((i, a.target), []).extend((ai,) + p for p in keys)
        for keys in paths.values():
            keys.sort()
        rows: dict = {}
        # left multiplication by arrows: a * I_{d-1}(i, k)
        for (i, k), e in prev_ideal.items():
            if e is None or not e.pivots:
                continue
            outs = self.quiver.out_arrows(k)
            ins = self.quiver.in_arrows(i)
            for row in e.pivots.values():
                for a in outs:
                    ai = self._aidx[a.id]
                    rows.setdefault((i, a.target), []).append({(ai,) + p: x for p, x in row.items()})
                for a in ins:
                    ai = self._aidx[a.id]
                    rows.setdefault((a.source, k), []).append({p + (ai,): x for p, x in row.items()})
        for r in self._rels.get(d, []):
            rows.setdefault((r.source, r.target), []).append(self._vec(r))
        ideal: dict = {}
        for cell, keys in paths.items():
            i, j = cell
            if i in self.drop or j in self.drop:
                ideal[cell] = None
                continue
            e = Echelon()
            if self.drop:
                for p in keys:
                    if self._passes_drop(i, p):
                        e.add({p: 1})
            for r in rows.get(cell, ()):
                if e.rank == len(keys):
                    break
                e.add(r)
            ideal[cell] = e
        self.paths.append(paths)
        self.ideal.append(ideal)

    def dim(self, i, j, d) -> int:
        if d > self.max_degree:
            raise ValueError(f"degree {d} beyond computed bound {self.max_degree}")
        if self.vanish_from is not None and d > self.vanish_from:
            return 0
        keys = self.paths[d].get((i, j))
        if not keys:
            return 0
        e = self.ideal[d][(i, j)]
        return 0 if e is None else len(keys) - e.rank

    def dims(self) -> GradedDims:
        cells = {}
        for d, layer in enumerate(self.paths):
            for (i, j), keys in layer.items():
                e = self.ideal[d][(i, j)]
                n = 0 if e is None else len(keys) - e.rank
                if n:
                    cells[(i, j, d)] = n
        return GradedDims(self.max_degree, cells)

    def normal_form(self, c: PathCombo) -> dict:
        """Residue of ``c`` modulo the ideal as {path: coefficient}; empty iff c is in the ideal."""
        d = c.length
        if d > self.max_degree:
            raise ValueError(f"degree {d} beyond computed bound {self.max_degree}")
        if c.is_zero:
            return {}
        if self.vanish_from is not None and d >= self.vanish_from:
            return {}
        e = self.ideal[d].get((c.source, c.target))
        if e is None:
            return {}
        rem = e.remainder(self._vec(c))
        back = {}
        for p, _ in c.terms:
            back[self.key(p)] = p
        out = {}
        for k, x in rem.items():
            out[back.get(k) or self._path_from_key(c.source, k)] = x
        return out

    def _path_from_key(self, i, key) -> Path:
        verts = [i]
        for a in reversed(key):
            verts.append(self._arrows[a].target)
        return Path(tuple(self._arrows[a].id for a in key), tuple(verts))


def _default_degree(b: BoundQuiver, max_degree: Optional[int]) -> int:
    if max_degree is not None:
        return max_degree
    if b.loewy_length is not None:
        return b.loewy_length
    raise ValueError("no degree bound given and no Loewy length attached")


def quotient_dims(b: BoundQuiver, max_degree: Optional[int] = None, drop=()) -> GradedDims:
    """Graded dimensions of kQ/(relations, e_v for v in drop) up to ``max_degree``."""
    D = _default_degree(b, max_degree)
    eng = QuotientEngine(b.quiver, b.relations, D, drop)
    dims = eng.dims()
    if max_degree is None and dims.total(D):
        log.warning("quotient does not vanish at the default bound %d", D)
    return dims


def normal_form(b: BoundQuiver, c: PathCombo, max_degree: Optional[int] = None) -> dict:
    D = c.length if max_degree is None else max_degree
    if c.length > D:
        raise ValueError(f"degree {c.length} exceeds bound {D}")
    return QuotientEngine(b.quiver, b.relations, D).normal_form(c)


@dataclass
class OrthoReport:
    ok: bool
    cells: dict  # (i, j) -> dict(paths=, rho_rank=, theta_rank=, orthogonal=)

    def __bool__(self):
        return self.ok

    @property
    def passed(self) -> bool:
        return self.ok

    def failures(self) -> list:
        return [c for c, info in self.cells.items() if not info["complementary"]]


def quadratic_orthocheck(q: Quiver, rho: Iterable[PathCombo], theta: Iterable[PathCombo]) -> OrthoReport:
    """Per vertex pair, span(rho) must be the orthogonal complement of span(theta) in kQ_2.

    The pairing on kQ_2 is the arrow-wise dual pairing, i.e. paths form an
    orthonormal basis.
    """
    rho, theta = list(rho), list(theta)
    for r in rho + theta:
        if r.length != 2 and not r.is_zero:
            raise QuiverError(f"relation {r} is not quadratic")
    by_cell: dict = {}
    for side, rels in (("rho", rho), ("theta", theta)):
        for r in rels:
            if r.is_zero:
                continue
            by_cell.setdefault((r.source, r.target), {"rho": [], "theta": []})[side].append(
                {path_key_of(p): x for p, x in r.terms})
    cells = {}
    ok = True
    counts: dict = {}
    for p in paths_of_length(q, 2):
        counts[(p.source, p.target)] = counts.get((p.source, p.target), 0) + 1
    for cell, n in counts.items():
        groups = by_cell.get(cell, {"rho": [], "theta": []})
        er, et = Echelon(groups["rho"]), Echelon(groups["theta"])
        orth = all(sum(x * b.get(k, 0) for k, x in a.items()) == 0
                   for a in er.rows() for b in et.rows())
        good = orth and er.rank + et.rank == n
        cells[cell] = {"paths": n, "rho_rank": er.rank, "theta_rank": et.rank,
                       "orthogonal": orth, "complementary": good}
        ok = ok and good
    for cell in by_cell:
        if cell not in counts:
            ok = False
    return OrthoReport(ok, cells)


def path_key_of(p: Path) -> tuple:
    return tuple(label_key(a) for a in p.arrows)


@dataclass
class STQReport:
    """Outcome of checking the stable translation quiver conditions."""
    loewy: int
    violations: list  # (condition number, message)
    dims: GradedDims

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def conditions_failed(self) -> set:
        return {c for c, _ in self.violations}


def stable_translation_check(b: BoundQuiver, l: Optional[int] = None) -> STQReport:
    """Check conditions (1)-(4) of a stable translation quiver of Loewy length l+1.

    (1) nu permutes vertices; (2) every vertex has top degree exactly l (as
    source and as target) and nothing survives in degree l+1; (3) e_i A_l
    e_nu(i) is nonzero and e_j A_l e_nu(i) vanishes for j != i; (4) that
    socle cell is one-dimensional.
    """
    if b.nakayama is None:
        raise QuiverError("stable translation check needs a Nakayama permutation")
    if l is None:
        if b.loewy_length is None:
            raise ValueError("no Loewy length given")
        l = b.loewy_length - 1
    q = b.quiver
    nu = b.nakayama
    violations = []
    if set(nu) != set(q.vertices) or set(nu.values()) != set(q.vertices):
        violations.append((1, "nu is not a permutation of the vertices"))
    dims = QuotientEngine(q, b.relations, l + 1).dims()
    if dims.total(l + 1):
        violations.append((2, f"nonzero bound paths of length {l + 1}"))
    for v in q.vertices:
        if dims.top_degree_from(v) != l:
            violations.append((2, f"paths from {render(v)} top out in degree {dims.top_degree_from(v)}"))
        if dims.top_degree_to(v) != l:
            violations.append((2, f"paths to {render(v)} top out in degree {dims.top_degree_to(v)}"))
    for i in q.vertices:
        if i not in nu:
            continue
        src = nu[i]
        top = dims.get(src, i, l)
        if top < 1:
            violations.append((3, f"no bound path of length {l} from {render(src)} to {render(i)}"))
        for j in q.vertices:
            if j != i and dims.get(src, j, l):
                violations.append((3, f"bound path of length {l} from {render(src)} to {render(j)}"))
        if top > 1:
            violations.append((4, f"{top} independent maximal paths {render(src)} -> {render(i)}"))
    return STQReport(l + 1, violations, dims)
