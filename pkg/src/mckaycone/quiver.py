"""Finite quivers, paths, homogeneous relation combinations and bound quivers.

Vertex and arrow identifiers are structured labels and double as ids:

* vertices: ``str`` (plain name), ``int`` (residue), ``tuple`` of ints
  (residue tuple) or :class:`Level` ``(base, d)`` for cone/cover vertices;
* arrows: ``str`` (named arrow), :class:`Coord` (coordinate arrow of an
  abelian McKay quiver), :class:`Returning` (``beta_i``), :class:`Leveled`
  ``(alpha, t)`` and :class:`Connecting` ``(x, d)_1``.

Paths are written right-to-left: ``Path.arrows == (a_l, ..., a_1)`` means
``a_1`` is applied first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Hashable, Iterable, Mapping, Optional


class QuiverError(ValueError):
    pass


class CompositionError(QuiverError):
    pass


class InhomogeneousRelationError(QuiverError):
    pass


class UnknownArrowError(QuiverError):
    pass


@dataclass(frozen=True)
class Level:
    """Vertex ``(base, d)`` of a cone or cyclic cover."""
    base: Any
    level: int


@dataclass(frozen=True)
class Coord:
    """Arrow ``alpha_j(i): i -> i + w_j`` of an abelian McKay quiver."""
    coord: int
    source: Any


@dataclass(frozen=True)
class Returning:
    """Returning arrow ``beta_i: i -> nu(i)``."""
    vertex: Any


@dataclass(frozen=True)
class Leveled:
    """Arrow ``(alpha, t)`` living on level ``t``."""
    arrow: Any
    level: int


@dataclass(frozen=True)
class Connecting:
    """Cone arrow ``(x, d)_1: (x, d) -> (tau x, d - 1)``."""
    vertex: Any
    level: int


def label_key(x):
    """Total order on structured labels (used for canonical output and pivots)."""
    if isinstance(x, Level):
        return (3, label_key(x.base), x.level)
    if isinstance(x, Coord):
        return (4, x.coord, label_key(x.source))
    if isinstance(x, Returning):
        return (5, label_key(x.vertex))
    if isinstance(x, Leveled):
        return (6, label_key(x.arrow), x.level)
    if isinstance(x, Connecting):
        return (7, label_key(x.vertex), x.level)
    if isinstance(x, bool):
        raise QuiverError(f"unsupported label {x!r}")
    if isinstance(x, int):
        return (1, x)
    if isinstance(x, str):
        return (0, x)
    if isinstance(x, tuple):
        return (2, tuple(label_key(y) for y in x))
    raise QuiverError(f"unsupported label {x!r}")


def render(x) -> str:
    """Human readable id string of a label."""
    if isinstance(x, Level):
        return f"({render(x.base)}|{x.level})"
    if isinstance(x, Coord):
        return f"alpha{x.coord}@{render(x.source)}"
    if isinstance(x, Returning):
        return f"beta@{render(x.vertex)}"
    if isinstance(x, Leveled):
        return f"({render(x.arrow)}|{x.level})"
    if isinstance(x, Connecting):
        return f"({render(x.vertex)}|{x.level})_1"
    if isinstance(x, tuple):
        return "(" + ",".join(render(y) for y in x) + ")"
    return str(x)


@dataclass(frozen=True)
class Arrow:
    id: Hashable
    source: Hashable
    target: Hashable


@dataclass(frozen=True)
class Path:
    """A path; ``arrows`` in written order, ``vertices`` from source to target."""
    arrows: tuple
    vertices: tuple

    @property
    def source(self):
        return self.vertices[0]

    @property
    def target(self):
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.arrows)

    def __str__(self):
        if not self.arrows:
            return f"e[{render(self.source)}]"
        return "*".join(render(a) for a in self.arrows)


def trivial_path(v) -> Path:
    return Path((), (v,))


def compose(p: Path, q: Path) -> Path:
    """The product ``p q``: first ``q``, then ``p``."""
    if q.target != p.source:
        raise CompositionError(f"cannot compose {p} after {q}: {render(q.target)} != {render(p.source)}")
    return Path(p.arrows + q.arrows, q.vertices + p.vertices[1:])


def path_key(p: Path):
    return tuple(label_key(a) for a in p.arrows)


def _coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


@dataclass(frozen=True)
class PathCombo:
    """Rational combination of parallel paths of one length.

    ``terms`` is a canonical tuple of ``(path, coefficient)`` with no zeros.
    """
    source: Hashable
    target: Hashable
    length: int
    terms: tuple

    @classmethod
    def build(cls, terms: Iterable, source=None, target=None) -> "PathCombo":
        """Collect ``(path, coefficient)`` pairs; raises on mixed endpoints or lengths."""
        acc: dict[Path, Fraction] = {}
        length = None
        for p, c in terms:
            if source is None:
                source, target = p.source, p.target
            if p.source != source or p.target != target:
                raise InhomogeneousRelationError(
                    f"path {p} is not parallel to {render(source)} -> {render(target)}")
            if length is None:
                length = p.length
            elif p.length != length:
                raise InhomogeneousRelationError(f"mixed path lengths {length} and {p.length}")
            acc[p] = acc.get(p, Fraction(0)) + _coeff(c)
        if source is None:
            raise QuiverError("an empty combination needs explicit endpoints")
        items = sorted(((p, c) for p, c in acc.items() if c != 0), key=lambda pc: path_key(pc[0]))
        return cls(source, target, length if length is not None else 0, tuple(items))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def paths(self) -> list[Path]:
        return [p for p, _ in self.terms]

    def as_dict(self) -> dict[Path, Fraction]:
        return dict(self.terms)

    def scaled(self, c) -> "PathCombo":
        c = _coeff(c)
        return PathCombo.build(((p, c * x) for p, x in self.terms), self.source, self.target)

    def monic(self) -> "PathCombo":
        """Scale so that the first (smallest) path has coefficient 1."""
        if not self.terms:
            return self
        return self.scaled(1 / self.terms[0][1])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for p, c in self.terms:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            body = str(p) if mag == 1 else f"{mag}*{p}"
            parts.append(f"{sign} {body}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


@dataclass(frozen=True)
class Quiver:
    """Finite multigraph; loops and parallel arrows allowed."""
    vertices: tuple
    arrows: tuple  # of Arrow
    _by_id: dict = field(init=False, repr=False, compare=False)
    _out: dict = field(init=False, repr=False, compare=False)
    _in: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices), key=label_key))
        if len(verts) != len(self.vertices):
            raise QuiverError("duplicate vertex ids")
        arrows = tuple(sorted(self.arrows, key=lambda a: label_key(a.id)))
        by_id = {}
        out = {v: [] for v in verts}
        inc = {v: [] for v in verts}
        for a in arrows:
            if a.id in by_id:
                raise QuiverError(f"duplicate arrow id {render(a.id)}")
            if a.source not in out or a.target not in out:
                raise QuiverError(f"arrow {render(a.id)} has an endpoint outside the quiver")
            by_id[a.id] = a
            out[a.source].append(a)
            inc[a.target].append(a)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arrows", arrows)
        object.__setattr__(self, "_by_id", by_id)
        object.__setattr__(self, "_out", {v: tuple(x) for v, x in out.items()})
        object.__setattr__(self, "_in", {v: tuple(x) for v, x in inc.items()})

    @classmethod
    def from_edges(cls, vertices, edges) -> "Quiver":
        """``edges`` is an iterable of ``(id, source, target)``."""
        return cls(tuple(vertices), tuple(Arrow(*e) for e in edges))

    def has_vertex(self, v) -> bool:
        return v in self._out

    def has_arrow(self, a) -> bool:
        return a in self._by_id

    def arrow(self, a) -> Arrow:
        try:
            return self._by_id[a]
        except KeyError:
            raise UnknownArrowError(f"unknown arrow {render(a)}") from None

    def source(self, a):
        return self.arrow(a).source

    def target(self, a):
        return self.arrow(a).target

    def out_arrows(self, v) -> tuple:
        return self._out[v]

    def in_arrows(self, v) -> tuple:
        return self._in[v]

    def arrows_between(self, i, j) -> list:
        return [a for a in self._out[i] if a.target == j]

    def path(self, *arrow_ids) -> Path:
        """Path from arrows in written order (last applied first)."""
        if not arrow_ids:
            raise QuiverError("use trivial_path for length-0 paths")
        p = None
        for a in reversed(arrow_ids):
            arr = self.arrow(a)
            step = Path((a,), (arr.source, arr.target))
            p = step if p is None else compose(step, p)
        return p

    def combo(self, *terms) -> PathCombo:
        """``combo((1, "b", "a"), (-1, "d", "c"))`` builds ``ba - dc``."""
        return PathCombo.build((self.path(*t[1:]), t[0]) for t in terms)

    def contains_path(self, p: Path) -> bool:
        if not p.arrows:
            return self.has_vertex(p.source)
        for k, a in enumerate(reversed(p.arrows)):
            if a not in self._by_id:
                return False
            arr = self._by_id[a]
            if arr.source != p.vertices[k] or arr.target != p.vertices[k + 1]:
                return False
        return True

    def __len__(self):
        return len(self.vertices)


@dataclass(frozen=True)
class RelationReport:
    source: Hashable
    target: Hashable
    length: int
    num_terms: int


def validate_relation(q: Quiver, c: PathCombo) -> RelationReport:
    """Check parallelism, homogeneity and arrow existence of ``c`` in ``q``."""
    for p, _ in c.terms:
        for a in p.arrows:
            if not q.has_arrow(a):
                raise UnknownArrowError(f"relation uses unknown arrow {render(a)}")
        if not q.contains_path(p):
            raise CompositionError(f"{p} is not a path of the quiver")
        if p.source != c.source or p.target != c.target:
            raise InhomogeneousRelationError(f"path {p} not parallel to its relation")
        if p.length != c.length:
            raise InhomogeneousRelationError(f"path {p} has length {p.length}, expected {c.length}")
    if not (q.has_vertex(c.source) and q.has_vertex(c.target)):
        raise QuiverError("relation endpoints outside quiver")
    return RelationReport(c.source, c.target, c.length, len(c.terms))


@dataclass(frozen=True)
class QuiverIsoWitness:
    vertex_map: Mapping
    arrow_map: Mapping


def quiver_equal_under(w: QuiverIsoWitness, A: Quiver, B: Quiver) -> bool:
    """True iff ``w`` is a bijective quiver morphism from ``A`` onto ``B``."""
    vm, am = w.vertex_map, w.arrow_map
    if set(vm) != set(A.vertices) or set(am) != {a.id for a in A.arrows}:
        return False
    if len(set(vm.values())) != len(vm) or set(vm.values()) != set(B.vertices):
        return False
    if len(set(am.values())) != len(am) or set(am.values()) != {a.id for a in B.arrows}:
        return False
    for a in A.arrows:
        b = B.arrow(am[a.id])
        if b.source != vm[a.source] or b.target != vm[a.target]:
            return False
    return True


def match_arrows(A: Quiver, B: Quiver, vertex_map: Mapping) -> Optional[QuiverIsoWitness]:
    """Extend a vertex bijection to a witness by pairing parallel arrows in order.

    Returns ``None`` when arrow multiplicities disagree.
    """
    am = {}
    for i in A.vertices:
        for j in dict.fromkeys(a.target for a in A.out_arrows(i)):
            src = A.arrows_between(i, j)
            if i not in vertex_map or j not in vertex_map:
                return None
            if not (B.has_vertex(vertex_map[i]) and B.has_vertex(vertex_map[j])):
                return None
            dst = B.arrows_between(vertex_map[i], vertex_map[j])
            if len(src) != len(dst):
                return None
            for a, b in zip(src, dst):
                am[a.id] = b.id
    w = QuiverIsoWitness(dict(vertex_map), am)
    return w if quiver_equal_under(w, A, B) else None


def identity_witness(q: Quiver) -> QuiverIsoWitness:
    return QuiverIsoWitness({v: v for v in q.vertices}, {a.id: a.id for a in q.arrows})


@dataclass(frozen=True)
class BoundQuiver:
    """A quiver with homogeneous relations and optional translation data.

    ``side`` records whether ``relations`` is the commutative-type (``"rho"``)
    or exterior-type (``"theta"``) member of a quadratic dual pair; when both
    are known the other one sits in ``dual_relations``. ``loewy_length``
    always refers to the self-injective (theta) side.

    ``translation`` is a partial vertex map (defined on non-projective
    vertices); ``translation_arrows`` sends an arrow ``x -> y`` between
    non-projective vertices to an arrow ``tau x -> tau y``.
    """
    quiver: Quiver
    relations: tuple = ()
    nakayama: Optional[Mapping] = None
    nakayama_arrows: Optional[Mapping] = None
    translation: Optional[Mapping] = None
    translation_arrows: Optional[Mapping] = None
    loewy_length: Optional[int] = None
    side: Optional[str] = None
    dual_relations: Optional[tuple] = None
    abelian: Any = None

    def __post_init__(self):
        object.__setattr__(self, "relations", tuple(self.relations))
        if self.dual_relations is not None:
            object.__setattr__(self, "dual_relations", tuple(self.dual_relations))
        q = self.quiver
        for r in self.relations + (self.dual_relations or ()):
            validate_relation(q, r)
        if self.side not in (None, "rho", "theta"):
            raise QuiverError(f"unknown side {self.side!r}")
        if self.nakayama is not None:
            nu = self.nakayama
            if set(nu) != set(q.vertices) or set(nu.values()) != set(q.vertices):
                raise QuiverError("Nakayama permutation is not a bijection on vertices")
        if self.nakayama_arrows is not None:
            if self.nakayama is None:
                raise QuiverError("arrow Nakayama map needs a vertex permutation")
            nu = self.nakayama
            for a in q.arrows:
                if a.id not in self.nakayama_arrows:
                    raise QuiverError(f"Nakayama map undefined on arrow {render(a.id)}")
                b = q.arrow(self.nakayama_arrows[a.id])
                if b.source != nu[a.source] or b.target != nu[a.target]:
                    raise QuiverError(f"Nakayama map incompatible on arrow {render(a.id)}")
        if self.translation is not None:
            tau = self.translation
            for x, y in tau.items():
                if not (q.has_vertex(x) and q.has_vertex(y)):
                    raise QuiverError("translation refers to unknown vertices")
            if len(set(tau.values())) != len(tau):
                raise QuiverError("translation is not injective")
        if self.translation_arrows is not None:
            tau = self.translation or {}
            for a, b in self.translation_arrows.items():
                arr, img = q.arrow(a), q.arrow(b)
                if tau.get(arr.source) != img.source or tau.get(arr.target) != img.target:
                    raise QuiverError(f"translation incompatible on arrow {render(a)}")

    def with_(self, **changes) -> "BoundQuiver":
        from dataclasses import replace
        return replace(self, **changes)

    def dual(self) -> "BoundQuiver":
        """Swap ``relations`` and ``dual_relations``."""
        if self.dual_relations is None:
            raise QuiverError("no dual relation set attached")
        other = {"rho": "theta", "theta": "rho", None: None}[self.side]
        return self.with_(relations=self.dual_relations, dual_relations=self.relations, side=other)

    def on_side(self, side: Optional[str]) -> "BoundQuiver":
        """The bound quiver whose ``relations`` is the requested side."""
        if side is None or side == self.side:
            return self
        if self.side is None:
            return self.with_(side=side)
        return self.dual()

    def tau_inverse(self) -> dict:
        return {y: x for x, y in (self.translation or {}).items()}
