"""Character tables of finite groups and tensor product decompositions."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from importlib import resources
from math import gcd
from typing import Any, Optional, Sequence

from .cyclotomic import (CyclotomicNumber, NotRationalError, format_cyclotomic,
                         hermitian_sum, parse_cyclotomic, root_of_unity)
from .quiver import Level


class TableInconsistencyError(ValueError):
    pass


@dataclass(frozen=True)
class ConjugacyClass:
    name: str
    size: int


@dataclass(frozen=True)
class Irreducible:
    name: str
    values: tuple  # CyclotomicNumber per class
    label: Any = None  # structured vertex label (residue tuple, Level, ...)

    @property
    def key(self):
        return self.name if self.label is None else self.label


@dataclass(frozen=True)
class RepCharacter:
    """Character of a representation V, with optional determinant and last-coordinate data.

    ``last`` holds the character of the one-dimensional summand added by
    :func:`sl_embed`; :func:`product_with_cyclic` scales exactly that summand.
    """
    values: tuple
    det_values: Optional[tuple] = None
    last: Optional[tuple] = None

    @property
    def dim(self) -> int:
        return int(self.values[0].as_rational())


@dataclass(frozen=True)
class CharacterTable:
    group_order: int
    classes: tuple
    irreducibles: tuple
    det_values: Optional[tuple] = None
    abelian_orders: Optional[tuple] = None
    _order: int = field(default=1, init=False, repr=False, compare=False)

    def __post_init__(self):
        n = 1
        for irr in self.irreducibles:
            if len(irr.values) != len(self.classes):
                raise TableInconsistencyError(f"character {irr.name} has wrong length")
            for v in irr.values:
                n = n * v.order // gcd(n, v.order)
        object.__setattr__(self, "_order", n)

    def index(self, key) -> int:
        for n, irr in enumerate(self.irreducibles):
            if irr.key == key or irr.name == key:
                return n
        raise KeyError(key)

    @property
    def labels(self) -> list:
        return [irr.key for irr in self.irreducibles]

    def check(self) -> None:
        """Raise :class:`TableInconsistencyError` unless every table invariant holds."""
        if sum(c.size for c in self.classes) != self.group_order:
            raise TableInconsistencyError("class sizes do not sum to the group order")
        chars = [RepCharacter(irr.values) for irr in self.irreducibles]
        # both Gram matrices are Hermitian, so the upper triangle suffices
        for a, b in itertools.combinations_with_replacement(range(len(chars)), 2):
            ip = inner_product(self, chars[a], chars[b])
            if ip != (1 if a == b else 0):
                raise TableInconsistencyError(
                    f"<{self.irreducibles[a].name}, {self.irreducibles[b].name}> = {ip}")
        for c1, c2 in itertools.combinations_with_replacement(range(len(self.classes)), 2):
            s = hermitian_sum((1 for _ in self.irreducibles), (irr.values[c1] for irr in self.irreducibles),
                              (irr.values[c2] for irr in self.irreducibles))
            expect = Fraction(self.group_order, self.classes[c1].size) if c1 == c2 else 0
            if s != expect:
                raise TableInconsistencyError(f"column orthogonality fails at classes {c1}, {c2}")
        dims = [irr.values[0].as_rational() for irr in self.irreducibles]
        if sum(d * d for d in dims) != self.group_order:
            raise TableInconsistencyError("sum of squared dimensions differs from the group order")
        if self.det_values is not None:
            for v in self.det_values:
                if not is_root_of_unity(v):
                    raise TableInconsistencyError(f"determinant value {v} is not a root of unity")


def is_root_of_unity(x: CyclotomicNumber) -> bool:
    n = x.order
    # roots of unity in Q(zeta_n) have order dividing lcm(2, n)
    return x ** (2 * n) == 1


def _sum(xs) -> CyclotomicNumber:
    return reduce(lambda a, b: a + b, xs, CyclotomicNumber.rational(0))


def inner_product(t: CharacterTable, phi: RepCharacter, psi: RepCharacter) -> Fraction:
    """(1/|G|) sum over classes of size * phi * conj(psi), as an exact rational."""
    if len(phi.values) != len(t.classes) or len(psi.values) != len(t.classes):
        raise TableInconsistencyError("characters do not match the table")
    s = hermitian_sum((c.size for c in t.classes), phi.values, psi.values)
    try:
        return s.as_rational() / t.group_order
    except NotRationalError:
        raise TableInconsistencyError(f"inner product {s} is not rational") from None


def tensor_decompose(t: CharacterTable, chi_v: RepCharacter, i: int) -> tuple:
    """Multiplicities a_{i,j} of S_j in V (x) S_i."""
    if not 0 <= i < len(t.irreducibles):
        raise IndexError(i)
    prodchar = RepCharacter(tuple(a * b for a, b in zip(chi_v.values, t.irreducibles[i].values)))
    out = []
    for irr in t.irreducibles:
        a = inner_product(t, prodchar, RepCharacter(irr.values))
        if a.denominator != 1 or a < 0:
            raise TableInconsistencyError(f"multiplicity {a} of {irr.name} is not a non-negative integer")
        out.append(int(a))
    dims = [int(irr.values[0].as_rational()) for irr in t.irreducibles]
    if sum(a * d for a, d in zip(out, dims)) != chi_v.dim * dims[i]:
        raise TableInconsistencyError("tensor decomposition does not preserve dimension")
    return tuple(out)


def abelian_table(orders: Sequence[int]) -> CharacterTable:
    """Table of Z_{r_1} x ... x Z_{r_t}; irreducibles labelled by residue tuples."""
    orders = tuple(int(r) for r in orders)
    if any(r < 1 for r in orders):
        raise ValueError("orders must be positive")
    n = reduce(lambda a, b: a * b // gcd(a, b), orders, 1)
    elems = list(itertools.product(*(range(r) for r in orders)))
    classes = tuple(ConjugacyClass(_tuple_name(g), 1) for g in elems)
    irrs = []
    for a in elems:
        vals = tuple(root_of_unity(n, sum(ak * gk * (n // r) for ak, gk, r in zip(a, g, orders)))
                     for g in elems)
        irrs.append(Irreducible(_tuple_name(a), vals, a))
    return CharacterTable(len(elems), classes, tuple(irrs), None, orders)


def _tuple_name(g) -> str:
    return "(" + ",".join(str(x) for x in g) + ")"


def weights_character(t: CharacterTable, weights) -> RepCharacter:
    """Character of the diagonal representation with the given weights, with determinant."""
    if t.abelian_orders is None:
        raise ValueError("weights need an abelian table")
    orders = t.abelian_orders
    ws = [tuple(int(x) % r for x, r in zip(_as_tuple(w), orders)) for w in weights]
    for w in ws:
        if len(w) != len(orders):
            raise ValueError(f"weight {w} has wrong arity")
    rows = {irr.label: irr.values for irr in t.irreducibles}
    vals = tuple(_sum(rows[w][c] for w in ws) if ws else CyclotomicNumber.rational(0)
                 for c in range(len(t.classes)))
    total = tuple(sum(w[k] for w in ws) % orders[k] for k in range(len(orders)))
    return RepCharacter(vals, tuple(rows[total]))


def _as_tuple(w):
    return tuple(w) if isinstance(w, (tuple, list)) else (w,)


def sl_embed(t: CharacterTable, chi: RepCharacter) -> RepCharacter:
    """Character of V' = V + (det V)^{-1}, i.e. g -> diag(g, det(g)^{-1})."""
    det = chi.det_values if chi.det_values is not None else t.det_values
    if det is None:
        raise ValueError("SL embedding needs determinant values")
    inv = tuple(d.conj() for d in det)  # det values are roots of unity
    vals = tuple(a + b for a, b in zip(chi.values, inv))
    one = CyclotomicNumber.rational(1)
    return RepCharacter(vals, tuple(one for _ in det), inv)


def product_with_cyclic(t: CharacterTable, chi: RepCharacter, m: int):
    """Table of G x C_m and the character of V' with C_m scaling the last coordinate.

    Classes are pairs (c, k); irreducibles chi_i (x) lambda_j carry the label
    ``Level(label_i, j)``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if chi.last is None:
        raise ValueError("product with a cyclic group needs an SL-embedded character")
    if m == 1:
        return t, chi
    xi = [root_of_unity(m, k) for k in range(m)]
    classes = tuple(ConjugacyClass(f"{c.name}|{k}", c.size) for c in t.classes for k in range(m))
    irrs = []
    for irr in t.irreducibles:
        for j in range(m):
            vals = tuple(v * xi[(j * k) % m] for v in irr.values for k in range(m))
            irrs.append(Irreducible(f"{irr.name}|{j}", vals, Level(irr.key, j)))
    base = [a - b for a, b in zip(chi.values, chi.last)]
    vals = tuple(base[c] + chi.last[c] * xi[k] for c in range(len(t.classes)) for k in range(m))
    det_base = chi.det_values or tuple(CyclotomicNumber.rational(1) for _ in t.classes)
    det = tuple(det_base[c] * xi[k] for c in range(len(t.classes)) for k in range(m))
    last = tuple(chi.last[c] * xi[k] for c in range(len(t.classes)) for k in range(m))
    orders = t.abelian_orders + (m,) if t.abelian_orders is not None else None
    table = CharacterTable(t.group_order * m, classes, tuple(irrs), det, orders)
    return table, RepCharacter(vals, det, last)


# serialization

def table_to_json(t: CharacterTable, rep: Optional[RepCharacter] = None) -> dict:
    doc = {
        "group_order": t.group_order,
        "classes": [{"name": c.name, "size": c.size} for c in t.classes],
        "irreducibles": [{"name": irr.name, "values": [format_cyclotomic(v) for v in irr.values]}
                         for irr in t.irreducibles],
    }
    det = rep.det_values if rep is not None and rep.det_values is not None else t.det_values
    if det is not None:
        doc["det_values"] = [format_cyclotomic(v) for v in det]
    if rep is not None:
        doc["rep_character"] = [format_cyclotomic(v) for v in rep.values]
    if t.abelian_orders is not None:
        doc["abelian_orders"] = list(t.abelian_orders)
    return doc


def table_from_json(doc: dict):
    """Returns ``(table, rep_character or None)``."""
    classes = tuple(ConjugacyClass(c["name"], int(c["size"])) for c in doc["classes"])
    orders = tuple(doc["abelian_orders"]) if doc.get("abelian_orders") else None
    irrs = []
    for irr in doc["irreducibles"]:
        vals = tuple(parse_cyclotomic(str(v)) for v in irr["values"])
        label = None
        if orders is not None:
            label = tuple(int(x) for x in irr["name"].strip("()").split(","))
        irrs.append(Irreducible(irr["name"], vals, label))
    det = tuple(parse_cyclotomic(str(v)) for v in doc["det_values"]) if doc.get("det_values") else None
    table = CharacterTable(int(doc["group_order"]), classes, tuple(irrs), det, orders)
    rep = None
    if doc.get("rep_character"):
        rep = RepCharacter(tuple(parse_cyclotomic(str(v)) for v in doc["rep_character"]), det)
    return table, rep


FIXTURES = ("s3", "z2", "z3", "z2xz2")


def load_fixture(name: str):
    """Shipped tables: S_3 in its 2-dimensional representation and small abelian groups."""
    text = resources.files("mckaycone").joinpath("data", f"{name}.json").read_text()
    return table_from_json(json.loads(text))
