"""JSON interchange documents for bound quivers and embeddings, and DOT export."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .mckay import AbelianMcKaySpec
from .quiver import (Arrow, BoundQuiver, Connecting, Coord, Level, Leveled, PathCombo, Quiver,
                     Returning, label_key, render, trivial_path)

FORMAT_VERSION = 1


class DocumentError(ValueError):
    pass


def encode_label(x):
    if isinstance(x, Level):
        return {"kind": "level", "base": encode_label(x.base), "level": x.level}
    if isinstance(x, Coord):
        return {"kind": "coord", "coord": x.coord, "source": encode_label(x.source)}
    if isinstance(x, Returning):
        return {"kind": "returning", "vertex": encode_label(x.vertex)}
    if isinstance(x, Leveled):
        return {"kind": "leveled", "arrow": encode_label(x.arrow), "level": x.level}
    if isinstance(x, Connecting):
        return {"kind": "connecting", "vertex": encode_label(x.vertex), "level": x.level}
    if isinstance(x, bool):
        raise DocumentError(f"unsupported label {x!r}")
    if isinstance(x, int):
        return {"kind": "int", "value": x}
    if isinstance(x, str):
        return {"kind": "str", "value": x}
    if isinstance(x, tuple):
        return {"kind": "tuple", "items": [encode_label(y) for y in x]}
    raise DocumentError(f"unsupported label {x!r}")


def decode_label(d):
    try:
        kind = d["kind"]
        if kind == "level":
            return Level(decode_label(d["base"]), int(d["level"]))
        if kind == "coord":
            return Coord(int(d["coord"]), decode_label(d["source"]))
        if kind == "returning":
            return Returning(decode_label(d["vertex"]))
        if kind == "leveled":
            return Leveled(decode_label(d["arrow"]), int(d["level"]))
        if kind == "connecting":
            return Connecting(decode_label(d["vertex"]), int(d["level"]))
        if kind == "int":
            return int(d["value"])
        if kind == "str":
            return str(d["value"])
        if kind == "tuple":
            return tuple(decode_label(y) for y in d["items"])
    except (KeyError, TypeError) as e:
        raise DocumentError(f"malformed label {d!r}") from e
    raise DocumentError(f"unknown label kind {kind!r}")


def _fraction_str(c: Fraction) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def _ids(items, what):
    out = {}
    for x in items:
        r = render(x)
        if r in out and out[r] != x:
            raise DocumentError(f"two {what} render to the same id {r!r}")
        out[r] = x
    return {x: r for r, x in out.items()}


def _relations_doc(rels, arrow_ids, vertex_ids):
    out = []
    for r in rels:
        terms = sorted(r.terms, key=lambda t: tuple(label_key(a) for a in t[0].arrows))
        out.append({"source": vertex_ids[r.source], "target": vertex_ids[r.target],
                    "paths": [[arrow_ids[a] for a in p.arrows] for p, _ in terms],
                    "coefficients": [_fraction_str(c) for _, c in terms]})
    return out


def to_document(b: BoundQuiver) -> dict:
    """Canonical dictionary form; vertices and arrows sorted by label order."""
    q = b.quiver
    vid = _ids(q.vertices, "vertices")
    aid = _ids([a.id for a in q.arrows], "arrows")
    doc = {
        "format": FORMAT_VERSION,
        "vertices": [{"id": vid[v], "label": encode_label(v)} for v in q.vertices],
        "arrows": [{"id": aid[a.id], "source": vid[a.source], "target": vid[a.target],
                    "label": encode_label(a.id)} for a in q.arrows],
        "relations": _relations_doc(b.relations, aid, vid),
        "side": b.side,
        "loewy_length": b.loewy_length,
    }
    if b.dual_relations is not None:
        doc["dual_relations"] = _relations_doc(b.dual_relations, aid, vid)
    if b.nakayama is not None:
        doc["nakayama"] = {
            "vertices": {vid[x]: vid[y] for x, y in sorted(b.nakayama.items(), key=lambda t: label_key(t[0]))},
            "arrows": None if b.nakayama_arrows is None else
            {aid[x]: aid[y] for x, y in sorted(b.nakayama_arrows.items(), key=lambda t: label_key(t[0]))},
        }
    if b.translation is not None:
        doc["translation"] = {
            "vertices": {vid[x]: vid[y] for x, y in sorted(b.translation.items(), key=lambda t: label_key(t[0]))},
            "arrows": None if b.translation_arrows is None else
            {aid[x]: aid[y] for x, y in sorted(b.translation_arrows.items(), key=lambda t: label_key(t[0]))},
        }
    if b.abelian is not None:
        doc["abelian"] = b.abelian.to_json()
    return doc


def dumps(b: BoundQuiver) -> str:
    return json.dumps(to_document(b), indent=1) + "\n"


def _lookup(table, key, what):
    if key not in table:
        raise DocumentError(f"unknown {what} id {key!r}")
    return table[key]


def _parse_relations(items, q: Quiver, vmap, amap):
    out = []
    for r in items:
        src, tgt = _lookup(vmap, r["source"], "vertex"), _lookup(vmap, r["target"], "vertex")
        if len(r["paths"]) != len(r["coefficients"]):
            raise DocumentError("relation paths and coefficients differ in length")
        terms = []
        for ids, c in zip(r["paths"], r["coefficients"]):
            arrows = [_lookup(amap, a, "arrow") for a in ids]
            p = q.path(*arrows) if arrows else trivial_path(src)
            terms.append((p, Fraction(c)))
        out.append(PathCombo.build(terms, src, tgt))
    return tuple(out)


def from_document(doc: dict) -> BoundQuiver:
    try:
        vmap = {}
        for v in doc["vertices"]:
            if v["id"] in vmap:
                raise DocumentError(f"duplicate vertex id {v['id']!r}")
            vmap[v["id"]] = decode_label(v["label"])
        amap, arrows = {}, []
        for a in doc["arrows"]:
            if a["id"] in amap:
                raise DocumentError(f"duplicate arrow id {a['id']!r}")
            lab = decode_label(a["label"])
            amap[a["id"]] = lab
            arrows.append(Arrow(lab, _lookup(vmap, a["source"], "vertex"), _lookup(vmap, a["target"], "vertex")))
        q = Quiver(tuple(vmap.values()), tuple(arrows))
        rels = _parse_relations(doc.get("relations", ()), q, vmap, amap)
        dual = doc.get("dual_relations")
        dual = None if dual is None else _parse_relations(dual, q, vmap, amap)

        def pair(key):
            block = doc.get(key)
            if block is None:
                return None, None
            vs = {_lookup(vmap, x, "vertex"): _lookup(vmap, y, "vertex") for x, y in block["vertices"].items()}
            ar = block.get("arrows")
            ar = None if ar is None else {_lookup(amap, x, "arrow"): _lookup(amap, y, "arrow") for x, y in ar.items()}
            return vs, ar

        nu, nu_a = pair("nakayama")
        tau, tau_a = pair("translation")
        ab = doc.get("abelian")
        return BoundQuiver(q, rels, nu, nu_a, tau, tau_a, doc.get("loewy_length"), doc.get("side"),
                           dual, None if ab is None else AbelianMcKaySpec.from_json(ab))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, DocumentError):
            raise
        raise DocumentError(f"malformed quiver document: {e}") from e


def loads(text: str) -> BoundQuiver:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"not a JSON document: {e}") from e
    return from_document(doc)


def embedding_to_document(w) -> dict:
    return {
        "vertex_map": [[encode_label(x), encode_label(y)]
                       for x, y in sorted(w.vertex_map.items(), key=lambda t: label_key(t[0]))],
        "arrow_map": [[encode_label(x), encode_label(y)]
                      for x, y in sorted(w.arrow_map.items(), key=lambda t: label_key(t[0]))],
    }


def embedding_from_document(doc: dict):
    from .truncation import QuiverEmbedding
    return QuiverEmbedding({decode_label(x): decode_label(y) for x, y in doc["vertex_map"]},
                           {decode_label(x): decode_label(y) for x, y in doc["arrow_map"]})


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _arrow_style(a) -> str:
    inner = a.arrow if isinstance(a, Leveled) else a
    if isinstance(inner, Returning):
        return ', style=dashed, color=blue, kind="returning"'
    if isinstance(inner, Connecting):
        return ', style=dotted, color=red, kind="connecting"'
    return ""


def export_dot(b: BoundQuiver, name: Optional[str] = None) -> str:
    """Deterministic DOT text; relations are written as comments."""
    q = b.quiver
    lines = [f"// bound quiver: {len(q.vertices)} vertices, {len(q.arrows)} arrows, "
             f"{len(b.relations)} relations"]
    head = "digraph" + (f" {_dot_quote(name)}" if name else "")
    if not q.vertices:
        lines.append(head + " { }")
        return "\n".join(lines) + "\n"
    lines.append(head + " {")
    for v in q.vertices:
        lines.append(f"  {_dot_quote(render(v))};")
    for a in q.arrows:
        lines.append(f"  {_dot_quote(render(a.source))} -> {_dot_quote(render(a.target))}"
                     f" [label={_dot_quote(render(a.id))}{_arrow_style(a.id)}];")
    for r in b.relations:
        lines.append(f"  // relation: {r}")
    lines.append("}")
    return "\n".join(lines) + "\n"
