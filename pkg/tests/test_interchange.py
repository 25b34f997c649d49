import json

import pytest
from hypothesis import given, settings, strategies as st

from mckaycone.constructions import cyclic_cover, t_algebra
from mckaycone.interchange import (DocumentError, decode_label, dumps, embedding_from_document,
                                   embedding_to_document, encode_label, export_dot, loads)
from mckaycone.mckay import AbelianMcKaySpec, abelian_bound_mckay
from mckaycone.quiver import (BoundQuiver, Connecting, Coord, Level, Leveled, Quiver, Returning,
                              identity_witness, quiver_equal_under)
from mckaycone.truncation import linear_embedding, cone_cover_pipeline
from mckaycone.constructions import linear_a

leaves = st.one_of(st.integers(-5, 20), st.text("abc", min_size=1, max_size=3))
labels = st.recursive(leaves, lambda inner: st.one_of(
    st.tuples(inner, inner), st.builds(Level, inner, st.integers(0, 4)),
    st.builds(Coord, st.integers(0, 3), inner), st.builds(Returning, inner),
    st.builds(Leveled, inner, st.integers(0, 4)), st.builds(Connecting, inner, st.integers(0, 4))),
    max_leaves=5)


@settings(max_examples=100, deadline=None)
@given(labels)
def test_label_roundtrip(x):
    assert decode_label(json.loads(json.dumps(encode_label(x)))) == x


SAMPLES = [
    lambda: abelian_bound_mckay(AbelianMcKaySpec((2, 2), ((1, 0), (0, 1)))),
    lambda: cyclic_cover(abelian_bound_mckay(AbelianMcKaySpec((3,), ((1,),))), 2, side="rho"),
    lambda: t_algebra(3, 3),
    lambda: BoundQuiver(Quiver((), ())),
]


@pytest.mark.parametrize("make", SAMPLES)
def test_document_roundtrip(make):
    b = make()
    text = dumps(b)
    b2 = loads(text)
    assert dumps(b2) == text
    assert quiver_equal_under(identity_witness(b.quiver), b.quiver, b2.quiver)
    assert b2.relations == b.relations
    assert b2.nakayama == b.nakayama and b2.translation == b.translation
    assert b2.abelian == b.abelian


def test_document_header_fields():
    doc = json.loads(dumps(abelian_bound_mckay(AbelianMcKaySpec((3,), ((1,), (2,))))))
    assert doc["abelian"] == {"orders": [3], "weights": [[1], [2]]}
    assert doc["side"] == "rho" and doc["loewy_length"] == 3
    assert all(set(r) == {"source", "target", "paths", "coefficients"} for r in doc["relations"])
    assert sorted(doc["relations"][0]["coefficients"]) == ["-1/1", "1/1"]
    ids = [v["id"] for v in doc["vertices"]]
    assert len(set(ids)) == len(ids)


def test_malformed_documents():
    with pytest.raises(DocumentError):
        loads("not json")
    with pytest.raises(DocumentError):
        loads(json.dumps({"vertices": [{"id": "1", "label": {"kind": "int", "value": 1}}],
                          "arrows": [{"id": "a", "source": "1", "target": "2", "label": {"kind": "str", "value": "a"}}]}))
    with pytest.raises(DocumentError):
        loads(json.dumps({"vertices": [{"id": "1", "label": {"kind": "int", "value": 1}},
                                       {"id": "1", "label": {"kind": "int", "value": 2}}], "arrows": []}))
    with pytest.raises(DocumentError):
        decode_label({"kind": "nope"})


def test_embedding_roundtrip():
    res = cone_cover_pipeline(linear_a(3), AbelianMcKaySpec((4,), ((1,),)), linear_embedding(3, 4))
    doc = json.loads(json.dumps(embedding_to_document(res.embedding)))
    w = embedding_from_document(doc)
    assert dict(w.vertex_map) == dict(res.embedding.vertex_map)
    assert dict(w.arrow_map) == dict(res.embedding.arrow_map)


def test_dot_empty_and_a2():
    assert export_dot(BoundQuiver(Quiver((), ()))).splitlines()[-1] == "digraph { }"
    dot = export_dot(t_algebra(2, 1))
    assert dot.count("->") == 1
    assert '"1";' in dot and '"2";' in dot


def test_dot_styles_and_stability():
    cov = cyclic_cover(abelian_bound_mckay(AbelianMcKaySpec((3,), ((1,),))), 2, side="rho")
    dot = export_dot(cov)
    assert dot == export_dot(cov)
    assert dot.count('kind="returning"') == 6
    assert dot.count("// relation:") == len(cov.relations)
    assert 'kind="connecting"' in export_dot(t_algebra(3, 2))
