"""Parsing and serializing families, trees, and codes."""

import json

import pytest

from sepfam import Bipartition, BipartitionFamily, LabeledGraph
from sepfam.documents import (
    bipartition_blocks,
    code_to_text,
    edges_to_text,
    family_from_compact,
    family_from_doc,
    family_from_text,
    family_to_compact,
    family_to_doc,
    graph_from_edge_text,
)


def test_doc_roundtrip(ex):
    doc = family_to_doc(ex.fq)
    assert doc["n"] == 4
    assert [[1, 2, 3], [4]] in doc["bipartitions"]
    parsed = family_from_doc(doc)
    assert parsed.family == ex.fq
    assert not parsed.relabeled


def test_compact_roundtrip(ex):
    text = family_to_compact(ex.fq)
    assert text == "1,2,3|4;1,2|3,4;1|2,3,4"
    assert family_from_compact(text).family == ex.fq


def test_bipartition_blocks(ex):
    assert bipartition_blocks(ex.q3) == [[1, 2, 3], [4]]
    assert bipartition_blocks(Bipartition(3)) == [[1, 2, 3]]


def test_family_from_text_detects_format(ex):
    as_json = json.dumps(family_to_doc(ex.fp))
    assert family_from_text(as_json).family == ex.fp
    assert family_from_text(family_to_compact(ex.fp)).family == ex.fp


def test_label_normalization():
    parsed = family_from_compact("3|7,10;3,7|10")
    assert parsed.relabeled
    assert parsed.label_map == {3: 1, 7: 2, 10: 3}
    want = BipartitionFamily(
        3,
        (
            Bipartition.from_blocks(3, [[1], [2, 3]]),
            Bipartition.from_blocks(3, [[1, 2], [3]]),
        ),
    )
    assert parsed.family == want


def test_duplicates_dropped_silently():
    parsed = family_from_compact("1,2|3,4;1,2|3,4")
    assert len(parsed.family) == 1


def test_trivial_bipartition_in_documents():
    parsed = family_from_doc({"bipartitions": [[[2, 1, 3]]]})
    assert parsed.family == BipartitionFamily(3, (Bipartition(3),))


def test_empty_family_needs_n():
    assert family_from_doc({"n": 3, "bipartitions": []}).family == BipartitionFamily(3)
    with pytest.raises(ValueError):
        family_from_doc({"bipartitions": []})


@pytest.mark.parametrize(
    "doc",
    [
        [],  # not an object
        {"bipartitions": 3},
        {"n": 0, "bipartitions": []},
        {"n": True, "bipartitions": []},
        {"bipartitions": [[[1], [1, 2]]]},  # overlap
        {"bipartitions": [[[1, 2], [2, 3]]]},  # overlap again
        {"bipartitions": [[[1, 2], [3]], [[1, 2], [4]]]},  # universes differ
        {"n": 4, "bipartitions": [[[1], [2, 3]]]},  # n does not match the labels
        {"bipartitions": [[[0], [1]]]},  # nonpositive label
        {"bipartitions": [[["a"], [1]]]},  # non-integer label
        {"bipartitions": [[[1], [2], [3]]]},  # three blocks
        {"bipartitions": [[]]},  # no blocks
    ],
)
def test_doc_rejects(doc):
    with pytest.raises(ValueError):
        family_from_doc(doc)


@pytest.mark.parametrize("text", ["", " ; ", "1,2|", "1,x|2", "1|2|3"])
def test_compact_rejects(text):
    with pytest.raises(ValueError):
        family_from_compact(text)


def test_edge_text_roundtrip():
    g = LabeledGraph.from_edges(4, [(3, 4), (1, 2), (2, 3)])
    assert edges_to_text(g) == "1-2,2-3,3-4"
    assert graph_from_edge_text("1-2, 2-3 ,3-4") == g


def test_edge_text_infers_n():
    assert graph_from_edge_text("1-5").n == 5


@pytest.mark.parametrize("text", ["", "1-1", "1-2,2-1", "1-2,1-2", "a-2", "0-1", "1_2"])
def test_edge_text_rejects(text):
    with pytest.raises(ValueError):
        graph_from_edge_text(text)


def test_code_text():
    assert code_to_text((2, 3)) == "2,3"
    assert code_to_text(()) == ""
