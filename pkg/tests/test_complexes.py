from __future__ import annotations

import random

import pytest

from srrealize import (
    ComplexError,
    ComplexWithDegrees,
    DuplicateVertex,
    NonMaximalFacet,
    NotAFace,
    OddOrNonpositiveDegree,
    OrphanVertex,
    UnknownVertex,
    UnknownVertexInFacet,
    VertexDecl,
    all_faces,
    complex_from_json,
    make_complex,
    pmax,
    simplex_key,
)

from helpers import brute_pmax, random_complex, ring_468, ring_double_fan


def test_validate_accepts_good_complex():
    ring_468().validate()


def test_duplicate_vertex_rejected():
    c = ComplexWithDegrees(
        (VertexDecl("a", 4), VertexDecl("a", 6)), (frozenset({"a"}),)
    )
    with pytest.raises(DuplicateVertex):
        c.validate()


def test_unknown_vertex_in_facet_rejected():
    c = ComplexWithDegrees((VertexDecl("a", 4),), (frozenset({"a", "b"}),))
    with pytest.raises(UnknownVertexInFacet):
        c.validate()


def test_non_maximal_facet_rejected():
    with pytest.raises(NonMaximalFacet):
        make_complex({"a": 4, "b": 6}, [{"a"}, {"a", "b"}])


def test_duplicate_facet_rejected():
    with pytest.raises(NonMaximalFacet):
        make_complex({"a": 4}, [{"a"}, {"a"}])


def test_orphan_vertex_rejected():
    c = ComplexWithDegrees(
        (VertexDecl("a", 4), VertexDecl("b", 6)), (frozenset({"a"}),)
    )
    with pytest.raises(OrphanVertex):
        c.validate()


def test_odd_degree_rejected():
    with pytest.raises(OddOrNonpositiveDegree):
        make_complex({"a": 3}, [{"a"}])


def test_nonpositive_degree_rejected():
    with pytest.raises(OddOrNonpositiveDegree):
        make_complex({"a": 0}, [{"a"}])


def test_empty_facet_rejected():
    with pytest.raises(ComplexError):
        make_complex({"a": 4}, [{"a"}, set()])


def test_is_face():
    c = ring_468()
    assert c.is_face({"x4", "x6"})
    assert c.is_face({"x4"})
    assert c.is_face(set())
    assert not c.is_face({"x6", "x8"})
    with pytest.raises(UnknownVertex):
        c.is_face({"zz"})


def test_faces_are_downward_closed():
    rng = random.Random(7)
    for _ in range(30):
        c = random_complex(rng)
        for face in all_faces(c):
            for v in face:
                assert c.is_face(face - {v})


def test_degree_multiset():
    c = ring_468()
    assert c.degree_multiset({"x4", "x6"}) == (4, 6)
    assert c.degree_multiset(set()) == ()
    with pytest.raises(NotAFace):
        c.degree_multiset({"x6", "x8"})


def test_pmax_two_facet_example():
    els = pmax(ring_468()).elements
    assert [sorted(s) for s in els] == [["x4"], ["x4", "x6"], ["x4", "x8"]]


def test_pmax_empty_intersection():
    c = make_complex({"a": 4, "b": 4}, [{"a"}, {"b"}])
    els = pmax(c).elements
    assert [sorted(s) for s in els] == [[], ["a"], ["b"]]


def test_pmax_double_fan_has_nine_elements():
    els = pmax(ring_double_fan()).elements
    assert len(els) == 9
    assert frozenset({"x4"}) in els
    assert frozenset({"x4", "y1"}) in els
    assert frozenset({"x4", "z2"}) in els


def test_pmax_matches_subset_oracle():
    rng = random.Random(11)
    for _ in range(60):
        c = random_complex(rng)
        assert list(pmax(c).elements) == brute_pmax(c)


def test_pmax_closed_under_intersection_and_facets_maximal():
    rng = random.Random(13)
    for _ in range(40):
        c = random_complex(rng)
        poset = pmax(c)
        els = set(poset.elements)
        assert all(a & b in els for a in els for b in els)
        assert set(poset.maximal_elements()) == set(c.facets)
        # every element is the intersection of the facets containing it
        for s in els:
            over = [f for f in c.facets if s <= f]
            inter = over[0]
            for f in over[1:]:
                inter = inter & f
            assert inter == s


def test_covers_have_nothing_between():
    poset = pmax(ring_double_fan())
    els = set(poset.elements)
    for s, t in poset.covers():
        assert s < t
        assert not any(s < r < t for r in els)


def test_complex_from_json_roundtrip():
    text = """
    {"vertices": [{"id": "x4", "degree": 4}, {"id": "x6", "degree": 6}],
     "facets": [["x4"], ["x6"]]}
    """
    c = complex_from_json(text)
    assert c.degree("x4") == 4
    assert [sorted(f) for f in c.facets] == [["x4"], ["x6"]]


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"vertices": []}',
        '{"vertices": [], "facets": [], "extra": 1}',
        '{"vertices": [{"id": "a", "degree": 4, "color": "red"}], "facets": [["a"]]}',
        '{"vertices": [{"id": "a", "degree": 4.0}], "facets": [["a"]]}',
        '{"vertices": [{"id": "a", "degree": true}], "facets": [["a"]]}',
        '{"vertices": [{"id": "a", "degree": 4}], "facets": ["a"]}',
    ],
)
def test_complex_from_json_rejects_malformed(text):
    with pytest.raises(ComplexError):
        complex_from_json(text)


def test_simplex_key_sorts_ids():
    assert simplex_key({"b", "a"}) == ("a", "b")
