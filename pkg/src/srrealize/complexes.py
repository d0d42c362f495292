"""Simplicial complexes with even vertex degrees, and their facet-intersection poset.

A complex is described by its facets (the maximal simplices) together with a
degree map sending every vertex to a positive even integer.  Faces are exactly
the subsets of facets; the empty simplex is always a face.  The poset of all
intersections of nonempty sets of facets, ordered by inclusion, drives both
the realizability decision and the diagram construction.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

Simplex = frozenset[str]
DegreeMultiset = tuple[int, ...]

EMPTY_SIMPLEX: Simplex = frozenset()


class ComplexError(ValueError):
    """Invalid complex data; the message names the offending item."""


class DuplicateVertex(ComplexError):
    pass


class UnknownVertexInFacet(ComplexError):
    pass


class NonMaximalFacet(ComplexError):
    pass


class OrphanVertex(ComplexError):
    pass


class OddOrNonpositiveDegree(ComplexError):
    pass


class UnknownVertex(ComplexError):
    pass


class NotAFace(ComplexError):
    pass


class MalformedInput(ComplexError):
    pass


def simplex_key(s: Iterable[str]) -> tuple[str, ...]:
    """Canonical ordering key for simplices: the sorted id tuple."""
    return tuple(sorted(s))


@dataclass(frozen=True)
class VertexDecl:
    id: str
    degree: int


@dataclass(frozen=True)
class ComplexWithDegrees:
    """Facets plus degrees.  Facet order is preserved; it matters for the
    step-by-step pushout verification, nowhere else."""

    vertices: tuple[VertexDecl, ...]
    facets: tuple[Simplex, ...]

    @cached_property
    def degree_map(self) -> Mapping[str, int]:
        return {v.id: v.degree for v in self.vertices}

    @cached_property
    def sorted_ids(self) -> tuple[str, ...]:
        return tuple(sorted(self.degree_map))

    def degree(self, vertex: str) -> int:
        try:
            return self.degree_map[vertex]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {vertex!r}") from None

    def validate(self) -> None:
        seen: set[str] = set()
        for v in self.vertices:
            if v.id in seen:
                raise DuplicateVertex(f"duplicate vertex id {v.id!r}")
            seen.add(v.id)
        for v in self.vertices:
            if v.degree <= 0 or v.degree % 2 != 0:
                raise OddOrNonpositiveDegree(
                    f"vertex {v.id!r} has degree {v.degree}; "
                    "degrees must be positive even integers"
                )
        for f in self.facets:
            if not f:
                raise ComplexError("facets must be nonempty")
            for x in sorted(f):
                if x not in seen:
                    raise UnknownVertexInFacet(
                        f"facet {sorted(f)} mentions undeclared vertex {x!r}"
                    )
        for i, a in enumerate(self.facets):
            for j, b in enumerate(self.facets):
                if i != j and a <= b:
                    raise NonMaximalFacet(
                        f"facet {sorted(a)} is contained in facet {sorted(b)}"
                    )
        covered = set().union(*self.facets) if self.facets else set()
        for v in self.vertices:
            if v.id not in covered:
                raise OrphanVertex(f"vertex {v.id!r} appears in no facet")

    def is_face(self, s: Iterable[str]) -> bool:
        s = frozenset(s)
        for x in s:
            if x not in self.degree_map:
                raise UnknownVertex(f"unknown vertex {x!r}")
        if not s:
            return True
        return any(s <= f for f in self.facets)

    def degree_multiset(self, s: Iterable[str]) -> DegreeMultiset:
        s = frozenset(s)
        if not self.is_face(s):
            raise NotAFace(f"{sorted(s)} is not a face")
        return tuple(sorted(self.degree_map[x] for x in s))


def make_complex(
    degrees: Mapping[str, int], facets: Iterable[Iterable[str]]
) -> ComplexWithDegrees:
    """Build and validate a complex from a degree map and facet list."""
    c = ComplexWithDegrees(
        vertices=tuple(VertexDecl(i, d) for i, d in sorted(degrees.items())),
        facets=tuple(frozenset(f) for f in facets),
    )
    c.validate()
    return c


def all_faces(c: ComplexWithDegrees) -> frozenset[Simplex]:
    """Every face of the complex, including the empty simplex."""
    faces: set[Simplex] = {EMPTY_SIMPLEX}
    for f in c.facets:
        ids = sorted(f)
        for r in range(1, len(ids) + 1):
            for combo in itertools.combinations(ids, r):
                faces.add(frozenset(combo))
    return frozenset(faces)


@dataclass(frozen=True)
class MaxIntersectionPoset:
    """All intersections of nonempty sets of facets, ordered by inclusion.

    Elements are stored in canonical order (lexicographic on sorted id
    lists).  The maximal elements are the facets themselves; the poset is
    closed under pairwise intersection.
    """

    elements: tuple[Simplex, ...]

    def __contains__(self, s: object) -> bool:
        return s in set(self.elements)

    def covers(self) -> tuple[tuple[Simplex, Simplex], ...]:
        """Covering pairs (s, t) with s properly below t and nothing between."""
        out = []
        for s in self.elements:
            for t in self.elements:
                if s < t and not any(s < r < t for r in self.elements):
                    out.append((s, t))
        return tuple(out)

    def maximal_elements(self) -> tuple[Simplex, ...]:
        return tuple(
            s for s in self.elements if not any(s < t for t in self.elements)
        )


def pmax(c: ComplexWithDegrees) -> MaxIntersectionPoset:
    """Compute the facet-intersection poset by closing the facet set under
    pairwise intersection (which yields all intersections of nonempty facet
    subsets)."""
    els: set[Simplex] = set(c.facets)
    frontier = set(c.facets)
    while frontier:
        new: set[Simplex] = set()
        for a in frontier:
            for f in c.facets:
                i = a & f
                if i not in els and i not in new:
                    new.add(i)
        els |= new
        frontier = new
    return MaxIntersectionPoset(tuple(sorted(els, key=simplex_key)))


def complex_from_json(text: str) -> ComplexWithDegrees:
    """Parse the input JSON format.

    {"vertices": [{"id": "x4", "degree": 4}, ...], "facets": [["x4","x6"], ...]}

    Unknown keys are rejected; degrees must be JSON integers.  The result is
    validated before being returned.
    """
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict):
        raise MalformedInput("top-level value must be an object")
    extra = set(obj) - {"vertices", "facets"}
    if extra:
        raise MalformedInput(f"unknown top-level keys: {sorted(extra)}")
    if "vertices" not in obj or "facets" not in obj:
        raise MalformedInput('both "vertices" and "facets" are required')
    if not isinstance(obj["vertices"], list):
        raise MalformedInput('"vertices" must be a list')
    decls = []
    for entry in obj["vertices"]:
        if not isinstance(entry, dict):
            raise MalformedInput(f"vertex entry {entry!r} must be an object")
        extra = set(entry) - {"id", "degree"}
        if extra:
            raise MalformedInput(
                f"vertex entry {entry!r} has unknown keys: {sorted(extra)}"
            )
        vid = entry.get("id")
        deg = entry.get("degree")
        if not isinstance(vid, str):
            raise MalformedInput(f"vertex id {vid!r} must be a string")
        if not isinstance(deg, int) or isinstance(deg, bool):
            raise MalformedInput(f"degree of vertex {vid!r} must be an integer")
        decls.append(VertexDecl(vid, deg))
    if not isinstance(obj["facets"], list):
        raise MalformedInput('"facets" must be a list of lists')
    facets = []
    for f in obj["facets"]:
        if not isinstance(f, list) or not all(isinstance(x, str) for x in f):
            raise MalformedInput(f"facet {f!r} must be a list of vertex ids")
        facets.append(frozenset(f))
    c = ComplexWithDegrees(tuple(decls), tuple(facets))
    c.validate()
    return c
