"""Graded dimension counting for Stanley-Reisner rings and free polynomial rings.

The Stanley-Reisner ring of a complex has a monomial basis: exponent vectors
whose support is a face.  Dimensions are counted per face (monomials whose
support is exactly that face, every exponent at least 1) and summed.  All
counts are exact Python integers; only even degrees carry anything, so a
Hilbert function stores even degrees 0..D.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .complexes import (
    ComplexWithDegrees,
    DegreeMultiset,
    Simplex,
    UnknownVertex,
    all_faces,
)


@dataclass(frozen=True)
class Monomial:
    """An exponent vector over vertex ids; entries must be nonnegative."""

    exponents: Mapping[str, int]

    @property
    def support(self) -> Simplex:
        return frozenset(v for v, e in self.exponents.items() if e > 0)

    def degree(self, c: ComplexWithDegrees) -> int:
        return sum(c.degree(v) * e for v, e in self.exponents.items())


@dataclass(frozen=True)
class HilbertFunction:
    """dims[d] for even d in 0..truncation; dims[0] is always 1."""

    truncation: int
    dims: Mapping[int, int]

    def at(self, d: int) -> int:
        if d < 0 or d > self.truncation:
            raise ValueError(f"degree {d} outside truncation 0..{self.truncation}")
        return self.dims.get(d, 0)

    def to_json_dict(self) -> dict:
        return {
            "D": self.truncation,
            "dims": {str(d): self.dims[d] for d in sorted(self.dims)},
        }


def _check_truncation(d: int) -> None:
    if d < 0 or d % 2 != 0:
        raise ValueError(f"truncation degree must be even and >= 0, got {d}")


def monomial_is_zero(c: ComplexWithDegrees, m: Monomial) -> bool:
    """A monomial vanishes exactly when its support is a non-face."""
    for v, e in m.exponents.items():
        if v not in c.degree_map:
            raise UnknownVertex(f"unknown vertex {v!r}")
        if e < 0:
            raise ValueError(f"negative exponent for {v!r}")
    return not c.is_face(m.support)


def _count_ways(degrees: Sequence[int], cap: int) -> list[int]:
    # ways[d] = number of exponent vectors over the given (distinguishable)
    # generators with total degree d, 0 <= d <= cap
    ways = [0] * (cap + 1)
    ways[0] = 1
    for deg in degrees:
        for d in range(deg, cap + 1):
            ways[d] += ways[d - deg]
    return ways


def free_hilbert(ms: DegreeMultiset, truncation: int) -> HilbertFunction:
    """Hilbert function of a free polynomial ring on generators with the
    given even degrees."""
    _check_truncation(truncation)
    for d in ms:
        if d <= 0 or d % 2 != 0:
            raise ValueError(f"generator degree {d} must be a positive even integer")
    ways = _count_ways(ms, truncation)
    return HilbertFunction(
        truncation, {d: ways[d] for d in range(0, truncation + 1, 2)}
    )


def sr_hilbert(c: ComplexWithDegrees, truncation: int) -> HilbertFunction:
    """Hilbert function of the Stanley-Reisner ring, computed per face."""
    _check_truncation(truncation)
    dims = {d: 0 for d in range(0, truncation + 1, 2)}
    for face in all_faces(c):
        degs = [c.degree(v) for v in face]
        base = sum(degs)
        if base > truncation:
            continue
        # exponents >= 1 on the face: shift by one copy of each degree
        ways = _count_ways(degs, truncation - base)
        for off in range(0, truncation - base + 1, 2):
            dims[base + off] += ways[off]
    return HilbertFunction(truncation, dims)


def restrict_to_simplex(c: ComplexWithDegrees, s: Simplex) -> DegreeMultiset:
    """Degree multiset of a face; the full subcomplex on s has the free ring
    on exactly these degrees as its Stanley-Reisner ring."""
    return c.degree_multiset(s)
