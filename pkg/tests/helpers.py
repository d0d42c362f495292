"""Shared fixtures and independent oracles for the test suite.

The oracles deliberately avoid the package's fast paths: counting is done by
plain recursion over exponents, poset elements by intersecting every facet
subset, and primes by trial division.
"""
from __future__ import annotations

import itertools
import random
from typing import Iterable, Sequence

from srrealize import ComplexWithDegrees, Simplex, make_complex, simplex_key


def ring_468() -> ComplexWithDegrees:
    """Z[x4,x6,x8] with the single relation x6*x8 = 0."""
    return make_complex({"x4": 4, "x6": 6, "x8": 8}, [{"x4", "x6"}, {"x4", "x8"}])


def ring_fan6(n: int) -> ComplexWithDegrees:
    """Z[x4, y1..yn, x8] with yj*yk = 0 for j != k; the yj have degree 6."""
    degrees = {"x4": 4, "x8": 8}
    degrees.update({f"y{j}": 6 for j in range(1, n + 1)})
    facets = [{"x4", f"y{j}", "x8"} for j in range(1, n + 1)]
    return make_complex(degrees, facets)


def ring_double_fan() -> ComplexWithDegrees:
    """Two degree-6 and two degree-8 generators, each pair multiplying to 0."""
    degrees = {"x4": 4, "y1": 6, "y2": 6, "z1": 8, "z2": 8}
    facets = [{"x4", y, z} for y in ("y1", "y2") for z in ("z1", "z2")]
    return make_complex(degrees, facets)


def ring_split46() -> ComplexWithDegrees:
    """Z[x4,x6] with x4*x6 = 0."""
    return make_complex({"x4": 4, "x6": 6}, [{"x4"}, {"x6"}])


def single_facet(degrees: Sequence[int]) -> ComplexWithDegrees:
    ids = {f"g{i}_{d}": d for i, d in enumerate(degrees)}
    return make_complex(ids, [set(ids)])


def naive_count(degrees: Sequence[int], d: int) -> int:
    """Exponent vectors with the given total degree, by plain recursion."""
    if d < 0:
        return 0
    if not degrees:
        return 1 if d == 0 else 0
    head, rest = degrees[0], list(degrees[1:])
    return sum(naive_count(rest, d - k * head) for k in range(d // head + 1))


def naive_sr_count(c: ComplexWithDegrees, d: int) -> int:
    """Basis monomials of the Stanley-Reisner ring in degree d, counted by
    enumerating exponent vectors vertex by vertex and keeping those whose
    support is a face.  Independent of the per-face dynamic programming in
    the package."""
    ids = list(c.sorted_ids)

    def walk(idx: int, remaining: int, support: frozenset[str]) -> int:
        if idx == len(ids):
            if remaining != 0:
                return 0
            return 1 if c.is_face(support) else 0
        v = ids[idx]
        step = c.degree(v)
        total = walk(idx + 1, remaining, support)
        used = step
        while used <= remaining:
            total += walk(idx + 1, remaining - used, support | {v})
            used += step
        return total

    return walk(0, d, frozenset())


def brute_pmax(c: ComplexWithDegrees) -> list[Simplex]:
    """Intersections of every nonempty facet subset, canonically ordered."""
    out: set[Simplex] = set()
    for r in range(1, len(c.facets) + 1):
        for combo in itertools.combinations(c.facets, r):
            inter = combo[0]
            for f in combo[1:]:
                inter = inter & f
            out.add(inter)
    return sorted(out, key=simplex_key)


def naive_is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def naive_congruence_prime(extras: Iterable[int], lower_bound: int) -> int:
    """Scan upward checking all congruences and trial-division primality."""
    p = lower_bound + 1
    while True:
        if (
            p % 16 == 7
            and p % 3 == 2
            and p % 5 == 3
            and p % 7 == 3
            and all(p % q == 2 for q in extras)
            and naive_is_prime(p)
        ):
            return p
        p += 1


def random_complex(rng: random.Random) -> ComplexWithDegrees:
    """Complex on at most 6 vertices with degrees in {2,...,12} and at most 5
    facets; facets stored in canonical order so callers can reshuffle."""
    nv = rng.randint(1, 6)
    ids = [f"v{i}" for i in range(nv)]
    degrees = {v: rng.choice([2, 4, 6, 8, 10, 12]) for v in ids}
    cand: set[Simplex] = set()
    for _ in range(rng.randint(1, 5)):
        size = rng.randint(1, nv)
        cand.add(frozenset(rng.sample(ids, size)))
    facets = sorted(
        (s for s in cand if not any(s < t for t in cand)), key=simplex_key
    )
    used = sorted(set().union(*facets))
    return make_complex({v: degrees[v] for v in used}, facets)


def shuffled_facets(
    c: ComplexWithDegrees, rng: random.Random
) -> ComplexWithDegrees:
    order = list(c.facets)
    rng.shuffle(order)
    return make_complex(
        {v.id: v.degree for v in c.vertices}, order
    )


def antichain_complexes_24(
    max_vertices: int, max_facets: int
) -> Iterable[ComplexWithDegrees]:
    """Every complex whose degrees lie in {2, 4}, with at most max_vertices
    vertices and at most max_facets facets (facet families are antichains
    covering the vertex set)."""
    for nv in range(1, max_vertices + 1):
        ids = [f"w{i}" for i in range(nv)]
        subsets = [
            frozenset(combo)
            for r in range(1, nv + 1)
            for combo in itertools.combinations(ids, r)
        ]
        for nf in range(1, max_facets + 1):
            for family in itertools.combinations(subsets, nf):
                if any(
                    a <= b for a, b in itertools.permutations(family, 2)
                ):
                    continue
                if set().union(*family) != set(ids):
                    continue
                for degs in itertools.product((2, 4), repeat=nv):
                    yield make_complex(dict(zip(ids, degs)), family)
