"""Dimension-level verification of the colimit construction.

Gluing one facet at a time expresses the complex as iterated pushouts; on
Stanley-Reisner rings that gives, for every even degree d,

    dim SR(K_j)^d = dim SR(K_{j-1})^d + dim Z[s_j]^d - dim SR(K_{j-1} /\\ s_j)^d

where s_j is the facet added at step j and the intersection complex consists
of the faces of s_j that are already faces of K_{j-1}.  An empty intersection
contributes dimension 1 in degree 0 (the point).  verify_construction couples
this recurrence with two per-diagram checks: every node label has the free
cohomology of its simplex (equal Hilbert functions up to the truncation), and
every edge's induced generator map is the Stanley-Reisner projection.

brute_oracle_hilbert recounts dimensions by direct enumeration of exponent
vectors; it shares no code path with sr_hilbert and exists to cross-check it.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import (
    ComplexWithDegrees,
    Simplex,
    VertexDecl,
    pmax,
    simplex_key,
)
from .diagram import (
    ColimitDiagram,
    NoCanonicalMap,
    expected_block_maps,
    label_degree_multiset,
    node_name,
)
from .hilbert import HilbertFunction, free_hilbert, sr_hilbert


@dataclass
class DegreeRow:
    degree: int
    union_dim: int
    previous_dim: int
    free_dim: int
    intersection_dim: int

    @property
    def ok(self) -> bool:
        return self.union_dim == self.previous_dim + self.free_dim - self.intersection_dim


@dataclass
class StepRecord:
    index: int
    facet: tuple[str, ...]
    rows: list[DegreeRow]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)


@dataclass
class NodeCheck:
    name: str
    ok: bool
    first_bad_degree: int | None = None
    expected: int | None = None
    got: int | None = None


@dataclass
class EdgeCheck:
    source: str
    target: str
    ok: bool
    detail: str = ""


@dataclass
class VerificationReport:
    truncation: int
    structure_issues: list[str] = field(default_factory=list)
    node_checks: list[NodeCheck] = field(default_factory=list)
    edge_checks: list[EdgeCheck] = field(default_factory=list)
    steps: list[StepRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            not self.structure_issues
            and all(n.ok for n in self.node_checks)
            and all(e.ok for e in self.edge_checks)
            and all(s.ok for s in self.steps)
        )

    @property
    def first_discrepancy(self) -> str | None:
        if self.structure_issues:
            return self.structure_issues[0]
        for n in self.node_checks:
            if not n.ok:
                return (
                    f"node {n.name}: label dimension {n.got} != {n.expected} "
                    f"at degree {n.first_bad_degree}"
                )
        for e in self.edge_checks:
            if not e.ok:
                return f"edge {e.source} -> {e.target}: {e.detail}"
        for s in self.steps:
            for r in s.rows:
                if not r.ok:
                    return (
                        f"step {s.index} (facet {list(s.facet)}), degree "
                        f"{r.degree}: {r.union_dim} != {r.previous_dim} + "
                        f"{r.free_dim} - {r.intersection_dim}"
                    )
        return None

    def to_json_dict(self) -> dict:
        return {
            "D": self.truncation,
            "passed": self.passed,
            "first_discrepancy": self.first_discrepancy,
            "structure": list(self.structure_issues),
            "nodes": [
                {
                    "name": n.name,
                    "ok": n.ok,
                    "first_bad_degree": n.first_bad_degree,
                    "expected": n.expected,
                    "got": n.got,
                }
                for n in self.node_checks
            ],
            "edges": [
                {"from": e.source, "to": e.target, "ok": e.ok, "detail": e.detail}
                for e in self.edge_checks
            ],
            "steps": [
                {
                    "index": s.index,
                    "facet": list(s.facet),
                    "ok": s.ok,
                    "rows": [
                        [r.degree, r.union_dim, r.previous_dim, r.free_dim,
                         r.intersection_dim]
                        for r in s.rows
                    ],
                }
                for s in self.steps
            ],
        }

    def to_text(self) -> str:
        lines = [f"verification up to degree {self.truncation}: "
                 + ("PASS" if self.passed else f"FAIL ({self.first_discrepancy})")]
        for issue in self.structure_issues:
            lines.append(f"  structure: {issue}")
        for n in self.node_checks:
            lines.append(f"  node {n.name}: " + ("ok" if n.ok else
                         f"mismatch at degree {n.first_bad_degree} "
                         f"({n.got} != {n.expected})"))
        for e in self.edge_checks:
            lines.append(f"  edge {e.source} -> {e.target}: "
                         + ("ok" if e.ok else e.detail))
        for s in self.steps:
            lines.append(f"  step {s.index} facet {list(s.facet)}: "
                         + ("ok" if s.ok else "FAIL"))
            for r in s.rows:
                mark = "" if r.ok else "  <- mismatch"
                lines.append(
                    f"    d={r.degree}: {r.union_dim} = {r.previous_dim} + "
                    f"{r.free_dim} - {r.intersection_dim}{mark}"
                )
        return "\n".join(lines) + "\n"


def _subcomplex_on_facets(
    parent: ComplexWithDegrees, facets: tuple[Simplex, ...]
) -> ComplexWithDegrees:
    used = set().union(*facets) if facets else set()
    return ComplexWithDegrees(
        vertices=tuple(
            VertexDecl(v, parent.degree(v)) for v in sorted(used)
        ),
        facets=facets,
    )


def _maximalize(candidates: set[Simplex]) -> tuple[Simplex, ...]:
    kept = [
        s for s in candidates if s and not any(s < t for t in candidates)
    ]
    return tuple(sorted(kept, key=simplex_key))


def intersection_complex(
    c1: ComplexWithDegrees, c2: ComplexWithDegrees
) -> ComplexWithDegrees:
    """The complex whose faces are common to both inputs."""
    for v in set(c1.degree_map) & set(c2.degree_map):
        if c1.degree(v) != c2.degree(v):
            raise ValueError(f"vertex {v!r} has conflicting degrees")
    candidates = {f1 & f2 for f1 in c1.facets for f2 in c2.facets}
    return _subcomplex_on_facets(c1, _maximalize(candidates))


def kernel_dim(c1: ComplexWithDegrees, c2: ComplexWithDegrees, d: int) -> int:
    """Degree-d dimension of the kernel of SR(K1 union K2) -> SR(K1) x SR(K2)
    measured through inclusion-exclusion:
    dim SR(K1)^d + dim SR(K2)^d - dim SR(K1 /\\ K2)^d."""
    if d < 0 or d % 2 != 0:
        raise ValueError(f"degree must be even and >= 0, got {d}")
    inter = intersection_complex(c1, c2)
    return sr_hilbert(c1, d).at(d) + sr_hilbert(c2, d).at(d) - sr_hilbert(inter, d).at(d)


def pushout_recurrence_check(c: ComplexWithDegrees, truncation: int) -> VerificationReport:
    """Check the facet-by-facet gluing recurrence for every even degree up to
    the truncation, in the complex's facet order."""
    report = VerificationReport(truncation)
    prev = ComplexWithDegrees((), ())
    prev_h = sr_hilbert(prev, truncation)
    for j, facet in enumerate(c.facets, start=1):
        current = _subcomplex_on_facets(c, c.facets[:j])
        cur_h = sr_hilbert(current, truncation)
        free_h = free_hilbert(c.degree_multiset(facet), truncation)
        facet_complex = _subcomplex_on_facets(c, (facet,))
        inter_h = sr_hilbert(intersection_complex(prev, facet_complex), truncation)
        rows = [
            DegreeRow(d, cur_h.at(d), prev_h.at(d), free_h.at(d), inter_h.at(d))
            for d in range(0, truncation + 1, 2)
        ]
        report.steps.append(StepRecord(j, simplex_key(facet), rows))
        prev, prev_h = current, cur_h
    return report


def brute_oracle_hilbert(c: ComplexWithDegrees, truncation: int) -> HilbertFunction:
    """Count basis monomials by enumerating exponent vectors directly,
    pruning branches whose support already fails to be a face.  This is the
    slow cross-check for sr_hilbert."""
    if truncation < 0 or truncation % 2 != 0:
        raise ValueError(f"truncation degree must be even and >= 0, got {truncation}")
    ids = sorted(c.sorted_ids, key=lambda v: -c.degree(v))
    degs = [c.degree(v) for v in ids]
    facets = c.facets
    dims = {d: 0 for d in range(0, truncation + 1, 2)}

    def is_face(support: frozenset[str]) -> bool:
        return not support or any(support <= f for f in facets)

    def walk(idx: int, total: int, support: frozenset[str]) -> None:
        if idx == len(ids):
            dims[total] += 1
            return
        walk(idx + 1, total, support)
        bumped = support | {ids[idx]}
        if not is_face(bumped):
            return
        step = degs[idx]
        t = total + step
        while t <= truncation:
            walk(idx + 1, t, bumped)
            t += step
    walk(0, 0, frozenset())
    return HilbertFunction(truncation, dims)


def verify_construction(
    c: ComplexWithDegrees, diagram: ColimitDiagram, truncation: int
) -> VerificationReport:
    """Full verification: (a) node labels carry the free cohomology of their
    simplices, (b) edge maps restrict to the Stanley-Reisner projections on
    generators, (c) the gluing recurrence holds up to the truncation."""
    report = VerificationReport(truncation)
    poset = pmax(c)
    expected_names = [node_name(s) for s in poset.elements]
    got_names = [n.name for n in diagram.nodes]
    if got_names != expected_names:
        report.structure_issues.append(
            f"diagram nodes {got_names} do not match the poset {expected_names}"
        )
    expected_edges = [
        (node_name(s), node_name(t)) for s, t in poset.covers()
    ]
    got_edges = [(e.source, e.target) for e in diagram.edges]
    if got_edges != expected_edges:
        report.structure_issues.append(
            f"diagram edges {got_edges} do not match covering pairs {expected_edges}"
        )
    covered = {v for b in diagram.partition.blocks for v in b}
    if covered != set(c.sorted_ids):
        report.structure_issues.append(
            "diagram partition does not cover the vertex set"
        )

    for node in diagram.nodes:
        simplex = frozenset(node.simplex)
        if not c.is_face(simplex):
            report.structure_issues.append(f"node {node.name} is not a face")
            continue
        want = free_hilbert(c.degree_multiset(simplex), truncation)
        have = free_hilbert(label_degree_multiset(node.blocks), truncation)
        check = NodeCheck(node.name, True)
        for d in range(0, truncation + 1, 2):
            if want.at(d) != have.at(d):
                check = NodeCheck(node.name, False, d, want.at(d), have.at(d))
                break
        report.node_checks.append(check)

    labels = {n.name: n for n in diagram.nodes}
    for e in diagram.edges:
        src = frozenset(e.label.source)
        projection = tuple(
            (v, v if v in src else None) for v in sorted(e.label.target)
        )
        if e.label.generator_map != projection:
            report.edge_checks.append(EdgeCheck(
                e.source, e.target, False,
                "generator map is not the Stanley-Reisner projection"))
            continue
        try:
            want_maps = expected_block_maps(
                labels[e.source].blocks, labels[e.target].blocks
            )
        except (KeyError, NoCanonicalMap) as err:
            report.edge_checks.append(
                EdgeCheck(e.source, e.target, False, f"no canonical maps: {err}")
            )
            continue
        if e.label.maps != want_maps:
            report.edge_checks.append(EdgeCheck(
                e.source, e.target, False,
                "stored maps disagree with the node labels"))
            continue
        report.edge_checks.append(EdgeCheck(e.source, e.target, True))

    report.steps.extend(pushout_recurrence_check(c, truncation).steps)
    return report
