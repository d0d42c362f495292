"""Homotopy colimit diagrams over the facet-intersection poset.

Each poset element s gets the space prod_i X(s, i), one factor per partition
block: BSp(n) for a symplectic chain {4,...,4n}, BSU(n+1) for a unitary chain
{4,...,2n+2} on n generators, a power of CP^inf for degree-2 vertices, and a
point for an empty intersection.  Edges follow covering relations upward and
are labeled by compositions of the three standard inclusions

    iota1: BSU(n) -> BSU(n+1),   iota2: BSp(n) -> BSp(n+1),
    iota3: BSp(n) -> BSU(2n),

together with coordinate inclusions of CP^inf powers.  On cohomology every
generator of the target pulls back to the generator bound to the same vertex,
or to zero when that vertex is absent, which is exactly the Stanley-Reisner
projection; the verifier re-checks this rather than assuming it.

Generators are bound to vertices by ascending degree.  Inside one block and
one poset element the admissible families never repeat a degree above 2, so
the binding is unambiguous.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .admissible import AdmissibleClass, SpType, SUType, Torus, classify
from .complexes import (
    ComplexWithDegrees,
    DegreeMultiset,
    MalformedInput,
    Simplex,
    pmax,
    simplex_key,
)
from .decide import Partition


class InadmissibleSimplex(ValueError):
    """A poset element meets a partition block in a multiset that is not a
    Torus, SUType or SpType pattern, so no space can be assigned."""

    def __init__(self, simplex: Simplex, block: int, cls: AdmissibleClass):
        super().__init__(
            f"simplex {sorted(simplex)} meets block {block} in an "
            f"unconstructible multiset ({cls})"
        )
        self.simplex = simplex
        self.block = block
        self.cls = cls


class NoCanonicalMap(ValueError):
    """No standard inclusion exists between the two factors; unreachable for
    labels produced from an admissible partition."""


@dataclass(frozen=True)
class CPInfPower:
    k: int


@dataclass(frozen=True)
class BSp:
    n: int


@dataclass(frozen=True)
class BSU:
    n: int


@dataclass(frozen=True)
class Point:
    pass


FactorLabel = CPInfPower | BSp | BSU | Point


@dataclass(frozen=True)
class BlockLabel:
    """One factor of a node space: the Lie-type or CP^inf part for one
    partition block, with the vertices bound to its generators."""

    block: int
    factor: FactorLabel
    cp_vertices: tuple[str, ...]  # degree-2 vertices, id order
    lie_vertices: tuple[str, ...]  # degree >= 4 vertices, ascending degree


SpaceLabel = tuple[BlockLabel, ...]


@dataclass(frozen=True)
class Iota1Power:
    power: int
    after_iota3: bool


@dataclass(frozen=True)
class Iota2Power:
    power: int


@dataclass(frozen=True)
class FromPoint:
    pass


LieMap = Iota1Power | Iota2Power | FromPoint


@dataclass(frozen=True)
class CPInclusion:
    source: tuple[str, ...]
    target: tuple[str, ...]


@dataclass(frozen=True)
class BlockMap:
    block: int
    lie: LieMap | None
    cp: CPInclusion | None


@dataclass(frozen=True)
class EdgeLabel:
    source: tuple[str, ...]
    target: tuple[str, ...]
    maps: tuple[BlockMap, ...]
    # target vertex -> source vertex carrying the same generator, or None
    generator_map: tuple[tuple[str, str | None], ...]


@dataclass(frozen=True)
class DiagramNode:
    name: str
    simplex: tuple[str, ...]
    blocks: SpaceLabel


@dataclass(frozen=True)
class DiagramEdge:
    source: str
    target: str
    label: EdgeLabel


@dataclass(frozen=True)
class ColimitDiagram:
    partition: Partition
    nodes: tuple[DiagramNode, ...]
    edges: tuple[DiagramEdge, ...]


def node_name(s: Simplex | tuple[str, ...]) -> str:
    return "sigma_" + "_".join(sorted(s))


def check_partition(c: ComplexWithDegrees, partition: Partition) -> None:
    seen: set[str] = set()
    for b in partition.blocks:
        if not b:
            raise ValueError("partition blocks must be nonempty")
        for v in b:
            c.degree(v)
            if v in seen:
                raise ValueError(f"vertex {v!r} appears in two blocks")
            seen.add(v)
    missing = set(c.sorted_ids) - seen
    if missing:
        raise ValueError(f"partition misses vertices {sorted(missing)}")


def label_node(
    c: ComplexWithDegrees, s: Simplex, partition: Partition
) -> SpaceLabel:
    out: list[BlockLabel] = []
    for bi, block in enumerate(partition.blocks):
        inter = [v for v in block if v in s]
        cp = tuple(v for v in inter if c.degree(v) == 2)
        lie = tuple(
            sorted((v for v in inter if c.degree(v) >= 4), key=c.degree)
        )
        cls = classify(tuple(sorted(c.degree(v) for v in inter)))
        if isinstance(cls, Torus):
            factor: FactorLabel = CPInfPower(cls.k2) if cls.k2 else Point()
        elif isinstance(cls, SpType):
            factor = BSp(cls.n)
        elif isinstance(cls, SUType):
            factor = BSU(cls.n + 1)
        else:
            raise InadmissibleSimplex(s, bi, cls)
        out.append(BlockLabel(bi, factor, cp, lie))
    return tuple(out)


def label_degree_multiset(blocks: SpaceLabel) -> DegreeMultiset:
    """Generator degrees of the free cohomology ring a label stands for."""
    degs: list[int] = []
    for bl in blocks:
        if isinstance(bl.factor, BSp):
            degs.extend(range(4, 4 * bl.factor.n + 1, 4))
        elif isinstance(bl.factor, BSU):
            degs.extend(range(4, 2 * bl.factor.n + 1, 2))
        degs.extend([2] * len(bl.cp_vertices))
    return tuple(sorted(degs))


def _lie_rank(f: FactorLabel) -> tuple[str, int]:
    if isinstance(f, BSp):
        return "Sp", f.n
    if isinstance(f, BSU):
        return "SU", f.n
    return "none", 0


def _block_map(bs: BlockLabel, bt: BlockLabel) -> BlockMap:
    src_empty = not bs.cp_vertices and not bs.lie_vertices
    tgt_empty = not bt.cp_vertices and not bt.lie_vertices
    if tgt_empty:
        if not src_empty:
            raise NoCanonicalMap("source block exceeds target block")
        return BlockMap(bs.block, None, None)
    if src_empty:
        return BlockMap(bs.block, FromPoint(), None)
    skind, sn = _lie_rank(bs.factor)
    tkind, tn = _lie_rank(bt.factor)
    lie: LieMap | None
    if tkind == "none":
        if skind != "none":
            raise NoCanonicalMap("Lie factor cannot map to a torus factor")
        lie = None
    elif tkind == "Sp":
        if skind == "SU":
            raise NoCanonicalMap("no standard map from a unitary factor into BSp")
        if tn < sn:
            raise NoCanonicalMap("symplectic rank cannot drop")
        lie = Iota2Power(tn - sn)  # sn = 0 when the source has no Lie factor
    else:  # target SU
        if skind == "Sp":
            if tn < 2 * sn:
                raise NoCanonicalMap("unitary rank below twice the symplectic rank")
            lie = Iota1Power(tn - 2 * sn, True)
        else:
            if tn < sn:
                raise NoCanonicalMap("unitary rank cannot drop")
            lie = Iota1Power(tn - sn, False)  # sn = 0 for a torus-only source
    cp = CPInclusion(bs.cp_vertices, bt.cp_vertices) if bt.cp_vertices else None
    if cp and not set(bs.cp_vertices) <= set(bt.cp_vertices):
        raise NoCanonicalMap("source coordinates missing from target")
    return BlockMap(bs.block, lie, cp)


def expected_block_maps(src: SpaceLabel, tgt: SpaceLabel) -> tuple[BlockMap, ...]:
    if len(src) != len(tgt):
        raise NoCanonicalMap("labels have different block counts")
    return tuple(_block_map(bs, bt) for bs, bt in zip(src, tgt))


def label_edge(
    c: ComplexWithDegrees, s: Simplex, t: Simplex, partition: Partition
) -> EdgeLabel:
    if not s < t:
        raise ValueError("edge source must be a proper subset of the target")
    maps = expected_block_maps(
        label_node(c, s, partition), label_node(c, t, partition)
    )
    gens = tuple((v, v if v in s else None) for v in sorted(t))
    return EdgeLabel(simplex_key(s), simplex_key(t), maps, gens)


def build_diagram(c: ComplexWithDegrees, partition: Partition) -> ColimitDiagram:
    """Nodes for every facet-intersection poset element, edges for covering
    relations, all in canonical order."""
    check_partition(c, partition)
    poset = pmax(c)
    nodes = tuple(
        DiagramNode(node_name(s), simplex_key(s), label_node(c, s, partition))
        for s in poset.elements
    )
    edges = tuple(
        DiagramEdge(node_name(s), node_name(t), label_edge(c, s, t, partition))
        for s, t in poset.covers()
    )
    return ColimitDiagram(partition, nodes, edges)


def _factor_pieces(bl: BlockLabel) -> list[str]:
    pieces = []
    if isinstance(bl.factor, BSp):
        pieces.append(f"BSp({bl.factor.n})")
    elif isinstance(bl.factor, BSU):
        pieces.append(f"BSU({bl.factor.n})")
    k = len(bl.cp_vertices)
    if k == 1:
        pieces.append("CP^inf")
    elif k > 1:
        pieces.append(f"CP^inf^{k}")
    return pieces


def node_text(blocks: SpaceLabel) -> str:
    pieces = [p for bl in blocks for p in _factor_pieces(bl)]
    return " x ".join(pieces) if pieces else "pt"


def _lie_text(m: LieMap) -> str:
    if isinstance(m, FromPoint):
        return "const"
    if isinstance(m, Iota2Power):
        if m.power == 0:
            return "id"
        return "iota2" if m.power == 1 else f"iota2^{m.power}"
    head = "" if m.power == 0 else ("iota1" if m.power == 1 else f"iota1^{m.power}")
    if m.after_iota3:
        return f"{head} . iota3" if head else "iota3"
    return head or "id"


def edge_text(label: EdgeLabel) -> str:
    pieces = []
    for bm in label.maps:
        if bm.lie is None and bm.cp is None:
            continue
        if isinstance(bm.lie, FromPoint):
            pieces.append("const")
            continue
        if bm.lie is not None:
            pieces.append(_lie_text(bm.lie))
        if bm.cp is not None:
            pieces.append("incl")
    return " x ".join(pieces) if pieces else "id"


def emit_dot(d: ColimitDiagram) -> str:
    lines = ["digraph colimit {", "  rankdir=LR;"]
    for node in d.nodes:
        lines.append(f'  "{node.name}" [label="{node_text(node.blocks)}"];')
    for edge in d.edges:
        lines.append(
            f'  "{edge.source}" -> "{edge.target}" '
            f'[label="{edge_text(edge.label)}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _factor_to_json(f: FactorLabel) -> dict:
    if isinstance(f, BSp):
        return {"kind": "BSp", "n": f.n}
    if isinstance(f, BSU):
        return {"kind": "BSU", "n": f.n}
    if isinstance(f, CPInfPower):
        return {"kind": "CP", "k": f.k}
    return {"kind": "point"}


def _lie_to_json(m: LieMap | None) -> dict | None:
    if m is None:
        return None
    if isinstance(m, FromPoint):
        return {"kind": "from_point"}
    if isinstance(m, Iota2Power):
        return {"kind": "iota2", "power": m.power}
    return {"kind": "iota1", "power": m.power, "after_iota3": m.after_iota3}


def emit_json(d: ColimitDiagram) -> str:
    obj = {
        "partition": [list(b) for b in d.partition.blocks],
        "nodes": [
            {
                "name": n.name,
                "simplex": list(n.simplex),
                "factors": [
                    {
                        "block": bl.block,
                        "factor": _factor_to_json(bl.factor),
                        "cp_vertices": list(bl.cp_vertices),
                        "lie_vertices": list(bl.lie_vertices),
                    }
                    for bl in n.blocks
                ],
            }
            for n in d.nodes
        ],
        "edges": [
            {
                "from": e.source,
                "to": e.target,
                "source": list(e.label.source),
                "target": list(e.label.target),
                "maps": [
                    {
                        "block": bm.block,
                        "lie": _lie_to_json(bm.lie),
                        "cp": None
                        if bm.cp is None
                        else {
                            "source": list(bm.cp.source),
                            "target": list(bm.cp.target),
                        },
                    }
                    for bm in e.label.maps
                ],
                "generator_map": {v: img for v, img in e.label.generator_map},
            }
            for e in d.edges
        ],
    }
    return json.dumps(obj, indent=2) + "\n"


def _need(obj: dict, key: str, ctx: str):
    if key not in obj:
        raise MalformedInput(f"diagram {ctx} is missing {key!r}")
    return obj[key]


def _factor_from_json(obj: dict) -> FactorLabel:
    kind = _need(obj, "kind", "factor")
    if kind == "BSp":
        return BSp(int(_need(obj, "n", "factor")))
    if kind == "BSU":
        return BSU(int(_need(obj, "n", "factor")))
    if kind == "CP":
        return CPInfPower(int(_need(obj, "k", "factor")))
    if kind == "point":
        return Point()
    raise MalformedInput(f"unknown factor kind {kind!r}")


def _lie_from_json(obj: dict | None) -> LieMap | None:
    if obj is None:
        return None
    kind = _need(obj, "kind", "map")
    if kind == "from_point":
        return FromPoint()
    if kind == "iota2":
        return Iota2Power(int(_need(obj, "power", "map")))
    if kind == "iota1":
        return Iota1Power(
            int(_need(obj, "power", "map")), bool(_need(obj, "after_iota3", "map"))
        )
    raise MalformedInput(f"unknown map kind {kind!r}")


def diagram_from_json(text: str) -> ColimitDiagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedInput(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict):
        raise MalformedInput("diagram must be a JSON object")
    partition = Partition(
        tuple(tuple(str(v) for v in b) for b in _need(obj, "partition", "file"))
    )
    nodes = []
    for n in _need(obj, "nodes", "file"):
        blocks = tuple(
            BlockLabel(
                int(_need(f, "block", "node factor")),
                _factor_from_json(_need(f, "factor", "node factor")),
                tuple(str(v) for v in _need(f, "cp_vertices", "node factor")),
                tuple(str(v) for v in _need(f, "lie_vertices", "node factor")),
            )
            for f in _need(n, "factors", "node")
        )
        nodes.append(
            DiagramNode(
                str(_need(n, "name", "node")),
                tuple(str(v) for v in _need(n, "simplex", "node")),
                blocks,
            )
        )
    edges = []
    for e in _need(obj, "edges", "file"):
        maps = tuple(
            BlockMap(
                int(_need(m, "block", "edge map")),
                _lie_from_json(_need(m, "lie", "edge map")),
                None
                if m.get("cp") is None
                else CPInclusion(
                    tuple(str(v) for v in _need(m["cp"], "source", "cp map")),
                    tuple(str(v) for v in _need(m["cp"], "target", "cp map")),
                ),
            )
            for m in _need(e, "maps", "edge")
        )
        gmap = _need(e, "generator_map", "edge")
        label = EdgeLabel(
            tuple(str(v) for v in _need(e, "source", "edge")),
            tuple(str(v) for v in _need(e, "target", "edge")),
            maps,
            tuple(
                (v, None if gmap[v] is None else str(gmap[v]))
                for v in sorted(gmap)
            ),
        )
        edges.append(
            DiagramEdge(str(_need(e, "from", "edge")), str(_need(e, "to", "edge")), label)
        )
    return ColimitDiagram(partition, tuple(nodes), tuple(edges))
