"""Command line interface.

Subcommands: check, construct, verify, partition, obstruct, prime.  Input is
a JSON complex from a file argument or stdin ("-").  Structured output is
JSON unless --format selects text or dot.

Exit codes: 0 realizable (or success), 10 sufficient-only, 20 not realizable,
30 unknown, 40 hypothesis violated, 1 verification discrepancy or no
partition, 2 malformed input or invalid complex.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .admissible import (
    AdmissibleClass,
    AdemP3,
    Exceptional,
    Inadmissible,
    MultipleDegree4,
    ObstructionReason,
    SpType,
    SUType,
    TableMiss,
    ThomasRank,
    Torus,
    class_degrees,
    dirichlet_prime,
)
from .complexes import ComplexError, ComplexWithDegrees, complex_from_json, pmax
from .decide import (
    HypothesisViolated,
    NotRealizable,
    Partition,
    Realizable,
    SufficientOnly,
    Unknown,
    Verdict,
    find_partition,
    full_report,
)
from .diagram import ColimitDiagram, build_diagram, diagram_from_json, emit_dot, emit_json
from .verify import verify_construction

EXIT_REALIZABLE = 0
EXIT_SUFFICIENT = 10
EXIT_NOT_REALIZABLE = 20
EXIT_UNKNOWN = 30
EXIT_HYPOTHESIS = 40
EXIT_INPUT_ERROR = 2


def reason_to_json(r: ObstructionReason) -> dict:
    if isinstance(r, ThomasRank):
        return {
            "kind": "ThomasRank",
            "target": r.target_degree,
            "i": r.i,
            "source": r.source_degree,
            "dimSource": r.dim_source,
            "dimTarget": r.dim_target,
        }
    if isinstance(r, AdemP3):
        return {"kind": "AdemP3"}
    if isinstance(r, TableMiss):
        return {"kind": "TableMiss"}
    return {"kind": "MultipleDegree4"}


def reason_to_text(r: ObstructionReason) -> str:
    if isinstance(r, ThomasRank):
        return (
            f"ThomasRank target {r.target_degree} source {r.source_degree} "
            f"dims {r.dim_source}<{r.dim_target}"
        )
    return reason_to_json(r)["kind"]


def class_to_json(cls: AdmissibleClass) -> dict:
    if isinstance(cls, Inadmissible):
        return {"family": "Inadmissible", "reason": reason_to_json(cls.reason)}
    base: dict = {}
    if isinstance(cls, Torus):
        base = {"family": "Torus"}
    elif isinstance(cls, SUType):
        base = {"family": "SU", "n": cls.n}
    elif isinstance(cls, SpType):
        base = {"family": "Sp", "n": cls.n}
    elif isinstance(cls, Exceptional):
        base = {"family": "Exceptional", "n": cls.n}
    base["k2"] = cls.k2
    base["degrees"] = list(class_degrees(cls))
    return base


def class_to_text(cls: AdmissibleClass) -> str:
    if isinstance(cls, Inadmissible):
        return f"inadmissible: {reason_to_text(cls.reason)}"
    j = class_to_json(cls)
    return f"{j['family']} degrees {j['degrees']}"


def verdict_to_json(v: Verdict) -> dict:
    if isinstance(v, Realizable):
        return {
            "verdict": "Realizable",
            "partition": [list(b) for b in v.partition.blocks],
            "per_sigma": [
                {"simplex": sorted(s), "class": class_to_json(cls)}
                for s, cls in v.per_sigma
            ],
        }
    if isinstance(v, SufficientOnly):
        return {
            "verdict": "SufficientOnly",
            "partition": [list(b) for b in v.partition.blocks],
        }
    if isinstance(v, NotRealizable):
        if isinstance(v.reason, Exceptional):
            reason = {"kind": "FamilyMismatch", "class": class_to_json(v.reason)}
        else:
            reason = reason_to_json(v.reason)
        return {
            "verdict": "NotRealizable",
            "witness": sorted(v.witness),
            "reason": reason,
        }
    if isinstance(v, HypothesisViolated):
        return {
            "verdict": "HypothesisViolated",
            "pair": list(v.pair),
            "shared_power_degree": v.shared_power_degree,
        }
    return {"verdict": "Unknown"}


def verdict_exit(v: Verdict) -> int:
    if isinstance(v, Realizable):
        return EXIT_REALIZABLE
    if isinstance(v, SufficientOnly):
        return EXIT_SUFFICIENT
    if isinstance(v, NotRealizable):
        return EXIT_NOT_REALIZABLE
    if isinstance(v, HypothesisViolated):
        return EXIT_HYPOTHESIS
    return EXIT_UNKNOWN


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _default_truncation(c: ComplexWithDegrees) -> int:
    top = max((v.degree for v in c.vertices), default=2)
    return 6 * top


def _verdict_partition(v: Verdict) -> Partition | None:
    if isinstance(v, Realizable):
        return v.partition
    if isinstance(v, SufficientOnly):
        return v.partition
    return None


def cmd_check(args: argparse.Namespace) -> int:
    c = complex_from_json(_read_input(args.input))
    verdict = full_report(c)
    if args.format == "json":
        out = json.dumps(verdict_to_json(verdict), indent=2) + "\n"
    else:
        j = verdict_to_json(verdict)
        lines = [j["verdict"]]
        if "partition" in j:
            lines.append(f"partition: {j['partition']}")
        if "witness" in j:
            lines.append(f"witness: {j['witness']} reason: {json.dumps(j['reason'])}")
        if "pair" in j:
            lines.append(
                f"pair: {j['pair']} shared degree {j['shared_power_degree']}"
            )
        out = "\n".join(lines) + "\n"
    _write_output(out, args.output)
    return verdict_exit(verdict)


def cmd_construct(args: argparse.Namespace) -> int:
    c = complex_from_json(_read_input(args.input))
    verdict = full_report(c)
    partition = _verdict_partition(verdict)
    if partition is None:
        sys.stderr.write(
            f"no diagram: verdict is {verdict_to_json(verdict)['verdict']}\n"
        )
        return verdict_exit(verdict)
    diagram = build_diagram(c, partition)
    out = emit_dot(diagram) if args.format == "dot" else emit_json(diagram)
    _write_output(out, args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    c = complex_from_json(_read_input(args.input))
    diagram: ColimitDiagram
    if args.diagram is not None:
        with open(args.diagram, "r", encoding="utf-8") as fh:
            diagram = diagram_from_json(fh.read())
    else:
        verdict = full_report(c)
        partition = _verdict_partition(verdict)
        if partition is None:
            sys.stderr.write(
                f"no diagram: verdict is {verdict_to_json(verdict)['verdict']}\n"
            )
            return verdict_exit(verdict)
        diagram = build_diagram(c, partition)
    truncation = args.max_degree
    if truncation is None:
        truncation = _default_truncation(c)
    report = verify_construction(c, diagram, truncation)
    if args.format == "json":
        out = json.dumps(report.to_json_dict(), indent=2) + "\n"
    else:
        out = report.to_text()
    _write_output(out, args.output)
    return 0 if report.passed else 1


def cmd_partition(args: argparse.Namespace) -> int:
    c = complex_from_json(_read_input(args.input))
    part = find_partition(c)
    if args.format == "json":
        obj = {"partition": None if part is None else [list(b) for b in part.blocks]}
        out = json.dumps(obj, indent=2) + "\n"
    else:
        out = ("none" if part is None else
               " | ".join(",".join(b) for b in part.blocks)) + "\n"
    _write_output(out, args.output)
    return 0 if part is not None else 1


def cmd_obstruct(args: argparse.Namespace) -> int:
    from .admissible import classify

    c = complex_from_json(_read_input(args.input))
    entries = []
    for s in pmax(c).elements:
        ms = c.degree_multiset(s)
        entries.append((sorted(s), ms, classify(ms)))
    if args.format == "json":
        obj = {
            "sigmas": [
                {"simplex": ids, "multiset": list(ms), "class": class_to_json(cls)}
                for ids, ms, cls in entries
            ]
        }
        out = json.dumps(obj, indent=2) + "\n"
    else:
        lines = [
            f"sigma {ids}: multiset {list(ms)} -> {class_to_text(cls)}"
            for ids, ms, cls in entries
        ]
        out = "\n".join(lines) + "\n"
    _write_output(out, args.output)
    return 0


def cmd_prime(args: argparse.Namespace) -> int:
    extras = args.extra or []
    p = dirichlet_prime(extras, args.gt)
    moduli = [16, 3, 5, 7] + list(extras)
    if args.format == "json":
        obj = {"prime": p, "residues": {str(m): p % m for m in moduli}}
        out = json.dumps(obj, indent=2) + "\n"
    else:
        residues = ", ".join(f"mod {m} = {p % m}" for m in moduli)
        out = f"{p} ({residues})\n"
    _write_output(out, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srrealize",
        description="Decide whether a graded Stanley-Reisner ring is an "
        "integral cohomology ring, build the witnessing colimit diagram, "
        "and verify it at Hilbert-function level.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
        p.add_argument("input", nargs="?", default="-",
                       help="input JSON file, or - for stdin")
        p.add_argument("-o", "--output", default=None, help="output file")
        p.add_argument("--format", choices=list(formats), default=formats[0])

    p = sub.add_parser("check", help="print the realizability verdict")
    add_common(p, ("json", "text"))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", help="emit the colimit diagram")
    add_common(p, ("json", "dot"))
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify the construction dimensionwise")
    add_common(p, ("json", "text"))
    p.add_argument("--max-degree", type=int, default=None,
                   help="even truncation degree (default: 6 x top degree)")
    p.add_argument("--diagram", default=None,
                   help="verify this diagram JSON instead of rebuilding")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("partition", help="search for an admissible partition")
    add_common(p, ("json", "text"))
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("obstruct", help="classify every poset element")
    add_common(p, ("json", "text"))
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("prime", help="smallest prime in the congruence class")
    p.add_argument("--gt", type=int, default=0, help="lower bound (exclusive)")
    p.add_argument("--extra", type=int, action="append", default=None,
                   help="extra prime q > 7 forcing p = 2 mod q (repeatable)")
    p.add_argument("-o", "--output", default=None, help="output file")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_prime)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ComplexError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR
    except OSError as e:
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
