"""Command-line front end: ``scm-lab {analyze,verify,betti,examples,enumerate}``.

Exit codes: 0 pass, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import graphs as gs
from .homology import boundary_matrices
from .invariants import InvariantReport, analyze_ideal, betti_table
from .lab import (
    CorpusSpec,
    TheoremId,
    audit_fields,
    default_workers,
    family_members,
    run_paper_examples,
    verify,
)
from .linalg import FieldSpec
from .monomial import MonomialIdeal, load_ideal, polarize, stanley_reisner

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class GraphReport(InvariantReport):
    kind: str = "graph"
    n: int = 0
    edges: list[list[int]] = field(default_factory=list)
    a: int = 0
    matching_number: int = 0
    shedding_vertices: list[int] = field(default_factory=list)
    codominated_vertices: list[int] = field(default_factory=list)
    basic_5_cycles: list[list[int]] = field(default_factory=list)
    families: dict[str, bool] = field(default_factory=dict)


def analyze_graph(g: gs.Graph, fld: FieldSpec, object_id: str | None = None) -> GraphReport:
    base = analyze_ideal(g.edge_ideal(), fld, object_id or g.to_graph6())
    fams = {
        "connected": g.is_connected(),
        "chordal": gs.is_chordal(g),
        "bipartite": gs.is_bipartite(g),
        "c5_free": gs.is_c5_free(g),
        "vertex_decomposable": gs.is_vertex_decomposable(g),
        "cameron_walker": g.num_edges > 0 and gs.is_cameron_walker(g),
        "well_covered": gs.is_well_covered(g),
        "very_well_covered": gs.is_very_well_covered(g),
    }
    fams.update({f"reg_a_family_{k}": v for k, v in family_members(g, fld).items()})
    return GraphReport(
        **base.__dict__,
        n=g.n,
        edges=[[a + 1, b + 1] for a, b in g.edges()],
        a=gs.induced_matching_number(g),
        matching_number=gs.matching_number(g),
        shedding_vertices=[x + 1 for x in gs.shedding_vertices(g)],
        codominated_vertices=[x + 1 for x in gs.codominated_vertices(g)],
        basic_5_cycles=[[v + 1 for v in c] for c in gs.basic_five_cycles(g)],
        families=fams,
    )


def report_from_json(data: dict) -> InvariantReport:
    if data.get("kind") == "graph":
        return GraphReport(**data)
    return InvariantReport.from_json(data)


def render_report(rep: InvariantReport) -> str:
    lines = [f"object: {rep.object_id}", f"field: {rep.field}"]
    if isinstance(rep, GraphReport):
        lines.append(f"graph: n={rep.n}, edges={' '.join(f'{a}{b}' if rep.n < 10 else f'{a}-{b}' for a, b in rep.edges)}")
    lines += [
        f"dim(R/I) = {rep.dim}",
        f"depth(R/I) = {rep.depth}",
        f"pd(R/I) = {rep.pd}",
        f"reg(R/I) = {rep.reg}",
        f"CM: {rep.is_cm}   SCM: {rep.is_scm}   unmixed: {rep.is_unmixed}",
    ]
    if rep.ass is not None:
        lines.append("Ass(I) = {" + ", ".join("(" + ",".join(f"x{v}" for v in p) + ")" for p in rep.ass) + "}")
    if isinstance(rep, GraphReport):
        fmt = lambda vs: ", ".join(f"x{v}" for v in vs) or "-"
        lines += [
            f"a(G) = {rep.a}   matching number = {rep.matching_number}",
            f"shedding vertices: {fmt(rep.shedding_vertices)}",
            f"codominated vertices: {fmt(rep.codominated_vertices)}",
            "basic 5-cycles: " + ("; ".join("(" + ",".join(f"x{v}" for v in c) + ")" for c in rep.basic_5_cycles) or "-"),
            "families: " + ", ".join(k for k, v in rep.families.items() if v and not k.startswith("reg_a_")),
        ]
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# input


def _read_input(args) -> str:
    if args.inline is not None:
        return args.inline.replace("\\n", "\n")
    if args.input in (None, "-"):
        return sys.stdin.read()
    with open(args.input, encoding="utf-8") as fh:
        return fh.read()


def _load_object(args):
    text = _read_input(args)
    fmt = args.format
    try:
        if fmt == "ideal":
            return load_ideal(text)
        if fmt == "json" and '"gens"' in text:
            return load_ideal(text)
        if fmt == "auto" and "x" in text.split("#")[0]:
            return load_ideal(text)
        if fmt == "auto" and '"gens"' in text:
            return load_ideal(text)
        return gs.load_graph(text, fmt)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(f"parse error: {exc}") from None


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(args) -> int:
    obj = _load_object(args)
    if isinstance(obj, MonomialIdeal):
        if obj.is_unit:
            raise UsageError("the unit ideal is excluded")
        rep = analyze_ideal(obj, args.field)
        complex_ = stanley_reisner(obj if obj.is_squarefree else polarize(obj)[0])
    else:
        rep = analyze_graph(obj, args.field)
        complex_ = obj.independence_complex()
    if args.output == "json":
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True))
    else:
        print(render_report(rep))
    if args.dump_matrices and not complex_.is_void:
        print(boundary_matrices(complex_, args.field).dump())
    return EXIT_OK


def cmd_betti(args) -> int:
    obj = _load_object(args)
    ideal = obj if isinstance(obj, MonomialIdeal) else obj.edge_ideal()
    if ideal.is_unit:
        raise UsageError("the unit ideal is excluded")
    table = betti_table(ideal, args.field)
    if args.output == "json":
        print(json.dumps(table.to_json(), sort_keys=True))
    else:
        print(table.render())
        print(f"reg(R/I) = {table.reg}, pd(R/I) = {table.pd}, depth(R/I) = {table.depth}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    from .enumeration import enumerate_graphs

    try:
        for g in enumerate_graphs(args.n, args.connected):
            print(g.to_graph6())
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_examples(args) -> int:
    report = run_paper_examples(args.field)
    _emit_reports([report], args)
    return EXIT_OK if report.passed else EXIT_FAIL


def _corpus_from_args(args) -> CorpusSpec:
    spec = CorpusSpec(
        max_n=args.max_n,
        min_n=args.min_n,
        connected=args.connected,
        filters=tuple(args.filter or ()),
        random_ideals=args.random_ideals,
        ideal_max_n=args.ideal_max_n,
        seed=args.seed,
    )
    if args.graph6_file:
        spec.source, spec.path = "graph6", args.graph6_file
    elif args.graph6 or args.ideal_json:
        spec.source = "list"
        spec.graphs = [gs.from_graph6(s) for s in args.graph6 or ()]
        spec.ideals = [MonomialIdeal.from_json(json.loads(s)) for s in args.ideal_json or ()]
        spec.random_ideals = 0
    return spec


def cmd_verify(args) -> int:
    try:
        theorems = [TheoremId.parse(t) for t in args.theorem]
        corpus = _corpus_from_args(args)
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(str(exc)) from None
    if args.audit:
        audit = audit_fields(theorems, corpus, workers=args.workers)
        reports = [r for by_field in audit.reports.values() for r in by_field.values()]
        _emit_reports(reports, args, extra={"discrepancies": audit.discrepancies})
        return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL
    reports = [verify(t, corpus, args.field, args.workers) for t in theorems]
    _emit_reports(reports, args)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _emit_reports(reports, args, extra: dict | None = None):
    if args.output == "json":
        payload = {"reports": [r.to_json() for r in reports]}
        payload.update(extra or {})
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
        return
    for r in reports:
        print(r.summary())
        for f in r.failures:
            tag = f" [{f['tag']}]" if "tag" in f else ""
            print(f"  FAIL{tag} {f['object']}: expected {f['expected']}, got {f['got']}")
            print(f"       reproduce: {f['repro']}")
    if extra and "discrepancies" in extra:
        disc = extra["discrepancies"]
        print(f"field discrepancies: {len(disc)}")
        for d in disc:
            print(f"  {d}")


# ---------------------------------------------------------------------------
# parser


def _field_arg(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=FieldSpec(0), help="q (default), 2, or p:<prime>")
    common.add_argument("--output", choices=("text", "json"), default="text")
    common.add_argument("--workers", type=int, default=default_workers())
    common.add_argument("--seed", type=int, default=0)

    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("input", nargs="?", help="input file ('-' or omitted: stdin)")
    src.add_argument("--inline", help="input given on the command line ('\\n' separates lines)")
    src.add_argument("--format", choices=("auto", "graph6", "edges", "json", "ideal"), default="auto")

    p = argparse.ArgumentParser(prog="scm-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common, src], help="invariant report for one graph or ideal")
    a.add_argument("--dump-matrices", action="store_true", help="print boundary matrices of the complex")
    a.set_defaults(func=cmd_analyze)

    b = sub.add_parser("betti", parents=[common, src], help="graded Betti table")
    b.set_defaults(func=cmd_betti)

    v = sub.add_parser("verify", parents=[common], help="check theorems over a corpus")
    v.add_argument("--theorem", action="append", required=True, help="theorem id, repeatable")
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--min-n", type=int, default=1)
    v.add_argument("--connected", action="store_true")
    v.add_argument("--graph6-file")
    v.add_argument("--graph6", action="append", help="inline graph6 string, repeatable")
    v.add_argument("--ideal-json", action="append", help="inline ideal JSON, repeatable")
    v.add_argument("--filter", action="append", help="family filter, repeatable")
    v.add_argument("--random-ideals", type=int, default=200)
    v.add_argument("--ideal-max-n", type=int, default=5)
    v.add_argument("--audit", action="store_true", help="run over QQ and GF(2) and compare")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("examples", parents=[common], help="worked-example regression suite")
    e.set_defaults(func=cmd_examples)

    n = sub.add_parser("enumerate", parents=[common], help="graph6 stream of isomorphism classes")
    n.add_argument("n", type=int)
    n.add_argument("--connected", action="store_true")
    n.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    env_seed = os.environ.get("SCMLAB_SEED")
    if env_seed is not None:
        try:
            args.seed = int(env_seed)
        except ValueError:
            print(f"scm-lab: SCMLAB_SEED must be an integer, got {env_seed!r}", file=sys.stderr)
            return EXIT_USAGE
    try:
        code = args.func(args)
        sys.stdout.flush()
        return code
    except UsageError as exc:
        print(f"scm-lab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        # reader went away (e.g. piped into head); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
