"""Command-line surface: build complexes, run property checks with
certificates, sweep graph families, and replay certificates.

Exit codes: 0 completed (verdicts may still be false), 2 parse/usage error,
3 a search budget ran out, 4 an internal cross-check mismatch.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
import time
from pathlib import Path

from . import __version__
from .complexes import (
    SimplicialComplex,
    complex_from_json_dict,
    f_vector,
    ind_r,
)
from .decompose import (
    DEFAULT_SHELL_BUDGET,
    DEFAULT_VD_BUDGET,
    is_shellable,
    is_vertex_decomposable,
    verify_certificate,
    verify_shedding_certificate,
    verify_shelling_certificate,
)
from .graphs import (
    CaterpillarSpec,
    Graph,
    GraphParseError,
    complete_graph,
    cycle_graph,
    demo_graph,
    enumerate_trees,
    half_apex_clique,
    is_caterpillar,
    make_caterpillar,
    parse_edge_list,
    parse_graph_json,
    path_graph,
    star_graph,
    twin_bridge_paths,
)
from .homology import field_name, is_cohen_macaulay, is_scm, parse_field, reduced_homology
from .hypergraphs import DEFAULT_MINOR_BUDGET, con_r, is_chordal_hypergraph
from .ideals import (
    DEFAULT_SPLIT_BUDGET,
    CrossCheckError,
    alexander_dual_ideal,
    dual_of_ind,
    is_vertex_splittable,
    stanley_reisner,
    verify_split_certificate,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_CROSSCHECK = 4

ENV_PREFIX = "RINDEP_"

ALL_PROPS = ("vd", "shellable", "cm", "scm", "homology", "splittable", "chordal-hypergraph")


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(ENV_PREFIX + name)
    return int(raw) if raw else fallback


def _env_str(name: str, fallback: str) -> str:
    return os.environ.get(ENV_PREFIX + name, fallback)


def build_generator(token: str) -> Graph:
    """Named graph generators: fig1, path:n, cycle:n, complete:n, star:n,
    caterpillar:m1,...,ml, H:r, G:r."""
    name, _, arg = token.partition(":")
    try:
        if name == "fig1":
            return demo_graph()
        if name == "path":
            return path_graph(int(arg))
        if name == "cycle":
            return cycle_graph(int(arg))
        if name == "complete":
            return complete_graph(int(arg))
        if name == "star":
            return star_graph(int(arg))
        if name == "caterpillar":
            counts = tuple(int(x) for x in arg.split(","))
            return make_caterpillar(CaterpillarSpec(len(counts), counts))
        if name == "H":
            return half_apex_clique(int(arg))
        if name == "G":
            return twin_bridge_paths(int(arg))
    except ValueError as exc:
        raise GraphParseError(f"bad generator argument {token!r}: {exc}") from exc
    raise GraphParseError(f"unknown generator {token!r}")


def load_graph(path: str, fmt: str) -> Graph:
    text = Path(path).read_text()
    if fmt == "auto":
        fmt = "json" if path.endswith(".json") else "edgelist"
    if fmt == "json":
        return parse_graph_json(text)
    return parse_edge_list(text)


def _graph_input(args) -> tuple[Graph, dict]:
    if args.gen:
        return build_generator(args.gen), {"kind": "generator", "source": args.gen}
    if not args.input:
        raise GraphParseError("no input: give --gen or --input")
    graph = load_graph(args.input, args.format)
    return graph, {"kind": "graph-file", "source": args.input}


def _emit(payload, out: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_build(args) -> int:
    graph, _ = _graph_input(args)
    if args.r < 1:
        raise GraphParseError("r must be a positive integer")
    _emit(ind_r(graph, args.r).to_json_dict(), args.out)
    return EXIT_OK


def _budgets(args) -> dict[str, int]:
    return {
        "vd": args.budget_vd,
        "shell": args.budget_shell,
        "minor": args.budget_minor,
        "split": args.budget_split,
    }


def run_checks(
    complex_: SimplicialComplex,
    props: list[str],
    budgets: dict[str, int],
    field: int | None,
    graph: Graph | None = None,
    r: int | None = None,
) -> dict:
    """Run the requested property checks and assemble the report blocks.

    ``graph`` and ``r`` enable the graph-level checks (the hypergraph route
    of the splittable check and hypergraph chordality)."""
    verdicts: dict[str, str] = {}
    certificates: dict[str, object] = {}
    witnesses: dict[str, object] = {}
    extras: dict[str, object] = {}
    timings: dict[str, float] = {}

    def record(prop: str, value: bool | None) -> None:
        verdicts[prop] = "budget-exceeded" if value is None else str(value).lower()

    for prop in props:
        start = time.perf_counter()
        if prop == "vd":
            res = is_vertex_decomposable(complex_, budgets["vd"])
            record(prop, res.decomposable)
            if res.decomposable:
                assert verify_shedding_certificate(complex_, res.certificate)
                certificates["vd"] = res.certificate.to_json_dict()
        elif prop == "shellable":
            res = is_shellable(complex_, budgets["shell"])
            record(prop, res.shellable)
            if res.shellable:
                assert verify_shelling_certificate(complex_, res.order)
                certificates["shellable"] = [sorted(f) for f in res.order]
        elif prop == "cm":
            rep = is_cohen_macaulay(complex_, field)
            record(prop, rep.cohen_macaulay)
            if not rep.cohen_macaulay:
                witnesses["cm"] = rep.to_json_dict()
        elif prop == "scm":
            rep = is_scm(complex_, field)
            record(prop, rep.sequentially_cohen_macaulay)
            extras["scm"] = rep.to_json_dict()
            if not rep.sequentially_cohen_macaulay:
                first_bad = rep.failing_dimensions()[0]
                bad = dict(rep.skeletons)[first_bad]
                witnesses["scm"] = {"m": first_bad, **bad.to_json_dict()}
        elif prop == "homology":
            profile = reduced_homology(complex_, field)
            extras["betti"] = {"field": profile.field, "reduced": list(profile.reduced)}
            extras["f_vector"] = f_vector(complex_)
        elif prop == "splittable":
            sr = stanley_reisner(complex_)
            if sr.is_zero:
                # full simplex: zero ideal and the unit ideal are both split
                # base cases, so the verdict is true without taking a dual
                record(prop, True)
                extras["splittable"] = {"note": "stanley-reisner ideal is zero (simplex)"}
            else:
                if graph is not None and r is not None:
                    dual = dual_of_ind(graph, r)  # cross-checks both routes
                else:
                    dual = alexander_dual_ideal(sr)
                res = is_vertex_splittable(dual, budgets["split"])
                record(prop, res.splittable)
                extras["splittable"] = {"dual_ideal": dual.to_json_dict()}
                if res.splittable:
                    assert verify_split_certificate(dual, res.certificate)
                    certificates["splittable"] = res.certificate.to_json_dict()
        elif prop == "chordal-hypergraph":
            if graph is None or r is None:
                raise GraphParseError("chordal-hypergraph needs a graph input and r")
            res = is_chordal_hypergraph(con_r(graph, r), budgets["minor"])
            record(prop, res.chordal)
            extras["chordal-hypergraph"] = {"minors_visited": res.minors_visited}
            if res.chordal is False:
                witnesses["chordal-hypergraph"] = res.witness.to_json_dict()
        else:
            raise GraphParseError(f"unknown property {prop!r}")
        timings[prop] = round(time.perf_counter() - start, 6)

    report = {
        "schema_version": 1,
        "tool": {"name": "rindep", "version": __version__},
        "field": field_name(field),
        "verdicts": verdicts,
    }
    if certificates:
        report["certificates"] = certificates
    if witnesses:
        report["witnesses"] = witnesses
    report.update(extras)
    report["timings"] = timings
    return report


def _parse_props(raw: str) -> list[str]:
    props = [p.strip() for p in raw.split(",") if p.strip()]
    for p in props:
        if p not in ALL_PROPS:
            raise GraphParseError(f"unknown property {p!r}; known: {', '.join(ALL_PROPS)}")
    return props


def cmd_check(args) -> int:
    field = parse_field(args.field)
    props = _parse_props(args.props)
    if args.complex:
        complex_ = complex_from_json_dict(json.loads(Path(args.complex).read_text()))
        graph, r = None, None
        input_desc = {"kind": "complex-file", "source": args.complex}
    else:
        graph, input_desc = _graph_input(args)
        r = args.r
        if r is None or r < 1:
            raise GraphParseError("--r is required (a positive integer) for graph inputs")
        complex_ = ind_r(graph, r)
    blocks = run_checks(complex_, props, _budgets(args), field, graph, r)
    report = {
        "schema_version": blocks.pop("schema_version"),
        "tool": blocks.pop("tool"),
        "input": {**input_desc, "r": r},
    }
    report.update(blocks)
    _emit(report, args.out)
    if any(v == "budget-exceeded" for v in report["verdicts"].values()):
        return EXIT_BUDGET
    return EXIT_OK


# ---------------------------------------------------------------------------
# scan


def _scan_payloads(args) -> list[dict]:
    lo, _, hi = args.r.partition("..")
    r_lo, r_hi = int(lo), int(hi) if hi else int(lo)
    budgets = _budgets(args)
    payloads = []
    for n in range(1, args.n + 1):
        index = 0
        for tree in enumerate_trees(n):
            if args.family == "caterpillars" and not is_caterpillar(tree):
                continue
            for r in range(r_lo, r_hi + 1):
                payloads.append(
                    {
                        "family": args.family,
                        "n": n,
                        "index": index,
                        "r": r,
                        "vertices": list(tree.vertices),
                        "edges": [list(e) for e in tree.sorted_edges()],
                        "props": _parse_props(args.props),
                        "budgets": budgets,
                        "field": args.field,
                    }
                )
            index += 1
    return payloads


def _scan_worker(payload: dict) -> dict:
    graph = Graph.from_edges(payload["vertices"], payload["edges"])
    r = payload["r"]
    field = parse_field(payload["field"])
    complex_ = ind_r(graph, r)
    report = run_checks(complex_, payload["props"], payload["budgets"], field, graph, r)
    line = {
        "family": payload["family"],
        "n": payload["n"],
        "index": payload["index"],
        "r": r,
        "edges": payload["edges"],
        "verdicts": report["verdicts"],
    }
    certified = {}
    for prop in ("vd", "shellable", "splittable"):
        if report["verdicts"].get(prop) == "true":
            has_cert = prop in report.get("certificates", {})
            if prop == "splittable" and not has_cert:
                has_cert = "note" in report.get("splittable", {})
            certified[prop] = has_cert
    if certified:
        line["certified"] = certified
    return line


def cmd_scan(args) -> int:
    payloads = _scan_payloads(args)
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            lines = list(pool.map(_scan_worker, payloads, chunksize=1))
    else:
        lines = [_scan_worker(p) for p in payloads]
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        counts: dict[str, dict[str, int]] = {}
        counterexamples = []
        budget_hits = 0
        for line in lines:
            print(json.dumps(line, separators=(",", ":")), file=out)
            for prop, verdict in line["verdicts"].items():
                counts.setdefault(prop, {})[verdict] = (
                    counts.setdefault(prop, {}).get(verdict, 0) + 1
                )
                if verdict == "false":
                    counterexamples.append(
                        {"n": line["n"], "index": line["index"], "r": line["r"], "prop": prop}
                    )
                elif verdict == "budget-exceeded":
                    budget_hits += 1
        summary = {
            "summary": {
                "items": len(lines),
                "verdicts": counts,
                "counterexamples": counterexamples,
                "budget_exceeded": budget_hits,
            }
        }
        print(json.dumps(summary, separators=(",", ":")), file=out)
    finally:
        if args.out:
            out.close()
    return EXIT_BUDGET if budget_hits else EXIT_OK


def cmd_verify(args) -> int:
    try:
        complex_ = complex_from_json_dict(json.loads(Path(args.complex).read_text()))
        cert = json.loads(Path(args.certificate).read_text())
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    ok = verify_certificate(complex_, cert)
    print("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_INVALID


# ---------------------------------------------------------------------------
# argument parsing


def _add_input_args(p: argparse.ArgumentParser, with_complex: bool = False) -> None:
    p.add_argument("--gen", help="named generator, e.g. fig1, path:7, caterpillar:1,2,1,1, H:2, G:3")
    p.add_argument("--input", help="graph file (edge list or JSON)")
    p.add_argument("--format", choices=("auto", "edgelist", "json"), default="auto")
    if with_complex:
        p.add_argument("--complex", help="complex JSON file instead of a graph")


def _add_budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget-vd", type=int, default=_env_int("BUDGET_VD", DEFAULT_VD_BUDGET))
    p.add_argument("--budget-shell", type=int, default=_env_int("BUDGET_SHELL", DEFAULT_SHELL_BUDGET))
    p.add_argument("--budget-minor", type=int, default=_env_int("BUDGET_MINOR", DEFAULT_MINOR_BUDGET))
    p.add_argument("--budget-split", type=int, default=_env_int("BUDGET_SPLIT", DEFAULT_SPLIT_BUDGET))
    p.add_argument("--field", default=_env_str("FIELD", "q"), help="q or gf:p")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rindep", description=__doc__)
    parser.add_argument("--version", action="version", version=f"rindep {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="emit the facets of the r-independence complex")
    _add_input_args(p_build)
    p_build.add_argument("--r", type=int, required=True)
    p_build.add_argument("--out")
    p_build.set_defaults(func=cmd_build)

    p_check = sub.add_parser("check", help="run property checks and emit a report")
    _add_input_args(p_check, with_complex=True)
    p_check.add_argument("--r", type=int)
    p_check.add_argument("--props", required=True, help=f"comma list of {', '.join(ALL_PROPS)}")
    _add_budget_args(p_check)
    p_check.add_argument("--out")
    p_check.set_defaults(func=cmd_check)

    p_scan = sub.add_parser("scan", help="sweep a graph family, one JSON line per (graph, r)")
    p_scan.add_argument("--family", choices=("trees", "caterpillars"), required=True)
    p_scan.add_argument("--n", type=int, required=True, help="maximum vertex count")
    p_scan.add_argument("--r", required=True, help="range like 1..3 or a single value")
    p_scan.add_argument("--props", required=True)
    p_scan.add_argument("--jobs", type=int, default=1)
    _add_budget_args(p_scan)
    p_scan.add_argument("--out")
    p_scan.set_defaults(func=cmd_scan)

    p_verify = sub.add_parser("verify", help="replay a certificate against a complex")
    p_verify.add_argument("complex", help="complex JSON file")
    p_verify.add_argument("certificate", help="certificate JSON file")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CrossCheckError as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK


if __name__ == "__main__":
    sys.exit(main())
