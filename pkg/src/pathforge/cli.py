"""Command-line driver: generators, solvers, searches, pipelines, and
certificate verification, wired for shell pipelines.

Graphs stream as edge-list text on stdin/stdout by default (graph6 with
--format graph6).  Exit codes: 0 success or positive answer, 1 negative
answer, 2 step budget exhausted, 3 malformed input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .budget import Budget, BudgetExhausted
from . import extract, generators, io, minors, patterns, width
from .certificates import parse_certificate, verify_certificate, write_certificate
from .graph import Graph, RootedTree, induced_subgraph
from .patterns import LineGraphEmbedding, line_graph_embedding_as_embedding

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BUDGET = 2
EXIT_INPUT = 3


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_graph(path: str | None, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "graph6":
        return io.graph6_decode(text)
    return io.parse_edge_list(text)


def _graph_from_file(path: str) -> Graph:
    return _read_graph(path, "graph6" if path.endswith(".g6") else "edge-list")


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _write_graph(g: Graph, path: str | None, fmt: str) -> None:
    if fmt == "graph6":
        _write_text(path, io.graph6_encode(g) + "\n")
    else:
        _write_text(path, io.format_edge_list(g))


def _budget(args) -> Budget:
    if getattr(args, "budget", None) is not None:
        return Budget(args.budget)
    return Budget.from_env()


def _emit(args, lines: list[str], payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _save_cert(path: str, obj, graph: Graph | None = None,
               companions: dict[str, Graph] | None = None) -> None:
    _write_text(path, write_certificate(obj, graph))
    for name, g in (companions or {}).items():
        _write_text(f"{path}.{name}.el", io.format_edge_list(g))


def _figure(args, g: Graph, highlights=None, title: str | None = None) -> None:
    if getattr(args, "figure", None):
        from .report import render_graph

        render_graph(g, args.figure, highlights, title)


def _parse_ids(text: str) -> list[int]:
    return [int(tok) for tok in text.replace(",", " ").split()]


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_gen(args) -> int:
    fmt = args.format
    cert = None
    companions: dict[str, Graph] = {}
    highlights = None
    if args.family == "cbt":
        g = generators.complete_binary_tree(args.k).graph
    elif args.family == "cbt-plus":
        g = generators.binary_tree_plus(args.k).graph
    elif args.family == "kary":
        g = generators.k_ary_tree(args.k).graph
    elif args.family == "subdivide":
        base = _read_graph(args.infile, fmt)
        lengths = None
        if args.lengths:
            lengths = {}
            for item in args.lengths.split(","):
                edge, _, val = item.partition("=")
                u, v = (int(x) for x in edge.split("-"))
                lengths[(u, v)] = int(val)
        elif args.random_max:
            rng = random.Random(args.seed)
            lengths = {e: rng.randint(1, args.random_max) for e in base.edges()}
        elif args.length:
            lengths = args.length
        g, cert = generators.subdivide(base, lengths)
        companions = {"base": base}
    elif args.family == "net-replace":
        base = _read_graph(args.infile, fmt)
        g, info = generators.net_graph_replacement(base, args.vertex)
        highlights = {"triangle": frozenset(info["triangle"])}
    elif args.family == "wattle":
        triangles = _parse_ids(args.triangles) if args.triangles else ()
        g, cert = generators.wattle(args.k, args.length, triangles)
        companions = {"base": cert.base.graph}
        highlights = {"triangles": frozenset(x for v in cert.triangles
                                             for x in cert.structure(v))}
    elif args.family == "hat":
        g, branch, layering, cert = generators.hat_tree(args.k)
        companions = {"base": cert.base, "host": cert.host}
        highlights = {"branch-vertices": branch}
    else:
        raise AssertionError(args.family)
    _write_graph(g, args.out, fmt)
    if args.cert and cert is not None:
        _save_cert(args.cert, cert, companions=companions)
    _figure(args, g, highlights, f"gen {args.family}")
    return EXIT_OK


def _cmd_gen_linegraph(args) -> int:
    from .graph import line_graph

    base = _read_graph(args.infile, args.format)
    g, name = line_graph(base)
    _write_graph(g, args.out, args.format)
    if args.json:
        print(json.dumps({"edge_to_vertex": {f"{u} {v}": i for (u, v), i in name.items()}},
                         sort_keys=True))
    _figure(args, g, None, "line graph")
    return EXIT_OK


def _cmd_width(args) -> int:
    g = _read_graph(args.infile, args.format)
    if args.mode == "exact":
        value, pd = width.pathwidth_exact(g, max_vertices=args.max_vertices,
                                          budget=_budget(args))
    elif args.mode == "tree":
        value, pd = width.tree_pathwidth(g)
    else:  # lower
        pattern = _graph_from_file(args.pattern)
        cert = parse_certificate(_read_text(args.model))
        model = minors.MinorModel(pattern, g,
                                  {v: frozenset(xs) for v, xs in cert.sets.items()},
                                  cert.fields.get("induced") == "true")
        if args.pattern_width is not None:
            pw_t = args.pattern_width
        else:
            pw_t, _ = width.tree_pathwidth(pattern)
        value = width.pathwidth_lower_bound_by_minor(g, model, pw_t)
        pd = None
    _emit(args, [str(value)], {"width": value})
    if args.out and pd is not None:
        _save_cert(args.out, pd, g)
    if pd is not None:
        _figure(args, g, None, f"pathwidth {value}")
    return EXIT_OK


def _cmd_find(args) -> int:
    g = _read_graph(args.infile, args.format)
    budget = _budget(args)
    if args.what == "induced":
        pattern = _graph_from_file(args.pattern)
        result = patterns.find_induced_subgraph(g, pattern, budget)
        payload_key = "embedding"
    elif args.what == "subdivision":
        base = _graph_from_file(args.base)
        result = patterns.find_induced_subdivision(g, base, args.min_length,
                                                   induced=not args.plain, budget=budget)
        payload_key = "subdivision"
    elif args.what == "minor":
        pattern = _graph_from_file(args.pattern)
        result = minors.find_minor_model(g, pattern, budget)
        payload_key = "model"
    else:  # induced-minor
        pattern = _graph_from_file(args.pattern)
        result = minors.find_minor_model(g, pattern, budget, induced=True)
        payload_key = "model"
    if result is None:
        _emit(args, ["none"], {payload_key: None})
        return EXIT_NEGATIVE
    _emit(args, ["found"], {payload_key: "found"})
    if args.out:
        _save_cert(args.out, result)
    used = getattr(result, "image_vertices", None)
    if used is not None:
        _figure(args, g, {"image": used()}, f"find {args.what}")
    return EXIT_OK


def _cmd_recognize(args) -> int:
    g = _read_graph(args.infile, args.format)
    strictness = "strict" if args.strict else "inclusive"
    if args.n is not None:
        from .graph import complete_bipartite_graph, complete_graph

        if args.shape == "complete":
            target = complete_graph(args.n)
        elif args.shape == "complete-bipartite":
            target = complete_bipartite_graph(args.n, args.n)
        else:
            raise ValueError("--n only applies to complete / complete-bipartite")
        emb = patterns.find_induced_subgraph(g, target, _budget(args))
        present = emb is not None
        _emit(args, ["present" if present else "absent"], {"present": present})
        return EXIT_OK if present else EXIT_NEGATIVE
    ok, witness = patterns.recognize(g, args.shape, strictness)
    lines = ["yes" if ok else "no"]
    _emit(args, lines, {"match": ok, "witness": _jsonable(witness)})
    return EXIT_OK if ok else EXIT_NEGATIVE


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (tuple, list, set, frozenset)):
        return [_jsonable(x) for x in obj]
    return obj


def _cmd_model(args) -> int:
    g = _read_graph(args.infile, args.format)
    pattern = _graph_from_file(args.pattern)
    cert = parse_certificate(_read_text(args.model))
    model = minors.MinorModel(pattern, g,
                              {v: frozenset(xs) for v, xs in cert.sets.items()},
                              cert.fields.get("induced") == "true")
    if args.action == "validate":
        errs = minors.validate_model(model)
        _emit(args, ["ok"] if not errs else errs, {"valid": not errs, "violations": errs})
        return EXIT_OK if not errs else EXIT_NEGATIVE
    core = _graph_from_file(args.core)
    result = minors.repair_to_induced_model(g, model, core)
    _emit(args, [f"repaired in {result.iterations} iterations"],
          {"iterations": result.iterations,
           "initial_violations": result.initial_violations})
    if args.out:
        _save_cert(args.out, result.model, companions={"core": core})
    return EXIT_OK


def _cmd_partition(args) -> int:
    g = _read_graph(args.infile, args.format)
    part = minors.distance5_partition(g)
    lines = [f"class: {' '.join(str(v) for v in sorted(cls))}" for cls in part.classes]
    _emit(args, lines, {"classes": [sorted(cls) for cls in part.classes]})
    if args.out:
        _save_cert(args.out, part, g)
    return EXIT_OK


def _cmd_contract_balls(args) -> int:
    g = _read_graph(args.infile, args.format)
    centers = _parse_ids(args.centers)
    contracted, model = minors.ball_contract(g, centers)
    _write_graph(contracted, args.out, args.format)
    if args.model_out:
        _save_cert(args.model_out, model, companions={"pattern": contracted})
    _figure(args, g, {"balls": frozenset(x for xs in model.branch_sets.values()
                                         if len(xs) > 1 for x in xs)}, "contract-balls")
    return EXIT_OK


def _parse_parts_file(text: str):
    tips = None
    regions: dict[str, list[int]] = {}
    hub = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition(":")
        key = key.strip()
        ids = _parse_ids(value)
        if key == "tips":
            tips = ids
        elif key in ("region-a", "region-b", "region-c"):
            regions[key] = ids
        elif key == "hub":
            hub = ids
        else:
            raise ValueError(f"line {lineno}: unknown part {key!r}")
    if tips is None or len(tips) != 3 or hub is None or len(regions) != 3:
        raise ValueError("parts file needs tips, region-a/b/c, and hub")
    return tips, [regions["region-a"], regions["region-b"], regions["region-c"]], hub


def _cmd_extract(args) -> int:
    budget = _budget(args)
    if args.step == "clean-fork":
        g = _read_graph(args.infile, args.format)
        tips, regions, hub = _parse_parts_file(_read_text(args.parts))
        result = extract.clean_fork(g, tuple(tips), regions, hub)
        _emit(args, [result.kind, " ".join(str(v) for v in sorted(result.vertices))],
              {"kind": result.kind, "vertices": sorted(result.vertices)})
        _figure(args, g, {"fork": result.vertices}, result.kind)
        return EXIT_OK
    if args.step == "wattle":
        g = _read_graph(args.infile, args.format)
        pattern = _graph_from_file(args.pattern)
        cert = parse_certificate(_read_text(args.model))
        model = minors.MinorModel(pattern, g,
                                  {v: frozenset(xs) for v, xs in cert.sets.items()},
                                  induced=True)
        wc = extract.minor_to_wattle(g, model, args.root)
        _emit(args, [f"wattle height {wc.base.height}, {len(wc.triangles)} triangles"],
              {"height": wc.base.height, "triangles": sorted(wc.triangles)})
        if args.out:
            _save_cert(args.out, wc, companions={"base": wc.base.graph})
        _figure(args, g, {"wattle": wc.used_vertices()}, "wattle")
        return EXIT_OK
    if args.step == "mono-cbt":
        g = _read_graph(args.infile, args.format)
        tree = RootedTree(g, args.root)
        coloring = {}
        for lineno, raw in enumerate(_read_text(args.colors).splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            v, col = line.split()
            if col not in (extract.RED, extract.BLUE):
                raise ValueError(f"line {lineno}: colour must be red or blue")
            coloring[int(v)] = col
        emb = extract.monochromatic_cbt(tree, coloring, args.k)
        sub = patterns.SubdivisionEmbedding(base=emb.base.graph, host=g,
                                            branch_map=emb.branch_map,
                                            path_map=emb.path_map, induced=True)
        _emit(args, [f"{emb.color} vertical tree rooted at {emb.root_image}"],
              {"color": emb.color, "root_image": emb.root_image})
        if args.out:
            _save_cert(args.out, sub, companions={"base": emb.base.graph})
        _figure(args, g, {"image": emb.image_vertices()}, f"mono-cbt k={args.k}")
        return EXIT_OK
    if args.step == "to-subgraph":
        g = _read_graph(args.infile, args.format)
        base = _graph_from_file(args.base)
        cert = parse_certificate(_read_text(args.wattle))
        triangles = frozenset(int(x) for x in cert.fields.get("triangles", "").split())
        branch: dict[int, int | frozenset[int]] = {}
        for v, xs in cert.branches.items():
            branch[v] = frozenset(xs) if v in triangles else xs[0]
        wc = generators.WattleCertificate(
            base=RootedTree(base, int(cert.fields.get("root", "0"))),
            triangles=triangles, host=g, branch_map=branch,
            path_map={e: tuple(p) for e, p in cert.paths.items()})
        result = extract.wattle_to_subgraph(wc, args.k)
        if isinstance(result, LineGraphEmbedding):
            emb = line_graph_embedding_as_embedding(result)
            _emit(args, ["line-graph"], {"kind": "line-graph"})
            if args.out:
                _save_cert(args.out, emb, companions={"pattern": emb.pattern})
            _figure(args, g, {"image": result.image_vertices()}, "line graph of subdivision")
        else:
            _emit(args, ["subdivision"], {"kind": "subdivision"})
            if args.out:
                _save_cert(args.out, result, companions={"base": result.base})
            _figure(args, g, {"image": result.image_vertices()}, "induced subdivision")
        return EXIT_OK
    if args.step == "pipeline-deg":
        g = _read_graph(args.infile, args.format)
        report = extract.bounded_degree_pipeline(g, args.k, delta=args.delta,
                                                 stage_width_target=args.stage_width,
                                                 budget=budget)
        return _finish_pipeline(args, g, report)
    if args.step == "pipeline-minorfree":
        g = _read_graph(args.infile, args.format)
        report = extract.minor_free_pipeline(g, args.k, args.n,
                                             tree_height=args.height, budget=budget)
        return _finish_pipeline(args, g, report)
    raise AssertionError(args.step)


def _finish_pipeline(args, g: Graph, report) -> int:
    lines = [f"{'ok' if s.ok else 'FAIL'} {s.name}: {s.detail}".rstrip()
             for s in report.stages]
    lines.append("success" if report.succeeded else "no model")
    payload = {"stages": [{"name": s.name, "ok": s.ok, "detail": s.detail}
                          for s in report.stages],
               "success": report.succeeded}
    _emit(args, lines, payload)
    if report.succeeded and args.out:
        _save_cert(args.out, report.model, companions={"pattern": report.model.pattern})
    if report.succeeded:
        _figure(args, g, {"model": frozenset(x for xs in report.model.branch_sets.values()
                                             for x in xs)}, "pipeline model")
    return EXIT_OK if report.succeeded else EXIT_NEGATIVE


def _cmd_decide(args) -> int:
    graphs = [_graph_from_file(p) for p in args.graphs]
    strictness = "strict" if args.strict else "inclusive"
    result = extract.decide_bounded_pathwidth(graphs, strictness)
    verdict = "bounded" if result.bounded else "unbounded"
    lines = [verdict]
    for cat in extract.CATEGORIES:
        if cat in result.witnesses:
            lines.append(f"{cat}: {args.graphs[result.witnesses[cat]]}")
        else:
            lines.append(f"{cat}: missing")
    _emit(args, lines, {"bounded": result.bounded,
                        "witnesses": {c: args.graphs[i] for c, i in result.witnesses.items()},
                        "missing": list(result.missing)})
    return EXIT_OK if result.bounded else EXIT_NEGATIVE


def _cmd_verify(args) -> int:
    text = _read_text(args.certificate)
    graphs = [_graph_from_file(p) for p in args.graph or []]
    errs = verify_certificate(text, graphs)
    _emit(args, ["ok"] if not errs else errs, {"valid": not errs, "violations": errs})
    return EXIT_OK if not errs else EXIT_NEGATIVE


# ---------------------------------------------------------------------------
# parser wiring


def _add_io(p, infile=True, out=True):
    if infile:
        p.add_argument("--in", dest="infile", default=None, metavar="FILE",
                       help="input graph (default stdin)")
    if out:
        p.add_argument("--out", default=None, metavar="FILE",
                       help="output destination (default stdout)")
    p.add_argument("--format", choices=("edge-list", "graph6"), default="edge-list")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--budget", type=int, default=None, metavar="STEPS")
    p.add_argument("--seed", type=int, default=0, metavar="U64")
    p.add_argument("--figure", default=None, metavar="IMG",
                   help="also render a figure of the result")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pathforge")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="graph family generators")
    gsub = gen.add_subparsers(dest="family", required=True)
    for fam in ("cbt", "cbt-plus", "kary", "wattle", "hat"):
        p = gsub.add_parser(fam)
        p.add_argument("k", type=int)
        if fam == "wattle":
            p.add_argument("--triangles", default="", metavar="IDS")
            p.add_argument("--length", type=int, default=None)
        p.add_argument("--cert", default=None, metavar="FILE")
        p.set_defaults(func=_cmd_gen)
        _add_io(p, infile=False)
    for fam in ("subdivide", "net-replace"):
        p = gsub.add_parser(fam)
        if fam == "subdivide":
            p.add_argument("--length", type=int, default=None)
            p.add_argument("--lengths", default=None, metavar="u-v=N,...")
            p.add_argument("--random-max", type=int, default=None)
        else:
            p.add_argument("vertex", type=int)
        p.add_argument("--cert", default=None, metavar="FILE")
        p.set_defaults(func=_cmd_gen)
        _add_io(p)
    p = gsub.add_parser("linegraph")
    p.set_defaults(func=_cmd_gen_linegraph)
    _add_io(p)

    wp = sub.add_parser("width", help="pathwidth solvers")
    wsub = wp.add_subparsers(dest="mode", required=True)
    for mode in ("exact", "tree", "lower"):
        p = wsub.add_parser(mode)
        if mode == "exact":
            p.add_argument("--max-vertices", type=int, default=22)
        if mode == "lower":
            p.add_argument("--model", required=True, metavar="CERT")
            p.add_argument("--pattern", required=True, metavar="FILE")
            p.add_argument("--pattern-width", type=int, default=None)
        p.set_defaults(func=_cmd_width)
        _add_io(p)

    fp = sub.add_parser("find", help="pattern searches")
    fsub = fp.add_subparsers(dest="what", required=True)
    for what in ("induced", "subdivision", "minor", "induced-minor"):
        p = fsub.add_parser(what)
        if what == "subdivision":
            p.add_argument("--base", required=True, metavar="FILE")
            p.add_argument("--min-length", type=int, default=None)
            p.add_argument("--plain", action="store_true",
                           help="drop the induced requirement")
        else:
            p.add_argument("--pattern", required=True, metavar="FILE")
        p.set_defaults(func=_cmd_find)
        _add_io(p)

    p = sub.add_parser("recognize", help="shape recognition / containment")
    p.add_argument("--shape", required=True, choices=patterns.SHAPES)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--inclusive", dest="strict", action="store_false")
    p.set_defaults(func=_cmd_recognize, strict=False)
    _add_io(p, out=False)

    mp = sub.add_parser("model", help="minor model validation and repair")
    msub = mp.add_subparsers(dest="action", required=True)
    for action in ("validate", "repair"):
        p = msub.add_parser(action)
        p.add_argument("--pattern", required=True, metavar="FILE")
        p.add_argument("--model", required=True, metavar="CERT")
        if action == "repair":
            p.add_argument("--core", required=True, metavar="FILE")
        p.set_defaults(func=_cmd_model)
        _add_io(p)

    p = sub.add_parser("partition", help="greedy distance-5 partition")
    p.set_defaults(func=_cmd_partition)
    _add_io(p)

    p = sub.add_parser("contract-balls", help="contract radius-2 balls")
    p.add_argument("--centers", required=True, metavar="IDS")
    p.add_argument("--model-out", default=None, metavar="CERT")
    p.set_defaults(func=_cmd_contract_balls)
    _add_io(p)

    ep = sub.add_parser("extract", help="the extraction chain")
    esub = ep.add_subparsers(dest="step", required=True)
    p = esub.add_parser("clean-fork")
    p.add_argument("--parts", required=True, metavar="FILE")
    p.set_defaults(func=_cmd_extract)
    _add_io(p)
    p = esub.add_parser("wattle")
    p.add_argument("--pattern", required=True, metavar="FILE")
    p.add_argument("--model", required=True, metavar="CERT")
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(func=_cmd_extract)
    _add_io(p)
    p = esub.add_parser("mono-cbt")
    p.add_argument("--colors", required=True, metavar="FILE")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--root", type=int, default=0)
    p.set_defaults(func=_cmd_extract)
    _add_io(p)
    p = esub.add_parser("to-subgraph")
    p.add_argument("--wattle", required=True, metavar="CERT")
    p.add_argument("--base", required=True, metavar="FILE")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_extract)
    _add_io(p)
    p = esub.add_parser("pipeline-deg")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--stage-width", type=int, default=1)
    p.set_defaults(func=_cmd_extract)
    _add_io(p)
    p = esub.add_parser("pipeline-minorfree")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--height", type=int, default=None)
    p.set_defaults(func=_cmd_extract)
    _add_io(p)

    p = sub.add_parser("decide", help="bounded-pathwidth decision for an obstruction set")
    p.add_argument("graphs", nargs="*", metavar="FILE")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--inclusive", dest="strict", action="store_false")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_decide, strict=False)

    p = sub.add_parser("verify", help="re-validate a certificate file")
    p.add_argument("certificate", metavar="CERT")
    p.add_argument("--graph", action="append", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
