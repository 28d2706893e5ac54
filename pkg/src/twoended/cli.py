"""Command line interface.

    twoended color --config run.json [--n N] [--emit json|dot] [--output F] [--verify] [--oracle-budget E]
    twoended verify --graph g.json [--coloring c.json]
    twoended engine-z --n 100 --gens 1,2,3
    twoended engine-dinf --m 24 --reflections 1 --gens 1,2
    twoended vizing --graph g.json

Reports are JSON.  When a coloring is emitted without ``--output`` it goes to
stdout and the report moves to stderr.  The exit status is 0 iff every
requested verification passed; input errors exit with 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .config import load_configs, spec_from_config
from .dihedral_engine import DihedralModel, color_dihedral_H
from .errors import InvalidInput, TwoEndedError
from .line_engine import CycleModel, color_cyclic_H
from .multigraph import (
    brute_force_chromatic_index,
    color_count,
    is_proper,
    load_graph_document,
    max_degree,
    serialize,
)
from .pipeline import run
from .vizing import vizing_color


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()] if text else []


def _emit(args, graph, colors, report: dict) -> None:
    fmt = args.emit
    if fmt is None:
        print(json.dumps(report, indent=2))
        return
    doc = serialize(graph, colors, fmt)
    if args.output:
        Path(args.output).write_text(doc)
        print(json.dumps(report, indent=2))
    else:
        sys.stdout.write(doc if doc.endswith("\n") else doc + "\n")
        print(json.dumps(report, indent=2), file=sys.stderr)


def cmd_color(args) -> int:
    configs = load_configs(args.config)
    reports, ok = [], True
    for i, cfg in enumerate(configs):
        spec, N = spec_from_config(cfg)
        N = args.n if args.n is not None else N
        if N is None:
            raise InvalidInput("no model size: pass --n or set 'N' in the config")
        fc = run(spec, N, verify=args.verify)
        report = dict(fc.summary)
        if args.verify:
            d = report["d"]
            report["within_bound"] = report["colors_used"] <= d + 1
            report["at_least_d"] = report["colors_used"] >= d
            ok &= report["proper"] and report["within_bound"] and report["replacement_audit"]
        if args.oracle_budget is not None and fc.model.graph.n_edges <= args.oracle_budget:
            chi = brute_force_chromatic_index(fc.model.graph, args.oracle_budget)
            report["chromatic_index"] = chi
        reports.append(report)
        if args.emit and len(configs) > 1:
            out = Path(args.output or ".") / f"coloring_{i}.{args.emit}"
            out.write_text(serialize(fc.model.graph, fc.colors, args.emit))
        elif args.emit:
            _emit(args, fc.model.graph, fc.colors, report)
    if not (args.emit and len(configs) == 1):
        print(json.dumps(reports[0] if len(reports) == 1 else reports, indent=2))
    return 0 if ok else 1


def _read_json(path: str):
    return json.loads(Path(path).read_text())


def cmd_verify(args) -> int:
    g, colors = load_graph_document(_read_json(args.graph))
    if args.coloring:
        doc = _read_json(args.coloring)
        if isinstance(doc, dict) and "colors" in doc:
            doc = doc["colors"]
        elif isinstance(doc, dict) and "edges" in doc:
            _, doc = load_graph_document(doc)
        colors = np.asarray(doc, dtype=np.int64)
    if colors is None:
        raise InvalidInput("no coloring given: add a color column or pass --coloring")
    proper, witness = is_proper(g, colors)
    report = {
        "proper": proper,
        "witness": witness,
        "colors_used": color_count(colors),
        "max_degree": max_degree(g),
    }
    if args.oracle_budget is not None and g.n_edges <= args.oracle_budget:
        report["chromatic_index"] = brute_force_chromatic_index(g, args.oracle_budget)
    print(json.dumps(report, indent=2))
    return 0 if proper else 1


def cmd_engine_z(args) -> int:
    model = CycleModel(args.n, tuple(_int_list(args.gens)))
    res = color_cyclic_H(model)
    g = model.multigraph()
    proper, _ = is_proper(g, res.colors)
    report = {
        "k": model.k,
        "colors_used": color_count(res.colors),
        "sparse_edge_count": res.sparse_edge_count,
        "proper": proper,
    }
    _emit(args, g, res.colors, report)
    return 0 if proper else 1


def cmd_engine_dinf(args) -> int:
    model = DihedralModel(args.m, tuple(range(args.reflections)), tuple(_int_list(args.gens)))
    res = color_dihedral_H(model)
    g = model.multigraph()
    proper, _ = is_proper(g, res.colors)
    report = {
        "k": len(model.translations),
        "reflections": len(model.reflections),
        "deg_H": model.deg_h,
        "colors_used": color_count(res.colors),
        "sparse_edge_count": res.sparse_edge_count,
        "proper": proper,
    }
    _emit(args, g, res.colors, report)
    return 0 if proper else 1


def cmd_vizing(args) -> int:
    g, _ = load_graph_document(_read_json(args.graph))
    colors = vizing_color(g)
    proper, _ = is_proper(g, colors)
    report = {
        "max_degree": max_degree(g),
        "colors_used": color_count(colors),
        "proper": proper,
    }
    _emit(args, g, colors, report)
    return 0 if proper and report["colors_used"] <= report["max_degree"] + 1 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twoended", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def emit_opts(p, default=None):
        p.add_argument("--emit", choices=["json", "dot"], default=default)
        p.add_argument("--output", help="file for the emitted coloring (directory for batches)")

    p = sub.add_parser("color", help="color the finite Cayley model of a config")
    p.add_argument("--config", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--oracle-budget", type=int)
    emit_opts(p)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("verify", help="check a coloring for properness")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring")
    p.add_argument("--oracle-budget", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("engine-z", help="color the cyclic quotient multigraph directly")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gens", required=True, help="positive steps with multiplicity, e.g. 1,1,2")
    emit_opts(p, "json")
    p.set_defaults(func=cmd_engine_z)

    p = sub.add_parser("engine-dinf", help="color the dihedral quotient multigraph directly")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--reflections", type=int, default=0,
                   help="number of reflection occurrences; occurrence j is t^j s")
    p.add_argument("--gens", default="", help="positive translation steps with multiplicity")
    emit_opts(p, "json")
    p.set_defaults(func=cmd_engine_dinf)

    p = sub.add_parser("vizing", help="Vizing-color a simple graph")
    p.add_argument("--graph", required=True)
    emit_opts(p, "json")
    p.set_defaults(func=cmd_vizing)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TwoEndedError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
