"""Command-line surface: analyze, verify, search, cograph, ultrafilter.

Exit codes: 0 on success, 1 when an internal theorem check failed (that means
a library bug, not a property of the input), 2 on usage or input errors.
Budgets default to the POWERCOLOR_BUDGET environment variable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .budget import Budget
from .coloring import Coloring, chromatic_number, enumerate_colorings
from .cographs import (
    build_cotree,
    construction_trace,
    equivalence_report,
    is_cograph_p4,
)
from .errors import NotACographError, PowerColorError
from .generate import nonisomorphic_graphs_upto, random_graphs
from .graphs import Graph, graph6_dumps, parse_graph_text, power
from .partitions import extract_ultrafilter
from .reporting import analyze_graph
from .triviality import (
    Finding,
    classify_coloring,
    counterexample_search,
    read_findings,
    verify_power_triviality,
    write_findings,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_ERROR = 2


def _load_graph(args) -> Graph:
    raw = args.input
    path = Path(raw)
    if path.exists() and path.is_file():
        raw = path.read_text()
    return parse_graph_text(raw, args.input_format)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _figures_dir(args) -> Path | None:
    if not getattr(args, "figures", None):
        return None
    directory = Path(args.figures)
    directory.mkdir(parents=True, exist_ok=True)
    return directory


def _add_common(parser: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        parser.add_argument("input", help="graph file path, graph6 string, or JSON edge list")
        parser.add_argument(
            "--input-format",
            choices=["auto", "graph6", "json"],
            default="auto",
            help="input parsing override (default: auto-detect)",
        )
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--out", help="write the report here instead of stdout")
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help="node-expansion budget (default: POWERCOLOR_BUDGET or 10^9)",
    )
    parser.add_argument("--figures", help="directory for rendered figure files")


def cmd_analyze(args) -> int:
    g = _load_graph(args)
    report = analyze_graph(g, Budget(args.budget), power_n=args.n)
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2), args.out)
    else:
        _emit(report.to_text(), args.out)
    figures = _figures_dir(args)
    if figures is not None:
        from .figures import save_graph_figure

        coloring = next(enumerate_colorings(g, report.chi, Budget(args.budget)), None)
        save_graph_figure(
            g,
            figures / "graph.png",
            coloring=coloring,
            title=f"chi={report.chi}, {report.verdict}",
        )
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args)
    report = verify_power_triviality(g, args.n, Budget(args.budget))
    if args.format == "json":
        _emit(json.dumps(report.to_json(), indent=2), args.out)
    else:
        lines = [f"chi: {report.chi}", f"theorem verdict: {report.theorem_verdict}"]
        for n, result in sorted(report.per_power.items()):
            if not result.verified:
                lines.append(f"power {n}: unverified (budget exceeded)")
            elif result.all_trivial:
                lines.append(
                    f"power {n}: all {result.total_proper_colorings} proper colorings trivial"
                )
            else:
                lines.append(
                    f"power {n}: nontrivial coloring found: {list(result.nontrivial_example.colors)}"
                )
        _emit("\n".join(lines), args.out)
    figures = _figures_dir(args)
    if figures is not None:
        from .figures import save_graph_figure, save_power_report_figure

        save_power_report_figure(report, figures / "power_report.png")
        save_graph_figure(g, figures / "graph.png", title=f"chi={report.chi}")
    return EXIT_OK


def _search_graphs(args):
    limit = args.max_vertices
    exhaustive_limit = min(limit, 8)
    for g in nonisomorphic_graphs_upto(exhaustive_limit, args.connected_only):
        yield g
    if limit > 8:
        for size in range(9, limit + 1):
            for g in random_graphs(size, args.samples, args.seed + size):
                if args.connected_only:
                    from .graphs import connected_components

                    if len(connected_components(g)) > 1:
                        continue
                yield g


def cmd_search(args) -> int:
    skip: set[str] = set()
    existing: list[Finding] = []
    out_path = Path(args.out) if args.out else None
    if out_path is not None and out_path.exists():
        with out_path.open() as handle:
            existing = read_findings(handle)
        skip = {f.graph6 for f in existing}

    findings = list(
        counterexample_search(
            _search_graphs(args),
            power_n=args.power_n,
            budget_limit=args.budget,
            skip_graph6=skip,
        )
    )
    if out_path is not None:
        with out_path.open("a") as handle:
            write_findings(findings, handle)
    else:
        write_findings(findings, sys.stdout)

    combined = existing + findings
    violations = [
        (f.graph6, v) for f in findings for v in f.violations
    ]
    tally: dict[str, int] = {}
    for finding in combined:
        tally[finding.verdict] = tally.get(finding.verdict, 0) + 1
    summary = {
        "seed": args.seed,
        "graphs": len(combined),
        "new": len(findings),
        "verdicts": tally,
        "violations": [f"{g6}: {v}" for g6, v in violations],
    }
    print(json.dumps(summary), file=sys.stderr)
    figures = _figures_dir(args)
    if figures is not None:
        from .figures import save_search_summary_figure

        save_search_summary_figure(combined, figures / "search_summary.png", seed=args.seed)
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_cograph(args) -> int:
    g = _load_graph(args)
    cograph, witness = is_cograph_p4(g)
    payload: dict = {"graph6": graph6_dumps(g), "is_cograph": cograph}
    exit_code = EXIT_OK
    if not cograph:
        payload["p4_witness"] = list(witness)
    else:
        tree = build_cotree(g)
        payload["cotree"] = tree.to_json()
        payload["construction_trace"] = [list(step) for step in construction_trace(tree)]
        report = equivalence_report(g, Budget(args.budget))
        payload["equivalence"] = report.to_json()
        if not report.consistent:
            exit_code = EXIT_VIOLATION
    if args.format == "json":
        _emit(json.dumps(payload, indent=2), args.out)
    else:
        lines = [f"graph6: {payload['graph6']}", f"cograph: {cograph}"]
        if not cograph:
            lines.append(f"induced P4: {payload['p4_witness']}")
        else:
            lines.append(f"cotree: {json.dumps(payload['cotree'])}")
            eq = payload["equivalence"]
            lines.append(
                "equivalence: tight={tight} exists_tight={exists_tight_coloring} "
                "cliques_size_k={all_maximal_cliques_size_k} strong={strongly_cliqued} "
                "weak={weakly_cliqued} consistent={consistent}".format(**eq)
            )
        _emit("\n".join(lines), args.out)
    figures = _figures_dir(args)
    if figures is not None:
        from .figures import save_graph_figure

        save_graph_figure(g, figures / "graph.png", title=f"cograph: {cograph}")
    return exit_code


def cmd_ultrafilter(args) -> int:
    g = _load_graph(args)
    budget = Budget(args.budget)
    chi = chromatic_number(g, budget)
    ps = power(g, args.n)
    payload: dict = {"graph6": graph6_dumps(g), "chi": chi, "n": args.n}
    if args.colors:
        coloring = Coloring(tuple(json.loads(args.colors)), chi)
        witness = extract_ultrafilter(ps, coloring)
        payload["witness"] = {
            "generator": witness.generator,
            "factor_coloring": witness.factor_coloring.to_json(),
        }
    else:
        generator_counts: dict[int, int] = {}
        nontrivial = 0
        total = 0
        for coloring in enumerate_colorings(ps.product, chi, budget):
            total += 1
            if classify_coloring(ps, coloring) is None:
                nontrivial += 1
                continue
            witness = extract_ultrafilter(ps, coloring)
            generator_counts[witness.generator] = (
                generator_counts.get(witness.generator, 0) + 1
            )
        payload["total_proper_colorings"] = total
        payload["nontrivial"] = nontrivial
        payload["generator_counts"] = {str(k): v for k, v in sorted(generator_counts.items())}
    _emit(json.dumps(payload, indent=2) if args.format == "json" else json.dumps(payload), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="powercolor",
        description="verify, classify, and search for trivially power-colorable graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full predicate vector and theorem verdict")
    _add_common(p_analyze)
    p_analyze.add_argument("--n", type=int, default=None, help="also verify powers up to n")
    p_analyze.set_defaults(func=cmd_analyze)

    p_verify = sub.add_parser("verify", help="exhaustively classify colorings of powers")
    _add_common(p_verify)
    p_verify.add_argument("--n", type=int, default=2, help="verify powers up to n (default 2)")
    p_verify.set_defaults(func=cmd_verify)

    p_search = sub.add_parser("search", help="sweep graph families for counterexamples")
    _add_common(p_search, with_input=False)
    p_search.add_argument("--max-vertices", type=int, default=6)
    p_search.add_argument("--connected-only", action="store_true")
    p_search.add_argument("--power-n", type=int, default=2)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument(
        "--samples", type=int, default=100, help="random samples per size above 8 vertices"
    )
    p_search.set_defaults(func=cmd_search)

    p_cograph = sub.add_parser("cograph", help="cotree and five-way equivalence report")
    _add_common(p_cograph)
    p_cograph.set_defaults(func=cmd_cograph)

    p_uf = sub.add_parser("ultrafilter", help="extract principal ultrafilter witnesses")
    _add_common(p_uf)
    p_uf.add_argument("--n", type=int, default=2, help="power to analyze (default 2)")
    p_uf.add_argument("--colors", help="JSON array: extract the witness of this coloring")
    p_uf.set_defaults(func=cmd_ultrafilter)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotACographError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except PowerColorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
