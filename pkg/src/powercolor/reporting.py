"""Aggregate analysis reports for the CLI: predicate vector, theorem verdict,
optional per-power verification, timing and budget accounting.

Reports round-trip through JSON exactly (``from_json(to_json(r)) == r``);
graphs are immutable, so caching a report by its graph6 identity is sound.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .budget import Budget, ensure_budget
from .cliques import clique_connected_components, is_strongly_cliqued, is_weakly_cliqued
from .cographs import is_cograph_p4
from .coloring import chromatic_number, is_tight_graph
from .graphs import Graph, connected_components, graph6_dumps
from .triviality import decide_by_theorems, verify_power_triviality


@dataclass(frozen=True)
class AnalysisReport:
    graph6: str
    n: int
    m: int
    connected: bool
    chi: int
    tight: bool
    weakly_cliqued: bool
    strongly_cliqued: bool
    clique_components: int | None
    is_cograph: bool
    verdict: str
    per_power: dict | None
    elapsed_seconds: float
    budget_used: int
    seed: int | None

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "connected": self.connected,
            "chi": self.chi,
            "tight": self.tight,
            "weakly_cliqued": self.weakly_cliqued,
            "strongly_cliqued": self.strongly_cliqued,
            "clique_components": self.clique_components,
            "is_cograph": self.is_cograph,
            "verdict": self.verdict,
            "per_power": self.per_power,
            "elapsed_seconds": self.elapsed_seconds,
            "budget_used": self.budget_used,
            "seed": self.seed,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "AnalysisReport":
        return cls(**payload)

    def to_text(self) -> str:
        lines = [
            f"graph6: {self.graph6}",
            f"vertices/edges: {self.n}/{self.m}",
            f"connected: {self.connected}",
            f"chi: {self.chi}",
            f"tight: {self.tight}",
            f"weakly cliqued: {self.weakly_cliqued}",
            f"strongly cliqued: {self.strongly_cliqued}",
            f"clique components: {self.clique_components}",
            f"cograph: {self.is_cograph}",
            f"verdict: {self.verdict}",
        ]
        if self.per_power:
            for n, entry in sorted(self.per_power.items(), key=lambda kv: int(kv[0])):
                lines.append(
                    f"power {n}: all_trivial={entry['all_trivial']} "
                    f"colorings={entry['total_proper_colorings']}"
                )
        lines.append(f"elapsed: {self.elapsed_seconds:.3f}s, budget used: {self.budget_used}")
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        return "\n".join(lines)


def analyze_graph(
    g: Graph,
    budget: Budget | int | None = None,
    power_n: int | None = None,
    seed: int | None = None,
) -> AnalysisReport:
    """Recompute the full predicate vector and theorem verdict for a graph.

    ``power_n`` additionally runs the exhaustive per-power verification and
    embeds its outcome.
    """
    if g.n == 0:
        raise ValueError("analysis is undefined on the empty graph")
    b = ensure_budget(budget)
    start = time.perf_counter()
    connected = len(connected_components(g)) <= 1
    chi = chromatic_number(g, b)
    tight, _ = is_tight_graph(g, b)
    weak, _ = is_weakly_cliqued(g, b)
    strong, _ = is_strongly_cliqued(g, b)
    components = None
    if weak:
        components = clique_connected_components(g, b).component_count
    cograph, _ = is_cograph_p4(g)
    verdict = decide_by_theorems(g, b)
    per_power = None
    if power_n is not None:
        report = verify_power_triviality(g, power_n, b)
        per_power = report.to_json()["per_power"]
    elapsed = time.perf_counter() - start
    return AnalysisReport(
        graph6=graph6_dumps(g),
        n=g.n,
        m=g.edge_count,
        connected=connected,
        chi=chi,
        tight=tight,
        weakly_cliqued=weak,
        strongly_cliqued=strong,
        clique_components=components,
        is_cograph=cograph,
        verdict=verdict.label,
        per_power=per_power,
        elapsed_seconds=elapsed,
        budget_used=b.used,
        seed=seed,
    )
