"""Matplotlib figure rendering for the CLI report paths.

Everything draws to files through the Agg backend — there is no interactive
surface. Layouts are deterministic (circular), colors come from tab10.
"""
from __future__ import annotations

import math
from pathlib import Path

from .coloring import Coloring
from .graphs import Graph
from .triviality import Finding, PowerTrivialityReport


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    import matplotlib.pyplot as plt

    return plt


def _circular_layout(n: int) -> list[tuple[float, float]]:
    if n == 1:
        return [(0.0, 0.0)]
    return [
        (math.cos(2 * math.pi * v / n), math.sin(2 * math.pi * v / n))
        for v in range(n)
    ]


def save_graph_figure(
    g: Graph,
    path,
    coloring: Coloring | None = None,
    title: str | None = None,
) -> Path:
    """Draw the graph on a circle, vertices tinted by an optional coloring."""
    plt = _pyplot()
    pos = _circular_layout(max(g.n, 1))
    fig, ax = plt.subplots(figsize=(5, 5))
    for u, v in g.edges():
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], color="0.6", linewidth=1.0, zorder=1)
    xs = [p[0] for p in pos[: g.n]]
    ys = [p[1] for p in pos[: g.n]]
    if coloring is not None and len(coloring) == g.n:
        cmap = plt.get_cmap("tab10")
        shades = [cmap(coloring[v] % 10) for v in range(g.n)]
    else:
        shades = ["tab:blue"] * g.n
    ax.scatter(xs, ys, s=300, c=shades, zorder=2, edgecolors="black")
    for v in range(g.n):
        ax.annotate(
            g.vertex_label(v), pos[v], ha="center", va="center", fontsize=9, zorder=3
        )
    if title:
        ax.set_title(title)
    ax.set_axis_off()
    ax.set_aspect("equal")
    out = Path(path)
    fig.savefig(out, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return out


def save_power_report_figure(report: PowerTrivialityReport, path) -> Path:
    """Bar chart of proper-coloring counts per power, nontrivial powers in red."""
    plt = _pyplot()
    ns = sorted(report.per_power)
    counts = []
    shades = []
    for n in ns:
        result = report.per_power[n]
        counts.append(result.total_proper_colorings or 0)
        if not result.verified:
            shades.append("0.7")
        elif result.all_trivial:
            shades.append("tab:green")
        else:
            shades.append("tab:red")
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar([str(n) for n in ns], counts, color=shades)
    ax.set_xlabel("power n")
    ax.set_ylabel("proper colorings (exact when enumerated fully)")
    ax.set_title(f"chi = {report.chi}, verdict: {report.theorem_verdict}")
    out = Path(path)
    fig.savefig(out, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return out


def save_search_summary_figure(findings: list[Finding], path, seed: int | None = None) -> Path:
    """Verdict tally over a findings log."""
    plt = _pyplot()
    tally: dict[str, int] = {}
    for finding in findings:
        tally[finding.verdict] = tally.get(finding.verdict, 0) + 1
    labels = sorted(tally)
    fig, ax = plt.subplots(figsize=(6, 3.5))
    ax.bar(labels, [tally[label] for label in labels], color="tab:blue")
    ax.set_ylabel("graphs")
    title = f"{sum(tally.values())} graphs searched"
    if seed is not None:
        title += f" (seed {seed})"
    ax.set_title(title)
    plt.setp(ax.get_xticklabels(), rotation=20, ha="right")
    out = Path(path)
    fig.savefig(out, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return out
