"""Cograph recognition, cotree construction, and the five-way equivalence
report for cographs (tight / has tight coloring / all maximal cliques of size
chi / strongly cliqued / weakly cliqued).

Two independent recognizers are provided: the induced-P4 scan and the
union/join decomposition. They must agree; tests cross-validate them and a
third, intersection-based characterization.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .budget import Budget, ensure_budget
from .coloring import (
    Coloring,
    chromatic_number,
    enumerate_colorings,
    is_tight_coloring,
    is_tight_graph,
)
from .cliques import is_strongly_cliqued, is_weakly_cliqued, maximal_cliques
from .errors import NotACographError
from .graphs import Graph, complement, connected_components, induced_subgraph


def is_cograph_p4(g: Graph):
    """P4-freeness by brute force over 4-subsets.

    Returns ``(True, None)`` or ``(False, (a, b, c, d))`` with a-b-c-d an
    induced path. Four vertices induce P4 iff they span exactly three edges
    with no vertex of degree three.
    """
    for quad in combinations(range(g.n), 4):
        degs = [sum(1 for u in quad if u != v and g.has_edge(v, u)) for v in quad]
        if sum(degs) == 6 and max(degs) == 2 and min(degs) == 1:
            ends = [v for v, d in zip(quad, degs) if d == 1]
            a = min(ends)
            path = [a]
            prev = None
            cur = a
            for _ in range(3):
                nxt = next(
                    u for u in quad if u != cur and u != prev and g.has_edge(cur, u)
                )
                path.append(nxt)
                prev, cur = cur, nxt
            return False, tuple(path)
    return True, None


@dataclass(frozen=True)
class Cotree:
    """Union/join decomposition tree; leaves carry original vertex ids.

    ``op`` is ``"leaf"``, ``"union"`` or ``"join"``. Children are ordered by
    their minimum contained vertex, and no child repeats its parent's tag
    (components are connected, co-components co-connected), so the shape is
    canonical and serialization deterministic.
    """

    op: str
    vertex: int | None = None
    children: tuple["Cotree", ...] = field(default=())

    @property
    def min_vertex(self) -> int:
        if self.op == "leaf":
            return self.vertex
        return min(c.min_vertex for c in self.children)

    def leaves(self) -> list[int]:
        if self.op == "leaf":
            return [self.vertex]
        out = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def to_json(self):
        if self.op == "leaf":
            return {"op": "leaf", "vertex": self.vertex}
        return {"op": self.op, "children": [c.to_json() for c in self.children]}

    @classmethod
    def from_json(cls, payload) -> "Cotree":
        if payload["op"] == "leaf":
            return cls("leaf", vertex=payload["vertex"])
        return cls(
            payload["op"],
            children=tuple(cls.from_json(c) for c in payload["children"]),
        )


def build_cotree(g: Graph) -> Cotree:
    """Recursive union/join decomposition.

    Disconnected -> union over components; co-disconnected -> join over
    co-components; single vertex -> leaf; otherwise the graph is not a
    cograph and the induced P4 is reported in the error.
    """
    if g.n == 0:
        raise ValueError("cotree of the empty graph is undefined")

    def rec(sub: Graph, mapping: tuple[int, ...]) -> Cotree:
        if sub.n == 1:
            return Cotree("leaf", vertex=mapping[0])
        comps = connected_components(sub)
        if len(comps) > 1:
            children = []
            for comp in comps:
                inner, inner_map = induced_subgraph(sub, comp)
                children.append(rec(inner, tuple(mapping[v] for v in inner_map)))
            children.sort(key=lambda c: c.min_vertex)
            return Cotree("union", children=tuple(children))
        co = complement(sub)
        co_comps = connected_components(co)
        if len(co_comps) > 1:
            children = []
            for comp in co_comps:
                inner, inner_map = induced_subgraph(sub, comp)
                children.append(rec(inner, tuple(mapping[v] for v in inner_map)))
            children.sort(key=lambda c: c.min_vertex)
            return Cotree("join", children=tuple(children))
        originals = mapping
        _, witness = is_cograph_p4(g)
        raise NotACographError(
            f"vertices {originals} induce a connected, co-connected subgraph",
            witness=witness,
        )

    return rec(g, tuple(range(g.n)))


def cotree_to_graph(tree: Cotree) -> Graph:
    """Evaluate a cotree back to the graph on its original vertex ids.

    Union contributes no cross edges, join all of them. The leaf set must be
    exactly ``0..n-1`` for the result to be addressable.
    """

    def rec(node: Cotree) -> tuple[list[int], set[tuple[int, int]]]:
        if node.op == "leaf":
            return [node.vertex], set()
        verts: list[int] = []
        edges: set[tuple[int, int]] = set()
        parts = []
        for child in node.children:
            cv, ce = rec(child)
            parts.append(cv)
            verts.extend(cv)
            edges |= ce
        if node.op == "join":
            for i, a_part in enumerate(parts):
                for b_part in parts[i + 1:]:
                    for a in a_part:
                        for b in b_part:
                            edges.add((min(a, b), max(a, b)))
        return verts, edges

    verts, edges = rec(tree)
    if sorted(verts) != list(range(len(verts))):
        raise ValueError("cotree leaves are not the dense range 0..n-1")
    return Graph.from_edges(len(verts), edges)


def construction_trace(tree: Cotree) -> list[tuple]:
    """Linear build script using only the three primitive steps:
    ``("vertex", name, v)``, ``("complement", name, src)``,
    ``("union", name, a, b)``. The last step's name denotes the full graph.

    A join of parts is spelled out as complement(union(complements)), so the
    script stays inside the primitive operations.
    """
    steps: list[tuple] = []
    counter = [0]

    def fresh() -> str:
        counter[0] += 1
        return f"g{counter[0]}"

    def rec(node: Cotree) -> str:
        if node.op == "leaf":
            name = fresh()
            steps.append(("vertex", name, node.vertex))
            return name
        child_names = [rec(c) for c in node.children]
        if node.op == "join":
            flipped = []
            for cn in child_names:
                name = fresh()
                steps.append(("complement", name, cn))
                flipped.append(name)
            child_names = flipped
        acc = child_names[0]
        for cn in child_names[1:]:
            name = fresh()
            steps.append(("union", name, acc, cn))
            acc = name
        if node.op == "join":
            name = fresh()
            steps.append(("complement", name, acc))
            acc = name
        return acc

    rec(tree)
    return steps


def evaluate_trace(steps: list[tuple]) -> tuple[Graph, tuple[int, ...]]:
    """Replay a construction trace; returns the graph it denotes plus the
    mapping from its dense ids back to the original leaf ids."""
    env: dict[str, tuple[Graph, tuple[int, ...]]] = {}
    last = None
    for step in steps:
        kind, name = step[0], step[1]
        if kind == "vertex":
            env[name] = (Graph(1, (0,)), (step[2],))
        elif kind == "complement":
            src_g, src_map = env[step[2]]
            env[name] = (complement(src_g), src_map)
        elif kind == "union":
            a_g, a_map = env[step[2]]
            b_g, b_map = env[step[3]]
            adj = list(a_g.adj) + [m << a_g.n for m in b_g.adj]
            env[name] = (Graph(a_g.n + b_g.n, tuple(adj)), a_map + b_map)
        else:
            raise ValueError(f"unknown trace step {kind!r}")
        last = name
    if last is None:
        raise ValueError("empty trace")
    return env[last]


def exists_tight_coloring(g: Graph, budget: Budget | int | None = None):
    """Whether some proper chi(g)-coloring is tight.

    Returns ``(True, coloring)`` or ``(False, colorings_examined)``.
    """
    if g.n == 0:
        raise ValueError("tightness is undefined on the empty graph")
    b = ensure_budget(budget)
    k = chromatic_number(g, b)
    examined = 0
    for coloring in enumerate_colorings(g, k, b):
        examined += 1
        ok, _ = is_tight_coloring(g, coloring)
        if ok:
            return True, coloring
    return False, examined


@dataclass(frozen=True)
class EquivalenceReport:
    """The five predicates that coincide on cographs, each computed from its
    own definition, with a witness for every false entry."""

    k: int
    tight: bool
    tight_witness: tuple | None
    exists_tight_coloring: bool
    tight_coloring: Coloring | None
    all_maximal_cliques_size_k: bool
    bad_clique: tuple[int, ...] | None
    strongly_cliqued: bool
    strongly_witness: tuple | None
    weakly_cliqued: bool
    weakly_witness: int | None

    @property
    def values(self) -> tuple[bool, bool, bool, bool, bool]:
        return (
            self.tight,
            self.exists_tight_coloring,
            self.all_maximal_cliques_size_k,
            self.strongly_cliqued,
            self.weakly_cliqued,
        )

    @property
    def consistent(self) -> bool:
        return len(set(self.values)) == 1

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "tight": self.tight,
            "exists_tight_coloring": self.exists_tight_coloring,
            "all_maximal_cliques_size_k": self.all_maximal_cliques_size_k,
            "strongly_cliqued": self.strongly_cliqued,
            "weakly_cliqued": self.weakly_cliqued,
            "consistent": self.consistent,
        }


def equivalence_report(g: Graph, budget: Budget | int | None = None) -> EquivalenceReport:
    """Compute all five predicates independently on a cograph.

    Raises :class:`NotACographError` on non-cographs. Disagreement between
    the five booleans is surfaced through ``consistent`` (it would falsify
    the equivalence on cographs, i.e. flag a library defect), never assumed
    away.
    """
    if g.n == 0:
        raise ValueError("equivalence report is undefined on the empty graph")
    cograph, p4 = is_cograph_p4(g)
    if not cograph:
        raise NotACographError(f"induced P4 at {p4}", witness=p4)
    b = ensure_budget(budget)
    k = chromatic_number(g, b)
    tight, tight_witness = is_tight_graph(g, b)
    has_tight, tight_evidence = exists_tight_coloring(g, b)
    bad = None
    for clique in maximal_cliques(g, b):
        if len(clique) != k:
            bad = clique
            break
    strong, strong_witness = is_strongly_cliqued(g, b)
    weak, weak_witness = is_weakly_cliqued(g, b)
    return EquivalenceReport(
        k=k,
        tight=tight,
        tight_witness=tight_witness,
        exists_tight_coloring=has_tight,
        tight_coloring=tight_evidence if has_tight else None,
        all_maximal_cliques_size_k=bad is None,
        bad_clique=bad,
        strongly_cliqued=strong,
        strongly_witness=strong_witness if not strong else None,
        weakly_cliqued=weak,
        weakly_witness=weak_witness if not weak else None,
    )
