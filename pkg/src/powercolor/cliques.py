"""Maximal-clique enumeration and the clique-structure predicates.

"k-clique" below always means a clique of size exactly chi(G); the weakly /
strongly cliqued predicates and the clique-connectivity decomposition are all
relative to that k.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .budget import Budget, ensure_budget
from .coloring import chromatic_number
from .errors import NotWeaklyCliquedError
from .graphs import Graph, _bits


def maximal_cliques(g: Graph, budget: Budget | int | None = None) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, each once, as sorted vertex tuples.

    Bron-Kerbosch with pivoting on int bitmasks; output sorted for
    reproducibility. The empty graph has one maximal clique: the empty set.
    """
    b = ensure_budget(budget)
    out: list[int] = []
    adj = g.adj

    def expand(r: int, p: int, x: int) -> None:
        b.charge()
        if p == 0 and x == 0:
            out.append(r)
            return
        px = p | x
        pivot = -1
        best = -1
        m = px
        while m:
            low = m & -m
            u = low.bit_length() - 1
            score = (p & adj[u]).bit_count()
            if score > best:
                best = score
                pivot = u
            m ^= low
        ext = p & ~adj[pivot]
        while ext:
            low = ext & -ext
            v = low.bit_length() - 1
            expand(r | low, p & adj[v], x & adj[v])
            p ^= low
            x |= low
            ext ^= low

    expand(0, (1 << g.n) - 1, 0)
    return sorted(tuple(_bits(mask)) for mask in out)


def cliques_of_size(g: Graph, k: int, budget: Budget | int | None = None) -> list[tuple[int, ...]]:
    """All cliques of size exactly ``k``, via k-subsets of maximal cliques.

    Clique-connectivity needs every k-clique, not just the maximal ones.
    """
    found = set()
    for clique in maximal_cliques(g, budget):
        if len(clique) >= k:
            for sub in combinations(clique, k):
                found.add(sub)
    return sorted(found)


@dataclass(frozen=True)
class CliqueStructure:
    """chi-sized cliques of a weakly cliqued graph, partitioned by clique-paths.

    ``component_of[i]`` is the component index of ``k_cliques[i]``; vertex
    classes are induced by membership (well defined: two k-cliques through
    one vertex intersect there, hence share a component).
    """

    k: int
    k_cliques: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]
    vertex_components: tuple[tuple[int, ...], ...]

    @property
    def component_count(self) -> int:
        return len(self.vertex_components)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "cliques": [list(c) for c in self.k_cliques],
            "component_of": list(self.component_of),
            "vertex_components": [list(c) for c in self.vertex_components],
        }


def is_weakly_cliqued(g: Graph, budget: Budget | int | None = None):
    """Every vertex lies in some chi(g)-clique.

    Returns ``(True, None)`` or ``(False, uncovered_vertex)``.
    """
    if g.n == 0:
        raise ValueError("cliquedness is undefined on the empty graph")
    b = ensure_budget(budget)
    k = chromatic_number(g, b)
    covered = 0
    for clique in cliques_of_size(g, k, b):
        for v in clique:
            covered |= 1 << v
    full = (1 << g.n) - 1
    missing = full & ~covered
    if missing:
        return False, (missing & -missing).bit_length() - 1
    return True, None


def is_strongly_cliqued(g: Graph, budget: Budget | int | None = None):
    """No isolated vertices and every edge extends to a chi(g)-clique.

    Returns ``(True, None)``, ``(False, ("isolated", v))``, or
    ``(False, ("edge", (u, v)))``.
    """
    if g.n == 0:
        raise ValueError("cliquedness is undefined on the empty graph")
    b = ensure_budget(budget)
    for v in range(g.n):
        if g.adj[v] == 0:
            return False, ("isolated", v)
    k = chromatic_number(g, b)
    covered = set()
    for clique in cliques_of_size(g, k, b):
        for u, v in combinations(clique, 2):
            covered.add((u, v))
    for u, v in g.edges():
        if (u, v) not in covered:
            return False, ("edge", (u, v))
    return True, None


def clique_connected_components(g: Graph, budget: Budget | int | None = None) -> CliqueStructure:
    """Partition the chi(g)-cliques into clique-path classes.

    Two k-cliques are joined when a chain of k-cliques with consecutive
    nonempty intersections connects them (union-find over the intersection
    graph). Only defined for weakly cliqued inputs, where every vertex is
    covered and the induced vertex partition is total.
    """
    b = ensure_budget(budget)
    ok, uncovered = is_weakly_cliqued(g, b)
    if not ok:
        raise NotWeaklyCliquedError(
            f"vertex {uncovered} lies in no chi-sized clique", uncovered_vertex=uncovered
        )
    k = chromatic_number(g, b)
    cliques = cliques_of_size(g, k, b)
    masks = []
    for clique in cliques:
        m = 0
        for v in clique:
            m |= 1 << v
        masks.append(m)

    parent = list(range(len(cliques)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(cliques)):
        for j in range(i + 1, len(cliques)):
            if masks[i] & masks[j]:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri

    roots: dict[int, int] = {}
    component_of = []
    for i in range(len(cliques)):
        r = find(i)
        if r not in roots:
            roots[r] = len(roots)
        component_of.append(roots[r])

    vertex_masks = [0] * len(roots)
    for i, clique in enumerate(cliques):
        vertex_masks[component_of[i]] |= masks[i]
    vertex_components = tuple(tuple(_bits(m)) for m in vertex_masks)
    return CliqueStructure(
        k=k,
        k_cliques=tuple(cliques),
        component_of=tuple(component_of),
        vertex_components=vertex_components,
    )
