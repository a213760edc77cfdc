"""Exhaustive non-isomorphic graph generation at desk scale, plus a seeded
random sampler for larger orders.

Canonical form: the lexicographically least upper-triangle adjacency bit
string over vertex orders compatible with an iterated neighbourhood-degree
refinement. The refinement classes are isomorphism-invariant, so restricting
the permutations to them preserves canonicity while pruning the n! blowup on
everything except highly symmetric graphs.
"""
from __future__ import annotations

import random
from itertools import permutations, product

from .graphs import Graph, connected_components


def _refine_cells(g: Graph) -> list[list[int]]:
    labels = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n):
        keys = [
            (labels[v], tuple(sorted(labels[u] for u in g.neighbors(v))))
            for v in range(g.n)
        ]
        order = {key: rank for rank, key in enumerate(sorted(set(keys)))}
        new_labels = [order[k] for k in keys]
        if new_labels == labels:
            break
        labels = new_labels
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(labels[v], []).append(v)
    return [cells[label] for label in sorted(cells)]


def canonical_key(g: Graph) -> tuple[int, int]:
    """(n, bits) with bits the least adjacency upper triangle, MSB first."""
    n = g.n
    if n <= 1:
        return n, 0
    cells = _refine_cells(g)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    best = None
    for perm_parts in product(*(permutations(c) for c in cells)):
        order = [v for part in perm_parts for v in part]
        bits = 0
        for i, j in pairs:
            bits = (bits << 1) | (g.adj[order[i]] >> order[j] & 1)
        if best is None or bits < best:
            best = bits
    return n, best


def canonical_graph(g: Graph) -> Graph:
    """The canonically labelled representative of g's isomorphism class."""
    n, bits = canonical_key(g)
    adj = [0] * n
    pos = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            pos -= 1
            if bits >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """All graphs on exactly ``n`` vertices up to isomorphism.

    Built by vertex augmentation: every n-vertex graph arises from some
    (n-1)-vertex graph by attaching a new vertex to a subset, so extending
    each representative by every subset and deduplicating canonically is
    exhaustive. Output is sorted by canonical key (deterministic).
    """
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if n == 0:
        return [Graph(0, ())]
    level = {(1, 0): Graph(1, (0,))}
    for size in range(2, n + 1):
        nxt: dict[tuple[int, int], Graph] = {}
        for parent in level.values():
            base = list(parent.adj) + [0]
            for subset in range(1 << (size - 1)):
                adj = list(base)
                adj[size - 1] = subset
                for v in range(size - 1):
                    if subset >> v & 1:
                        adj[v] |= 1 << (size - 1)
                child = Graph(size, tuple(adj))
                key = canonical_key(child)
                if key not in nxt:
                    nxt[key] = canonical_graph(child)
        level = nxt
    return [level[key] for key in sorted(level)]


def nonisomorphic_graphs_upto(n: int, connected_only: bool = False) -> list[Graph]:
    """Non-isomorphic graphs on 1..n vertices, optionally connected only."""
    out = []
    for size in range(1, n + 1):
        for g in nonisomorphic_graphs(size):
            if connected_only and len(connected_components(g)) > 1:
                continue
            out.append(g)
    return out


def random_graphs(n: int, count: int, seed: int, edge_probability: float = 0.5):
    """Seeded stream of labelled Erdos-Renyi graphs on ``n`` vertices."""
    rng = random.Random(seed)
    for _ in range(count):
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < edge_probability
        ]
        yield Graph.from_edges(n, edges)
