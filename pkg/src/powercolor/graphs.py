"""Immutable finite simple graphs with bit-parallel adjacency.

Vertices are always the dense range ``0..n-1``; the neighbourhood of vertex
``v`` is stored as an int bitmask, which keeps set operations (intersection,
difference, popcount) cheap everywhere downstream — clique search, coloring
backtrackers, component sweeps.

Tensor products identify a product vertex with the mixed-radix encoding of
its coordinate tuple (row-major over the factor order), so decoding is
arithmetic rather than a stored table.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import prod

from .errors import CapacityError

DEFAULT_CAPACITY = 10**7

GRAPH6_HEADER = ">>graph6<<"


def _bits(mask: int):
    """Iterate set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the neighbour bitmask of ``v``. Instances are immutable and
    hashable, hence safe to share across workers and to use as cache keys.
    Optional ``labels`` are display-only and ignored by equality.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, mask in enumerate(self.adj):
            for u in _bits(mask):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must cover every vertex")

    def __hash__(self):
        return hash((self.n, self.adj))

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj), tuple(labels) if labels is not None else None)

    # -- basic accessors ---------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            higher = self.adj[v] >> (v + 1) << (v + 1)
            for u in _bits(higher):
                out.append((v, u))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def vertex_label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class ProductSpace:
    """A tensor product together with its factors and coordinate arithmetic.

    Product vertex ids are the mixed-radix encoding of coordinate tuples:
    ``id = sum(coords[i] * strides[i])`` with ``strides[i]`` the product of
    the sizes of the later factors (row-major, factor 0 most significant).
    """

    product: Graph
    factors: tuple[Graph, ...]

    @cached_property
    def strides(self) -> tuple[int, ...]:
        sizes = [f.n for f in self.factors]
        out = []
        acc = 1
        for size in reversed(sizes):
            out.append(acc)
            acc *= size
        return tuple(reversed(out))

    def decode(self, vid: int) -> tuple[int, ...]:
        return tuple(
            (vid // stride) % f.n for stride, f in zip(self.strides, self.factors)
        )

    def encode(self, coords) -> int:
        if len(coords) != len(self.factors):
            raise ValueError("coordinate tuple has wrong arity")
        vid = 0
        for c, stride, f in zip(coords, self.strides, self.factors):
            if not 0 <= c < f.n:
                raise ValueError(f"coordinate {c} outside factor of size {f.n}")
            vid += c * stride
        return vid

    @cached_property
    def coordinate_columns(self) -> tuple[tuple[int, ...], ...]:
        """``columns[i][vid]`` = i-th coordinate of product vertex ``vid``."""
        n_prod = self.product.n
        cols = []
        for stride, f in zip(self.strides, self.factors):
            size = f.n
            cols.append(tuple((vid // stride) % size for vid in range(n_prod)))
        return tuple(cols)

    def is_power(self) -> bool:
        return len(self.factors) >= 1 and all(f == self.factors[0] for f in self.factors)

    def __repr__(self):
        shape = "x".join(str(f.n) for f in self.factors)
        return f"ProductSpace({shape} -> {self.product.n} vertices)"


def _product_space(factors: tuple[Graph, ...], capacity: int | None) -> ProductSpace:
    bound = DEFAULT_CAPACITY if capacity is None else capacity
    n_prod = prod(f.n for f in factors)
    if n_prod > bound:
        raise CapacityError(
            f"product would have {n_prod} vertices, above the bound {bound}"
        )
    sizes = [f.n for f in factors]
    strides = []
    acc = 1
    for size in reversed(sizes):
        strides.append(acc)
        acc *= size
    strides.reverse()

    neighbor_lists = [[tuple(_bits(f.adj[v])) for v in range(f.n)] for f in factors]
    adj = [0] * n_prod
    for vid in range(n_prod):
        offsets = [0]
        for stride, size, nl in zip(strides, sizes, neighbor_lists):
            coord = (vid // stride) % size
            nbrs = nl[coord]
            if not nbrs:
                offsets = []
                break
            offsets = [base + u * stride for base in offsets for u in nbrs]
        mask = 0
        for w in offsets:
            mask |= 1 << w
        adj[vid] = mask
    return ProductSpace(Graph(n_prod, tuple(adj)), factors)


def tensor_product(g: Graph, h: Graph, capacity: int | None = None) -> ProductSpace:
    """Tensor (categorical) product: (u,v)(u',v') is an edge iff uu' and vv' are."""
    return _product_space((g, h), capacity)


def power(g: Graph, n: int, capacity: int | None = None) -> ProductSpace:
    """n-fold tensor power of ``g``; vertex ids encode n-tuples base ``g.n``."""
    if n < 1:
        raise ValueError(f"power exponent must be >= 1, got {n}")
    return _product_space((g,) * n, capacity)


def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Reachability classes, each sorted, ordered by smallest member."""
    seen = 0
    comps = []
    for start in range(g.n):
        bit = 1 << start
        if seen & bit:
            continue
        comp = bit
        frontier = bit
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(tuple(_bits(comp)))
    return tuple(comps)


def component_count(g: Graph) -> int:
    return len(connected_components(g))


def is_connected(g: Graph) -> bool:
    """True for the empty graph and for graphs with exactly one component."""
    return len(connected_components(g)) <= 1


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph(g.n, adj, g.labels)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [mask << g.n for mask in h.adj]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = tuple(
            [g.vertex_label(v) for v in range(g.n)]
            + [h.vertex_label(v) for v in range(h.n)]
        )
    return Graph(g.n + h.n, tuple(adj), labels)


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices`` with re-densified ids.

    Returns the subgraph and the id mapping: ``mapping[new_id] = old_id``.
    """
    mapping = tuple(sorted(set(vertices)))
    for v in mapping:
        if not 0 <= v < g.n:
            raise ValueError(f"unknown vertex id {v}")
    index = {old: new for new, old in enumerate(mapping)}
    keep = 0
    for v in mapping:
        keep |= 1 << v
    adj = []
    for old in mapping:
        mask = 0
        for u in _bits(g.adj[old] & keep):
            mask |= 1 << index[u]
        adj.append(mask)
    labels = None
    if g.labels is not None:
        labels = tuple(g.labels[old] for old in mapping)
    return Graph(len(mapping), tuple(adj), labels), mapping


# -- common families -------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_multipartite(*part_sizes: int) -> Graph:
    n = sum(part_sizes)
    part_of = []
    for i, size in enumerate(part_sizes):
        part_of.extend([i] * size)
    edges = [
        (u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]
    ]
    return Graph.from_edges(n, edges)


def bowtie_graph() -> Graph:
    """Two triangles sharing one vertex (vertex 2 is the waist)."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


# -- graph6 ----------------------------------------------------------------


def graph6_dumps(g: Graph) -> str:
    """Encode in graph6 (no header), bit-exact per the format definition."""
    if g.n > 68719476735:
        raise ValueError("graph too large for graph6")
    out = []
    if g.n <= 62:
        out.append(chr(g.n + 63))
    elif g.n <= 258047:
        out.append(chr(126))
        out.extend(chr(((g.n >> shift) & 63) + 63) for shift in (12, 6, 0))
    else:
        out.append(chr(126))
        out.append(chr(126))
        out.extend(chr(((g.n >> shift) & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        column = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | (column >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(acc + 63))
    return "".join(out)


def graph6_loads(text: str) -> Graph:
    """Decode one graph6 string; tolerates the optional ``>>graph6<<`` header."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if any(b < 0 or b > 63 for b in data):
        raise ValueError(f"invalid graph6 character in {s!r}")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    elif len(data) >= 8:
        n = 0
        for b in data[2:8]:
            n = (n << 6) | b
        body = data[8:]
    else:
        raise ValueError(f"truncated graph6 string {s!r}")
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise ValueError(f"graph6 string {s!r} too short for n={n}")
    bits = []
    for b in body:
        bits.extend((b >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    adj = [0] * n
    pos = 0
    for v in range(1, n):
        for u in range(v):
            if bits[pos]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            pos += 1
    return Graph(n, tuple(adj))


# -- JSON edge lists --------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    payload = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.labels is not None:
        payload["labels"] = list(g.labels)
    return payload


def graph_from_json(payload) -> Graph:
    if isinstance(payload, str):
        payload = json.loads(payload)
    if not isinstance(payload, dict) or "n" not in payload or "edges" not in payload:
        raise ValueError("graph JSON must contain 'n' and 'edges'")
    return Graph.from_edges(
        int(payload["n"]),
        [tuple(e) for e in payload["edges"]],
        payload.get("labels"),
    )


def product_space_to_json(ps: ProductSpace) -> dict:
    return {
        "product": graph_to_json(ps.product),
        "factors": [graph_to_json(f) for f in ps.factors],
        "encoding": {"convention": "mixed-radix-row-major", "strides": list(ps.strides)},
    }


def parse_graph_text(text: str, fmt: str = "auto") -> Graph:
    """Parse a graph from raw text handed to the CLI.

    ``fmt`` is ``auto`` (detect JSON vs graph6), ``json``, or ``graph6``.
    Auto-detection: a body starting with ``{`` is JSON, anything else graph6.
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty graph input")
    if fmt == "json":
        return graph_from_json(stripped)
    if fmt == "graph6":
        return graph6_loads(stripped.splitlines()[0])
    if fmt != "auto":
        raise ValueError(f"unknown input format {fmt!r}")
    if stripped.startswith("{"):
        return graph_from_json(stripped)
    return graph6_loads(stripped.splitlines()[0])
