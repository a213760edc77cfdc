"""Exact proper-coloring machinery: enumeration, counting, chromatic number,
and the tightness predicates.

Counting convention: ``count_colorings(g, k)`` counts labeled proper colorings
with the palette ``{0..k-1}`` available, surjectivity NOT required. That is
the quantity the coloring-count arguments need (free palette permutation).

Enumeration order is fixed: lexicographic on the color vector with vertex
order ``0..n-1``. The backtracker forward-prunes — assigning a color strips
it from the availability mask of every later neighbour, and a wiped-out mask
kills the branch — so no partial assignment with a monochromatic edge, and no
partial assignment that cannot be completed for a purely local reason, is
ever expanded.
"""
from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget, ensure_budget
from .errors import ImproperColoringError
from .graphs import Graph, connected_components, induced_subgraph

_CHARGE_BLOCK = 4096


@dataclass(frozen=True)
class Coloring:
    """Total assignment vertex id -> color index in ``{0..k-1}``.

    Properness is a predicate (:func:`is_proper`), not an invariant: improper
    assignments stay representable so oracles can reason about them.
    """

    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError(f"palette size must be nonnegative, got {self.k}")
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.k:
                raise ValueError(f"vertex {v} has color {c} outside 0..{self.k - 1}")

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def recolored(self, v: int, c: int) -> "Coloring":
        colors = list(self.colors)
        colors[v] = c
        return Coloring(tuple(colors), self.k)

    def to_json(self) -> list[int]:
        return list(self.colors)

    @classmethod
    def from_json(cls, payload, k: int) -> "Coloring":
        return cls(tuple(int(c) for c in payload), k)


@dataclass(frozen=True)
class ColoringCount:
    k: int
    count: int


def is_proper(g: Graph, coloring: Coloring) -> bool:
    """True iff no edge is monochromatic. Raises on a domain mismatch."""
    if len(coloring.colors) != g.n:
        raise ValueError(
            f"coloring covers {len(coloring.colors)} vertices, graph has {g.n}"
        )
    colors = coloring.colors
    for v in range(g.n):
        cv = colors[v]
        m = g.adj[v] >> (v + 1) << (v + 1)
        while m:
            low = m & -m
            if colors[low.bit_length() - 1] == cv:
                return False
            m ^= low
    return True


def _check_proper(g: Graph, coloring: Coloring, what: str = "coloring") -> None:
    if not is_proper(g, coloring):
        raise ImproperColoringError(f"{what} is not a proper coloring")


def _iter_color_vectors(g: Graph, k: int, budget: Budget):
    """Yield proper color vectors (tuples) in lexicographic order.

    Internal workhorse behind enumeration, counting and existence checks.
    """
    n = g.n
    if n == 0:
        yield ()
        return
    if k == 0:
        return
    full = (1 << k) - 1
    later = [tuple(u for u in range(v + 1, n) if g.adj[v] >> u & 1) for v in range(n)]
    avail = [full] * n
    colors = [0] * n
    cand = [0] * n
    undo: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    d = 0
    cand[0] = full
    last = n - 1
    spent = 0
    while True:
        spent += 1
        if spent >= _CHARGE_BLOCK:
            budget.charge(spent)
            spent = 0
        c = cand[d]
        if c:
            low = c & -c
            cand[d] = c ^ low
            colors[d] = low.bit_length() - 1
            dead = False
            mods = []
            for w in later[d]:
                prev = avail[w]
                if prev & low:
                    nxt = prev ^ low
                    avail[w] = nxt
                    mods.append((w, prev))
                    if nxt == 0:
                        dead = True
            if dead:
                for w, prev in mods:
                    avail[w] = prev
                continue
            if d == last:
                yield tuple(colors)
                for w, prev in mods:
                    avail[w] = prev
                continue
            undo[d] = mods
            d += 1
            cand[d] = avail[d]
        else:
            d -= 1
            if d < 0:
                break
            for w, prev in undo[d]:
                avail[w] = prev
            undo[d] = []
    if spent:
        budget.charge(spent)


def enumerate_colorings(g: Graph, k: int, budget: Budget | int | None = None):
    """Yield every proper coloring with palette ``{0..k-1}`` exactly once,
    lexicographically on the color vector."""
    if k < 0:
        raise ValueError(f"palette size must be nonnegative, got {k}")
    b = ensure_budget(budget)
    for vec in _iter_color_vectors(g, k, b):
        yield Coloring(vec, k)


def count_colorings(g: Graph, k: int, budget: Budget | int | None = None) -> ColoringCount:
    """Exact number of proper colorings with palette ``{0..k-1}``.

    Factors over connected components: each component is counted by the
    pruned backtracker and the per-component counts multiply.
    """
    if k < 0:
        raise ValueError(f"palette size must be nonnegative, got {k}")
    b = ensure_budget(budget)
    total = 1
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        here = 0
        for _ in _iter_color_vectors(sub, k, b):
            here += 1
        total *= here
        if total == 0:
            break
    return ColoringCount(k=k, count=total)


def _exists_coloring(g: Graph, k: int, budget: Budget) -> bool:
    """Existence check with color symmetry breaking.

    Vertex ``d`` may only pick a color at most one above the highest color
    used so far; sound for existence because any proper coloring can be
    relabelled into that canonical form.
    """
    n = g.n
    if n == 0:
        return True
    if k == 0:
        return False
    full = (1 << k) - 1
    later = [tuple(u for u in range(v + 1, n) if g.adj[v] >> u & 1) for v in range(n)]
    avail = [full] * n
    cand = [0] * n
    hi = [0] * n  # highest color index used strictly before depth d, plus one
    undo: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    d = 0
    cand[0] = 1  # vertex 0 is pinned to color 0
    hi[0] = 0
    last = n - 1
    spent = 0
    while True:
        spent += 1
        if spent >= _CHARGE_BLOCK:
            budget.charge(spent)
            spent = 0
        c = cand[d]
        if c:
            low = c & -c
            cand[d] = c ^ low
            dead = False
            mods = []
            for w in later[d]:
                prev = avail[w]
                if prev & low:
                    nxt = prev ^ low
                    avail[w] = nxt
                    mods.append((w, prev))
                    if nxt == 0:
                        dead = True
            if dead:
                for w, prev in mods:
                    avail[w] = prev
                continue
            if d == last:
                for w, prev in mods:
                    avail[w] = prev
                budget.charge(spent)
                return True
            undo[d] = mods
            color = low.bit_length() - 1
            nxt_hi = color if color > hi[d] else hi[d]
            d += 1
            hi[d] = nxt_hi
            limit = nxt_hi + 2
            cap = full if limit >= k else (1 << limit) - 1
            cand[d] = avail[d] & cap
        else:
            d -= 1
            if d < 0:
                break
            for w, prev in undo[d]:
                avail[w] = prev
            undo[d] = []
    if spent:
        budget.charge(spent)
    return False


def _greedy_upper_bound(g: Graph) -> int:
    best = 0
    colors = [-1] * g.n
    for v in range(g.n):
        used = 0
        m = g.adj[v]
        while m:
            low = m & -m
            u = low.bit_length() - 1
            if colors[u] >= 0:
                used |= 1 << colors[u]
            m ^= low
        c = 0
        while used >> c & 1:
            c += 1
        colors[v] = c
        if c + 1 > best:
            best = c + 1
    return best


def _greedy_clique_lower_bound(g: Graph) -> int:
    if g.n == 0:
        return 0
    start = max(range(g.n), key=lambda v: g.adj[v].bit_count())
    clique = 1 << start
    cand = g.adj[start]
    while cand:
        members = []
        m = cand
        while m:
            low = m & -m
            members.append(low.bit_length() - 1)
            m ^= low
        v = max(members, key=lambda u: (g.adj[u] & cand).bit_count())
        clique |= 1 << v
        cand &= g.adj[v]
    return clique.bit_count()


def chromatic_number(g: Graph, budget: Budget | int | None = None) -> int:
    """Minimal k admitting a proper coloring; 0 for the empty graph."""
    if g.n == 0:
        return 0
    if all(m == 0 for m in g.adj):
        return 1
    b = ensure_budget(budget)
    lo = max(2, _greedy_clique_lower_bound(g))
    hi = _greedy_upper_bound(g)
    for k in range(lo, hi):
        if _exists_coloring(g, k, b):
            return k
    return hi


def is_tight_coloring(g: Graph, coloring: Coloring):
    """Tightness of one coloring: every vertex sees every other color on a
    neighbour. Returns ``(True, None)`` or ``(False, (vertex, color))`` where
    recoloring the witness vertex to the witness color stays proper.
    """
    _check_proper(g, coloring, "input")
    colors = coloring.colors
    full = (1 << coloring.k) - 1
    for v in range(g.n):
        seen = 1 << colors[v]
        m = g.adj[v]
        while m:
            low = m & -m
            seen |= 1 << colors[low.bit_length() - 1]
            m ^= low
        missing = full & ~seen
        if missing:
            return False, (v, (missing & -missing).bit_length() - 1)
    return True, None


def is_tight_graph(g: Graph, budget: Budget | int | None = None):
    """Whether every proper chi(g)-coloring of ``g`` is tight.

    Returns ``(True, None)`` or ``(False, (coloring, vertex, color))``.
    Undefined (raises) on the empty graph.
    """
    if g.n == 0:
        raise ValueError("tightness is undefined on the empty graph")
    b = ensure_budget(budget)
    k = chromatic_number(g, b)
    for coloring in enumerate_colorings(g, k, b):
        ok, witness = is_tight_coloring(g, coloring)
        if not ok:
            v, c = witness
            return False, (coloring, v, c)
    return True, None
