"""Finite-scale partition lattice machinery for colorings of powers.

For a trivial coloring of g^n, every partition P of the coordinate index set
selects the block I(P) whose coordinate determines the coloring restricted to
the vectors constant on each block. The family of all I(P) generates an
ultrafilter on the index set; on a finite index set every ultrafilter is
principal, so the extraction yields a single generator coordinate plus the
factor coloring read off the diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .budget import Budget, ensure_budget
from .coloring import Coloring, is_proper
from .errors import ImproperColoringError, NontrivialColoringError
from .graphs import Graph, ProductSpace, power
from .triviality import _classify_vector


@dataclass(frozen=True)
class Partition:
    """Partition of the index set ``{0..n-1}`` into nonempty blocks.

    Blocks are stored sorted internally and ordered by minimum element, so
    equal partitions compare equal and serialization is deterministic.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = 0
        for block in self.blocks:
            if not block:
                raise ValueError("partition blocks must be nonempty")
            if list(block) != sorted(set(block)):
                raise ValueError(f"block {block} is not sorted and duplicate-free")
            for i in block:
                if not 0 <= i < self.n:
                    raise ValueError(f"index {i} outside 0..{self.n - 1}")
                if seen >> i & 1:
                    raise ValueError(f"index {i} appears in two blocks")
                seen |= 1 << i
        if seen != (1 << self.n) - 1:
            raise ValueError("blocks do not cover the index set")
        if list(self.blocks) != sorted(self.blocks, key=lambda b: b[0]):
            raise ValueError("blocks must be ordered by minimum element")

    @classmethod
    def from_blocks(cls, n: int, blocks) -> "Partition":
        normalized = sorted((tuple(sorted(set(b))) for b in blocks), key=lambda b: b[0] if b else -1)
        return cls(n, tuple(normalized))

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(n, tuple((i,) for i in range(n)))

    @classmethod
    def trivial(cls, n: int) -> "Partition":
        if n == 0:
            raise ValueError("trivial partition needs a nonempty index set")
        return cls(n, (tuple(range(n)),))

    def block_of(self, i: int) -> int:
        for idx, block in enumerate(self.blocks):
            if i in block:
                return idx
        raise ValueError(f"index {i} not in partition")

    def __len__(self):
        return len(self.blocks)

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def all_partitions(n: int) -> list[Partition]:
    """Every partition of ``{0..n-1}``, generated by block assignment."""
    if n == 0:
        return [Partition(0, ())]
    out = []

    def rec(i: int, blocks: list[list[int]]):
        if i == n:
            out.append(Partition.from_blocks(n, [tuple(b) for b in blocks]))
            return
        for b in blocks:
            b.append(i)
            rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        rec(i + 1, blocks)
        blocks.pop()

    rec(0, [])
    return out


def refines(p1: Partition, p2: Partition) -> bool:
    """Whether every block of p1 fits inside some block of p2 (reflexive)."""
    if p1.n != p2.n:
        raise ValueError(f"index-set mismatch: {p1.n} vs {p2.n}")
    owner = {}
    for idx, block in enumerate(p2.blocks):
        for i in block:
            owner[i] = idx
    for block in p1.blocks:
        target = owner[block[0]]
        if any(owner[i] != target for i in block[1:]):
            return False
    return True


def meet(p1: Partition, p2: Partition) -> Partition:
    """Greatest common refinement: nonempty pairwise block intersections."""
    if p1.n != p2.n:
        raise ValueError(f"index-set mismatch: {p1.n} vs {p2.n}")
    blocks = []
    for a in p1.blocks:
        a_set = set(a)
        for b in p2.blocks:
            inter = a_set.intersection(b)
            if inter:
                blocks.append(tuple(sorted(inter)))
    return Partition.from_blocks(p1.n, blocks)


def _require_power(ps: ProductSpace) -> Graph:
    if not ps.is_power():
        raise ValueError("operation requires a power (identical factors)")
    return ps.factors[0]


@lru_cache(maxsize=64)
def _cached_power(g: Graph, n: int) -> ProductSpace:
    return power(g, n)


def restrict_to_partition(
    ps: ProductSpace, coloring: Coloring, p: Partition
) -> tuple[Coloring, tuple[tuple[int, ...], ...]]:
    """Coloring of g^|p| read off the vectors constant on each block.

    The isomorphism sends a block-constant vector to the tuple of its block
    values, blocks ordered by minimum element. Returns the restricted
    coloring and that block order.
    """
    g = _require_power(ps)
    if len(ps.factors) != p.n:
        raise ValueError(
            f"partition indexes {p.n} coordinates, product has {len(ps.factors)}"
        )
    if not is_proper(ps.product, coloring):
        raise ImproperColoringError("cannot restrict an improper coloring")
    m = len(p.blocks)
    block_of = [0] * p.n
    for idx, block in enumerate(p.blocks):
        for i in block:
            block_of[i] = idx
    strides = ps.strides
    size = g.n
    colors = []
    for wid in range(size**m):
        block_values = [(wid // size ** (m - 1 - j)) % size for j in range(m)]
        vid = 0
        for i in range(p.n):
            vid += block_values[block_of[i]] * strides[i]
        colors.append(coloring[vid])
    return Coloring(tuple(colors), coloring.k), p.blocks


def index_block(ps: ProductSpace, coloring: Coloring, p: Partition) -> tuple[int, ...]:
    """The block I(p) whose coordinate determines the restricted coloring.

    Raises :class:`NontrivialColoringError` when no block does — the input
    graph is then not trivially power-colorable, or the coloring defective.
    """
    g = _require_power(ps)
    restricted, blocks = restrict_to_partition(ps, coloring, p)
    sub = _cached_power(g, len(blocks))
    hit = _classify_vector(sub, restricted.colors)
    if hit is None:
        raise NontrivialColoringError(
            f"restriction to {p.to_json()} is not coordinate-determined"
        )
    return blocks[hit[0]]


@dataclass(frozen=True)
class PrincipalUltrafilterWitness:
    """Principal generator index plus the factor coloring; together they
    reproduce the product coloring as phi(v_generator)."""

    generator: int
    factor_coloring: Coloring


def extract_ultrafilter(ps: ProductSpace, coloring: Coloring) -> PrincipalUltrafilterWitness:
    """Extract the principal ultrafilter witness of a trivial coloring.

    Uses the discrete partition directly: its selected block is a singleton,
    the generator. The factor coloring is read off the diagonal vectors and
    then checked against every product vertex.
    """
    g = _require_power(ps)
    n = len(ps.factors)
    block = index_block(ps, coloring, Partition.discrete(n))
    generator = block[0]
    diagonal = []
    for w in range(g.n):
        vid = ps.encode((w,) * n)
        diagonal.append(coloring[vid])
    factor_coloring = Coloring(tuple(diagonal), coloring.k)
    if not is_proper(g, factor_coloring):
        raise NontrivialColoringError("diagonal restriction is not a proper coloring")
    column = ps.coordinate_columns[generator]
    for vid in range(ps.product.n):
        if coloring[vid] != diagonal[column[vid]]:
            raise NontrivialColoringError(
                f"coordinate {generator} does not reproduce the coloring at vertex {vid}"
            )
    return PrincipalUltrafilterWitness(generator=generator, factor_coloring=factor_coloring)


def ultrafilter_coloring(g: Graph, phi: Coloring, generator: int, n: int) -> Coloring:
    """The coloring of g^n induced by phi through the principal ultrafilter
    at ``generator``: v maps to phi(v_generator). Always proper when phi is."""
    if not 0 <= generator < n:
        raise ValueError(f"generator {generator} outside 0..{n - 1}")
    if not is_proper(g, phi):
        raise ImproperColoringError("phi is not a proper coloring")
    ps = _cached_power(g, n)
    column = ps.coordinate_columns[generator]
    return Coloring(tuple(phi[u] for u in column), phi.k)


def index_family(ps: ProductSpace, coloring: Coloring) -> set[frozenset[int]]:
    """All upward closures {S : S contains some I(p)} over every partition.

    At finite scale this is exactly the principal ultrafilter at the
    extracted generator; the property suite asserts the ultrafilter axioms
    against this family.
    """
    n = len(ps.factors)
    base = {frozenset(index_block(ps, coloring, p)) for p in all_partitions(n)}
    family = set()
    for subset in range(1 << n):
        s = frozenset(i for i in range(n) if subset >> i & 1)
        if any(b <= s for b in base):
            family.add(s)
    return family
