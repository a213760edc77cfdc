"""Classify colorings of tensor powers as coordinate-determined or not,
verify power-triviality exhaustively, decide it by the structure theorems,
build the explicit nontrivial square coloring for non-tight graphs, and run
counterexample searches over graph families.

A coloring of a product is *trivial* when one coordinate determines it
through a proper coloring of that factor. A graph is *trivially
power-colorable* when every proper chi-coloring of every finite power is
trivial.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .budget import Budget, ensure_budget
from .coloring import (
    Coloring,
    _iter_color_vectors,
    chromatic_number,
    count_colorings,
    is_proper,
    is_tight_graph,
)
from .cliques import clique_connected_components, is_strongly_cliqued, is_weakly_cliqued
from .errors import (
    BudgetExceededError,
    ImproperColoringError,
    InternalCheckError,
)
from .graphs import (
    Graph,
    ProductSpace,
    connected_components,
    graph6_dumps,
    power,
    tensor_product,
)


@dataclass(frozen=True)
class TrivialityWitness:
    """Coordinate ``i*`` plus the factor coloring phi with Phi(v) = phi(v_{i*})."""

    coordinate: int
    factor_coloring: Coloring


def _classify_vector(ps: ProductSpace, vec) -> tuple[int, tuple[int, ...]] | None:
    """Least coordinate whose fibers are monochromatic and whose induced
    factor coloring is proper, or None. Aborts a coordinate's scan at the
    first violated fiber."""
    columns = ps.coordinate_columns
    for i, column in enumerate(columns):
        factor = ps.factors[i]
        fib = [-1] * factor.n
        ok = True
        for vid, u in enumerate(column):
            c = vec[vid]
            prev = fib[u]
            if prev < 0:
                fib[u] = c
            elif prev != c:
                ok = False
                break
        if not ok:
            continue
        proper = True
        for v in range(factor.n):
            cv = fib[v]
            m = factor.adj[v] >> (v + 1) << (v + 1)
            while m:
                low = m & -m
                if fib[low.bit_length() - 1] == cv:
                    proper = False
                    break
                m ^= low
            if not proper:
                break
        if proper:
            return i, tuple(fib)
    return None


def classify_coloring(ps: ProductSpace, coloring: Coloring) -> TrivialityWitness | None:
    """Witness for the least determining coordinate, or None (nontrivial).

    The factor coloring of a returned witness is proper — a coordinate whose
    fibers are monochromatic but whose induced assignment clashes on a factor
    edge does not certify triviality.
    """
    if ps.product.n == 0:
        raise ValueError("classification is undefined on an empty product")
    if len(coloring.colors) != ps.product.n:
        raise ValueError("coloring does not match the product's vertex set")
    if not is_proper(ps.product, coloring):
        raise ImproperColoringError("cannot classify an improper coloring")
    hit = _classify_vector(ps, coloring.colors)
    if hit is None:
        return None
    i, fib = hit
    return TrivialityWitness(i, Coloring(fib, coloring.k))


@dataclass(frozen=True)
class PowerResult:
    """Outcome of exhaustively classifying one power's proper colorings.

    ``total_proper_colorings`` is exact when the enumeration completed and
    None when it stopped early (first nontrivial example, or budget).
    """

    n: int
    verified: bool
    all_trivial: bool | None
    total_proper_colorings: int | None
    nontrivial_example: Coloring | None


@dataclass(frozen=True)
class PowerTrivialityReport:
    chi: int
    per_power: dict[int, PowerResult]
    theorem_verdict: str

    @property
    def all_trivial(self) -> bool | None:
        """True/False when settled across the verified powers, None if some
        power went unverified without a nontrivial example elsewhere."""
        saw_gap = False
        for result in self.per_power.values():
            if not result.verified:
                saw_gap = True
            elif result.all_trivial is False:
                return False
        return None if saw_gap else True

    def to_json(self) -> dict:
        return {
            "chi": self.chi,
            "theorem_verdict": self.theorem_verdict,
            "per_power": {
                str(n): {
                    "verified": r.verified,
                    "all_trivial": r.all_trivial,
                    "total_proper_colorings": r.total_proper_colorings,
                    "nontrivial_example": (
                        r.nontrivial_example.to_json() if r.nontrivial_example else None
                    ),
                }
                for n, r in sorted(self.per_power.items())
            },
        }


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of the necessary/sufficient structure tests.

    ``kind`` is ``TriviallyPowerColorable``, ``Not`` or ``Unknown``; for
    ``Not`` the reason is ``disconnected``, ``chromatic<3`` or ``not-tight``.
    ``Unknown`` marks the open zone: tight, connected, chi >= 3, yet not
    weakly cliqued.
    """

    kind: str
    reason: str | None = None
    evidence: dict = field(default_factory=dict, compare=False)

    @property
    def label(self) -> str:
        if self.kind == "Not":
            return f"Not({self.reason})"
        return self.kind


def decide_by_theorems(g: Graph, budget: Budget | int | None = None) -> TheoremVerdict:
    """Necessary conditions first (connected, chi >= 3, tight), then the
    sufficient one (weakly cliqued). Anything in between is the open zone."""
    if g.n == 0:
        raise ValueError("verdict is undefined on the empty graph")
    b = ensure_budget(budget)
    comps = connected_components(g)
    if len(comps) > 1:
        return TheoremVerdict("Not", "disconnected", {"components": len(comps)})
    chi = chromatic_number(g, b)
    if chi <= 2:
        return TheoremVerdict("Not", "chromatic<3", {"chi": chi})
    tight, witness = is_tight_graph(g, b)
    if not tight:
        coloring, v, c = witness
        return TheoremVerdict(
            "Not",
            "not-tight",
            {"chi": chi, "coloring": coloring, "vertex": v, "color": c},
        )
    weak, uncovered = is_weakly_cliqued(g, b)
    if weak:
        return TheoremVerdict("TriviallyPowerColorable", None, {"chi": chi})
    return TheoremVerdict("Unknown", None, {"chi": chi, "uncovered_vertex": uncovered})


def verify_power_triviality(
    g: Graph,
    n_max: int,
    budget: Budget | int | None = None,
    capacity: int | None = None,
) -> PowerTrivialityReport:
    """Enumerate and classify every proper chi(g)-coloring of g^n for each
    n <= n_max.

    Per power, enumeration stops at the first nontrivial coloring (recorded
    as the example); a budget exhaustion marks that power unverified instead
    of aborting the report. Only proper colorings are ever generated — the
    backtracker prunes, nothing iterates all k^N assignments.
    """
    if g.n == 0:
        raise ValueError("power triviality is undefined on the empty graph")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    b = ensure_budget(budget)
    chi = chromatic_number(g, b)
    verdict = decide_by_theorems(g, b)
    per_power: dict[int, PowerResult] = {}

    total1 = count_colorings(g, chi, b).count
    per_power[1] = PowerResult(
        n=1,
        verified=True,
        all_trivial=True,
        total_proper_colorings=total1,
        nontrivial_example=None,
    )

    for n in range(2, n_max + 1):
        ps = power(g, n, capacity)
        total = 0
        example = None
        try:
            for vec in _iter_color_vectors(ps.product, chi, b):
                total += 1
                if _classify_vector(ps, vec) is None:
                    example = Coloring(vec, chi)
                    break
        except BudgetExceededError:
            per_power[n] = PowerResult(
                n=n,
                verified=False,
                all_trivial=None,
                total_proper_colorings=None,
                nontrivial_example=None,
            )
            continue
        if example is not None:
            per_power[n] = PowerResult(
                n=n,
                verified=True,
                all_trivial=False,
                total_proper_colorings=None,
                nontrivial_example=example,
            )
        else:
            per_power[n] = PowerResult(
                n=n,
                verified=True,
                all_trivial=True,
                total_proper_colorings=total,
                nontrivial_example=None,
            )

    label = {
        "TriviallyPowerColorable": "SufficientApplies",
        "Unknown": "Undetermined",
    }.get(verdict.kind, f"NecessaryFails({verdict.reason})")
    return PowerTrivialityReport(chi=chi, per_power=per_power, theorem_verdict=label)


def construct_nontrivial_square(
    g: Graph,
    phi: Coloring,
    phi_prime: Coloring,
    w: int,
    capacity: int | None = None,
) -> Coloring:
    """The explicit nontrivial coloring of g^2 from two proper colorings that
    differ exactly at ``w``:

        Phi(u, v) = phi'(v)  if (u, v) == (w, w)
                    phi(v)   otherwise

    Both guarantees (properness, nontriviality) are re-checked; a failure
    raises :class:`InternalCheckError` since the construction proof promises
    them for any valid input.
    """
    if phi.k != phi_prime.k:
        raise ValueError("input colorings use different palettes")
    if not 0 <= w < g.n:
        raise ValueError(f"vertex {w} outside 0..{g.n - 1}")
    if not is_proper(g, phi):
        raise ImproperColoringError("phi is not proper")
    if not is_proper(g, phi_prime):
        raise ImproperColoringError("phi_prime is not proper")
    diff = [v for v in range(g.n) if phi[v] != phi_prime[v]]
    if diff != [w]:
        raise ValueError(
            f"colorings must differ exactly at vertex {w}, differ at {diff}"
        )
    ps = power(g, 2, capacity)
    n = g.n
    ww = w * n + w
    colors = []
    for vid in range(ps.product.n):
        v = vid % n
        colors.append(phi_prime[v] if vid == ww else phi[v])
    result = Coloring(tuple(colors), phi.k)
    if not is_proper(ps.product, result):
        raise InternalCheckError("constructed square coloring is improper")
    if _classify_vector(ps, result.colors) is not None:
        raise InternalCheckError("constructed square coloring is trivial")
    return result


@dataclass(frozen=True)
class ProductTrivialityReport:
    """Classification tally of every proper k-coloring of a mixed product:
    determined by the first factor, by the second, or neither."""

    k: int
    total: int
    first_coordinate: int
    second_coordinate: int
    nontrivial_examples: tuple[Coloring, ...]

    @property
    def nontrivial_count(self) -> int:
        return self.total - self.first_coordinate - self.second_coordinate


def product_triviality_check(
    g: Graph,
    h: Graph,
    budget: Budget | int | None = None,
    capacity: int | None = None,
) -> ProductTrivialityReport:
    """Enumerate all proper k-colorings of g x h (k the common chromatic
    number, at least 3) and classify each one."""
    b = ensure_budget(budget)
    kg = chromatic_number(g, b)
    kh = chromatic_number(h, b)
    if kg != kh:
        raise ValueError(f"chromatic mismatch: chi(g)={kg}, chi(h)={kh}")
    if kg < 3:
        raise ValueError(f"product check requires chi >= 3, got {kg}")
    ps = tensor_product(g, h, capacity)
    total = 0
    first = 0
    second = 0
    nontrivial: list[Coloring] = []
    for vec in _iter_color_vectors(ps.product, kg, b):
        total += 1
        hit = _classify_vector(ps, vec)
        if hit is None:
            nontrivial.append(Coloring(vec, kg))
        elif hit[0] == 0:
            first += 1
        else:
            second += 1
    return ProductTrivialityReport(
        k=kg,
        total=total,
        first_coordinate=first,
        second_coordinate=second,
        nontrivial_examples=tuple(nontrivial),
    )


# -- counterexample search ---------------------------------------------------


FINDING_FIELDS = (
    "graph6",
    "n",
    "chi",
    "connected",
    "tight",
    "weakly_cliqued",
    "strongly_cliqued",
    "verdict",
    "nontrivial_witness",
)


@dataclass(frozen=True)
class Finding:
    """One searched graph: predicate vector, verdict, and (when a square
    check ran) a nontrivial witness coloring. ``violations`` lists failed
    internal theorem checks — a non-empty tuple means a library bug, and the
    field deliberately stays out of the interchange format."""

    graph6: str
    n: int
    chi: int
    connected: bool
    tight: bool
    weakly_cliqued: bool
    strongly_cliqued: bool
    verdict: str
    nontrivial_witness: tuple[int, ...] | None
    violations: tuple[str, ...] = ()

    def to_json(self) -> dict:
        payload = {name: getattr(self, name) for name in FINDING_FIELDS}
        payload["nontrivial_witness"] = (
            list(self.nontrivial_witness) if self.nontrivial_witness is not None else None
        )
        return payload

    @classmethod
    def from_json(cls, payload: dict) -> "Finding":
        witness = payload.get("nontrivial_witness")
        return cls(
            graph6=payload["graph6"],
            n=int(payload["n"]),
            chi=int(payload["chi"]),
            connected=bool(payload["connected"]),
            tight=bool(payload["tight"]),
            weakly_cliqued=bool(payload["weakly_cliqued"]),
            strongly_cliqued=bool(payload["strongly_cliqued"]),
            verdict=payload["verdict"],
            nontrivial_witness=tuple(witness) if witness is not None else None,
        )


def _examine_graph(
    g: Graph, g6: str, power_n: int, b: Budget, check_sufficiency: bool
) -> Finding:
    violations: list[str] = []
    comps = connected_components(g)
    connected = len(comps) <= 1
    chi = chromatic_number(g, b)
    count = count_colorings(g, chi, b).count

    # coloring-count lemma: P(G, chi) >= chi^c(G)
    if count < chi ** len(comps):
        violations.append(f"count-lemma: P={count} < {chi}^{len(comps)}")

    # component lemma at n=2 plus the bipartite special case
    ps2 = power(g, 2)
    c2 = len(connected_components(ps2.product))
    if c2 < len(comps) ** 2:
        violations.append(f"component-lemma: c(G^2)={c2} < c(G)^2")
    if chi == 2 and connected and c2 < 2:
        violations.append(f"bipartite-lemma: c(G^2)={c2} < 2")

    tight, tight_witness = is_tight_graph(g, b)
    weak, _ = is_weakly_cliqued(g, b)
    strong, _ = is_strongly_cliqued(g, b)
    if weak and not tight:
        violations.append("weakly-cliqued graph is not tight")
    if strong and not weak:
        violations.append("strongly cliqued but not weakly cliqued")
    if strong and connected:
        structure = clique_connected_components(g, b)
        if structure.component_count != 1:
            violations.append(
                f"strongly cliqued and connected but {structure.component_count} clique components"
            )

    witness: tuple[int, ...] | None = None
    if not tight and g.edge_count >= 1:
        coloring, v, c = tight_witness
        try:
            square = construct_nontrivial_square(g, coloring, coloring.recolored(v, c), v)
            witness = square.colors
        except InternalCheckError as exc:
            violations.append(f"nontrivial-square construction failed: {exc}")

    if not connected:
        verdict = "Not(disconnected)"
    elif chi <= 2:
        verdict = "Not(chromatic<3)"
    elif not tight:
        verdict = "Not(not-tight)"
    elif weak:
        verdict = "TriviallyPowerColorable"
    else:
        verdict = "Unknown"

    if verdict == "Unknown" or (verdict == "TriviallyPowerColorable" and check_sufficiency):
        report = verify_power_triviality(g, power_n, b)
        for result in report.per_power.values():
            if result.nontrivial_example is not None:
                witness = result.nontrivial_example.colors
                if verdict == "TriviallyPowerColorable":
                    violations.append(
                        f"sufficiency violated: nontrivial coloring of power {result.n}"
                    )
                break

    return Finding(
        graph6=g6,
        n=g.n,
        chi=chi,
        connected=connected,
        tight=tight,
        weakly_cliqued=weak,
        strongly_cliqued=strong,
        verdict=verdict,
        nontrivial_witness=witness,
        violations=tuple(violations),
    )


def counterexample_search(
    graphs,
    power_n: int = 2,
    budget_limit: int | None = None,
    check_sufficiency: bool = True,
    skip_graph6=None,
):
    """Examine each graph and stream findings.

    ``skip_graph6`` (a set) supports resumable runs: graphs whose graph6 key
    is already in the findings log are skipped. A per-graph budget exhaustion
    is logged as a ``budget-exceeded`` verdict, never fatal.
    """
    seen = set(skip_graph6) if skip_graph6 else set()
    for g in graphs:
        if g.n == 0:
            continue
        g6 = graph6_dumps(g)
        if g6 in seen:
            continue
        seen.add(g6)
        b = Budget(budget_limit)
        try:
            yield _examine_graph(g, g6, power_n, b, check_sufficiency)
        except BudgetExceededError:
            yield Finding(
                graph6=g6,
                n=g.n,
                chi=-1,
                connected=False,
                tight=False,
                weakly_cliqued=False,
                strongly_cliqued=False,
                verdict="budget-exceeded",
                nontrivial_witness=None,
            )


def write_findings(findings, stream) -> int:
    """Append findings to a JSON-lines stream; returns the number written."""
    written = 0
    for finding in findings:
        stream.write(json.dumps(finding.to_json()) + "\n")
        written += 1
    return written


def read_findings(stream) -> list[Finding]:
    """Parse a JSON-lines findings log, skipping blank or truncated lines."""
    out = []
    for line in stream:
        line = line.strip()
        if not line:
            continue
        try:
            payload = json.loads(line)
        except json.JSONDecodeError:
            continue
        out.append(Finding.from_json(payload))
    return out
