"""Constructions of LU-equivalent, LC-inequivalent graph-state pairs.

The bipartite family: n left vertices, one right vertex per r-subset of
the left side, joined to exactly that subset. Applying X^(1/4) on every
right vertex accumulates, on each left k-subset, the weight
(-2)**(k-1)/4 once per right vertex covering it; for suitable n and r
everything fractional cancels (after local Z corrections) and only the
complete graph on the left side survives, giving a second graph state
reachable by local unitaries. LC equivalence of the pair is then
refuted exactly over GF(2), with an edge-parity certificate.
"""

from __future__ import annotations

import math
import time
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, islice
from typing import Iterable, Sequence, Union

from .errors import (
    CancellationError,
    InconclusiveError,
    PreconditionError,
    SizeLimitError,
)
from .hypergraph import (
    Edge,
    SimpleGraph,
    WeightedHypergraph,
    from_graph,
    states_equal,
    to_graph,
)
from .lc_solver import (
    BipartiteSplit,
    CliffordWitness,
    LemmaReport,
    lc_equivalent,
    lemma_case_analysis,
)
from .transforms import (
    GateSequence,
    apply_sequence,
    local_complement,
    x_power_gate,
    z_power_gate,
)
from .weights import QUARTER, Weight

DEFAULT_RIGHT_CAP = 100_000


@dataclass(frozen=True)
class BipartiteSubsets:
    """n left vertices, one right vertex per size-r subset of them."""

    n: int
    r: int

    def __post_init__(self) -> None:
        if not (1 <= self.r <= self.n):
            raise ValueError(f"need 1 <= r <= n, got r={self.r}, n={self.n}")

    @property
    def name(self) -> str:
        return f"bipartite:{self.n}:{self.r}"


@dataclass(frozen=True)
class TwentySeven:
    """Six central vertices joined to all their 5-subsets and 4-subsets."""

    @property
    def name(self) -> str:
        return "twentyseven"


@dataclass(frozen=True)
class GraphToHypergraph7:
    """Seven-qubit graph whose state is locally equivalent to a
    hypergraph state with a three-edge."""

    @property
    def name(self) -> str:
        return "g2h7"


ConstructionSpec = Union[BipartiteSubsets, TwentySeven, GraphToHypergraph7]


def parse_spec(text: str) -> ConstructionSpec:
    parts = text.strip().split(":")
    if parts[0] == "bipartite" and len(parts) == 3:
        return BipartiteSubsets(int(parts[1]), int(parts[2]))
    if text.strip() == "twentyseven":
        return TwentySeven()
    if text.strip() == "g2h7":
        return GraphToHypergraph7()
    raise ValueError(f"unknown construction spec {text!r}")


def build(
    spec: ConstructionSpec, right_cap: int = DEFAULT_RIGHT_CAP
) -> tuple[SimpleGraph, BipartiteSplit]:
    """Deterministic construction: left block first, right blocks in
    lexicographic subset order."""
    if isinstance(spec, BipartiteSubsets):
        count = math.comb(spec.n, spec.r)
        if count > right_cap:
            raise SizeLimitError(f"C({spec.n},{spec.r})={count} exceeds cap {right_cap}")
        edges = []
        v = spec.n
        for subset in combinations(range(spec.n), spec.r):
            edges += [(u, v) for u in subset]
            v += 1
        g = SimpleGraph.from_edges(spec.n + count, edges)
        return g, BipartiteSplit(tuple(range(spec.n)), tuple(range(spec.n, g.n)))
    if isinstance(spec, TwentySeven):
        edges = []
        v = 6
        for size in (5, 4):
            for subset in combinations(range(6), size):
                edges += [(u, v) for u in subset]
                v += 1
        g = SimpleGraph.from_edges(27, edges)
        return g, BipartiteSplit(tuple(range(6)), tuple(range(6, 27)))
    if isinstance(spec, GraphToHypergraph7):
        g, _, _ = build_graph_to_hypergraph7()
        return g, BipartiteSplit((1, 2, 3), (0, 4, 5, 6))
    raise TypeError(f"unsupported spec {spec!r}")


def build_graph_to_hypergraph7() -> tuple[SimpleGraph, GateSequence, WeightedHypergraph]:
    """Input graph, gate witness and expected hypergraph of the
    graph-to-hypergraph pipeline.

    The graph is a four-qubit star on 0..3 (center 0) with three extra
    qubits, each joined to one pair of leaves. X^(1/4) on the center
    creates the three-edge {1,2,3} plus fractional debris; X^(-1/4) on
    the pair qubits cancels the fractional two-edges; Z^(1/4) on the
    leaves removes the leftover single-qubit weights.
    """
    g = SimpleGraph.from_edges(
        7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (1, 5), (3, 5), (2, 6), (3, 6)]
    )
    quarter, minus_quarter = QUARTER, Weight(-1, 2)
    witness: GateSequence = (
        x_power_gate(0, quarter),
        x_power_gate(4, minus_quarter),
        x_power_gate(5, minus_quarter),
        x_power_gate(6, minus_quarter),
        z_power_gate(1, quarter),
        z_power_gate(2, quarter),
        z_power_gate(3, quarter),
    )
    expected = WeightedHypergraph.make(
        g.n,
        {e: Weight(1) for e in g.edge_list()} | {(1, 2, 3): Weight(1)},
    )
    return g, witness, expected


@dataclass
class LedgerRow:
    cardinality: int
    raw: Fraction
    reduced: Weight
    count: int

    def as_dict(self) -> dict:
        return {
            "cardinality": self.cardinality,
            "raw": str(self.raw),
            "reduced": str(self.reduced),
            "count": self.count,
        }


@dataclass
class WeightLedger:
    """Pre-reduction weight bookkeeping of one X^(1/4) sweep."""

    alpha: Weight
    rows: list[LedgerRow]
    corrections: list[tuple[int, Weight]]
    residues: list[tuple[Edge, Weight]]

    def rows_for(self, cardinality: int) -> list[LedgerRow]:
        return [r for r in self.rows if r.cardinality == cardinality]

    def as_dict(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "rows": [r.as_dict() for r in self.rows],
            "corrections": [
                {"qubit": q, "exponent": str(w)} for q, w in self.corrections
            ],
            "residues": [
                {"v": list(e), "w": str(w)} for e, w in self.residues
            ],
        }


@dataclass
class LuDerivation:
    target: SimpleGraph
    witness: GateSequence
    ledger: WeightLedger


def _raw_sweep_deltas(
    g: SimpleGraph, split: BipartiteSplit, alpha: Fraction
) -> dict[Edge, Fraction]:
    """Exact pre-reduction edge deltas of X^alpha on every right vertex."""
    raw: dict[Edge, Fraction] = defaultdict(Fraction)
    for v in split.right:
        nbrs = g.neighbors(v)
        for size in range(1, len(nbrs) + 1):
            contrib = Fraction((-2) ** (size - 1)) * alpha
            for subset in combinations(nbrs, size):
                raw[subset] += contrib
    return dict(raw)


def derive_lu_partner(g: SimpleGraph, split: BipartiteSplit) -> LuDerivation:
    """Run the X^(1/4) sweep plus Z corrections and extract the target graph.

    Raises :class:`CancellationError` (carrying the full ledger) when
    fractional or higher-cardinality edges survive, i.e. when the
    construction parameters do not cancel.
    """
    split.validate(g)
    alpha = QUARTER
    sweep: GateSequence = tuple(x_power_gate(v, alpha) for v in split.right)
    state = apply_sequence(from_graph(g), sweep)

    raw = _raw_sweep_deltas(g, split, alpha.as_fraction())
    for e, frac in raw.items():
        engine_w = state.weight(e)
        expected = Weight.from_fraction(frac % 2)
        if len(e) == 2 and g.has_edge(*e):
            expected = expected + Weight(1)
        if engine_w != expected:
            raise AssertionError(
                f"engine weight {engine_w} at {e} disagrees with raw ledger {frac}"
            )

    corrections = [
        (e[0], -w) for e, w in state.edges if len(e) == 1
    ]
    fixes: GateSequence = tuple(z_power_gate(q, w) for q, w in corrections)
    final = apply_sequence(state, fixes)

    grouped: dict[tuple[int, Fraction], int] = defaultdict(int)
    for e, frac in raw.items():
        grouped[(len(e), frac)] += 1
    rows = [
        LedgerRow(card, frac, Weight.from_fraction(frac % 2), count)
        for (card, frac), count in sorted(grouped.items())
    ]
    residues = [(e, w) for e, w in final.edges if len(e) != 2 or w != Weight(1)]
    ledger = WeightLedger(alpha, rows, corrections, residues)

    if residues:
        raise CancellationError(
            f"{len(residues)} edges survive the sweep uncancelled", ledger=ledger
        )
    return LuDerivation(to_graph(final), sweep + fixes, ledger)


@dataclass
class VerificationReport:
    """Outcome of the LU-yes / LC-no check for one constructed pair."""

    spec_name: str
    lu_equivalent: bool
    witness: GateSequence | None
    ledger: WeightLedger | None
    lc_verdict: str  # yes-with-witness | no-by-solver | no-by-parity | inconclusive
    lc_witness: CliffordWitness | None
    lemma: LemmaReport | None
    confirmed: bool
    elapsed_seconds: float

    def as_dict(self) -> dict:
        from .serialize import sequence_to_list

        return {
            "spec": self.spec_name,
            "confirmed": self.confirmed,
            "lu": {
                "equivalent": self.lu_equivalent,
                "witness": sequence_to_list(self.witness) if self.witness else None,
                "ledger": self.ledger.as_dict() if self.ledger else None,
            },
            "lc": {
                "verdict": self.lc_verdict,
                "witness": self.lc_witness.as_dict() if self.lc_witness else None,
            },
            "lemma": self.lemma.as_dict() if self.lemma else None,
            "elapsed_seconds": self.elapsed_seconds,
        }


def verify_counterexample(
    g1: SimpleGraph,
    split: BipartiteSplit,
    g2: SimpleGraph,
    spec_name: str = "custom",
) -> VerificationReport:
    """Combine the LU derivation, the GF(2) solver and the case analysis.

    The solver verdict and the structural analysis must agree; any
    disagreement aborts loudly rather than producing a report.
    """
    start = time.perf_counter()
    derivation = derive_lu_partner(g1, split)
    if derivation.target != g2:
        raise PreconditionError("derived LU partner differs from the supplied graph")
    replay = apply_sequence(from_graph(g1), derivation.witness)
    if not states_equal(replay, from_graph(g2), ignore_global_phase=True):
        raise AssertionError("witness replay does not reproduce the target state")

    lc_witness: CliffordWitness | None = None
    solver_outcome: str
    try:
        lc_witness = lc_equivalent(g1, g2)
        solver_outcome = "witness" if lc_witness is not None else "none"
    except InconclusiveError:
        solver_outcome = "inconclusive"

    lemma = lemma_case_analysis(g1, split, g2)

    if lemma.case2_solvable and solver_outcome == "none":
        raise AssertionError(
            "structural analysis found a complementation set but the solver "
            f"reported inequivalence: {lemma.as_dict()}"
        )
    if not lemma.case2_solvable and solver_outcome == "witness":
        raise AssertionError(
            "solver found a witness but the structural analysis proves "
            f"impossibility: {lemma.as_dict()}"
        )

    if solver_outcome == "witness":
        verdict = "yes-with-witness"
    elif solver_outcome == "none":
        verdict = "no-by-solver"
    elif not lemma.case2_solvable:
        verdict = "no-by-parity"
    else:
        verdict = "inconclusive"

    confirmed = verdict in ("no-by-solver", "no-by-parity")
    return VerificationReport(
        spec_name=spec_name,
        lu_equivalent=True,
        witness=derivation.witness,
        ledger=derivation.ledger,
        lc_verdict=verdict,
        lc_witness=lc_witness,
        lemma=lemma,
        confirmed=confirmed,
        elapsed_seconds=time.perf_counter() - start,
    )


def verify_construction(spec: ConstructionSpec) -> VerificationReport:
    """Build a construction, derive its partner and verify the pair."""
    start = time.perf_counter()
    g1, split = build(spec)
    try:
        derivation = derive_lu_partner(g1, split)
    except CancellationError as exc:
        return VerificationReport(
            spec_name=spec.name,
            lu_equivalent=False,
            witness=None,
            ledger=exc.ledger,
            lc_verdict="inconclusive",
            lc_witness=None,
            lemma=None,
            confirmed=False,
            elapsed_seconds=time.perf_counter() - start,
        )
    report = verify_counterexample(g1, split, derivation.target, spec.name)
    report.elapsed_seconds = time.perf_counter() - start
    return report


@dataclass
class SequenceOutcome:
    """Result of one bipartite-preserving complementation pattern."""

    graph: SimpleGraph
    split: BipartiteSplit | None
    ok: bool
    violating_edge: tuple[int, int] | None

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "split": (
                {"left": list(self.split.left), "right": list(self.split.right)}
                if self.split
                else None
            ),
            "violating_edge": list(self.violating_edge) if self.violating_edge else None,
            "degrees": sorted(self.graph.degrees()),
        }


def bipartite_preserving_sequence(
    g: SimpleGraph, split: BipartiteSplit, subset: Iterable[int]
) -> SequenceOutcome:
    """Complement left side, subset, left side again, subset again.

    ``subset`` is drawn from the right (non-central) side. The result is
    re-checked for bipartiteness; failure is returned as a value naming
    a violating edge, never raised.
    """
    chosen = tuple(sorted(set(subset)))
    right = set(split.right)
    for v in chosen:
        if v not in right:
            raise PreconditionError(f"subset vertex {v} is not on the right side")
    work = g
    for stage in (split.left, chosen, split.left, chosen):
        for v in stage:
            work = local_complement(work, v)
    colors, violation = work.bipartite_coloring()
    if violation is not None:
        return SequenceOutcome(work, None, False, violation)
    assert colors is not None
    side0 = tuple(v for v in range(work.n) if colors[v] == 0)
    side1 = tuple(v for v in range(work.n) if colors[v] == 1)
    if (len(side1), side1) < (len(side0), side0):
        side0, side1 = side1, side0
    return SequenceOutcome(work, BipartiteSplit(side0, side1), True, None)


@dataclass
class SearchResult:
    candidates: list[tuple[int, ...]]
    examined: int
    budget_exhausted: bool

    def as_dict(self) -> dict:
        return {
            "candidates": [list(c) for c in self.candidates],
            "examined": self.examined,
            "budget_exhausted": self.budget_exhausted,
        }


def degree_distribution_search(
    g: SimpleGraph,
    split: BipartiteSplit,
    target_degrees: Sequence[int],
    budget: int,
    threads: int = 1,
) -> SearchResult:
    """Subsets whose complementation pattern hits a degree multiset.

    Subsets of the right side are enumerated by size then
    lexicographically, up to ``budget`` of them; exhausting the budget
    flags the result as partial.
    """
    target = tuple(sorted(target_degrees))

    def all_subsets():
        for size in range(0, split.k2 + 1):
            yield from combinations(split.right, size)

    def evaluate(subset: tuple[int, ...]) -> tuple[tuple[int, ...], bool]:
        outcome = bipartite_preserving_sequence(g, split, subset)
        hit = outcome.ok and tuple(sorted(outcome.graph.degrees())) == target
        return subset, hit

    gen = all_subsets()
    batch = list(islice(gen, budget))
    exhausted = next(gen, None) is not None

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(evaluate, batch))
    else:
        results = [evaluate(s) for s in batch]

    candidates = [subset for subset, hit in results if hit]
    return SearchResult(candidates, len(batch), exhausted)
