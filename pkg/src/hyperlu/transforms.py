"""Graphical rewriting of weighted hypergraph states under local gates.

Supported gates: Z to a dyadic power (adds weight on a single-qubit
edge), the Pauli X (toggles the link of the vertex), X to a dyadic
power (adds the expanded power-of-product delta of the link), and local
complementation (on graphs directly, or as its gate composite on graph
states).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

from .errors import PreconditionError, SequenceStepError, VertexRangeError
from .hypergraph import (
    Edge,
    SimpleGraph,
    WeightedHypergraph,
    add_weight,
    add_weights,
)
from .phase_algebra import power_of_product
from .weights import HALF, ONE, Weight

GateKind = Literal["X", "Xp", "Zp", "LC"]

# X^(1/2) at a vertex complements its neighborhood; each neighbor then
# carries a stray single-qubit weight cancelled by Z^(-1/2) == Z^(3/2).
# Frozen once from a brute-force scan on the triangle (regression-tested
# against the state-vector oracle).
LC_X_EXPONENT = HALF
LC_NEIGHBOR_Z_EXPONENT = Weight(3, 1)


@dataclass(frozen=True)
class GateApplication:
    """One local gate: kind, target qubit, dyadic exponent where used."""

    qubit: int
    kind: GateKind
    exponent: Weight | None = None

    def __post_init__(self) -> None:
        needs_exp = self.kind in ("Xp", "Zp")
        if needs_exp and self.exponent is None:
            raise ValueError(f"{self.kind} gate requires an exponent")
        if not needs_exp and self.exponent is not None:
            raise ValueError(f"{self.kind} gate takes no exponent")


GateSequence = tuple[GateApplication, ...]


def x_gate(q: int) -> GateApplication:
    return GateApplication(q, "X")


def x_power_gate(q: int, alpha: Weight) -> GateApplication:
    return GateApplication(q, "Xp", alpha)


def z_power_gate(q: int, alpha: Weight) -> GateApplication:
    return GateApplication(q, "Zp", alpha)


def lc_gate(q: int) -> GateApplication:
    return GateApplication(q, "LC")


def _check_vertex(h: WeightedHypergraph, i: int) -> None:
    if not (0 <= i < h.n):
        raise VertexRangeError(f"vertex {i} out of range for n={h.n}")


def link(h: WeightedHypergraph, i: int) -> list[Edge]:
    """Edges of ``h`` containing ``i``, each with ``i`` removed.

    May include the empty edge (when {i} itself is an edge). Requires
    every edge at ``i`` to carry weight 1; fractional incidence has no
    product-of-involutions form (see :func:`apply_pauli_x` extended
    mode for the Pauli-X special case).
    """
    _check_vertex(h, i)
    out: list[Edge] = []
    for e, w in h.edges:
        if i in e:
            if w != ONE:
                raise PreconditionError(
                    f"edge {e} at vertex {i} has weight {w}, need 1", edge=e
                )
            out.append(tuple(v for v in e if v != i))
    return out


def apply_z_power(h: WeightedHypergraph, i: int, alpha: Weight) -> WeightedHypergraph:
    """Z^alpha on qubit i adds weight alpha to the edge {i}."""
    _check_vertex(h, i)
    return add_weight(h, (i,), alpha)


def apply_pauli_x(
    h: WeightedHypergraph, i: int, extended: bool = False
) -> WeightedHypergraph:
    """Pauli X on qubit i: add weight 1 to every edge of the link.

    In extended mode, fractional-weight incident edges are allowed via
    the conjugation rule X_i C_e^w X_i = C_{e-i}^w C_e^{-w}: each
    incident edge e contributes w on e minus i and -2w on e itself.
    Extended mode is validated against the state-vector oracle only.
    """
    _check_vertex(h, i)
    if not extended:
        delta = {e: ONE for e in link(h, i)}
        return add_weights(h, delta)
    acc: dict[Edge, Weight] = {}
    for e, w in h.edges_containing(i):
        reduced = tuple(v for v in e if v != i)
        acc[reduced] = acc.get(reduced, Weight(0)) + w
        acc[e] = acc.get(e, Weight(0)) + w * -2
    return add_weights(h, acc)


def apply_x_power(h: WeightedHypergraph, i: int, alpha: Weight) -> WeightedHypergraph:
    """X^alpha on qubit i: expand the power of the link's gate product.

    The created edges never contain ``i``, so repeated powers at the
    same vertex add their exponents.
    """
    delta = power_of_product(link(h, i), alpha)
    return add_weights(h, delta)


def local_complement(g: SimpleGraph, v: int) -> SimpleGraph:
    """Complement the subgraph induced by the neighborhood of ``v``."""
    if not (0 <= v < g.n):
        raise VertexRangeError(f"vertex {v} out of range for n={g.n}")
    m = g.rows[v]
    rows = list(g.rows)
    u = m
    while u:
        low = u & -u
        i = low.bit_length() - 1
        rows[i] ^= m ^ low  # toggle toward all other neighbors, not itself
        u ^= low
    return SimpleGraph(g.n, tuple(rows))


def local_complement_sequence(g: SimpleGraph, v: int) -> GateSequence:
    """Gate composite realizing local complementation on a graph state."""
    seq = [x_power_gate(v, LC_X_EXPONENT)]
    seq += [z_power_gate(u, LC_NEIGHBOR_Z_EXPONENT) for u in g.neighbors(v)]
    return tuple(seq)


def _apply_lc_gate(h: WeightedHypergraph, v: int) -> WeightedHypergraph:
    """LC entry of a sequence: the X^(1/2) + neighbor-Z composite.

    Requires every edge at ``v`` to be a weight-1 two-edge, which is
    exactly when the composite reproduces graph complementation.
    """
    _check_vertex(h, v)
    partners = []
    for e, w in h.edges_containing(v):
        if len(e) != 2 or w != ONE:
            raise PreconditionError(
                f"LC needs weight-1 two-edges at vertex {v}, found {e} weight {w}",
                edge=e,
            )
        partners.append(e[0] if e[1] == v else e[1])
    out = apply_x_power(h, v, LC_X_EXPONENT)
    for u in partners:
        out = apply_z_power(out, u, LC_NEIGHBOR_Z_EXPONENT)
    return out


def apply_gate(h: WeightedHypergraph, gate: GateApplication) -> WeightedHypergraph:
    if gate.kind == "X":
        return apply_pauli_x(h, gate.qubit)
    if gate.kind == "Xp":
        assert gate.exponent is not None
        return apply_x_power(h, gate.qubit, gate.exponent)
    if gate.kind == "Zp":
        assert gate.exponent is not None
        return apply_z_power(h, gate.qubit, gate.exponent)
    if gate.kind == "LC":
        return _apply_lc_gate(h, gate.qubit)
    raise ValueError(f"unknown gate kind {gate.kind!r}")


def apply_sequence(
    h: WeightedHypergraph, seq: Iterable[GateApplication]
) -> WeightedHypergraph:
    """Left-to-right fold; failures carry the failing step index."""
    out = h
    for idx, gate in enumerate(seq):
        try:
            out = apply_gate(out, gate)
        except (PreconditionError, VertexRangeError, ValueError) as exc:
            raise SequenceStepError(idx, str(exc)) from exc
    return out


def sequence_deltas(
    h: WeightedHypergraph, seq: Sequence[GateApplication]
) -> dict[Edge, Weight]:
    """Net per-edge weight change of a sequence (mod 2), phase under ()."""
    after = apply_sequence(h, seq)
    before_d = h.edge_dict()
    after_d = after.edge_dict()
    delta: dict[Edge, Weight] = {}
    for e in sorted(set(before_d) | set(after_d)):
        d = after_d.get(e, Weight(0)) - before_d.get(e, Weight(0))
        if not d.is_zero:
            delta[e] = d
    dphase = after.phase - h.phase
    if not dphase.is_zero:
        delta[()] = dphase
    return delta
