"""Powers of products of multi-qubit phase gates.

The power of a product of commuting phase gates is not the product of
the powers: every nonempty subset of the factors contributes a
correction on the union of their edges. For a product of gates on edges
e_1 .. e_k raised to a dyadic exponent a, the subset S contributes
weight (-2)**(|S|-1) * a on the edge formed by the union over S.

Since weights only matter modulo 2, a subset of size >= q+2 contributes
nothing when a = p / 2**q in lowest terms; enumeration is pruned
accordingly, which keeps high-degree vertices tractable.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import SizeLimitError
from .hypergraph import Edge, normalize_edge
from .weights import Weight

_MAX_ORACLE_QUBITS = 12


def power_of_product(
    edges: Sequence[Edge], alpha: Weight, prune: bool = True
) -> dict[Edge, Weight]:
    """Weighted-edge delta of raising a product of edge gates to ``alpha``.

    ``edges`` must be pairwise distinct; the empty edge is allowed and
    union contributions on it land on the returned () key (a global
    phase). With ``prune`` unset, all 2**k - 1 subsets are enumerated,
    which must agree exactly with the pruned result.
    """
    masks = [sum(1 << v for v in normalize_edge(e)) for e in edges]
    if len(set(masks)) != len(masks):
        raise ValueError("edges of a gate product must be pairwise distinct")
    if alpha.is_zero or not masks:
        return {}
    k = len(masks)
    max_size = min(k, alpha.exp + 1) if prune else k
    if not prune and k > 24:
        raise SizeLimitError(f"unpruned enumeration over {k} edges")

    # all contributions share the denominator 2**alpha.exp, so the DFS
    # accumulates raw integer numerators; Weights are built once per union
    contribs = [alpha.num * (-2) ** d for d in range(max_size)]
    acc: dict[int, int] = {}

    def extend(start: int, union: int, depth: int) -> None:
        contrib = contribs[depth]
        for j in range(start, k):
            u = union | masks[j]
            acc[u] = acc.get(u, 0) + contrib
            if depth + 1 < max_size:
                extend(j + 1, u, depth + 1)

    extend(0, 0, 0)

    wrap = (1 << (alpha.exp + 1)) - 1  # num & wrap == 0 iff weight is 0 mod 2
    out: dict[Edge, Weight] = {}
    for mask, num in acc.items():
        if num & wrap == 0:
            continue
        e = _TUPLE_CACHE.get(mask)
        if e is None:
            e = tuple(v for v in range(mask.bit_length()) if (mask >> v) & 1)
            _TUPLE_CACHE[mask] = e
        out[e] = Weight(num, alpha.exp)
    return out


_TUPLE_CACHE: dict[int, Edge] = {}


def involution_power_check(diag: np.ndarray, alpha: float | Weight) -> np.ndarray:
    """Brute-force power of an explicit +-1 diagonal operator.

    Replaces every -1 entry by exp(i*pi*alpha). This is the oracle the
    symbolic expansion is validated against, so it stays deliberately
    dumb: no edge structure, just the eigenvalue substitution that
    defines the power of an involution.
    """
    d = np.asarray(diag)
    if d.ndim != 1 or d.size == 0 or d.size & (d.size - 1):
        raise ValueError("diagonal length must be a power of two")
    if d.size > 1 << _MAX_ORACLE_QUBITS:
        raise SizeLimitError(f"diagonal larger than 2^{_MAX_ORACLE_QUBITS}")
    if not np.all((d == 1) | (d == -1)):
        raise ValueError("diagonal entries must all be +1 or -1")
    a = float(alpha)
    return np.where(d == -1, np.exp(1j * np.pi * a), 1.0 + 0.0j)
