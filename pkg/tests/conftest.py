from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from hyperlu.hypergraph import SimpleGraph, WeightedHypergraph
from hyperlu.weights import Weight


def weights(max_exp: int = 3) -> st.SearchStrategy[Weight]:
    return st.builds(
        Weight,
        st.integers(min_value=-32, max_value=32),
        st.integers(min_value=0, max_value=max_exp),
    )


def nonzero_weights(max_exp: int = 3) -> st.SearchStrategy[Weight]:
    return weights(max_exp).filter(lambda w: not w.is_zero)


@st.composite
def edges_on(draw, n: int, allow_empty: bool = False):
    vs = draw(st.sets(st.integers(min_value=0, max_value=n - 1), min_size=0 if allow_empty else 1))
    return tuple(sorted(vs))


@st.composite
def hypergraphs(draw, max_n: int = 5, max_edges: int = 6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    count = draw(st.integers(min_value=0, max_value=max_edges))
    items = [(draw(edges_on(n)), draw(weights())) for _ in range(count)]
    phase = draw(weights())
    return WeightedHypergraph.make(n, items, phase)


@st.composite
def simple_graphs(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.sets(st.sampled_from(pairs)) if pairs else st.just(set()))
    return SimpleGraph.from_edges(n, chosen)


def all_graphs(n: int) -> list[SimpleGraph]:
    pairs = list(itertools.combinations(range(n), 2))
    out = []
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
        out.append(SimpleGraph.from_edges(n, edges))
    return out


def connected_graphs(n: int) -> list[SimpleGraph]:
    return [g for g in all_graphs(n) if g.is_connected()]


@pytest.fixture
def star4() -> SimpleGraph:
    from hyperlu.hypergraph import star_graph

    return star_graph(4)


@pytest.fixture
def triangle() -> SimpleGraph:
    from hyperlu.hypergraph import complete_graph

    return complete_graph(3)
