"""Hypothesis strategies for small hypergraphs and graphs."""

from hypothesis import strategies as st

from bergecycles import Graph, Hypergraph


def hypergraphs(max_n=5, max_edges=10, min_n=1):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.sets(st.integers(1, 2 ** n - 1), max_size=max_edges).map(
            lambda s: Hypergraph.from_masks(n, s)))


def graphs(max_n=7, min_n=1):
    def build(n):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return st.sets(st.sampled_from(pairs), max_size=len(pairs)).map(
            lambda es: Graph.from_edges(n, es)) if pairs else st.just(Graph.empty(n))
    return st.integers(min_n, max_n).flatmap(build)
