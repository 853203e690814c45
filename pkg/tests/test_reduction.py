from itertools import combinations, permutations

import numpy as np
import pytest
from hypothesis import given
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from bergecycles import Hypergraph, check_certificate, shadow2
from bergecycles.graphs import hamiltonian_cycle
from bergecycles.hypercore import mask_of, members
from bergecycles.reduction import (
    MatchingMap,
    build_incidence,
    exchange_matchings,
    extract_berge_subgraph,
    has_augmenting_path,
    lift_cycle,
    matching_exchange,
    max_matching_prefer2,
)

from strategies import hypergraphs

ALL3 = Hypergraph.from_masks(3, range(1, 8))


def _scipy_max_matching(H):
    """Maximum matching size of the incidence graph, computed by scipy."""
    right = {p: j for j, p in enumerate(shadow2(H).edges())}
    rows, cols = [], []
    for i, e in enumerate(H.edges):
        for p in combinations(members(e), 2):
            rows.append(i)
            cols.append(right[p])
    if not rows:
        return 0
    A = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(H.edges), len(right)))
    return int((maximum_bipartite_matching(A, perm_type="column") >= 0).sum())


def test_incidence_examples():
    B = build_incidence(Hypergraph.from_sets(3, [[0, 1, 2]]))
    assert len(B.left) == 1 and len(B.left_adj(0)) == 3
    B = build_incidence(Hypergraph.from_sets(2, [[0, 1]]))
    assert B.left == [0b11] and B.right == [(0, 1)] and B.left_adj(0) == [0]
    B = build_incidence(ALL3)
    assert len(B.left) == 7 and len(B.right) == 3
    j = B.right_id[(0, 1)]
    assert sorted(B.left[i] for i, a in enumerate(B.adjacency) if j in a) == [0b011, 0b111]


def test_matching_examples():
    phi = max_matching_prefer2(Hypergraph.from_sets(3, [[0, 1, 2]]))
    assert len(phi) == 1 and extract_berge_subgraph(ALL3, phi).num_edges() == 1
    phi = max_matching_prefer2(ALL3)
    assert phi.phi == {0b011: (0, 1), 0b101: (0, 2), 0b110: (1, 2)}
    assert extract_berge_subgraph(ALL3, phi).num_edges() == 3
    H = Hypergraph.from_sets(4, [[0, 1], [0, 1, 2], [0, 1, 3]])
    phi = max_matching_prefer2(H)
    assert len(phi) == 3 and phi.phi[0b11] == (0, 1)
    assert phi.phi[0b111] in {(0, 2), (1, 2)} and phi.phi[0b1011] in {(0, 3), (1, 3)}
    assert extract_berge_subgraph(H, MatchingMap({})).num_edges() == 0


@given(hypergraphs(max_n=10, max_edges=25))
def test_claims_on_random_hypergraphs(H):
    phi = max_matching_prefer2(H)  # raises on any claim failure
    assert len(phi) == _scipy_max_matching(H)
    for e in H.edges:
        if e.bit_count() == 2:
            assert phi.phi[e] == tuple(members(e))
    G = extract_berge_subgraph(H, phi)
    cover = {p for m in phi.domain for p in combinations(members(m), 2)}
    assert cover == set(shadow2(H).edges())
    for e in H.edges:
        if e not in phi.phi:
            assert all(G.has_edge(a, b) for a, b in combinations(members(e), 2))
    assert not has_augmenting_path(build_incidence(H), phi)


def test_augmenting_path_detected():
    H = Hypergraph.from_sets(3, [[0, 1, 2], [0, 1]])
    B = build_incidence(H)
    assert has_augmenting_path(B, MatchingMap({0b111: (0, 1)}))
    assert not has_augmenting_path(B, MatchingMap({0b111: (0, 2), 0b11: (0, 1)}))


def test_matching_map_validation():
    with pytest.raises(ValueError):
        MatchingMap({0b111: (0, 1), 0b011: (1, 0)})
    with pytest.raises(ValueError):
        MatchingMap({0b011: (0, 2)})
    phi = MatchingMap({0b111: (2, 0)})
    assert phi.phi == {0b111: (0, 2)}
    assert phi.to_json() == [{"edge": [0, 1, 2], "pair": [0, 2]}]
    assert MatchingMap.from_json(phi.to_json()) == phi


def _matchings(nl, nr):
    out = [{}]
    for size in range(1, min(nl, nr) + 1):
        for L in combinations(range(nl), size):
            for R in permutations(range(nr), size):
                out.append(dict(zip(L, R)))
    return out


def test_exchange_exhaustive_four_by_four():
    adj = {x: set(range(4)) for x in range(4)}
    ms = _matchings(4, 4)
    checked = 0
    for M1 in ms:
        r1 = set(M1.values())
        for M2 in ms:
            if not set(M2.values()) <= r1:
                continue
            M3 = exchange_matchings(adj, M1, M2)
            assert len(set(M3.values())) == len(M3)
            assert set(M3.values()) == r1
            assert set(M3) >= set(M2)
            assert set(M3.items()) <= set(M1.items()) | set(M2.items())
            checked += 1
    # sum over |M1| = s of C(4,s) P(4,s) * sum_j C(s,j) P(4,j)
    assert checked == 1 + 80 + 1512 + 7008 + 5016


def test_exchange_examples():
    adj = {"a": {"x", "y"}, "b": {"x"}}
    M1 = {"a": "y", "b": "x"}
    got = exchange_matchings(adj, M1, {"a": "x"})
    assert set(got.values()) == {"x", "y"} and "a" in got
    assert exchange_matchings(adj, M1, {}) == M1
    assert exchange_matchings(adj, M1, {"b": "x"}) == M1
    with pytest.raises(ValueError):
        exchange_matchings(adj, {"a": "x"}, {"a": "y"})
    with pytest.raises(ValueError):
        exchange_matchings(adj, {"b": "y"}, {})


def test_exchange_on_incidence():
    H = Hypergraph.from_sets(3, [[0, 1, 2], [0, 1]])
    B = build_incidence(H)
    M1 = MatchingMap({0b111: (0, 1)})
    M2 = MatchingMap({0b011: (0, 1)})
    M3 = matching_exchange(B, M1, M2)
    assert M3.range == {(0, 1)} and 0b011 in M3.domain
    with pytest.raises(ValueError):
        matching_exchange(B, M1, MatchingMap({0b101: (0, 2)}))


@given(hypergraphs(max_n=8, max_edges=40, min_n=3))
def test_lifting_soundness(H):
    phi = max_matching_prefer2(H)
    cyc = hamiltonian_cycle(extract_berge_subgraph(H, phi))
    if cyc is None:
        return
    cert = lift_cycle(phi.inverse(), cyc)
    assert check_certificate(H, cert) is None
    assert sorted(cert.vertices) == list(range(H.n))


def test_lift_small():
    H = Hypergraph.from_sets(3, [[0, 1], [1, 2], [0, 1, 2]])
    phi = max_matching_prefer2(H)
    cert = lift_cycle(phi.inverse(), [0, 1, 2])
    assert cert.edges == (mask_of([0, 1]), mask_of([1, 2]), 0b111)
    assert check_certificate(H, cert) is None
