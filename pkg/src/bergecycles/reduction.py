"""Hyperedge / shadow-edge incidence graph and its matchings.

A matching assigns hyperedges to distinct shadow pairs they contain.  The
matched pairs form a *Berge graph*: any cycle in it lifts back to a Berge
cycle by swapping each pair for its hyperedge.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .hypercore import BergeCertificate, Graph, Hypergraph, members, shadow2

Pair = tuple[int, int]


class ClaimViolation(AssertionError):
    """A property that holds for every maximum matching failed: an implementation bug."""


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


def _pair_mask(p: Pair) -> int:
    return (1 << p[0]) | (1 << p[1])


@dataclass
class IncidenceBipartite:
    """Hyperedges on the left, shadow pairs on the right, joined by containment.

    A two-element hyperedge ``{x, y}`` and the pair ``xy`` are different
    nodes on opposite sides.
    """

    H: Hypergraph
    left: list[int]
    right: list[Pair]
    right_id: dict[Pair, int]
    _adj: dict = field(default_factory=dict, repr=False)

    def left_adj(self, i: int) -> list[int]:
        """Right-node ids adjacent to left node ``i`` (pairs inside the hyperedge)."""
        got = self._adj.get(i)
        if got is None:
            vs = members(self.left[i])
            got = [self.right_id[(a, b)] for a, b in combinations(vs, 2)]
            self._adj[i] = got
        return got

    @property
    def adjacency(self) -> list[list[int]]:
        return [self.left_adj(i) for i in range(len(self.left))]


def build_incidence(H: Hypergraph) -> IncidenceBipartite:
    right = shadow2(H).edges()
    return IncidenceBipartite(H, list(H.edges), right, {p: j for j, p in enumerate(right)})


@dataclass(frozen=True)
class MatchingMap:
    """Partial injection from hyperedges (bitmasks) to shadow pairs they contain."""

    phi: Mapping[int, Pair]

    def __post_init__(self) -> None:
        fixed = {m: _pair(*p) for m, p in self.phi.items()}
        object.__setattr__(self, "phi", fixed)
        if len(set(fixed.values())) != len(fixed):
            raise ValueError("matching is not injective")
        for m, p in fixed.items():
            if m & _pair_mask(p) != _pair_mask(p):
                raise ValueError(f"pair {p} is not contained in hyperedge {members(m)}")

    def __len__(self) -> int:
        return len(self.phi)

    @property
    def domain(self) -> set[int]:
        return set(self.phi)

    @property
    def range(self) -> set[Pair]:
        return set(self.phi.values())

    def inverse(self) -> dict[Pair, int]:
        return {p: m for m, p in self.phi.items()}

    def to_json(self) -> list[dict]:
        items = sorted(self.phi.items(), key=lambda kv: kv[1])
        return [{"edge": members(m), "pair": list(p)} for m, p in items]

    @classmethod
    def from_json(cls, items) -> "MatchingMap":
        phi = {}
        for it in items:
            m = 0
            for v in it["edge"]:
                m |= 1 << v
            phi[m] = tuple(it["pair"])
        return cls(phi)


def _kuhn(B: IncidenceBipartite) -> tuple[list[int], list[int]]:
    """Maximum matching by augmenting paths from left nodes in canonical order."""
    nl, nr = len(B.left), len(B.right)
    match_l = [-1] * nl
    match_r = [-1] * nr
    size = 0

    def augment(i: int, seen: set[int]) -> bool:
        adj = B.left_adj(i)
        for j in adj:
            if match_r[j] < 0:
                match_l[i], match_r[j] = j, i
                return True
        for j in adj:
            if j in seen:
                continue
            seen.add(j)
            if augment(match_r[j], seen):
                match_l[i], match_r[j] = j, i
                return True
        return False

    for i in range(nl):
        if size == nr:
            break  # every pair is matched; nothing can grow
        if B.left[i] & (B.left[i] - 1) and augment(i, set()):
            size += 1
    return match_l, match_r


def has_augmenting_path(B: IncidenceBipartite, phi: MatchingMap) -> bool:
    """Alternating-path search from all unmatched hyperedges at once."""
    inv = {B.right_id[p]: m for m, p in phi.phi.items()}
    if len(inv) == len(B.right):
        return False
    left_pos = {m: i for i, m in enumerate(B.left)}
    queue = deque(i for i, m in enumerate(B.left) if m not in phi.phi)
    seen_l = set(queue)
    seen_r: set[int] = set()
    while queue:
        i = queue.popleft()
        for j in B.left_adj(i):
            if j in seen_r:
                continue
            seen_r.add(j)
            owner = inv.get(j)
            if owner is None:
                return True
            o = left_pos[owner]
            if o not in seen_l:
                seen_l.add(o)
                queue.append(o)
    return False


def extract_berge_subgraph(H: Hypergraph, phi: MatchingMap) -> Graph:
    return Graph.from_edges(H.n, phi.range)


def check_claims(H: Hypergraph, phi: MatchingMap) -> list[str]:
    """The three structural properties of a 2-edge-preferring maximum matching."""
    bad = []
    for e in H.edges:
        if e.bit_count() == 2 and phi.phi.get(e) != tuple(members(e)):
            bad.append(f"2-edge {members(e)} not matched to its own pair")
            break
    H2 = shadow2(H)
    cover = [0] * H.n
    for m in phi.phi:
        for v in members(m):
            cover[v] |= m
    if any(c & ~(1 << v) != a for v, (c, a) in enumerate(zip(cover, H2.adj))):
        bad.append("matched hyperedges do not cover the whole shadow")
    G = extract_berge_subgraph(H, phi)
    closed = [a | (1 << v) for v, a in enumerate(G.adj)]
    for e in H.edges:
        if e in phi.phi:
            continue
        if any(closed[v] & e != e for v in members(e)):
            bad.append(f"unmatched hyperedge {members(e)} is not a clique of G")
            break
    return bad


def max_matching_prefer2(H: Hypergraph, check: bool = True) -> MatchingMap:
    """A maximum matching that matches every 2-element hyperedge to its own pair.

    With ``check`` the structural consequences are asserted and a
    :class:`ClaimViolation` is raised if any fails.
    """
    B = build_incidence(H)
    match_l, match_r = _kuhn(B)
    changed = True
    while changed:
        changed = False
        for i, e in enumerate(B.left):
            if e.bit_count() != 2:
                continue
            j = B.right_id[tuple(members(e))]
            owner = match_r[j]
            if owner < 0:
                raise ClaimViolation(f"pair {members(e)} left unmatched by a maximum matching")
            if owner != i:
                match_l[owner] = -1
                match_l[i], match_r[j] = j, i
                changed = True
    phi = MatchingMap({B.left[i]: B.right[j] for i, j in enumerate(match_l) if j >= 0})
    if check:
        problems = check_claims(H, phi)
        if has_augmenting_path(B, phi):
            problems.append("matching is not maximum")
        if problems:
            raise ClaimViolation("; ".join(problems))
    return phi


# ---------------------------------------------------------------- exchange

def exchange_matchings(adj: Mapping, M1: Mapping, M2: Mapping) -> dict:
    """A matching ``M3 ⊆ M1 ∪ M2`` with ``range(M3) = range(M1)`` and ``dom(M3) ⊇ dom(M2)``.

    ``adj`` maps each left node to its right neighbours; ``M1`` and ``M2``
    map left nodes to right nodes.  Requires ``range(M2) ⊆ range(M1)``.
    """
    for M in (M1, M2):
        if len(set(M.values())) != len(M):
            raise ValueError("matching is not injective")
        for x, y in M.items():
            if y not in adj.get(x, ()):
                raise ValueError(f"{x!r} - {y!r} is not an edge")
    if not set(M2.values()) <= set(M1.values()):
        raise ValueError("range(M2) must be contained in range(M1)")
    M = dict(M1)
    owner = {y: x for x, y in M.items()}
    for x in sorted(M2, key=repr):
        if x in M:
            continue
        # follow M2 then M until a node outside dom(M2); then flip the path
        path = [x]
        cur = x
        while cur in M2:
            y = M2[cur]
            cur = owner[y]
            path.append(cur)
        last = path[-1]
        del M[last]
        for node in path[:-1]:
            y = M2[node]
            M[node] = y
            owner[y] = node
    return M


def matching_exchange(B: IncidenceBipartite, M1: MatchingMap, M2: MatchingMap) -> MatchingMap:
    adj = {m: {B.right[j] for j in B.left_adj(i)} for i, m in enumerate(B.left)}
    for M in (M1, M2):
        for m, p in M.phi.items():
            if m not in adj or p not in adj[m]:
                raise ValueError(f"{members(m)} -> {p} is not an edge of the incidence graph")
    return MatchingMap(exchange_matchings(adj, M1.phi, M2.phi))


def lift_cycle(inverse: Mapping[Pair, int], cycle: list[int]) -> BergeCertificate:
    """Replace each edge of a graph cycle by the hyperedge matched to it."""
    n = len(cycle)
    edges = tuple(inverse[_pair(cycle[i], cycle[(i + 1) % n])] for i in range(n))
    return BergeCertificate("cycle", tuple(cycle), edges)
