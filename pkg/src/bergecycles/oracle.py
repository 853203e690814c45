"""Exact brute-force oracles for Berge paths and cycles.

The search walks ordered sequences of representative vertices.  Each
consecutive pair is a *slot* that needs its own hyperedge; the slots are kept
matched to distinct hyperedges by an incremental augmenting-path matching, so
a prefix whose slots cannot be matched is pruned immediately (adding slots
never makes a matching easier).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import linear_sum_assignment

from .hypercore import BergeCertificate, Hypergraph, members

MAX_ORACLE_N = 16


@dataclass(frozen=True, order=True)
class PathOrderKey:
    """Sort key for Berge paths: larger is better."""

    length: int
    neg_total_size: int

    @property
    def total_size(self) -> int:
        return -self.neg_total_size

    @classmethod
    def of(cls, c: BergeCertificate) -> "PathOrderKey":
        return cls(c.length, -c.total_size)


class _Found(Exception):
    pass


class _Index:
    def __init__(self, H: Hypergraph, allow_large: bool):
        if H.n > MAX_ORACLE_N and not allow_large:
            raise ValueError(
                f"n={H.n} exceeds the oracle limit of {MAX_ORACLE_N}; pass allow_large=True to override")
        self.H = H
        self.n = n = H.n
        self.edges = [e for e in H.edges if e & (e - 1)]
        cand: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(n)]
        adj = [0] * n
        for i, e in enumerate(self.edges):
            vs = members(e)
            for a in range(len(vs)):
                adj[vs[a]] |= e
                for b in range(a + 1, len(vs)):
                    cand[vs[a]][vs[b]].append(i)
        for u in range(n):
            for v in range(u):
                cand[u][v] = cand[v][u]
        self.cand = cand
        self.adj = [a & ~(1 << v) for v, a in enumerate(adj)]
        self.sdeg = [a.bit_count() for a in self.adj]
        self.order = sorted(range(n), key=lambda v: (-self.sdeg[v], v))
        self.size = [e.bit_count() for e in self.edges]

    def augment(self, slot, pairs, slot_edge, edge_slot, seen) -> bool:
        u, v = pairs[slot]
        cands = self.cand[u][v]
        for e in cands:
            if e not in edge_slot:
                slot_edge[slot] = e
                edge_slot[e] = slot
                return True
        for e in cands:
            if e in seen:
                continue
            seen.add(e)
            if self.augment(edge_slot[e], pairs, slot_edge, edge_slot, seen):
                slot_edge[slot] = e
                edge_slot[e] = slot
                return True
        return False

    def try_add(self, pairs, slot_edge, edge_slot, pair):
        """Copy the matching with one more slot; ``None`` if it cannot be matched."""
        pairs = pairs + [pair]
        slot_edge = slot_edge + [-1]
        edge_slot = dict(edge_slot)
        if self.augment(len(pairs) - 1, pairs, slot_edge, edge_slot, set()):
            return pairs, slot_edge, edge_slot
        return None

    def certificate(self, kind, seq, slot_edge) -> BergeCertificate:
        return BergeCertificate(kind, tuple(seq), tuple(self.edges[i] for i in slot_edge))

    def min_cost_assignment(self, pairs) -> tuple[int, list[int]] | None:
        """Cheapest distinct-edge assignment to ``pairs`` by total edge size."""
        cols = sorted({e for u, v in pairs for e in self.cand[u][v]})
        if len(cols) < len(pairs):
            return None
        pos = {e: j for j, e in enumerate(cols)}
        big = 10 ** 6
        cost = np.full((len(pairs), len(cols)), big, dtype=np.int64)
        for r, (u, v) in enumerate(pairs):
            for e in self.cand[u][v]:
                cost[r, pos[e]] = self.size[e]
        rows, picked = linear_sum_assignment(cost)
        total = int(cost[rows, picked].sum())
        if total >= big:
            return None
        assign = [0] * len(pairs)
        for r, j in zip(rows, picked):
            assign[r] = cols[j]
        return total, assign


def longest_berge_cycle(H: Hypergraph, stop_at: int | None = None,
                        allow_large: bool = False) -> BergeCertificate | None:
    """A maximum-length Berge cycle (length >= 2), or ``None`` when there is none.

    With ``stop_at`` the search returns the first cycle of at least that
    length, which is enough to decide "is there a cycle of length >= k".
    """
    idx = _Index(H, allow_large)
    n = idx.n
    target = n if stop_at is None else min(stop_at, n)
    best: list = [1, None]  # length, certificate

    def dfs(s, seq, avail, pairs, slot_edge, edge_slot):
        last = seq[-1]
        L = len(seq)
        if L >= 2 and idx.adj[last] >> s & 1 and L > best[0]:
            closed = idx.try_add(pairs, slot_edge, edge_slot, (last, s))
            if closed is not None:
                best[0] = L
                best[1] = idx.certificate("cycle", seq, closed[1])
                if L >= target:
                    raise _Found
        if L + avail.bit_count() <= best[0]:
            return
        nxt = idx.adj[last] & avail
        for w in idx.order:
            if not nxt >> w & 1:
                continue
            grown = idx.try_add(pairs, slot_edge, edge_slot, (last, w))
            if grown is None:
                continue
            seq.append(w)
            dfs(s, seq, avail & ~(1 << w), *grown)
            seq.pop()

    try:
        for s in range(n):
            avail = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
            if avail.bit_count() + 1 <= best[0]:
                break
            dfs(s, [s], avail, [], [], {})
    except _Found:
        pass
    return best[1]


def hamiltonian_berge_cycle(H: Hypergraph, allow_large: bool = False) -> BergeCertificate | None:
    """A Berge cycle through all ``n`` vertices, or ``None`` (exact)."""
    idx = _Index(H, allow_large)
    n = idx.n
    if n < 2:
        return None
    full = (1 << n) - 1
    result: list = [None]

    def dfs(seq, avail, pairs, slot_edge, edge_slot):
        last = seq[-1]
        if not avail:
            if idx.adj[last] & 1:
                closed = idx.try_add(pairs, slot_edge, edge_slot, (last, 0))
                if closed is not None:
                    result[0] = idx.certificate("cycle", seq, closed[1])
                    raise _Found
            return
        # every unvisited vertex still needs two usable shadow neighbours
        ends = avail | (1 << last) | 1
        rest = avail
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if (idx.adj[w] & ends).bit_count() < 2 and not (avail == 1 << w and n == 2):
                return
        nxt = idx.adj[last] & avail
        for w in idx.order:
            if not nxt >> w & 1:
                continue
            grown = idx.try_add(pairs, slot_edge, edge_slot, (last, w))
            if grown is None:
                continue
            seq.append(w)
            dfs(seq, avail & ~(1 << w), *grown)
            seq.pop()

    try:
        dfs([0], full & ~1, [], [], {})
    except _Found:
        pass
    return result[0]


def _longest_path_idx(idx: _Index, stop_at: int | None):
    n = idx.n
    target = n - 1 if stop_at is None else min(stop_at, n - 1)
    best: list = [0, None]
    full = (1 << n) - 1

    def dfs(seq, avail, pairs, slot_edge, edge_slot):
        L = len(seq) - 1
        if L > best[0]:
            best[0] = L
            best[1] = idx.certificate("path", seq, slot_edge)
            if L >= target:
                raise _Found
        if L + avail.bit_count() <= best[0]:
            return
        last = seq[-1]
        nxt = idx.adj[last] & avail
        for w in idx.order:
            if not nxt >> w & 1:
                continue
            grown = idx.try_add(pairs, slot_edge, edge_slot, (last, w))
            if grown is None:
                continue
            seq.append(w)
            dfs(seq, avail & ~(1 << w), *grown)
            seq.pop()

    try:
        for s in idx.order:
            if idx.adj[s]:
                dfs([s], full & ~(1 << s), [], [], {})
    except _Found:
        pass
    return best[1]


def longest_berge_path(H: Hypergraph, stop_at: int | None = None,
                       allow_large: bool = False) -> BergeCertificate | None:
    """A maximum-length Berge path; ``None`` iff no edge has two or more vertices."""
    return _longest_path_idx(_Index(H, allow_large), stop_at)


def best_berge_path(H: Hypergraph, allow_large: bool = False) -> BergeCertificate | None:
    """A longest Berge path whose edges have the smallest possible total size."""
    idx = _Index(H, allow_large)
    first = _longest_path_idx(idx, None)
    if first is None:
        return None
    Lmax = first.length
    n = idx.n
    full = (1 << n) - 1
    minsize = [[min((idx.size[e] for e in idx.cand[u][v]), default=0) for v in range(n)]
               for u in range(n)]
    start = idx.min_cost_assignment(first.pairs())
    best: list = [start[0], idx.certificate("path", first.vertices, start[1])]
    floor = 2 * Lmax

    def dfs(seq, avail, lb, pairs, slot_edge, edge_slot):
        L = len(seq) - 1
        if L == Lmax:
            if seq[0] > seq[-1]:
                return  # the reversed sequence is the same path
            found = idx.min_cost_assignment(pairs)
            if found is not None and found[0] < best[0]:
                best[0] = found[0]
                best[1] = idx.certificate("path", seq, found[1])
                if best[0] == floor:
                    raise _Found
            return
        if L + avail.bit_count() < Lmax:
            return
        last = seq[-1]
        nxt = idx.adj[last] & avail
        for w in idx.order:
            if not nxt >> w & 1:
                continue
            nlb = lb + minsize[last][w]
            if nlb + 2 * (Lmax - L - 1) >= best[0]:
                continue
            grown = idx.try_add(pairs, slot_edge, edge_slot, (last, w))
            if grown is None:
                continue
            seq.append(w)
            dfs(seq, avail & ~(1 << w), nlb, *grown)
            seq.pop()

    if best[0] > floor:
        try:
            for s in idx.order:
                if idx.adj[s]:
                    dfs([s], full & ~(1 << s), 0, [], [], {})
        except _Found:
            pass
    return best[1]


def has_berge_cycle_at_least(H: Hypergraph, k: int, allow_large: bool = False) -> bool:
    c = longest_berge_cycle(H, stop_at=k, allow_large=allow_large)
    return c is not None and c.length >= k


def has_berge_path_with_base(H: Hypergraph, p: int, allow_large: bool = False) -> bool:
    """Whether some Berge path has at least ``p`` base vertices."""
    if p <= 1:
        return H.n >= p
    c = longest_berge_path(H, stop_at=p - 1, allow_large=allow_large)
    return c is not None and c.length >= p - 1
