"""Extremal and sharpness families, each with a checkable obstruction.

Numbering is fixed: blocks take consecutive vertex indices and an apex
vertex, when there is one, is the last vertex ``n - 1``.  Unless stated
otherwise a "complete hypergraph" on a set means all its nonempty subsets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .hypercore import Graph, Hypergraph, mask_of, members, shadow2, submasks
from .oracle import has_berge_cycle_at_least

OBSTRUCTION_KINDS = ("cut-vertex", "cut-edge", "cross-pair-scarcity", "component-size",
                     "shadow-block-structure")


def _nonempty_subsets(mask: int) -> list[int]:
    return [s for s in submasks(mask) if s]


def _range_mask(lo: int, hi: int) -> int:
    """Vertices ``lo .. hi-1``."""
    return ((1 << hi) - 1) & ~((1 << lo) - 1)


@dataclass(frozen=True)
class ObstructionCert:
    """A structural reason why some long Berge cycle or path cannot exist.

    * ``cut-vertex``: ``{"vertex": v}``; the shadow minus ``v`` is disconnected.
    * ``cut-edge``: ``{"edge": [...]}``; without this hyperedge the shadow is disconnected.
    * ``cross-pair-scarcity``: ``{"set": S, "count": c}``; at most ``c`` hyperedges meet
      ``S`` in two or more vertices, and ``c < 2|S| - n`` so no hamiltonian Berge cycle fits.
    * ``component-size``: ``{"removed": [...], "max": s}``; after deleting the listed
      hyperedges (at most one) every shadow component has at most ``s`` vertices.
    * ``shadow-block-structure``: ``{"blocks": [...], "bound": b}``; every hyperedge of size
      two or more lies in a block, blocks form a forest, and no block carries a Berge cycle
      of length ``b`` or more.
    """

    kind: str
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, "data": self.data}

    def verify(self, H: Hypergraph) -> bool:
        return not self.problems(H)

    def problems(self, H: Hypergraph) -> list[str]:
        check = _CHECKS.get(self.kind)
        if check is None:
            return [f"unknown obstruction kind {self.kind!r}"]
        return check(H, self.data)


def _check_cut_vertex(H: Hypergraph, data) -> list[str]:
    v = data["vertex"]
    S = shadow2(H)
    rest = ((1 << H.n) - 1) & ~(1 << v)
    if S.is_connected(rest):
        return [f"removing {v} leaves the shadow connected"]
    return []


def _check_cut_edge(H: Hypergraph, data) -> list[str]:
    e = mask_of(data["edge"])
    if e not in H:
        return ["cut edge is not a hyperedge"]
    if shadow2(H.without_edges([e])).is_connected():
        return ["removing the edge leaves the shadow connected"]
    return []


def _check_scarcity(H: Hypergraph, data) -> list[str]:
    S = mask_of(data["set"])
    c = data["count"]
    found = sum(1 for e in H.edges if (e & S).bit_count() >= 2)
    bad = []
    if found > c:
        bad.append(f"{found} hyperedges meet the set twice, more than {c}")
    if c >= 2 * S.bit_count() - H.n:
        bad.append("the count does not rule out a hamiltonian Berge cycle")
    return bad


def _check_components(H: Hypergraph, data) -> list[str]:
    removed = [mask_of(e) for e in data["removed"]]
    if len(removed) > 1 or any(e not in H for e in removed):
        return ["removed edges must be at most one hyperedge of H"]
    comps = shadow2(H.without_edges(removed)).components()
    big = max((c.bit_count() for c in comps), default=0)
    return [] if big <= data["max"] else [f"a component has {big} vertices"]


def _check_blocks(H: Hypergraph, data) -> list[str]:
    blocks = [mask_of(b) for b in data["blocks"]]
    bound = data["bound"]
    bad = []
    for e in H.edges:
        if e & (e - 1) and not any(e & b == e for b in blocks):
            bad.append(f"edge {members(e)} is in no block")
            break
    # block / vertex incidence restricted to shared vertices must be a forest
    parent = list(range(len(blocks) + H.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, b in enumerate(blocks):
        for v in members(b):
            if sum(1 for c in blocks if c >> v & 1) < 2:
                continue
            a, z = find(i), find(len(blocks) + v)
            if a == z:
                bad.append("blocks do not form a forest")
                return bad
            parent[a] = z
    for b in blocks:
        verts = members(b)
        pos = {v: j for j, v in enumerate(verts)}
        local = [mask_of(pos[v] for v in members(e)) for e in H.edges if e & b == e]
        if has_berge_cycle_at_least(Hypergraph(len(verts), tuple(local)), bound):
            bad.append(f"block {verts} has a Berge cycle of length >= {bound}")
    return bad


_CHECKS = {
    "cut-vertex": _check_cut_vertex,
    "cut-edge": _check_cut_edge,
    "cross-pair-scarcity": _check_scarcity,
    "component-size": _check_components,
    "shadow-block-structure": _check_blocks,
}


# ------------------------------------------------------------------ families

def dirac_sharpness(n: int, variant: int) -> tuple[Hypergraph, ObstructionCert]:
    """Hypergraphs one below the dense threshold with no hamiltonian Berge cycle.

    1 (odd n): complete on ``0..h-1`` and on ``h-1..n-1``, ``h = (n+1)/2``.
    2 (even n): complete on both halves plus the edge ``[n]``.
    3 (odd n): all edges with at most one vertex in ``S = 0..(n-1)/2``.
    4 (even n): all edges with at most one vertex in ``S = 0..n/2``, plus ``[n]``.
    """
    if variant not in (1, 2, 3, 4):
        raise ValueError(f"variant must be 1..4, got {variant}")
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    odd = variant in (1, 3)
    if (n % 2 == 1) != odd:
        raise ValueError(f"variant {variant} needs {'odd' if odd else 'even'} n, got {n}")
    full = (1 << n) - 1
    if variant == 1:
        h = (n + 1) // 2
        edges = set(_nonempty_subsets(_range_mask(0, h)))
        edges.update(_nonempty_subsets(_range_mask(h - 1, n)))
        return Hypergraph.from_masks(n, edges), ObstructionCert("cut-vertex", {"vertex": h - 1})
    if variant == 2:
        h = n // 2
        edges = set(_nonempty_subsets(_range_mask(0, h)))
        edges.update(_nonempty_subsets(_range_mask(h, n)))
        edges.add(full)
        return Hypergraph.from_masks(n, edges), ObstructionCert("cut-edge", {"edge": list(range(n))})
    s = (n + 1) // 2 if variant == 3 else n // 2 + 1
    S = _range_mask(0, s)
    T = full & ~S
    edges = set(_nonempty_subsets(T))
    for v in range(s):
        edges.update(t | (1 << v) for t in submasks(T))
    count = 0
    if variant == 4:
        edges.add(full)
        count = 1
    cert = ObstructionCert("cross-pair-scarcity", {"set": list(range(s)), "count": count})
    return Hypergraph.from_masks(n, edges), cert


def _groups(n: int, size: int) -> list[int]:
    return [_range_mask(i, i + size) for i in range(0, n - size + 1, size)]


def path_sharpness(n: int, k: int) -> Hypergraph:
    """Disjoint complete hypergraphs on ``k-1`` vertices each."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if n < 1 or n % (k - 1):
        raise ValueError(f"k-1 = {k - 1} must divide n = {n}")
    edges = [s for g in _groups(n, k - 1) for s in _nonempty_subsets(g)]
    return Hypergraph.from_masks(n, edges)


def path_sharpness_obstruction(n: int, k: int) -> ObstructionCert:
    return ObstructionCert("component-size", {"removed": [], "max": k - 1})


def cycle_sharpness(n: int, k: int, variant: int) -> Hypergraph:
    """Degree ``2^(k-2)+1`` without a Berge cycle of length ``k``.

    1: disjoint complete hypergraphs on ``k-1`` vertices plus ``[n]``.
    2: ``m = (n-1)/(k-1)`` complete blocks ``A_i`` plus every ``A_i + {x}``, ``x = n-1``.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if variant == 1:
        if n % (k - 1) or n < 2 * (k - 1):
            raise ValueError(f"variant 1 needs n a multiple of {k - 1} with at least two blocks")
        return path_sharpness(n, k).with_edges([(1 << n) - 1])
    if variant == 2:
        if n % (k - 1) != 1 or n <= (k - 1) * (2 ** (k - 2) + 1):
            raise ValueError(
                f"variant 2 needs n = 1 mod {k - 1} and n > {(k - 1) * (2 ** (k - 2) + 1)}")
        x = 1 << (n - 1)
        blocks = _groups(n - 1, k - 1)
        edges = [s for g in blocks for s in _nonempty_subsets(g)] + [g | x for g in blocks]
        return Hypergraph.from_masks(n, edges)
    raise ValueError(f"variant must be 1 or 2, got {variant}")


def cycle_sharpness_obstruction(n: int, k: int, variant: int) -> ObstructionCert:
    if variant == 1:
        return ObstructionCert("component-size", {"removed": [list(range(n))], "max": k - 1})
    blocks = [members(g | 1 << (n - 1)) for g in _groups(n - 1, k - 1)]
    return ObstructionCert("shadow-block-structure", {"blocks": blocks, "bound": k})


def eg_sharpness(n: int, k: int) -> Hypergraph:
    """All sets ``A`` with ``A - {x}`` inside a single block; includes the empty set."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if n < 1 or (n - 1) % (k - 2):
        raise ValueError(f"need n = 1 mod {k - 2}, got n = {n}")
    x = 1 << (n - 1)
    edges = {0, x}
    for g in _groups(n - 1, k - 2):
        for s in _nonempty_subsets(g):
            edges.add(s)
            edges.add(s | x)
    return Hypergraph.from_masks(n, edges)


def eg_sharpness_obstruction(n: int, k: int) -> ObstructionCert:
    blocks = [members(g | 1 << (n - 1)) for g in _groups(n - 1, k - 2)]
    return ObstructionCert("shadow-block-structure", {"blocks": blocks, "bound": k})


FNK_SHAPES = ("path", "star")


def fnk_blocks(n: int, k: int, shape: str = "path") -> list[int]:
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if n < k - 1 or (n - 1) % (k - 2):
        raise ValueError(f"need n = 1 mod {k - 2} and n >= {k - 1}, got n = {n}")
    m = (n - 1) // (k - 2)
    step = k - 2
    if shape == "path":
        return [_range_mask(i * step, i * step + k - 1) for i in range(m)]
    if shape == "star":
        x = 1 << (n - 1)
        return [_range_mask(i * step, (i + 1) * step) | x for i in range(m)]
    raise ValueError(f"shape must be one of {FNK_SHAPES}, got {shape!r}")


def fnk(n: int, k: int, shape: str = "path") -> Graph:
    """A graph whose blocks are all copies of ``K_{k-1}``, arranged as a path or a star."""
    pairs = set()
    for b in fnk_blocks(n, k, shape):
        vs = members(b)
        pairs.update((a, c) for i, a in enumerate(vs) for c in vs[i + 1:])
    return Graph.from_edges(n, pairs)


# ------------------------------------------------- random extremal instances

def random_extremal_hypergraph(k: int, max_n: int, rng: random.Random) -> Hypergraph:
    """A random hypergraph with minimum degree ``2^(k-2)+1`` and no Berge cycle of length ``k``.

    Built from complete "groups" on ``k-1`` vertices, optional hub vertices,
    and connector edges that are unions of groups and hubs; the connectors
    are drawn so that groups, hubs and connectors form a forest.  Candidates
    are rejected until the oracle confirms both properties, so membership does
    not rely on the recipe being correct.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    g = k - 1
    need = 2 ** (k - 2) + 1
    if max_n < 2 * g:
        raise ValueError(f"max_n must be at least {2 * g}")
    for _ in range(1000):
        n_groups = rng.randint(2, max_n // g)
        room = max_n - n_groups * g
        n_hubs = rng.randint(0, room) if k == 3 else 0
        blocks = [("group", i) for i in range(n_groups)] + [("hub", i) for i in range(n_hubs)]
        H = _grow_forest(blocks, g, n_groups, n_hubs, need, rng)
        if H is None:
            continue
        perm = list(range(H.n))
        rng.shuffle(perm)
        H = H.relabel(perm)
        if H.min_degree() >= need and not has_berge_cycle_at_least(H, k):
            return H
    raise RuntimeError("could not sample an extremal hypergraph")


def _grow_forest(blocks, g, n_groups, n_hubs, need, rng):
    n = n_groups * g + n_hubs
    mask = {}
    for kind, i in blocks:
        mask[(kind, i)] = _range_mask(i * g, (i + 1) * g) if kind == "group" else 1 << (n_groups * g + i)
    # union-find over blocks keeps the block/connector incidence a forest
    root = {b: b for b in blocks}

    def find(b):
        while root[b] != b:
            root[b] = root[root[b]]
            b = root[b]
        return b

    connectors: list[int] = []
    hits = {b: 0 for b in blocks}
    want = {b: (1 if b[0] == "group" else need) for b in blocks}
    for _ in range(4 * len(blocks)):
        lacking = [b for b in blocks if hits[b] < want[b]]
        if not lacking:
            break
        first = rng.choice(lacking)
        others = [b for b in blocks if find(b) != find(first)]
        if not others:
            return None
        chosen = [first]
        rng.shuffle(others)
        for b in others:
            if all(find(b) != find(c) for c in chosen) and (len(chosen) < 2 or rng.random() < 0.3):
                chosen.append(b)
        for b in chosen[1:]:
            root[find(b)] = find(first)
        for b in chosen:
            hits[b] += 1
        connectors.append(sum(mask[b] for b in chosen))
    if any(hits[b] < want[b] for b in blocks):
        return None
    edges = set(connectors)
    for kind, i in blocks:
        if kind == "group":
            edges.update(_nonempty_subsets(mask[(kind, i)]))
    if len(edges) != len(connectors) + n_groups * (2 ** g - 1):
        return None
    return Hypergraph.from_masks(n, edges)
