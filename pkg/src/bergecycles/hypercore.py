"""Core data model: hypergraphs and graphs over bitmask vertex sets.

Vertices are the integers ``0 .. n-1``.  A vertex set is an ``int`` whose bit
``v`` is set when ``v`` belongs to it, so containment of a pair in an edge is
``edge & pair == pair``.  Everything here is immutable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_N = 64


class FormatError(ValueError):
    """Raised for malformed ``.bhg`` text or certificate JSON."""


def bit(v: int) -> int:
    return 1 << v


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return mask.bit_count()


def edge_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical edge order: by size, then lexicographically by sorted members."""
    return (mask.bit_count(), tuple(members(mask)))


def submasks(mask: int) -> Iterator[int]:
    """Every subset of ``mask``, including the empty set and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"vertex count must be a non-negative integer, got {n!r}")
    if n > MAX_N:
        raise ValueError(f"vertex count {n} exceeds the supported maximum {MAX_N}")


@dataclass(frozen=True)
class Hypergraph:
    """A simple hypergraph: ``n`` vertices and a set of distinct edges.

    ``edges`` holds bitmasks in canonical order.  The empty edge is allowed
    but never contributes to shadows, degrees or Berge structures.
    """

    n: int
    edges: tuple[int, ...]
    _lookup: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        _check_n(self.n)
        full = (1 << self.n) - 1
        lookup = frozenset(self.edges)
        if len(lookup) != len(self.edges):
            raise ValueError("hypergraph edges must be distinct")
        for e in self.edges:
            if e < 0 or e & ~full:
                raise ValueError(f"edge {members(e)} is not a subset of [0, {self.n})")
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=edge_key)))
        object.__setattr__(self, "_lookup", lookup)

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "Hypergraph":
        masks = []
        for s in sets:
            s = list(s)
            if len(set(s)) != len(s):
                raise ValueError(f"edge {s} repeats a vertex")
            for v in s:
                if not 0 <= v < n:
                    raise ValueError(f"vertex {v} out of range for n={n}")
            masks.append(mask_of(s))
        return cls(n, tuple(masks))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int], dedupe: bool = False) -> "Hypergraph":
        masks = tuple(masks)
        if dedupe:
            masks = tuple(set(masks))
        return cls(n, masks)

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, edge) -> bool:
        if not isinstance(edge, int):
            edge = mask_of(edge)
        return edge in self._lookup

    def __iter__(self) -> Iterator[int]:
        return iter(self.edges)

    def edge_sets(self) -> list[list[int]]:
        return [members(e) for e in self.edges]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        b = 1 << v
        return sum(1 for e in self.edges if e & b)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in members(e):
                deg[v] += 1
        return deg

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def incident(self, v: int) -> list[int]:
        b = 1 << v
        return [e for e in self.edges if e & b]

    def with_edges(self, extra: Iterable[int]) -> "Hypergraph":
        return Hypergraph(self.n, self.edges + tuple(e for e in extra if e not in self._lookup))

    def without_edges(self, drop: Iterable[int]) -> "Hypergraph":
        drop = set(drop)
        return Hypergraph(self.n, tuple(e for e in self.edges if e not in drop))

    def relabel(self, perm: Sequence[int]) -> "Hypergraph":
        """Image under the vertex map ``v -> perm[v]``."""
        return Hypergraph(self.n, tuple(mask_of(perm[v] for v in members(e)) for e in self.edges))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph stored as neighbourhood bitmasks."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_n(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & (1 << v):
                raise ValueError(f"loop at vertex {v}")
            if a & ~full:
                raise ValueError(f"neighbour of {v} out of range")
            for u in members(a):
                if not self.adj[u] & (1 << v):
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, set(self.edges()) | {tuple(sorted(e)) for e in edges})

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, set(self.edges()) - {tuple(sorted(e)) for e in edges})

    def induced_edges(self, mask: int) -> int:
        return sum((self.adj[v] & mask).bit_count() for v in members(mask)) // 2

    def is_independent(self, mask: int) -> bool:
        return all(not self.adj[v] & mask for v in members(mask))

    def is_clique(self, mask: int) -> bool:
        return all((self.adj[v] | (1 << v)) & mask == mask for v in members(mask))

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of the subgraph induced on ``mask``."""
        if mask is None:
            mask = (1 << self.n) - 1
        comps = []
        left = mask
        while left:
            seed = left & -left
            comp = seed
            frontier = seed
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                new = self.adj[v] & mask & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            left &= ~comp
        return comps

    def is_connected(self, mask: int | None = None) -> bool:
        if mask is None:
            mask = (1 << self.n) - 1
        return mask == 0 or len(self.components(mask)) == 1

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.n, tuple((1 << u) | (1 << v) for u, v in self.edges()))


def shadow2(H: Hypergraph) -> Graph:
    """The 2-shadow: ``xy`` is an edge iff some hyperedge contains both."""
    adj = [0] * H.n
    for e in H.edges:
        if e & (e - 1):
            for v in members(e):
                adj[v] |= e
    return Graph(H.n, tuple(a & ~(1 << v) for v, a in enumerate(adj)))


def degree(H: Hypergraph, v: int) -> int:
    return H.degree(v)


def down_close(H: Hypergraph) -> Hypergraph:
    """Every subset of every edge, the empty set included."""
    out: set[int] = set()
    for e in H.edges:
        if e in out:
            continue
        out.update(submasks(e))
    return Hypergraph(H.n, tuple(out))


def is_downset(H: Hypergraph) -> bool:
    if not H.edges:
        return True
    for e in H.edges:
        for v in members(e):
            if e ^ (1 << v) not in H:
                return False
    return True


# ---------------------------------------------------------------- certificates

@dataclass(frozen=True)
class BergeCertificate:
    """Representative vertices and hyperedges of a Berge path or cycle.

    For a path, ``edges[i]`` must contain ``vertices[i]`` and
    ``vertices[i+1]``; for a cycle the last edge closes back to
    ``vertices[0]``.
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def total_size(self) -> int:
        return sum(e.bit_count() for e in self.edges)

    def pairs(self) -> list[tuple[int, int]]:
        vs = self.vertices
        if self.kind == "cycle":
            return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
        return [(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


def check_certificate(H: Hypergraph, c: BergeCertificate) -> str | None:
    """Return ``None`` when ``c`` is a valid Berge path/cycle of ``H``, else a reason code."""
    if c.kind not in ("path", "cycle"):
        return "bad-kind"
    vs, es = c.vertices, c.edges
    if any(not (isinstance(v, int) and 0 <= v < H.n) for v in vs):
        return "vertex-out-of-range"
    if len(set(vs)) != len(vs):
        return "repeated-vertex"
    if len(set(es)) != len(es):
        return "repeated-edge"
    if c.kind == "path":
        if len(vs) != len(es) + 1:
            return "count-mismatch"
    else:
        if len(vs) != len(es):
            return "count-mismatch"
        if len(es) < 2:
            return "too-short"
    for e in es:
        if e not in H:
            return "edge-not-in-hypergraph"
    for (u, v), e in zip(c.pairs(), es):
        p = (1 << u) | (1 << v)
        if e & p != p:
            return "pair-not-in-edge"
    return None


def verify_certificate(H: Hypergraph, c: BergeCertificate) -> bool:
    return check_certificate(H, c) is None


def certificate_to_json(c: BergeCertificate) -> dict:
    return {"kind": c.kind, "vertices": list(c.vertices), "edges": [members(e) for e in c.edges]}


def certificate_from_json(obj) -> BergeCertificate:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        kind = obj["kind"]
        vertices = tuple(int(v) for v in obj["vertices"])
        edges = []
        for e in obj["edges"]:
            e = [int(v) for v in e]
            if len(set(e)) != len(e) or any(v < 0 or v >= MAX_N for v in e):
                raise FormatError(f"invalid certificate edge {e}")
            edges.append(mask_of(e))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(f"malformed certificate: {exc}") from exc
    return BergeCertificate(kind, vertices, tuple(edges))


# ---------------------------------------------------------------- .bhg text format

def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_hypergraph(text: str) -> Hypergraph:
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("missing header line 'n m'")
    lineno, header = lines[0]
    head = _ints(header, lineno)
    if len(head) != 2 or head[0] < 0 or head[1] < 0:
        raise FormatError(f"line {lineno}: malformed header {header!r}")
    n, m = head
    if n > MAX_N:
        raise FormatError(f"line {lineno}: vertex count {n} exceeds {MAX_N}")
    body = lines[1:]
    if len(body) != m:
        raise FormatError(f"header announces {m} edges but {len(body)} edge lines follow")
    seen: set[int] = set()
    masks = []
    for lineno, line in body:
        toks = _ints(line, lineno)
        s, vs = toks[0], toks[1:]
        if s != len(vs):
            raise FormatError(f"line {lineno}: edge size {s} but {len(vs)} vertices listed")
        for v in vs:
            if not 0 <= v < n:
                raise FormatError(f"line {lineno}: vertex {v} out of range for n={n}")
        if len(set(vs)) != len(vs):
            raise FormatError(f"line {lineno}: repeated vertex in edge")
        e = mask_of(vs)
        if e in seen:
            raise FormatError(f"line {lineno}: duplicate edge {sorted(vs)}")
        seen.add(e)
        masks.append(e)
    return Hypergraph(n, tuple(masks))


def parse_graph(text: str) -> Graph:
    H = parse_hypergraph(text)
    if any(e.bit_count() != 2 for e in H.edges):
        raise FormatError("graph files may only contain edges of size 2")
    return Graph.from_edges(H.n, (tuple(members(e)) for e in H.edges))


def serialize_hypergraph(H: Hypergraph | Graph) -> str:
    if isinstance(H, Graph):
        H = H.to_hypergraph()
    lines = [f"{H.n} {len(H.edges)}"]
    for e in H.edges:
        vs = members(e)
        lines.append(" ".join(str(x) for x in [len(vs), *vs]))
    return "\n".join(lines) + "\n"


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))
