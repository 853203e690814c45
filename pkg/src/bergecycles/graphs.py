"""Graph tools: hamiltonicity, circumference, cliques, closure, and dense
nonhamiltonian structure (the classes G1..G5 and their edge-swap repair)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable

from .hypercore import Graph, members

MAX_HAM_N = 24
CLASS_NAMES = ("G1", "G2", "G3", "G4", "G5")


def _full(n: int) -> int:
    return (1 << n) - 1


def _guard(G: Graph, allow_large: bool) -> None:
    if G.n > MAX_HAM_N and not allow_large:
        raise ValueError(f"n={G.n} exceeds the exact-search limit {MAX_HAM_N}; pass allow_large=True")


def is_biconnected(G: Graph, mask: int | None = None) -> bool:
    """2-connectivity of the subgraph induced on ``mask`` (at least 3 vertices)."""
    if mask is None:
        mask = _full(G.n)
    if mask.bit_count() < 3 or not G.is_connected(mask):
        return False
    return all(G.is_connected(mask & ~(1 << v)) for v in members(mask))


def articulation_points(G: Graph) -> list[int]:
    full = _full(G.n)
    base = len(G.components(full))
    return [v for v in range(G.n) if len(G.components(full & ~(1 << v))) > base]


# ---------------------------------------------------------------- closure

def closure_sequence(G: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Hamilton-closure together with the pairs in the order they were joined."""
    n = G.n
    adj = list(G.adj)
    deg = [a.bit_count() for a in adj]
    added = []
    changed = True
    while changed:
        changed = False
        for u in range(n):
            for v in range(u + 1, n):
                if not adj[u] >> v & 1 and deg[u] + deg[v] >= n:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                    deg[u] += 1
                    deg[v] += 1
                    added.append((u, v))
                    changed = True
    return Graph(n, tuple(adj)), added


def bondy_chvatal_closure(G: Graph) -> Graph:
    return closure_sequence(G)[0]


def _cycle_from_complete_closure(G: Graph, added: list[tuple[int, int]]) -> list[int]:
    """Pull a hamiltonian cycle of the complete closure back into ``G``.

    Joined pairs are removed in reverse order; whenever the current cycle
    uses the removed pair ``uv`` it is rerouted through the crossing edges
    that the degree-sum condition guarantees.
    """
    n = G.n
    adj = [_full(n) & ~(1 << v) for v in range(n)]
    cycle = list(range(n))
    for u, v in reversed(added):
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        i = cycle.index(u)
        c = cycle[i:] + cycle[:i]
        if c[1] == v:
            c = [c[0]] + c[1:][::-1]
        if c[-1] != v:
            cycle = c
            continue
        for j in range(1, n - 2):
            if adj[v] >> c[j] & 1 and adj[u] >> c[j + 1] & 1:
                cycle = c[:j + 1] + c[j + 1:][::-1]
                break
        else:  # pragma: no cover - impossible by the degree-sum argument
            raise AssertionError("closure pull-back failed")
    return cycle


# ---------------------------------------------------------------- hamiltonicity

def _toughness_obstruction(G: Graph) -> bool:
    """True when deleting some neighbourhood leaves more components than its size."""
    full = _full(G.n)
    seen = set()
    for v in range(G.n):
        S = G.adj[v]
        if S in seen:
            continue
        seen.add(S)
        if len(G.components(full & ~S)) > S.bit_count():
            return True
    return False


def _ham_backtrack(adj: list[int], n: int, start: int, end: int | None = None) -> list[int] | None:
    """Hamiltonian cycle through ``start`` (or a path start..end when ``end`` is given)."""
    full = _full(n)
    path = [start]

    def connected(mask: int) -> bool:
        seed = mask & -mask
        comp = frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & mask & ~comp
            comp |= new
            frontier |= new
        return comp == mask

    target = start if end is None else end

    def dfs(last: int, visited: int) -> bool:
        if visited == full:
            return end is None and bool(adj[last] >> start & 1) or end == last
        unv = full & ~visited
        if end is not None and last == end:
            return False
        tail = 1 << target
        ends = unv | (1 << last) | tail
        rest = unv
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            need = 1 if (end is not None and w == end) else 2
            if (adj[w] & ends & ~(1 << w)).bit_count() < need:
                return False
        if end is None and not adj[start] & unv:
            return False
        if not connected(unv | (1 << last) | (tail if end is None else 0)):
            return False
        cands = members(adj[last] & unv)
        if end is not None and len(cands) > 1:
            cands = [w for w in cands if w != end or unv == 1 << end]
        cands.sort(key=lambda w: ((adj[w] & unv).bit_count(), w))
        for w in cands:
            path.append(w)
            if dfs(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    if end is not None and n == 1:
        return path if start == end else None
    return path if dfs(start, 1 << start) else None


def hamiltonian_cycle(G: Graph, allow_large: bool = False) -> list[int] | None:
    """Vertex order of a hamiltonian cycle of ``G``, or ``None`` (exact)."""
    _guard(G, allow_large)
    n = G.n
    if n < 3 or G.min_degree() < 2 or not G.is_connected():
        return None
    closure, added = closure_sequence(G)
    if closure.num_edges() == comb(n, 2):
        return _cycle_from_complete_closure(G, added)
    if articulation_points(G) or _toughness_obstruction(G):
        return None
    start = min(range(n), key=lambda v: (G.degree(v), v))
    return _ham_backtrack(list(G.adj), n, start)


def is_hamiltonian(G: Graph, allow_large: bool = False) -> bool:
    return hamiltonian_cycle(G, allow_large) is not None


def is_hamiltonian_cycle(G: Graph, cycle: Iterable[int]) -> bool:
    cycle = list(cycle)
    if len(cycle) != G.n or sorted(cycle) != list(range(G.n)) or G.n < 3:
        return False
    return all(G.has_edge(cycle[i], cycle[(i + 1) % G.n]) for i in range(G.n))


def hamiltonian_path(G: Graph, x: int, y: int) -> list[int] | None:
    """A hamiltonian path from ``x`` to ``y``, or ``None``."""
    _guard(G, False)
    if x == y:
        return [x] if G.n == 1 else None
    return _ham_backtrack(list(G.adj), G.n, x, y)


def is_hamiltonian_connected_dense(G: Graph) -> bool:
    """The sufficient edge-count condition ``e(G) >= C(n,2) - 2`` with ``n >= 5``."""
    return G.n >= 5 and G.num_edges() >= comb(G.n, 2) - 2


def is_hamiltonian_connected(G: Graph) -> bool:
    """Exact all-pairs check; limited to ``n <= 12``."""
    if G.n > 12:
        raise ValueError("exact hamiltonian-connectedness is limited to n <= 12")
    return all(hamiltonian_path(G, x, y) is not None for x, y in combinations(range(G.n), 2))


def circumference(G: Graph) -> int:
    """Length of a longest cycle; 0 for forests."""
    n = G.n
    adj = G.adj
    best = [0]

    def dfs(s, last, length, avail):
        if length >= 3 and adj[last] >> s & 1 and length > best[0]:
            best[0] = length
        if length + avail.bit_count() <= best[0]:
            return
        nxt = adj[last] & avail
        while nxt:
            w = (nxt & -nxt).bit_length() - 1
            nxt &= nxt - 1
            dfs(s, w, length + 1, avail & ~(1 << w))
            if best[0] == n:
                return

    for s in range(n):
        avail = _full(n) & ~_full(s + 1)
        if avail.bit_count() + 1 <= best[0]:
            break
        # only the part of G[s..] reachable from s can carry a cycle through s
        reach = 0
        for comp in G.components(avail | (1 << s)):
            if comp >> s & 1:
                reach = comp & ~(1 << s)
        dfs(s, s, 1, reach)
        if best[0] == n:
            break
    return best[0]


def count_cliques(G: Graph, r: int) -> int:
    if r < 1:
        raise ValueError("clique order must be at least 1")
    if r == 1:
        return G.n

    def extend(cand: int, depth: int) -> int:
        if depth == r:
            return 1
        total = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            total += extend(cand & G.adj[v], depth + 1)
        return total

    return extend(_full(G.n), 0)


# ---------------------------------------------------------------- Erdős bound

def erdos_h(n: int, d: int) -> int:
    if not 1 <= d <= (n - 1) // 2:
        raise ValueError(f"d must satisfy 1 <= d <= floor((n-1)/2); got n={n}, d={d}")
    return comb(n - d, 2) + d * d


def erdos_bound(n: int, d: int) -> int:
    """Maximum edge count of a nonhamiltonian n-vertex graph with minimum degree >= d."""
    return max(erdos_h(n, d), erdos_h(n, (n - 1) // 2))


# ---------------------------------------------------------------- classes G1..G5

@dataclass(frozen=True)
class ClassWitness:
    class_name: str
    V1: tuple[int, ...]
    V2: tuple[int, ...]
    x0: int | None
    e0: tuple[int, int] | None
    k: int

    def to_json(self) -> dict:
        return {"class": self.class_name, "V1": list(self.V1), "V2": list(self.V2),
                "x0": self.x0, "e0": list(self.e0) if self.e0 else None, "k": self.k}

    @classmethod
    def from_json(cls, obj: dict) -> "ClassWitness":
        e0 = obj.get("e0")
        return cls(obj["class"], tuple(obj["V1"]), tuple(obj["V2"]), obj.get("x0"),
                   tuple(sorted(e0)) if e0 else None, int(obj["k"]))


@dataclass(frozen=True)
class NotApplicable:
    reason: str


def _witness(name, V1, V2, x0, e0, k) -> ClassWitness:
    return ClassWitness(name, tuple(members(V1)), tuple(members(V2)), x0,
                        tuple(sorted(e0)) if e0 else None, k)


def _cross_edges(G: Graph, A: int, B: int) -> list[tuple[int, int]]:
    return [(min(a, b), max(a, b)) for a in members(A) for b in members(G.adj[a] & B)]


def _match_g1(G, k):
    full = _full(G.n)
    seen = set()
    for u in range(G.n):
        if G.degree(u) != k:
            continue
        V1 = G.adj[u] | (1 << u)
        if V1 in seen or V1.bit_count() != k + 1:
            continue
        seen.add(V1)
        V2 = full & ~V1
        if not (G.is_clique(V1) and G.is_clique(V2)):
            continue
        cross = _cross_edges(G, V1, V2)
        if len(cross) <= 1:
            if V2 & 1:
                V1, V2 = V2, V1
            yield _witness("G1", V1, V2, None, cross[0] if cross else None, k)


def _cut_split(G, x0, k, small, big):
    full = _full(G.n)
    comps = G.components(full & ~(1 << x0))
    if len(comps) != 2:
        return None
    a, b = sorted(comps, key=lambda c: (c.bit_count(), c & -c))
    if a.bit_count() != small or b.bit_count() != big:
        return None
    return a | (1 << x0), b | (1 << x0)


def _match_g2(G, k):
    for x0 in range(G.n):
        split = _cut_split(G, x0, k, k, k)
        if split is None:
            continue
        V1, V2 = split
        if G.is_clique(V1) and G.is_clique(V2):
            yield _witness("G2", V1, V2, x0, None, k)


def _match_g3(G, k):
    if G.min_degree() < k:
        return
    for x0 in range(G.n):
        split = _cut_split(G, x0, k, k, k + 1)
        if split is None:
            continue
        V1, V2 = split
        if G.is_clique(V1) and is_biconnected(G, V2):
            yield _witness("G3", V1, V2, x0, None, k)


def _neighbourhood_sides(G, k):
    seen = set()
    for v in range(G.n):
        S = G.adj[v]
        if S.bit_count() == k and S not in seen:
            seen.add(S)
            yield S


def _match_g4(G, k):
    full = _full(G.n)
    for V1 in _neighbourhood_sides(G, k):
        V2 = full & ~V1
        if G.is_independent(V2) and all(G.adj[w] & V1 == V1 for w in members(V2)):
            yield _witness("G4", V1, V2, None, None, k)


def _match_g5(G, k):
    if G.min_degree() < k:
        return
    full = _full(G.n)
    for V1 in _neighbourhood_sides(G, k):
        V2 = full & ~V1
        inside = [(a, b) for a in members(V2) for b in members(G.adj[a] & V2) if a < b]
        if len(inside) <= 1:
            yield _witness("G5", V1, V2, None, inside[0] if inside else None, k)


_MATCHERS = {"G1": (_match_g1, 2), "G2": (_match_g2, 1), "G3": (_match_g3, 2),
             "G4": (_match_g4, 1), "G5": (_match_g5, 2)}


def classify_dense_nonhamiltonian(G: Graph, k: int, all_matches: bool = False):
    """Place a dense nonhamiltonian graph into one of G1..G5.

    Returns the first matching :class:`ClassWitness` in the order G1..G5
    (or the list of every match with ``all_matches``), or
    :class:`NotApplicable` with a reason when a precondition fails.  Every
    class is nonhamiltonian by construction, so a structural match settles
    hamiltonicity; only unmatched graphs are sent to the exact search.
    """
    n = G.n
    if k < 3:
        return NotApplicable("k-below-3")
    if n not in (2 * k + 1, 2 * k + 2):
        return NotApplicable("n-not-2k+1-or-2k+2")
    if G.min_degree() < k:
        return NotApplicable("min-degree-below-k")
    found = []
    for name in CLASS_NAMES:
        matcher, parity = _MATCHERS[name]
        if n != 2 * k + parity:
            continue
        for w in matcher(G, k):
            if not all_matches:
                return w
            found.append(w)
            break
    if found:
        return found
    if is_hamiltonian(G, allow_large=True):
        return NotApplicable("hamiltonian")
    return NotApplicable("unclassified")


def check_witness(G: Graph, w: ClassWitness, degree_scope: str = "graph") -> list[str]:
    """Re-check every defining condition of ``w.class_name`` from scratch.

    Returns the list of violated conditions (empty when the witness holds).
    ``degree_scope`` selects the reading of the G3 degree requirement:
    ``"graph"`` for all of V(G), ``"V2"`` for the vertices of V2 only.
    """
    k, n = w.k, G.n
    V = set(range(n))
    V1, V2 = set(w.V1), set(w.V2)
    E = {frozenset(e) for e in G.edges()}
    deg = G.degrees()

    def K(S):
        return {frozenset(p) for p in combinations(sorted(S), 2)}

    bad = []

    def need(cond, msg):
        if not cond:
            bad.append(msg)

    need(V1 | V2 == V, "V1 and V2 must cover V")
    name = w.class_name
    if name == "G1":
        need(n == 2 * k + 2, "n == 2k+2")
        need(len(V1) == len(V2) == k + 1 and not V1 & V2, "|V1| = |V2| = k+1, disjoint")
        need(K(V1) | K(V2) <= E, "V1 and V2 complete")
        extra = E - K(V1) - K(V2)
        if w.e0 is None:
            need(not extra, "no further edge")
        else:
            e0 = frozenset(w.e0)
            need(extra == {e0}, "exactly the further edge e0")
            need(len(e0 & V1) == 1 and len(e0 & V2) == 1, "e0 joins V1 and V2")
    elif name == "G2":
        need(n == 2 * k + 1, "n == 2k+1")
        need(len(V1) == len(V2) == k + 1 and V1 & V2 == {w.x0}, "|V1| = |V2| = k+1, meeting in x0")
        need(E == K(V1) | K(V2), "edge set is K(V1) + K(V2)")
    elif name == "G3":
        need(n == 2 * k + 2, "n == 2k+2")
        need(len(V1) == k + 1 and len(V2) == k + 2 and V1 & V2 == {w.x0}, "sizes k+1, k+2 meeting in x0")
        inside2 = {e for e in E if e <= V2}
        need(E == K(V1) | inside2, "edge set is K(V1) + G[V2]")
        need(K(V1) <= E, "V1 complete")
        sub = Graph.from_edges(n, [tuple(e) for e in inside2])
        need(is_biconnected(sub, sum(1 << v for v in V2)), "G[V2] 2-connected")
        scope = V if degree_scope == "graph" else V2
        need(all(deg[v] >= k for v in scope), "degrees at least k")
    elif name == "G4":
        need(n == 2 * k + 1, "n == 2k+1")
        need(len(V1) == k and len(V2) == k + 1 and not V1 & V2, "sizes k, k+1, disjoint")
        need(not K(V2) & E, "V2 independent")
        need(all(frozenset((a, b)) in E for a in V1 for b in V2), "all V1-V2 pairs present")
    elif name == "G5":
        need(n == 2 * k + 2, "n == 2k+2")
        need(len(V1) == k and len(V2) == k + 2 and not V1 & V2, "sizes k, k+2, disjoint")
        inside2 = K(V2) & E
        if w.e0 is None:
            need(not inside2, "V2 independent")
        else:
            need(inside2 == {frozenset(w.e0)}, "V2 spans only e0")
        need(all(d >= k for d in deg), "degrees at least k")
    else:
        bad.append(f"unknown class {name!r}")
    return bad


# ---------------------------------------------------------------- swap repair

def _pair(p) -> tuple[int, int]:
    a, b = p
    if a == b:
        raise ValueError(f"degenerate pair {p}")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class SwapPlan:
    removed: frozenset
    added: frozenset

    @classmethod
    def of(cls, removed: Iterable = (), added: Iterable = ()) -> "SwapPlan":
        return cls(frozenset(_pair(p) for p in removed), frozenset(_pair(p) for p in added))

    def to_json(self) -> dict:
        return {"removed": sorted(list(p) for p in self.removed),
                "added": sorted(list(p) for p in self.added)}


def validate_plan(G: Graph, w: ClassWitness, plan: SwapPlan) -> None:
    """Raise ``ValueError`` unless ``plan`` has the shape allowed for ``w``'s class."""
    V1, V2 = set(w.V1), set(w.V2)
    A, B = plan.removed, plan.added
    limit = 2 if w.class_name in ("G1", "G5") else 1
    if len(A) > limit:
        raise ValueError(f"{w.class_name} allows at most {limit} removed edges, got {len(A)}")
    for a, b in A:
        if not G.has_edge(a, b):
            raise ValueError(f"removed pair {(a, b)} is not an edge")

    def crosses(p, X, Y):
        a, b = p
        return (a in X and b in Y) or (a in Y and b in X)

    name = w.class_name
    if name == "G1":
        ok = len(B) == 2 and all(crosses(p, V1, V2) for p in B)
        ok = ok and not (set(sorted(B)[0]) & set(sorted(B)[1]))
    elif name in ("G2", "G3"):
        ok = len(B) == 1 and crosses(next(iter(B)), V1 - {w.x0}, V2 - {w.x0})
    elif name == "G4":
        ok = len(B) == 1 and set(next(iter(B))) <= V2
    elif name == "G5":
        ok = len(B) == 2 and all(set(p) <= V2 for p in B)
    else:
        ok = False
    if not ok:
        raise ValueError(f"added pairs {sorted(B)} do not fit the {name} shape")


def is_exceptional(G: Graph, w: ClassWitness, plan: SwapPlan) -> bool:
    """The single G3 configuration the repair lemma does not cover."""
    if w.class_name != "G3" or len(plan.removed) != 1 or len(plan.added) != 1:
        return False
    x0 = w.x0
    V2 = set(w.V2)
    nbrs = [v for v in members(G.adj[x0]) if v in V2]
    if len(nbrs) != 2:
        return False
    (ra, rb), = plan.removed
    (aa, ab), = plan.added
    added_v2 = ab if ab in V2 else aa
    for x2, y2 in (nbrs, nbrs[::-1]):
        if {ra, rb} != {x0, y2} or added_v2 != x2:
            continue
        rest = sorted(V2 - {x0})
        missing = [(a, b) for a, b in combinations(rest, 2) if not G.has_edge(a, b)]
        if not missing or missing == [tuple(sorted((x2, y2)))]:
            return True
    return False


def apply_swap(G: Graph, w: ClassWitness, plan: SwapPlan) -> tuple[Graph, str]:
    """Return ``((E(G) - removed) + added, guarantee)``.

    ``guarantee`` is ``"hamiltonian"`` when the repair lemma applies and
    ``"exceptional"`` for its single uncovered G3 configuration.
    """
    if w.k < 6:
        raise ValueError(f"the repair guarantee needs k >= 6, got k={w.k}")
    validate_plan(G, w, plan)
    out = G.remove_edges(plan.removed).add_edges(plan.added)
    return out, ("exceptional" if is_exceptional(G, w, plan) else "hamiltonian")


# ---------------------------------------------------------------- generators

def _clique_pairs(vs) -> list[tuple[int, int]]:
    return [(a, b) if a < b else (b, a) for a, b in combinations(vs, 2)]


def random_class_member(name: str, k: int, rng) -> tuple[Graph, ClassWitness]:
    """A random labelled member of class ``name`` with its ground-truth witness."""
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    n = 2 * k + (1 if name in ("G2", "G4") else 2)
    perm = list(range(n))
    rng.shuffle(perm)
    pairs: list[tuple[int, int]] = []
    x0 = e0 = None
    if name == "G1":
        V1, V2 = perm[:k + 1], perm[k + 1:]
        pairs = _clique_pairs(V1) + _clique_pairs(V2)
        if rng.random() < 0.5:
            e0 = (rng.choice(V1), rng.choice(V2))
            pairs.append(e0)
    elif name == "G2":
        x0 = perm[0]
        V1, V2 = perm[:k + 1], [x0] + perm[k + 1:]
        pairs = _clique_pairs(V1) + _clique_pairs(V2)
    elif name == "G3":
        x0 = perm[0]
        V1, V2 = perm[:k + 1], [x0] + perm[k + 1:]
        inner = _g3_side(V2, x0, k, rng)
        pairs = _clique_pairs(V1) + inner
    elif name == "G4":
        V1, V2 = perm[:k], perm[k:]
        pairs = [(a, b) for a in V1 for b in V2]
        pairs += [p for p in _clique_pairs(V1) if rng.random() < 0.5]
    elif name == "G5":
        V1, V2 = perm[:k], perm[k:]
        cross = {(a, b) for a in V1 for b in V2}
        if rng.random() < 0.7:
            e0 = tuple(rng.sample(V2, 2))
            # each endpoint of e0 may lose one cross edge and keep degree k
            for end in e0:
                if rng.random() < 0.5:
                    cross.discard((rng.choice(V1), end))
        pairs = list(cross) + ([e0] if e0 else [])
        pairs += [p for p in _clique_pairs(V1) if rng.random() < 0.5]
    else:
        raise ValueError(f"unknown class {name!r}")
    G = Graph.from_edges(n, pairs)
    w = _witness(name, sum(1 << v for v in V1), sum(1 << v for v in V2), x0, e0, k)
    return G, w


def _g3_side(V2, x0, k, rng) -> list[tuple[int, int]]:
    """A 2-connected graph on ``V2`` with degree at least ``k`` off ``x0``."""
    rest = [v for v in V2 if v != x0]
    while True:
        keep = set(_clique_pairs(rest))
        nbrs = rng.sample(rest, rng.randint(2, len(rest)))
        keep.update((min(x0, v), max(x0, v)) for v in nbrs)
        for p in rng.sample(sorted(keep), len(keep)):
            if rng.random() < 0.3:
                keep.discard(p)
                deg = {v: 0 for v in V2}
                for a, b in keep:
                    deg[a] += 1
                    deg[b] += 1
                if any(deg[v] < k for v in rest) or deg[x0] < 2:
                    keep.add(p)
        sub = Graph.from_edges(max(V2) + 1, keep)
        if is_biconnected(sub, sum(1 << v for v in V2)):
            return sorted(keep)


def random_swap_plan(G: Graph, w: ClassWitness, rng, avoid_exceptional: bool = True) -> SwapPlan:
    """A random plan of the shape allowed for ``w``; added pairs are non-edges of ``G``."""
    V1, V2 = list(w.V1), list(w.V2)
    name = w.class_name
    while True:
        limit = 2 if name in ("G1", "G5") else 1
        edges = G.edges()
        removed = rng.sample(edges, rng.randint(0, limit))
        if name == "G1":
            a1, a2 = rng.sample(V1, 2)
            b1, b2 = rng.sample(V2, 2)
            added = [(a1, b1), (a2, b2)]
        elif name in ("G2", "G3"):
            added = [(rng.choice([v for v in V1 if v != w.x0]), rng.choice([v for v in V2 if v != w.x0]))]
        elif name == "G4":
            added = [tuple(rng.sample(V2, 2))]
        else:
            pool = _clique_pairs(V2)
            added = rng.sample(pool, 2)
        if any(G.has_edge(*p) for p in added):
            continue
        plan = SwapPlan.of(removed, added)
        if avoid_exceptional and is_exceptional(G, w, plan):
            continue
        return plan


def exceptional_g3_instance(k: int = 6) -> tuple[Graph, ClassWitness, SwapPlan]:
    """The uncovered G3 configuration: ``x0`` sees only ``x2, y2`` in ``V2``, drop ``x0 y2``, add ``x1 x2``."""
    n = 2 * k + 2
    V1 = list(range(k + 1))
    x0 = 0
    rest = list(range(k + 1, n))
    x2, y2 = rest[0], rest[1]
    pairs = _clique_pairs(V1) + _clique_pairs(rest) + [(x0, x2), (x0, y2)]
    G = Graph.from_edges(n, pairs)
    w = _witness("G3", sum(1 << v for v in V1), (1 << x0) | sum(1 << v for v in rest), x0, None, k)
    return G, w, SwapPlan.of([(x0, y2)], [(1, x2)])
