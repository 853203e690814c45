"""Slow, obviously-correct reference implementations used only by the tests.

Nothing here imports the search code under test; hypergraphs are plain lists
of frozensets and graphs are sets of frozenset pairs.
"""

from itertools import combinations, permutations


def edge_sets(H):
    return [frozenset(v for v in range(H.n) if e >> v & 1) for e in H.edges]


def _assign(pairs, edges, used=frozenset()):
    """Smallest total size of distinct edges covering ``pairs`` in order, or None."""
    if not pairs:
        return 0
    a, b = pairs[0]
    best = None
    for j, e in enumerate(edges):
        if j in used or a not in e or b not in e:
            continue
        rest = _assign(pairs[1:], edges, used | {j})
        if rest is not None and (best is None or len(e) + rest < best):
            best = len(e) + rest
    return best


def longest_cycle(H) -> int:
    edges = edge_sets(H)
    best = 0
    for L in range(2, H.n + 1):
        for seq in permutations(range(H.n), L):
            if seq[0] != min(seq):
                continue
            pairs = [(seq[i], seq[(i + 1) % L]) for i in range(L)]
            if _assign(pairs, edges) is not None:
                best = L
                break
    return best


def longest_path(H) -> int:
    """Most base vertices on a Berge path (a single vertex counts as 1)."""
    edges = edge_sets(H)
    best = 1 if H.n else 0
    for L in range(2, H.n + 1):
        found = False
        for seq in permutations(range(H.n), L):
            pairs = list(zip(seq, seq[1:]))
            if _assign(pairs, edges) is not None:
                found = True
                break
        if not found:
            break
        best = L
    return best


def best_path_cost(H):
    """(base vertices, least total edge size) over longest Berge paths."""
    L = longest_path(H)
    if L < 2:
        return L, 0
    edges = edge_sets(H)
    costs = []
    for seq in permutations(range(H.n), L):
        c = _assign(list(zip(seq, seq[1:])), edges)
        if c is not None:
            costs.append(c)
    return L, min(costs)


def graph_edges(G):
    return {frozenset(e) for e in G.edges()}


def graph_cycle_lengths(G):
    E = graph_edges(G)
    out = set()
    for L in range(3, G.n + 1):
        for seq in permutations(range(G.n), L):
            if seq[0] != min(seq) or seq[1] > seq[-1]:
                continue
            if all(frozenset((seq[i], seq[(i + 1) % L])) in E for i in range(L)):
                out.add(L)
                break
    return out


def graph_hamiltonian(G) -> bool:
    if G.n < 3:
        return False
    return G.n in graph_cycle_lengths(G)


def graph_circumference(G) -> int:
    return max(graph_cycle_lengths(G), default=0)


def graph_cliques(G, r: int) -> int:
    E = graph_edges(G)
    return sum(all(frozenset(p) in E for p in combinations(S, 2))
               for S in combinations(range(G.n), r))


def max_bipartite_matching(adj, n_right: int) -> int:
    """Cardinality of a maximum matching by trying every injective choice."""
    best = 0

    def rec(i, used, size):
        nonlocal best
        best = max(best, size)
        if i == len(adj) or size + len(adj) - i <= best:
            return
        for r in adj[i]:
            if r not in used:
                rec(i + 1, used | {r}, size + 1)
        rec(i + 1, used, size)

    rec(0, frozenset(), 0)
    return best


def certificate_ok(H, kind, vertices, edges) -> bool:
    """Direct reading of the Berge path/cycle definition."""
    sets = set(edge_sets(H))
    es = [frozenset(v for v in range(64) if e >> v & 1) for e in edges]
    vs = list(vertices)
    if kind not in ("path", "cycle"):
        return False
    if len(set(vs)) != len(vs) or len(set(es)) != len(es):
        return False
    if any(not (isinstance(v, int) and 0 <= v < H.n) for v in vs):
        return False
    if kind == "path":
        if len(vs) != len(es) + 1:
            return False
        pairs = list(zip(vs, vs[1:]))
    else:
        if len(vs) != len(es) or len(es) < 2:
            return False
        pairs = list(zip(vs, vs[1:] + vs[:1]))
    return all(e in sets and a in e and b in e for (a, b), e in zip(pairs, es))
