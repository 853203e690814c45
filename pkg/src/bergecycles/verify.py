"""Theorem-verification harness: exhaustive sweeps at tiny orders, seeded sampling above.

Graphs on ``n <= 7`` vertices are swept as integer codes over the ``C(n,2)``
vertex pairs with vectorized numpy checks (degrees, containment of every
hamiltonian cycle / cycle / clique of ``K_n``).  Hypergraphs on ``n <= 4``
are swept over all edge families; at ``n = 5`` only downsets are swept.
Every reported counterexample is confirmed by two further independent checks.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

import numpy as np

from .bounds import eg_graph_bound, eg_hypergraph_bound, erdos_bound, clique_bound
from .graphs import (
    NotApplicable,
    check_witness,
    circumference,
    classify_dense_nonhamiltonian,
    is_hamiltonian,
)
from .hypercore import Graph, Hypergraph, members
from .oracle import has_berge_cycle_at_least, has_berge_path_with_base, longest_berge_cycle, longest_berge_path

THEOREMS = ("thm4", "thm5", "thm6", "lemma5G", "erdosBound", "egGraph", "luoCliques", "dirac")
GRAPH_THEOREMS = ("lemma5G", "erdosBound", "egGraph", "luoCliques", "dirac")
DEFAULT_SEED = 20240229
MAX_EXHAUSTIVE_GRAPH_N = 7
MAX_EXHAUSTIVE_HYPER_N = 4
MAX_RANDOM_GRAPH_N = 8
CHUNK = 1 << 16


class EnvelopeError(ValueError):
    """Requested sweep is outside the supported envelope."""


@dataclass
class VerifyReport:
    theorem: str
    params: dict
    mode: str
    instances_checked: int
    oracle_checked: int
    counterexample: dict | None = None
    seed: int | None = None
    notes: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "params": self.params, "mode": self.mode,
                "instances_checked": self.instances_checked, "oracle_checked": self.oracle_checked,
                "counterexample": self.counterexample, "seed": self.seed,
                "notes": list(self.notes), "stats": self.stats}


# ------------------------------------------------------------ graph tables

@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


@lru_cache(maxsize=None)
def _pair_bit(n: int) -> dict:
    return {p: i for i, p in enumerate(pair_list(n))}


def _code(n: int, pairs) -> int:
    pb = _pair_bit(n)
    return sum(1 << pb[(min(a, b), max(a, b))] for a, b in pairs)


def graph_from_code(n: int, code: int) -> Graph:
    return Graph.from_edges(n, [p for i, p in enumerate(pair_list(n)) if code >> i & 1])


def code_of_graph(G: Graph) -> int:
    return _code(G.n, G.edges())


@lru_cache(maxsize=None)
def _vertex_masks(n: int) -> np.ndarray:
    out = np.zeros(n, dtype=np.uint64)
    for i, (a, b) in enumerate(pair_list(n)):
        out[a] |= np.uint64(1 << i)
        out[b] |= np.uint64(1 << i)
    return out


@lru_cache(maxsize=None)
def cycle_codes(n: int, length: int) -> np.ndarray:
    """Codes of every cycle of the given length in ``K_n``."""
    out = []
    for S in combinations(range(n), length):
        first, rest = S[0], S[1:]
        for perm in permutations(rest):
            if perm[0] > perm[-1]:
                continue  # same cycle traversed backwards
            seq = (first,) + perm
            out.append(_code(n, [(seq[i], seq[(i + 1) % length]) for i in range(length)]))
    return np.array(sorted(out), dtype=np.uint64)


@lru_cache(maxsize=None)
def clique_codes(n: int, r: int) -> np.ndarray:
    return np.array([_code(n, combinations(S, 2)) for S in combinations(range(n), r)], dtype=np.uint64)


def _contains_any(codes: np.ndarray, masks: np.ndarray) -> np.ndarray:
    hit = np.zeros(codes.shape, dtype=bool)
    for m in masks:
        hit |= (codes & m) == m
    return hit


def _count_contained(codes: np.ndarray, masks: np.ndarray) -> np.ndarray:
    cnt = np.zeros(codes.shape, dtype=np.int64)
    for m in masks:
        cnt += (codes & m) == m
    return cnt


def _has_cycle_at_least(codes: np.ndarray, n: int, k: int) -> np.ndarray:
    hit = np.zeros(codes.shape, dtype=bool)
    for L in range(max(k, 3), n + 1):
        hit |= _contains_any(codes, cycle_codes(n, L))
    return hit


def _min_degree(codes: np.ndarray, n: int) -> np.ndarray:
    vm = _vertex_masks(n)
    deg = np.stack([np.bitwise_count(codes & vm[v]) for v in range(n)])
    return deg.min(axis=0).astype(np.int64)


def _naive_hamiltonian(G: Graph) -> bool:
    n = G.n
    if n < 3:
        return False
    return any(all(G.has_edge(s[i], s[(i + 1) % n]) for i in range(n))
               for p in permutations(range(1, n)) for s in [(0,) + p])


def _naive_circumference(G: Graph) -> int:
    best = 0
    for L in range(3, G.n + 1):
        for S in combinations(range(G.n), L):
            if any(all(G.has_edge(s[i], s[(i + 1) % L]) for i in range(L))
                   for p in permutations(S[1:]) for s in [(S[0],) + p]):
                best = L
                break
    return best


# ----------------------------------------------------------- graph sweeps

def _graph_params(theorem: str, n: int, k, d, r) -> dict:
    if theorem == "lemma5G":
        return {"n": n, "k": (n - 1) // 2}
    if theorem == "erdosBound":
        ds = [d] if d is not None else list(range(1, (n - 1) // 2 + 1))
        return {"n": n, "d": ds}
    if theorem == "egGraph":
        return {"n": n, "k": k}
    if theorem == "luoCliques":
        return {"n": n, "k": k, "r": r}
    return {"n": n}


def _graph_chunk(job) -> dict:
    """Check one block of graph codes; returns mergeable partial results."""
    theorem, params, codes = job
    n = params["n"]
    codes = np.asarray(codes, dtype=np.uint64)
    out = {"checked": int(codes.size), "oracle": 0, "bad": [], "stats": {}}
    mind = _min_degree(codes, n)
    edges = np.bitwise_count(codes).astype(np.int64)
    ham_masks = cycle_codes(n, n) if n >= 3 else np.zeros(0, dtype=np.uint64)
    stats = out["stats"]

    if theorem == "lemma5G":
        k = params["k"]
        sub = codes[mind >= k]
        nonham = sub[~_contains_any(sub, ham_masks)]
        out["oracle"] = int(nonham.size)
        for c in nonham.tolist():
            G = graph_from_code(n, c)
            if is_hamiltonian(G):
                out["bad"].append((c, "sweep and search disagree on hamiltonicity"))
                continue
            w = classify_dense_nonhamiltonian(G, k)
            if isinstance(w, NotApplicable):
                out["bad"].append((c, f"unclassified: {w.reason}"))
                continue
            problems = check_witness(G, w)
            if problems:
                out["bad"].append((c, "witness fails: " + "; ".join(problems)))
                continue
            stats[w.class_name] = stats.get(w.class_name, 0) + 1
    elif theorem == "erdosBound":
        for d in params["d"]:
            bound = erdos_bound(n, d)
            sel = (mind >= d) & (edges >= bound)
            sub, e_sub = codes[sel], edges[sel]
            ham = _contains_any(sub, ham_masks)
            out["oracle"] += int(sub.size)
            for c in sub[~ham & (e_sub > bound)].tolist():
                out["bad"].append((c, f"nonhamiltonian with delta >= {d} and more than {bound} edges"))
            key = f"attained_d{d}"
            stats[key] = stats.get(key, 0) + int((~ham & (e_sub == bound)).sum())
    elif theorem in ("egGraph", "luoCliques"):
        k = params["k"]
        if theorem == "egGraph":
            value, bound = edges, eg_graph_bound(n, k)
        else:
            value, bound = _count_contained(codes, clique_codes(n, params["r"])), clique_bound(n, k, params["r"])
        bound = Fraction(bound)
        over = value * bound.denominator > bound.numerator
        at = value * bound.denominator == bound.numerator
        sel = over | at
        sub = codes[sel]
        longc = _has_cycle_at_least(sub, n, k)
        out["oracle"] = int(sub.size)
        for c in sub[~longc & over[sel]].tolist():
            out["bad"].append((c, f"circumference below {k} but above the bound {bound}"))
        stats["attained"] = int((~longc & at[sel]).sum())
    elif theorem == "dirac":
        sub = codes[2 * mind >= n] if n >= 3 else codes[:0]
        ham = _contains_any(sub, ham_masks)
        out["oracle"] = int(sub.size)
        for c in sub[~ham].tolist():
            out["bad"].append((c, "minimum degree at least n/2 but not hamiltonian"))
    return out


def _confirm_graph(theorem: str, params: dict, code: int) -> bool:
    """Two further independent checks that a reported graph really violates the claim."""
    n = params["n"]
    G = graph_from_code(n, code)
    if theorem == "lemma5G":
        k = params["k"]
        w = classify_dense_nonhamiltonian(G, k)
        route1 = isinstance(w, NotApplicable) or bool(check_witness(G, w))
        route2 = G.min_degree() >= k and not _naive_hamiltonian(G)
        return route1 and route2
    if theorem == "erdosBound":
        return not is_hamiltonian(G) and not _naive_hamiltonian(G)
    if theorem == "dirac":
        return not is_hamiltonian(G) and not _naive_hamiltonian(G)
    k = params["k"]
    return circumference(G) < k and _naive_circumference(G) < k


def _merge(parts) -> dict:
    total = {"checked": 0, "oracle": 0, "bad": [], "stats": {}}
    for p in parts:
        total["checked"] += p["checked"]
        total["oracle"] += p["oracle"]
        total["bad"].extend(p["bad"])
        for key, v in p["stats"].items():
            total["stats"][key] = total["stats"].get(key, 0) + v
    return total


def _run_jobs(jobs_list, jobs: int):
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_graph_chunk, jobs_list))
    return [_graph_chunk(j) for j in jobs_list]


def _verify_graph_theorem(theorem, n, k, d, r, mode, trials, seed, jobs, p, override) -> VerifyReport:
    if theorem == "lemma5G" and (n - 1) // 2 < 3:
        raise ValueError("lemma5G needs n >= 7")
    if theorem in ("egGraph", "luoCliques"):
        if k is None or not 3 <= k <= n:
            raise ValueError("egGraph/luoCliques need 3 <= k <= n")
        if theorem == "luoCliques" and (r is None or r < 1):
            raise ValueError("luoCliques needs r >= 1")
    if theorem == "erdosBound" and d is not None and not 1 <= d <= (n - 1) // 2:
        raise ValueError("erdosBound needs 1 <= d <= (n-1)//2")
    params = _graph_params(theorem, n, k, d, r)
    P = len(pair_list(n))
    if mode == "exhaustive":
        if n > MAX_EXHAUSTIVE_GRAPH_N and not override:
            raise EnvelopeError(f"exhaustive graph sweeps stop at n = {MAX_EXHAUSTIVE_GRAPH_N}")
        total = 1 << P
        work = [(theorem, params, np.arange(lo, min(lo + CHUNK, total), dtype=np.uint64))
                for lo in range(0, total, CHUNK)]
        used_seed = None
    elif mode == "random":
        if n > MAX_RANDOM_GRAPH_N and not override:
            raise EnvelopeError(f"random graph sampling stops at n = {MAX_RANDOM_GRAPH_N}")
        if P > 64:
            raise EnvelopeError("graph codes are 64-bit, so sampling is limited to n <= 11")
        used_seed = DEFAULT_SEED if seed is None else seed
        gen = np.random.default_rng(used_seed)
        bits = (gen.random((trials, P)) < p).astype(np.uint64)
        codes = (bits << np.arange(P, dtype=np.uint64)).sum(axis=1, dtype=np.uint64)
        work = [(theorem, params, codes[i:i + CHUNK]) for i in range(0, trials, CHUNK)]
        params = {**params, "p": p}
    else:
        raise ValueError(f"unknown mode {mode!r}")
    merged = _merge(_run_jobs(work, jobs))
    report = VerifyReport(theorem, params, mode, merged["checked"], merged["oracle"], seed=used_seed,
                          stats=merged["stats"])
    for code, why in merged["bad"]:
        if _confirm_graph(theorem, params, code):
            G = graph_from_code(n, code)
            report.counterexample = {"n": n, "edges": [list(e) for e in G.edges()], "reason": why}
            break
        raise RuntimeError(f"unconfirmed violation on graph code {code}: {why}")
    return report


# ------------------------------------------------------- hypergraph sweeps

def downsets(n: int) -> list[tuple[int, ...]]:
    """Every subset-closed family of subsets of ``[n]`` (the empty family included)."""
    subs = sorted(range(1 << n), key=lambda s: (s.bit_count(), s))
    out: list[tuple[int, ...]] = []
    chosen: set[int] = set()

    def rec(i: int) -> None:
        if i == len(subs):
            out.append(tuple(sorted(chosen)))
            return
        rec(i + 1)
        s = subs[i]
        if all(s & ~(1 << v) in chosen for v in members(s)):
            chosen.add(s)
            rec(i + 1)
            chosen.discard(s)

    rec(0)
    return out


def _all_families(n: int, with_empty: bool):
    subs = [s for s in range(1 << n) if s or with_empty]
    subs.sort(key=lambda s: (s.bit_count(), s))
    for code in range(1 << len(subs)):
        yield tuple(s for i, s in enumerate(subs) if code >> i & 1)


def _naive_longest(H: Hypergraph, kind: str) -> int:
    """Tiny brute force: longest Berge cycle (or path length) by trying every vertex sequence."""
    edges = [e for e in H.edges if e & (e - 1)]
    best = 0
    for L in range(2, H.n + 1):
        for seq in permutations(range(H.n), L):
            if kind == "cycle" and seq[0] != min(seq):
                continue
            pairs = list(zip(seq, seq[1:]))
            if kind == "cycle":
                pairs.append((seq[-1], seq[0]))
            opts = [[i for i, e in enumerate(edges) if e >> a & 1 and e >> b & 1] for a, b in pairs]
            if any(len(set(pick)) == len(pick) for pick in product(*opts)):
                best = max(best, len(pairs))
                break
    return best


def _hyper_check(theorem: str, H: Hypergraph, k: int) -> bool:
    """True when the theorem's conclusion holds for ``H`` (hypothesis already checked)."""
    if theorem == "thm4":
        return has_berge_path_with_base(H, k)
    if theorem == "thm5":
        return has_berge_cycle_at_least(H, k)
    return has_berge_cycle_at_least(H, k)  # thm6: above the bound forces a long cycle


def _confirm_hyper(theorem: str, H: Hypergraph, k: int) -> bool:
    if theorem == "thm4":
        c = longest_berge_path(H)
        return (c is None or c.length < k - 1) and _naive_longest(H, "path") < k - 1
    c = longest_berge_cycle(H)
    return (c is None or c.length < k) and _naive_longest(H, "cycle") < k


def _hyper_threshold(theorem: str, k: int) -> int:
    return 2 ** (k - 2) + (1 if theorem == "thm4" else 2)


def _verify_hyper_theorem(theorem, n, k, mode, trials, seed, p, override) -> VerifyReport:
    if k is None:
        raise ValueError(f"{theorem} needs k")
    if theorem == "thm4" and k < 2 or theorem in ("thm5", "thm6") and k < 3:
        raise ValueError(f"k={k} is too small for {theorem}")
    if theorem == "thm6" and n < k:
        raise ValueError("thm6 needs n >= k")
    params = {"n": n, "k": k}
    notes = []
    stats: dict = {}
    if mode == "exhaustive":
        if n <= MAX_EXHAUSTIVE_HYPER_N:
            families = _all_families(n, with_empty=(theorem == "thm6"))
        elif n == 5 or override:
            families = iter(downsets(n))
            if theorem == "thm6":
                notes.append("restricted to downsets: an edge-minimal extremal family can be taken subset-closed")
            else:
                notes.append("restricted to downsets: a partial census, not every hypergraph on n vertices")
        else:
            raise EnvelopeError("exhaustive hypergraph sweeps stop at n = 4 (n = 5 over downsets)")
        used_seed = None
    elif mode == "random":
        if n > 16:
            raise EnvelopeError("random hypergraph sampling stops at n = 16")
        used_seed = DEFAULT_SEED if seed is None else seed
        families = _random_families(theorem, n, k, trials, used_seed, p)
        params["p"] = p
    else:
        raise ValueError(f"unknown mode {mode!r}")

    checked = oracle = 0
    bad = None
    if theorem == "thm6":
        bound = Fraction(eg_hypergraph_bound(n, k))
        by_size: dict[int, list] = {}
        for fam in families:
            checked += 1
            by_size.setdefault(len(fam), []).append(fam)
        best = None
        for size in sorted(by_size, reverse=True):
            if size <= bound and best is not None:
                break
            for fam in by_size[size]:
                H = Hypergraph(n, fam)
                oracle += 1
                if not has_berge_cycle_at_least(H, k):
                    best = size if best is None else best
                    if size > bound:
                        bad = H
                        break
                    if mode == "exhaustive":
                        break  # the maximum is attained at this size
            if bad is not None:
                break
        stats["max_edges_without_long_cycle"] = best
        stats["bound"] = int(bound) if bound.denominator == 1 else str(bound)
    else:
        need = _hyper_threshold(theorem, k)
        for fam in families:
            checked += 1
            H = Hypergraph(n, fam)
            if H.min_degree() < need:
                continue
            oracle += 1
            if not _hyper_check(theorem, H, k):
                bad = H
                break
    report = VerifyReport(theorem, params, mode, checked, oracle, seed=used_seed, notes=notes, stats=stats)
    if bad is not None:
        if not _confirm_hyper(theorem, bad, k):
            raise RuntimeError(f"unconfirmed violation: {bad.edge_sets()}")
        report.counterexample = {"n": n, "edges": bad.edge_sets()}
    return report


def _random_families(theorem, n, k, trials, seed, p):
    rng = random.Random(seed)
    subs = [s for s in range(1 << n) if s.bit_count() >= 2]
    need = _hyper_threshold(theorem, k) if theorem in ("thm4", "thm5") else 0
    for _ in range(trials):
        for _attempt in range(1000):
            fam = tuple(s for s in subs if rng.random() < p)
            if not need or Hypergraph(n, fam).min_degree() >= need:
                yield fam
                break


# ------------------------------------------------------------------- entry

def verify_theorem(theorem: str, n: int, k: int | None = None, d: int | None = None,
                   r: int | None = None, mode: str = "exhaustive", trials: int = 1000,
                   seed: int | None = None, jobs: int = 1, p: float = 0.5,
                   override: bool = False) -> VerifyReport:
    """Check one theorem over an exhaustive or seeded-random instance space."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if theorem in GRAPH_THEOREMS:
        return _verify_graph_theorem(theorem, n, k, d, r, mode, trials, seed, jobs, p, override)
    return _verify_hyper_theorem(theorem, n, k, mode, trials, seed, p, override)

