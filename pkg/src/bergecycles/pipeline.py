"""Constructive procedures built from the reduction and the graph tools.

``constructive_hamiltonian_berge_cycle`` turns a hypergraph above the dense
degree threshold into an explicit hamiltonian Berge cycle.
``best_path_degree_certificate`` explains, edge by edge, why the first vertex
of a best Berge path has small degree when no long Berge cycle exists.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    ClassWitness,
    NotApplicable,
    SwapPlan,
    apply_swap,
    classify_dense_nonhamiltonian,
    hamiltonian_cycle,
    is_exceptional,
)
from .hypercore import (
    BergeCertificate,
    Graph,
    Hypergraph,
    certificate_to_json,
    check_certificate,
    edge_key,
    mask_of,
    members,
)
from .oracle import best_berge_path
from .reduction import MatchingMap, extract_berge_subgraph, lift_cycle, max_matching_prefer2


class TheoremViolation(AssertionError):
    """A proven property failed to hold: this signals a bug, never bad input."""


def dense_threshold(n: int) -> int:
    """Minimum degree that forces a hamiltonian Berge cycle for ``n >= 15``."""
    if n % 2:
        return 2 ** ((n - 1) // 2) + 1
    return 2 ** (n // 2 - 1) + 2


@dataclass
class PipelineTrace:
    matching: MatchingMap
    G: Graph
    branch: str  # "G-hamiltonian" or "classified-repair"
    witness: ClassWitness | None
    plan: SwapPlan | None
    lifted_cycle: BergeCertificate

    def to_json(self) -> dict:
        return {
            "branch": self.branch,
            "matching": self.matching.to_json(),
            "G": [list(e) for e in self.G.edges()],
            "witness": self.witness.to_json() if self.witness else None,
            "plan": self.plan.to_json() if self.plan else None,
            "certificate": certificate_to_json(self.lifted_cycle),
        }


# ------------------------------------------------------------------ repair

def _fits(name: str, w: ClassWitness, p: tuple[int, int]) -> bool:
    V1, V2 = set(w.V1), set(w.V2)
    a, b = p
    if name == "G1":
        return (a in V1) != (b in V1)
    if name in ("G2", "G3"):
        A, B = V1 - {w.x0}, V2 - {w.x0}
        return (a in A and b in B) or (a in B and b in A)
    return a in V2 and b in V2  # G4, G5


def _candidates(phi: MatchingMap, G: Graph, w: ClassWitness):
    """Every (hyperedge, new pair) move: the pair lies in a matched hyperedge and is not in G."""
    out = []
    for m in sorted(phi.phi, key=edge_key):
        for p in combinations(members(m), 2):
            if not G.has_edge(*p) and _fits(w.class_name, w, p):
                out.append((m, p))
    return out


def repair_moves(H: Hypergraph, phi: MatchingMap, G: Graph, w: ClassWitness,
                 rng: random.Random | None = None) -> tuple[SwapPlan, dict[int, tuple[int, int]]]:
    """A swap plan together with the hyperedge reassignment that realizes it."""
    cands = _candidates(phi, G, w)
    if rng is not None:
        rng.shuffle(cands)
    if w.class_name in ("G2", "G3", "G4"):
        for m, p in cands:
            plan = SwapPlan.of([phi.phi[m]], [p])
            if not is_exceptional(G, w, plan):
                return plan, {m: p}
    else:
        for i, (m1, p1) in enumerate(cands):
            for m2, p2 in cands[i + 1:]:
                if m1 == m2 or p1 == p2:
                    continue
                if w.class_name == "G1" and set(p1) & set(p2):
                    continue
                return SwapPlan.of([phi.phi[m1], phi.phi[m2]], [p1, p2]), {m1: p1, m2: p2}
    raise TheoremViolation(f"no qualifying hyperedge for a {w.class_name} repair")


def repair_plan_for(H: Hypergraph, phi: MatchingMap, G: Graph, w: ClassWitness,
                    rng: random.Random | None = None) -> SwapPlan:
    return repair_moves(H, phi, G, w, rng)[0]


# ------------------------------------------------------------------ pipeline

def constructive_hamiltonian_berge_cycle(H: Hypergraph, allow_small: bool = False,
                                         rng: random.Random | None = None) -> PipelineTrace:
    """Find a hamiltonian Berge cycle of a hypergraph above the dense threshold.

    ``allow_small`` lowers the vertex floor from 15 to 13 for experiments.
    """
    n = H.n
    floor = 13 if allow_small else 15
    if n < floor:
        raise ValueError(f"need n >= {floor}, got n={n}")
    need = dense_threshold(n)
    if H.min_degree() < need:
        raise ValueError(f"minimum degree {H.min_degree()} is below the threshold {need}")
    phi = max_matching_prefer2(H)
    G = extract_berge_subgraph(H, phi)
    k = (n - 1) // 2
    if G.min_degree() < k:
        raise TheoremViolation(f"Berge graph has minimum degree {G.min_degree()} < {k}")

    cyc = hamiltonian_cycle(G)
    witness = plan = None
    final = phi
    if cyc is not None:
        branch = "G-hamiltonian"
    else:
        branch = "classified-repair"
        witness = classify_dense_nonhamiltonian(G, k)
        if isinstance(witness, NotApplicable):
            raise TheoremViolation(f"nonhamiltonian Berge graph not classified: {witness.reason}")
        plan, moves = repair_moves(H, phi, G, witness, rng)
        repaired, guarantee = apply_swap(G, witness, plan)
        if guarantee != "hamiltonian":
            raise TheoremViolation("repair landed in the exceptional configuration")
        cyc = hamiltonian_cycle(repaired)
        if cyc is None:
            raise TheoremViolation("repaired Berge graph is not hamiltonian")
        final = MatchingMap({**phi.phi, **moves})
    cert = lift_cycle(final.inverse(), cyc)
    problem = check_certificate(H, cert)
    if problem or cert.length != n:
        raise TheoremViolation(f"lifted cycle rejected: {problem or 'wrong length'}")
    return PipelineTrace(phi, G, branch, witness, plan, cert)


# ------------------------------------------------------- degree certificate

@dataclass
class DegreeCertificate:
    """Either an injection ``varphi`` or, when a long cycle exists, that cycle.

    ``varphi`` maps the hyperedges through ``v1`` (except ``e_{k-1}``) into
    subsets of ``W`` containing ``v1``; all values are bitmasks.
    """

    k: int
    path: BergeCertificate
    W: tuple[int, ...]
    varphi: dict[int, int] | None
    long_cycle: BergeCertificate | None = None

    @property
    def v1(self) -> int:
        return self.path.vertices[0]

    @property
    def last_edge(self) -> int | None:
        """``e_{k-1}`` when the path has that many edges."""
        k = self.k
        return self.path.edges[k - 2] if self.path.length >= k - 1 else None

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "path": certificate_to_json(self.path),
            "W": list(self.W),
            "varphi": None if self.varphi is None else [
                {"edge": members(e), "image": members(img)}
                for e, img in sorted(self.varphi.items(), key=lambda kv: edge_key(kv[0]))],
            "long_cycle": certificate_to_json(self.long_cycle) if self.long_cycle else None,
        }


def _varphi(H: Hypergraph, k: int, v: tuple[int, ...], e: tuple[int, ...], W: int):
    """Build the injection, or return a long Berge cycle that blocks it."""
    v1 = v[0]
    p = len(v)
    P1 = set(e[:k - 1])
    last = e[k - 2] if len(e) >= k - 1 else None
    index = {m: i + 1 for i, m in enumerate(e)}  # 1-based path position
    H1 = H.incident(v1)
    far = {v[i]: i + 1 for i in range(k - 1, p)}  # v_k .. v_p
    for f in H1:
        if f in P1:
            continue
        hits = [far[u] for u in members(f) if u in far]
        if hits:
            i = min(hits)
            return None, BergeCertificate("cycle", v[:i], tuple(e[:i - 1]) + (f,))
        if f & ~W:
            raise TheoremViolation(f"edge {members(f)} extends the best path")
    phi = {}
    for f in H1:
        if f == last:
            continue
        if f & ~W == 0:
            phi[f] = f
            continue
        i = index.get(f)
        if i is None or i > k - 2:
            raise TheoremViolation(f"edge {members(f)} leaves W but is not an early path edge")
        if i >= 3:
            img = mask_of((v1, v[i - 1], v[i]))
        elif i == 2:
            img = mask_of(v[:3])
            if img in H:
                if e[0] != img:
                    raise TheoremViolation("triangle edge present but not the first path edge")
                img = mask_of((v1, v[2]))
        else:
            img = mask_of(v[:2])
        if img in H:
            raise TheoremViolation(f"image {members(img)} of a long edge is itself an edge")
        phi[f] = img
    return phi, None


def best_path_degree_certificate(H: Hypergraph, k: int, enforce_degree: bool = True) -> DegreeCertificate:
    """Certificate for the first vertex of a best Berge path.

    With ``enforce_degree=False`` the minimum-degree precondition is skipped;
    the construction and all checks still run.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    need = 2 ** (k - 2) + 1
    if H.n == 0 or (enforce_degree and H.min_degree() < need):
        raise ValueError(f"minimum degree must be at least {need}")
    P = best_berge_path(H)
    if P is None or len(P.vertices) < k - 1:
        raise TheoremViolation("best path has fewer than k-1 base vertices")
    W = mask_of(P.vertices[:k - 1])
    phi, cyc = _varphi(H, k, P.vertices, P.edges, W)
    cert = DegreeCertificate(k, P, tuple(P.vertices[:k - 1]), phi, cyc)
    problems = check_degree_certificate(H, cert)
    if problems:
        raise TheoremViolation("; ".join(problems))
    return cert


def check_degree_certificate(H: Hypergraph, c: DegreeCertificate) -> list[str]:
    """Re-check every stated property of a degree certificate."""
    bad = []
    if check_certificate(H, c.path):
        bad.append("path is not a Berge path of H")
    if c.long_cycle is not None:
        if check_certificate(H, c.long_cycle) or c.long_cycle.length < c.k:
            bad.append("long-cycle witness is invalid")
        return bad
    if c.varphi is None:
        return bad + ["neither an injection nor a cycle"]
    v1 = c.v1
    W = mask_of(c.W)
    last = c.last_edge
    dom = {f for f in H.incident(v1) if f != last}
    if set(c.varphi) != dom:
        bad.append("domain differs from the edges through v1 other than e_{k-1}")
    imgs = list(c.varphi.values())
    if len(set(imgs)) != len(imgs):
        bad.append("varphi is not injective")
    for f, img in c.varphi.items():
        if not (img >> v1 & 1) or img & ~W:
            bad.append(f"image {members(img)} is not a subset of W through v1")
        if f & ~W == 0 and img != f:
            bad.append(f"edge {members(f)} inside W is not fixed")
        if f & ~W and img in H:
            bad.append(f"image {members(img)} is an edge of H")
    if len(dom) > 2 ** (c.k - 2):
        bad.append("domain is larger than the number of subsets of W through v1")
    deg = H.degree(v1)
    if deg == 2 ** (c.k - 2) + 1 and not (last is not None and last >> v1 & 1):
        bad.append("degree equality without v1 in e_{k-1}")
    return bad
