"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every comparison is exact; runtime limits are asserted alongside the result.
"""

import random
import time
from itertools import combinations

import pytest

from bergecycles import certificate_from_json, certificate_to_json, check_certificate, is_downset
from bergecycles.bounds import (
    dense_degree_rhs,
    eg_graph_bound,
    eg_hypergraph_bound,
    erdos_bound,
    erdos_h,
    clique_bound,
)
from bergecycles.cli import run
from bergecycles.constructions import (
    cycle_sharpness,
    dirac_sharpness,
    eg_sharpness,
    fnk,
    random_extremal_hypergraph,
)
from bergecycles.graphs import (
    CLASS_NAMES,
    apply_swap,
    check_witness,
    circumference,
    count_cliques,
    exceptional_g3_instance,
    is_hamiltonian,
    random_class_member,
    random_swap_plan,
)
from bergecycles.hypercore import Hypergraph, mask_of
from bergecycles.oracle import hamiltonian_berge_cycle, has_berge_cycle_at_least, longest_berge_cycle
from bergecycles.pipeline import (
    best_path_degree_certificate,
    check_degree_certificate,
    constructive_hamiltonian_berge_cycle,
    dense_threshold,
)
from bergecycles.verify import verify_theorem


@pytest.fixture
def report(capsys):
    def emit(num, ok, detail, elapsed, limit):
        ok = bool(ok) and elapsed < limit
        with capsys.disabled():
            print(f"\nACCEPTANCE {num:>2} {'PASS' if ok else 'FAIL'}: {detail} "
                  f"({elapsed:.4f}s, limit {limit}s)")
        assert ok, f"criterion {num}: {detail}"
    return emit


def test_01_erdos_arithmetic(report, capsys):
    t = time.perf_counter()
    values = (erdos_h(16, 6), erdos_bound(16, 6), dense_degree_rhs(16, 6))
    elapsed = time.perf_counter() - t
    capsys.readouterr()
    code = run(["bounds", "--n", "16", "--d", "6", "--thm2-rhs"])
    lines = capsys.readouterr().out.split()
    ok = (values == (81, 85, 128) and code == 0
          and lines == ["h(16,6)=81", "e(16,6)=85", "rhs(16,6)=64-21+85=128"])
    report(1, ok, f"h, e, rhs = {values}; cli {lines}", elapsed, 0.001)


def test_02_eg_sharpness(report):
    t = time.perf_counter()
    rows, ok = [], True
    for n, k in [(3, 3), (5, 3), (5, 4), (7, 4), (7, 5)]:
        H = eg_sharpness(n, k)
        bound = eg_hypergraph_bound(n, k)
        good = len(H) == bound and is_downset(H) and not has_berge_cycle_at_least(H, k)
        ok &= good
        rows.append(f"({n},{k}) {len(H)}={bound}")
    report(2, ok, "; ".join(rows), time.perf_counter() - t, 10)


def test_03_eg_exhaustive_downsets(report):
    t = time.perf_counter()
    rep = verify_theorem("thm6", 5, k=4)
    best = rep.stats["max_edges_without_long_cycle"]
    ok = rep.ok and best == 14 == rep.stats["bound"] and rep.instances_checked == 7581
    report(3, ok, f"{rep.instances_checked} downsets, max edges without a long cycle {best}",
           time.perf_counter() - t, 600)


def test_04_small_hypergraphs_exhaustive(report):
    t = time.perf_counter()
    cyc = verify_theorem("thm5", 4, k=3)
    path = verify_theorem("thm4", 4, k=3)
    ok = (cyc.ok and path.ok and cyc.instances_checked == path.instances_checked == 2 ** 15
          and cyc.oracle_checked > 0 and path.oracle_checked > 0)
    report(4, ok, f"scanned {cyc.instances_checked}; delta>=4: {cyc.oracle_checked} with a 3-cycle, "
                  f"delta>=3: {path.oracle_checked} with a 3-vertex path", time.perf_counter() - t, 300)


def test_05_cycle_sharpness(report):
    t = time.perf_counter()
    H = cycle_sharpness(7, 3, 2)
    c = longest_berge_cycle(H)
    length = 0 if c is None else c.length
    ok = H.min_degree() == 3 == 2 ** (3 - 2) + 1 and length == 2
    report(5, ok, f"delta {H.min_degree()}, circumference {length}", time.perf_counter() - t, 1)


def test_06_lemma_classes_exhaustive(report):
    t = time.perf_counter()
    rep = verify_theorem("lemma5G", 7)
    total = sum(rep.stats.values())
    ok = rep.ok and rep.instances_checked == 2 ** 21 and total == rep.oracle_checked > 0
    report(6, ok, f"{rep.instances_checked} graphs, {rep.oracle_checked} nonhamiltonian with delta>=3, "
                  f"classified {rep.stats}", time.perf_counter() - t, 1800)


def test_07_erdos_exhaustive(report):
    t = time.perf_counter()
    rep = verify_theorem("erdosBound", 7)
    ok = rep.ok and rep.instances_checked == 2 ** 21 and rep.params["d"] == [1, 2, 3]
    report(7, ok, f"{rep.instances_checked} graphs, d in {rep.params['d']}, attained {rep.stats}",
           time.perf_counter() - t, 1800)


def test_08_repair_lemma(report):
    t = time.perf_counter()
    rng = random.Random(20240229)
    counts = {}
    ok = True
    for name in CLASS_NAMES:
        good = 0
        for _ in range(500):
            G, w = random_class_member(name, 6, rng)
            plan = random_swap_plan(G, w, rng)
            out, guarantee = apply_swap(G, w, plan)
            good += guarantee == "hamiltonian" and is_hamiltonian(out) and not check_witness(G, w)
        counts[name] = good
        ok &= good == 500
    G, w, plan = exceptional_g3_instance(6)
    out, guarantee = apply_swap(G, w, plan)
    ok &= guarantee == "exceptional" and not is_hamiltonian(out)
    report(8, ok, f"hamiltonian repairs per class {counts}; exceptional instance -> {guarantee}, "
                  f"repaired graph hamiltonian: {is_hamiltonian(out)}", time.perf_counter() - t, 300)


def test_09_dense_pipeline(report):
    t = time.perf_counter()
    rng = random.Random(15)
    ok = True
    summary = {}
    for n in (15, 16, 17):
        pool = [mask_of(c) for r in range(2, n + 1) for c in combinations(range(n), r)]
        need = dense_threshold(n)
        good = 0
        branches = {}
        for _ in range(100):
            while True:
                H = Hypergraph(n, tuple(e for e in pool if rng.random() < 0.05))
                if H.min_degree() >= need:
                    break
            tr = constructive_hamiltonian_berge_cycle(H)
            cert = certificate_from_json(certificate_to_json(tr.lifted_cycle))
            good += (check_certificate(H, cert) is None and sorted(cert.vertices) == list(range(n))
                     and tr.G.min_degree() >= (n - 1) // 2)
            branches[tr.branch] = branches.get(tr.branch, 0) + 1
        summary[n] = (good, branches)
        ok &= good == 100
    report(9, ok, f"valid hamiltonian certificates {summary}", time.perf_counter() - t, 600)


def test_10_dirac_sharpness(report):
    t = time.perf_counter()
    H15, c15 = dirac_sharpness(15, 1)
    H16, c16 = dirac_sharpness(16, 2)
    H7, _ = dirac_sharpness(7, 1)
    degs = (H15.min_degree(), H16.min_degree())
    ok = degs == (128, 129) and c15.verify(H15) and c16.verify(H16) and hamiltonian_berge_cycle(H7) is None
    report(10, ok, f"delta {degs}, obstructions {c15.kind}/{c16.kind} verify; n=7 analogue has no "
                   "hamiltonian Berge cycle", time.perf_counter() - t, 60)


def test_11_fnk_equality(report):
    t = time.perf_counter()
    rows, ok = [], True
    for n, k in [(5, 4), (7, 4)]:
        G = fnk(n, k)
        vals = (G.num_edges(), count_cliques(G, 2), count_cliques(G, 3), circumference(G))
        want = (eg_graph_bound(n, k), clique_bound(n, k, 2), clique_bound(n, k, 3), k - 1)
        ok &= vals == want
        rows.append(f"fnk({n},{k}) {vals}={want}")
    report(11, ok, "; ".join(rows), time.perf_counter() - t, 1)


def test_12_degree_certificates(report):
    t = time.perf_counter()
    rng = random.Random(4)
    failures = 0
    equality = 0
    for i in range(1000):
        k = 3 + i % 3
        H = random_extremal_hypergraph(k, 10, rng)
        c = best_path_degree_certificate(H, k)
        dom = {f for f in H.incident(c.v1) if f != c.last_edge}
        good = (c.varphi is not None and len(set(c.varphi.values())) == len(c.varphi)
                and set(c.varphi) == dom and not check_degree_certificate(H, c))
        if H.degree(c.v1) == 2 ** (k - 2) + 1:
            equality += 1
            good &= c.last_edge is not None and bool(c.last_edge >> c.v1 & 1)
        failures += not good
    report(12, failures == 0, f"1000 certificates, {failures} failures, {equality} at degree equality",
           time.perf_counter() - t, 600)
