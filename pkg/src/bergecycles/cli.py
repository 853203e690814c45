"""``berge`` command line.

Exit codes: 0 success, 2 bad input or unmet precondition, 3 negative answer
(no such cycle, invalid certificate, counterexample found, ...).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from math import comb

from . import CONTRACT_REVISION, __version__
from .bounds import dense_degree_rhs, eg_graph_bound, eg_hypergraph_bound, erdos_bound, erdos_h, clique_bound
from .constructions import (
    FNK_SHAPES,
    cycle_sharpness,
    cycle_sharpness_obstruction,
    dirac_sharpness,
    eg_sharpness,
    eg_sharpness_obstruction,
    fnk,
    path_sharpness,
    path_sharpness_obstruction,
)
from .graphs import ClassWitness, NotApplicable, SwapPlan, apply_swap, classify_dense_nonhamiltonian, is_hamiltonian
from .hypercore import (
    FormatError,
    certificate_from_json,
    certificate_to_json,
    check_certificate,
    parse_graph,
    parse_hypergraph,
    serialize_hypergraph,
    shadow2,
)
from .oracle import best_berge_path, hamiltonian_berge_cycle, longest_berge_cycle, longest_berge_path
from .pipeline import TheoremViolation, constructive_hamiltonian_berge_cycle
from .verify import DEFAULT_SEED, THEOREMS, verify_theorem

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE = 0, 2, 3


class Negative(Exception):
    """The requested decision came out negative."""


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ------------------------------------------------------------------ gen

def _cmd_gen(args) -> int:
    fam = args.family
    if fam != "dirac-sharp" and args.k is None:
        raise ValueError(f"{fam} needs --k")
    params: dict = {"n": args.n}
    obstruction = None
    if fam == "dirac-sharp":
        params["variant"] = args.variant
        H, cert = dirac_sharpness(args.n, args.variant)
        obstruction = cert.to_json()
        claims = {"min_degree": H.min_degree()}
    elif fam == "path-sharp":
        params["k"] = args.k
        H = path_sharpness(args.n, args.k)
        obstruction = path_sharpness_obstruction(args.n, args.k).to_json()
        claims = {"min_degree": H.min_degree(), "max_path_base_vertices": args.k - 1}
    elif fam == "cycle-sharp":
        params.update(k=args.k, variant=args.variant)
        H = cycle_sharpness(args.n, args.k, args.variant)
        obstruction = cycle_sharpness_obstruction(args.n, args.k, args.variant).to_json()
        claims = {"min_degree": H.min_degree(), "max_cycle_length": args.k - 1}
    elif fam == "eg-sharp":
        params["k"] = args.k
        H = eg_sharpness(args.n, args.k)
        obstruction = eg_sharpness_obstruction(args.n, args.k).to_json()
        claims = {"edges": len(H), "bound": _jsonable(eg_hypergraph_bound(args.n, args.k)),
                  "max_cycle_length": args.k - 1}
    else:  # fnk
        params.update(k=args.k, shape=args.shape)
        G = fnk(args.n, args.k, args.shape)
        H = G.to_hypergraph()
        claims = {"edges": G.num_edges(), "circumference": args.k - 1}
    _write(args.output, serialize_hypergraph(H))
    if args.output not in (None, "-"):
        side = {"family": fam, "params": params, "claims": claims, "obstruction": obstruction}
        _write(args.output + ".json", _dump(side))
    return EXIT_OK


def _jsonable(x):
    return x if isinstance(x, int) else str(x)


# ------------------------------------------------------------- inspect

def _cmd_shadow(args) -> int:
    H = parse_hypergraph(_read(args.file))
    _write(args.output, serialize_hypergraph(shadow2(H)))
    return EXIT_OK


def _cmd_oracle(args) -> int:
    H = parse_hypergraph(_read(args.file))
    what = args.query
    if what == "cycle":
        c = longest_berge_cycle(H, allow_large=args.allow_large)
        length = c.length if c else 0
        print(f"longest Berge cycle length {length}")
        if args.at_least is not None and length < args.at_least:
            raise Negative(f"no Berge cycle of length >= {args.at_least}")
    elif what == "path":
        c = longest_berge_path(H, allow_large=args.allow_large)
        length = c.length if c else 0
        print(f"longest Berge path length {length} ({length + 1 if c else min(H.n, 1)} base vertices)")
        if args.at_least is not None and length < args.at_least:
            raise Negative(f"no Berge path of length >= {args.at_least}")
    elif what == "best-path":
        c = best_berge_path(H, allow_large=args.allow_large)
        if c is None:
            raise Negative("no Berge path with an edge")
        print(f"best Berge path length {c.length}, total edge size {c.total_size}")
    else:
        c = hamiltonian_berge_cycle(H, allow_large=args.allow_large)
        if c is None:
            raise Negative("no hamiltonian Berge cycle")
        print(f"hamiltonian Berge cycle found on {H.n} vertices")
    if args.json and c is not None:
        _write(args.cert_out, _dump(certificate_to_json(c)))
    return EXIT_OK


# -------------------------------------------------------------- pipeline

def _cmd_pipeline(args) -> int:
    H = parse_hypergraph(_read(args.file))
    rng = random.Random(args.seed) if args.randomize else None
    trace = constructive_hamiltonian_berge_cycle(H, allow_small=args.allow_small, rng=rng)
    if args.trace_out:
        _write(args.trace_out, _dump(trace.to_json()))
    if args.json:
        sys.stdout.write(_dump(certificate_to_json(trace.lifted_cycle)))
    else:
        print(f"branch {trace.branch}; hamiltonian Berge cycle {list(trace.lifted_cycle.vertices)}")
    return EXIT_OK


def _cmd_classify(args) -> int:
    G = parse_graph(_read(args.file))
    res = classify_dense_nonhamiltonian(G, args.k, all_matches=args.all)
    if isinstance(res, NotApplicable):
        if res.reason in ("hamiltonian", "unclassified"):
            raise Negative(res.reason)
        raise ValueError(f"precondition failed: {res.reason}")
    out = [w.to_json() for w in res] if isinstance(res, list) else res.to_json()
    sys.stdout.write(_dump(out))
    return EXIT_OK


def _cmd_swap(args) -> int:
    G = parse_graph(_read(args.graph))
    w = ClassWitness.from_json(json.loads(_read(args.witness)))
    raw = json.loads(_read(args.plan))
    plan = SwapPlan.of(raw.get("removed", []), raw.get("added", []))
    out, guarantee = apply_swap(G, w, plan)
    ham = is_hamiltonian(out, allow_large=True)
    if args.output:
        _write(args.output, serialize_hypergraph(out))
    sys.stdout.write(_dump({"guarantee": guarantee, "hamiltonian": ham}))
    return EXIT_OK


def _cmd_verify(args) -> int:
    rep = verify_theorem(args.theorem, args.n, k=args.k, d=args.d, r=args.r, mode=args.mode,
                         trials=args.trials, seed=args.seed, jobs=args.jobs, p=args.p,
                         override=args.override)
    sys.stdout.write(_dump(rep.to_json()))
    if not rep.ok:
        raise Negative("counterexample found")
    return EXIT_OK


def _cmd_bounds(args) -> int:
    n, d = args.n, args.d
    out: dict = {}
    if d is not None:
        h, e = erdos_h(n, d), erdos_bound(n, d)
        rhs = dense_degree_rhs(n, d)
        out.update({"h": h, "e": e, "rhs": rhs})
        if not args.json:
            print(f"h({n},{d})={h}")
            print(f"e({n},{d})={e}")
            if args.thm2_rhs:
                print(f"rhs({n},{d})={2 ** d}-{comb(d + 1, 2)}+{e}={rhs}")
            else:
                print(f"rhs({n},{d})={rhs}")
    if args.k is not None:
        out["eg_hypergraph"] = _jsonable(eg_hypergraph_bound(n, args.k))
        out["eg_graph"] = _jsonable(eg_graph_bound(n, args.k))
        if not args.json:
            print(f"hypergraph-edges({n},{args.k})={out['eg_hypergraph']}")
            print(f"graph-edges({n},{args.k})={out['eg_graph']}")
        if args.r is not None:
            out["cliques"] = _jsonable(clique_bound(n, args.k, args.r))
            if not args.json:
                print(f"cliques({n},{args.k},{args.r})={out['cliques']}")
    if not out:
        raise ValueError("give --d and/or --k")
    if args.json:
        sys.stdout.write(_dump(out))
    return EXIT_OK


def _cmd_check_cert(args) -> int:
    H = parse_hypergraph(_read(args.file))
    obj = json.loads(_read(args.cert))
    if isinstance(obj, dict) and "certificate" in obj:
        obj = obj["certificate"]
    cert = certificate_from_json(obj)
    problem = check_certificate(H, cert)
    if problem:
        raise Negative(f"invalid certificate: {problem}")
    print(f"valid Berge {cert.kind} of length {cert.length}")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="berge", description="Berge paths and cycles in hypergraphs.")
    ap.add_argument("--version", action="version",
                    version=f"berge {__version__} (contract revision {CONTRACT_REVISION})")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate an extremal family member")
    g.add_argument("family", choices=["dirac-sharp", "path-sharp", "cycle-sharp", "eg-sharp", "fnk"])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int)
    g.add_argument("--variant", type=int, default=1)
    g.add_argument("--shape", choices=FNK_SHAPES, default="path")
    g.add_argument("-o", "--output")
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("shadow", help="write the 2-shadow graph")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=_cmd_shadow)

    o = sub.add_parser("oracle", help="exact Berge path and cycle search")
    o.add_argument("query", choices=["cycle", "path", "best-path", "ham"])
    o.add_argument("file")
    o.add_argument("--at-least", type=int)
    o.add_argument("--json", action="store_true", help="also emit the certificate as JSON")
    o.add_argument("--cert-out", help="where --json writes (default stdout)")
    o.add_argument("--allow-large", action="store_true")
    o.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("pipeline", help="constructive hamiltonian Berge cycle for dense hypergraphs")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="print the certificate JSON")
    p.add_argument("--trace-out", help="write the full trace JSON here")
    p.add_argument("--allow-small", action="store_true", help="accept n = 13, 14")
    p.add_argument("--randomize", action="store_true", help="seeded random choices in the repair step")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=_cmd_pipeline)

    c = sub.add_parser("classify", help="place a dense nonhamiltonian graph into G1..G5")
    c.add_argument("file")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--all", action="store_true")
    c.set_defaults(func=_cmd_classify)

    w = sub.add_parser("swap", help="apply a repair plan to a classified graph")
    w.add_argument("graph")
    w.add_argument("witness")
    w.add_argument("plan")
    w.add_argument("-o", "--output")
    w.set_defaults(func=_cmd_swap)

    v = sub.add_parser("verify", help="check a theorem over an instance space")
    v.add_argument("theorem", choices=THEOREMS)
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--r", type=int)
    v.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--p", type=float, default=0.5)
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--override", action="store_true", help="allow sweeps outside the envelope")
    v.set_defaults(func=_cmd_verify)

    b = sub.add_parser("bounds", help="evaluate the closed-form bounds")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--d", type=int)
    b.add_argument("--k", type=int)
    b.add_argument("--r", type=int)
    b.add_argument("--thm2-rhs", action="store_true", help="show the degree-sum arithmetic")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_cmd_bounds)

    k = sub.add_parser("check-cert", help="validate a Berge path/cycle certificate")
    k.add_argument("file")
    k.add_argument("cert")
    k.set_defaults(func=_cmd_check_cert)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Negative as exc:
        print(f"berge: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except TheoremViolation as exc:
        print(f"berge: internal check failed: {exc}", file=sys.stderr)
        return 1
    except (FormatError, ValueError, KeyError, TypeError, OSError) as exc:
        print(f"berge: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
