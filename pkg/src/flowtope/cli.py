"""Command-line front end.

Every command builds a JSON-able report; ``--format text`` and ``--format csv``
are renderings of that report.  Exit codes: 0 success, 1 verification
failure, 2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .arrays import _validate_F, all_F, tri_array, verify_encoding_chain
from .flows import FlowError, feasible, feasible_by_cuts, kostant
from .genperm import genperm_lattice_points
from .graph import GraphError, MultiGraph, parse_graph
from .newton import (
    ehrhart, ld_polynomial, verify_corollaries, volume, z_parameters, z_parameters_level,
)
from .reduction import get_strategy, ld_multiset, verify_theorem_A
from .schubert import (
    PermutationError, conjecture_scan, default_jobs, grothendieck, parse_permutation, perm_str,
    schubert, transition, transition_terms,
)
from .snp import snp_check

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Result:
    """A report plus optional table rows and a preferred text rendering."""

    def __init__(self, report: dict, ok: bool = True, text: str | None = None, rows: list[dict] | None = None):
        self.report, self.ok, self.text, self.rows = report, ok, text, rows


def load_graph(arg: str) -> MultiGraph:
    if os.path.exists(arg):
        with open(arg) as fh:
            return parse_graph(fh.read())
    return parse_graph(arg)


def parse_edges(G: MultiGraph, text: str):
    """``"1-2,1-2,2-3"``; repeated pairs take successive copies of that edge."""
    if not text.strip():
        return ()
    used: dict[tuple[int, int], int] = {}
    F = []
    for tok in text.replace(" ", "").split(","):
        try:
            t, h = (int(x) for x in tok.split("-"))
        except ValueError:
            raise InputError(f"bad edge {tok!r}; expected tail-head") from None
        copies = sorted(c for a, b, c in G.edges if (a, b) == (t, h))
        k = used.get((t, h), 0)
        if k >= len(copies):
            raise InputError(f"edge {t}-{h} listed more times than it occurs in the graph")
        F.append((t, h, copies[k]))
        used[t, h] = k + 1
    return _validate_F(G, F)


def parse_netflow(text: str, G: MultiGraph) -> tuple[int, ...]:
    try:
        a = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"netflow must be comma-separated integers, got {text!r}") from None
    if len(a) != G.n + 1:
        raise InputError(f"netflow has {len(a)} entries, the graph has {G.n + 1} vertices")
    return a


def frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def poly_report(p, var: str) -> dict:
    return {"polynomial": p.format(var), **p.to_json()}


# command handlers

def cmd_ld(args) -> Result:
    G = load_graph(args.graph)
    ld = ld_multiset(G, get_strategy(args.strategy))
    rows = ld.to_json()
    text = "\n".join(
        f"{tuple(r['sequence'])}  F={[tuple(e) for e in r['F']]}  codim={r['codim']}"
        + (f"  x{r['multiplicity']}" if r["multiplicity"] != 1 else "")
        for r in rows)
    report = {"graph": G.to_json(), "strategy": args.strategy, "leaves": ld.total(), "sequences": rows}
    return Result(report, text=text, rows=[{**r, "sequence": json.dumps(r["sequence"]), "F": json.dumps(r["F"])} for r in rows])


def cmd_tri(args) -> Result:
    G = load_graph(args.graph)
    F = parse_edges(G, args.F or "")
    A = tri_array(G, F)
    return Result({"graph": G.to_json(), "F": [list(e) for e in F], "array": A.to_json(), "rendered": A.render()},
                  text=A.render())


def cmd_kostant(args) -> Result:
    G = load_graph(args.graph)
    a = parse_netflow(args.netflow, G)
    return Result({"graph": G.to_json(), "netflow": list(a), "count": kostant(G, a)})


def cmd_feasible(args) -> Result:
    G = load_graph(args.graph)
    a = parse_netflow(args.netflow, G)
    ok = feasible(G, a)
    _, S = feasible_by_cuts(G, a)
    report = {"graph": G.to_json(), "netflow": list(a), "feasible": ok}
    if S is not None:
        report["violating_set"] = sorted(S)
    return Result(report)


def cmd_volume(args) -> Result:
    G = load_graph(args.graph)
    return Result({"graph": G.to_json(), "volume": volume(G)})


def cmd_ehrhart(args) -> Result:
    G = load_graph(args.graph)
    coeffs = [frac(c) for c in ehrhart(G)]
    text = " + ".join(f"({c})*t^{k}" if k else f"({c})" for k, c in enumerate(coeffs) if c != "0")
    return Result({"graph": G.to_json(), "coefficients": coeffs}, text=text)


def cmd_newton(args) -> Result:
    G = load_graph(args.graph)
    L = ld_polynomial(G)
    verdict = snp_check(L)
    comps = []
    for d, comp in sorted(L.homogeneous_components().items(), reverse=True):
        k = G.num_edges - d
        comps.append({"k": k, "degree": d, "terms": len(comp), "z": z_parameters_level(G, k).to_json()})
    report = {"graph": G.to_json(), **poly_report(L, "t"), "snp": verdict.snp,
              "components_gp": verdict.components_gp, "components": comps}
    return Result(report, ok=True)


def cmd_genperm(args) -> Result:
    G = load_graph(args.graph)
    if args.k is not None and args.F is not None:
        raise InputError("give at most one of --F and --k")
    try:
        if args.k is not None:
            spec = z_parameters_level(G, args.k)
            what = {"k": args.k}
        else:
            F = parse_edges(G, args.F or "")
            spec = z_parameters(G, F, check_closed_form=False)
            what = {"F": [list(e) for e in F]}
    except FlowError as exc:
        raise InputError(str(exc)) from None
    points = sorted(genperm_lattice_points(spec))
    return Result({"graph": G.to_json(), **what, "spec": spec.to_json(), "lattice_points": [list(p) for p in points]})


def _perm_poly(args, fn, var="x") -> Result:
    perm = parse_permutation(args.perm)
    p = fn(perm)
    return Result({"pi": perm_str(perm), **poly_report(p, var)}, text=p.format(var))


def cmd_schubert(args) -> Result:
    return _perm_poly(args, schubert)


def cmd_grothendieck(args) -> Result:
    return _perm_poly(args, grothendieck)


def cmd_transition(args) -> Result:
    perm = parse_permutation(args.perm)
    p = transition(perm)
    agrees = p == schubert(perm)
    report = {"pi": perm_str(perm), **poly_report(p, "x"),
              "terms": [t.format("x") for t in transition_terms(perm)], "equals_schubert": agrees}
    return Result(report, ok=agrees, text=p.format("x"))


def cmd_verify(args) -> Result:
    G = load_graph(args.graph)
    if args.what == "theorem-a":
        strategies = args.strategies.split(",") if args.strategies else None
        rep = verify_theorem_A(G, strategies)
        return Result({"graph": G.to_json(), **rep.to_json()}, ok=rep.ok)
    if args.what == "encoding":
        Fs = [parse_edges(G, args.F)] if args.F is not None else list(all_F(G))
        checked = 0
        for F in Fs:
            rep = verify_encoding_chain(G, F)
            checked += 1
            if not rep.ok:
                return Result({"graph": G.to_json(), "ok": False, "checked": checked,
                               "counterexample": rep.counterexample}, ok=False)
        return Result({"graph": G.to_json(), "ok": True, "checked": checked, "counterexample": None})
    rep = verify_corollaries(G)
    return Result({"graph": G.to_json(), **rep.to_json()}, ok=rep.ok)


def cmd_scan(args) -> Result:
    jobs = args.jobs or default_jobs()
    if args.what == "conjecture":
        if args.n is None:
            raise InputError("scan conjecture needs --n")
        if not 1 <= args.n <= 8:
            raise InputError(f"--n {args.n} outside the supported range 1..8")
        rep = conjecture_scan(args.n, jobs)
        rows = [r.to_json() for r in rep.reports]
        for r in rows:
            if "counterexample" in r:
                r["counterexample"] = json.dumps(r["counterexample"], sort_keys=True)
        return Result(rep.to_json(), ok=not rep.counterexamples, text=rep.summary(), rows=rows)
    from .scans import multigraphs, scan_graphs, simple_graphs

    if args.max_vertices is None:
        raise InputError("scan graphs needs --max-vertices")
    if not 1 <= args.max_vertices <= 5:
        raise InputError(f"--max-vertices {args.max_vertices} outside the supported range 1..5")
    max_edges = args.max_edges if args.max_edges is not None else 6
    if args.multigraphs:
        graphs = list(multigraphs(args.max_vertices, max_edges))
    else:
        graphs = list(simple_graphs(args.max_vertices, max_edges))
    rows = scan_graphs(graphs, args.csv, jobs)
    failures = [r for r in rows if r["counterexample"]]
    summary = f"{len(failures)} counterexamples / {len(rows)} graphs"
    report = {"graphs": len(rows), "counterexamples": len(failures), "summary": summary,
              "failures": [{"hash": r["hash"], "graph": json.loads(r["graph"]),
                            "counterexample": json.loads(r["counterexample"])} for r in failures]}
    return Result(report, ok=not failures, text=summary, rows=rows)


# rendering

def render(result: Result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.report, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if result.rows is not None:
            fields = sorted({k for r in result.rows for k in r})
            w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
            w.writeheader()
            for r in result.rows:
                w.writerow(r)
        else:
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["key", "value"])
            for k in sorted(result.report):
                v = result.report[k]
                w.writerow([k, v if isinstance(v, (str, int)) else json.dumps(v, sort_keys=True)])
        return buf.getvalue()
    if result.text is not None:
        return result.text + "\n"
    lines = []
    for k in sorted(result.report):
        v = result.report[k]
        lines.append(f"{k}: {v if isinstance(v, (str, int)) else json.dumps(v, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--output", "-o", help="write the report to this file")
    common.add_argument("--jobs", "-j", type=int, help="worker processes (default $FLOWTOPE_JOBS or CPU count)")

    p = argparse.ArgumentParser(prog="flowtope", description="Flow polytopes, left-degree sequences and pipe dreams.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.add_argument("graph", help="graph file or inline edges such as 0-1,1-2")
        sp.set_defaults(func=fn)
        return sp

    sp = graph_cmd("ld", cmd_ld, "left-degree sequences with F-labels")
    sp.add_argument("--strategy", default="special", help="special, lex, rightmost or random:SEED")
    sp = graph_cmd("tri", cmd_tri, "triangular constraint array")
    sp.add_argument("--F", help="edges of F, e.g. 1-2,2-3")
    sp = graph_cmd("kostant", cmd_kostant, "number of integer flows")
    sp.add_argument("netflow", help="comma-separated netflow, one entry per vertex")
    sp = graph_cmd("feasible", cmd_feasible, "whether a flow exists")
    sp.add_argument("netflow", help="comma-separated netflow, one entry per vertex")
    graph_cmd("volume", cmd_volume, "normalized volume of the flow polytope")
    graph_cmd("ehrhart", cmd_ehrhart, "Ehrhart polynomial, lowest degree first")
    graph_cmd("newton", cmd_newton, "left-degree polynomial and its Newton polytope data")
    sp = graph_cmd("genperm", cmd_genperm, "generalized permutahedron parameters")
    sp.add_argument("--F", help="edges of F, e.g. 1-2,2-3")
    sp.add_argument("--k", type=int, help="homogeneous level")

    for name, fn in (("schubert", cmd_schubert), ("grothendieck", cmd_grothendieck), ("transition", cmd_transition)):
        sp = sub.add_parser(name, help=f"{name} polynomial of a permutation", parents=[common])
        sp.add_argument("perm", help="one-line notation, e.g. 14523")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("verify", help="run a verifier on a graph", parents=[common])
    sp.add_argument("what", choices=["theorem-a", "encoding", "corollaries"])
    sp.add_argument("graph")
    sp.add_argument("--F", help="restrict the encoding check to one F")
    sp.add_argument("--strategies", help="comma-separated strategies for theorem-a")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="exhaustive scans", parents=[common])
    sp.add_argument("what", choices=["conjecture", "graphs"])
    sp.add_argument("--n", type=int, help="permutation size for the conjecture scan")
    sp.add_argument("--max-vertices", type=int)
    sp.add_argument("--max-edges", type=int)
    sp.add_argument("--multigraphs", action="store_true", help="allow parallel edges")
    sp.add_argument("--csv", help="per-graph verdict file; existing rows are skipped by hash")
    sp.set_defaults(func=cmd_scan)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.jobs is not None and args.jobs < 1:
        print("error: --jobs must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        result = args.func(args)
    except (InputError, GraphError, PermutationError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out = render(result, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK if result.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
