"""Command-line front end.

Every subcommand prints one JSON report on stdout::

    {"command", "version", "input", "params", "verdict", "certificate",
     "result", "budget", "timing"}

``input`` echoes the graph (edge list, graph6 when simple, sha256 digest of
the edge list). ``certificate`` is either a replayable object with a
``"type"`` field and its own ``"graph"`` edge list, or
``{"type": "none", "reason": ...}``. ``verify FILE`` replays every
certificate found in a saved report.

Exit codes: 0 completed, 1 a replayed certificate failed, 2 usage or input
error, 3 budget exceeded. Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .d4search import D4Witness, find_double_linked_d4, verify_d4_witness
from .embedding import EmbeddingSpec, edge_pair_count, random_embedding
from .errors import BudgetExceeded, GraphFormatError
from .families import closure, descendants
from .graphcore import (NAMES_HELP, Cycle, Graph, canonical_form, catalog, complement, cone,
                        count_cycles, degree_three_vertices, delta_y, parse_edge_list,
                        parse_graph6, to_graph6, triangles, write_edge_list, y_delta)
from .minors import (K5, K33, MinorWitness, classify_ik, complement_il_check,
                     complete_graph, find_any_minor, has_minor, is_il, is_n_apex, is_planar,
                     mader_guarantees_clique_minor, mader_threshold, verify_minor_witness)
from .z2linkage import (LinklessWitness, Obstruction, decide_z2_il, verify_linkless_certificate,
                        verify_obstruction)

CACHE_ENV = "ILGRAPHS_CACHE"
EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

GRAPH_COMMANDS = ("info", "z2il", "il", "planar", "apex", "cone", "complement", "moves",
                  "closure", "d4", "mader")


class UsageError(Exception):
    pass


# -- graph input and echo --------------------------------------------------------

def load_graph(args) -> Graph:
    given = [x for x in (args.graph6, args.edge_list, args.catalog) if x is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --graph6, --edge-list, --catalog")
    try:
        if args.graph6 is not None:
            return parse_graph6(args.graph6)
        if args.edge_list is not None:
            return parse_edge_list(Path(args.edge_list).read_text())
        return catalog(args.catalog)
    except (GraphFormatError, KeyError, OSError) as exc:
        raise UsageError(str(exc)) from exc


def graph_echo(g: Graph) -> dict:
    text = write_edge_list(g)
    return {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "graph6": to_graph6(g) if g.is_simple() else None,
        "edge_list": text,
        "digest": "sha256:" + hashlib.sha256(text.encode()).hexdigest(),
    }


def no_cert(reason: str) -> dict:
    return {"type": "none", "reason": reason}


def minor_cert(g: Graph, h: Graph, name: str, w: MinorWitness) -> dict:
    return {"type": "minor", "graph": write_edge_list(g), "target": name,
            "target_graph": write_edge_list(h), "witness": w.to_json()}


# -- subcommands -------------------------------------------------------------------
# Each returns (verdict, certificate, result).

def cmd_info(g: Graph, args):
    res = {"simple": g.is_simple(), "connected": g.is_connected(), "degrees": g.degrees(),
           "edge_pairs": edge_pair_count(g)}
    if g.is_simple():
        res["certificate"] = canonical_form(g)[1]
        res["triangles"] = len(triangles(g))
        if g.edge_count <= 30:
            res["cycles"] = count_cycles(g)
    return None, no_cert("info has no verdict"), res


def cmd_z2il(g: Graph, args):
    kw = {} if args.budget is None else {"max_pairs": args.budget}
    d = decide_z2_il(g, **kw)
    if d.is_il:
        pairs = [[c.to_json(), e.to_json()] for c, e in d.certificate.pairs]
        cert = {"type": "obstruction", "graph": write_edge_list(g), "obstruction": pairs}
        return "IL", cert, {"obstruction_pairs": len(pairs)}
    cert = {"type": "linkless_witness", "graph": write_edge_list(g),
            "witness": list(d.certificate.twists)}
    return "notIL", cert, {}


def _il(g: Graph, budget):
    r = is_il(g, budget)
    if r.is_il:
        h = catalog(r.member)
        return "IL", minor_cert(g, h, r.member, r.witness)
    return "notIL", no_cert("exhaustive search found no Petersen family minor")


def cmd_il(g: Graph, args):
    verdict, cert = _il(g, args.budget)
    return verdict, cert, {"member": cert.get("target")}


def cmd_planar(g: Graph, args):
    if is_planar(g):
        return "planar", no_cert("face embedding succeeded"), {}
    res = find_any_minor(g, [K5, K33], args.budget)
    if res is None:
        raise RuntimeError("internal error: non-planar graph without a Kuratowski minor")
    i, w = res
    name, h = (("K5", K5), ("K3,3", K33))[i]
    return "nonplanar", minor_cert(g, h, name, w), {}


def cmd_apex(g: Graph, args):
    r = is_n_apex(g, args.n)
    if r.is_apex:
        cert = {"type": "apex", "graph": write_edge_list(g), "removed": list(r.removed)}
        return f"{args.n}-apex", cert, {}
    return f"not-{args.n}-apex", no_cert("every vertex subset of that size was tried"), {}


def _ik(g: Graph, budget):
    r = classify_ik(g, budget)
    if r.witness is not None:
        name = "K7" if len(r.witness.branch_sets) == 7 else "K3,3,1,1"
        cert = minor_cert(g, catalog(name), name, r.witness)
    elif r.removed is not None:
        cert = {"type": "apex", "graph": write_edge_list(g), "removed": list(r.removed)}
    else:
        cert = no_cert(r.reason)
    return r.verdict, cert, r.reason


def cmd_cone(g: Graph, args):
    try:
        h = catalog(args.apex_graph)
    except KeyError as exc:
        raise UsageError(str(exc)) from exc
    c = cone(g, h)
    verdict, cert = _il(c, args.budget)
    ik, ik_cert, reason = _ik(c, args.budget)
    res = {"cone": graph_echo(c), "ik": ik, "ik_reason": reason, "ik_certificate": ik_cert}
    return verdict, cert, res


def cmd_complement(g: Graph, args):
    try:
        c = complement(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    verdict, cert = _il(c, args.budget)
    return verdict, cert, {"complement": graph_echo(c)}


def cmd_moves(g: Graph, args):
    try:
        g.require_simple("moves")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = []
    for t in triangles(g):
        img = delta_y(g, t)
        out.append({"move": "delta_y", "at": list(t), "graph6": to_graph6(img),
                    "certificate": canonical_form(img)[1]})
    if args.moves == "both":
        for v in degree_three_vertices(g):
            img = y_delta(g, v)
            out.append({"move": "y_delta", "at": [v], "graph6": to_graph6(img),
                        "certificate": canonical_form(img)[1]})
    return None, no_cert("moves has no verdict"), {"images": out}


def cmd_closure(g: Graph, args):
    kw = {} if args.budget is None else {"max_members": args.budget}
    try:
        fam = closure(g, **kw) if args.moves == "both" else descendants(g, **kw)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    res = fam.to_json()
    if getattr(args, "list", None):
        Path(args.list).write_text("".join(m.graph6 + "\n" for m in fam.members))
    return None, no_cert("closure has no verdict"), res


def _embedding(g: Graph, args) -> EmbeddingSpec:
    if args.twists is not None:
        text = args.twists
        if text.startswith("@"):
            text = Path(text[1:]).read_text()
        try:
            tw = json.loads(text)
            if isinstance(tw, dict):
                tw = EmbeddingSpec.base(g).with_twists(
                    {tuple(int(x) for x in k.split(",")): int(v) for k, v in tw.items()}).twists
            return EmbeddingSpec(g, tuple(tw))
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad --twists: {exc}") from exc
    if args.seed is not None:
        return random_embedding(g, args.seed, args.twist_bound)
    return EmbeddingSpec.base(g)


def cmd_d4(g: Graph, args):
    emb = _embedding(g, args)
    kw = {} if args.budget is None else {"budget": args.budget}
    w = find_double_linked_d4(emb, **kw)
    res = {"embedding": emb.to_json()}
    if w is None:
        return "none", no_cert("search space exhausted"), res
    cert = {"type": "d4", "graph": write_edge_list(g), "twists": list(emb.twists),
            "witness": w.to_json()}
    return "witness", cert, res


def cmd_mader(g: Graph, args):
    try:
        thr = mader_threshold(args.n, g.vertex_count)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    fires = mader_guarantees_clique_minor(args.n, g)
    res = {"threshold": thr, "edges": g.simple().edge_count, "fires": fires}
    if not fires:
        return "below-threshold", no_cert("edge count does not exceed the threshold"), res
    h = complete_graph(args.n + 2)
    w = has_minor(g, h, args.budget)
    if w is None:
        raise RuntimeError("internal error: threshold exceeded but no clique minor found")
    return "clique-minor", minor_cert(g, h, f"K{args.n + 2}", w), res


# -- certificate replay --------------------------------------------------------------

def verify_certificate(cert: dict) -> bool:
    kind = cert.get("type")
    try:
        g = parse_edge_list(cert["graph"])
        if kind == "linkless_witness":
            return verify_linkless_certificate(g, LinklessWitness(tuple(cert["witness"])))
        if kind == "obstruction":
            pairs = tuple((Cycle.from_json(a), Cycle.from_json(b)) for a, b in cert["obstruction"])
            return verify_obstruction(g, Obstruction(pairs))
        if kind == "minor":
            h = parse_edge_list(cert["target_graph"])
            return verify_minor_witness(g, h, MinorWitness.from_json(cert["witness"]))
        if kind == "apex":
            removed = cert["removed"]
            return len(set(removed)) == len(removed) and is_planar(g.remove_vertices(removed))
        if kind == "d4":
            emb = EmbeddingSpec(g, tuple(cert["twists"]))
            return verify_d4_witness(emb, D4Witness.from_json(cert["witness"]))
    except (KeyError, ValueError, TypeError, GraphFormatError):
        return False
    raise ValueError(f"unknown certificate type {kind!r}")


def find_certificates(obj):
    if isinstance(obj, dict):
        if obj.get("type") in ("linkless_witness", "obstruction", "minor", "apex", "d4"):
            yield obj
        for v in obj.values():
            yield from find_certificates(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from find_certificates(v)


def cmd_verify(args):
    text = Path(args.file).read_text()
    try:
        docs = [json.loads(text)]
    except json.JSONDecodeError:
        docs = [json.loads(line) for line in text.splitlines() if line.strip()]
    results = []
    for c in (c for d in docs for c in find_certificates(d)):
        results.append({"type": c["type"], "ok": verify_certificate(c)})
    ok = all(r["ok"] for r in results)
    return {"command": "verify", "version": __version__, "verdict": "ok" if ok else "failed",
            "checked": len(results), "results": results}


# -- cache ---------------------------------------------------------------------------

def cache_dir(args) -> Path | None:
    d = args.cache or os.environ.get(CACHE_ENV)
    return Path(d) if d else None


def cache_key(command: str, echo: dict, params: dict) -> str:
    blob = json.dumps([command, echo["digest"], params], sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def cache_get(root: Path, key: str):
    p = root / key[:2] / f"{key}.json"
    try:
        return json.loads(p.read_text())
    except (OSError, json.JSONDecodeError):
        return None


def cache_put(root: Path, key: str, report: dict) -> None:
    d = root / key[:2]
    d.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(report, fh, sort_keys=True)
    os.replace(tmp, d / f"{key}.json")


# -- report assembly -------------------------------------------------------------------

HANDLERS = {
    "info": cmd_info, "z2il": cmd_z2il, "il": cmd_il, "planar": cmd_planar,
    "apex": cmd_apex, "cone": cmd_cone, "complement": cmd_complement, "moves": cmd_moves,
    "closure": cmd_closure, "d4": cmd_d4, "mader": cmd_mader,
}


def params_of(args) -> dict:
    skip = {"command", "graph6", "edge_list", "catalog", "cache", "human", "jobs", "file", "list"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def graph_report(command: str, g: Graph, args, timed: bool = True) -> dict:
    echo = graph_echo(g)
    params = params_of(args)
    root = cache_dir(args)
    key = cache_key(command, echo, params) if root else None
    if root:
        hit = cache_get(root, key)
        if hit is not None:
            hit["cache"] = "hit"
            return hit
    t0 = time.perf_counter()
    report = {"command": command, "version": __version__, "input": echo, "params": params,
              "budget": {"limit": args.budget, "exceeded": False}}
    try:
        verdict, cert, result = HANDLERS[command](g, args)
    except BudgetExceeded as exc:
        report.update(verdict="budget-exceeded", certificate=no_cert(str(exc)), result={})
        report["budget"]["exceeded"] = True
        report["budget"]["used"] = exc.used
    else:
        report.update(verdict=verdict, certificate=cert, result=result)
    if timed:
        report["timing"] = {"seconds": round(time.perf_counter() - t0, 6)}
    if root and not report["budget"]["exceeded"]:
        cache_put(root, key, report)
    return report


def _batch_line(job):
    line, command, args = job
    try:
        g = parse_graph6(line)
    except GraphFormatError as exc:
        return {"command": command, "input": {"line": line}, "error": str(exc)}
    try:
        rep = graph_report(command, g, args, timed=False)
    except (UsageError, ValueError, RuntimeError) as exc:
        return {"command": command, "input": {"line": line}, "error": str(exc)}
    rep.pop("cache", None)
    return rep


def run_batch(args) -> list[dict]:
    if args.subcommand not in HANDLERS:
        raise UsageError(f"batch cannot run {args.subcommand!r}")
    if args.n is None:
        args.n = 4 if args.subcommand == "mader" else 1
    lines = [ln.strip() for ln in Path(args.file).read_text().splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    jobs = [(ln, args.subcommand, args) for ln in lines]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            return list(pool.map(_batch_line, jobs))
    return [_batch_line(j) for j in jobs]


def human_summary(report: dict) -> str:
    cmd = report.get("command")
    inp = report.get("input", {})
    head = f"{cmd}: {inp.get('graph6') or inp.get('digest', '')}".rstrip()
    parts = [head]
    if report.get("verdict") is not None:
        parts.append(f"verdict={report['verdict']}")
    cert = report.get("certificate")
    if isinstance(cert, dict):
        parts.append(f"certificate={cert.get('type')}")
    res = report.get("result", {})
    for k in ("members", "ydelta_required", "member", "threshold", "ik"):
        if isinstance(res, dict) and res.get(k) is not None:
            parts.append(f"{k}={res[k]}")
    return "  ".join(parts)


# -- argument parsing ------------------------------------------------------------------

def add_graph_args(p):
    p.add_argument("--graph6", help="graph in graph6 format")
    p.add_argument("--edge-list", metavar="FILE", help="file with 'n N' then one 'u v' per line")
    p.add_argument("--catalog", metavar="NAME", help=f"named graph ({NAMES_HELP})")


def add_common(p):
    p.add_argument("--budget", type=int, default=None,
                   help="search budget (nodes, cycle pairs or family members)")
    p.add_argument("--cache", metavar="DIR", default=None,
                   help=f"result cache directory (default: ${CACHE_ENV}, off if unset)")
    p.add_argument("--human", action="store_true", help="print a one-line summary instead of JSON")


def add_command_args(p, name):
    if name == "apex":
        p.add_argument("--n", type=int, default=1, help="number of vertices to remove")
    if name == "mader":
        p.add_argument("--n", type=int, default=4, help="clique minor K_{n+2}, 1 <= n <= 5")
    if name == "cone":
        p.add_argument("--with", dest="apex_graph", default="K1", metavar="NAME",
                       help="graph joined to the input (default K1)")
    if name in ("moves", "closure"):
        p.add_argument("--moves", choices=("delta-y", "both"), default="both")
    if name == "closure":
        p.add_argument("--list", metavar="FILE", help="also write the members as graph6 lines")
    if name == "d4":
        p.add_argument("--twists", help="JSON list, JSON object {'e,f': k}, or @FILE")
        p.add_argument("--seed", type=int, default=None, help="random twists from this seed")
        p.add_argument("--twist-bound", type=int, default=3)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ilgraphs", description="Intrinsic linking toolkit.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in GRAPH_COMMANDS:
        p = sub.add_parser(name)
        add_graph_args(p)
        add_common(p)
        add_command_args(p, name)
    p = sub.add_parser("links", help="linked cycle pairs of an embedding")
    add_graph_args(p)
    add_common(p)
    add_command_args(p, "d4")
    p.add_argument("--min-abs", type=int, default=1)
    p = sub.add_parser("complement-il", help="random graphs vs their complements")
    p.add_argument("--vertices", type=int, default=13)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    add_common(p)
    p = sub.add_parser("catalog", help="list named graphs or print one")
    p.add_argument("name", nargs="?")
    p.add_argument("--human", action="store_true")
    p = sub.add_parser("verify", help="replay every certificate in a report file")
    p.add_argument("file")
    p.add_argument("--human", action="store_true")
    p = sub.add_parser("batch", help="run a subcommand over graph6 lines")
    p.add_argument("file")
    p.add_argument("subcommand")
    p.add_argument("--jobs", type=int, default=1)
    add_common(p)
    p.add_argument("--n", type=int, default=None, help="apex: default 1; mader: default 4")
    p.add_argument("--min-abs", type=int, default=1)
    p.add_argument("--moves", choices=("delta-y", "both"), default="both")
    p.add_argument("--with", dest="apex_graph", default="K1")
    p.add_argument("--twists")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--twist-bound", type=int, default=3)
    return parser


def cmd_links(g: Graph, args):
    from .embedding import all_links
    emb = _embedding(g, args)
    links = all_links(emb, args.min_abs)
    return None, no_cert("links has no verdict"), {
        "embedding": emb.to_json(),
        "links": [{"first": c.to_json(), "second": d.to_json(), "lk": lk} for c, d, lk in links],
    }


HANDLERS["links"] = cmd_links


def emit(obj, human: bool, out) -> None:
    if human:
        out.write(human_summary(obj) + "\n")
    else:
        out.write(json.dumps(obj, sort_keys=True) + "\n")


def cli_main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "catalog":
            if args.name is None:
                emit({"command": "catalog", "names": NAMES_HELP}, False, out)
            else:
                emit({"command": "catalog", "name": args.name,
                      "input": graph_echo(catalog(args.name))}, args.human, out)
            return EXIT_OK
        if args.command == "verify":
            rep = cmd_verify(args)
            emit(rep, args.human, out)
            return EXIT_OK if rep["verdict"] == "ok" else EXIT_VERIFY_FAILED
        if args.command == "complement-il":
            t0 = time.perf_counter()
            kw = {} if args.budget is None else {"budget": args.budget}
            rep = complement_il_check(args.vertices, args.samples, args.seed, p=args.p, **kw)
            body = rep.to_json()
            report = {"command": "complement-il", "version": __version__,
                      "params": {"vertices": args.vertices, "samples": args.samples,
                                 "seed": args.seed, "p": args.p, "budget": args.budget},
                      "verdict": "violation" if rep.violations else "ok",
                      "certificate": no_cert("sampling report"), "result": body,
                      "budget": {"limit": args.budget, "exceeded": body["incomplete"] > 0},
                      "timing": {"seconds": round(time.perf_counter() - t0, 6)}}
            emit(report, args.human, out)
            return EXIT_OK
        if args.command == "batch":
            for rep in run_batch(args):
                emit(rep, args.human, out)
            return EXIT_OK
        g = load_graph(args)
        report = graph_report(args.command, g, args)
        emit(report, args.human, out)
        return EXIT_BUDGET if report["budget"]["exceeded"] else EXIT_OK
    except (UsageError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"ilgraphs: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
