"""Command-line interface: ``domset solve|verify|exact|gen|bench``.

Exit status is 0 on success, 1 for bad usage or input, 2 when an internal
invariant fails (which means a bug here, not in the input).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict
from pathlib import Path

from domset import bench as benchmod
from domset.bounds import evaluate_bounds
from domset.errors import GraphError, InvariantError
from domset.generators import (FIXTURES, RandomSpec, corona, family, fixture,
                               random_connected_graph, t_family, t_prime_family, w_family)
from domset.graph import Graph, is_dominating, is_independent, is_minimal_dominating, undominated
from domset.greedy import TIE_BREAKS
from domset.io import FORMATS, format_graph, parse_graph
from domset.oracle import DEFAULT_LIMIT, exact_gamma, has_system_of_representatives
from domset.purify import MODES, solve


class UsageError(GraphError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _seed(args) -> int:
    env = os.environ.get("DOMSET_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"DOMSET_SEED must be an integer, got {env!r}") from None
    return args.seed


def load(source: str, fmt: str | None) -> Graph:
    """Read a graph file, or build a fixture when ``source`` names one."""
    if not Path(source).exists() and source in FIXTURES:
        return fixture(source)
    if not Path(source).exists():
        raise UsageError(f"no such file or fixture: {source}")
    return parse_graph(source, fmt)


def _vertex_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}") from None


def _emit(payload: dict, as_json: bool, lines: list[str], out) -> None:
    if as_json:
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


# -- commands ----------------------------------------------------------------

def cmd_solve(args, out) -> int:
    G = load(args.input, args.format)
    r = solve(G, tie_break=args.tie_break, mode=args.purify_mode,
              ensure_minimal=args.ensure_minimal, components=args.components,
              seed=_seed(args))
    gamma = None
    if args.exact:
        gamma = exact_gamma(G, args.limit).gamma if G.n <= args.limit else None
    payload = {
        "n": G.n, "m": G.m,
        "greedy_set": sorted(r.greedy_set),
        "purified_set": sorted(r.purified_set),
        "greedy_size": len(r.greedy_set),
        "purified_size": len(r.purified_set),
        "purification": r.purification_count,
        "certificates": [asdict(c) for c in r.certificates],
        "minimal": is_minimal_dominating(G, r.purified_set),
        "timings": r.timings,
        "gamma": gamma,
    }
    if G.labels is not None:
        payload["greedy_labels"] = [str(G.label(v)) for v in sorted(r.greedy_set)]
        payload["purified_labels"] = [str(G.label(v)) for v in sorted(r.purified_set)]
    if G.is_connected():
        payload["report"] = evaluate_bounds(G, len(r.greedy_set), len(r.purified_set), gamma).as_dict()
        if len(r.greedy_set) > payload["report"]["parekh_bound"] + 1e-9:
            payload["notes"] = ["greedy set exceeds the n+1-sqrt(2m+1) bound"]
    if args.no_timings:
        payload.pop("timings")
    lines = [f"n={G.n} m={G.m}",
             f"greedy   |S|  = {len(r.greedy_set)}: {sorted(r.greedy_set)}",
             f"purified |S*| = {len(r.purified_set)}: {sorted(r.purified_set)}"]
    if gamma is not None:
        lines.append(f"gamma = {gamma}, ratio |S*|/gamma = {len(r.purified_set) / gamma:.4f}")
    for c in r.certificates:
        lines.append(f"certificate: {c.kind}")
    _emit(payload, args.json, lines, out)
    return 0


def cmd_verify(args, out) -> int:
    G = load(args.input, args.format)
    S = G.check_vertices(_vertex_list(args.set))
    payload = {
        "set": sorted(S),
        "dominating": is_dominating(G, S),
        "undominated": undominated(G, S),
        "minimal": is_minimal_dominating(G, S),
        "independent": is_independent(G, S),
        "representatives": has_system_of_representatives(G, S, set(range(G.n)) - S),
    }
    lines = [f"{k}: {v}" for k, v in payload.items()]
    _emit(payload, args.json, lines, out)
    return 0


def cmd_exact(args, out) -> int:
    G = load(args.input, args.format)
    res = exact_gamma(G, args.limit)
    payload = {"gamma": res.gamma, "witness": sorted(res.witness), "explored": res.explored}
    if G.labels is not None:
        payload["witness_labels"] = [str(G.label(v)) for v in sorted(res.witness)]
    lines = [f"gamma = {res.gamma}", f"witness: {sorted(res.witness)}",
             f"explored {res.explored} search nodes"]
    _emit(payload, args.json, lines, out)
    return 0


def _ints_arg(text: str | None, what: str) -> list[int]:
    if text is None:
        raise UsageError(f"--{what} is required for this family")
    return _vertex_list(text)


def cmd_gen(args, out) -> int:
    fam = args.family
    if fam == "random":
        if args.n is None or args.m is None:
            raise UsageError("random graphs need --n and --m")
        G = random_connected_graph(RandomSpec(args.n, args.m, _seed(args)))
    elif fam == "fixture":
        G = fixture(args.name or "")
    elif fam == "corona":
        G = corona(family(args.g), family(args.h))
    elif fam == "w":
        G = w_family(family(args.g), _ints_arg(args.k, "k"), _ints_arg(args.t, "t"))
    elif fam == "t":
        G = t_family(family(args.g), family(args.h))
    elif fam == "t-prime":
        if args.p is None:
            raise UsageError("t-prime needs --p")
        G = t_prime_family(family(args.g), args.p)
    else:
        G = family(f"{fam}:{args.n}")
    text = format_graph(G, args.out_format)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return 0


def _range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"bad range {text!r}; use LO..HI") from None


def cmd_bench(args, out) -> int:
    rows = benchmod.run_bench(args.count, _range(args.n), args.m_factor, _seed(args),
                              mode=args.purify_mode, exact=args.exact, limit=args.limit,
                              jobs=args.jobs)
    if args.json:
        keep = [{k: v for k, v in asdict(r).items() if not (args.no_timings and k.startswith("t_"))}
                for r in rows]
        payload = {"rows": keep, "summary": benchmod.summarize(rows)}
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    else:
        text = benchmod.rows_to_csv(rows, timings=not args.no_timings) if rows else ""
        if rows:
            s = benchmod.summarize(rows)
            if s["mean_reduction_pct"] is not None:
                text += f"# mean reduction {s['mean_reduction_pct']:.2f}%\n"
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="domset", description="Approximate minimum dominating sets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_input(sp):
        sp.add_argument("input", help="graph file, or a fixture name")
        sp.add_argument("--format", choices=FORMATS, help="file format (default: by extension)")
        sp.add_argument("--json", action=argparse.BooleanOptionalAction, default=True,
                        help="JSON output (default) or --no-json for text")

    sp = sub.add_parser("solve", help="greedy stage plus purification")
    graph_input(sp)
    sp.add_argument("--tie-break", choices=TIE_BREAKS, default="min-index")
    sp.add_argument("--seed", type=int, default=0, help="seed for --tie-break random")
    sp.add_argument("--purify-mode", choices=MODES, default="extended")
    sp.add_argument("--ensure-minimal", action="store_true")
    sp.add_argument("--components", action="store_true", help="solve each component separately")
    sp.add_argument("--exact", action="store_true", help="add the exact domination number")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    sp.add_argument("--no-timings", action="store_true")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="check a vertex set")
    graph_input(sp)
    sp.add_argument("--set", required=True, help="comma-separated vertex ids")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("exact", help="exact domination number of a small graph")
    graph_input(sp)
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    sp.set_defaults(func=cmd_exact)

    sp = sub.add_parser("gen", help="write a generated graph")
    sp.add_argument("--family", required=True,
                    choices=["random", "fixture", "corona", "w", "t", "t-prime",
                             "path", "cycle", "complete", "star", "null"])
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--name", help="fixture name")
    sp.add_argument("--g", default="path:2", help="base graph as kind:size")
    sp.add_argument("--h", default="complete:1", help="attached graph as kind:size")
    sp.add_argument("--k", help="inflation size per edge of --g")
    sp.add_argument("--t", help="pendant count per vertex of --g")
    sp.add_argument("--p", type=int, help="order of the null graph for t-prime")
    sp.add_argument("--out-format", choices=FORMATS, default="edgelist")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("bench", help="benchmark on seeded random graphs")
    sp.add_argument("--count", type=int, required=True)
    sp.add_argument("--n", required=True, help="order range LO..HI")
    sp.add_argument("--m-factor", type=float, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--purify-mode", choices=MODES, default="extended")
    sp.add_argument("--exact", action="store_true")
    sp.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true", help="JSON instead of CSV")
    sp.add_argument("--no-timings", action="store_true")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvariantError as exc:
        print(f"domset: internal error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, OSError) as exc:
        print(f"domset: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
