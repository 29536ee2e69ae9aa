"""Command-line front end.

    formality arr <file> [--json] [--max-k K]
    formality graph <file> [--json]
    formality verify <file> [--json]
    formality random --n N --p NUM/DEN --seed S [--count C] [--json]

Exit codes: 0 ok, 1 bad input, 2 internal invariant failure (d.d != 0),
3 the two graphic pipelines disagree.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .arrangement import ArrangementError, read_arrangement
from .complex import ComplexError, assemble_complex, formality_level, formality_report, verdict
from .graphic import (
    RANDOM_GENERATOR,
    Graph,
    GraphError,
    boundary_matrices,
    cross_check,
    flag_complex,
    random_graph,
    read_graph,
    simplicial_homology,
)
from .linalg import rank

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_DISAGREE = 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    json: bool = False
    max_k: int | None = None
    n: int | None = None
    p_num: int | None = None
    p_den: int | None = None
    seed: int | None = None
    count: int = 10

    def __post_init__(self):
        if self.command == "random":
            if self.n is None or self.n < 1:
                raise UsageError("--n must be at least 1")
            if self.seed is None:
                raise UsageError("--seed is required")
            if self.p_den is None or self.p_den <= 0 or not 0 <= self.p_num <= self.p_den:
                raise UsageError("--p must be a fraction NUM/DEN with 0 <= NUM/DEN <= 1")
            if self.count < 0:
                raise UsageError("--count must be non-negative")
        elif self.input_path is None:
            raise UsageError(f"{self.command} needs an input file")
        if self.max_k is not None and self.max_k < 1:
            raise UsageError("--max-k must be at least 1")


def _tuple(xs) -> str:
    return "(" + ",".join(str(x) for x in xs) + ")"


def _emit(out, obj) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


# -- arr --------------------------------------------------------------------

def run_arr(path: str, config: RunConfig, out=sys.stdout) -> int:
    a = read_arrangement(path)
    r = a.rank
    c = assemble_complex(a, config.max_k)
    rep = formality_report(c)
    top = c.rank
    if top < r and rep.formality_level >= top:
        text_verdict = f"{top}-formal; levels above {top} not computed"
    else:
        text_verdict = verdict(rep.formality_level, r)
    if config.json:
        _emit(out, {
            "mode": "arr",
            "ambient_dim": a.ambient_dim,
            "num_hyperplanes": len(a),
            "rank": r,
            "max_level": top,
            "d_dims": rep.d_dims,
            "d_ranks": rep.d_ranks,
            "homology": rep.homology,
            "formality_level": rep.formality_level,
            "verdict": text_verdict,
        })
    else:
        out.write(f"ambient_dim={a.ambient_dim}, hyperplanes={len(a)}, max_level={top}\n")
        out.write(f"d_ranks={_tuple(rep.d_ranks)}\n")
        out.write(
            f"rank={r}, D={_tuple(rep.d_dims)}, H={_tuple(rep.homology)}, "
            f"level={rep.formality_level} ({text_verdict})\n"
        )
    return EXIT_OK


# -- graph ------------------------------------------------------------------

def graph_summary(g: Graph) -> dict:
    """Formality data of A_G read off the flag complex alone."""
    fc = flag_complex(g)
    cc = boundary_matrices(fc)
    counts = fc.face_counts
    flag_h = simplicial_homology(cc, counts)
    r = g.n - g.components()
    homology = [flag_h[i] if i < len(flag_h) else 0 for i in range(1, r)]
    d_dims = [g.n] + [counts[k] if k < len(counts) else 0 for k in range(1, r + 1)]
    d_ranks = [rank(cc[k]) if k in cc.boundary else 0 for k in range(1, r + 1)]
    level = formality_level(homology, r)
    return {
        "mode": "graph",
        "ambient_dim": g.n,
        "num_hyperplanes": len(g.edges),
        "rank": r,
        "d_dims": d_dims,
        "d_ranks": d_ranks,
        "homology": homology,
        "formality_level": level,
        "verdict": verdict(level, r),
        "clique_counts": counts,
        "flag_homology": flag_h,
    }


def run_graph(path: str, config: RunConfig, out=sys.stdout) -> int:
    g = read_graph(path)
    s = graph_summary(g)
    if config.json:
        _emit(out, s)
    else:
        out.write(
            f"vertices={g.n}, edges={len(g.edges)}, components={g.components()}, rank={s['rank']}\n"
        )
        out.write(f"D={_tuple(s['d_dims'])}, d_ranks={_tuple(s['d_ranks'])}\n")
        out.write(
            f"a={_tuple(s['clique_counts'])}, H={_tuple(s['flag_homology'])}, "
            f"level={s['formality_level']} ({s['verdict']})\n"
        )
    return EXIT_OK


# -- verify -----------------------------------------------------------------

def verify_summary(g: Graph) -> dict:
    rep = cross_check(g)
    return {
        "mode": "verify",
        "ambient_dim": g.n,
        "num_hyperplanes": len(g.edges),
        "rank": rep.rank,
        "d_dims": rep.generic_dims,
        "d_ranks": rep.d_ranks,
        "homology": rep.generic_homology,
        "formality_level": rep.formality_level,
        "verdict": verdict(rep.formality_level, rep.rank),
        "clique_counts": rep.clique_counts,
        "flag_homology": rep.flag_homology,
        "special_dims": rep.special_dims,
        "special_homology": rep.special_homology,
        "agreement": rep.agreement,
        "per_level_agreement": rep.per_level_agreement,
        "problems": rep.problems,
    }


def _write_verify_text(s: dict, out) -> None:
    out.write(f"vertices={s['ambient_dim']}, edges={s['num_hyperplanes']}, rank={s['rank']}\n")
    out.write(f"a={_tuple(s['clique_counts'])}, flag H={_tuple(s['flag_homology'])}\n")
    for k, ok in enumerate(s["per_level_agreement"], start=1):
        out.write(
            f"  level {k}: generic dim={s['d_dims'][k]}, special dim={s['special_dims'][k]}, "
            f"rank d_{k}={s['d_ranks'][k - 1]} -> {'agree' if ok else 'DISAGREE'}\n"
        )
    for msg in s["problems"]:
        out.write(f"  problem: {msg}\n")
    out.write(
        f"D={_tuple(s['d_dims'])}, H={_tuple(s['homology'])}, level={s['formality_level']} "
        f"({s['verdict']}), agreement={'yes' if s['agreement'] else 'no'}\n"
    )


def run_verify(path: str, config: RunConfig, out=sys.stdout) -> int:
    g = read_graph(path)
    s = verify_summary(g)
    if config.json:
        _emit(out, s)
    else:
        _write_verify_text(s, out)
    return EXIT_OK if s["agreement"] else EXIT_DISAGREE


# -- random -----------------------------------------------------------------

def run_random(config: RunConfig, out=sys.stdout) -> int:
    p = Fraction(config.p_num, config.p_den)
    rng = random.Random(config.seed)
    instances = []
    for index in range(config.count):
        g = random_graph(config.n, p, rng)
        entry = {"index": index, "edges": [list(e) for e in g.sorted_edges]}
        if not g.edges or not g.is_connected():
            entry["skipped"] = "edgeless" if not g.edges else "disconnected"
            entry["report"] = None
        else:
            entry["skipped"] = None
            entry["report"] = verify_summary(g)
        instances.append(entry)

    ran = [e["report"] for e in instances if e["report"] is not None]
    levels = Counter(r["formality_level"] for r in ran)
    summary = {
        "generated": config.count,
        "instances_run": len(ran),
        "agreements": sum(r["agreement"] for r in ran),
        "level_distribution": {str(k): levels[k] for k in sorted(levels)},
    }
    if config.json:
        _emit(out, {
            "mode": "random",
            "generator": RANDOM_GENERATOR,
            "seed": config.seed,
            "n": config.n,
            "p": f"{config.p_num}/{config.p_den}",
            "count": config.count,
            "instances": instances,
            "summary": summary,
        })
    else:
        out.write(f"generator: {RANDOM_GENERATOR}\n")
        out.write(f"seed={config.seed}, n={config.n}, p={config.p_num}/{config.p_den}, count={config.count}\n")
        for e in instances:
            r = e["report"]
            if r is None:
                out.write(f"graph {e['index']}: edges={len(e['edges'])}, skipped ({e['skipped']})\n")
                continue
            out.write(
                f"graph {e['index']}: edges={len(e['edges'])}, a={_tuple(r['clique_counts'])}, "
                f"H={_tuple(r['homology'])}, level={r['formality_level']}, "
                f"agreement={'yes' if r['agreement'] else 'no'}\n"
            )
        dist = ", ".join(f"{k}:{v}" for k, v in summary["level_distribution"].items())
        out.write(
            f"summary: generated={summary['generated']}, run={summary['instances_run']}, "
            f"agreements={summary['agreements']}, levels={{{dist}}}\n"
        )
    return EXIT_OK if summary["agreements"] == len(ran) else EXIT_DISAGREE


# -- entry point ------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse's default exit status 2 is reserved for internal failures
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _fraction_arg(text: str) -> tuple[int, int]:
    num, sep, den = text.partition("/")
    try:
        return int(num), int(den) if sep else 1
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a fraction: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="formality", description="k-formality of hyperplane arrangements")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("arr", help="decide k-formality of an arrangement file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-k", type=int, default=None, help="highest level of D to build")

    p = sub.add_parser("graph", help="k-formality of A_G from flag complex homology")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="cross-check the lattice and clique pipelines on a graph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("random", help="cross-check on seeded Erdos-Renyi graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=_fraction_arg, required=True, metavar="NUM/DEN")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--json", action="store_true")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.command == "random":
        return RunConfig("random", json=ns.json, n=ns.n, p_num=ns.p[0], p_den=ns.p[1],
                         seed=ns.seed, count=ns.count)
    return RunConfig(ns.command, input_path=ns.file, json=ns.json,
                     max_k=getattr(ns, "max_k", None))


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    ns = build_parser().parse_args(argv)
    try:
        config = config_from_args(ns)
        if config.command == "arr":
            return run_arr(config.input_path, config, out)
        if config.command == "graph":
            return run_graph(config.input_path, config, out)
        if config.command == "verify":
            return run_verify(config.input_path, config, out)
        return run_random(config, out)
    except ComplexError as exc:
        err.write(f"formality: internal invariant failure: {exc}\n")
        return EXIT_INTERNAL
    except (UsageError, ArrangementError, GraphError, OSError) as exc:
        err.write(f"formality: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
