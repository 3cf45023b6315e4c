"""Command-line front end.

Single results are printed as JSON, grids and benchmark tables as CSV; node
labels in output are the original input tokens.  Exit codes: 0 on success,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from .baselines import PARAM_NAMES, BaselineParams, run_baseline
from .genbench import GeneratorConfig, generate_uniform, run_scalability, write_scalability_csv
from .hypergraph import Hypergraph, load_hypergraph
from .kgcore import kg_core, kg_decomposition


class CliError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _load(path: str, dedup: bool) -> Hypergraph:
    try:
        return load_hypergraph(path, dedup=dedup)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}")


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _cmd_stats(args: argparse.Namespace) -> int:
    G = _load(args.path, args.dedup)
    with _output(args.output) as out:
        out.write(G.stats().to_json())
        out.write("\n")
    return 0


def _cmd_core(args: argparse.Namespace) -> int:
    if args.k < 1 or args.g < 1:
        raise CliError("k and g must be >= 1")
    G = _load(args.path, args.dedup)
    result = kg_core(G, args.k, args.g, method="naive" if args.naive else "bucket")
    with _output(args.output) as out:
        json.dump(result.to_json_dict(labels=G.labels), out)
        out.write("\n")
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    if any(v < 1 for v in args.k + args.g):
        raise CliError("all k and g values must be >= 1")
    G = _load(args.path, args.dedup)
    grid = kg_decomposition(G, args.k, args.g)
    with _output(args.output) as out:
        grid.write_csv(out)
    return 0


def _cmd_baseline(args: argparse.Namespace) -> int:
    first_name, second_name = PARAM_NAMES[args.model]
    taken = {
        "k": args.k,
        "q": args.q,
        "d": args.d,
        "alpha": args.alpha,
        "beta": args.beta,
    }
    first = taken.pop(first_name)
    second = taken.pop(second_name) if second_name is not None else None
    flag = lambda name: ("--" if len(name) > 1 else "-") + name
    if first is None:
        raise CliError(f"model {args.model} requires {flag(first_name)}")
    if second_name is not None and second is None:
        raise CliError(f"model {args.model} requires {flag(second_name)}")
    extras = [name for name, value in taken.items() if value is not None]
    if extras:
        raise CliError(f"model {args.model} does not take: {', '.join(extras)}")
    try:
        params = BaselineParams(args.model, first, second)
    except ValueError as exc:
        raise CliError(str(exc))
    G = _load(args.path, args.dedup)
    result = run_baseline(G, params)
    with _output(args.output) as out:
        json.dump(result.to_json_dict(labels=G.labels, G=G), out)
        out.write("\n")
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    try:
        cfg = GeneratorConfig(args.n, args.m, args.c, seed=args.seed)
    except ValueError as exc:
        raise CliError(str(exc))
    G = generate_uniform(cfg)
    with _output(args.output) as out:
        G.write(out)
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    if args.k < 1 or args.g < 1:
        raise CliError("k and g must be >= 1")
    if any(m < 0 for m in args.m):
        raise CliError("edge counts must be non-negative")
    try:
        rows = run_scalability(
            args.n, args.c, args.m, args.k, args.g, repeats=args.repeats, seed=args.seed
        )
    except ValueError as exc:
        raise CliError(str(exc))
    with _output(args.output) as out:
        write_scalability_csv(rows, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercore",
        description="Cohesive-core analytics for hypergraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("path", help="hyperedge-list file")
        p.add_argument("--dedup", action="store_true", help="collapse duplicate hyperedges")
        p.add_argument("-o", "--output", default=None, help="write to file instead of stdout")

    p = sub.add_parser("stats", help="corpus statistics as JSON")
    add_input(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("core", help="(k,g)-core membership as JSON")
    add_input(p)
    p.add_argument("-k", type=int, required=True, help="minimum frequent-neighbour count")
    p.add_argument("-g", type=int, required=True, help="minimum co-occurrence count")
    p.add_argument("--naive", action="store_true", help="use the sweep-until-stable reference peeling")
    p.set_defaults(func=_cmd_core)

    p = sub.add_parser("decompose", help="core sizes over a (k,g) grid as CSV")
    add_input(p)
    p.add_argument("-k", type=_int_list, required=True, help="k values, comma separated")
    p.add_argument("-g", type=_int_list, required=True, help="g values, comma separated")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("baseline", help="comparison core models as JSON")
    add_input(p)
    p.add_argument("--model", required=True, choices=sorted(PARAM_NAMES), help="baseline model")
    p.add_argument("-k", type=int, default=None)
    p.add_argument("-q", type=int, default=None)
    p.add_argument("-d", type=int, default=None)
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--beta", type=int, default=None)
    p.set_defaults(func=_cmd_baseline)

    p = sub.add_parser("generate", help="write a seeded uniform random hypergraph")
    p.add_argument("-n", type=int, required=True, help="number of nodes")
    p.add_argument("-c", type=int, required=True, help="edge cardinality")
    p.add_argument("-m", type=int, required=True, help="number of hyperedges")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None, help="write to file instead of stdout")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("bench", help="scalability sweep over edge counts as CSV")
    p.add_argument("-n", type=int, required=True, help="number of nodes")
    p.add_argument("-c", type=int, required=True, help="edge cardinality")
    p.add_argument("-m", type=_int_list, required=True, help="edge counts, comma separated")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-g", type=int, required=True)
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", default=None, help="write to file instead of stdout")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
