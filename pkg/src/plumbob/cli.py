"""Command-line entry point.

Exit codes: 0 success, 1 reproduce found mismatches, 2 invalid input,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .analysis import ClassificationError, analyze, classify, default_grid, run_reproduce
from .cycle import ConsistencyError, fundamental_cycle, page_topology
from .graph import FAMILIES, FamilySpec, GraphError, generate_family, load_graph, serialize_graph
from .lattice import count_embeddings_up_to_symmetry, find_embedding, lattice_of
from .monodromy import WordError

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3


class _InputError(Exception):
    pass


def _read_graph(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return load_graph(text)


def _parse_chain(text: str | None) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise _InputError(f"bad --chain {text!r}; expected b1,b2,...") from exc


def _parse_nq(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    try:
        n, q = text.split("/")
        return int(n), int(q)
    except ValueError as exc:
        raise _InputError(f"bad --nq {text!r}; expected N/Q") from exc


def cmd_generate(args: argparse.Namespace) -> int:
    spec = FamilySpec(
        args.family,
        variant=args.variant,
        b=args.b,
        chain=_parse_chain(args.chain),
        nq=_parse_nq(args.nq),
    )
    text = f"# {spec.label()}\n" + serialize_graph(generate_family(spec))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    report = analyze(_read_graph(args.file), max_dim=args.max_dim)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK


def cmd_embed(args: argparse.Namespace) -> int:
    lattice = lattice_of(_read_graph(args.file))
    out = find_embedding(lattice, max_dim=args.max_dim).to_json()
    if args.count:
        out["count"] = count_embeddings_up_to_symmetry(lattice, max_dim=args.max_dim)
    print(json.dumps(out))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    graph = _read_graph(args.file)
    page = page_topology(graph, fundamental_cycle(graph))
    print(classify(page, find_embedding(lattice_of(graph))))
    return EXIT_OK


def cmd_reproduce(args: argparse.Namespace) -> int:
    families = None
    if args.families:
        families = [f.strip() for f in args.families.split(",") if f.strip()]
        unknown = sorted(set(families) - set(FAMILIES))
        if unknown:
            raise _InputError(f"unknown families: {', '.join(unknown)}")
    summary = run_reproduce(default_grid(families, bmin=args.bmin, bmax=args.bmax))
    if args.json:
        print(json.dumps(summary.to_json(), indent=2))
    else:
        print(summary.to_text())
    return EXIT_OK if summary.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plumbob", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a catalog resolution graph")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--variant")
    p.add_argument("--b", type=int)
    p.add_argument("--chain", help="comma-separated b1,b2,...")
    p.add_argument("--nq", help="cyclic type as N/Q")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="full open book and obstruction report")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-dim", type=int)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("embed", help="search for a diagonal lattice embedding")
    p.add_argument("file")
    p.add_argument("--max-dim", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("classify", help="support genus verdict")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reproduce", help="check the catalog tables")
    p.add_argument("--families", help="comma-separated subset of " + ",".join(FAMILIES))
    p.add_argument("--bmin", type=int, default=2)
    p.add_argument("--bmax", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, WordError, ClassificationError, _InputError) as exc:
        print(f"plumbob {args.command}: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ConsistencyError as exc:
        print(f"plumbob {args.command}: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
