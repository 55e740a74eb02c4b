"""Command line interface: ``generate``, ``verify`` and ``search``.

Exit codes: 0 accepted / found, 1 well-formed negative outcome, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators, sequences
from .documents import (
    DocumentError,
    dump_quiver,
    format_sequence,
    load_quiver,
    parse_sequence,
    to_dot,
    trace_to_dict,
)
from .quiver import IceQuiver, QuiverError, framed, is_maximal_green
from .search import SearchConfig, enumerate_mgs

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _add_family(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--family", choices=["cycle", "ladder", "torus"], required=required)
    p.add_argument("--m", type=int, help="cycle length")
    p.add_argument("--k", type=int, help="ladder rows")
    p.add_argument("--n", type=int, help="genus")
    p.add_argument("--p", type=int, help="punctures")
    p.add_argument(
        "--ladder-orientation",
        choices=["standalone", "embedded"],
        default="standalone",
        help="orientation of the g_0 and row-1 arrows (ladder and torus)",
    )


def _need(args, name: str):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name} is required for --family {args.family}")
    return val


def family_quiver(args) -> IceQuiver:
    if args.family == "cycle":
        return generators.cycle_quiver(_need(args, "m"))
    if args.family == "ladder":
        return generators.ladder_quiver(_need(args, "k"), args.ladder_orientation)
    return generators.torus_quiver(_need(args, "n"), _need(args, "p"), args.ladder_orientation)


def builtin_sequence(args) -> list[str]:
    if args.family == "cycle":
        return list(sequences.cycle_sequence(_need(args, "m")))
    if args.family == "ladder":
        return list(sequences.alpha_chain(_need(args, "k")))
    return list(sequences.main_sequence(_need(args, "n"), _need(args, "p")))


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as err:
        raise UsageError(f"{path}: {err.strerror}") from None


def _source_quiver(args) -> IceQuiver:
    if args.quiver and args.family:
        raise UsageError("give either --quiver or --family, not both")
    if args.quiver:
        try:
            return load_quiver(_read(args.quiver))
        except DocumentError as err:
            raise UsageError(f"{args.quiver}: {err}") from None
    if args.family:
        return family_quiver(args)
    raise UsageError("one of --quiver or --family is required")


# -- commands --------------------------------------------------------------


def cmd_generate(args, out) -> int:
    q = family_quiver(args)
    if args.framed:
        q = framed(q)
    out.write(to_dot(q) if args.format == "dot" else dump_quiver(q))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    q = _source_quiver(args)
    if args.framed:
        if not q.frozen_vertices():
            raise UsageError("--framed given but the quiver has no frozen vertices")
    elif not q.frozen_vertices():
        q = framed(q)

    if args.paper_sequence == bool(args.sequence):
        raise UsageError("give exactly one of --sequence or --paper-sequence")
    if args.paper_sequence:
        if not args.family:
            raise UsageError("--paper-sequence requires --family")
        seq = builtin_sequence(args)
    else:
        seq = parse_sequence(_read(args.sequence))

    report = is_maximal_green(q, seq)
    if args.trace:
        Path(args.trace).write_text(json.dumps(trace_to_dict(report.trace)) + "\n", encoding="utf-8")
    out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    return EXIT_OK if report.accepted else EXIT_NEGATIVE


def cmd_search(args, out) -> int:
    q = _source_quiver(args)
    cfg = SearchConfig(
        max_len=args.max_len,
        mode="first" if args.first else "all",
        dedup=not args.no_dedup,
        worker_count=args.workers,
        max_states=args.max_states,
    )
    res = enumerate_mgs(q, cfg)
    if args.format == "text":
        out.write(
            f"# exhausted={str(res.exhausted).lower()} "
            f"resource_limited={str(res.resource_limited).lower()} "
            f"states_visited={res.states_visited} wall_time={res.wall_time:.6f} "
            f"count={len(res.found)}\n"
        )
        for i, seq in enumerate(res.found, 1):
            out.write(f"# sequence {i}\n{format_sequence(seq)}")
    else:
        envelope = {
            "mode": cfg.mode,
            "max_len": cfg.max_len,
            "found": [list(s) for s in res.found],
            "count": len(res.found),
            "exhausted": res.exhausted,
            "resource_limited": res.resource_limited,
            "states_visited": res.states_visited,
            "wall_time": res.wall_time,
        }
        out.write(json.dumps(envelope, indent=2) + "\n")
    if res.resource_limited or not res.found:
        return EXIT_NEGATIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mgsquiver", description="Quiver mutation and maximal green sequences."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a family quiver")
    _add_family(gen, required=True)
    gen.add_argument("--framed", action="store_true")
    gen.add_argument("--format", choices=["json", "dot"], default="json")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="check a maximal green sequence")
    ver.add_argument("--quiver", metavar="FILE")
    _add_family(ver, required=False)
    ver.add_argument("--sequence", metavar="FILE")
    ver.add_argument("--paper-sequence", action="store_true", help="use the built-in sequence for --family")
    ver.add_argument("--trace", metavar="FILE", help="write the full trace as JSON")
    ver.add_argument("--framed", action="store_true", help="input already carries frozen vertices")
    ver.set_defaults(func=cmd_verify)

    sea = sub.add_parser("search", help="enumerate maximal green sequences")
    sea.add_argument("--quiver", metavar="FILE")
    _add_family(sea, required=False)
    sea.add_argument("--max-len", type=int, required=True)
    mode = sea.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", default=True)
    mode.add_argument("--first", action="store_true")
    sea.add_argument("--workers", type=int, default=1)
    sea.add_argument("--no-dedup", action="store_true")
    sea.add_argument("--max-states", type=int, default=500_000)
    sea.add_argument("--format", choices=["json", "text"], default="json")
    sea.set_defaults(func=cmd_search)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, generators.BadParameter, QuiverError) as err:
        print(f"mgsquiver {args.command}: error: {err}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
