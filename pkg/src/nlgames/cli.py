"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from nlgames.classical import classical_max, parse_strategy
from nlgames.game import (
    AnfParseError,
    GameTable,
    format_anf,
    from_anf,
    has_inconsistent_pair,
    is_admissible,
    parse_anf,
    parse_mask,
    partition_of,
    to_anf,
)
from nlgames.quantum import format_angle, parse_angles, quantum_max
from nlgames.report import ReportError, emit, render_summary, write_text
from nlgames.scan import advantage_table, scan, summarize, verify_nga19_counts
from nlgames.simulate import SimulationConfig, run

EXIT_OK, EXIT_USAGE, EXIT_IO = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which is our I/O code
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def analyze_game(game: GameTable) -> dict[str, Any]:
    cl = classical_max(game)
    q = quantum_max(game)
    angles = q.solution.angles
    return {
        "mask": game.hex,
        "anf": format_anf(to_anf(game)),
        "partition": str(partition_of(game)),
        "admissible": is_admissible(game),
        "inconsistent": has_inconsistent_pair(game),
        "classical": {
            "value": float(cl.max_probability),
            "strategies": [str(s) for s in cl.maximizers],
        },
        "quantum": {
            "family": q.family,
            "reported": q.reported,
            "angles": dict(zip(("theta0", "theta1", "psi0", "psi1"), angles.as_tuple())),
            "angles_text": str(angles),
            "t_star": q.solution.t_star,
        },
        "separation": q.separation,
    }


def _game_from_args(args: argparse.Namespace) -> GameTable:
    if (args.mask is None) == (args.anf is None):
        raise UsageError("give exactly one of --mask or --anf")
    if args.mask is not None:
        return parse_mask(args.mask)
    return from_anf(parse_anf(args.anf))


def _print_json(obj: Any) -> None:
    print(json.dumps(obj, indent=2))


def cmd_analyze(args: argparse.Namespace) -> int:
    _print_json(analyze_game(_game_from_args(args)))
    return EXIT_OK


def cmd_anf(args: argparse.Namespace) -> int:
    game = _game_from_args(args)
    print(format_anf(to_anf(game)) if args.mask is not None else game.hex)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    records = scan(admissible_only=not args.include_inadmissible, workers=args.jobs)
    summaries = summarize(records)
    advantage = advantage_table([s for s in summaries if s.partition.admissible])
    if args.out:
        emit(records, args.format, args.out)
    text = render_summary(summaries, advantage)
    if args.summary:
        write_text(args.summary, text)
    elif not args.out:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    game = _game_from_args(args)
    if args.mode == "classical":
        if args.strategy is None or args.angles is not None:
            raise UsageError("--mode classical needs --strategy and no --angles")
        mode = parse_strategy(args.strategy)
    else:
        if args.angles is None or args.strategy is not None:
            raise UsageError("--mode quantum needs --angles and no --strategy")
        mode = parse_angles(args.angles)
    if args.rounds < 1:
        raise UsageError("--rounds must be >= 1")
    report = run(SimulationConfig(game, mode, args.rounds, args.seed))
    _print_json(report.to_dict())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    census = verify_nga19_counts()
    _print_json(census)
    return EXIT_OK if census["ok"] else EXIT_USAGE


def _add_game_source(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mask", help="win mask, 0xHHHH or decimal (bit 8x+4y+2a+b set = win)")
    p.add_argument("--anf", help='ANF of f with f=0 meaning win, e.g. "xy+a+b"')


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nlgames", description="Classical vs. quantum analysis of binary nonlocal games.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="analyze one game, JSON on stdout")
    _add_game_source(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("scan", help="exhaustive scan with per-partition summary")
    p.add_argument("--out", help="per-game records file")
    p.add_argument("--summary", help="markdown summary file")
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="records format (default csv)")
    p.add_argument("--include-inadmissible", action="store_true", help="scan all 65536 games")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (output is identical for any value)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("simulate", help="Monte Carlo referee, JSON report on stdout")
    _add_game_source(p)
    p.add_argument("--mode", choices=("classical", "quantum"), required=True)
    p.add_argument("--strategy", help='classical strategy, e.g. "a=0, b=!y"')
    p.add_argument("--angles", help='theta0,theta1,psi0,psi1, e.g. "0,pi/4,pi/8,7pi/8"')
    p.add_argument("--rounds", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("anf", help="convert between mask and ANF")
    _add_game_source(p)
    p.set_defaults(func=cmd_anf)

    p = sub.add_parser("verify-nga19", help="census of composed 2-variable function pairs")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, AnfParseError, ValueError) as exc:
        print(f"nlgames {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ReportError, OSError) as exc:
        print(f"nlgames {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
