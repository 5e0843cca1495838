"""Command-line interface.

Exit statuses: 0 success, 1 internal failure (or fuzz mismatch), 2
input-format error, 3 move-application error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import FenSyntaxError, FenstringError, MoveError
from .fen_codec import CastlingRights, Square, parse_fen, serialize_fen
from .fuzzing import differential_fuzz, fuzz_pairs
from .legacy import parse_legacy_forsyth
from .move_apply import ApplyOptions, apply_move
from .oracle import oracle_apply

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_MOVE = 3


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _add_apply_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--ep-mode", choices=("always", "adjacent-only"), default="always")
    parser.add_argument("--clock-mode", choices=("standard", "frozen"), default="standard")
    parser.add_argument("--validation", choices=("lenient", "strict"), default="lenient")


def _options_from(args) -> ApplyOptions:
    return ApplyOptions(
        ep_mode=args.ep_mode, clock_mode=args.clock_mode, validation=args.validation
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fenstring",
        description="Apply chess moves directly to FEN strings by segment rewriting.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="parse a FEN and echo its canonical form")
    p.add_argument("fen")
    p.add_argument("--validation", choices=("lenient", "strict"), default="lenient")

    p = sub.add_parser("apply", help="apply one move to a FEN")
    p.add_argument("fen")
    p.add_argument("move")
    _add_apply_options(p)
    p.add_argument("--output", choices=("plain", "record"), default="plain")

    p = sub.add_parser("play", help="apply a newline-separated moves file, printing each FEN")
    p.add_argument("fen")
    p.add_argument("moves_file")
    _add_apply_options(p)

    p = sub.add_parser("fuzz", help="differential fuzz: string path vs array oracle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=_positive_int, default=1000)
    _add_apply_options(p)

    p = sub.add_parser("bench", help="throughput of the string path vs the array path")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--iterations", type=_positive_int, default=10000)
    _add_apply_options(p)

    p = sub.add_parser("convert-forsyth", help="convert 1883 Forsyth notation to FEN")
    p.add_argument("text")
    p.add_argument("--side", choices=("w", "b"), default="w")
    p.add_argument("--castling", default="-")
    p.add_argument("--ep", default="-")
    p.add_argument("--halfmove", type=int, default=0)
    p.add_argument("--fullmove", type=int, default=1)

    return parser


def cmd_validate(args) -> int:
    print(serialize_fen(parse_fen(args.fen, args.validation)))
    return EXIT_OK


def cmd_apply(args) -> int:
    outcome = apply_move(args.fen, args.move, _options_from(args))
    if args.output == "record":
        print(
            json.dumps(
                {
                    "fen_after": outcome.fen_after,
                    "segments_touched": sorted(outcome.segments_touched),
                    "was_capture": outcome.was_capture,
                    "was_pawn_move": outcome.was_pawn_move,
                    "special": outcome.special,
                    "error": None,
                }
            )
        )
    else:
        print(outcome.fen_after)
    return EXIT_OK


def cmd_play(args) -> int:
    with open(args.moves_file) as handle:
        moves = []
        for line in handle:
            line = line.split("#", 1)[0].strip()
            if line:
                moves.append(line)
    options = _options_from(args)
    fen = args.fen
    for ply, move in enumerate(moves, start=1):
        try:
            fen = apply_move(fen, move, options).fen_after
        except FenstringError as exc:
            print(f"ply {ply}: {exc.code}: {exc}", file=sys.stderr)
            return EXIT_MOVE if isinstance(exc, MoveError) else EXIT_INPUT
        print(fen)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    report = differential_fuzz(args.iterations, args.seed, _options_from(args))
    print(report.format())
    return EXIT_OK if report.mismatches == 0 else EXIT_INTERNAL


def cmd_bench(args) -> int:
    options = _options_from(args)
    workload = list(fuzz_pairs(args.iterations, args.seed, options))

    start = time.perf_counter()
    for fen, move in workload:
        apply_move(fen, move, options)
    string_secs = time.perf_counter() - start

    start = time.perf_counter()
    for fen, move in workload:
        oracle_apply(fen, move, options)
    array_secs = time.perf_counter() - start

    n = len(workload)
    print(f"iterations: {n}")
    print(f"string path: {n / string_secs:12.1f} ops/s  ({string_secs:.3f} s)")
    print(f"array path:  {n / array_secs:12.1f} ops/s  ({array_secs:.3f} s)")
    print(f"ratio (array/string throughput): {string_secs / array_secs:.3f}")
    return EXIT_OK


def cmd_convert_forsyth(args) -> int:
    placement = "/".join(parse_legacy_forsyth(args.text))
    CastlingRights.from_text(args.castling)
    if args.ep != "-":
        Square.from_name(args.ep)
    fen = (
        f"{placement} {args.side} {args.castling} {args.ep} "
        f"{args.halfmove} {args.fullmove}"
    )
    print(serialize_fen(parse_fen(fen)))
    return EXIT_OK


_HANDLERS = {
    "validate": cmd_validate,
    "apply": cmd_apply,
    "play": cmd_play,
    "fuzz": cmd_fuzz,
    "bench": cmd_bench,
    "convert-forsyth": cmd_convert_forsyth,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except MoveError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_MOVE
    except FenSyntaxError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
