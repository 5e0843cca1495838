"""Seeded differential fuzzing of the string path against the array oracle."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import FenstringError, NoPiecesError
from .fen_codec import START_FEN
from .move_apply import ApplyOptions, apply_move
from .oracle import oracle_apply, random_pseudo_move


@dataclass
class FuzzReport:
    seed: int
    iterations: int
    positions: int
    mismatches: int
    first_counterexample: Optional[Tuple[str, str, str, str]] = None  # fen, move, string, array

    def format(self) -> str:
        lines = [
            f"seed: {self.seed}",
            f"iterations: {self.iterations}",
            f"positions visited: {self.positions}",
            f"mismatches: {self.mismatches}",
        ]
        if self.first_counterexample:
            fen, move, string_fen, array_fen = self.first_counterexample
            lines += [
                "first counterexample:",
                f"  position: {fen}",
                f"  move:     {move}",
                f"  string:   {string_fen}",
                f"  array:    {array_fen}",
            ]
        return "\n".join(lines)


def fuzz_pairs(iterations: int, seed: int, options: ApplyOptions = ApplyOptions(),
               start_fen: str = START_FEN):
    """Yield (fen, move) pairs along a deterministic pseudo-move chain.

    The chain restarts from the seed position when the side to move has
    no pieces left.
    """
    rng = random.Random(seed)
    fen = start_fen
    for _ in range(iterations):
        try:
            move = random_pseudo_move(fen, rng.randrange(2**32))
        except NoPiecesError:
            fen = start_fen
            move = random_pseudo_move(fen, rng.randrange(2**32))
        yield fen, move
        fen = apply_move(fen, move, options).fen_after


def differential_fuzz(iterations: int, seed: int,
                      options: ApplyOptions = ApplyOptions()) -> FuzzReport:
    """Compare apply_move against oracle_apply over a fuzzed chain.

    A pair mismatches when the two paths return different FENs or raise
    different error codes.
    """
    mismatches = 0
    positions = 0
    first = None
    for fen, move in fuzz_pairs(iterations, seed, options):
        try:
            string_fen = apply_move(fen, move, options).fen_after
        except FenstringError as exc:
            string_fen = f"<{exc.code}>"
        try:
            array_fen = oracle_apply(fen, move, options)
        except FenstringError as exc:
            array_fen = f"<{exc.code}>"
        positions += 1
        if string_fen != array_fen:
            mismatches += 1
            if first is None:
                first = (fen, move, string_fen, array_fen)
    return FuzzReport(seed, iterations, positions, mismatches, first)
