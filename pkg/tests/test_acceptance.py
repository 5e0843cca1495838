"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with `pytest -s tests/test_acceptance.py` to see them)."""

import random
import time

import pytest

from fenstring import (
    ApplyOptions,
    Piece,
    apply_move,
    board_from_fen,
    contract_rank,
    differential_fuzz,
    emit_legacy_forsyth,
    expand_rank,
    oracle_apply,
    parse_fen,
    parse_legacy_forsyth,
    serialize_fen,
    START_FEN,
)
from fenstring.cli import main as cli_main

from conftest import BAIRD_LEGACY, FIG1_FEN

FROZEN = ApplyOptions(clock_mode="frozen")


def check(criterion, condition):
    print(f"criterion {criterion}: {'PASS' if condition else 'FAIL'}")
    assert condition, f"acceptance criterion {criterion} failed"


def test_01_table_i_golden():
    after = apply_move(FIG1_FEN, "f7f6", FROZEN).fen_after
    check(1, after == "7N/1b4N1/5R1k/6b1/KBp4p/5q2/6Q1/7n b - - 0 1")


def test_02_table_ii_golden():
    after = apply_move(FIG1_FEN, "f7c7", FROZEN).fen_after
    check(2, after == "7N/1bR3N1/7k/6b1/KBp4p/5q2/6Q1/7n b - - 0 1")


def test_03_segment_mechanics():
    ok = (
        expand_rank("1b3RN1") == "1b111RN1"
        and contract_rank("1bR111N1") == "1bR3N1"
        and contract_rank("11111R1k") == "5R1k"
    )
    rng = random.Random(3)
    alphabet = "KQRBNPkqrbnp1"
    for _ in range(10000):
        expanded = "".join(rng.choice(alphabet) for _ in range(8))
        segment = contract_rank(expanded)
        ok = ok and contract_rank(expand_rank(segment)) == segment
    check(3, ok)


def test_04_mailbox_index():
    board = board_from_fen("1b6/1b6/8/8/8/8/8/7K w - - 0 1")
    check(4, board.cells[9] == Piece("B", "b") and board_from_fen(FIG1_FEN).cells[9] == Piece("B", "b"))


def test_05_specials_suite():
    # (a) castling
    castle_fen = "4k3/8/8/8/8/8/8/4K2R w K - 0 1"
    castled = apply_move(castle_fen, "e1g1").fen_after
    ok = castled == "4k3/8/8/8/8/8/8/5RK1 b - - 1 1"
    ok = ok and castled == oracle_apply(castle_fen, "e1g1")
    # (b) en passant capture: bypassed pawn removed, two segments touched
    ep_fen = "8/8/8/3pP3/8/8/8/8 w - d6 0 4"
    outcome = apply_move(ep_fen, "e5d6")
    ok = ok and outcome.fen_after == "8/8/3P4/8/8/8/8/8 b - - 0 4"
    ok = ok and len(outcome.segments_touched) == 2
    ok = ok and "p" not in outcome.fen_after.split()[0]
    ok = ok and outcome.fen_after == oracle_apply(ep_fen, "e5d6")
    # (c) promotion replaces the pawn letter
    promo_fen = "8/4P3/8/8/8/8/8/8 w - - 0 1"
    promoted = apply_move(promo_fen, "e7e8q").fen_after
    ok = ok and promoted == "4Q3/8/8/8/8/8/8/8 b - - 0 1"
    ok = ok and promoted == oracle_apply(promo_fen, "e7e8q")
    check(5, ok)


def test_06_oracle_equivalence_100k():
    start = time.perf_counter()
    mismatches = 0
    for i, (ep_mode, clock_mode) in enumerate(
        [
            ("always", "standard"),
            ("always", "frozen"),
            ("adjacent-only", "standard"),
            ("adjacent-only", "frozen"),
        ]
    ):
        options = ApplyOptions(ep_mode=ep_mode, clock_mode=clock_mode)
        report = differential_fuzz(25000, seed=1000 + i, options=options)
        mismatches += report.mismatches
        if report.first_counterexample:
            print("counterexample:", report.first_counterexample)
    elapsed = time.perf_counter() - start
    check(6, mismatches == 0 and elapsed < 60.0)


def test_07_locality(fuzz_corpus):
    ok = True
    for fen, move, outcome in fuzz_corpus:
        if outcome.special in ("castle-kingside", "castle-queenside", "en-passant-capture"):
            continue
        from_rank, to_rank = int(move[1]), int(move[3])
        expected = 1 if from_rank == to_rank else 2
        ok = ok and len(outcome.segments_touched) == expected
        before = fen.split()[0].split("/")
        after = outcome.fen_after.split()[0].split("/")
        for i in range(8):
            if i not in outcome.segments_touched:
                ok = ok and before[i] == after[i]
    check(7, ok)


def test_08_round_trips(fuzz_corpus):
    corpus = sorted({outcome.fen_after for _, _, outcome in fuzz_corpus})
    ok = len(corpus) >= 1000
    for fen in corpus:
        ok = ok and serialize_fen(parse_fen(fen)) == fen
        placement = parse_fen(fen).ranks
        ok = ok and parse_legacy_forsyth(emit_legacy_forsyth(placement)) == placement
    baird = "/".join(parse_legacy_forsyth(BAIRD_LEGACY))
    widths = [len(expand_rank(seg)) for seg in baird.split("/")]
    ok = ok and widths == [8] * 8
    parse_fen(baird + " w - - 0 1", "strict")
    check(8, ok)


def test_09_bench_report(capsys):
    code = cli_main(["bench", "--iterations", "2000"])
    out = capsys.readouterr().out
    with capsys.disabled():
        check(9, code == 0 and out.count("ops/s") == 2 and "ratio" in out)


def test_10_clock_semantics():
    game = (
        "e2e4 e7e5 g1f3 b8c6 f1b5 a7a6 b5a4 g8f6 e1g1 f8e7 "
        "f1e1 b7b5 a4b3 d7d6 c2c3 e8g8 h2h3 c6a5 b3c2 c7c5"
    ).split()
    assert len(game) == 20
    ok = True
    fen = START_FEN
    for ply, move in enumerate(game, start=1):
        side_before = fen.split()[1]
        fullmove_before = int(fen.split()[5])
        string_fen = apply_move(fen, move).fen_after
        array_fen = oracle_apply(fen, move)
        ok = ok and string_fen.split()[4:] == array_fen.split()[4:]
        fullmove_after = int(string_fen.split()[5])
        expected_bump = 1 if side_before == "b" else 0
        ok = ok and fullmove_after == fullmove_before + expected_bump
        fen = string_fen
    check(10, ok)
