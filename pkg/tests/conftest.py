import random

import pytest
from hypothesis import strategies as st

from fenstring import START_FEN, contract_rank

FIG1_FEN = "7N/1b3RN1/7k/6b1/KBp4p/5q2/6Q1/7n w - - 0 1"
EMPTY_FEN = "8/8/8/8/8/8/8/8 w - - 0 1"

BAIRD_LEGACY = (
    "1 B 6, 2 kt 5, p 1 Kt 1 P 2 R, P 1 K 3 Kt 1, "
    "4 P k 2, 1 Q 2 p 2 p, 6 kt P, 1 B 4 R 1."
)
BAIRD_PLACEMENT = "1B6/2n5/p1N1P2R/P1K3N1/4Pk2/1Q2p2p/6nP/1B4R1"

_SLOT_ALPHABET = "KQRBNPkqrbnp1"

# compact rank segment, generated through its expanded form
segments = st.text(alphabet=_SLOT_ALPHABET, min_size=8, max_size=8).map(contract_rank)

_castling_fields = st.sets(st.sampled_from("KQkq")).map(
    lambda s: "".join(c for c in "KQkq" if c in s) or "-"
)
_ep_fields = st.one_of(
    st.just("-"),
    st.builds(lambda f, r: f + r, st.sampled_from("abcdefgh"), st.sampled_from("36")),
)


@st.composite
def fens(draw):
    """Canonical, grammatically valid (not necessarily legal) FEN text."""
    placement = "/".join(draw(segments) for _ in range(8))
    side = draw(st.sampled_from("wb"))
    castling = draw(_castling_fields)
    ep = draw(_ep_fields)
    halfmove = draw(st.integers(0, 300))
    fullmove = draw(st.integers(1, 999))
    return f"{placement} {side} {castling} {ep} {halfmove} {fullmove}"


def pseudo_game(iterations, seed, options=None, start_fen=START_FEN):
    """(fen_before, move, outcome) triples along a seeded pseudo-move chain."""
    from fenstring import ApplyOptions, apply_move, random_pseudo_move
    from fenstring.errors import NoPiecesError

    options = options or ApplyOptions()
    rng = random.Random(seed)
    fen = start_fen
    out = []
    for _ in range(iterations):
        try:
            move = random_pseudo_move(fen, rng.randrange(2**32))
        except NoPiecesError:
            fen = start_fen
            move = random_pseudo_move(fen, rng.randrange(2**32))
        outcome = apply_move(fen, move, options)
        out.append((fen, move, outcome))
        fen = outcome.fen_after
    return out


@pytest.fixture(scope="session")
def fuzz_corpus():
    """Shared chain of 20k applied pseudo-moves under default options."""
    return pseudo_game(20000, seed=20260824)
