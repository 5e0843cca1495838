"""Rank-segment expansion/contraction and square indexing.

The core string mechanic: a compact segment like "1b3RN1" expands to
exactly 8 slots ("1b111RN1", each empty square a single '1') so that a
square's file index equals its slot index; runs of '1' contract back to
their decimal count.
"""

from .errors import BadExpandedRankError, BadSegmentError, OutOfRangeError
from .fen_codec import PIECE_LETTERS, RUN_DIGITS

_SLOT_CHARS = frozenset(PIECE_LETTERS + "1")


def expand_rank(segment: str) -> str:
    """Expand a compact rank segment to its 8-slot form ("1b3RN1" -> "1b111RN1")."""
    out = []
    for ch in segment:
        if ch in RUN_DIGITS:
            out.append("1" * int(ch))
        elif ch in PIECE_LETTERS:
            out.append(ch)
        else:
            raise BadSegmentError(f"bad character {ch!r} in segment {segment!r}")
    expanded = "".join(out)
    if len(expanded) != 8:
        raise BadSegmentError(f"segment {segment!r} spans {len(expanded)} squares, expected 8")
    return expanded


def contract_rank(expanded: str) -> str:
    """Contract an 8-slot rank back to compact form ("11111R1k" -> "5R1k")."""
    if len(expanded) != 8 or any(ch not in _SLOT_CHARS for ch in expanded):
        raise BadExpandedRankError(f"bad expanded rank: {expanded!r}")
    out = []
    run = 0
    for ch in expanded:
        if ch == "1":
            run += 1
        else:
            if run:
                out.append(str(run))
                run = 0
            out.append(ch)
    if run:
        out.append(str(run))
    return "".join(out)


def segment_index(rank: int) -> int:
    """Placement-segment index of a rank: the first segment is rank 8."""
    if not 1 <= rank <= 8:
        raise OutOfRangeError(f"rank out of range: {rank}")
    return 8 - rank


def file_index(letter: str) -> int:
    """'a' -> 0 ... 'h' -> 7; equals the slot index within an expanded rank."""
    if len(letter) != 1 or not "a" <= letter <= "h":
        raise OutOfRangeError(f"file out of range: {letter!r}")
    return ord(letter) - ord("a")
