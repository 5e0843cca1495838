"""Apply a coordinate move directly to a FEN string.

Only the rank segment(s) touched by the move are expanded, rewritten and
contracted; every other segment is carried over character-for-character.
No board array is built at any point. Moves are applied as written:
chess legality (checks, pins, blocked paths) is deliberately not
enforced, so the result is a faithful transcription of the move.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import (
    BadCastleError,
    BadMoveSyntaxError,
    BadPromotionPieceError,
    EmptyOriginError,
    FriendlyCaptureError,
    MissingPromotionError,
    WrongColorError,
)
from .fen_codec import BLACK, WHITE, CastlingRights, Piece, Square, parse_fen
from .segment_ops import contract_rank, expand_rank, segment_index

_MOVE_RE = re.compile(r"^([a-h][1-8])-?([a-h][1-8])([qrbnQRBN])?$")

# corner square -> the castling right it hosts
_CORNER_RIGHTS = {
    (7, 1): "white_kingside",
    (0, 1): "white_queenside",
    (7, 8): "black_kingside",
    (0, 8): "black_queenside",
}


@dataclass(frozen=True)
class Move:
    from_square: Square
    to_square: Square
    promotion: Optional[str] = None  # kind letter 'Q','R','B','N'


@dataclass(frozen=True)
class ApplyOptions:
    ep_mode: str = "always"  # or "adjacent-only"
    clock_mode: str = "standard"  # or "frozen"
    validation: str = "lenient"  # or "strict"


@dataclass(frozen=True)
class ApplyOutcome:
    fen_after: str
    segments_touched: frozenset
    was_capture: bool
    was_pawn_move: bool
    special: Optional[str] = None  # castle-kingside / castle-queenside /
    # en-passant-capture / promotion


def parse_move(text: str) -> Move:
    """Parse "e2e4", "e2-e4" or "e7e8q" (promotion suffix, any case)."""
    m = _MOVE_RE.match(text)
    if not m:
        raise BadMoveSyntaxError(f"bad move syntax: {text!r}")
    from_square = Square.from_name(m.group(1))
    to_square = Square.from_name(m.group(2))
    if from_square == to_square:
        raise BadMoveSyntaxError(f"origin equals destination in {text!r}")
    promotion = m.group(3).upper() if m.group(3) else None
    return Move(from_square, to_square, promotion)


def update_castling_rights(
    rights: CastlingRights,
    mover: Piece,
    from_square: Square,
    to_square: Square,
    captured: Optional[Piece] = None,
) -> CastlingRights:
    """Drop rights invalidated by the move; rights are never regained.

    A king move clears both rights of its color; a rook leaving a corner
    clears that corner's right; a capture landing on a corner clears the
    right hosted there.
    """
    flags = {
        "white_kingside": rights.white_kingside,
        "white_queenside": rights.white_queenside,
        "black_kingside": rights.black_kingside,
        "black_queenside": rights.black_queenside,
    }
    if mover.kind == "K":
        side = "white" if mover.color == WHITE else "black"
        flags[side + "_kingside"] = False
        flags[side + "_queenside"] = False
    if mover.kind == "R":
        hit = _CORNER_RIGHTS.get((from_square.file, from_square.rank))
        if hit:
            flags[hit] = False
    if captured is not None:
        hit = _CORNER_RIGHTS.get((to_square.file, to_square.rank))
        if hit:
            flags[hit] = False
    return CastlingRights(**flags)


def derive_en_passant(
    placement_after,
    mover: Piece,
    from_square: Square,
    to_square: Square,
    ep_mode: str = "always",
) -> Optional[Square]:
    """En-passant target created by the move, if any.

    Only a same-file two-rank pawn move qualifies. Mode "always" records
    the square behind the pawn unconditionally; "adjacent-only" records
    it only when an enemy pawn sits on an adjacent file of the landing
    rank (the 'Pp'/'pP' pattern) in the post-move placement.
    """
    if mover.kind != "P":
        return None
    if from_square.file != to_square.file:
        return None
    # only a 2->4 or 7->5 style push yields a target on rank 3/6; other
    # two-rank pseudo-pushes would put the target on an illegal rank
    if {from_square.rank, to_square.rank} not in ({2, 4}, {5, 7}):
        return None
    target = Square(to_square.file, (from_square.rank + to_square.rank) // 2)
    if ep_mode == "always":
        return target
    enemy_pawn = "p" if mover.color == WHITE else "P"
    row = expand_rank(placement_after[segment_index(to_square.rank)])
    for f in (to_square.file - 1, to_square.file + 1):
        if 0 <= f <= 7 and row[f] == enemy_pawn:
            return target
    return None


def update_clocks(
    halfmove: int,
    fullmove: int,
    mover: Piece,
    was_capture: bool,
    clock_mode: str = "standard",
):
    """Standard: halfmove resets on pawn move/capture else +1; fullmove +1
    after a black move. Frozen: both pass through unchanged."""
    if clock_mode == "frozen":
        return halfmove, fullmove
    halfmove = 0 if (mover.kind == "P" or was_capture) else halfmove + 1
    if mover.color == BLACK:
        fullmove += 1
    return halfmove, fullmove


def apply_move(fen: str, move, options: ApplyOptions = ApplyOptions()) -> ApplyOutcome:
    """Apply a move to a FEN string by localized segment rewriting.

    ``move`` may be a move string or a parsed Move. Raises a MoveError
    subclass when the move cannot be transcribed (empty origin, wrong
    color, missing promotion, bad castle).
    """
    record = parse_fen(fen, options.validation)
    mv = parse_move(move) if isinstance(move, str) else move
    from_sq, to_sq = mv.from_square, mv.to_square

    ranks = list(record.ranks)
    from_i = segment_index(from_sq.rank)
    to_i = segment_index(to_sq.rank)
    origin_row = list(expand_rank(ranks[from_i]))
    dest_row = origin_row if to_i == from_i else list(expand_rank(ranks[to_i]))

    mover_letter = origin_row[from_sq.file]
    if mover_letter == "1":
        raise EmptyOriginError(f"no piece on {from_sq.name}")
    mover = Piece.from_letter(mover_letter)
    if mover.color != record.side:
        raise WrongColorError(f"piece on {from_sq.name} is not {record.side!r} to move")

    target_letter = dest_row[to_sq.file]
    captured = Piece.from_letter(target_letter) if target_letter != "1" else None
    if captured and options.validation == "strict" and captured.color == mover.color:
        raise FriendlyCaptureError(f"own piece on {to_sq.name}")
    was_capture = captured is not None

    is_pawn = mover.kind == "P"
    if is_pawn and to_sq.rank in (1, 8) and mv.promotion is None:
        raise MissingPromotionError(f"pawn reaches {to_sq.name} without promotion piece")
    if mv.promotion is not None and not (is_pawn and to_sq.rank in (1, 8)):
        raise BadPromotionPieceError("promotion suffix only valid for a pawn reaching rank 1/8")

    special = None
    is_castle = (
        mover.kind == "K"
        and from_sq.rank == to_sq.rank
        and to_sq.rank in (1, 8)
        and abs(from_sq.file - to_sq.file) == 2
        and to_sq.file in (2, 6)
    )
    is_ep_capture = (
        is_pawn
        and record.en_passant is not None
        and to_sq == record.en_passant
        and abs(from_sq.file - to_sq.file) == 1
        and abs(from_sq.rank - to_sq.rank) == 1
    )

    # placement rewrite, at most two expanded segments
    origin_row[from_sq.file] = "1"
    landing = mover_letter
    if mv.promotion is not None:
        landing = mv.promotion if mover.color == WHITE else mv.promotion.lower()
        special = "promotion"
    dest_row[to_sq.file] = landing

    if is_castle:
        kingside = to_sq.file == 6
        rook_letter = "R" if mover.color == WHITE else "r"
        rook_from = 7 if kingside else 0
        rook_to = 5 if kingside else 3
        if dest_row[rook_from] != rook_letter:
            raise BadCastleError(f"no {rook_letter!r} on castling corner of rank {to_sq.rank}")
        dest_row[rook_from] = "1"
        dest_row[rook_to] = rook_letter
        special = "castle-kingside" if kingside else "castle-queenside"
    elif is_ep_capture:
        # bypassed pawn sits behind the target, in the mover's origin rank
        origin_row[to_sq.file] = "1"
        was_capture = True
        special = "en-passant-capture"

    ranks[from_i] = contract_rank("".join(origin_row))
    if to_i != from_i:
        ranks[to_i] = contract_rank("".join(dest_row))

    new_rights = update_castling_rights(record.castling, mover, from_sq, to_sq, captured)
    new_ep = derive_en_passant(ranks, mover, from_sq, to_sq, options.ep_mode)
    halfmove, fullmove = update_clocks(
        record.halfmove, record.fullmove, mover, was_capture, options.clock_mode
    )

    fen_after = " ".join(
        (
            "/".join(ranks),
            BLACK if record.side == WHITE else WHITE,
            new_rights.to_text(),
            new_ep.name if new_ep else "-",
            str(halfmove),
            str(fullmove),
        )
    )
    if options.validation == "strict":
        # closure: the result must itself pass strict validation
        parse_fen(fen_after, "strict")

    return ApplyOutcome(
        fen_after=fen_after,
        segments_touched=frozenset((from_i, to_i)),
        was_capture=was_capture,
        was_pawn_move=is_pawn,
        special=special,
    )


def play_sequence(fen: str, moves, options: ApplyOptions = ApplyOptions()):
    """Apply moves in order; returns one FEN per ply.

    On failure the first failing ply's error is re-raised with a ``ply``
    attribute (1-based) attached.
    """
    out = []
    current = fen
    for i, move in enumerate(moves, start=1):
        try:
            current = apply_move(current, move, options).fen_after
        except Exception as exc:
            exc.ply = i
            raise
        out.append(current)
    return out
