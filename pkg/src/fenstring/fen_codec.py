"""FEN parsing and serialization.

A FEN record has six space-separated fields:

    <placement> <side> <castling> <en-passant> <halfmove> <fullmove>

The placement field is eight slash-separated rank segments, rank 8 first.
Parsing is grammar-only by default ("lenient"); "strict" additionally
requires exactly one king per side, no pawns on ranks 1/8 and an
en-passant square consistent with the side to move.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import (
    AdjacentDigitsError,
    BadCastlingFieldError,
    BadClockError,
    BadEnPassantFieldError,
    BadPieceLetterError,
    BadSideCharError,
    BadSquareError,
    RankWidthError,
    SegmentCountError,
    ValidationError,
)

WHITE = "w"
BLACK = "b"

PIECE_LETTERS = "KQRBNPkqrbnp"
PIECE_KINDS = "KQRBNP"
RUN_DIGITS = "12345678"

START_FEN = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1"


@dataclass(frozen=True)
class Square:
    """Board square; file 0..7 maps to 'a'..'h', rank 1..8."""

    file: int
    rank: int

    def __post_init__(self):
        if not (0 <= self.file <= 7 and 1 <= self.rank <= 8):
            raise BadSquareError(f"square out of range: file={self.file} rank={self.rank}")

    @classmethod
    def from_name(cls, name: str) -> "Square":
        if len(name) != 2 or name[0] not in "abcdefgh" or name[1] not in RUN_DIGITS:
            raise BadSquareError(f"bad square name: {name!r}")
        return cls(ord(name[0]) - ord("a"), int(name[1]))

    @property
    def name(self) -> str:
        return "abcdefgh"[self.file] + str(self.rank)


@dataclass(frozen=True)
class Piece:
    """A piece; kind is one of 'KQRBNP', color 'w' or 'b'."""

    kind: str
    color: str

    @classmethod
    def from_letter(cls, letter: str) -> "Piece":
        if letter not in PIECE_LETTERS:
            raise BadPieceLetterError(f"bad piece letter: {letter!r}")
        return cls(letter.upper(), WHITE if letter.isupper() else BLACK)

    @property
    def letter(self) -> str:
        return self.kind if self.color == WHITE else self.kind.lower()


@dataclass(frozen=True)
class CastlingRights:
    white_kingside: bool = False
    white_queenside: bool = False
    black_kingside: bool = False
    black_queenside: bool = False

    @classmethod
    def from_text(cls, field: str) -> "CastlingRights":
        """Accept any letter order on input; duplicates are rejected."""
        if field == "-":
            return cls()
        if not field or len(set(field)) != len(field) or any(c not in "KQkq" for c in field):
            raise BadCastlingFieldError(f"bad castling field: {field!r}")
        return cls("K" in field, "Q" in field, "k" in field, "q" in field)

    def to_text(self) -> str:
        """Canonical "KQkq" order, or "-" when no right is set."""
        out = ""
        if self.white_kingside:
            out += "K"
        if self.white_queenside:
            out += "Q"
        if self.black_kingside:
            out += "k"
        if self.black_queenside:
            out += "q"
        return out or "-"

    def __iter__(self):
        yield self.white_kingside
        yield self.white_queenside
        yield self.black_kingside
        yield self.black_queenside


@dataclass(frozen=True)
class FenRecord:
    """Fully parsed FEN; ranks[0] is rank 8, ranks[7] is rank 1."""

    ranks: tuple
    side: str
    castling: CastlingRights
    en_passant: Optional[Square]
    halfmove: int
    fullmove: int


def _check_segment(segment: str) -> None:
    """Validate one rank segment: legal characters, width 8, canonical runs."""
    width = 0
    prev_digit = False
    for ch in segment:
        if ch == "0":
            # a zero-length empty run is meaningless
            raise BadPieceLetterError(f"bad character '0' in segment {segment!r}")
        if ch in "123456789":
            if prev_digit:
                raise AdjacentDigitsError(f"adjacent digits in segment {segment!r}")
            width += int(ch)
            prev_digit = True
        elif ch in PIECE_LETTERS:
            width += 1
            prev_digit = False
        else:
            raise BadPieceLetterError(f"bad character {ch!r} in segment {segment!r}")
    if width != 8:
        raise RankWidthError(f"segment {segment!r} spans {width} squares, expected 8")


def _strict_checks(record: FenRecord) -> None:
    placement = "".join(record.ranks)
    for king in "Kk":
        n = placement.count(king)
        if n != 1:
            raise ValidationError(f"expected exactly one {king!r}, found {n}")
    for edge in (record.ranks[0], record.ranks[7]):
        if "P" in edge or "p" in edge:
            raise ValidationError(f"pawn on first/last rank in segment {edge!r}")
    if record.en_passant is not None:
        expected_rank = 6 if record.side == WHITE else 3
        if record.en_passant.rank != expected_rank:
            raise ValidationError(
                f"en-passant square {record.en_passant.name} inconsistent with "
                f"side {record.side!r} to move"
            )


def parse_fen(text: str, validation: str = "lenient") -> FenRecord:
    """Parse FEN text into a FenRecord, or raise a typed syntax error.

    Repeated/leading/trailing whitespace between fields is tolerated;
    everything else follows the grammar exactly.
    """
    fields = text.split()
    if len(fields) != 6:
        raise SegmentCountError(f"expected 6 space-separated fields, got {len(fields)}")
    placement, side, castling_field, ep_field, halfmove_field, fullmove_field = fields

    segments = placement.split("/")
    if len(segments) != 8:
        raise SegmentCountError(f"expected 8 rank segments, got {len(segments)}")
    for segment in segments:
        _check_segment(segment)

    if side not in (WHITE, BLACK):
        raise BadSideCharError(f"side field must be 'w' or 'b', got {side!r}")

    castling = CastlingRights.from_text(castling_field)

    if ep_field == "-":
        en_passant = None
    else:
        try:
            en_passant = Square.from_name(ep_field)
        except BadSquareError:
            raise BadEnPassantFieldError(f"bad en-passant field: {ep_field!r}") from None
        if en_passant.rank not in (3, 6):
            raise BadEnPassantFieldError(f"en-passant square {ep_field!r} not on rank 3 or 6")

    if not halfmove_field.isdigit():
        raise BadClockError(f"bad halfmove clock: {halfmove_field!r}")
    if not fullmove_field.isdigit() or int(fullmove_field) < 1:
        raise BadClockError(f"bad fullmove number: {fullmove_field!r}")

    record = FenRecord(
        ranks=tuple(segments),
        side=side,
        castling=castling,
        en_passant=en_passant,
        halfmove=int(halfmove_field),
        fullmove=int(fullmove_field),
    )
    if validation == "strict":
        _strict_checks(record)
    return record


def serialize_fen(record: FenRecord) -> str:
    """Serialize a record back to canonical FEN text."""
    return " ".join(
        (
            "/".join(record.ranks),
            record.side,
            record.castling.to_text(),
            record.en_passant.name if record.en_passant else "-",
            str(record.halfmove),
            str(record.fullmove),
        )
    )


def piece_at(record: FenRecord, square: Square) -> Optional[Piece]:
    """Return the piece on a square, or None if it is empty."""
    segment = record.ranks[8 - square.rank]
    col = 0
    for ch in segment:
        if ch in RUN_DIGITS:
            col += int(ch)
            if col > square.file:
                return None
        else:
            if col == square.file:
                return Piece.from_letter(ch)
            col += 1
    return None
