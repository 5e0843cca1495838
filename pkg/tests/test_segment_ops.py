import pytest
from hypothesis import given
from hypothesis import strategies as st

from fenstring import contract_rank, expand_rank, file_index, segment_index
from fenstring.errors import BadExpandedRankError, BadSegmentError, OutOfRangeError
from fenstring.fen_codec import PIECE_LETTERS

from conftest import segments


class TestExpand:
    @pytest.mark.parametrize(
        "segment,expanded",
        [
            ("1b3RN1", "1b111RN1"),
            ("8", "11111111"),
            ("KBp4p", "KBp1111p"),
            ("7k", "1111111k"),
            ("rnbqkbnr", "rnbqkbnr"),
        ],
    )
    def test_examples(self, segment, expanded):
        assert expand_rank(segment) == expanded

    @pytest.mark.parametrize("segment", ["", "7", "4R4", "1b3RNx", "9"])
    def test_rejections(self, segment):
        with pytest.raises(BadSegmentError):
            expand_rank(segment)


class TestContract:
    @pytest.mark.parametrize(
        "expanded,segment",
        [
            ("1bR111N1", "1bR3N1"),
            ("11111R1k", "5R1k"),
            ("11111111", "8"),
            ("1b1111N1", "1b4N1"),
        ],
    )
    def test_examples(self, expanded, segment):
        assert contract_rank(expanded) == segment

    @pytest.mark.parametrize("expanded", ["", "1111111", "111111111", "11x11111", "11211111"])
    def test_rejections(self, expanded):
        with pytest.raises(BadExpandedRankError):
            contract_rank(expanded)


class TestIndexing:
    def test_segment_index(self):
        assert segment_index(8) == 0
        assert segment_index(7) == 1
        assert segment_index(1) == 7

    def test_file_index(self):
        assert file_index("f") == 5
        assert file_index("c") == 2
        assert file_index("a") == 0
        assert file_index("h") == 7

    @pytest.mark.parametrize("rank", [0, 9, -1])
    def test_segment_index_range(self, rank):
        with pytest.raises(OutOfRangeError):
            segment_index(rank)

    @pytest.mark.parametrize("letter", ["i", "A", "", "ab"])
    def test_file_index_range(self, letter):
        with pytest.raises(OutOfRangeError):
            file_index(letter)


@given(segments)
def test_contract_of_expand_is_identity(segment):
    assert contract_rank(expand_rank(segment)) == segment


@given(st.text(alphabet=PIECE_LETTERS + "1", min_size=8, max_size=8))
def test_expand_of_contract_is_identity(expanded):
    assert expand_rank(contract_rank(expanded)) == expanded


@given(segments)
def test_width_preserved(segment):
    assert len(expand_rank(segment)) == 8


def test_shift_lemma_exhaustive():
    # moving a lone piece k files equals clearing its slot and writing its
    # letter k slots away, checked for every letter, origin and destination
    for letter in PIECE_LETTERS:
        for start in range(8):
            for end in range(8):
                if end == start:
                    continue
                before = ["1"] * 8
                before[start] = letter
                after = ["1"] * 8
                after[end] = letter
                moved = list(expand_rank(contract_rank("".join(before))))
                moved[start] = "1"
                moved[end] = letter
                assert contract_rank("".join(moved)) == contract_rank("".join(after))
