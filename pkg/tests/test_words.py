import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from editrecon.words import (
    Word,
    hamming_distance,
    has_period,
    inversions,
    longest_low_period_subword,
)

from conftest import brute_longest_low_period_subword, inversion_recount


def w(text):
    return Word.parse(text)


words_strategy = st.integers(2, 5).flatmap(
    lambda q: st.lists(st.integers(0, q - 1), max_size=14).map(lambda s: Word.from_symbols(q, s))
)


class TestWordType:
    def test_parse_and_format_round_trip(self):
        for text in ["q4:0132", "q2:", "q36:0z9a", "q3:00211"]:
            assert str(Word.parse(text)) == text

    def test_value_semantics(self):
        assert w("q2:0101") == w("q2:0101")
        assert w("q2:0101") != w("q4:0101")  # same symbols, different alphabet
        assert len({w("q2:01"), w("q2:01")}) == 1

    @pytest.mark.parametrize("text", ["0101", "q1:0", "q2:02", "q37:0", "qx:01", "q4-0132"])
    def test_bad_parse(self, text):
        with pytest.raises(ValueError):
            Word.parse(text)

    def test_out_of_range_symbol(self):
        with pytest.raises(ValueError):
            Word.from_symbols(2, [0, 2])

    def test_empty_word_allowed(self):
        assert len(Word.from_symbols(4, [])) == 0


class TestHammingDistance:
    def test_examples(self):
        assert hamming_distance(w("q2:0101"), w("q2:1010")) == 4
        x = w("q3:0212")
        assert hamming_distance(x, x) == 0
        assert hamming_distance(w("q2:0111"), w("q2:1110")) == 2

    def test_mismatch_errors(self):
        with pytest.raises(ValueError):
            hamming_distance(w("q2:01"), w("q2:011"))
        with pytest.raises(ValueError):
            hamming_distance(w("q2:01"), w("q3:01"))


class TestInversions:
    def test_examples(self):
        assert inversions(w("q3:012")) == 0
        assert inversions(w("q3:210")) == 3

    @pytest.mark.parametrize("m", [1, 2, 5, 9])
    @pytest.mark.parametrize("alpha,beta,q", [(1, 0, 2), (2, 0, 3), (3, 1, 4)])
    def test_core_swap_identity(self, m, alpha, beta, q):
        # Inv(α β^m) - Inv(β^m α) = m for α > β
        head = Word.from_symbols(q, [alpha] + [beta] * m)
        tail = Word.from_symbols(q, [beta] * m + [alpha])
        assert inversions(head) - inversions(tail) == m

    def test_sorted_and_reversed(self):
        assert inversions(w("q5:01234")) == 0
        assert inversions(w("q5:43210")) == 5 * 4 // 2

    @given(words_strategy)
    @settings(max_examples=200)
    def test_matches_double_loop_recount(self, word):
        assert inversions(word) == inversion_recount(word)

    @given(words_strategy, st.integers(1, 4))
    @settings(max_examples=100)
    def test_appending_max_symbol_block_preserves_count(self, word, block):
        # nothing smaller follows a trailing block of the top symbol
        extended = Word(word.q, word.symbols + bytes([word.q - 1] * block))
        assert inversions(extended) == inversions(word)
        assert inversion_recount(extended) == inversions(word)

    def test_mid_word_max_block_can_change_count(self):
        assert inversions(w("q2:110")) != inversions(w("q2:10"))

    @given(
        st.integers(2, 4).flatmap(
            lambda q: st.tuples(
                st.lists(st.integers(0, q - 1), max_size=5),
                st.lists(st.integers(0, q - 1), min_size=2, max_size=6),
                st.lists(st.integers(0, q - 1), max_size=5),
                st.randoms(use_true_random=False),
            ).map(lambda abc: (q,) + abc)
        )
    )
    @settings(max_examples=150)
    def test_core_permutation_cross_terms_cancel(self, parts):
        # swapping the middle for a permutation of itself changes the total
        # by exactly the change within the middle
        q, a, c, b, rnd = parts
        c_perm = list(c)
        rnd.shuffle(c_perm)
        x = Word.from_symbols(q, a + c + b)
        y = Word.from_symbols(q, a + c_perm + b)
        lhs = inversions(x) - inversions(y)
        rhs = inversions(Word.from_symbols(q, c)) - inversions(Word.from_symbols(q, c_perm))
        assert lhs == rhs


class TestPeriods:
    def test_has_period_examples(self):
        assert has_period(w("q2:0101"), 2)
        assert not has_period(w("q2:0110"), 2)
        assert has_period(w("q2:000"), 1)

    def test_has_period_requires_short_period(self):
        with pytest.raises(ValueError):
            has_period(w("q2:01"), 2)
        with pytest.raises(ValueError):
            has_period(w("q2:01"), 0)

    @given(words_strategy.filter(lambda x: len(x) >= 3), st.integers(1, 4))
    @settings(max_examples=150)
    def test_period_implies_multiples(self, word, k):
        for ell in range(1, len(word)):
            if has_period(word, ell) and k * ell < len(word):
                assert has_period(word, k * ell)


class TestLongestLowPeriodSubword:
    def test_frozen_examples(self):
        assert longest_low_period_subword(w("q2:010100"), 2) == 5
        assert longest_low_period_subword(w("q4:0123"), 1) == 1
        assert longest_low_period_subword(w("q2:0000"), 1) == 4

    def test_oracle_agrees_on_frozen_examples(self):
        assert brute_longest_low_period_subword(w("q2:010100"), 2) == 5
        assert brute_longest_low_period_subword(w("q4:0123"), 1) == 1

    @given(words_strategy, st.integers(1, 3))
    @settings(max_examples=200)
    def test_matches_sliding_window_oracle(self, word, ell):
        assert longest_low_period_subword(word, ell) == brute_longest_low_period_subword(word, ell)

    @given(words_strategy.filter(lambda x: len(x) >= 1), st.integers(1, 3))
    @settings(max_examples=100)
    def test_at_least_ell(self, word, ell):
        if len(word) >= ell:
            assert longest_low_period_subword(word, ell) >= ell

    def test_rejects_bad_bound(self):
        with pytest.raises(ValueError):
            longest_low_period_subword(w("q2:01"), 0)
