import itertools

import pytest

from editrecon.balls import (
    BallKind,
    ball,
    intersection_size,
    levenshtein_radius,
    n_sub_formula,
    sub_coverage_formula,
)
from editrecon.words import Word

from conftest import all_words


def w(text):
    return Word.parse(text)


def runs(word):
    return 1 + sum(1 for a, b in zip(word.symbols, word.symbols[1:]) if a != b)


class TestBallKind:
    def test_parse_names(self):
        assert BallKind.parse("edit") == BallKind.EDIT
        assert BallKind.parse("St:2") == BallKind("S", 2)
        assert BallKind.parse("Dt:3") == BallKind("D", 3)

    def test_radius_one_aliases(self):
        x = w("q3:0120")
        assert ball(x, BallKind("S", 1)) == ball(x, BallKind.S)
        assert ball(x, BallKind("D", 1)) == ball(x, BallKind.D)

    @pytest.mark.parametrize("name", ["X", "St:0", "IDt:2", "St:x"])
    def test_bad_names(self, name):
        with pytest.raises(ValueError):
            BallKind.parse(name)

    def test_no_radius_on_union_kinds(self):
        with pytest.raises(ValueError):
            BallKind("EDIT", 2)


class TestBall:
    def test_insertion_ball_example(self):
        got = ball(w("q2:00"), BallKind.I)
        assert got == {w("q2:000"), w("q2:100"), w("q2:010"), w("q2:001")}
        assert len(got) == 2 * (2 - 1) + 2  # n(q-1) + q

    def test_deletion_ball_example(self):
        assert ball(w("q2:01"), BallKind.D) == {w("q2:0"), w("q2:1")}

    def test_substitution_ball_size(self):
        for word in (w("q2:0110"), w("q4:0123"), w("q3:2")):
            assert len(ball(word, BallKind.S)) == len(word) * (word.q - 1) + 1

    def test_substitution_ball_contains_centre(self):
        x = w("q3:012")
        assert x in ball(x, BallKind.S)
        assert x not in ball(x, BallKind.D)
        assert x not in ball(x, BallKind.I)

    def test_deletion_ball_size_equals_runs(self):
        for word in all_words(2, 5) + all_words(3, 4):
            if len(word):
                assert len(ball(word, BallKind.D)) == runs(word)

    def test_union_kinds_are_set_unions(self):
        x = w("q3:0102")
        s, d, i = ball(x, BallKind.S), ball(x, BallKind.D), ball(x, BallKind.I)
        assert ball(x, BallKind.SD) == s | d
        assert ball(x, BallKind.SI) == s | i
        assert ball(x, BallKind.ID) == i | d
        assert ball(x, BallKind.EDIT) == s | i | d

    def test_radius_two_balls(self):
        x = w("q2:0110")
        assert ball(x, BallKind("D", 2)) == {
            Word(2, x.symbols[:i] + x.symbols[i + 1 : j] + x.symbols[j + 1 :])
            for i in range(4)
            for j in range(i + 1, 4)
        }
        assert len(ball(x, BallKind("S", 2))) == 1 + 4 + 6  # Hamming ball of radius 2 at q=2

    def test_deletion_needs_enough_symbols(self):
        with pytest.raises(ValueError):
            ball(Word.from_symbols(2, []), BallKind.D)
        with pytest.raises(ValueError):
            ball(w("q2:1"), BallKind("D", 2))


class TestIntersectionSize:
    def test_worked_deletion_pairs(self):
        assert intersection_size(w("q2:0101"), w("q2:1010"), BallKind.D) == 2
        assert intersection_size(w("q2:0111"), w("q2:1110"), BallKind.D) == 1

    def test_distance_one_substitution_deletion(self):
        for q in (2, 3, 4):
            x = Word.from_symbols(q, [0, 1, 0, 1])
            y = Word.from_symbols(q, [0, 1, 1, 1])
            assert intersection_size(x, y, BallKind.SD) == q + 1

    def test_self_intersection_is_ball_size(self):
        x = w("q2:00110")
        assert intersection_size(x, x, BallKind.D) == len(ball(x, BallKind.D))

    def test_symmetry_and_component_additivity(self):
        words = all_words(3, 3)
        kinds = [BallKind.D, BallKind.I, BallKind.ID, BallKind.SD, BallKind.SI, BallKind.EDIT]
        for x, y in itertools.combinations(words, 2):
            for kind in kinds:
                forward = intersection_size(x, y, kind)
                assert forward == intersection_size(y, x, kind)
                # agrees with the raw intersection of the materialised union balls
                assert forward == len(ball(x, kind) & ball(y, kind))
        for x, y in itertools.combinations(words, 2):
            d = intersection_size(x, y, BallKind.D)
            i = intersection_size(x, y, BallKind.I)
            s = intersection_size(x, y, BallKind.S)
            assert intersection_size(x, y, BallKind.ID) == d + i
            assert intersection_size(x, y, BallKind.SD) == s + d
            assert intersection_size(x, y, BallKind.SI) == s + i
            assert intersection_size(x, y, BallKind.EDIT) == s + d + i

    def test_single_indel_intersections_bounded_by_two(self):
        for q, n in ((2, 5), (3, 4)):
            for x, y in itertools.combinations(all_words(q, n), 2):
                assert intersection_size(x, y, BallKind.D) <= 2
                assert intersection_size(x, y, BallKind.I) <= 2

    def test_deletion_empty_iff_insertion_empty(self):
        for q, n in ((2, 5), (3, 4)):
            for x, y in itertools.combinations(all_words(q, n), 2):
                d_empty = intersection_size(x, y, BallKind.D) == 0
                i_empty = intersection_size(x, y, BallKind.I) == 0
                assert d_empty == i_empty

    def test_mismatched_inputs(self):
        with pytest.raises(ValueError):
            intersection_size(w("q2:01"), w("q2:011"), BallKind.D)
        with pytest.raises(ValueError):
            intersection_size(w("q2:01"), w("q3:01"), BallKind.D)


class TestSubstitutionFormulas:
    def test_radius_one_cases(self):
        for n, q in ((5, 2), (6, 3), (4, 7)):
            assert n_sub_formula(n, q, 1, 1) == q
            assert n_sub_formula(n, q, 1, 2) == 2
            for d in range(3, n + 1):
                assert n_sub_formula(n, q, 1, d) == 0

    @pytest.mark.parametrize("t", [1, 2, 3])
    def test_binary_extremal_distance(self, t):
        import math

        assert n_sub_formula(4 * t, 2, t, 2 * t) == math.comb(2 * t, t)

    def test_formula_matches_enumeration_everywhere(self):
        # the size depends only on the distance: check every pair
        for q, t, n in ((2, 1, 5), (2, 2, 5), (3, 1, 4), (3, 2, 4)):
            kind = BallKind("S", t)
            for x, y in itertools.combinations(all_words(q, n), 2):
                d = sum(a != b for a, b in zip(x.symbols, y.symbols))
                assert n_sub_formula(n, q, t, d) == intersection_size(x, y, kind)

    def test_coverage_formula(self):
        assert sub_coverage_formula(5, 2, 2) == 10
        for n in (4, 6, 9):
            assert sub_coverage_formula(n, 4, 1) == 4
            assert sub_coverage_formula(n, 2, 1) == 2

    def test_coverage_formula_matches_exhaustive_maximum(self):
        for q, t, n in ((2, 2, 5), (3, 1, 4), (3, 2, 4)):
            kind = BallKind("S", t)
            best = max(
                intersection_size(x, y, kind)
                for x, y in itertools.combinations(all_words(q, n), 2)
            )
            assert sub_coverage_formula(n, q, t) == best

    def test_formula_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            n_sub_formula(4, 2, 0, 1)
        with pytest.raises(ValueError):
            n_sub_formula(4, 2, 1, 0)
        with pytest.raises(ValueError):
            n_sub_formula(4, 2, 1, 5)
        with pytest.raises(ValueError):
            sub_coverage_formula(1, 2, 2)


class TestLevenshteinRadius:
    def test_worked_pairs(self):
        assert levenshtein_radius(w("q2:0101"), w("q2:1010")) == 1
        assert levenshtein_radius(w("q2:0111"), w("q2:1110")) == 1

    def test_identity_and_disjoint(self):
        x = w("q2:0011")
        assert levenshtein_radius(x, x) == 0
        assert levenshtein_radius(w("q2:00"), w("q2:11")) == 2

    def test_zero_only_for_equal(self):
        for x, y in itertools.combinations(all_words(2, 4), 2):
            assert levenshtein_radius(x, y) >= 1
