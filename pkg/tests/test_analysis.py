import itertools
import math

import pytest

from editrecon.analysis import (
    coverage_of_words,
    optimal_code_size,
    read_coverage,
    verify_reconstruction,
)
from editrecon.balls import BallKind, intersection_size
from editrecon.codebooks import Codebook, Family
from editrecon.errors import ResourceLimitError
from editrecon.words import Word, hamming_distance

from conftest import all_words

KINDS = [BallKind.D, BallKind.I, BallKind.ID, BallKind.SD, BallKind.SI, BallKind.EDIT]


def _recursive_mis(neighbours: list[set[int]]) -> int:
    """Independent-set oracle: plain take-or-skip recursion with only the
    trivial remaining-vertices bound, no colouring."""
    n = len(neighbours)
    best = 0

    def rec(i: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) + (n - i) <= best:
            return
        if i == n:
            best = max(best, len(chosen))
            return
        if all(i not in neighbours[j] for j in chosen):
            chosen.append(i)
            rec(i + 1, chosen)
            chosen.pop()
        rec(i + 1, chosen)

    rec(0, [])
    return best


class TestReadCoverage:
    def test_full_space_values(self):
        cb = Codebook.make(Family.FULL, 6, 2)
        assert read_coverage(cb, BallKind.D).nu == 2
        assert read_coverage(cb, BallKind.EDIT).nu == 6
        cb = Codebook.make(Family.FULL, 5, 3)
        assert read_coverage(cb, BallKind.SI).nu == 5

    @pytest.mark.parametrize("q,n", [(2, 4), (2, 5), (3, 3)])
    def test_matches_blind_pair_scan(self, q, n):
        words = all_words(q, n)
        cb = Codebook.make(Family.FULL, n, q)
        for kind in KINDS:
            brute = max(intersection_size(x, y, kind) for x, y in itertools.combinations(words, 2))
            report = read_coverage(cb, kind)
            assert report.nu == brute
            assert intersection_size(*report.witness, kind) == report.nu

    def test_codebook_scan_matches_blind_pair_scan(self):
        cb = Codebook.make(Family.C0, 5, 3)
        words = cb.enumerate()
        for kind in (BallKind.D, BallKind.SD, BallKind.EDIT):
            brute = max(intersection_size(x, y, kind) for x, y in itertools.combinations(words, 2))
            assert read_coverage(cb, kind).nu == brute
            assert coverage_of_words(words, 3, kind).nu == brute

    def test_scale_guard(self):
        with pytest.raises(ResourceLimitError):
            read_coverage(Codebook.make(Family.FULL, 152, 4), BallKind.D)


class TestVerifyReconstruction:
    def test_construction_instance_passes(self):
        for c in range(3):
            for d in range(2):
                cb = Codebook.make(Family.CD, 8, 2, P=4, c=c, d=d)
                assert verify_reconstruction(cb, 2, BallKind.D).passed

    def test_parity_instance_passes(self):
        cb = Codebook.make(Family.C0, 6, 4)
        assert verify_reconstruction(cb, 5, BallKind.SD).passed

    def test_full_space_fails_with_witness(self):
        cb = Codebook.make(Family.FULL, 6, 2)
        result = verify_reconstruction(cb, 2, BallKind.D)
        assert not result.passed
        x, y = result.witness
        assert result.witness_intersection >= 2
        assert intersection_size(x, y, BallKind.D) == result.witness_intersection

    def test_rejects_bad_read_count(self):
        with pytest.raises(ValueError):
            verify_reconstruction(Codebook.make(Family.FULL, 4, 2), 0, BallKind.D)


class TestOptimalCodeSize:
    def test_trivial_when_reads_exceed_coverage(self):
        result = optimal_code_size(5, 2, 3, BallKind.D)  # full-space coverage is 2
        assert result.max_code_size == 2**5
        assert result.rho_exact == pytest.approx(0.0)

    def test_single_deletion_instance_matches_subset_search(self):
        # oracle: full independent-set search over all 2^16 vertex subsets
        words = all_words(2, 4)
        conflict = {
            (i, j)
            for i, j in itertools.combinations(range(16), 2)
            if intersection_size(words[i], words[j], BallKind.D) >= 1
        }
        best = 0
        for mask in range(1 << 16):
            members = [i for i in range(16) if mask >> i & 1]
            if len(members) > best and all(
                (i, j) not in conflict for i, j in itertools.combinations(members, 2)
            ):
                best = len(members)
        result = optimal_code_size(4, 2, 1, BallKind.D)
        assert result.max_code_size == best == 4

    @pytest.mark.parametrize("q,n,expected", [(2, 4, 2), (2, 5, 4)])
    def test_single_substitution_instance_is_distance_three_code(self, q, n, expected):
        # one read and substitution balls: the conflict graph joins words at
        # Hamming distance <= 2, so the optimum is the largest distance-3 code
        words = all_words(q, n)
        neighbours = [
            {j for j in range(len(words)) if j != i and hamming_distance(words[i], words[j]) <= 2}
            for i in range(len(words))
        ]
        best = _recursive_mis(neighbours)
        result = optimal_code_size(n, q, 1, BallKind.S)
        assert result.max_code_size == best == expected

    def test_witness_code_is_valid(self):
        result = optimal_code_size(5, 2, 2, BallKind.SD)
        code = result.witness_code
        assert len(code) == result.max_code_size
        assert all(
            intersection_size(x, y, BallKind.SD) < 2 for x, y in itertools.combinations(code, 2)
        )

    def test_monotone_in_reads(self):
        sizes = [optimal_code_size(5, 2, N, BallKind.SD).max_code_size for N in range(1, 6)]
        assert sizes == sorted(sizes)
        rhos = [5 - math.log2(s) for s in sizes]
        assert all(a >= b - 1e-12 for a, b in zip(rhos, rhos[1:]))

    def test_scale_guard(self):
        with pytest.raises(ResourceLimitError):
            optimal_code_size(10, 4, 2, BallKind.D)
