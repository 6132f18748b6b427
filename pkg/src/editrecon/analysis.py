"""Read coverage, reconstruction verification, and exact optimal code search.

Coverage is the maximum error-ball intersection over distinct codeword pairs.
A blind scan over all pairs is hopeless already at q=4, n=8, so the scan
walks, for every codeword x, only the words y whose ball can meet the ball of
x (a composition of one forward and one inverse edit).  For the full space the
scan additionally quotients by symbol relabelling: every error ball commutes
with permutations of the alphabet, so only words whose symbols appear in
first-occurrence order need to serve as the left element of a pair.

Pair values come from the structural characterisation when it pins the size
exactly; otherwise the characterisation still yields an upper bound, and the
balls are enumerated only when that bound could beat the running maximum.
"""

from __future__ import annotations

import itertools
import math
import sys
from dataclasses import dataclass

from .balls import (
    BallKind,
    _del_ball_bytes,
    _ins_ball_bytes,
    _sub_ball_bytes,
    intersection_size,
)
from .codebooks import ENUMERATION_CUTOFF, Codebook, Family
from .confusability import _PREDICTABLE, predict_with_bound
from .errors import ResourceLimitError
from .words import Word

OPTIMAL_SEARCH_CUTOFF = 2**14


@dataclass(frozen=True)
class CoverageReport:
    nu: int
    witness: tuple[Word, Word] | None
    pairs_scanned: int


@dataclass(frozen=True)
class VerifyResult:
    passed: bool
    n_reads: int
    kind: BallKind
    witness: tuple[Word, Word] | None = None
    witness_intersection: int | None = None
    pairs_scanned: int = 0


@dataclass(frozen=True)
class OptimalSearchResult:
    n: int
    q: int
    n_reads: int
    kind: BallKind
    max_code_size: int
    rho_exact: float
    witness_code: tuple[Word, ...]


def _pair_value_bounded(x: Word, y: Word, kind: BallKind, cur_max: int) -> int | None:
    """Exact |B(x) ∩ B(y)|, or None when it provably cannot exceed cur_max."""
    if kind.radius == 1 and kind.tag in _PREDICTABLE:
        value, exact = predict_with_bound(x, y, kind)
        if exact:
            return value
        if value <= cur_max:
            return None
        return intersection_size(x, y, kind)
    return intersection_size(x, y, kind)


def _conflict_neighbors(s: bytes, q: int, kind: BallKind) -> list[bytes]:
    """Same-length words whose ball of the given kind can intersect the ball
    of s.  Substitution-type neighbours come first so pair scans reach large
    values early."""
    seen: set[bytes] = {s}
    ordered: list[bytes] = []
    for comp in kind.components:
        if comp.tag == "S":
            cands = _sub_ball_bytes(s, q, 2 * comp.radius)
        elif comp.tag == "D":
            cands = set()
            for z in _del_ball_bytes(s, comp.radius):
                cands |= _ins_ball_bytes(z, q, comp.radius)
        else:  # I
            cands = set()
            for z in _ins_ball_bytes(s, q, comp.radius):
                cands |= _del_ball_bytes(z, comp.radius)
        for y in sorted(cands):
            if y not in seen:
                seen.add(y)
                ordered.append(y)
    return ordered


def _canonical_words(n: int, q: int) -> list[bytes]:
    """Words whose distinct symbols appear in the order 0, 1, 2, ...; one
    representative per relabelling orbit."""
    out: list[bytes] = []
    buf = bytearray(n)

    def rec(i: int, used: int) -> None:
        if i == n:
            out.append(bytes(buf))
            return
        for sym in range(min(used + 1, q)):
            buf[i] = sym
            rec(i + 1, used + 1 if sym == used else used)

    rec(0, 0)
    return out


def _scan_pairs(
    lefts: list[bytes],
    members: set[bytes] | None,
    q: int,
    kind: BallKind,
    stop_at: int | None,
) -> CoverageReport:
    """Max intersection over pairs (x, y) with x in lefts and y a conflict
    neighbour of x (restricted to ``members`` when given)."""
    nu = 0
    witness: tuple[Word, Word] | None = None
    scanned = 0
    for xs in lefts:
        x = Word(q, xs)
        for ys in _conflict_neighbors(xs, q, kind):
            if members is not None and (ys < xs or ys not in members):
                continue  # unordered pairs: the smaller member leads
            y = Word(q, ys)
            scanned += 1
            value = _pair_value_bounded(x, y, kind, nu)
            if value is not None and value > nu:
                nu = value
                witness = (x, y)
                if stop_at is not None and nu >= stop_at:
                    return CoverageReport(nu, witness, scanned)
    return CoverageReport(nu, witness, scanned)


def coverage_of_words(
    words, q: int, kind: BallKind, stop_at: int | None = None
) -> CoverageReport:
    """Exact maximum of |B(x) ∩ B(y)| over distinct members of an explicit
    word collection (for codes given by a list rather than a family)."""
    lefts = [w.symbols if isinstance(w, Word) else bytes(w) for w in words]
    return _scan_pairs(lefts, set(lefts), q, kind, stop_at)


def read_coverage(cb: Codebook, kind: BallKind, stop_at: int | None = None) -> CoverageReport:
    """Exact maximum of |B(x) ∩ B(y)| over distinct codewords x, y.

    With ``stop_at`` set, the scan returns as soon as the maximum is known to
    reach that value (used by verification, where only the threshold matters).
    """
    n, q = cb.n, cb.q
    if cb.family is Family.FULL:
        if q**n > ENUMERATION_CUTOFF:
            raise ResourceLimitError(f"coverage scan over {q}^{n} words exceeds the cutoff")
        # Error balls commute with alphabet permutations, so one word per
        # relabelling orbit suffices on the left of each pair.
        return _scan_pairs(_canonical_words(n, q), None, q, kind, stop_at)
    lefts = [w.symbols for w in cb.iter_words()]
    return _scan_pairs(lefts, set(lefts), q, kind, stop_at)


def verify_reconstruction(cb: Codebook, n_reads: int, kind: BallKind) -> VerifyResult:
    """Check that every pair of distinct codewords shares fewer than
    ``n_reads`` ball elements; on failure report a violating pair."""
    if n_reads < 1:
        raise ValueError(f"the read count must be positive, got {n_reads}")
    report = read_coverage(cb, kind, stop_at=n_reads)
    if report.nu >= n_reads:
        return VerifyResult(
            passed=False,
            n_reads=n_reads,
            kind=kind,
            witness=report.witness,
            witness_intersection=report.nu,
            pairs_scanned=report.pairs_scanned,
        )
    return VerifyResult(passed=True, n_reads=n_reads, kind=kind, pairs_scanned=report.pairs_scanned)


def _greedy_colour(cand: int, adj: list[int]) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bounds: list[int] = []
    colour = 0
    rest = cand
    while rest:
        colour += 1
        avail = rest
        while avail:
            vbit = avail & -avail
            v = vbit.bit_length() - 1
            order.append(v)
            bounds.append(colour)
            avail &= ~(adj[v] | vbit)
            rest ^= vbit
    return order, bounds


def _max_clique(adj: list[int], n_vertices: int) -> int:
    """Mask of a maximum clique, by branch and bound with a greedy colouring
    upper bound (vertices of one colour class are pairwise non-adjacent, so a
    clique uses at most one of each)."""
    best_size = 0
    best_mask = 0

    def expand(r_mask: int, r_size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        order, bounds = _greedy_colour(cand, adj)
        for idx in range(len(order) - 1, -1, -1):
            if r_size + bounds[idx] <= best_size:
                return
            v = order[idx]
            vbit = 1 << v
            nxt = cand & adj[v]
            if nxt:
                expand(r_mask | vbit, r_size + 1, nxt)
            elif r_size + 1 > best_size:
                best_size = r_size + 1
                best_mask = r_mask | vbit
            cand &= ~vbit

    full = (1 << n_vertices) - 1
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n_vertices + 1000))
    try:
        expand(0, 0, full)
    finally:
        sys.setrecursionlimit(old_limit)
    return best_mask


def optimal_code_size(n: int, q: int, n_reads: int, kind: BallKind) -> OptimalSearchResult:
    """Exact largest code with coverage below ``n_reads``, by maximum
    independent set search on the conflict graph (edges join pairs whose
    balls share at least ``n_reads`` words)."""
    if n_reads < 1:
        raise ValueError(f"the read count must be positive, got {n_reads}")
    total = q**n
    if total > OPTIMAL_SEARCH_CUTOFF:
        raise ResourceLimitError(f"{q}^{n} words exceed the optimal-search cutoff")

    words = [bytes(t) for t in itertools.product(range(q), repeat=n)]
    index = {w: i for i, w in enumerate(words)}
    adj = [0] * total
    for i, xs in enumerate(words):
        x = Word(q, xs)
        for ys in _conflict_neighbors(xs, q, kind):
            j = index[ys]
            if j <= i:
                continue
            value = _pair_value_bounded(x, Word(q, ys), kind, n_reads - 1)
            if value is not None and value >= n_reads:
                adj[i] |= 1 << j
                adj[j] |= 1 << i

    if not any(adj):
        best_mask = (1 << total) - 1
    else:
        full = (1 << total) - 1
        comp = [full ^ (1 << i) ^ adj[i] for i in range(total)]
        best_mask = _max_clique(comp, total)

    size = bin(best_mask).count("1")
    witness = tuple(Word(q, words[i]) for i in range(total) if best_mask >> i & 1)
    rho = n - math.log(size) / math.log(q)
    return OptimalSearchResult(n, q, n_reads, kind, size, rho, witness)
