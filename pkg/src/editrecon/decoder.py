"""Bounded-distance decoding from multiple noisy reads.

Per read y the decoder forms a candidate list: the read itself when it is a
codeword, otherwise the codewords within one edit of y (empty when the length
is off by more than one).  The decoded word is the unique codeword appearing
in the most lists; anything else, including an all-empty vote, is a failure.

Candidate lists are computed without enumerating the code.  For a read of
length n, n-1, or n+1 the only length-n words within one edit are the
substitutions, insertions, or deletions of the read, and how each candidate
shifts the symbol sum, the even-position sum, and the inversion count follows
from prefix statistics of the read alone.  The whole candidate grid is
filtered against the code's syndrome constraints in a handful of vectorised
passes; only the few survivors are materialised and run-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .channel import ReadSet
from .codebooks import Codebook
from .words import Word, longest_low_period_run_bytes


@dataclass(frozen=True)
class DecodeResult:
    codeword: Word | None
    list_sizes: tuple[int, ...]
    winning_votes: int
    tie: bool

    @property
    def decoded(self) -> bool:
        return self.codeword is not None


def _prefix_tables(y: np.ndarray, q: int):
    """Prefix statistics of the read used by all three candidate grids.

    gt_pre[i, s] counts positions j < i with y_j > s; lt_suf[i, s] counts
    positions j >= i with y_j < s.  podd/peven are prefix sums of the symbols
    at odd/even 0-based indices.
    """
    ln = y.size
    onehot = np.zeros((ln + 1, q), dtype=np.int64)
    if ln:
        onehot[np.arange(1, ln + 1), y] = 1
    prefix = np.cumsum(onehot, axis=0)
    tail = prefix[:, ::-1].cumsum(axis=1)[:, ::-1]  # sum over symbols >= s
    gt_pre = tail - prefix
    head = np.zeros_like(prefix)
    head[:, 1:] = prefix.cumsum(axis=1)[:, :-1]  # sum over symbols < s
    lt_suf = head[ln][None, :] - head

    parity = np.arange(ln) % 2
    vals = y.astype(np.int64)
    podd = np.concatenate(([0], np.cumsum(np.where(parity == 1, vals, 0))))
    peven = np.concatenate(([0], np.cumsum(np.where(parity == 0, vals, 0))))
    inv0 = int(gt_pre[np.arange(ln), y].sum()) if ln else 0
    return gt_pre, lt_suf, podd, peven, int(vals.sum()), inv0


def _apply_constraints(mask, cons, sums, evens, invs) -> None:
    if cons.total_residue is not None:
        mask &= (sums % cons.q) == cons.total_residue
    if cons.even_residue is not None:
        mask &= (evens % cons.q) == cons.even_residue
    if cons.inversion_modulus is not None:
        mask &= (invs % cons.inversion_modulus) == cons.inversion_residue


def _candidate_bytes(yb: bytes, cb: Codebook) -> set[bytes]:
    """Members of the code within one edit of the read (read itself excluded);
    assumes the read's length differs from the code length by at most one."""
    cons = cb.constraints()
    n, q = cons.length, cons.q
    y = np.frombuffer(yb, dtype=np.uint8)
    ln = y.size
    gt_pre, lt_suf, podd, peven, total, inv0 = _prefix_tables(y, q)
    symbols = np.arange(q, dtype=np.int64)

    if ln == n:  # substitutions of the read
        idx = np.arange(ln)
        gain = gt_pre[:ln] + lt_suf[1:]  # inversion pairs a symbol placed at i would join
        base = gain[idx, y]
        invs = inv0 + gain - base[:, None]
        sums = total + symbols[None, :] - y[:, None].astype(np.int64)
        devens = np.where(idx % 2 == 1, 1, 0)[:, None] * (symbols[None, :] - y[:, None])
        evens = podd[ln] + devens
        mask = np.ones((ln, q), dtype=bool)
        mask[idx, y] = False
        _apply_constraints(mask, cons, sums, evens, invs)
        raw = [(int(i), int(b)) for i, b in zip(*np.nonzero(mask))]
        build = lambda i, b: yb[:i] + bytes((b,)) + yb[i + 1 :]
    elif ln == n - 1:  # insertions into the read
        gaps = np.arange(ln + 1)
        invs = inv0 + gt_pre + lt_suf
        sums = total + np.broadcast_to(symbols[None, :], (ln + 1, q))
        at_even_slot = (gaps % 2 == 1).astype(np.int64)[:, None]
        evens = (
            podd[:, None]
            + at_even_slot * symbols[None, :]
            + (peven[ln] - peven)[:, None]  # shifted symbols flip parity
        )
        mask = np.ones((ln + 1, q), dtype=bool)
        _apply_constraints(mask, cons, sums, evens, invs)
        raw = [(int(i), int(b)) for i, b in zip(*np.nonzero(mask))]
        build = lambda i, b: yb[:i] + bytes((b,)) + yb[i:]
    elif ln == n + 1:  # deletions from the read
        idx = np.arange(ln)
        invs = inv0 - (gt_pre[idx, y] + lt_suf[idx + 1, y])
        sums = total - y.astype(np.int64)
        evens = podd[:ln] + (peven[ln] - peven[1:])
        mask = np.ones(ln, dtype=bool)
        _apply_constraints(mask, cons, sums, evens, invs)
        raw = [(int(i), None) for i in np.nonzero(mask)[0]]
        build = lambda i, _: yb[:i] + yb[i + 1 :]
    else:
        raise AssertionError("callers must pre-filter read lengths")

    out: set[bytes] = set()
    for i, b in raw:
        cand = build(i, b)
        if cons.run_ell is None or longest_low_period_run_bytes(cand, cons.run_ell) <= cons.run_limit:
            out.add(cand)
    return out


def candidate_bytes_for_read(yb: bytes, cb: Codebook) -> set[bytes]:
    """Candidate list of one read in raw-bytes form."""
    n = cb.n
    if len(yb) == n and cb.contains_bytes(yb):
        return {yb}
    if abs(len(yb) - n) > 1:
        return set()
    return _candidate_bytes(yb, cb)


def candidate_list(y: Word, cb: Codebook) -> set[Word]:
    """Codewords a single read votes for: {y} when y is a codeword, otherwise
    the code's intersection with the edit ball of y."""
    if y.q != cb.q:
        raise ValueError(f"alphabet mismatch: q={y.q} vs q={cb.q}")
    return {Word(cb.q, b) for b in candidate_bytes_for_read(y.symbols, cb)}


def decode(reads: ReadSet | Iterable[Word], cb: Codebook) -> DecodeResult:
    """Plurality decoding over per-read candidate lists.

    Every read contributes one vote to each codeword in its list (duplicate
    reads vote again).  Decoding succeeds only when a single codeword holds
    the strictly largest positive vote count.
    """
    words = reads.reads if isinstance(reads, ReadSet) else tuple(reads)
    votes: dict[bytes, int] = {}
    sizes: list[int] = []
    for y in words:
        if y.q != cb.q:
            raise ValueError(f"alphabet mismatch: q={y.q} vs q={cb.q}")
        lst = candidate_bytes_for_read(y.symbols, cb)
        sizes.append(len(lst))
        for b in lst:
            votes[b] = votes.get(b, 0) + 1
    if not votes:
        return DecodeResult(None, tuple(sizes), 0, False)
    best = max(votes.values())
    winners = [b for b, v in votes.items() if v == best]
    if len(winners) != 1:
        return DecodeResult(None, tuple(sizes), best, True)
    return DecodeResult(Word(cb.q, winners[0]), tuple(sizes), best, False)
