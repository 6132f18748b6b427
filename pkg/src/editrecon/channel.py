"""Probabilistic single-pass edit channel with reproducible randomness.

Each source symbol independently suffers exactly one event: deletion (p_d),
insertion (p_i, a uniform symbol emitted before the original), substitution
(p_s, uniform over the other q-1 symbols), or a faithful copy.  The three
probabilities must sum to at most one.

Randomness comes from numpy's PCG64 generator; seeding through
``make_rng`` keeps every run reproducible, and simulation workers derive
per-trial generators from (seed, row, trial) tuples so results do not depend
on how trials are scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .words import Word


@dataclass(frozen=True)
class ChannelParams:
    p_d: float
    p_i: float
    p_s: float

    def __post_init__(self) -> None:
        for name, p in (("p_d", self.p_d), ("p_i", self.p_i), ("p_s", self.p_s)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")
        if self.p_d + self.p_i + self.p_s > 1.0 + 1e-12:
            raise ValueError(
                f"event probabilities must sum to at most 1, got {self.p_d + self.p_i + self.p_s}"
            )


@dataclass(frozen=True)
class ReadSet:
    """A multiset of noisy reads of one codeword; duplicates are preserved."""

    reads: tuple[Word, ...]
    source_length: int

    @property
    def count(self) -> int:
        return len(self.reads)


def make_rng(seed) -> np.random.Generator:
    """A deterministic PCG64 generator; ``seed`` may be an int or a tuple."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def transmit(x: Word, params: ChannelParams, rng: np.random.Generator) -> Word:
    """One noisy read of x.

    Output length is len(x) - deletions + insertions; an insertion event
    emits one uniform symbol followed by the original symbol.
    """
    n = len(x)
    q = x.q
    xs = np.frombuffer(x.symbols, dtype=np.uint8)
    u = rng.random(n)
    deleted = u < params.p_d
    inserted = ~deleted & (u < params.p_d + params.p_i)
    substituted = ~deleted & ~inserted & (u < params.p_d + params.p_i + params.p_s)

    contrib = 1 - deleted.astype(np.int64) + inserted.astype(np.int64)
    starts = np.concatenate(([0], np.cumsum(contrib)[:-1])) if n else np.zeros(0, dtype=np.int64)
    out = np.empty(int(contrib.sum()), dtype=np.uint8)

    kept = ~deleted
    copy_pos = starts + inserted  # the original lands after any inserted symbol
    out[copy_pos[kept]] = xs[kept]
    n_sub = int(substituted.sum())
    offsets = rng.integers(0, q - 1, size=n_sub, dtype=np.int64)
    out[copy_pos[substituted]] = (xs[substituted].astype(np.int64) + 1 + offsets) % q
    n_ins = int(inserted.sum())
    out[starts[inserted]] = rng.integers(0, q, size=n_ins, dtype=np.int64)
    return Word(q, out.tobytes())


def generate_reads(
    x: Word, n_sys: int, params: ChannelParams, rng: np.random.Generator
) -> ReadSet:
    """``n_sys`` independent reads of x through the channel."""
    if n_sys < 1:
        raise ValueError(f"the number of reads must be positive, got {n_sys}")
    reads = tuple(transmit(x, params, rng) for _ in range(n_sys))
    return ReadSet(reads, len(x))
