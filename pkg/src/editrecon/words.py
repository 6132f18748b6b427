"""Words over a small integer alphabet and their elementary statistics.

A word is a fixed sequence of symbols drawn from {0, ..., q-1}.  Symbols are
stored as raw bytes so that words hash, compare, and slice at C speed; this
matters because most analyses in this package enumerate or scan millions of
words.
"""

from __future__ import annotations

from dataclasses import dataclass

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_DIGIT_VALUE = {ch: i for i, ch in enumerate(_DIGITS)}


@dataclass(frozen=True, slots=True)
class Word:
    """An immutable word over the alphabet {0, ..., q-1}.

    The length may be any non-negative integer: noisy reads are allowed to be
    shorter or longer than the nominal code length.  Two words are equal iff
    both the alphabet size and the symbol sequences are equal.
    """

    q: int
    symbols: bytes

    def __post_init__(self) -> None:
        if not 2 <= self.q <= 255:
            raise ValueError(f"alphabet size must be in [2, 255], got {self.q}")
        if any(s >= self.q for s in self.symbols):
            bad = next(s for s in self.symbols if s >= self.q)
            raise ValueError(f"symbol {bad} out of range for alphabet size {self.q}")

    @classmethod
    def from_symbols(cls, q: int, symbols) -> "Word":
        return cls(q, bytes(symbols))

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Parse the text form ``q<alphabet>:<symbols>``, e.g. ``q4:0132``.

        Symbols use base-36 digits (0-9 then a-z), so the text form covers
        alphabets up to q = 36.
        """
        if not text.startswith("q") or ":" not in text:
            raise ValueError(f"malformed word {text!r}; expected e.g. 'q4:0132'")
        head, _, body = text.partition(":")
        try:
            q = int(head[1:])
        except ValueError:
            raise ValueError(f"malformed alphabet size in {text!r}") from None
        if not 2 <= q <= 36:
            raise ValueError(f"text form supports alphabets in [2, 36], got {q}")
        try:
            syms = bytes(_DIGIT_VALUE[ch] for ch in body.lower())
        except KeyError as exc:
            raise ValueError(f"bad symbol {exc.args[0]!r} in {text!r}") from None
        return cls(q, syms)

    def __str__(self) -> str:
        if self.q > 36:
            raise ValueError("text form supports alphabets up to 36 symbols")
        return f"q{self.q}:" + "".join(_DIGITS[s] for s in self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, idx):
        return self.symbols[idx]


def _check_comparable(x: Word, y: Word) -> None:
    if x.q != y.q:
        raise ValueError(f"alphabet mismatch: q={x.q} vs q={y.q}")
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")


def hamming_distance(x: Word, y: Word) -> int:
    """Number of positions where two equal-length words differ."""
    _check_comparable(x, y)
    return sum(a != b for a, b in zip(x.symbols, y.symbols))


def inversions(x: Word) -> int:
    """Count index pairs (i, j) with i < j and x_i > x_j.

    Runs in O(n*q) by keeping per-symbol counts of the prefix seen so far,
    which is what keeps codebook membership cheap at word lengths in the
    hundreds.
    """
    return inversions_bytes(x.symbols, x.q)


def inversions_bytes(symbols: bytes, q: int) -> int:
    counts = [0] * q
    inv = 0
    for s in symbols:
        inv += sum(counts[s + 1 :])
        counts[s] += 1
    return inv


def has_period(u: Word, ell: int) -> bool:
    """True iff u_i = u_{i+ell} for every position where both exist."""
    if ell <= 0:
        raise ValueError(f"period must be positive, got {ell}")
    if ell >= len(u):
        raise ValueError(f"period {ell} must be smaller than the length {len(u)}")
    s = u.symbols
    return s[:-ell] == s[ell:]


def _longest_match_run(s: bytes, p: int) -> int:
    """Longest streak of consecutive i with s[i] == s[i+p]."""
    best = 0
    run = 0
    for i in range(len(s) - p):
        if s[i] == s[i + p]:
            run += 1
            if run > best:
                best = run
        else:
            run = 0
    return best


def longest_low_period_subword(x: Word, ell: int) -> int:
    """Length of the longest contiguous subword with period at most ``ell``.

    Any word of length at most p is counted as p-periodic, so the result is
    at least min(len(x), ell) for non-empty words.
    """
    if ell <= 0:
        raise ValueError(f"period bound must be positive, got {ell}")
    return longest_low_period_run_bytes(x.symbols, ell)


def longest_low_period_run_bytes(s: bytes, ell: int) -> int:
    n = len(s)
    if n == 0:
        return 0
    best = min(n, ell)
    for p in range(1, min(ell, n - 1) + 1):
        length = p + _longest_match_run(s, p)
        if length > best:
            best = length
    return best
