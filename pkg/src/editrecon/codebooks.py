"""Code families, run-length-limited word counting, and syndrome selection.

Seven families are supported.  FULL is the whole space.  C0, C1, and C2 are
single- and double-parity codes (C1 constrains the positions 2, 4, ... in
1-based order).  CD, CSD, and CEDIT combine an inversion-count syndrome, a
symbol-sum syndrome, and a bound on the length of low-period runs:

    CD:    Inv(x) = c (mod 1 + P/2),  sum(x) = d (mod q),  runs(<=2) <= P
    CSD:   Inv(x) = c (mod 1 + P),    sum(x) = d (mod q),  runs(<=1) <= P
    CEDIT: Inv(x) = c (mod 1 + P),    sum(x) = d (mod q),  runs(<=2) <= P

Membership is O(n*q) per word, so these predicates scale to word lengths in
the hundreds even though enumeration does not.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import ResourceLimitError
from .words import (
    Word,
    inversions_bytes,
    longest_low_period_run_bytes,
)

ENUMERATION_CUTOFF = 10**7

# Rejection sampling draws this many words per batch; syndrome acceptance is
# roughly 1/(q*(P+1)) so one or two batches usually suffice.
_SAMPLE_BATCH = 128


class Family(enum.Enum):
    FULL = "FULL"
    C0 = "C0"
    C1 = "C1"
    C2 = "C2"
    CD = "CD"
    CSD = "CSD"
    CEDIT = "CEDIT"


_SYNDROME_FAMILIES = {Family.CD, Family.CSD, Family.CEDIT}


def ceil_log(n: int, q: int) -> int:
    """Smallest k >= 0 with q**k >= n."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    k = 0
    power = 1
    while power < n:
        power *= q
        k += 1
    return k


def default_period(family: Family, n: int, q: int) -> int:
    """Default run-length budget P for the syndrome families.

    CSD uses ceil(log_q n) + 1 and CD/CEDIT use ceil(log_q n) + 2; CD needs an
    even budget, so its default is rounded up when the sum lands odd.
    """
    if family not in _SYNDROME_FAMILIES:
        raise ValueError(f"family {family.value} has no period parameter")
    base = ceil_log(n, q)
    if family is Family.CSD:
        return base + 1
    period = base + 2
    if family is Family.CD and period % 2:
        period += 1
    return period


def _run_ell(family: Family) -> int:
    return 1 if family is Family.CSD else 2


def _inv_modulus(family: Family, period: int) -> int:
    return 1 + period // 2 if family is Family.CD else 1 + period


@dataclass(frozen=True)
class CodebookSpec:
    """Parameters identifying one code instance.

    P, c, d apply only to the syndrome families; missing values are filled
    with the defaults (default period, c = d = 0).  FULL/C0/C1/C2 ignore and
    normalise them to None.
    """

    family: Family
    n: int
    q: int
    P: int | None = None
    c: int | None = None
    d: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"code length must be positive, got {self.n}")
        if not 2 <= self.q <= 255:
            raise ValueError(f"alphabet size must be in [2, 255], got {self.q}")
        if self.family in {Family.C1, Family.C2} and self.n < 2:
            raise ValueError(f"{self.family.value} needs length at least 2")
        if self.family not in _SYNDROME_FAMILIES:
            object.__setattr__(self, "P", None)
            object.__setattr__(self, "c", None)
            object.__setattr__(self, "d", None)
            return
        period = self.P if self.P is not None else default_period(self.family, self.n, self.q)
        if period < 1:
            raise ValueError(f"period budget must be positive, got {period}")
        if self.family is Family.CD and period % 2:
            raise ValueError(f"CD requires an even period budget, got {period}")
        c = self.c if self.c is not None else 0
        d = self.d if self.d is not None else 0
        modulus = _inv_modulus(self.family, period)
        if not 0 <= c < modulus:
            raise ValueError(f"inversion residue {c} out of range [0, {modulus})")
        if not 0 <= d < self.q:
            raise ValueError(f"sum residue {d} out of range [0, {self.q})")
        object.__setattr__(self, "P", period)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)


@dataclass(frozen=True)
class CodeConstraints:
    """Flattened membership predicate shared by contains() and the decoder."""

    length: int
    q: int
    total_residue: int | None = None
    even_residue: int | None = None  # sum over 1-based even positions
    inversion_modulus: int | None = None
    inversion_residue: int | None = None
    run_ell: int | None = None
    run_limit: int | None = None


def _even_position_sum(symbols: bytes) -> int:
    # 1-based even positions are the 0-based odd indices
    return sum(symbols[1::2])


class Codebook:
    """A code instance exposing membership, enumeration, and sampling."""

    def __init__(self, spec: CodebookSpec):
        self.spec = spec
        self._constraints = self._build_constraints()
        self._size: int | None = None

    @classmethod
    def make(
        cls,
        family: Family | str,
        n: int,
        q: int,
        P: int | None = None,
        c: int | None = None,
        d: int | None = None,
    ) -> "Codebook":
        fam = Family(family) if isinstance(family, str) else family
        return cls(CodebookSpec(fam, n, q, P, c, d))

    @property
    def family(self) -> Family:
        return self.spec.family

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def q(self) -> int:
        return self.spec.q

    def _build_constraints(self) -> CodeConstraints:
        s = self.spec
        if s.family is Family.FULL:
            return CodeConstraints(s.n, s.q)
        if s.family is Family.C0:
            return CodeConstraints(s.n, s.q, total_residue=0)
        if s.family is Family.C1:
            return CodeConstraints(s.n, s.q, even_residue=0)
        if s.family is Family.C2:
            return CodeConstraints(s.n, s.q, total_residue=0, even_residue=0)
        return CodeConstraints(
            s.n,
            s.q,
            total_residue=s.d,
            inversion_modulus=_inv_modulus(s.family, s.P),
            inversion_residue=s.c,
            run_ell=_run_ell(s.family),
            run_limit=s.P,
        )

    def constraints(self) -> CodeConstraints:
        return self._constraints

    def contains(self, x: Word) -> bool:
        if x.q != self.q:
            raise ValueError(f"alphabet mismatch: q={x.q} vs q={self.q}")
        if len(x) != self.n:
            raise ValueError(f"length mismatch: {len(x)} vs {self.n}")
        return self.contains_bytes(x.symbols)

    def contains_bytes(self, symbols: bytes) -> bool:
        cons = self._constraints
        if cons.total_residue is not None and sum(symbols) % cons.q != cons.total_residue:
            return False
        if cons.even_residue is not None and _even_position_sum(symbols) % cons.q != cons.even_residue:
            return False
        if cons.run_ell is not None and longest_low_period_run_bytes(symbols, cons.run_ell) > cons.run_limit:
            return False
        if cons.inversion_modulus is not None:
            if inversions_bytes(symbols, cons.q) % cons.inversion_modulus != cons.inversion_residue:
                return False
        return True

    def iter_words(self) -> Iterator[Word]:
        if self.q ** self.n > ENUMERATION_CUTOFF:
            raise ResourceLimitError(
                f"enumeration of {self.q}^{self.n} words exceeds the cutoff {ENUMERATION_CUTOFF}"
            )
        for tup in itertools.product(range(self.q), repeat=self.n):
            b = bytes(tup)
            if self.family is Family.FULL or self.contains_bytes(b):
                yield Word(self.q, b)

    def enumerate(self) -> list[Word]:
        """All codewords, in lexicographic order.  Only feasible at small n."""
        return list(self.iter_words())

    def size(self) -> int:
        if self._size is None:
            s = self.spec
            if s.family is Family.FULL:
                self._size = s.q**s.n
            elif s.family in {Family.C0, Family.C1}:
                self._size = s.q ** (s.n - 1)
            elif s.family is Family.C2:
                self._size = s.q ** (s.n - 2)
            else:
                self._size = sum(1 for _ in self.iter_words())
        return self._size

    # -- uniform sampling ---------------------------------------------------

    def sample(self, rng: np.random.Generator) -> Word:
        """Draw one codeword uniformly.

        Parity families sample free coordinates and solve the constraint;
        syndrome families use rejection from the full space, in fixed-size
        batches so the draw sequence is reproducible.
        """
        s = self.spec
        if s.family in _SYNDROME_FAMILIES:
            return self._sample_rejection(rng)
        word = rng.integers(0, s.q, size=s.n, dtype=np.uint8)
        if s.family is Family.C0:
            word[-1] = (-int(word[:-1].sum())) % s.q
        elif s.family in {Family.C1, Family.C2}:
            # the last 1-based even position absorbs the even-position sum
            idx = 2 * (s.n // 2) - 1
            rest = int(word[1::2].sum()) - int(word[idx])
            word[idx] = (-rest) % s.q
            if s.family is Family.C2:
                # and the last 1-based odd position absorbs the rest of the total
                idx = 2 * ((s.n - 1) // 2)
                rest = int(word[0::2].sum()) - int(word[idx])
                word[idx] = (-rest) % s.q
        return Word(s.q, word.tobytes())

    def _sample_rejection(self, rng: np.random.Generator) -> Word:
        cons = self._constraints
        n, q = cons.length, cons.q
        while True:
            batch = rng.integers(0, q, size=(_SAMPLE_BATCH, n), dtype=np.uint8)
            sums = batch.sum(axis=1, dtype=np.int64) % q
            rows = np.nonzero(sums == cons.total_residue)[0]
            if rows.size == 0:
                continue
            sub = batch[rows]
            invs = _batch_inversions(sub, q) % cons.inversion_modulus
            for row in np.nonzero(invs == cons.inversion_residue)[0]:
                symbols = sub[row].tobytes()
                if longest_low_period_run_bytes(symbols, cons.run_ell) <= cons.run_limit:
                    return Word(q, symbols)


def _batch_inversions(batch: np.ndarray, q: int) -> np.ndarray:
    """Inversion counts per row of a (rows, n) symbol matrix.

    Uses per-symbol prefix counts: the inversions ending at position i are
    the earlier symbols strictly greater than the one at i.
    """
    rows, n = batch.shape
    onehot = batch[:, :, None] == np.arange(q, dtype=batch.dtype)[None, None, :]
    before = onehot.cumsum(axis=1, dtype=np.int64) - onehot
    tail = before[:, :, ::-1].cumsum(axis=2)[:, :, ::-1]  # symbols >= v
    tail = np.concatenate([tail, np.zeros((rows, n, 1), dtype=np.int64)], axis=2)
    own = np.take_along_axis(tail, batch[:, :, None].astype(np.int64) + 1, axis=2)
    return own[:, :, 0].sum(axis=1)


def in_R(x: Word, ell: int, t: int) -> bool:
    """True iff every subword of x with period at most ell has length at most t."""
    from .words import longest_low_period_subword

    return longest_low_period_subword(x, ell) <= t


def count_R(n: int, q: int, ell: int, t: int) -> int:
    """|R_q(n, ell, t)|: words whose period-<=ell runs never exceed t.

    Counted by dynamic programming on the length of the longest low-period
    suffix.  For ell = 2 the 2-periodic suffix length dominates the constant
    suffix length, so a single run counter suffices.
    """
    if ell not in (1, 2):
        raise ValueError(f"only ell in {{1, 2}} is supported, got {ell}")
    if t <= ell:
        raise ValueError(f"need t > ell, got t={t}, ell={ell}")
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if n < 0:
        raise ValueError(f"length must be non-negative, got {n}")
    if n == 0:
        return 1
    if t >= n:
        return q**n
    if ell == 1:
        counts = {1: q}
        steps = n - 1
    else:
        counts = {2: q * q}
        steps = n - 2
    for _ in range(steps):
        new: dict[int, int] = {}
        reset = ell  # a fresh symbol starts a vacuous run of length ell
        for run, c in counts.items():
            new[reset] = new.get(reset, 0) + c * (q - 1)
            if run + 1 <= t:
                new[run + 1] = new.get(run + 1, 0) + c
        counts = new
    return sum(counts.values())


def count_R_by_enumeration(n: int, q: int, ell: int, t: int) -> int:
    """Reference count by scanning all q**n words; cross-checks the DP."""
    if q**n > ENUMERATION_CUTOFF:
        raise ResourceLimitError(f"{q}^{n} words exceed the enumeration cutoff")
    total = 0
    for tup in itertools.product(range(q), repeat=n):
        if longest_low_period_run_bytes(bytes(tup), ell) <= t:
            total += 1
    return total


def syndrome_classes(
    family: Family, n: int, q: int, P: int | None = None
) -> dict[tuple[int, int], list[Word]]:
    """Partition R_q(n, ell, P) by the (inversion, sum) syndrome pair.

    Enumerates the run-limited set once; the classes are exactly the
    codebooks CD/CSD/CEDIT over all residue choices.
    """
    if family not in _SYNDROME_FAMILIES:
        raise ValueError(f"{family.value} has no syndrome classes")
    if q**n > ENUMERATION_CUTOFF:
        raise ResourceLimitError(f"{q}^{n} words exceed the enumeration cutoff")
    period = P if P is not None else default_period(family, n, q)
    if family is Family.CD and period % 2:
        raise ValueError(f"CD requires an even period budget, got {period}")
    ell = _run_ell(family)
    modulus = _inv_modulus(family, period)
    classes: dict[tuple[int, int], list[Word]] = {
        (c, d): [] for c in range(modulus) for d in range(q)
    }
    for tup in itertools.product(range(q), repeat=n):
        b = bytes(tup)
        if longest_low_period_run_bytes(b, ell) > period:
            continue
        key = (inversions_bytes(b, q) % modulus, sum(tup) % q)
        classes[key].append(Word(q, b))
    return classes


def best_syndromes(family: Family, n: int, q: int, P: int | None = None) -> tuple[int, int, int]:
    """The (c, d) pair whose class is largest, with ties broken towards the
    lexicographically smallest pair.  Returns (c, d, cardinality)."""
    classes = syndrome_classes(family, n, q, P)
    best_key = min(classes, key=lambda key: (-len(classes[key]), key))
    return best_key[0], best_key[1], len(classes[best_key])


def redundancy(cb: Codebook) -> float:
    """n - log_q |C| in symbols."""
    size = cb.size()
    if size == 0:
        raise ValueError("empty codebook: redundancy is undefined")
    return cb.n - math.log(size) / math.log(cb.q)
