"""Shared brute-force oracles.

Everything here is deliberately independent of the production code paths it
checks: confusability by blind enumeration of all decompositions, candidate
lists by materialising edit balls, subword periods by sliding windows.
"""

from __future__ import annotations

import itertools

from editrecon.balls import BallKind, ball
from editrecon.words import Word


def all_words(q: int, n: int) -> list[Word]:
    return [Word.from_symbols(q, t) for t in itertools.product(range(q), repeat=n)]


def _is_alternating_core(core: bytes) -> bool:
    """core == (αβ)^m or (αβ)^m β with α != β and m >= 1."""
    if len(core) < 2 or core[0] == core[1]:
        return False
    a, b = core[0], core[1]
    return all(sym == (a if i % 2 == 0 else b) for i, sym in enumerate(core))


def _swap_two(core: bytes, a: int, b: int) -> bytes:
    return bytes(b if s == a else a if s == b else s for s in core)


def blind_type_a(x: Word, y: Word) -> bool:
    """Type-A by trying every (prefix, core, suffix) decomposition."""
    xs, ys = x.symbols, y.symbols
    n = len(xs)
    for i in range(n):
        for j in range(i + 1, n):
            if xs[:i] != ys[:i] or xs[j + 1 :] != ys[j + 1 :]:
                continue
            core = xs[i : j + 1]
            if _is_alternating_core(core) and ys[i : j + 1] == _swap_two(core, core[0], core[1]):
                return True
    return False


def blind_type_b(x: Word, y: Word) -> bool:
    """Type-B by trying every decomposition and every (α, β, m) shape."""
    xs, ys = x.symbols, y.symbols
    n = len(xs)
    for i in range(n):
        for j in range(i + 1, n):
            if xs[:i] != ys[:i] or xs[j + 1 :] != ys[j + 1 :]:
                continue
            cx, cy = xs[i : j + 1], ys[i : j + 1]
            m = j - i
            for alpha in range(x.q):
                for beta in range(x.q):
                    if alpha == beta:
                        continue
                    head = bytes((alpha,)) + bytes((beta,)) * m
                    tail = bytes((beta,)) * m + bytes((alpha,))
                    if {cx, cy} == {head, tail}:
                        return True
    return False


def blind_type_b_m1(x: Word, y: Word) -> bool:
    xs, ys = x.symbols, y.symbols
    n = len(xs)
    for i in range(n - 1):
        j = i + 1
        if xs[:i] != ys[:i] or xs[j + 1 :] != ys[j + 1 :]:
            continue
        if xs[i] != xs[j] and xs[i : j + 1] == ys[i : j + 1][::-1]:
            return True
    return False


def brute_candidate_list(y: Word, cb) -> set[Word]:
    """Decoder candidate list by materialising the edit ball of the read."""
    n = cb.n
    if len(y) == n and cb.contains(y):
        return {y}
    if abs(len(y) - n) > 1:
        return set()
    return {w for w in ball(y, BallKind.EDIT) if len(w) == n and cb.contains(w)}


def brute_longest_low_period_subword(x: Word, ell: int) -> int:
    """Sliding-window scan over all subwords and all periods up to ell."""
    s = x.symbols
    n = len(s)
    best = 0
    for start in range(n):
        for end in range(start + 1, n + 1):
            window = s[start:end]
            length = end - start
            for p in range(1, ell + 1):
                if length <= p or all(window[k] == window[k + p] for k in range(length - p)):
                    best = max(best, length)
                    break
    return best


def inversion_recount(x: Word) -> int:
    """Direct double loop."""
    s = x.symbols
    return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])
