"""Error balls for single edits, exact intersection sizes, and the
substitution-ball counting formulas.

The union kinds (SD, SI, ID, EDIT) mix output lengths n-1, n, and n+1, so
their pairwise intersections split into per-length components; intersections
are computed component-wise and summed, which is an exact set identity rather
than an approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .words import Word, _check_comparable

_UNION_TAGS = {"ID": ("I", "D"), "SD": ("S", "D"), "SI": ("S", "I"), "EDIT": ("S", "I", "D")}
_BASE_TAGS = {"S", "D", "I"}


@dataclass(frozen=True)
class BallKind:
    """Selector for an error-ball function.

    ``tag`` is one of S, D, I, ID, SD, SI, EDIT.  ``radius`` is meaningful for
    S (Hamming ball of radius t, including the centre) and D (exactly t
    deletions); every other tag requires radius 1.
    """

    tag: str
    radius: int = 1

    def __post_init__(self) -> None:
        if self.tag not in _BASE_TAGS and self.tag not in _UNION_TAGS:
            raise ValueError(f"unknown ball kind {self.tag!r}")
        if self.radius < 1:
            raise ValueError(f"radius must be at least 1, got {self.radius}")
        if self.radius > 1 and self.tag not in {"S", "D"}:
            raise ValueError(f"kind {self.tag} does not take a radius")

    @classmethod
    def parse(cls, name: str) -> "BallKind":
        """Parse a command-line ball name: S, D, I, ID, SD, SI, EDIT, St:t, Dt:t."""
        text = name.strip().upper()
        if text.startswith(("ST:", "DT:")):
            tag = text[0]
            try:
                radius = int(text.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad radius in ball name {name!r}") from None
            return cls(tag, radius)
        return cls(text)

    @property
    def components(self) -> tuple["BallKind", ...]:
        if self.tag in _UNION_TAGS:
            return tuple(BallKind(t) for t in _UNION_TAGS[self.tag])
        return (self,)

    def __str__(self) -> str:
        if self.radius > 1:
            return f"{self.tag}t:{self.radius}"
        return self.tag


BallKind.S = BallKind("S")
BallKind.D = BallKind("D")
BallKind.I = BallKind("I")
BallKind.ID = BallKind("ID")
BallKind.SD = BallKind("SD")
BallKind.SI = BallKind("SI")
BallKind.EDIT = BallKind("EDIT")


def _sub_ball_bytes(s: bytes, q: int, t: int) -> set[bytes]:
    """All words at Hamming distance at most t from s (includes s itself)."""
    out = {s}
    frontier = {s}
    for _ in range(t):
        nxt = set()
        for w in frontier:
            for i in range(len(w)):
                prefix, orig, suffix = w[:i], w[i], w[i + 1 :]
                for b in range(q):
                    if b != orig:
                        cand = prefix + bytes((b,)) + suffix
                        if cand not in out:
                            nxt.add(cand)
        out |= nxt
        frontier = nxt
    return out


def _del_ball_bytes(s: bytes, t: int) -> set[bytes]:
    """All words obtained from s by exactly t deletions."""
    frontier = {s}
    for _ in range(t):
        frontier = {w[:i] + w[i + 1 :] for w in frontier for i in range(len(w))}
    return frontier


def _ins_ball_bytes(s: bytes, q: int, t: int) -> set[bytes]:
    """All words obtained from s by exactly t insertions."""
    frontier = {s}
    for _ in range(t):
        frontier = {
            w[:i] + bytes((b,)) + w[i:] for w in frontier for i in range(len(w) + 1) for b in range(q)
        }
    return frontier


def _component_ball_bytes(s: bytes, q: int, kind: BallKind) -> set[bytes]:
    if kind.tag == "S":
        return _sub_ball_bytes(s, q, kind.radius)
    if kind.tag == "D":
        if len(s) < kind.radius:
            raise ValueError(f"cannot delete {kind.radius} symbols from a length-{len(s)} word")
        return _del_ball_bytes(s, kind.radius)
    if kind.tag == "I":
        return _ins_ball_bytes(s, q, kind.radius)
    raise AssertionError(kind)


def ball_bytes(s: bytes, q: int, kind: BallKind) -> set[bytes]:
    out: set[bytes] = set()
    for comp in kind.components:
        out |= _component_ball_bytes(s, q, comp)
    return out


def ball(x: Word, kind: BallKind) -> set[Word]:
    """The exact set of words reachable from x under the given error model."""
    return {Word(x.q, b) for b in ball_bytes(x.symbols, x.q, kind)}


def intersection_size(x: Word, y: Word, kind: BallKind) -> int:
    """|B(x) ∩ B(y)|, computed exactly by materialised set intersection."""
    _check_comparable(x, y)
    total = 0
    for comp in kind.components:
        bx = _component_ball_bytes(x.symbols, x.q, comp)
        by = _component_ball_bytes(y.symbols, y.q, comp)
        total += len(bx & by)
    return total


def _comb(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def n_sub_formula(n: int, q: int, t: int, d: int) -> int:
    """Closed-form size of the intersection of two radius-t Hamming balls
    whose centres are at Hamming distance d.

    Both inner summation indices run over [d-t+i, t-i]; the test suite
    validates the formula against brute-force enumeration over every pair.
    """
    if q < 2:
        raise ValueError(f"alphabet size must be at least 2, got {q}")
    if t < 1:
        raise ValueError(f"radius must be at least 1, got {t}")
    if not 1 <= d <= n:
        raise ValueError(f"distance must satisfy 1 <= d <= n, got d={d}, n={n}")
    total = 0
    for i in range(0, t - math.ceil(d / 2) + 1):
        inner = 0
        for k in range(d - t + i, t - i + 1):
            ck = _comb(d, k)
            if ck == 0:
                continue
            for m in range(d - t + i, t - i + 1):
                cm = _comb(d - k, m)
                if cm == 0:
                    continue
                inner += ck * cm * (q - 2) ** (d - k - m)
        total += _comb(n - d, i) * (q - 1) ** i * inner
    return total


def sub_coverage_formula(n: int, q: int, t: int) -> int:
    """Maximum radius-t Hamming-ball intersection over the whole space:
    q * sum_{i=0}^{t-1} C(n-i, i) (q-1)^i."""
    if t < 1:
        raise ValueError(f"radius must be at least 1, got {t}")
    if n < t:
        raise ValueError(f"need n >= t, got n={n}, t={t}")
    return q * sum(_comb(n - i, i) * (q - 1) ** i for i in range(t))


def levenshtein_radius(x: Word, y: Word) -> int:
    """Smallest t such that the radius-t deletion balls of x and y intersect.

    Zero iff x == y.  Computed by iterative deepening with materialised
    deletion balls; intended for small radii.
    """
    _check_comparable(x, y)
    if x == y:
        return 0
    bx = {x.symbols}
    by = {y.symbols}
    for t in range(1, len(x) + 1):
        bx = {w[:i] + w[i + 1 :] for w in bx for i in range(len(w))}
        by = {w[:i] + w[i + 1 :] for w in by for i in range(len(w))}
        if bx & by:
            return t
    raise AssertionError("deletion balls of equal-length words meet at the empty word")
