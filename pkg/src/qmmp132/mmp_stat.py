"""Quadrant counting and the marked-mesh-pattern statistic.

Fix a permutation sigma and a position i.  Centering axes on the point
(i, sigma_i) splits the remaining points (j, sigma_j) into four quadrants:

    I   j > i and sigma_j > sigma_i        II  j < i and sigma_j > sigma_i
    III j < i and sigma_j < sigma_i        IV  j > i and sigma_j < sigma_i

A quadrant bound is either a nonnegative integer k ("at least k points
here"; 0 imposes nothing) or the distinct bound EMPTY ("exactly zero points
here").  A pattern is one bound per quadrant, written "a,b,c,d" with "e"
for EMPTY, e.g. "1,1,1,0" or "4,2,e,e".  Position i matches the pattern
when all four quadrant counts satisfy their bounds, and the statistic
counts matching positions.

>>> p = parse_perm("471569283")
>>> quadrant_counts(p, 4)
(3, 1, 2, 2)
>>> matches_at(p, 3, parse_pattern("4,2,e,e"))
True
>>> mmp_count((5, 4, 3, 2, 1), parse_pattern("1,1,1,0"))
0
"""

from __future__ import annotations

from typing import Sequence

from .perm_core import Perm, inverse, parse_perm


class _Empty:
    """Singleton bound requiring a quadrant to hold no points at all."""

    _instance = None

    def __new__(cls) -> "_Empty":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "EMPTY"

    def __reduce__(self):
        return (_Empty, ())


EMPTY = _Empty()

Bound = int | _Empty
MmpPattern = tuple  # 4-tuple of bounds (a, b, c, d)


def make_pattern(a, b, c, d) -> MmpPattern:
    """Validate and build a pattern of four quadrant bounds."""
    pat = (a, b, c, d)
    for bound in pat:
        if bound is EMPTY:
            continue
        if not isinstance(bound, int) or bound < 0:
            raise ValueError(f"bound must be a nonnegative int or EMPTY: {bound!r}")
    return pat


def parse_pattern(text: str) -> MmpPattern:
    """Parse "a,b,c,d" with "e" tokens for EMPTY.

    >>> parse_pattern("4,2,e,e")
    (4, 2, EMPTY, EMPTY)
    """
    tokens = [tok.strip() for tok in text.split(",")]
    if len(tokens) != 4:
        raise ValueError(f"pattern needs exactly four tokens: {text!r}")
    bounds = []
    for tok in tokens:
        if tok == "e":
            bounds.append(EMPTY)
        elif tok.isdigit():
            bounds.append(int(tok))
        else:
            raise ValueError(f"bad pattern token {tok!r} in {text!r}")
    return make_pattern(*bounds)


def format_pattern(pat: MmpPattern) -> str:
    return ",".join("e" if b is EMPTY else str(b) for b in pat)


def is_all_natural(pat: MmpPattern) -> bool:
    """True when no coordinate is EMPTY."""
    return all(b is not EMPTY for b in pat)


def quadrant_counts(p: Sequence[int], i: int) -> tuple[int, int, int, int]:
    """Point counts in quadrants I..IV around position i (1-based).

    The four counts always sum to len(p) - 1.
    """
    n = len(p)
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")
    v = p[i - 1]
    q1 = q2 = q3 = q4 = 0
    for j in range(n):
        w = p[j]
        if j >= i:  # positions strictly right of i (j is 0-based)
            if w > v:
                q1 += 1
            elif w < v:
                q4 += 1
        elif j < i - 1:  # strictly left
            if w > v:
                q2 += 1
            elif w < v:
                q3 += 1
    return q1, q2, q3, q4


def _satisfies(count: int, bound) -> bool:
    if bound is EMPTY:
        return count == 0
    return count >= bound


def matches_at(p: Sequence[int], i: int, pat: MmpPattern) -> bool:
    """True when every quadrant count around position i meets its bound."""
    counts = quadrant_counts(p, i)
    return all(_satisfies(c, b) for c, b in zip(counts, pat))


def mmp_count(p: Sequence[int], pat: MmpPattern) -> int:
    """Number of positions of p matching the pattern.

    >>> mmp_count(parse_perm("341256"), make_pattern(1, 1, 1, 0))
    1
    """
    return sum(1 for i in range(1, len(p) + 1) if matches_at(p, i, pat))


def swap_b_d(pat: MmpPattern) -> MmpPattern:
    """Exchange the quadrant II and IV bounds: (a,b,c,d) -> (a,d,c,b).

    Inverting a permutation reflects its plot across the main diagonal,
    which swaps quadrants II and IV while fixing I and III; hence
    mmp_count(p, pat) == mmp_count(inverse(p), swap_b_d(pat)).
    """
    a, b, c, d = pat
    return (a, d, c, b)


__all__ = [
    "EMPTY",
    "MmpPattern",
    "make_pattern",
    "parse_pattern",
    "format_pattern",
    "is_all_natural",
    "quadrant_counts",
    "matches_at",
    "mmp_count",
    "swap_b_d",
    "inverse",
]
