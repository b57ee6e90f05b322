"""Shared helpers for the test suite.

Two kinds of helpers live here:

* Independent oracles.  Small, slow, obviously-correct reimplementations
  of the core definitions (132-avoidance, quadrant counts, the match
  statistic, the brute-force distribution).  They share no code with the
  package beyond the ``EMPTY`` sentinel, so agreement between package and
  oracle is meaningful evidence, not a tautology.

* The frozen-reference loader.  Parses ``goldens/reference_series.txt``
  and enforces the total-count identity (coefficients of each row sum to
  a Catalan number) before handing rows to any test.
"""

from __future__ import annotations

import math
import re
from itertools import combinations, permutations
from pathlib import Path

from qmmp132 import EMPTY

GOLDEN_PATH = Path(__file__).parent / "goldens" / "reference_series.txt"


# ---------------------------------------------------------------------------
# independent oracles


def oracle_catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def oracle_avoids_132(perm) -> bool:
    """Triple loop straight from the definition of classical containment."""
    n = len(perm)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if perm[i] < perm[k] < perm[j]:
                    return False
    return True


def oracle_contains(perm, patt) -> bool:
    """Classical containment by scanning every subsequence."""
    k = len(patt)
    order = sorted(range(k), key=lambda i: patt[i])
    for idx in combinations(range(len(perm)), k):
        vals = [perm[i] for i in idx]
        ranks = sorted(range(k), key=lambda i: vals[i])
        if ranks == order:
            return True
    return False


def oracle_quadrant_counts(perm, i: int):
    """(above-right, above-left, below-left, below-right) of position i (1-based)."""
    n = len(perm)
    v = perm[i - 1]
    q1 = sum(1 for j in range(i + 1, n + 1) if perm[j - 1] > v)
    q2 = sum(1 for j in range(1, i) if perm[j - 1] > v)
    q3 = sum(1 for j in range(1, i) if perm[j - 1] < v)
    q4 = sum(1 for j in range(i + 1, n + 1) if perm[j - 1] < v)
    return (q1, q2, q3, q4)


def _bound_ok(count: int, bound) -> bool:
    if bound is EMPTY:
        return count == 0
    return count >= bound


def oracle_mmp_count(perm, pattern) -> int:
    total = 0
    for i in range(1, len(perm) + 1):
        counts = oracle_quadrant_counts(perm, i)
        if all(_bound_ok(c, b) for c, b in zip(counts, pattern)):
            total += 1
    return total


def oracle_avoiders(n: int):
    """All of S_n(132) by filtering itertools.permutations (n small)."""
    return [p for p in permutations(range(1, n + 1)) if oracle_avoids_132(p)]


def oracle_distribution(n: int, pattern) -> dict[int, int]:
    """Histogram {match count: number of 132-avoiders attaining it}."""
    hist: dict[int, int] = {}
    for p in oracle_avoiders(n):
        r = oracle_mmp_count(p, pattern)
        hist[r] = hist.get(r, 0) + 1
    return hist


def poly_to_hist(q) -> dict[int, int]:
    """XPoly -> sparse {exponent: coefficient} dict for oracle comparison."""
    return {r: q.coeff(r) for r in range(q.degree + 1) if q.coeff(r)}


# ---------------------------------------------------------------------------
# pattern grids


def natural_patterns(entry_bound: int):
    """All (a,b,c,d) with 0 <= each entry <= entry_bound, lexicographic."""
    rng = range(entry_bound + 1)
    return [(a, b, c, d) for a in rng for b in rng for c in rng for d in rng]


def patterns_with_sum_at_most(total: int):
    rng = range(total + 1)
    return [
        (a, b, c, d)
        for a in rng
        for b in rng
        for c in rng
        for d in rng
        if a + b + c + d <= total
    ]


# ---------------------------------------------------------------------------
# frozen-reference loader

_TERM_RE = re.compile(r"^(\d+)?(x(?:\^(\d+))?)?$")
_BLOCK_RE = re.compile(r"^\[pattern (\d+),(\d+),(\d+),(\d+) order (\d+)\]$")


def parse_poly_str(text: str) -> dict[int, int]:
    """Parse the ascending '704+1344x+1479x^2' format into {exp: coeff}."""
    out: dict[int, int] = {}
    for term in text.replace(" ", "").split("+"):
        m = _TERM_RE.fullmatch(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise ValueError(f"bad term {term!r} in {text!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        if m.group(2) is None:
            exp = 0
        elif m.group(3) is None:
            exp = 1
        else:
            exp = int(m.group(3))
        if exp in out:
            raise ValueError(f"duplicate exponent in {text!r}")
        if coeff:
            out[exp] = coeff
    return out


def load_reference_series() -> dict[tuple, tuple[int, dict[int, str]]]:
    """{pattern: (order, {n: polystr})}; total-count identity enforced."""
    blocks: dict[tuple, tuple[int, dict[int, str]]] = {}
    pattern = None
    order = -1
    rows: dict[int, str] = {}

    def flush():
        if pattern is None:
            return
        if sorted(rows) != list(range(order + 1)):
            raise ValueError(f"block {pattern} is missing rows")
        for n, text in rows.items():
            mass = sum(parse_poly_str(text).values())
            if mass != oracle_catalan(n):
                raise ValueError(
                    f"row {pattern} n={n}: coefficients sum to {mass}, "
                    f"expected Catalan {oracle_catalan(n)}"
                )
        blocks[pattern] = (order, dict(rows))

    for raw in GOLDEN_PATH.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _BLOCK_RE.match(line)
        if m:
            flush()
            pattern = tuple(int(g) for g in m.groups()[:4])
            order = int(m.group(5))
            rows = {}
            continue
        n_text, _, poly_text = line.partition(":")
        rows[int(n_text)] = poly_text.strip()
    flush()
    return blocks
