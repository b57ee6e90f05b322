"""Ground truth for Q_n(x): brute-force enumeration and a structural recursion.

Both functions take a pattern of four nonnegative integer quadrant bounds
(a, b, c, d) (no EMPTY bounds here) and return the exact polynomial

    Q_n(x) = sum over sigma in S_n(132) of x^(mmp count of sigma).

Brute force enumerates S_n(132) as a numpy array, counts the four quadrant
populations of every position of every permutation in one vectorized pass,
and histograms the per-permutation match counts.  Counts stay below 2^63
through the enumeration cap, so int64 histogram bins are exact.

The recursion works on the position i of the maximal value n.  In a
132-avoider, sigma = A n B where A occupies the top i-1 values and B the
bottom n-i values, and A, B are independent 132-avoiders on their value
sets.  Around a position inside A, the value n and all of B sit to the
right, n above and B below: one point is guaranteed in quadrant I and n-i
points in quadrant IV, while quadrants II and III see only A itself.  So A
contributes the length-(i-1) distribution for the reduced bounds
(a-.-1, b, c, d-.-(n-i)), where u-.-v = max(u-v, 0) is truncated
subtraction.  Around a position inside B, all of A and n sit to the left
and above: i guaranteed points in quadrant II, quadrants I, III, IV seeing
only B.  That gives the length-(n-i) distribution for (a, b-.-i, c, d).
The position of n itself has empty quadrants I and II and all of A in III,
all of B in IV; it matches exactly when a = 0, b = 0, i-1 >= c and
n-i >= d, in which case the product picks up one factor x:

    Q_n^{(a,b,c,d)} = sum_{i=1}^{n} w_i * Q_{i-1}^{(a-.-1, b, c, d-.-(n-i))}
                                        * Q_{n-i}^{(a, b-.-i, c, d)},

with w_i = x on a match of n, else 1, and Q_0 = 1.  Since a length-m
factor never distinguishes bounds above m, keys are memoized with b and d
clamped to min(., m), which keeps the table small.

The recursion is evaluated as an iterative table fill over increasing
length (no call-stack recursion).  Polynomials are packed into single big
integers with fixed-width limbs (Kronecker substitution): one polynomial
multiplication becomes one big-integer multiplication.  All coefficients
are nonnegative and bounded by the Catalan number C_n, so a limb width
comfortably above C_n's bit length makes the packing lossless.
"""

from __future__ import annotations

import numpy as np

from .perm_core import DEFAULT_ENUM_CAP, ResourceLimitError, catalan
from .poly_series import ONE, TSeries, XPoly

PatternKey = tuple[int, int, int, int]

#: largest length the packed-limb table accepts
RECURSION_N_MAX = 64

_LIMB = 128  # bits per packed coefficient; C_64 needs 119, so always safe
_LIMB_MASK = (1 << _LIMB) - 1

_memo: dict[tuple[int, int, int, int, int], int] = {}

# ---------------------------------------------------------------------------
# structural recursion


def _validate_pattern(pat) -> PatternKey:
    if len(pat) != 4:
        raise ValueError("pattern must have four bounds")
    a, b, c, d = pat
    for v in (a, b, c, d):
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(
                f"engine patterns need nonnegative integer bounds, got {pat!r}"
            )
    return (a, b, c, d)


def _unpack(z: int) -> XPoly:
    coeffs = []
    while z:
        coeffs.append(z & _LIMB_MASK)
        z >>= _LIMB
    return XPoly(coeffs)


def _fill(n: int, a: int, b: int, c: int, d: int) -> None:
    """Ensure memo rows for every state reachable from (a,b,c,d) up to length n."""
    for m in range(1, n + 1):
        bm = min(b, m)
        dm = min(d, m)
        for aa in range(a + 1):
            for bb in range(bm + 1):
                for dd in range(dm + 1):
                    key = (m, aa, bb, c, dd)
                    if key in _memo:
                        continue
                    a_left = aa - 1 if aa else 0
                    acc = 0
                    for i in range(1, m + 1):
                        dl = max(dd - (m - i), 0)
                        left = (
                            1
                            if i == 1
                            else _memo[(i - 1, a_left, min(bb, i - 1), c, min(dl, i - 1))]
                        )
                        br = max(bb - i, 0)
                        right = (
                            1
                            if i == m
                            else _memo[(m - i, aa, min(br, m - i), c, min(dd, m - i))]
                        )
                        term = left * right
                        if aa == 0 and bb == 0 and i - 1 >= c and m - i >= dd:
                            term <<= _LIMB  # the maximal value matches: factor x
                        acc += term
                    _memo[key] = acc


def q_poly_recursive(n: int, pat) -> XPoly:
    """Q_n(x) by the memoized structural recursion.

    >>> print(q_poly_recursive(4, (1, 1, 1, 0)))
    12+2x
    >>> print(q_poly_recursive(5, (1, 1, 1, 1)))
    38+4x
    """
    a, b, c, d = _validate_pattern(pat)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > RECURSION_N_MAX:
        raise ResourceLimitError(
            f"recursion table supports n <= {RECURSION_N_MAX}, got {n}"
        )
    if n == 0:
        return ONE
    # bounds of n or more are unsatisfiable at every position of a length-n
    # permutation, so all such values give the same polynomial; clamping
    # keeps the memo box small for outlandish inputs
    a, b, c, d = min(a, n), min(b, n), min(c, n), min(d, n)
    _fill(n, a, b, c, d)
    return _unpack(_memo[(n, a, b, c, d)])


def q_series_recursive(pat, N: int) -> TSeries:
    """Series whose t^n coefficient is q_poly_recursive(n, pat), n <= N."""
    return TSeries(N, [q_poly_recursive(n, pat) for n in range(N + 1)])


def clear_recursion_memo() -> None:
    """Drop all memoized rows (used by cold-start benchmarks)."""
    _memo.clear()


# ---------------------------------------------------------------------------
# brute force

_CACHE_N_MAX = 12  # arrays this small are kept; larger ones are rebuilt per call
_avoider_arrays: dict[int, np.ndarray] = {}
_count_tensors: dict[int, np.ndarray] = {}


def clear_brute_cache() -> None:
    """Drop cached permutation arrays and count tensors (cold-start benchmarks)."""
    _avoider_arrays.clear()
    _count_tensors.clear()


def avoiders_array(n: int, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
    """All of S_n(132) as a (catalan(n), n) int8 array, one row per permutation."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise ResourceLimitError(f"enumeration of S_{n}(132) exceeds cap {cap}")
    built: list[np.ndarray] = []
    for m in range(n + 1):
        cached = _avoider_arrays.get(m)
        if cached is not None:
            built.append(cached)
            continue
        if m == 0:
            arr = np.zeros((1, 0), dtype=np.int8)
        else:
            parts = []
            for i in range(1, m + 1):  # position of the value m
                left = built[i - 1]
                right = built[m - i]
                ml, mr = left.shape[0], right.shape[0]
                block = np.empty((ml * mr, m), dtype=np.int8)
                if i > 1:
                    block[:, : i - 1] = np.repeat(left + (m - i), mr, axis=0)
                block[:, i - 1] = m
                if i < m:
                    block[:, i:] = np.tile(right, (ml, 1))
                parts.append(block)
            arr = np.concatenate(parts)
        if m <= _CACHE_N_MAX:
            _avoider_arrays[m] = arr
        built.append(arr)
    return built[n]


def _quadrant_count_tensor(perms: np.ndarray) -> np.ndarray:
    """(M, n, 4) int8 tensor of quadrant populations per permutation/position."""
    m_total, n = perms.shape
    out = np.empty((m_total, n, 4), dtype=np.int8)
    upper = np.triu(np.ones((n, n), dtype=bool), k=1)  # j strictly right of i
    lower = upper.T
    chunk = max(1, 50_000_000 // max(1, n * n))  # ~50 MB of bools at a time
    for s in range(0, m_total, chunk):
        block = perms[s : s + chunk]
        greater = block[:, None, :] > block[:, :, None]  # [m,i,j]: sigma_j > sigma_i
        smaller = block[:, None, :] < block[:, :, None]
        out[s : s + chunk, :, 0] = (greater & upper).sum(axis=2, dtype=np.int8)
        out[s : s + chunk, :, 1] = (greater & lower).sum(axis=2, dtype=np.int8)
        out[s : s + chunk, :, 2] = (smaller & lower).sum(axis=2, dtype=np.int8)
        out[s : s + chunk, :, 3] = (smaller & upper).sum(axis=2, dtype=np.int8)
    return out


def _counts_for(n: int, cap: int) -> np.ndarray:
    cached = _count_tensors.get(n)
    if cached is not None:
        return cached
    tensor = _quadrant_count_tensor(avoiders_array(n, cap))
    if n <= _CACHE_N_MAX:
        _count_tensors[n] = tensor
    return tensor


def q_poly_bruteforce(n: int, pat, cap: int = DEFAULT_ENUM_CAP) -> XPoly:
    """Q_n(x) by direct enumeration of S_n(132).

    >>> print(q_poly_bruteforce(5, (0, 1, 1, 1)))
    33+8x+x^2
    >>> print(q_poly_bruteforce(2, (1, 1, 0, 1)))
    2
    """
    pat = _validate_pattern(pat)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > cap:
        raise ResourceLimitError(f"enumeration of S_{n}(132) exceeds cap {cap}")
    if n == 0:
        return ONE
    counts = _counts_for(n, cap)
    # a bound of n or more is never met (a position sees n-1 other points),
    # so clamping keeps huge bounds exact while fitting the array dtype
    clamped = np.asarray([min(v, n) for v in pat], dtype=np.int64)
    matches = (counts >= clamped).all(axis=2)
    hist = np.bincount(matches.sum(axis=1), minlength=n + 1)
    return XPoly(int(h) for h in hist)
