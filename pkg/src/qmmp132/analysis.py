"""Coefficient extraction, closed-form checking, and cross-validation.

This module turns the three computation engines into verification and
export tools:

* ``coeff_x`` / ``top_coeff_report`` / ``export_sequence`` pull single
  coefficients, leading terms, and whole integer sequences out of the
  distribution polynomials (the x=0 column is the avoidance count:
  permutations with no match at all).

* ``ClosedFormCheck`` + ``check_closed_forms`` evaluate a registry of
  exact coefficient formulas (highest coefficient, second-highest
  coefficient, and x=0 closed forms) against the structural recursion
  over a range of lengths.  ``default_registry`` ships every formula
  the package asserts; four entries carry series-validated corrections
  whose stated source forms contradict the verified expansions (see
  each entry's ``note``).

* ``classical_equivalence_check`` compares the x=0 column against a
  direct count of permutations avoiding a set of classical patterns.

* ``cross_validate`` runs the three engines against each other and the
  inversion symmetry over a whole family of patterns, returning the
  first discrepancy found (it is the library's self-test driver; the
  engine hooks are injectable so tests can prove it catches corrupted
  implementations).

All arithmetic is exact; all reports are deterministic functions of
their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Sequence

from .dist_engine import q_poly_bruteforce, q_poly_recursive, q_series_recursive
from .gf_formulas import dispatch
from .mmp_stat import swap_b_d
from .perm_core import (
    ResourceLimitError,
    all_perms,
    avoiders_after_also_avoiding,
    catalan,
    contains_classical,
    parse_perm,
    reduce_word,
)
from .poly_series import XPoly

__all__ = [
    "CheckReport",
    "CheckResult",
    "ClosedFormCheck",
    "EquivalenceReport",
    "SequenceExport",
    "XvalReport",
    "avoidance_sequence",
    "check_closed_forms",
    "classical_equivalence_check",
    "coeff_x",
    "cross_validate",
    "default_registry",
    "export_sequence",
    "top_coeff_report",
]

DEFAULT_SEQUENCE_TERMS = 12
CLASSICAL_SCAN_CAP = 10


def coeff_x(p: XPoly, r: int) -> int:
    """Exact coefficient of x^r in p (0 above the degree).

    >>> coeff_x(XPoly((38, 4)), 1)
    4
    >>> coeff_x(XPoly((38, 4)), 5)
    0
    >>> coeff_x(XPoly((99, 29, 4)), 0)
    99
    """
    return p.coeff(r)


def top_coeff_report(pattern, n: int) -> tuple[int, int]:
    """(x-degree, leading coefficient) of the length-n polynomial.

    >>> top_coeff_report((1, 1, 1, 0), 7)
    (4, 2)
    >>> top_coeff_report((2, 1, 0, 1), 5)
    (1, 9)
    >>> top_coeff_report((0, 0, 0, 0), 4)
    (4, 14)
    """
    q = q_poly_recursive(n, pattern)
    return (q.degree, q.leading())


@dataclass(frozen=True)
class SequenceExport:
    """An exact integer sequence extracted from one pattern's polynomials.

    ``transform`` is one of ``"x0"`` (coefficient of x^0, the avoidance
    count), ``"x^R"`` for a fixed exponent R, or ``"top"`` (leading
    coefficient).  ``values[i]`` belongs to length ``start + i``.
    """

    pattern: tuple[int, int, int, int]
    transform: str
    start: int
    values: tuple[int, ...]

    def rows(self) -> list[tuple[int, int]]:
        return [(self.start + i, v) for i, v in enumerate(self.values)]


def _transform_value(q: XPoly, transform: str) -> int:
    if transform == "x0":
        return q.coeff(0)
    if transform == "top":
        return q.leading()
    if transform.startswith("x^"):
        try:
            r = int(transform[2:])
        except ValueError:
            raise ValueError(f"bad transform {transform!r}") from None
        if r < 0:
            raise ValueError(f"bad transform {transform!r}")
        return q.coeff(r)
    raise ValueError(f"unknown transform {transform!r}; use x0, x^R, or top")


def export_sequence(
    pattern, transform: str, n_max: int = DEFAULT_SEQUENCE_TERMS
) -> SequenceExport:
    """Sequence of one coefficient per length n = 1..n_max, exactly."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    vals = tuple(
        _transform_value(q_poly_recursive(n, pattern), transform)
        for n in range(1, n_max + 1)
    )
    a, b, c, d = pattern
    return SequenceExport((a, b, c, d), transform, 1, vals)


def avoidance_sequence(pattern, n_max: int = DEFAULT_SEQUENCE_TERMS) -> SequenceExport:
    """x=0 column: counts of avoiders with zero pattern matches.

    >>> avoidance_sequence((1, 1, 1, 0), 9).values
    (1, 2, 5, 12, 28, 64, 144, 320, 704)
    >>> avoidance_sequence((1, 1, 0, 1), 10).values
    (1, 2, 5, 10, 17, 26, 37, 50, 65, 82)
    >>> avoidance_sequence((0, 1, 1, 1), 7).values
    (1, 2, 5, 13, 33, 81, 193)
    """
    return export_sequence(pattern, "x0", n_max)


@dataclass(frozen=True)
class ClosedFormCheck:
    """One exact coefficient formula, checkable against the engine.

    For each n >= validity the engine polynomial Q_n must satisfy
    ``coeff_x(Q_n, selector(n)) == formula(n)``; when ``is_top`` is
    set, ``selector(n)`` must also be the exact x-degree of Q_n (the
    formula claims the *highest* power, not just some coefficient).
    """

    name: str
    pattern: tuple[int, int, int, int]
    selector: Callable[[int], int]
    formula: Callable[[int], int]
    validity: int
    is_top: bool = False
    note: str = ""


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    n_checked: tuple[int, ...]
    failure: tuple[int, str, str] | None = None  # (n, expected, got)

    def line(self) -> str:
        if self.passed:
            lo = self.n_checked[0] if self.n_checked else None
            hi = self.n_checked[-1] if self.n_checked else None
            span = f"n={lo}..{hi}" if self.n_checked else "no n in range"
            return f"PASS {self.name} ({span})"
        n, expected, got = self.failure
        return f"FAIL {self.name} at n={n}: expected {expected}, got {got}"


@dataclass(frozen=True)
class CheckReport:
    results: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def __str__(self) -> str:
        lines = [r.line() for r in self.results]
        tally = sum(r.passed for r in self.results)
        lines.append(f"{tally}/{len(self.results)} checks passed")
        return "\n".join(lines)


def _run_check(check: ClosedFormCheck, n_max: int) -> CheckResult:
    checked = []
    for n in range(check.validity, n_max + 1):
        q = q_poly_recursive(n, check.pattern)
        r = check.selector(n)
        expected = check.formula(n)
        got = q.coeff(r)
        if check.is_top and q.degree != r:
            return CheckResult(
                check.name,
                False,
                tuple(checked),
                (n, f"degree {r}", f"degree {q.degree}"),
            )
        if got != expected:
            return CheckResult(
                check.name, False, tuple(checked), (n, str(expected), str(got))
            )
        checked.append(n)
    return CheckResult(check.name, True, tuple(checked))


def check_closed_forms(
    registry: Sequence[ClosedFormCheck] | None = None, n_max: int = 25
) -> CheckReport:
    """Evaluate every registered formula against the recursion engine."""
    if registry is None:
        registry = default_registry()
    return CheckReport(tuple(_run_check(c, n_max) for c in registry))


def _binom2(m: int) -> int:
    return comb(m, 2)


def default_registry() -> tuple[ClosedFormCheck, ...]:
    """Every coefficient closed form the package asserts.

    Families are instantiated at the small parameter values their
    source expansions cover (m, l, k in 1..3 as applicable).  Entries
    whose ``note`` is nonempty are series-validated corrections: the
    form stated alongside the source expansions contradicts the
    expansions themselves (and both independent engines); the registry
    encodes the value the verified series force.
    """
    C = catalan
    reg: list[ClosedFormCheck] = []

    def top(name, pattern, shift, const_fn, validity, note=""):
        reg.append(
            ClosedFormCheck(
                name,
                pattern,
                selector=lambda n, s=shift: n - s,
                formula=const_fn,
                validity=validity,
                is_top=True,
                note=note,
            )
        )

    def second(name, pattern, shift, fn, validity, note=""):
        reg.append(
            ClosedFormCheck(
                name,
                pattern,
                selector=lambda n, s=shift: n - s,
                formula=fn,
                validity=validity,
                note=note,
            )
        )

    # --- patterns bounding quadrants I, II, III -------------------------
    for m in (1, 2, 3):
        top(f"11{m}0-top", (1, 1, m, 0), 2 + m, lambda n, m=m: 2 * C(m), 3 + m)
    second("1110-second", (1, 1, 1, 0), 4, lambda n: 6 + 2 * _binom2(n - 2), 5)
    for m in (2, 3):
        second(
            f"11{m}0-second",
            (1, 1, m, 0),
            3 + m,
            lambda n, m=m: 2 * C(m + 1) + 8 * C(m) + 4 * C(m) * (n - 4 - m),
            4 + m,
        )
    for m in (1, 2):
        top(f"21{m}0-top", (2, 1, m, 0), 3 + m, lambda n, m=m: 3 * C(m), 4 + m)
    for m in (1, 2, 3):
        top(f"12{m}0-top", (1, 2, m, 0), 3 + m, lambda n, m=m: 5 * C(m), 4 + m)
    for m in (1, 2):
        top(f"22{m}0-top", (2, 2, m, 0), 4 + m, lambda n, m=m: 9 * C(m), 5 + m)

    # --- patterns bounding quadrants II, III, IV ------------------------
    for el in (1, 2, 3):
        top(f"01{el}1-top", (0, 1, el, 1), 2 + el, lambda n, el=el: C(el), 3 + el)
    second("0111-second", (0, 1, 1, 1), 4, lambda n: 5 + _binom2(n - 2), 5)
    for el in (2, 3):
        second(
            f"01{el}1-second",
            (0, 1, el, 1),
            3 + el,
            lambda n, el=el: C(el + 1) + 6 * C(el) + 2 * C(el) * (n - 4 - el),
            4 + el,
        )
    for el in (1, 2, 3):
        top(f"01{el}2-top", (0, 1, el, 2), 3 + el, lambda n, el=el: 2 * C(el), 4 + el)
    second(
        "0112-second",
        (0, 1, 1, 2),
        5,
        lambda n: 13 + 2 * _binom2(n - 3),
        6,
        note="series-validated correction: stated forms 13+binom(n-2,2) and "
        "13+2*binom(n-3,2) disagree between statement and proof; the "
        "expansions force 13+2*binom(n-3,2)",
    )
    for el in (2, 3):
        second(
            f"01{el}2-second",
            (0, 1, el, 2),
            4 + el,
            lambda n, el=el: 2 * C(el + 1) + 15 * C(el) + 4 * C(el) * (n - 5 - el),
            5 + el,
        )
    for el in (1, 2, 3):
        top(
            f"02{el}2-top",
            (0, 2, el, 2),
            4 + el,
            lambda n, el=el: 4 * C(el),
            5 + el,
            note="series-validated exponent n-4-el (a stated variant shifts it)",
        )

    # --- patterns bounding quadrants I, II, IV --------------------------
    for el in (1, 2, 3):
        top(
            f"1{el}01-top",
            (1, el, 0, 1),
            2 + el,
            lambda n, el=el: 2 * C(el + 1) * C(n - el - 2),
            3 + el,
            note="series-validated correction: the stated constant 4*C(el) "
            "equals the true constant 2*C(el+1) only at el=1",
        )
    second(
        "1101-second", (1, 1, 0, 1), 4, lambda n: 8 * C(n - 3) + C(n - 4), 5
    )
    for k in (2, 3):
        top(
            f"{k}101-top",
            (k, 1, 0, 1),
            2 + k,
            lambda n, k=k: (k + 1) ** 2 * C(n - k - 2),
            3 + k,
        )

    # --- patterns bounding all four quadrants ---------------------------
    for k in (1, 2, 3):
        top(f"{k}111-top", (k, 1, 1, 1), 3 + k, lambda n, k=k: (k + 1) ** 2, 4 + k)
    second(
        "1111-second",
        (1, 1, 1, 1),
        5,
        lambda n: 17 + 4 * _binom2(n - 3),
        6,
        note="series-validated correction: stated binom(n-3,3); expansions "
        "force binom(n-3,2)",
    )

    # --- x = 0 closed forms ----------------------------------------------
    reg.append(
        ClosedFormCheck(
            "1101-x0",
            (1, 1, 0, 1),
            selector=lambda n: 0,
            formula=lambda n: (n - 1) ** 2 + 1,
            validity=1,
        )
    )
    reg.append(
        ClosedFormCheck(
            "0111-x0",
            (0, 1, 1, 1),
            selector=lambda n: 0,
            formula=lambda n: 1 if n == 1 else (n - 1) * 2 ** (n - 2) + 1,
            validity=1,
        )
    )
    return tuple(reg)


@dataclass(frozen=True)
class EquivalenceReport:
    pattern: tuple[int, int, int, int]
    forbidden: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[int, int, int], ...]  # (n, x0_count, classical_count)

    @property
    def all_equal(self) -> bool:
        return all(lhs == rhs for _, lhs, rhs in self.rows)

    def __str__(self) -> str:
        out = []
        for n, lhs, rhs in self.rows:
            mark = "==" if lhs == rhs else "!="
            out.append(f"n={n}: zero-match count {lhs} {mark} avoider count {rhs}")
        verdict = "EQUAL" if self.all_equal else "NOT EQUAL"
        out.append(f"result: {verdict}")
        return "\n".join(out)


def classical_equivalence_check(
    pattern,
    forbidden: Iterable,
    n_max: int,
    cap: int = CLASSICAL_SCAN_CAP,
) -> EquivalenceReport:
    """Compare the x=0 column with a classical multi-avoidance count.

    ``forbidden`` is a collection of classical patterns (tuples or
    strings accepted by the permutation parser); the right-hand side
    counts permutations of S_n avoiding every one of them, by direct
    scan (cap-limited), with a fast path when 132 itself is forbidden.
    """
    if n_max > cap:
        raise ResourceLimitError(
            f"classical avoidance scan capped at n={cap}; asked for {n_max}"
        )
    pats = tuple(
        reduce_word(p if isinstance(p, tuple) else parse_perm(p)) for p in forbidden
    )
    has_132 = (1, 3, 2) in pats
    rows = []
    for n in range(1, n_max + 1):
        lhs = q_poly_recursive(n, pattern).coeff(0)
        if has_132:
            extras = tuple(p for p in pats if p != (1, 3, 2))
            rhs = avoiders_after_also_avoiding(n, extras)
        else:
            rhs = sum(
                1
                for s in all_perms(n)
                if not any(contains_classical(s, p) for p in pats)
            )
        rows.append((n, lhs, rhs))
    a, b, c, d = pattern
    return EquivalenceReport((a, b, c, d), pats, tuple(rows))


@dataclass(frozen=True)
class XvalReport:
    entry_bound: int
    n_max: int
    order: int
    patterns_checked: int
    comparisons: int
    failure: tuple[str, tuple[int, int, int, int], int, str] | None = None
    # failure = (kind, pattern, n-or-order, detail)

    @property
    def passed(self) -> bool:
        return self.failure is None

    def __str__(self) -> str:
        head = (
            f"cross-validation: entry bound {self.entry_bound}, "
            f"lengths <= {self.n_max}, series order {self.order}"
        )
        if self.passed:
            return (
                f"{head}\nPASS: {self.patterns_checked} patterns, "
                f"{self.comparisons} comparisons, no discrepancies"
            )
        kind, pat, n, detail = self.failure
        return f"{head}\nFAIL [{kind}] pattern={pat} n={n}: {detail}"


def _natural_patterns(entry_bound: int):
    for a in range(entry_bound + 1):
        for b in range(entry_bound + 1 - a):
            for c in range(entry_bound + 1 - a - b):
                for d in range(entry_bound + 1 - a - b - c):
                    yield (a, b, c, d)


def cross_validate(
    entry_bound: int,
    n_max: int,
    order: int,
    *,
    brute_fn: Callable = q_poly_bruteforce,
    rec_fn: Callable = q_poly_recursive,
    dispatch_fn: Callable = dispatch,
) -> XvalReport:
    """Run all three engines against each other over a pattern family.

    For every all-natural pattern with a+b+c+d <= entry_bound, checks
    brute force == recursion for n <= n_max, recursion == formula
    dispatch through the given series order, and invariance under the
    inversion reflection (a,b,c,d) -> (a,d,c,b).  Stops at the first
    discrepancy.  The engine hooks exist so the test suite can verify
    that deliberately corrupted engines are caught.
    """
    patterns = 0
    comparisons = 0
    for pat in _natural_patterns(entry_bound):
        patterns += 1
        for n in range(n_max + 1):
            b = brute_fn(n, pat)
            r = rec_fn(n, pat)
            comparisons += 1
            if b != r:
                return XvalReport(
                    entry_bound, n_max, order, patterns, comparisons,
                    ("brute-vs-recursion", pat, n, f"brute {b} vs recursion {r}"),
                )
            rs = rec_fn(n, swap_b_d(pat))
            comparisons += 1
            if r != rs:
                return XvalReport(
                    entry_bound, n_max, order, patterns, comparisons,
                    ("reflection-symmetry", pat, n, f"{r} vs reflected {rs}"),
                )
        gf = dispatch_fn(pat, order)
        eng = q_series_recursive(pat, order) if rec_fn is q_poly_recursive else None
        for n in range(order + 1):
            want = rec_fn(n, pat) if eng is None else eng.coeff(n)
            comparisons += 1
            if gf.coeff(n) != want:
                return XvalReport(
                    entry_bound, n_max, order, patterns, comparisons,
                    (
                        "recursion-vs-dispatch",
                        pat,
                        n,
                        f"dispatch {gf.coeff(n)} vs recursion {want}",
                    ),
                )
    return XvalReport(entry_bound, n_max, order, patterns, comparisons)
