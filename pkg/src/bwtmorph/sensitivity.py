"""Run-count sensitivity of morphisms, exactly, by necklace enumeration.

The per-word deltas compare the number of transform runs before and after a
morphism is applied. The length-n maxima are taken over one representative
per rotation class, which is exact because run counts are invariant under
rotation on both sides.

Constant words are skipped by default: a morphism sends a**n to a power of
a single image, whose run count does not depend on n, and keeping them
would drown the classification signal (every non-trivial morphism gains a
constant offset from r(a**n) = 1). Pass include_constant_words=True to
maximize over all of Sigma**n literally.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, NamedTuple

from .bwt import run_count
from .morphisms import Morphism, is_cyclic, rho
from .primitivity import is_primitivity_preserving
from .words import EmptyWordError, Word, necklaces, rle


class SensitivityRow(NamedTuple):
    n: int
    as_value: int
    ms_value: Fraction
    as_witness: Word
    ms_witness: Word


class ExperimentTable(NamedTuple):
    headers: tuple[str, ...]
    rows: tuple[tuple, ...]


def delta_plus(m: Morphism, w: Word) -> int:
    if not w:
        raise EmptyWordError("delta is undefined on the empty word")
    return run_count(m.apply(w)) - run_count(w)


def delta_times(m: Morphism, w: Word) -> Fraction:
    if not w:
        raise EmptyWordError("delta is undefined on the empty word")
    return Fraction(run_count(m.apply(w)), run_count(w))


def sensitivity(m: Morphism, n: int, include_constant_words: bool = False) -> SensitivityRow:
    """Exact maxima of the additive and multiplicative deltas over length n.

    Witnesses are the least canonical necklaces attaining each maximum;
    enumeration order makes that deterministic.
    """
    sigma = m.source_size
    if n < 2 and sigma >= 2:
        raise ValueError("sensitivity needs n >= 2 on alphabets with two or more letters")
    if n < 1:
        raise ValueError("sensitivity needs n >= 1")
    best_add: int | None = None
    best_mul: Fraction | None = None
    add_witness = mul_witness = b""
    for w in necklaces(sigma, n):
        if not include_constant_words and len(set(w)) == 1:
            continue
        before = run_count(w)
        after = run_count(m.apply(w))
        add = after - before
        mul = Fraction(after, before)
        if best_add is None or add > best_add:
            best_add, add_witness = add, w
        if best_mul is None or mul > best_mul:
            best_mul, mul_witness = mul, w
    if best_add is None or best_mul is None:
        raise ValueError(f"no qualifying words of length {n}")
    return SensitivityRow(n, best_add, best_mul, add_witness, mul_witness)


def cyclic_sensitivity_constants(m: Morphism) -> tuple[int, Fraction]:
    """(r(z) - 2, r(z) / 2) for the common primitive root z of a cyclic morphism.

    These equal the length-independent sensitivity maxima whenever
    r(z) >= 2; for r(z) = 1 the formula undershoots, since the minimum
    run count over non-constant words is 2.
    """
    z = is_cyclic(m)
    if z is None:
        raise ValueError("sensitivity constants require a cyclic morphism")
    r = run_count(z)
    return r - 2, Fraction(r, 2)


def is_bwt_run_preserving(m: Morphism) -> bool:
    """Bounded additive sensitivity, decided structurally.

    Cyclic morphisms are trivially bounded; acyclic ones are bounded
    exactly when they preserve primitivity.
    """
    if not m.is_binary():
        raise ValueError("run preservation is decided for binary morphisms only")
    if is_cyclic(m) is not None:
        return True
    return is_primitivity_preserving(m).preserving


_A, _B = b"\x00", b"\x01"


def wk_word(k: int) -> Word:
    """The k-th member of the quadratic-length family driving unbounded growth.

    Blocks a b^i a a and a b^i a b a^(i-2) for i = 2 .. k-1, closed by
    a b^k a; the longest b-run is k and the length grows as k^2.
    """
    if k <= 5:
        raise ValueError("the family is defined for k > 5")
    parts = []
    for i in range(2, k):
        parts.append(_A + _B * i + _A + _A)
        parts.append(_A + _B * i + _A + _B + _A * (i - 2))
    parts.append(_A + _B * k + _A)
    return b"".join(parts)


def rho_experiment(p: int, ks: Iterable[int]) -> ExperimentTable:
    """Run growth of the b -> b**p morphism along the quadratic family."""
    if p <= 1:
        raise ValueError("exponent must exceed 1")
    m = rho(p)
    rows = []
    for k in ks:
        w = wk_word(k)
        before = run_count(w)
        after = run_count(m.apply(w))
        rows.append((k, before, after, after - before, Fraction(after, before)))
    return ExperimentTable(("k", "r_before", "r_after", "delta_plus", "delta_times"), tuple(rows))


# Three letters $ < a < b; the morphism fixes $ and acts as the Fibonacci
# morphism on a and b.
DOLLAR_FIBONACCI = Morphism((b"\x00", b"\x01\x02", b"\x01"))


def _fibonacci_word(j: int) -> Word:
    w = b"\x01"
    for _ in range(j):
        w = DOLLAR_FIBONACCI.apply(w)
    return w


def fibonacci_dollar_experiment(ks: Iterable[int]) -> ExperimentTable:
    """Run-count ratios along terminated Fibonacci words of index 2k and 2k+1.

    The morphism maps each even-index terminated word to the next one;
    that identity is re-checked before measuring.
    """
    rows = []
    for k in ks:
        lower = _fibonacci_word(2 * k) + b"\x00"
        upper = _fibonacci_word(2 * k + 1) + b"\x00"
        if DOLLAR_FIBONACCI.apply(lower) != upper:
            raise AssertionError("image of the even-index word must be the odd-index word")
        before = run_count(lower)
        after = run_count(upper)
        rows.append((k, before, after, Fraction(after, before)))
    return ExperimentTable(("k", "r_even", "r_odd", "ratio"), tuple(rows))


def _distinct_bounded_b_runs(w: Word) -> set[int]:
    # Distinct lengths i of circular b-runs, each flanked by a's; valid for
    # words with at least two a's and one b.
    first_a = w.index(0)
    rotated = w[first_a:] + w[:first_a]
    return {count for s, count in rle(rotated) if s == 1}


def rho_ms_bound_check(p: int, max_n: int) -> bool:
    """Exhaustively verify the run-growth bounds for the b -> b**p morphism.

    Over every necklace up to max_n with at least two a's and one b:
    the additive delta is at most twice the run count before, the ratio is
    at most 3, and the run count after is bounded by the one before plus
    twice the number of distinct circular a b^i a factors.
    """
    if p <= 1:
        raise ValueError("exponent must exceed 1")
    m = rho(p)
    for n in range(3, max_n + 1):
        for w in necklaces(2, n):
            if w.count(0) < 2 or w.count(1) < 1:
                continue
            before = run_count(w)
            after = run_count(m.apply(w))
            if after - before > 2 * before:
                return False
            if Fraction(after, before) > 3:
                return False
            if after > before + 2 * len(_distinct_bounded_b_runs(w)):
                return False
    return True
