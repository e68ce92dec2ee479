"""Burrows-Wheeler transform on rotation multisets, inversion, and run counts.

The transform here is the rotation-sorting one: no sentinel is added, and a
smallest-symbol terminator is just an ordinary symbol. Equal rotations of a
non-primitive word are kept with multiplicity and ordered by their original
shift, which makes the primary index deterministic.
"""

from __future__ import annotations

from typing import NamedTuple

from .words import Word, _require_nonempty, rle

# Above this length, rotation sorting switches from doubled-word slice
# comparison to prefix doubling; both orders are identical by construction.
_SMALL_SORT_LIMIT = 1024


class BwtResult(NamedTuple):
    transformed: Word
    primary_index: int


def rotation_order(w: Word) -> list[int]:
    """Shifts of the rotations of w in ascending lexicographic order.

    Equal rotations are tie-broken by ascending shift.
    """
    _require_nonempty(w)
    n = len(w)
    if n <= _SMALL_SORT_LIMIT:
        doubled = w + w
        return sorted(range(n), key=lambda i: doubled[i : i + n])
    return _rotation_order_doubling(w)


def _rotation_order_doubling(w: Word) -> list[int]:
    # Suffixes of w+w followed by a symbol above the alphabet compare like
    # rotations, and the tall terminator sorts equal rotations by shift.
    n = len(w)
    text = list(w + w)
    text.append(max(w) + 1)
    sa = _suffix_array(text)
    return [i for i in sa if i < n]


def _suffix_array(text: list[int]) -> list[int]:
    """Prefix-doubling suffix array, O(n log^2 n)."""
    m = len(text)
    rank = list(text)
    sa = list(range(m))
    k = 1
    while True:
        def key(i: int) -> tuple[int, int]:
            return (rank[i], rank[i + k] if i + k < m else -1)

        sa.sort(key=key)
        fresh = [0] * m
        for pos in range(1, m):
            fresh[sa[pos]] = fresh[sa[pos - 1]] + (key(sa[pos]) != key(sa[pos - 1]))
        rank = fresh
        if rank[sa[-1]] == m - 1:
            return sa
        k *= 2


def bwt(w: Word) -> BwtResult:
    """Last symbols of the sorted rotations, plus the rank of w itself."""
    order = rotation_order(w)
    transformed = bytes(w[i - 1] for i in order)
    return BwtResult(transformed, order.index(0))


def inverse_bwt(t: Word, primary_index: int) -> Word:
    """Invert the transform by walking the last-to-first column mapping."""
    _require_nonempty(t)
    n = len(t)
    if not 0 <= primary_index < n:
        raise ValueError(f"primary index {primary_index} out of range for length {n}")
    stable = sorted(range(n), key=lambda i: (t[i], i))
    lf = [0] * n
    for rank_pos, i in enumerate(stable):
        lf[i] = rank_pos
    out = bytearray()
    row = primary_index
    for _ in range(n):
        out.append(t[row])
        row = lf[row]
    out.reverse()
    return bytes(out)


def run_count(w: Word) -> int:
    """Number of equal-letter runs of the transform of w."""
    return len(rle(bwt(w).transformed))


def bwt_of_power(z: Word, p: int) -> BwtResult:
    """Transform of z**p computed from the transform of z.

    Each symbol of bwt(z) expands to a block of p copies, and the rank of
    the input grows p-fold; no rotation of z**p is ever sorted.
    """
    if p < 1:
        raise ValueError("exponent must be positive")
    base = bwt(z)
    expanded = b"".join(bytes([s]) * p for s in base.transformed)
    return BwtResult(expanded, base.primary_index * p)
