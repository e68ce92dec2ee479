"""Finite words over ordered integer alphabets.

A word is a plain ``bytes`` value: symbol ``i`` is the byte ``i``, and the
symbol order is the byte order, so lexicographic comparison of words is
ordinary bytes comparison. Rendering symbols as letters (``a``, ``b``, ...)
is a presentation concern handled by :class:`Alphabet` at the boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from typing import Iterator, NamedTuple

Word = bytes
Run = tuple[int, int]

EMPTY: Word = b""


class EmptyWordError(ValueError):
    """Raised by operations that are undefined on the empty word."""


def _require_nonempty(w: Word) -> None:
    if not w:
        raise EmptyWordError("operation undefined on the empty word")


@dataclass(frozen=True)
class Alphabet:
    """Ordered alphabet; the position of a letter in ``letters`` is its symbol.

    The declared order is the listing order, e.g. ``Alphabet("$ab")``
    declares ``$ < a < b``.
    """

    letters: str

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("alphabet needs at least one letter")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"duplicate letters in alphabet {self.letters!r}")

    @property
    def size(self) -> int:
        return len(self.letters)

    def word(self, text: str) -> Word:
        try:
            return bytes(self.letters.index(c) for c in text)
        except ValueError:
            bad = next(c for c in text if c not in self.letters)
            raise ValueError(f"letter {bad!r} not in alphabet {self.letters!r}") from None

    def render(self, w: Word) -> str:
        if any(s >= self.size for s in w):
            raise ValueError(f"symbol outside alphabet {self.letters!r}")
        return "".join(self.letters[s] for s in w)


BINARY = Alphabet("ab")


def rle(w: Word) -> list[Run]:
    """Run-length encoding as (symbol, count) pairs; empty word gives []."""
    return [(s, len(list(g))) for s, g in groupby(w)]


def rle_expand(runs: list[Run]) -> Word:
    return b"".join(bytes([s]) * count for s, count in runs)


def format_runs(runs: list[Run], alphabet: "Alphabet") -> str:
    """Render runs as ``b^3 a^5``; the empty run list renders as an empty string."""
    return " ".join(f"{alphabet.letters[s]}^{count}" for s, count in runs)


def parse_runs(text: str, alphabet: "Alphabet") -> list[Run]:
    """Inverse of :func:`format_runs`."""
    runs: list[Run] = []
    for chunk in text.split():
        letter, _, count = chunk.partition("^")
        if not count or len(letter) != 1:
            raise ValueError(f"bad run {chunk!r}, expected letter^count")
        value = int(count)
        if value <= 0:
            raise ValueError(f"run count must be positive in {chunk!r}")
        runs.append((alphabet.word(letter)[0], value))
    if any(a == b for (a, _), (b, _) in zip(runs, runs[1:])):
        raise ValueError("adjacent runs must use distinct letters")
    return runs


class PrimitiveRoot(NamedTuple):
    root: Word
    exponent: int


def primitive_root(w: Word) -> PrimitiveRoot:
    """Unique primitive z and p >= 1 with z**p == w.

    The least i >= 1 at which w occurs in ww is the length of the
    primitive root.
    """
    _require_nonempty(w)
    p = (w + w).find(w, 1)
    return PrimitiveRoot(w[:p], len(w) // p)


def is_primitive(w: Word) -> bool:
    _require_nonempty(w)
    return (w + w).find(w, 1) == len(w)


def rotations(w: Word) -> list[Word]:
    """All |w| rotations, with multiplicity, in shift order."""
    _require_nonempty(w)
    doubled = w + w
    n = len(w)
    return [doubled[i : i + n] for i in range(n)]


def canonical_rotation(w: Word) -> Word:
    """Lexicographically least rotation: the canonical necklace representative."""
    return min(rotations(w))


def circular_factors(w: Word, length: int) -> set[Word]:
    """Distinct length-`length` factors occurring in some rotation of w."""
    if length < 0 or length > len(w):
        raise ValueError(f"factor length {length} out of range for |w|={len(w)}")
    if length == 0:
        return {EMPTY}
    doubled = w + w[: length - 1]
    return {doubled[i : i + length] for i in range(len(w))}


def all_circular_factors(w: Word) -> set[Word]:
    """Union of circular_factors(w, k) over every k in [0, |w|]."""
    found: set[Word] = {EMPTY}
    for length in range(1, len(w) + 1):
        found |= circular_factors(w, length)
    return found


def lcp_lcs(u: Word, v: Word) -> tuple[int, int]:
    """Lengths of the longest common prefix and suffix of u and v."""
    limit = min(len(u), len(v))
    i = 0
    while i < limit and u[i] == v[i]:
        i += 1
    j = 0
    while j < limit and u[len(u) - 1 - j] == v[len(v) - 1 - j]:
        j += 1
    return i, j


def commute(u: Word, v: Word) -> bool:
    """True iff uv == vu, i.e. u and v are powers of one primitive word."""
    _require_nonempty(u)
    _require_nonempty(v)
    return u + v == v + u


def parikh(w: Word, size: int) -> tuple[int, ...]:
    return tuple(w.count(s) for s in range(size))


def necklaces(size: int, n: int) -> Iterator[Word]:
    """Canonical necklace representatives of length n, in ascending order.

    Successor-based generation: each emitted word is the lexicographically
    least rotation of its class, and the classes partition all size**n words.
    """
    if size < 1:
        raise ValueError("alphabet size must be at least 1")
    if n < 1:
        raise ValueError("necklace length must be at least 1")
    a = bytearray(n + 1)

    def gen(t: int, p: int) -> Iterator[Word]:
        if t > n:
            if n % p == 0:
                yield bytes(a[1:])
        else:
            a[t] = a[t - p]
            yield from gen(t + 1, p)
            for j in range(a[t - p] + 1, size):
                a[t] = j
                yield from gen(t + 1, t)

    return gen(1, 1)
