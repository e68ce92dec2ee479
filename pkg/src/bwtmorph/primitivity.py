"""Primitivity preservation, power-word structure, and recognizability.

The preservation test is finite: orient the images so the longer one comes
first, then the only exponent pairs (l, m) that can make u**l v**m a power
are (2, 1) and (1, m) with m at most (|u| - 4) / |v| + 2. Checking the
primitivity of those candidates, plus the two images themselves, decides the
property in time polynomial in the size of the morphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .morphisms import Morphism, _require_binary, _require_injective
from .words import Word, canonical_rotation, commute, is_primitive, primitive_root, rotations


class HolubTestSet(NamedTuple):
    u: Word
    v: Word
    swapped: bool
    pairs: tuple[tuple[int, int], ...]


def holub_test_set(m: Morphism) -> HolubTestSet:
    """Oriented images and the exponent pairs whose primitivity must be checked."""
    _require_injective(m)
    u, v = m.images
    swapped = len(u) < len(v)
    if swapped:
        u, v = v, u
    # The formula can go below 1 for short images; (1, 1) is always checked.
    bound = max(1, (len(u) - 4) // len(v) + 2)
    pairs = ((2, 1),) + tuple((1, j) for j in range(1, bound + 1))
    return HolubTestSet(u, v, swapped, pairs)


class PowerHit(NamedTuple):
    pair: tuple[int, int]
    witness: Word  # canonical rotation of the source word
    z: Word
    k: int


def _scan_power(m: Morphism, tests: HolubTestSet) -> PowerHit | None:
    """First exponent pair whose candidate word is a power; None when all are primitive."""
    x, y = (1, 0) if tests.swapped else (0, 1)
    for l, j in tests.pairs:
        candidate = tests.u * l + tests.v * j
        if not is_primitive(candidate):
            witness = canonical_rotation(bytes([x]) * l + bytes([y]) * j)
            z, k = primitive_root(m.apply(witness))
            return PowerHit((l, j), witness, z, k)
    return None


class PpVerdict(NamedTuple):
    preserving: bool
    witness: Word | None


def is_primitivity_preserving(m: Morphism) -> PpVerdict:
    """Decide whether every primitive word keeps a primitive image.

    On failure the witness is a primitive word whose image is a power:
    a letter when its own image is a power, otherwise the canonical
    rotation of the word found by the finite exponent scan.
    """
    _require_injective(m)
    for letter, image in enumerate(m.images):
        if not is_primitive(image):
            return PpVerdict(False, bytes([letter]))
    hit = _scan_power(m, holub_test_set(m))
    if hit is not None:
        return PpVerdict(False, hit.witness)
    return PpVerdict(True, None)


class PowerCase(Enum):
    """Shape of the set of primitive words mapped to powers."""

    PRESERVING = "1a"
    ONE_LETTER_POWER = "1b"
    TWO_LETTER_POWERS = "1c"
    ROTATION_CLASS = "2a"
    ROTATION_CLASS_PLUS_LETTER = "2b"


@dataclass(frozen=True)
class PowerWordClassification:
    case: PowerCase
    letter_witnesses: tuple[int, ...]
    rotation_witness: Word | None
    z: Word | None
    k: int | None

    def members(self) -> list[Word]:
        """The full (finite) set: witness letters plus the rotation class."""
        out = [bytes([c]) for c in self.letter_witnesses]
        if self.rotation_witness is not None:
            seen = set()
            for r in rotations(self.rotation_witness):
                if r not in seen:
                    seen.add(r)
                    out.append(r)
        return out


def power_words(m: Morphism) -> PowerWordClassification:
    """Exact description of the primitive words whose image under m is a power."""
    _require_injective(m)
    letters = tuple(c for c, image in enumerate(m.images) if not is_primitive(image))
    hit = _scan_power(m, holub_test_set(m))
    if hit is None:
        if not letters:
            case = PowerCase.PRESERVING
        elif len(letters) == 1:
            case = PowerCase.ONE_LETTER_POWER
        else:
            case = PowerCase.TWO_LETTER_POWERS
        return PowerWordClassification(case, letters, None, None, None)
    if len(letters) > 1:
        raise AssertionError("a power among the mixed candidates excludes two non-primitive images")
    case = PowerCase.ROTATION_CLASS_PLUS_LETTER if letters else PowerCase.ROTATION_CLASS
    return PowerWordClassification(case, letters, hit.witness, hit.z, hit.k)


@dataclass(frozen=True)
class HolubForm:
    """Parametric shape of an oriented image pair (u, v) with a power in u*v*."""

    case_index: int
    p: Word
    q: Word
    exponents: dict[str, int]

    def rebuild(self) -> tuple[Word, Word]:
        p, q, e = self.p, self.q, self.exponents
        if self.case_index == 1:
            return (p + q) * e["m"] + p, q + (p + q) * e["n"]
        if self.case_index == 2:
            return (p + q * e["n"]) * e["m"] + p, q
        if self.case_index == 3:
            v = q + (p + q) * e["m"]
            block = p + q + v * (e["k"] - 1)
            return block * e["n"] + p + q + v * (e["k"] - 2) + q + p, v
        if self.case_index == 4:
            return (p + q) * e["m"] + p, q + p + p + q
        raise ValueError(f"no case {self.case_index}")


def _case1(u: Word, v: Word) -> HolubForm | None:
    # u = (pq)^m p, v = q(pq)^n with m + n >= 1; lengths fix |p|, |q| per (m, n).
    for total in range(1, len(u) + len(v) + 1):
        for mm in range(0, total + 1):
            nn = total - mm
            det = mm + nn + 1
            lp = ((nn + 1) * len(u) - mm * len(v))
            lq = ((mm + 1) * len(v) - nn * len(u))
            if lp % det or lq % det:
                continue
            lp //= det
            lq //= det
            if lp < 1 or lq < 1:
                continue
            p = u[:lp]
            q = v[:lq]
            form = HolubForm(1, p, q, {"m": mm, "n": nn})
            if not commute(p, q) and form.rebuild() == (u, v):
                return form
    return None


def _case2(u: Word, v: Word, n: int) -> HolubForm | None:
    q = v
    for mm in range(1, len(u) + 1):
        lp = len(u) - mm * n * len(q)
        if lp < mm + 1 or lp % (mm + 1):
            continue
        p = u[: lp // (mm + 1)]
        form = HolubForm(2, p, q, {"m": mm, "n": n})
        if not commute(p, q) and form.rebuild() == (u, v):
            return form
    return None


def _case3(u: Word, v: Word, k: int) -> HolubForm | None:
    for mm in range(1, len(v) + 1):
        for lq in range(1, len(v)):
            lp = len(v) - (mm + 1) * lq
            if lp < mm or lp % mm:
                continue
            lp //= mm
            q = v[:lq]
            p = v[lq : lq + lp]
            if commute(p, q):
                continue
            for nn in range(0, len(u) + 1):
                form = HolubForm(3, p, q, {"k": k, "m": mm, "n": nn})
                rebuilt = form.rebuild()
                if len(rebuilt[0]) > len(u):
                    break
                if rebuilt == (u, v):
                    return form
    return None


def _case4(u: Word, v: Word) -> HolubForm | None:
    if len(v) % 2:
        return None
    for lq in range(1, len(v) // 2):
        lp = (len(v) - 2 * lq) // 2
        if lp < 1:
            continue
        q = v[:lq]
        p = v[lq : lq + lp]
        if commute(p, q):
            continue
        for mm in range(2, len(u) + 1):
            form = HolubForm(4, p, q, {"m": mm})
            rebuilt = form.rebuild()
            if len(rebuilt[0]) > len(u):
                break
            if rebuilt == (u, v):
                return form
    return None


def classify_holub_form(m: Morphism) -> HolubForm | None:
    """Match the oriented images against the parametric power families.

    Only meaningful when the mixed-candidate scan finds a power; returns
    None for preserving morphisms and for those whose only failures are
    letter images.
    """
    _require_injective(m)
    tests = holub_test_set(m)
    hit = _scan_power(m, tests)
    if hit is None:
        return None
    u, v = tests.u, tests.v
    l, j = hit.pair
    if (l, j) == (2, 1):
        return _case4(u, v)
    if (l, j) == (1, 1):
        return _case1(u, v)
    return _case2(u, v, j) or _case3(u, v, j)


def are_conjugates(u: Word, v: Word) -> bool:
    """True iff v is a rotation of u."""
    if not u or not v:
        raise ValueError("conjugacy is defined on non-empty words")
    return len(u) == len(v) and v in u + u


class RecognizabilityVerdict(NamedTuple):
    recognizable: bool
    reason: str


def is_recognizable(m: Morphism) -> RecognizabilityVerdict:
    """Whether every image admits a unique circular factorization into codewords.

    Preserving morphisms are recognizable exactly when the two images are
    not conjugate; a non-preserving morphism never is, because arbitrarily
    large powers of its witness words all map into single rotation classes.
    """
    verdict = is_primitivity_preserving(m)
    if not verdict.preserving:
        return RecognizabilityVerdict(False, "not primitivity-preserving")
    if are_conjugates(*m.images):
        return RecognizabilityVerdict(False, "conjugate images")
    return RecognizabilityVerdict(True, "primitivity-preserving with non-conjugate images")


def decodes_over(w: Word, p: Word, q: Word) -> bool:
    """Membership of w in {p, q}+ by positional dynamic programming."""
    if not w:
        return False
    n = len(w)
    ok = [False] * (n + 1)
    ok[0] = True
    for i in range(n):
        if not ok[i]:
            continue
        for code in (p, q):
            if w.startswith(code, i):
                ok[i + len(code)] = True
    return ok[n]


def check_pp_decomposition(outer: Morphism, inner: Morphism) -> bool:
    """Decide preservation of outer composed with inner without composing.

    Requires inner = (p, q) preserving, and no word mapped to a power by
    outer may be spellable from p and q.
    """
    _require_binary(inner)
    if inner.target_size > outer.source_size:
        raise ValueError("alphabet mismatch: inner does not feed outer")
    if not is_primitivity_preserving(inner).preserving:
        return False
    p, q = inner.images
    return not any(decodes_over(x, p, q) for x in power_words(outer).members())
