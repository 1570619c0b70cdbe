"""Morphisms on ternary words: application, powers, fixed points and certificates."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .disposability import IrreducibilityReport, is_k_irreducible
from .enumerator import iter_square_free
from .errors import ImageTooShort, MorphismSpecError, NotProlongable
from .words import ALPHABET, SquareWitness, Word, find_square, letter, parse_word


@dataclass(frozen=True)
class Morphism:
    """A morphism given by the images of 0, 1 and 2."""

    images: tuple

    def __post_init__(self):
        if len(self.images) != 3:
            raise ValueError("a ternary morphism needs exactly three images")
        for a, img in zip(ALPHABET, self.images):
            parse_word(img)
            if not img:
                raise ValueError(f"image of {a} is empty")

    def __call__(self, w: Word) -> Word:
        return apply_morphism(self, w)

    def image(self, a) -> Word:
        return self.images[int(letter(a))]

    def image_length(self, a) -> int:
        return len(self.image(a))

    @property
    def image_lengths(self) -> tuple:
        return tuple(len(img) for img in self.images)

    @property
    def is_uniform(self) -> bool:
        return len(set(self.image_lengths)) == 1

    def is_prolongable_on(self, a) -> bool:
        c = letter(a)
        img = self.image(c)
        return len(img) >= 2 and img[0] == c

    def to_spec(self) -> str:
        return "".join(f"{a} -> {img}\n" for a, img in zip(ALPHABET, self.images))

    def to_dict(self) -> dict:
        return {a: img for a, img in zip(ALPHABET, self.images)}


TAU = Morphism(("012", "02", "1"))
PHI = Morphism((
    "01202120102120210",
    "12010201210201021",
    "20121012021012102",
))
ALPHA3 = Morphism(("0121012", "01020120212", "0102101210212"))

BUILTINS = {"tau": TAU, "phi": PHI, "alpha3": ALPHA3}

_SPEC_LINE = re.compile(r"^\s*([012])\s*->\s*([012]+)\s*$")


def parse_morphism(text: str) -> Morphism:
    """Read the three-line ``a -> image`` format."""
    images = {}
    lines = [(i, line) for i, line in enumerate(text.splitlines(), 1) if line.strip()]
    for lineno, line in lines:
        m = _SPEC_LINE.match(line)
        if m is None:
            raise MorphismSpecError(f"line {lineno}: expected '<letter> -> <word>', got {line.strip()!r}")
        a, img = m.groups()
        if a in images:
            raise MorphismSpecError(f"line {lineno}: letter {a} defined twice")
        images[a] = img
    missing = [a for a in ALPHABET if a not in images]
    if missing or len(lines) != 3:
        raise MorphismSpecError(f"expected exactly three lines, one per letter; missing {missing}")
    return Morphism(tuple(images[a] for a in ALPHABET))


def apply_morphism(m: Morphism, w: Word) -> Word:
    imgs = m.images
    return "".join(imgs[ord(c) - 48] for c in w)


def power(m: Morphism, n: int) -> Morphism:
    if n < 1:
        raise ValueError(f"power must be positive, got {n}")
    images = m.images
    for _ in range(n - 1):
        images = tuple(apply_morphism(m, img) for img in images)
    return Morphism(images)


def fixed_point_prefix(m: Morphism, seed, length: int) -> Word:
    """The length-``length`` prefix of the fixed point of ``m`` starting at ``seed``.

    Each round maps only as many letters as are needed to reach ``length``,
    so the overshoot is bounded by the longest image.
    """
    a = letter(seed)
    if not m.is_prolongable_on(a):
        raise NotProlongable(f"image of {a} is {m.image(a)!r}; need a word of length >= 2 starting with {a}")
    w = a
    while len(w) < length:
        parts = []
        total = 0
        for c in w:
            img = m.images[ord(c) - 48]
            parts.append(img)
            total += len(img)
            if total >= length:
                break
        w = "".join(parts)
    return w[:length]


@dataclass(frozen=True)
class CrochemoreWitness:
    word: Word
    image: Word
    square: SquareWitness

    def to_dict(self) -> dict:
        return {"word": self.word, "image": self.image, "square": self.square.to_dict()}


@dataclass(frozen=True)
class AlignmentWitness:
    a: str
    b: str
    c: str
    offset: int

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "offset": self.offset}


def crochemore_test(m: Morphism):
    """Check that ``m`` maps every square-free word of length <= 5 to a square-free word.

    Returns ``(passed, witness)``; the witness is the first failing input in
    order of length, then lexicographically.
    """
    for n in range(1, 6):
        for w in iter_square_free(n):
            image = apply_morphism(m, w)
            sq = find_square(image)
            if sq is not None:
                return False, CrochemoreWitness(w, image, sq)
    return True, None


def alignment_occurrences(m: Morphism):
    """Every (a, b, c, offset) with image(a) at ``offset`` inside image(b)image(c)."""
    for b in ALPHABET:
        for c in ALPHABET:
            bc = m.image(b) + m.image(c)
            for a in ALPHABET:
                img = m.image(a)
                i = bc.find(img)
                while i != -1:
                    yield a, b, c, i
                    i = bc.find(img, i + 1)


def alignment_test(m: Morphism):
    """Returns ``(passed, witness)``; an occurrence is aligned only if it is
    image(b) at offset 0 with a == b, or image(c) at the end with a == c."""
    for a, b, c, i in alignment_occurrences(m):
        flush_left = i == 0 and a == b
        flush_right = i + m.image_length(a) == m.image_length(b) + m.image_length(c) and a == c
        if not (flush_left or flush_right):
            return False, AlignmentWitness(a, b, c, i)
    return True, None


@dataclass(frozen=True)
class PairCheck:
    a: str
    b: str
    word: Word
    square: Optional[SquareWitness]
    report: Optional[IrreducibilityReport]

    @property
    def passed(self) -> bool:
        return self.report is not None and self.report.verdict

    def to_dict(self) -> dict:
        return {
            "pair": self.a + self.b,
            "word": self.word,
            "square": None if self.square is None else self.square.to_dict(),
            "report": None if self.report is None else self.report.to_dict(),
            "passed": self.passed,
        }


@dataclass(frozen=True)
class MorphismCertificate:
    morphism: Morphism
    k: int
    crochemore_pass: bool
    crochemore_witness: Optional[CrochemoreWitness]
    alignment_pass: bool
    alignment_witness: Optional[AlignmentWitness]
    pair_checks: tuple

    @property
    def procedure_I_pass(self) -> bool:
        return self.crochemore_pass and all(pc.passed for pc in self.pair_checks)

    def pair(self, a, b) -> PairCheck:
        a, b = letter(a), letter(b)
        for pc in self.pair_checks:
            if (pc.a, pc.b) == (a, b):
                return pc
        raise KeyError(a + b)

    def to_dict(self) -> dict:
        return {
            "morphism": self.morphism.to_dict(),
            "k": self.k,
            "crochemore": {
                "pass": self.crochemore_pass,
                "witness": None if self.crochemore_witness is None else self.crochemore_witness.to_dict(),
            },
            "alignment": {
                "pass": self.alignment_pass,
                "witness": None if self.alignment_witness is None else self.alignment_witness.to_dict(),
            },
            "pair_checks": [pc.to_dict() for pc in self.pair_checks],
            "procedure_I_pass": self.procedure_I_pass,
        }


def _pair_check(m: Morphism, a: str, b: str, k: int) -> PairCheck:
    w = m.image(a) + m.image(b)
    sq = find_square(w)
    if sq is not None:
        return PairCheck(a, b, w, sq, None)
    return PairCheck(a, b, w, None, is_k_irreducible(w, k))


def procedure_I_k(m: Morphism, k: int) -> MorphismCertificate:
    short = [a for a in ALPHABET if m.image_length(a) < 2]
    if short:
        raise ImageTooShort(f"images of {', '.join(short)} have length 1; need length > 1")
    cro, cro_w = crochemore_test(m)
    ali, ali_w = alignment_test(m)
    pairs = tuple(_pair_check(m, a, b, k) for a in ALPHABET for b in ALPHABET if a != b)
    return MorphismCertificate(m, k, cro, cro_w, ali, ali_w, pairs)


def procedure_I(m: Morphism) -> MorphismCertificate:
    return procedure_I_k(m, 1)
