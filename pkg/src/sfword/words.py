"""Ternary words, square detection and canonical forms.

Words are plain ``str`` values over the characters ``"012"``.  Using ``str``
keeps slicing and comparison in C, which is what makes the exhaustive
searches in :mod:`sfword.enumerator` fast enough to run interactively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Union

from .errors import InvalidCharacter

ALPHABET = "012"

Word = str
Letter = Union[str, int]

# Half-lengths up to this bound are compared directly; longer candidates are
# located with str.find on a fixed-size seed.
_SEED = 8
# Above this length is_square_free switches to the divide and conquer test.
_LONG_WORD = 256


class SquareWitness(NamedTuple):
    start: int
    half_length: int

    @property
    def end(self) -> int:
        return self.start + 2 * self.half_length

    def factor(self, w: Word) -> Word:
        """The square ``uu`` itself, as it occurs in ``w``."""
        return w[self.start:self.end]

    def is_valid_for(self, w: Word) -> bool:
        h = self.half_length
        return (h > 0 and self.start >= 0 and self.end <= len(w)
                and w[self.start:self.start + h] == w[self.start + h:self.end])

    def to_dict(self) -> dict:
        return {"start": self.start, "half_length": self.half_length}


@dataclass(frozen=True)
class Symmetry:
    """A letter permutation, optionally followed by reversal.

    ``permutation[a]`` is the image of letter ``a``.
    """

    permutation: tuple = (0, 1, 2)
    reversed: bool = False

    def __post_init__(self):
        if sorted(self.permutation) != [0, 1, 2]:
            raise ValueError(f"not a permutation of {{0,1,2}}: {self.permutation}")

    @property
    def table(self) -> dict:
        return str.maketrans(ALPHABET, "".join(str(p) for p in self.permutation))


SYMMETRIES = tuple(
    Symmetry(perm, rev)
    for perm in itertools.permutations(range(3))
    for rev in (False, True)
)
_TABLES = tuple(str.maketrans(ALPHABET, "".join(map(str, perm)))
                for perm in itertools.permutations(range(3)))


def letter(a: Letter) -> str:
    """Normalise an int or one-character string to a letter character."""
    c = str(a)
    if len(c) != 1 or c not in ALPHABET:
        raise InvalidCharacter(f"not a letter of {{0,1,2}}: {a!r}")
    return c


def parse_word(text: str) -> Word:
    for i, c in enumerate(text):
        if c not in ALPHABET:
            raise InvalidCharacter(f"invalid character {c!r} at position {i}")
    return str(text)


def _min_half_at(w: Word, s: int, n: int) -> Optional[int]:
    """Smallest half-length of a square starting at index ``s``, if any."""
    hmax = (n - s) // 2
    for h in range(1, min(hmax, _SEED) + 1):
        if w[s:s + h] == w[s + h:s + 2 * h]:
            return h
    if hmax <= _SEED:
        return None
    seed = w[s:s + _SEED]
    p = w.find(seed, s + _SEED + 1, n)
    while p != -1 and p - s <= hmax:
        if w.startswith(w[s:p], p):
            return p - s
        p = w.find(seed, p + 1, n)
    return None


def _scan_square(w: Word, starts=None) -> Optional[SquareWitness]:
    n = len(w)
    if starts is None and n <= 2 * _SEED:
        for s in range(n - 1):
            for h in range(1, (n - s) // 2 + 1):
                if w[s:s + h] == w[s + h:s + 2 * h]:
                    return SquareWitness(s, h)
        return None
    for s in (range(n - 1) if starts is None else starts):
        h = _min_half_at(w, s, n)
        if h is not None:
            return SquareWitness(s, h)
    return None


def find_square(w: Word) -> Optional[SquareWitness]:
    """Return the square with minimal start (then minimal half-length), or None."""
    if len(w) > _LONG_WORD and not has_square_ml(w):
        return None
    return _scan_square(w)


def is_square_free(w: Word) -> bool:
    if len(w) > _LONG_WORD:
        return not has_square_ml(w)
    return _scan_square(w) is None


def square_starting_before(w: Word, limit: int) -> Optional[SquareWitness]:
    """First square whose start index is below ``limit``.

    Useful when ``w[limit:]`` is already known to be square-free.
    """
    return _scan_square(w, range(min(limit, max(len(w) - 1, 0))))


def extends_square_free(w: Word, a: Letter) -> bool:
    """Whether ``w + a`` is square-free, given that ``w`` is.

    Only squares ending at the new last letter are inspected.
    """
    v = w + letter(a)
    n = len(v)
    c = v[-1]
    for h in range(1, n // 2 + 1):
        if v[n - h - 1] == c and v[n - 2 * h:n - h] == v[n - h:]:
            return False
    return True


def square_through(w: Word, j: int) -> Optional[SquareWitness]:
    """Shortest square covering both ``w[j-1]`` and ``w[j]``.

    Ties on half-length go to the leftmost start.  After deleting a factor
    from a square-free word every new square must cover the junction, so
    this is the disposability test.
    """
    n = len(w)
    if not 0 < j < n:
        return None
    for h in range(1, n // 2 + 1):
        lo = max(0, j + 1 - 2 * h)
        hi = min(j - 1, n - 2 * h)
        for s in range(lo, hi + 1):
            if w[s:s + h] == w[s + h:s + 2 * h]:
                return SquareWitness(s, h)
    return None


def squares_through(w: Word, j: int) -> Iterator[SquareWitness]:
    """All squares covering the junction between ``w[j-1]`` and ``w[j]``."""
    n = len(w)
    for h in range(1, n // 2 + 1):
        for s in range(max(0, j + 1 - 2 * h), min(j - 1, n - 2 * h) + 1):
            if w[s:s + h] == w[s + h:s + 2 * h]:
                yield SquareWitness(s, h)


def _z_function(s: str) -> list:
    n = len(s)
    z = [0] * n
    left = right = 0
    for i in range(1, n):
        if i < right:
            z[i] = min(right - i, z[i - left])
        while i + z[i] < n and s[z[i]] == s[i + z[i]]:
            z[i] += 1
        if i + z[i] > right:
            left, right = i, i + z[i]
    return z


def _crossing_square(s: str) -> bool:
    """Main-Lorentz step: is there a square straddling the midpoint of ``s``?"""
    n = len(s)
    nu = n // 2
    nv = n - nu
    u, v = s[:nu], s[nu:]
    ru, rv = u[::-1], v[::-1]
    z1 = _z_function(ru)
    z2 = _z_function(v + "#" + u)
    z3 = _z_function(ru + "#" + rv)
    z4 = _z_function(v)

    def get(z, i):
        return z[i] if 0 <= i < len(z) else 0

    for centre in range(n):
        if centre < nu:
            half = nu - centre
            k1 = get(z1, nu - centre)
            k2 = get(z2, nv + 1 + centre)
            hi = min(half - 1, k1)
        else:
            half = centre - nu + 1
            k1 = get(z3, nu + nv - (centre - nu))
            k2 = get(z4, centre - nu + 1)
            hi = min(half, k1)
        if max(1, half - k2) <= hi:
            return True
    return False


def has_square_ml(w: Word) -> bool:
    """Square detection in O(n log n) by divide and conquer (Main-Lorentz)."""
    stack = [w]
    while stack:
        s = stack.pop()
        if len(s) < 2:
            continue
        if len(s) <= 32:
            if _scan_square(s) is not None:
                return True
            continue
        if _crossing_square(s):
            return True
        mid = len(s) // 2
        stack.append(s[:mid])
        stack.append(s[mid:])
    return False


def apply_symmetry(w: Word, s: Symmetry) -> Word:
    out = w.translate(s.table)
    return out[::-1] if s.reversed else out


def symmetry_images(w: Word) -> list:
    """The 12 images of ``w``, in the order of :data:`SYMMETRIES`."""
    out = []
    for table in _TABLES:
        t = w.translate(table)
        out.append(t)
        out.append(t[::-1])
    return out


def canonical_key(w: Word) -> Word:
    """Lexicographically least image of ``w`` under permutation and reversal."""
    return min(symmetry_images(w))


def is_palindrome(w: Word) -> bool:
    return w == w[::-1]
