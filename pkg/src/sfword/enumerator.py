"""Exhaustive depth-first generation of square-free words and the census."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .disposability import irreducible_verdict
from .errors import TooShort
from .words import ALPHABET, Word, canonical_key, extends_square_free

SPLIT_DEPTH = 6


@dataclass
class CensusRow:
    length: int
    square_free_count: int
    irreducible_count_raw: int
    irreducible_count_canonical: int
    representatives: Optional[list] = None

    def csv(self) -> str:
        return (f"{self.length},{self.square_free_count},"
                f"{self.irreducible_count_raw},{self.irreducible_count_canonical}")

    def to_dict(self) -> dict:
        d = {
            "length": self.length,
            "square_free": self.square_free_count,
            "irreducible_raw": self.irreducible_count_raw,
            "irreducible_canonical": self.irreducible_count_canonical,
        }
        if self.representatives is not None:
            d["representatives"] = list(self.representatives)
        return d


CSV_HEADER = "length,square_free,irreducible_raw,irreducible_canonical"


def iter_square_free(n: int, prefix: Word = "") -> Iterator[Word]:
    """Square-free words of length ``n`` extending ``prefix``, in lexicographic order.

    ``prefix`` must itself be square-free.
    """
    if n < len(prefix):
        return
    if n == len(prefix):
        yield prefix
        return
    # explicit stack of (word, next letter index) keeps the order lexicographic
    stack = [prefix]
    while stack:
        w = stack.pop()
        if len(w) == n:
            yield w
            continue
        for a in reversed(ALPHABET):
            if extends_square_free(w, a):
                stack.append(w + a)


def enumerate_square_free(n: int, visitor: Optional[Callable[[Word], None]] = None) -> int:
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    count = 0
    for w in iter_square_free(n):
        if visitor is not None:
            visitor(w)
        count += 1
    return count


def square_free_prefixes(depth: int) -> list:
    """All square-free words of length ``depth``: the roots of the work split."""
    return list(iter_square_free(depth))


@dataclass
class _Tally:
    square_free: int = 0
    raw: int = 0
    keys: set = field(default_factory=set)

    def merge(self, other: "_Tally") -> None:
        self.square_free += other.square_free
        self.raw += other.raw
        self.keys |= other.keys


def _tally_subtree(args) -> _Tally:
    n, prefix = args
    t = _Tally()
    for w in iter_square_free(n, prefix):
        t.square_free += 1
        if irreducible_verdict(w):
            t.raw += 1
            t.keys.add(canonical_key(w))
    return t


def _split(n: int) -> list:
    return [(n, p) for p in square_free_prefixes(min(SPLIT_DEPTH, n))]


def default_threads() -> int:
    env = os.environ.get("SFWORD_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def _run(tasks: list, threads: int) -> _Tally:
    total = _Tally()
    if threads <= 1 or len(tasks) <= 1:
        for task in tasks:
            total.merge(_tally_subtree(task))
        return total
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for t in pool.map(_tally_subtree, tasks, chunksize=max(1, len(tasks) // (4 * threads))):
            total.merge(t)
    return total


def census(n: int, with_representatives: bool = False, threads: int = 1) -> CensusRow:
    if n < 3:
        raise TooShort(f"census needs length >= 3, got {n}")
    t = _run(_split(n), threads)
    return CensusRow(
        length=n,
        square_free_count=t.square_free,
        irreducible_count_raw=t.raw,
        irreducible_count_canonical=len(t.keys),
        representatives=sorted(t.keys) if with_representatives else None,
    )


def census_range(n_min: int, n_max: int, with_representatives: bool = False,
                 threads: int = 1) -> list:
    if n_min < 3:
        raise TooShort(f"census needs length >= 3, got {n_min}")
    if n_max < n_min:
        raise ValueError(f"empty range {n_min}..{n_max}")
    if threads <= 1:
        return [census(n, with_representatives) for n in range(n_min, n_max + 1)]
    # one pool for the whole range; rows are assembled in length order
    tasks = [task for n in range(n_min, n_max + 1) for task in _split(n)]
    per_length = {n: _Tally() for n in range(n_min, n_max + 1)}
    with ProcessPoolExecutor(max_workers=threads) as pool:
        chunk = max(1, len(tasks) // (4 * threads))
        for (n, _), t in zip(tasks, pool.map(_tally_subtree, tasks, chunksize=chunk)):
            per_length[n].merge(t)
    return [
        CensusRow(n, t.square_free, t.raw, len(t.keys),
                  sorted(t.keys) if with_representatives else None)
        for n, t in per_length.items()
    ]


def exists_irreducible(n: int) -> bool:
    """Early-exit existence test; not suitable for counting."""
    if n < 3:
        raise TooShort(f"irreducibility needs length >= 3, got {n}")
    return any(irreducible_verdict(w) for w in iter_square_free(n))


def count_square_free_classes(n: int) -> int:
    """Number of square-free words of length ``n`` up to permutation and reversal."""
    return len({canonical_key(w) for w in iter_square_free(n)})
