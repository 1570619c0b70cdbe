"""Deleting interior letters and factors, and the irreducibility tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import NotInterior, NotSquareFree, TooShort
from .words import SquareWitness, Word, find_square, square_through


@dataclass(frozen=True)
class DeletionSite:
    start: int
    length: int = 1

    def is_interior(self, n: int) -> bool:
        return self.length > 0 and self.start >= 1 and self.start + self.length <= n - 1

    def to_dict(self) -> dict:
        return {"start": self.start, "length": self.length}


@dataclass(frozen=True)
class SiteWitness:
    """Outcome of one deletion: the square it creates, or None if disposable."""

    site: DeletionSite
    square: Optional[SquareWitness]

    @property
    def disposable(self) -> bool:
        return self.square is None

    def to_dict(self) -> dict:
        return {
            "site": self.site.to_dict(),
            "square": None if self.square is None else self.square.to_dict(),
        }


@dataclass(frozen=True)
class IrreducibilityReport:
    word: Word
    k: int
    verdict: bool
    witnesses: tuple = field(default_factory=tuple)
    first_disposable: Optional[DeletionSite] = None

    def witness_at(self, start: int) -> SiteWitness:
        for sw in self.witnesses:
            if sw.site.start == start:
                return sw
        raise KeyError(start)

    @property
    def disposable_sites(self) -> list:
        return [sw.site for sw in self.witnesses if sw.disposable]

    def to_dict(self) -> dict:
        return {
            "word": self.word,
            "k": self.k,
            "verdict": self.verdict,
            "first_disposable": (None if self.first_disposable is None
                                 else self.first_disposable.to_dict()),
            "witnesses": [sw.to_dict() for sw in self.witnesses],
        }


def _check_site(w: Word, site: DeletionSite) -> None:
    if not site.is_interior(len(w)):
        raise NotInterior(
            f"site (start={site.start}, length={site.length}) is not interior "
            f"in a word of length {len(w)}")


def _require_square_free(w: Word) -> None:
    sq = find_square(w)
    if sq is not None:
        raise NotSquareFree(
            f"{w} contains the square {sq.factor(w)} at {sq.start}")


def delete_factor(w: Word, site: DeletionSite) -> Word:
    _check_site(w, site)
    return w[:site.start] + w[site.start + site.length:]


def deletion_square(w: Word, site: DeletionSite) -> Optional[SquareWitness]:
    """The square created by deleting ``site`` from square-free ``w``.

    Returns the shortest square covering the junction (leftmost on ties),
    with coordinates in the deleted word; None means the site is disposable.
    """
    _check_site(w, site)
    return square_through(w[:site.start] + w[site.start + site.length:], site.start)


def is_disposable(w: Word, site: DeletionSite) -> bool:
    _check_site(w, site)
    _require_square_free(w)
    return deletion_square(w, site) is None


def _report(w: Word, k: int) -> IrreducibilityReport:
    n = len(w)
    if n < k + 2:
        raise TooShort(f"need length >= {k + 2} for k={k}, got {n}")
    _require_square_free(w)
    witnesses = []
    first = None
    for start in range(1, n - k):
        site = DeletionSite(start, k)
        sq = square_through(w[:start] + w[start + k:], start)
        witnesses.append(SiteWitness(site, sq))
        if sq is None and first is None:
            first = site
    return IrreducibilityReport(w, k, first is None, tuple(witnesses), first)


def is_irreducibly_square_free(w: Word) -> IrreducibilityReport:
    if len(w) < 3:
        raise TooShort(f"irreducibility needs length >= 3, got {len(w)}")
    return _report(w, 1)


def is_k_irreducible(w: Word, k: int) -> IrreducibilityReport:
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return _report(w, k)


def irreducible_verdict(w: Word, k: int = 1) -> bool:
    """Verdict only, with early exit; ``w`` must already be square-free.

    This is the hot path of the census, so it skips the report and the
    square-freeness precondition check.
    """
    n = len(w)
    for start in range(1, n - k):
        if square_through(w[:start] + w[start + k:], start) is None:
            return False
    return True


def failing_ks(w: Word, max_k: int) -> set:
    """All k <= max_k for which ``w`` has a disposable interior factor of length k."""
    if len(w) < 3:
        raise TooShort(f"need length >= 3, got {len(w)}")
    _require_square_free(w)
    return {k for k in range(1, min(max_k, len(w) - 2) + 1)
            if not irreducible_verdict(w, k)}
