"""One check per finitely verifiable statement about irreducibly square-free words.

Statements about infinite words are checked on a finite prefix and marked
``bounded``.  Deletion sites closer than ``margin`` letters to the right edge
of such a prefix are not used to falsify anything, since a square may be
completed beyond the edge.
"""

from __future__ import annotations

from .claims import ClaimResult
from .constructor import (
    DEFAULT_DEPTH,
    MISSING_LENGTHS,
    SMALL_WORDS,
    construct,
    phi_prefix,
    phi_prefix_gap_check,
    verify_claim_A,
    verify_claim_B,
    verify_special_words,
)
from .disposability import (
    DeletionSite,
    deletion_square,
    failing_ks,
    is_irreducibly_square_free,
    is_k_irreducible,
)
from .enumerator import census, census_range, count_square_free_classes, exists_irreducible
from .errors import NoRecurrence, NotInterior, VerificationFailed
from .morphisms import (
    ALPHA3,
    PHI,
    TAU,
    crochemore_test,
    fixed_point_prefix,
    power,
    procedure_I,
    procedure_I_k,
)
from .words import (
    SquareWitness,
    Symmetry,
    Word,
    apply_symmetry,
    is_palindrome,
    is_square_free,
    squares_through,
)

CANONICAL_COUNTS = (1, 0, 0, 1, 0, 1, 1, 1, 3, 0, 3, 4, 4, 7, 9, 7, 12, 12, 16, 18,
          23, 24, 34, 36, 48, 55, 69, 78)
TABLE1_LENGTHS = range(3, 31)


def default_margin(length: int) -> int:
    return length // 4


def thue_prefix(length: int) -> Word:
    return fixed_point_prefix(TAU, 0, length)


def prefix_disposable_sites(prefix: Word, k: int, margin: int) -> list:
    """Disposable length-k interior sites of ``prefix`` ending before the right margin."""
    limit = len(prefix) - margin
    return [DeletionSite(start, k) for start in range(1, len(prefix) - k)
            if start + k <= limit and deletion_square(prefix, DeletionSite(start, k)) is None]


def replicate_example1(depth: int = DEFAULT_DEPTH) -> ClaimResult:
    if depth < 20:
        raise ValueError(f"depth must be at least 20, got {depth}")
    claim = ClaimResult("ex1", "the Thue word avoids 010, 212, 1021 and deleting its "
                        "third letter leaves a square-free word", bounded=True)
    claim.witnesses["depth"] = depth
    t = thue_prefix(depth)
    claim.check("thue-prefix", t.startswith("01202101210201202102012101202101"))
    claim.check("thue-square-free", is_square_free(t))
    for factor in ("010", "212", "1021"):
        claim.check(f"avoids{factor}", factor not in t, occurrences=t.count(factor))
    deleted = t[:2] + t[3:]
    claim.check("delete-third-letter.prefix", deleted.startswith("01021012102012"),
                prefix=deleted[:14])
    claim.check("delete-third-letter.square-free", is_square_free(deleted),
                length=len(deleted))
    return claim


def _has_square_factor(word: Word, site: int, factor: Word) -> SquareWitness | None:
    for sq in squares_through(word, site):
        if sq.factor(word) == factor:
            return sq
    return None


PHI_PAIR_DELETIONS = (
    ("01", 16, "11"),
    ("02", 16, "02120212"),
    ("01", 17, "10201020"),
    ("02", 17, "00"),
)


def replicate_theorem2() -> ClaimResult:
    claim = ClaimResult("thm2", "phi passes Procedure I and the stated deletion squares appear")
    cert = procedure_I(PHI)
    claim.check("crochemore", cert.crochemore_pass)
    claim.check("alignment", cert.alignment_pass)
    claim.check("procedure1", cert.procedure_I_pass)
    claim.check("uniform17", PHI.is_uniform and PHI.image_lengths == (17, 17, 17))
    rotate = Symmetry((1, 2, 0))
    claim.check("rotation", PHI.image(1) == apply_symmetry(PHI.image(0), rotate)
                and PHI.image(2) == apply_symmetry(PHI.image(1), rotate))
    claim.check("palindromic", all(is_palindrome(img) for img in PHI.images))
    for a in "012":
        claim.check(f"phi{a}.irreducible", is_irreducibly_square_free(PHI.image(a)).verdict)
    for pair, site, factor in PHI_PAIR_DELETIONS:
        word = PHI(pair)
        deleted = word[:site] + word[site + 1:]
        sq = _has_square_factor(deleted, site, factor)
        report_sq = cert.pair(*pair).report.witness_at(site).square
        claim.check(f"pair{pair}.site{site}", sq is not None, deleted_letter=word[site],
                    square=factor, shortest=report_sq.factor(deleted) if report_sq else None)
    claim.check("middle-letters", all(PHI(pair)[16] == "0" for pair in ("01", "02")))
    return claim


def replicate_table1(threads: int = 1) -> ClaimResult:
    claim = ClaimResult("table1", "census of irreducibly square-free words, lengths 3..30, "
                        "up to permutation and reversal")
    rows = census_range(TABLE1_LENGTHS.start, TABLE1_LENGTHS.stop - 1, threads=threads)
    claim.witnesses["rows"] = [row.to_dict() for row in rows]
    for row, expected in zip(rows, CANONICAL_COUNTS):
        claim.check(f"length{row.length}", row.irreducible_count_canonical == expected,
                    expected=expected, found=row.irreducible_count_canonical)
    return claim


def replicate_nonexistence() -> ClaimResult:
    claim = ClaimResult("sec2.nonexistence", "no irreducibly square-free words of lengths 4, 5, 7, 12")
    for n in sorted(MISSING_LENGTHS):
        claim.check(f"length{n}", not exists_irreducible(n))
    return claim


def replicate_length9() -> ClaimResult:
    claim = ClaimResult("sec2.length9", "010212010 is the only class at length 9, and a palindrome")
    row = census(9, with_representatives=True)
    claim.check("unique", row.representatives == ["010212010"], representatives=row.representatives)
    claim.check("palindrome", is_palindrome("010212010"))
    return claim


def replicate_square_free_classes() -> ClaimResult:
    claim = ClaimResult("sec2.classes20", "202 square-free words of length 20 up to "
                        "permutation and reversal")
    found = count_square_free_classes(20)
    claim.check("count", found == 202, found=found)
    return claim


def replicate_table2() -> ClaimResult:
    claim = ClaimResult("table2", "small irreducibly square-free words")
    for n, w in sorted(SMALL_WORDS.items()):
        claim.check(f"length{n}", len(w) == n and is_irreducibly_square_free(w).verdict)
    claim.check("length17-is-phi0", SMALL_WORDS[17] == PHI.image(0))
    return claim


def replicate_construction(n_max: int = 300) -> ClaimResult:
    claim = ClaimResult("thm3.construct", f"a verified irreducibly square-free word of every "
                        f"length 3..{n_max} except 4, 5, 7, 12")
    bad = []
    for n in range(3, n_max + 1):
        if n in MISSING_LENGTHS:
            continue
        try:
            trace = construct(n)
        except VerificationFailed:
            bad.append(n)
            continue
        if not (trace.verified and len(trace.result) == n):
            bad.append(n)
    claim.check("all-lengths", not bad, failures=bad)
    return claim


def replicate_phi_fixed_point(depth: int = DEFAULT_DEPTH) -> ClaimResult:
    claim = ClaimResult("thm2.fixed-point", "Phi is square-free and has no disposable "
                        "interior letter", bounded=True)
    prefix = phi_prefix(depth)
    margin = default_margin(depth)
    claim.witnesses.update(depth=depth, margin=margin)
    claim.check("square-free", is_square_free(prefix))
    claim.check("fixed-point-law", PHI(prefix[:depth // 17]) == prefix[:17 * (depth // 17)])
    sites = prefix_disposable_sites(prefix, 1, margin)
    claim.check("irreducible", not sites, disposable=[s.to_dict() for s in sites])
    return claim


def replicate_example2(depth: int = DEFAULT_DEPTH) -> ClaimResult:
    claim = ClaimResult("ex2", "tau^2 and tau^5 facts; tau^(2n)(0) is not 2-irreducible")
    tau2 = power(TAU, 2)
    claim.check("tau2", tau2.images == ("012021", "0121", "02"), images=list(tau2.images))
    for n in (4, 6):
        w = power(TAU, n).image(0)
        site = DeletionSite(len(w) - 3, 2)
        report = is_k_irreducible(w, 2)
        claim.check(f"tau{n}.ends121", w.endswith("121"))
        claim.check(f"tau{n}.not-2-irreducible",
                    not report.verdict and site in report.disposable_sites,
                    site=site.to_dict())
    tau5 = power(TAU, 5)
    claim.check("tau5.lengths", tau5.image_lengths == (48, 32, 16))
    claim.check("tau5.images", tau5.images == (
        "012021012102012021020121012021012102012101202102",
        "01202101210201202102012101202102",
        "0120210121020121",
    ))
    p = "012021"
    claim.check("tau5.common-prefix", all(img.startswith(p) for img in tau5.images))
    for a in "12":
        claim.check(f"tau5.{a}p.2-irreducible", is_k_irreducible(tau5.image(a) + p, 2).verdict)
    w = tau5.image(0) + p
    report = is_k_irreducible(w, 2)
    found = [(s.start, w[s.start:s.start + 2]) for s in report.disposable_sites]
    claim.check("tau5.0p.disposable-pairs",
                bool(found) and all(start >= 48 and f in ("20", "02") for start, f in found),
                disposable=[{"start": s, "factor": f} for s, f in found])
    return claim


def replicate_thue_2_irreducible(depth: int = DEFAULT_DEPTH) -> ClaimResult:
    claim = ClaimResult("ex2.thue", "the Thue word is 2-irreducibly square-free but not "
                        "irreducibly square-free", bounded=True)
    t = thue_prefix(depth)
    margin = default_margin(depth)
    claim.witnesses.update(depth=depth, margin=margin)
    sites = prefix_disposable_sites(t, 2, margin)
    claim.check("2-irreducible", not sites, disposable=[s.to_dict() for s in sites[:10]])
    claim.check("letter2-disposable", deletion_square(t, DeletionSite(2, 1)) is None)
    return claim


def replicate_section3_theorem(w_prefix: Word, max_k: int) -> ClaimResult:
    """Delete u.a from a = w[0], w = a.u.a.w0; what is left is a suffix of w."""
    if not is_square_free(w_prefix):
        raise ValueError(f"{w_prefix} is not square-free")
    a = w_prefix[:1]
    j = w_prefix.find(a, 1) if a else -1
    if j == -1:
        raise NoRecurrence(f"first letter of {w_prefix!r} does not recur")
    site = DeletionSite(1, j)
    if not site.is_interior(len(w_prefix)):
        raise NotInterior(f"deleting u.a = {w_prefix[1:j + 1]} from {w_prefix} leaves "
                          f"no right flank; extend the prefix")
    claim = ClaimResult("sec3.theorem", "deleting u.a from a.u.a.w0 leaves a square-free "
                        "suffix, so k = |ua| fails", bounded=True)
    deleted = w_prefix[:1] + w_prefix[j + 1:]
    claim.witnesses.update(prefix_length=len(w_prefix), site=site.to_dict(), k=j)
    claim.check("deleted-is-suffix", deleted == w_prefix[j:])
    claim.check("deleted-square-free", is_square_free(deleted))
    if j <= max_k:
        ks = failing_ks(w_prefix, max_k)
        claim.witnesses["failing_ks"] = sorted(ks)
        claim.check("failing-ks-agree", j in ks)
    return claim


def replicate_alpha3() -> ClaimResult:
    claim = ClaimResult("alpha3", "alpha3 is square-free preserving and alpha3(ab) is "
                        "3-irreducible for all a != b")
    claim.check("image0", ALPHA3.image(0) == "0121012")
    claim.check("crochemore", crochemore_test(ALPHA3)[0])
    claim.check("prolongable0", ALPHA3.is_prolongable_on(0)
                and fixed_point_prefix(ALPHA3, 0, 7) == "0121012")
    cert = procedure_I_k(ALPHA3, 3)
    for pc in cert.pair_checks:
        claim.check(f"pair{pc.a}{pc.b}.3-irreducible", pc.passed)
    return claim


def replicate_alpha3_fixed_point(depth: int = DEFAULT_DEPTH) -> ClaimResult:
    claim = ClaimResult("alpha3.fixed-point", "the fixed point of alpha3 is 3-irreducibly "
                        "square-free", bounded=True)
    w = fixed_point_prefix(ALPHA3, 0, depth)
    margin = default_margin(depth)
    claim.witnesses.update(depth=depth, margin=margin)
    claim.check("square-free", is_square_free(w))
    sites = prefix_disposable_sites(w, 3, margin)
    claim.check("3-irreducible", not sites, disposable=[s.to_dict() for s in sites[:10]])
    return claim


def replicate_all(depth: int = DEFAULT_DEPTH, threads: int = 1) -> list:
    if depth < 20:
        raise ValueError(f"depth must be at least 20, got {depth}")
    return [
        replicate_example1(depth),
        replicate_table1(threads),
        replicate_nonexistence(),
        replicate_length9(),
        replicate_square_free_classes(),
        replicate_theorem2(),
        replicate_phi_fixed_point(depth),
        phi_prefix_gap_check(),
        replicate_table2(),
        verify_claim_A(depth),
        verify_claim_B(depth),
        verify_special_words(depth),
        replicate_construction(),
        replicate_example2(),
        replicate_thue_2_irreducible(depth),
        replicate_section3_theorem(thue_prefix(30), 10),
        replicate_alpha3(),
        replicate_alpha3_fixed_point(depth),
    ]


def aggregate_verdict(results: list) -> bool:
    return all(r.verdict for r in results)
