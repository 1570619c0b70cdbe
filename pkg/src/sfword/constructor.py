"""Irreducibly square-free words of every admissible length.

Lengths up to 17 come from a fixed table of small words.  Longer words are
``special_word(n % 17)`` followed by the prefix of length ``17 * (n // 17)``
of the fixed point of :data:`~sfword.morphisms.PHI`.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .claims import ClaimResult
from .disposability import is_irreducibly_square_free
from .errors import NoSuchLength, NotSquareFree, OutOfRange, VerificationFailed
from .morphisms import PHI, fixed_point_prefix
from .words import Word, is_square_free, square_starting_before

MISSING_LENGTHS = frozenset({4, 5, 7, 12})

SMALL_WORDS = {
    3: "010",
    6: "010212",
    8: "01020121",
    9: "010212010",
    10: "0102012101",
    11: "01020120212",
    13: "0102012101202",
    14: "01020120212010",
    15: "010201210120212",
    16: "0102012021201020",
    17: "01202120102120210",
}

SPECIAL_WORDS = {
    1: "1",
    2: "02",
    3: "121",
    4: "2102",
    5: "12102",
    6: "020121",
    7: "2120102",
    8: "01020121",
    9: "121020121",
    10: "2021012102",
    11: "10121020121",
    12: "101202120121",
    13: "0210121020121",
    14: "01021201020121",
    15: "010201202120121",
    16: "0201021201020121",
}

# Special words whose square-free extension by the fixed point follows from
# the suffix argument rather than the 121/0102 argument.
SUFFIX_CASES = frozenset({1, 2, 4, 5, 10})

DEFAULT_DEPTH = 10_000


def small_word(n: int) -> Word:
    if n in MISSING_LENGTHS:
        raise NoSuchLength(f"there is no irreducibly square-free word of length {n}")
    if n not in SMALL_WORDS:
        raise OutOfRange(f"small words cover lengths 3..17, got {n}")
    return SMALL_WORDS[n]


def special_word(i: int) -> Word:
    if i not in SPECIAL_WORDS:
        raise OutOfRange(f"special words are indexed 1..16, got {i}")
    return SPECIAL_WORDS[i]


def phi_prefix(length: int) -> Word:
    return fixed_point_prefix(PHI, 0, length)


def _need_depth(depth: int) -> None:
    if depth < 17:
        raise ValueError(f"verification depth must be at least 17, got {depth}")


def _prefix_is_square_free(claim: ClaimResult, prefix: Word) -> bool:
    return claim.check("fixed-point-prefix-square-free", is_square_free(prefix),
                       length=len(prefix))


def _extension_square(w: Word, prefix: Word):
    # prefix is known square-free, so any square in w + prefix starts inside w
    return square_starting_before(w + prefix, len(w))


def verify_claim_A(depth: int = DEFAULT_DEPTH) -> ClaimResult:
    """Every nonempty proper suffix of PHI(1), PHI(2) extends the fixed-point prefix square-freely."""
    _need_depth(depth)
    claim = ClaimResult("thm3.claimA", "w.Phi is square-free for every nonempty suffix w "
                        "of phi(1) or phi(2) with |w| < 17", bounded=True)
    claim.witnesses["depth"] = depth
    prefix = phi_prefix(depth)
    _prefix_is_square_free(claim, prefix)
    for a in "12":
        image = PHI.image(a)
        for size in range(1, 17):
            w = image[-size:]
            sq = _extension_square(w, prefix)
            claim.check(f"phi{a}.suffix{size}", sq is None, suffix=w,
                        square=None if sq is None else sq.to_dict())
    return claim


def verify_claim_B(depth: int = DEFAULT_DEPTH) -> ClaimResult:
    _need_depth(depth)
    claim = ClaimResult("thm3.claimB", "121.Phi and 0102.Phi are square-free", bounded=True)
    claim.witnesses["depth"] = depth
    prefix = phi_prefix(depth)
    _prefix_is_square_free(claim, prefix)
    for w in ("121", "0102"):
        sq = _extension_square(w, prefix)
        claim.check(f"prefix{w}", sq is None, square=None if sq is None else sq.to_dict())
    head = ("0102" + prefix)[:8]
    claim.check("prefix01020120", head == "01020120", prefix=head)
    claim.check("01020120-not-in-Phi", "01020120" not in prefix)
    return claim


def verify_special_words(depth: int = DEFAULT_DEPTH) -> ClaimResult:
    _need_depth(depth)
    claim = ClaimResult("thm3.special", "special words: |w_i| = i, w_i.Phi square-free, "
                        "w_i.phi(0) irreducibly square-free", bounded=True)
    claim.witnesses["depth"] = depth
    prefix = phi_prefix(depth)
    _prefix_is_square_free(claim, prefix)
    phi0 = PHI.image(0)
    for i, w in sorted(SPECIAL_WORDS.items()):
        claim.check(f"w{i}.length", len(w) == i)
        claim.check(f"w{i}.square-free", is_square_free(w))
        if i not in SUFFIX_CASES:
            claim.check(f"w{i}.ends-121-or-0102", w.endswith("121") or w.endswith("0102"))
        sq = _extension_square(w, prefix)
        claim.check(f"w{i}.extends-Phi", sq is None, square=None if sq is None else sq.to_dict())
        report = is_irreducibly_square_free(w + phi0)
        claim.check(f"w{i}.phi0-irreducible", report.verdict,
                    first_disposable=None if report.first_disposable is None
                    else report.first_disposable.to_dict())
    return claim


@dataclass
class ConstructionTrace:
    n: int
    branch: str
    i: int
    k: int
    parts: list = field(default_factory=list)
    result: Word = ""
    verified: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "branch": self.branch,
            "i": self.i,
            "k": self.k,
            "parts": list(self.parts),
            "result": self.result,
            "verified": self.verified,
        }


def construct(n: int) -> ConstructionTrace:
    """Build an irreducibly square-free word of length ``n`` and re-verify it."""
    if n < 3:
        raise OutOfRange(f"irreducibility is defined for lengths >= 3, got {n}")
    k, i = divmod(n, 17)
    if n <= 17:
        parts = [small_word(n)]
        branch = "table2"
    elif i == 0:
        parts = [phi_prefix(n)]
        branch = "phi-power"
    else:
        parts = [special_word(i), phi_prefix(17 * k)]
        branch = "special-prefix"
    result = "".join(parts)
    trace = ConstructionTrace(n, branch, i, k, parts, result)
    try:
        ok = is_irreducibly_square_free(result).verdict
    except NotSquareFree:
        ok = False
    if not ok:
        raise VerificationFailed(f"constructed word of length {n} is not irreducibly square-free")
    trace.verified = True
    return trace


def phi_prefix_gap_check() -> ClaimResult:
    claim = ClaimResult("thm2.prefix-gap", "no prefix of Phi of length 19..29 is "
                        "irreducibly square-free; phi(0) is")
    prefix = phi_prefix(29)
    report = is_irreducibly_square_free(prefix[:17])
    claim.check("length17", report.verdict)
    for n in range(19, 30):
        report = is_irreducibly_square_free(prefix[:n])
        claim.check(f"length{n}", not report.verdict,
                    first_disposable=None if report.first_disposable is None
                    else report.first_disposable.to_dict())
    return claim
