"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line with its wall time, visible even
without ``-s``. Run with ``pytest tests/test_acceptance.py``.
"""

import io
import itertools
import random
import time
from contextlib import contextmanager

import numpy as np
import pytest

from oracles import brute_find_square, brute_images, brute_square_free_words, random_square_free
from sfword.cli import run
from sfword.constructor import (
    MISSING_LENGTHS,
    construct,
    phi_prefix,
    phi_prefix_gap_check,
    verify_claim_A,
    verify_claim_B,
)
from sfword.disposability import is_irreducibly_square_free
from sfword.enumerator import census, count_square_free_classes, enumerate_square_free, exists_irreducible
from sfword.morphisms import PHI, TAU, alignment_test, crochemore_test, power
from sfword.replication import replicate_alpha3, replicate_example2, replicate_theorem2
from sfword.words import canonical_key, find_square, is_palindrome, is_square_free

CANONICAL_COUNTS = (1, 0, 0, 1, 0, 1, 1, 1, 3, 0, 3, 4, 4, 7, 9, 7, 12, 12, 16, 18, 23, 24, 34, 36, 48, 55, 69, 78)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run_criterion(number, title, limit=None):
        t0 = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - t0
            if limit is not None:
                assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - t0
            with capsys.disabled():
                bound = f" (limit {limit}s)" if limit else ""
                print(f"\n{status} criterion {number:>2}: {title} [{elapsed:.2f}s{bound}]")
    return run_criterion


def sfword(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue()


def census_csv(threads):
    code, out = sfword("census", "--from", "3", "--to", "30", "--csv", "--threads", str(threads))
    assert code == 0
    return [tuple(map(int, line.split(","))) for line in out.splitlines()[1:]]


def test_01_census_counts(criterion):
    with criterion(1, "census 3..30 canonical counts", limit=60):
        rows = census_csv(1)
        assert [r[0] for r in rows] == list(range(3, 31))
        assert tuple(r[3] for r in rows) == CANONICAL_COUNTS


def test_02_nonexistence(criterion):
    with criterion(2, "no irreducibly square-free words at 4, 5, 7, 12", limit=1):
        for n in (4, 5, 7, 12):
            assert not exists_irreducible(n)
        assert MISSING_LENGTHS == frozenset({4, 5, 7, 12})


def test_03_length9(criterion):
    with criterion(3, "length 9 has one class 010212010, a palindrome"):
        row = census(9, with_representatives=True)
        assert row.irreducible_count_canonical == 1
        assert row.representatives == ["010212010"]
        assert is_palindrome("010212010")


def test_04_phi_suite(criterion):
    with criterion(4, "phi: Crochemore, alignment, irreducible images, four squares", limit=1):
        assert crochemore_test(PHI)[0]
        assert alignment_test(PHI)[0]
        assert all(is_irreducibly_square_free(PHI.image(a)).verdict for a in "012")
        claim = replicate_theorem2()
        assert claim.verdict
        squares = {cid: c["square"] for cid, c in claim.checks.items() if cid.startswith("thm2.pair")}
        assert squares == {
            "thm2.pair01.site16": "11",
            "thm2.pair02.site16": "02120212",
            "thm2.pair01.site17": "10201020",
            "thm2.pair02.site17": "00",
        }


def test_05_prefix_gap(criterion):
    with criterion(5, "phi prefixes 19..29 reducible, 17 irreducible"):
        claim = phi_prefix_gap_check()
        assert claim.verdict
        assert is_irreducibly_square_free(phi_prefix(17)).verdict
        for n in range(19, 30):
            assert not is_irreducibly_square_free(phi_prefix(n)).verdict, n


def test_06_claims_ab(criterion):
    with criterion(6, "Claims A and B at depth 10^4, bounded", limit=5):
        a = verify_claim_A(10_000)
        b = verify_claim_B(10_000)
        assert a.verdict and a.bounded and b.verdict and b.bounded
        suffix = [c for c in a.witnesses["checks"] if ".suffix" in c["id"]]
        assert len(suffix) == 32 and all(c["pass"] for c in suffix)
        for word in ("121", "0102"):
            assert b.checks[f"thm3.claimB.prefix{word}"]["pass"]


def test_07_construct(criterion):
    with criterion(7, "construct(n) verified for 3..300 minus {4,5,7,12}", limit=120):
        for n in range(3, 301):
            if n in MISSING_LENGTHS:
                continue
            t = construct(n)
            assert t.verified and len(t.result) == n
            assert is_irreducibly_square_free(t.result).verdict


def test_08_tau_suite(criterion):
    with criterion(8, "tau^5 lengths, common prefix, 2-irreducibility, disposable pairs"):
        claim = replicate_example2()
        assert claim.verdict
        checks = claim.checks
        tau5 = power(TAU, 5)
        assert tau5.image_lengths == (48, 32, 16)
        images = [tau5.image(a) for a in "012"]
        assert power(TAU, 2).image(0) == "012021"
        assert all(img.startswith("012021") for img in images)
        pairs = checks["ex2.tau5.0p.disposable-pairs"]["disposable"]
        assert {p["factor"] for p in pairs} == {"20", "02"} and all(p["start"] >= 48 for p in pairs)
        for cid in ("ex2.tau5.lengths", "ex2.tau5.common-prefix",
                    "ex2.tau5.1p.2-irreducible", "ex2.tau5.2p.2-irreducible",
                    "ex2.tau4.ends121", "ex2.tau4.not-2-irreducible",
                    "ex2.tau6.ends121", "ex2.tau6.not-2-irreducible"):
            assert checks[cid]["pass"], cid


def test_09_alpha3(criterion):
    with criterion(9, "alpha3 Crochemore and six 3-irreducible pair images"):
        claim = replicate_alpha3()
        assert claim.verdict
        assert claim.checks["alpha3.crochemore"]["pass"]
        pairs = [c for cid, c in claim.checks.items() if cid.endswith(".3-irreducible")]
        assert len(pairs) == 6 and all(c["pass"] for c in pairs)


def vectorised_oracle(n):
    """Cubic scan run on all 3**n words at once; returns (start, half) arrays, -1 if square-free."""
    codes = np.arange(3 ** n, dtype=np.int64)
    words = np.empty((3 ** n, n), dtype=np.int8)
    for i in range(n - 1, -1, -1):
        words[:, i] = codes % 3
        codes //= 3
    start = np.full(3 ** n, -1, dtype=np.int8)
    half = np.full(3 ** n, -1, dtype=np.int8)
    for s in range(n):
        for h in range(1, (n - s) // 2 + 1):
            hit = (start < 0) & np.all(words[:, s:s + h] == words[:, s + h:s + 2 * h], axis=1)
            start[hit] = s
            half[hit] = h
    return start, half


def library_arrays(n):
    start = np.full(3 ** n, -1, dtype=np.int8)
    half = np.full(3 ** n, -1, dtype=np.int8)
    for i, t in enumerate(itertools.product("012", repeat=n)):
        sq = find_square("".join(t))
        if sq is not None:
            start[i], half[i] = sq[0], sq[1]
    return start, half


def test_10_properties(criterion):
    with criterion(10, "find_square, canonical_key, thread invariance, square-free counts"):
        for n in range(15):
            s_lib, h_lib = library_arrays(n)
            s_ref, h_ref = vectorised_oracle(n)
            assert np.array_equal(s_lib, s_ref) and np.array_equal(h_lib, h_ref), n

        rng = random.Random(2024)
        samples = ["".join(rng.choice("012") for _ in range(rng.randint(0, 50))) for _ in range(5_000)]
        for _ in range(5_000):
            w = random_square_free(rng.randint(1, 50), rng)
            if rng.random() < 0.5:
                i = rng.randrange(len(w))
                w = w[:i] + rng.choice("012") + w[i + 1:]
            samples.append(w)
        for w in samples:
            assert find_square(w) == brute_find_square(w), w

        for w in samples:
            key = canonical_key(w)
            assert canonical_key(key) == key
            assert key == min(brute_images(w))
            assert all(canonical_key(v) == key for v in brute_images(w))

        assert census_csv(4) == census_csv(1)

        for n in range(13):
            expected = len(brute_square_free_words(n))
            assert enumerate_square_free(n) == expected, n
            if n >= 3:
                assert census(n).square_free_count == expected, n


def test_11_classes20(criterion):
    with criterion(11, "202 square-free classes at length 20"):
        assert count_square_free_classes(20) == 202
        assert is_square_free("010212010")
