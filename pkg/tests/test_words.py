import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import all_words, brute_canonical, brute_find_square, random_square_free
from sfword.errors import InvalidCharacter
from sfword.words import (
    SYMMETRIES,
    SquareWitness,
    Symmetry,
    apply_symmetry,
    canonical_key,
    extends_square_free,
    find_square,
    has_square_ml,
    is_square_free,
    parse_word,
    square_starting_before,
    square_through,
    squares_through,
)

words = st.text(alphabet="012", max_size=50)


def test_parse_word():
    assert parse_word("010") == "010"
    assert parse_word("") == ""
    with pytest.raises(InvalidCharacter):
        parse_word("013")


@pytest.mark.parametrize("w, expected", [
    ("010212010", None),
    ("0101", SquareWitness(0, 2)),
    ("0121021", None),
    ("00", SquareWitness(0, 1)),
    ("1001", SquareWitness(1, 1)),
])
def test_find_square_examples(w, expected):
    assert find_square(w) == expected


def test_is_square_free_examples():
    assert not is_square_free("00")
    assert is_square_free("")
    assert is_square_free("012021012102012021")


def test_witness_helpers():
    sq = find_square("2010122")
    assert sq == SquareWitness(1, 2)
    assert sq.factor("2010122") == "0101"
    assert sq.end == 5
    assert sq.is_valid_for("2010122")
    assert not SquareWitness(0, 1).is_valid_for("01")


def test_find_square_exhaustive_short():
    for n in range(11):
        for w in all_words(n):
            assert find_square(w) == brute_find_square(w), w


@settings(max_examples=500)
@given(words)
def test_find_square_matches_oracle(w):
    assert find_square(w) == brute_find_square(w)


def test_long_square_free_words_use_fast_path():
    rng = random.Random(7)
    for n in (300, 600, 1200):
        w = random_square_free(n, rng)
        assert is_square_free(w)
        assert find_square(w) is None
        # plant a square far to the right and check both paths see it
        i = n - 40
        planted = w[:i] + w[i:i + 15] * 2 + w[i + 15:]
        assert has_square_ml(planted)
        assert find_square(planted) == brute_find_square(planted)


@settings(max_examples=200)
@given(st.integers(min_value=0, max_value=10_000))
def test_main_lorentz_matches_scan(seed):
    rng = random.Random(seed)
    w = random_square_free(rng.randint(33, 120), rng)
    if rng.random() < 0.5:
        i = rng.randrange(len(w))
        w = w[:i] + rng.choice("012") + w[i + 1:]
    assert has_square_ml(w) == (brute_find_square(w) is not None)


@pytest.mark.parametrize("w, a, expected", [
    ("01", 0, True),
    ("01", 1, False),
    ("0102", 1, True),
    ("0102", "2", False),
])
def test_extends_square_free_examples(w, a, expected):
    assert extends_square_free(w, a) is expected


def test_extends_square_free_exhaustive():
    for n in range(13):
        for w in all_words(n):
            if brute_find_square(w) is None:
                for a in "012":
                    assert extends_square_free(w, a) == (brute_find_square(w + a) is None)


def test_square_starting_before():
    assert square_starting_before("01212", 1) is None
    assert square_starting_before("01212", 2) == SquareWitness(1, 2)


def test_square_through_and_all_squares_through():
    w = "0102012"  # junction between positions 3 and 4
    sqs = list(squares_through(w, 4))
    for sq in sqs:
        assert sq.is_valid_for(w)
        assert sq.start <= 3 and sq.end >= 5
    assert square_through(w, 4) == (min(sqs, key=lambda s: (s.half_length, s.start)) if sqs else None)
    assert square_through("0110", 2) == SquareWitness(1, 1)
    assert square_through("0110", 1) is None


def test_symmetry_examples():
    assert apply_symmetry("012", Symmetry((0, 1, 2), True)) == "210"
    assert apply_symmetry("010", Symmetry((1, 0, 2), False)) == "101"
    assert apply_symmetry("010212010", Symmetry((0, 1, 2), True)) == "010212010"
    with pytest.raises(ValueError):
        Symmetry((0, 0, 1))


def test_twelve_symmetries():
    assert len(set(SYMMETRIES)) == 12


@pytest.mark.parametrize("w, expected", [("210", "012"), ("010", "010")])
def test_canonical_key_examples(w, expected):
    assert canonical_key(w) == expected


def test_canonical_key_idempotent():
    assert canonical_key(canonical_key("120212")) == canonical_key("120212")


@given(words)
def test_canonical_key_matches_oracle(w):
    assert canonical_key(w) == brute_canonical(w)


@given(words, st.sampled_from(SYMMETRIES))
def test_canonical_key_orbit_constant(w, s):
    assert canonical_key(apply_symmetry(w, s)) == canonical_key(w)
    assert canonical_key(canonical_key(w)) == canonical_key(w)


@given(words, st.sampled_from(SYMMETRIES))
def test_square_freeness_is_symmetric(w, s):
    assert is_square_free(apply_symmetry(w, s)) == is_square_free(w)


def test_symmetry_group_closed():
    images = {tuple(apply_symmetry(apply_symmetry("012", s), t) for t in SYMMETRIES)
              for s in SYMMETRIES}
    for row in images:
        assert set(row) == {apply_symmetry("012", u) for u in SYMMETRIES}
    assert len(list(itertools.permutations("012"))) * 2 == len(SYMMETRIES)
