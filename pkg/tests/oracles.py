"""Brute-force reference implementations.

Nothing here imports from sfword: every function works letter by letter on
plain sequences so that it shares no code path with the library.
"""

import itertools
import random


def all_words(n):
    return ["".join(t) for t in itertools.product("012", repeat=n)]


def brute_find_square(w):
    """(start, half_length) of the square with minimal start, then half-length."""
    n = len(w)
    for s in range(n):
        for h in range(1, (n - s) // 2 + 1):
            if all(w[s + i] == w[s + h + i] for i in range(h)):
                return (s, h)
    return None


def brute_square_free(w):
    return brute_find_square(w) is None


def brute_square_free_words(n):
    return [w for w in all_words(n) if brute_square_free(w)]


def brute_k_irreducible(w, k=1):
    """Square-free and every interior deletion of k letters creates a square."""
    if not brute_square_free(w):
        return False
    for start in range(1, len(w) - k):
        if brute_square_free(w[:start] + w[start + k:]):
            return False
    return True


def brute_disposable_sites(w, k=1):
    return [start for start in range(1, len(w) - k)
            if brute_square_free(w[:start] + w[start + k:])]


def brute_images(w):
    """All 12 images under letter permutations and reversal, built by dict lookup."""
    out = []
    for perm in itertools.permutations("012"):
        mapping = dict(zip("012", perm))
        mapped = "".join(mapping[c] for c in w)
        out.append(mapped)
        out.append("".join(reversed(mapped)))
    return out


def brute_canonical(w):
    return sorted(brute_images(w))[0]


def brute_occurrences(text, pattern):
    return [i for i in range(len(text) - len(pattern) + 1)
            if all(text[i + j] == pattern[j] for j in range(len(pattern)))]


def brute_apply(images, w):
    out = []
    for c in w:
        out.extend(images[int(c)])
    return "".join(out)


def random_square_free(n, rng=None):
    """A uniformly-branching random square-free word of length n (backtracking)."""
    rng = rng or random.Random(0)
    w = []

    def ok(v):
        m = len(v)
        return all(v[m - 2 * h:m - h] != v[m - h:] for h in range(1, m // 2 + 1))

    choices = [rng.sample("012", 3)]
    while len(w) < n:
        if not choices[-1]:
            choices.pop()
            w.pop()
            continue
        a = choices[-1].pop()
        if ok(w + [a]):
            w.append(a)
            choices.append(rng.sample("012", 3))
    return "".join(w)


def brute_square_free_by_extension(n_max):
    """Square-free words of every length <= n_max, grown one letter at a time.

    Each candidate gets the full cubic check, so this relies only on the fact
    that factors of square-free words are square-free.
    """
    levels = [[""]]
    for _ in range(n_max):
        levels.append([w + a for w in levels[-1] for a in "012" if brute_square_free(w + a)])
    return levels
