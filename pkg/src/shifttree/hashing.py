"""Polynomial string hashing over a prime field.

A string of integer letters maps to sum(s[i] * r**i) mod p for a random
evaluation point r.  Hashes of adjacent substrings combine in O(1),
h(u + v) = h(u) + h(v) * r**len(u), which is what lets a tree node derive
its hash from its children.  Two distinct equal-length strings collide with
probability at most len/p over the choice of r.
"""

import random

MERSENNE_61 = (1 << 61) - 1


class HashContext:
    """Shared hashing parameters: modulus p, point r, precomputed powers.

    Immutable after construction.  Trees whose hashes should be comparable
    must share one context.  ``make_context`` is the normal entry point;
    passing ``r`` and ``p`` explicitly is for tests that want hand-checkable
    numbers.  The power table is sized once: strings longer than ``max_len``
    are not supported.
    """

    __slots__ = ("p", "r", "max_len", "powers")

    def __init__(self, max_len: int, r: int, p: int = MERSENNE_61):
        if max_len < 1:
            raise ValueError("max_len must be >= 1")
        if not 0 <= r < p:
            raise ValueError(f"evaluation point {r} outside [0, {p})")
        self.p = p
        self.r = r
        self.max_len = max_len
        powers = [1] * (max_len + 1)
        for i in range(1, max_len + 1):
            powers[i] = powers[i - 1] * r % p
        self.powers = powers

    def combine(self, h1: int, h2: int, len1: int) -> int:
        """Hash of the concatenation, given the left part's hash and length."""
        return (h1 + h2 * self.powers[len1]) % self.p

    def hash_string(self, letters) -> int:
        """Direct polynomial evaluation; the O(len) reference for tests."""
        vals = list(letters)
        if len(vals) > self.max_len:
            raise ValueError("string longer than the power table")
        h = 0
        for i, x in enumerate(vals):
            if not 0 <= x < self.p:
                raise ValueError(f"letter {x} outside [0, {self.p})")
            h = (h + x * self.powers[i]) % self.p
        return h


def make_context(max_len: int, seed: int | None = None) -> HashContext:
    """Context with p = 2**61 - 1 and r drawn uniformly from ``seed``."""
    rng = random.Random(seed)
    return HashContext(max_len, rng.randrange(MERSENNE_61))
