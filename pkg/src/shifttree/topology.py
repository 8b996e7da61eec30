"""Implicit node numbering for a perfect binary tree over a rotated string.

A tree of depth ``n`` covers a string of length ``2**n``.  Nodes are numbered
1..2**(n+1)-1 and level k (root = level 0, leaves = level n) always occupies
the index block [2**k, 2**(k+1)).  The twist is a rotation offset ``delta``:
instead of moving leaf data when the string rotates, child and parent links
are skewed by the bits of ``delta`` so that the nodes on level k, read left
to right, are the block [2**k, 2**(k+1)) rotated right by ``delta >> (n-k)``.
Rotating the string by a multiple of 2**j therefore leaves every subtree
rooted at level n-j structurally untouched.

Everything here is pure index arithmetic on (n, delta); node payloads live
elsewhere.  All reductions produce nonnegative representatives.
"""


class Topology:
    """Link arithmetic for one tree of depth ``n`` at rotation ``delta``."""

    __slots__ = ("n", "size", "delta")

    def __init__(self, n: int, delta: int = 0):
        if n < 0:
            raise ValueError(f"tree depth must be >= 0, got {n}")
        self.n = n
        self.size = 1 << n
        if not 0 <= delta < self.size:
            raise ValueError(f"delta {delta} outside [0, {self.size})")
        self.delta = delta

    @staticmethod
    def level(i: int) -> int:
        """Distance from the root; the root (index 1) has level 0."""
        return i.bit_length() - 1

    def skew(self, k: int) -> int:
        """Link offset bit for level k: bit (n - k) of ``delta``."""
        return (self.delta >> (self.n - k)) & 1

    def left_child(self, i: int) -> int:
        assert 1 <= i < self.size, "leaves have no children"
        width = 1 << i.bit_length()  # level(i) + 1 bits
        s = (self.delta >> (self.n - i.bit_length())) & 1
        return (2 * i - s) % width + width

    def right_child(self, i: int) -> int:
        assert 1 <= i < self.size, "leaves have no children"
        width = 1 << i.bit_length()
        s = (self.delta >> (self.n - i.bit_length())) & 1
        return (2 * i + 1 - s) % width + width

    def parent(self, i: int) -> int:
        assert 1 < i < 2 * self.size, "the root has no parent"
        k = i.bit_length() - 1
        half = 1 << k
        s = (self.delta >> (self.n - k)) & 1
        return ((i + s) % half + half) >> 1

    def leaf_of_position(self, pos: int) -> int:
        """Node index of the leaf holding string position ``pos``."""
        if not 0 <= pos < self.size:
            raise ValueError(f"position {pos} outside [0, {self.size})")
        return (pos - self.delta) % self.size + self.size
