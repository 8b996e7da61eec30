"""Deterministic shift tree backed by tags instead of hashes.

An inner node holds a tag: an opaque id standing for the string its subtree
covered when the node was last updated.  Tags are not unique per string;
equality of the underlying strings is learned lazily.  When a diff descends
through two tags it cannot tell apart and finds no difference below, it
records their equivalence in the shared TagStore, so the same comparison
short-circuits next time.  Letters only need ``==``; no hashing, no order,
no integer alphabet.
"""

from .tag_store import TagStore
from .topology import Topology


class TaggedShiftTree:
    """Same operations and costs as HashedShiftTree, times an
    inverse-Ackermann factor, but exact: diff never misses a difference.

    All trees that should be comparable must share one TagStore, and all
    operations on trees sharing a store must be externally serialized
    (diff refines the store).  Call ``init`` before anything else; inner
    tags are only null during construction.
    """

    def __init__(self, n: int, store: TagStore):
        self.topo = Topology(n)
        self.n = n
        self.size = 1 << n
        self.store = store
        self.leaves: list = [None] * self.size       # letters, leaf-slot order
        self.tags: list[int | None] = [None] * self.size  # inner nodes 1..size-1
        self.update_calls = 0
        self.diff_visits = 0

    def update(self, i: int) -> None:
        """Give inner node i a fresh singleton tag, retiring its old one."""
        assert 1 <= i < self.size, "leaves carry letters, not tags"
        old = self.tags[i]
        if old is not None:
            self.store.delete_tag(old)
        self.tags[i] = self.store.new_tag()
        self.update_calls += 1

    def init(self, letters) -> None:
        """Load a full string, reset the rotation, retag every inner node."""
        vals = list(letters)
        if len(vals) != self.size:
            raise ValueError(f"expected {self.size} letters, got {len(vals)}")
        self.topo.delta = 0
        self.leaves = vals
        self._retag_range(self.size - 1)

    def _retag_range(self, count: int) -> None:
        # bulk form of update() for nodes count..1
        tags = self.tags
        delete_tag = self.store.delete_tag
        new_tag = self.store.new_tag
        for i in range(count, 0, -1):
            old = tags[i]
            if old is not None:
                delete_tag(old)
            tags[i] = new_tag()
        self.update_calls += count

    def set(self, pos: int, x) -> None:
        """Overwrite the letter at string position ``pos``."""
        topo = self.topo
        j = topo.leaf_of_position(pos)
        self.leaves[j - self.size] = x
        while j != 1:
            j = topo.parent(j)
            self.update(j)

    def shift(self, k: int) -> None:
        """Rotate the string right by ``k`` (negative rotates left)."""
        k %= self.size
        if k == 0:
            return
        lowbit = k & -k
        self.topo.delta = (self.topo.delta + k) % self.size
        self._retag_range(self.size // lowbit - 1)

    def diff(self, other: "TaggedShiftTree", a: int, b: int) -> list[int]:
        """Positions in [a, b] where this string and ``other``'s differ.

        Ascending order, exact.  As a side effect, records every
        fully-verified equal subtree pair in the shared store.
        """
        if other.n != self.n:
            raise ValueError("trees must have equal depth")
        if other.store is not self.store:
            raise ValueError("trees must share one tag store")
        if not 0 <= a <= b < self.size:
            raise ValueError(f"bad interval [{a}, {b}] for size {self.size}")
        out: list[int] = []
        n = self.n
        size = self.size
        t_leaves = self.leaves
        q_leaves = other.leaves
        t_tags = self.tags
        q_tags = other.tags
        t_delta = self.topo.delta
        q_delta = other.topo.delta
        find = self.store.find
        union = self.store.union
        visits = 0

        def walk(i: int, j: int, x: int, y: int) -> None:
            nonlocal visits
            visits += 1
            if y < a or b < x:
                return
            if x == y:
                if t_leaves[i - size] != q_leaves[j - size]:
                    out.append(x)
                return
            t1 = t_tags[i]
            t2 = q_tags[j]
            if find(t1) == find(t2):
                return
            z = (x + y + 1) >> 1
            # child links, inlined from Topology for the hot path; i and j
            # sit on the same level, so they share the block width
            bl = i.bit_length()
            width = 1 << bl
            ts = (t_delta >> (n - bl)) & 1
            qs = (q_delta >> (n - bl)) & 1
            before = len(out)
            walk((2 * i - ts) % width + width,
                 (2 * j - qs) % width + width, x, z - 1)
            walk((2 * i + 1 - ts) % width + width,
                 (2 * j + 1 - qs) % width + width, z, y)
            if len(out) == before and a <= x and y <= b:
                # recursion was wasted: the whole [x, y] block matched, so
                # these two tags provably name equal strings
                union(t1, t2)

        walk(1, 1, 0, size - 1)
        self.diff_visits += visits
        return out

    def materialize(self) -> list:
        """The maintained string as a letter list; O(m)."""
        leaves = self.leaves
        topo = self.topo
        size = self.size
        return [leaves[topo.leaf_of_position(pos) - size] for pos in range(size)]
