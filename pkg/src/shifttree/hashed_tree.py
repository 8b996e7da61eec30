"""Hash-backed shift tree.

Maintains a string of length 2**n under point writes, cyclic rotations, and
difference listing against another tree.  Leaves store the letters; every
inner node stores the hash of the substring its subtree covers, so two
subtrees compare in O(1) with high probability.
"""

from .hashing import HashContext
from .topology import Topology


class HashedShiftTree:
    """A string of length 2**n with hashed subtree summaries.

    Costs: ``init`` O(m); ``set`` O(log m); ``shift(k)`` O(m / 2**j) where
    2**j is the largest power of two dividing k; ``diff`` O((d+1) log m)
    for d reported differences.  Letters are integers in [0, ctx.p).

    A fresh tree represents the all-zero string (every subtree hash of a
    zero string is 0, so the zeroed node array is already consistent).
    """

    def __init__(self, n: int, ctx: HashContext):
        self.topo = Topology(n)
        self.n = n
        self.size = 1 << n
        if ctx.max_len < self.size:
            raise ValueError("hash context power table too small for this tree")
        self.ctx = ctx
        self.nodes = [0] * (2 * self.size)  # index 0 unused; leaves at [size, 2*size)
        self.update_calls = 0
        self.diff_visits = 0

    def init(self, letters) -> None:
        """Load a full string, reset the rotation, rebuild every inner hash."""
        vals = list(letters)
        if len(vals) != self.size:
            raise ValueError(f"expected {self.size} letters, got {len(vals)}")
        p = self.ctx.p
        if vals and not (min(vals) >= 0 and max(vals) < p):
            raise ValueError(f"letters must lie in [0, {p})")
        self.topo.delta = 0
        self.nodes[self.size:] = vals
        self._update_range(self.size - 1)

    def update(self, i: int) -> None:
        """Recompute one inner node's hash from its children."""
        topo = self.topo
        li = topo.left_child(i)
        ri = topo.right_child(i)
        ctx = self.ctx
        half = self.size >> i.bit_length()  # leaf count under the left child
        self.nodes[i] = (self.nodes[li] + self.nodes[ri] * ctx.powers[half]) % ctx.p
        self.update_calls += 1

    def set(self, pos: int, x: int) -> None:
        """Overwrite the letter at string position ``pos``."""
        if not 0 <= x < self.ctx.p:
            raise ValueError(f"letter {x} outside [0, {self.ctx.p})")
        topo = self.topo
        j = topo.leaf_of_position(pos)
        self.nodes[j] = x
        while j != 1:
            j = topo.parent(j)
            self.update(j)

    def shift(self, k: int) -> None:
        """Rotate the string right by ``k`` (negative rotates left)."""
        k %= self.size
        if k == 0:
            return
        lowbit = k & -k  # 2**(2-adic valuation of k)
        self.topo.delta = (self.topo.delta + k) % self.size
        # subtrees of size lowbit moved wholesale; only nodes above them change
        self._update_range(self.size // lowbit - 1)

    def _update_range(self, count: int) -> None:
        # Recompute nodes count..1 bottom-up.  count+1 is always a power of
        # two, so the range is a whole stack of levels; looping per level
        # hoists the skew bit and power lookup out of the hot loop.
        nodes = self.nodes
        powers = self.ctx.powers
        p = self.ctx.p
        n = self.n
        delta = self.topo.delta
        size = self.size
        deepest = (count + 1).bit_length() - 2
        for lev in range(deepest, -1, -1):
            s = (delta >> (n - lev - 1)) & 1
            width = 2 << lev
            pw = powers[size >> (lev + 1)]
            for i in range(width - 1, (1 << lev) - 1, -1):
                li = (2 * i - s) % width + width
                ri = (2 * i + 1 - s) % width + width
                nodes[i] = (nodes[li] + nodes[ri] * pw) % p
        self.update_calls += count

    def diff(self, other: "HashedShiftTree", a: int, b: int) -> list[int]:
        """Positions in [a, b] where this string and ``other``'s differ.

        Ascending order.  Correct unless a hash collision hides a genuine
        difference (probability <= m log m / p per call).
        """
        if other.n != self.n:
            raise ValueError("trees must have equal depth")
        if other.ctx is not self.ctx:
            raise ValueError("trees must share one hash context")
        if not 0 <= a <= b < self.size:
            raise ValueError(f"bad interval [{a}, {b}] for size {self.size}")
        out: list[int] = []
        t_nodes = self.nodes
        q_nodes = other.nodes
        t_topo = self.topo
        q_topo = other.topo
        visits = 0

        def walk(i: int, j: int, x: int, y: int) -> None:
            nonlocal visits
            visits += 1
            if y < a or b < x or t_nodes[i] == q_nodes[j]:
                return
            if x == y:
                out.append(x)
                return
            z = (x + y + 1) >> 1
            walk(t_topo.left_child(i), q_topo.left_child(j), x, z - 1)
            walk(t_topo.right_child(i), q_topo.right_child(j), z, y)

        walk(1, 1, 0, self.size - 1)
        self.diff_visits += visits
        return out

    def materialize(self) -> list[int]:
        """The maintained string as a letter list; O(m)."""
        nodes = self.nodes
        topo = self.topo
        return [nodes[topo.leaf_of_position(pos)] for pos in range(self.size)]
