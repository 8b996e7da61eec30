"""Equivalence classes over tag ids, with deletion.

Union-find with union by size and path compression.  Deletion is lazy: a
deleted tag is only marked, and the whole forest is rebuilt over the
survivors once more than half of the occupied slots are marked.  Rebuilding
recycles dead slots, so memory stays proportional to the live count while
find/union/delete keep their inverse-Ackermann amortized cost and new_tag
stays O(1) worst case.

Live tags keep their ids across rebuilds; only representatives may change,
so callers must not cache ``find`` results across mutations.
"""

_FREE = -1


class TagStore:
    """Mutable partition of tag ids.  Single-threaded: ``find`` compresses
    paths, so even read-only use mutates the forest.

    ``deletion_enabled=False`` turns ``delete_tag`` into a no-op (tags then
    live forever and memory only grows); it exists for tests that want to
    compare behaviour against the deleting configuration.
    """

    def __init__(self, deletion_enabled: bool = True):
        self._parent: list[int] = []  # parent slot; _FREE marks recycled slots
        self._size: list[int] = []    # class size, meaningful at roots only
        self._dead: list[bool] = []
        self._free: list[int] = []
        self._deletion_enabled = deletion_enabled
        self.live = 0     # allocated and not deleted
        self.marked = 0   # deleted but still occupying a forest slot
        self.ops = 0      # public calls (new_tag/find/union/delete_tag)
        self.steps = 0    # parent-link hops walked upward
        self.rebuilds = 0

    @property
    def capacity(self) -> int:
        """Allocated slot count, live or not."""
        return len(self._parent)

    def new_tag(self) -> int:
        """Fresh tag in its own singleton class; O(1)."""
        self.ops += 1
        if self._free:
            x = self._free.pop()
            self._parent[x] = x
            self._size[x] = 1
            self._dead[x] = False
        else:
            x = len(self._parent)
            self._parent.append(x)
            self._size.append(1)
            self._dead.append(False)
        self.live += 1
        return x

    def _root(self, x: int) -> int:
        parent = self._parent
        r = x
        hops = 0
        while parent[r] != r:
            r = parent[r]
            hops += 1
        if hops:
            self.steps += hops
            while parent[x] != r:
                parent[x], x = r, parent[x]
        return r

    def find(self, x: int) -> int:
        """Representative of x's class; equal iff the tags are equivalent."""
        self.ops += 1
        parent = self._parent
        assert 0 <= x < len(parent) and parent[x] != _FREE \
            and not self._dead[x], f"find on dead or free tag {x}"
        r = x
        hops = 0
        while parent[r] != r:
            r = parent[r]
            hops += 1
        if hops:
            self.steps += hops
            if hops > 1:
                while parent[x] != r:
                    parent[x], x = r, parent[x]
        return r

    def union(self, x: int, y: int) -> None:
        """Merge the classes of x and y."""
        self.ops += 1
        assert 0 <= x < len(self._parent) and self._parent[x] != _FREE \
            and not self._dead[x], f"union on dead or free tag {x}"
        assert 0 <= y < len(self._parent) and self._parent[y] != _FREE \
            and not self._dead[y], f"union on dead or free tag {y}"
        rx = self._root(x)
        ry = self._root(y)
        if rx == ry:
            return
        size = self._size
        if size[rx] < size[ry]:
            rx, ry = ry, rx
        self._parent[ry] = rx
        size[rx] += size[ry]

    def delete_tag(self, x: int) -> None:
        """Remove x from its class; its slot is recycled after a rebuild."""
        self.ops += 1
        assert 0 <= x < len(self._parent) and self._parent[x] != _FREE \
            and not self._dead[x], f"delete on dead or free tag {x}"
        if not self._deletion_enabled:
            return
        self._dead[x] = True
        self.live -= 1
        self.marked += 1
        if self.marked > self.live:
            self._rebuild()

    def _rebuild(self) -> None:
        # Flatten the forest over live tags, preserving the partition but
        # not representative identities, then free every marked slot.
        parent = self._parent
        size = self._size
        dead = self._dead
        n_slots = len(parent)
        survivors = [x for x in range(n_slots)
                     if parent[x] != _FREE and not dead[x]]
        roots = [self._root(x) for x in survivors]
        rep = [_FREE] * n_slots  # old root -> surviving representative
        for x, r in zip(survivors, roots):
            nr = rep[r]
            if nr == _FREE:
                rep[r] = x
                parent[x] = x
                size[x] = 1
            else:
                parent[x] = nr
                size[nr] += 1
        free = self._free
        for x in range(n_slots):
            if parent[x] != _FREE and dead[x]:
                parent[x] = _FREE
                dead[x] = False
                free.append(x)
        self.marked = 0
        self.rebuilds += 1
