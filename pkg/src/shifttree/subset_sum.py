"""All attainable subset sums modulo m.

The driving recurrence is S <- S ∪ (S + x) per element copy.  Instead of
recomputing S + x, compare the membership bit-string s against its rotation
by x and read off the changed positions: each is either a brand-new sum or
the position it rotated in from, in equal numbers.  Two shift trees make
that comparison output-sensitive, and visiting the candidate values x in
bit-reversed order keeps the total rotation cost linearithmic.

The modulus is rarely a power of two, so the trees hold padded strings of
length L = the smallest power of two >= 2m: one tree holds s zero-padded,
the other two copies of s around a zero gap, so that for any rotation
d <= m the first m characters of the rotated double string are exactly the
rotation of s.
"""

from dataclasses import dataclass

from .hashed_tree import HashedShiftTree
from .hashing import make_context
from .schedule import ShiftSchedule
from .tag_store import TagStore
from .tagged_tree import TaggedShiftTree

BACKENDS = ("hashed", "tagged", "naive")


class HashCollisionError(RuntimeError):
    """The hashed backend reported an inconsistent difference set."""


@dataclass
class Instance:
    """A multiset of residues: mult[x] copies of each x in [0, m)."""

    m: int
    mult: list[int]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"modulus must be >= 1, got {self.m}")
        if len(self.mult) != self.m:
            raise ValueError(
                f"multiplicity table has {len(self.mult)} entries, expected {self.m}")
        if any(c < 0 for c in self.mult):
            raise ValueError("multiplicities must be >= 0")

    @classmethod
    def from_pairs(cls, m: int, pairs) -> "Instance":
        """Build from (value, multiplicity) pairs; values reduce mod m and
        multiplicities of equal residues accumulate."""
        if m < 1:
            raise ValueError(f"modulus must be >= 1, got {m}")
        mult = [0] * m
        for value, count in pairs:
            if count < 0:
                raise ValueError(f"negative multiplicity for value {value}")
            mult[value % m] += count
        return cls(m, mult)

    def total_count(self) -> int:
        return sum(self.mult)


class SumSet:
    """Attainable residues: a membership bitmap plus insertion order.

    0 is always attainable (the empty subset).
    """

    def __init__(self, m: int):
        self.m = m
        self.member = [False] * m
        self.member[0] = True
        self.order = [0]

    def add(self, d: int) -> None:
        if not self.member[d]:
            self.member[d] = True
            self.order.append(d)

    def __contains__(self, d) -> bool:
        return isinstance(d, int) and 0 <= d < self.m and self.member[d]

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def ascending(self) -> list[int]:
        return sorted(self.order)


@dataclass
class SolverStats:
    backend: str = ""
    bellman_iterations: int = 0
    reported_differences: int = 0
    updates: int = 0
    diff_visits: int = 0
    store_ops: int = 0


@dataclass
class SolveResult:
    sums: SumSet
    stats: SolverStats


@dataclass
class SolverState:
    """Live solver internals, handed to an optional per-step checkpoint."""

    m: int
    L: int
    t1: object
    t2: object
    sums: SumSet
    stats: SolverStats
    shift: int = 0


def solve_naive(inst: Instance, stats: SolverStats | None = None) -> SumSet:
    """Direct dynamic programming over S <- S ∪ (S + x); the ground truth.

    Multiplicities are capped at m passes per value (further copies cannot
    add residues).  O(m) per pass, so only for oracle-scale inputs.
    """
    m = inst.m
    sums = SumSet(m)
    member = sums.member
    for x in range(1, m):
        for _ in range(min(inst.mult[x], m)):
            if stats is not None:
                stats.bellman_iterations += 1
            rotated = member[-x:] + member[:-x]
            fresh = [j for j, (was, now) in enumerate(zip(member, rotated))
                     if now and not was]
            if not fresh:
                break
            for j in fresh:
                sums.add(j)
    return sums


def solve_with_stats(inst: Instance, backend: str = "tagged",
                     seed: int | None = None,
                     checkpoint=None) -> SolveResult:
    """Solve and report operation counters.

    ``seed`` feeds the hashed backend's hash point and is ignored otherwise.
    ``checkpoint``, if given, is called with a SolverState after each
    candidate value finishes (test hook).
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    stats = SolverStats(backend=backend)
    if backend == "naive":
        return SolveResult(solve_naive(inst, stats), stats)

    m = inst.m
    sums = SumSet(m)
    if m == 1:
        # every sum is 0; the padded strings would degenerate, so skip trees
        return SolveResult(sums, stats)

    width = (2 * m - 1).bit_length()  # smallest width with 2**width >= 2m
    L = 1 << width
    first = [0] * L
    first[0] = 1                      # membership string of {0}, zero-padded
    second = [0] * L
    second[0] = 1
    second[L - m] = 1                 # two copies of it around the zero gap

    store = None
    if backend == "hashed":
        ctx = make_context(L, seed)
        t1 = HashedShiftTree(width, ctx)
        t2 = HashedShiftTree(width, ctx)
    else:
        store = TagStore()
        t1 = TaggedShiftTree(width, store)
        t2 = TaggedShiftTree(width, store)
    t1.init(first)
    t2.init(second)

    member = sums.member
    mult = inst.mult
    state = SolverState(m, L, t1, t2, sums, stats) if checkpoint else None
    sched = ShiftSchedule(width)
    for delta in sched:
        t2.shift(delta)
        x = sched.current               # t2 now holds the double string rotated by x
        for _ in range(mult[x] if x < m else 0):
            stats.bellman_iterations += 1
            diffs = t1.diff(t2, 0, m - 1)
            stats.reported_differences += len(diffs)
            if not diffs:
                break                   # S is stable under +x; skip remaining copies
            fresh = [d for d in diffs if not member[d]]
            if len(diffs) != 2 * len(fresh):
                # each reported position must be a new sum or the old sum it
                # rotated in from; an imbalance means a difference was missed
                if backend == "hashed":
                    raise HashCollisionError(
                        f"{len(diffs)} differences but {len(fresh)} new sums "
                        f"at shift {x}")
                raise AssertionError("tagged diff returned an unbalanced set")
            for d in fresh:
                sums.add(d)
                t1.set(d, 1)
                t2.set((d + x) % L, 1)
                t2.set((d + x - m) % L, 1)
        if checkpoint is not None:
            state.shift = x
            checkpoint(state)

    stats.updates = t1.update_calls + t2.update_calls
    stats.diff_visits = t1.diff_visits + t2.diff_visits
    if store is not None:
        stats.store_ops = store.ops
    return SolveResult(sums, stats)


def solve(inst: Instance, backend: str = "tagged",
          seed: int | None = None) -> SumSet:
    """All residues attainable as subset sums of the instance, mod m."""
    return solve_with_stats(inst, backend=backend, seed=seed).sums
