from random import Random

import pytest

from shifttree import (
    HashCollisionError,
    HashedShiftTree,
    Instance,
    SumSet,
    solve,
    solve_naive,
    solve_with_stats,
)

from helpers import EDGE_MODULI, naive_diff, random_instance, rotate_right

BACKENDS = ("hashed", "tagged", "naive")


def all_backends(inst, seed=0):
    return [solve(inst, backend=b, seed=seed).ascending() for b in BACKENDS]


def test_instance_validation():
    with pytest.raises(ValueError):
        Instance(0, [])
    with pytest.raises(ValueError):
        Instance(3, [1, 2])
    with pytest.raises(ValueError):
        Instance(2, [1, -1])
    with pytest.raises(ValueError):
        Instance.from_pairs(0, [])
    with pytest.raises(ValueError):
        Instance.from_pairs(5, [(2, -1)])


def test_from_pairs_reduces_and_accumulates():
    inst = Instance.from_pairs(5, [(7, 3), (2, 1), (-3, 2)])
    assert inst.mult == [0, 0, 6, 0, 0]
    assert inst.total_count() == 6


def test_sumset_basics():
    s = SumSet(6)
    assert 0 in s
    assert len(s) == 1
    s.add(4)
    s.add(4)
    assert s.order == [0, 4]
    assert s.ascending() == [0, 4]
    assert 4 in s and 3 not in s and "x" not in s


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        solve(Instance(3, [0, 1, 0]), backend="quantum")


@pytest.mark.parametrize("backend", BACKENDS)
def test_worked_examples(backend):
    def run(m, pairs):
        return solve(Instance.from_pairs(m, pairs), backend=backend,
                     seed=9).ascending()

    assert run(7, []) == [0]
    assert run(5, [(2, 1), (3, 1)]) == [0, 2, 3]
    assert run(6, [(3, 2)]) == [0, 3]
    assert run(4, [(1, 1)]) == [0, 1]
    assert run(8, [(1, 8)]) == list(range(8))
    assert run(1, [(0, 5)]) == [0]
    assert run(9, [(0, 3)]) == [0]  # zero-valued elements change nothing


def test_single_element_oracle():
    for m in (2, 3, 7, 10):
        for k in range(0, 2 * m):
            want = sorted({0, k % m})
            assert solve_naive(Instance.from_pairs(m, [(k, 1)])).ascending() == want


def test_symmetric_difference_halves():
    # membership string of {0} against its rotation by 2 (mod 5):
    # 10000 vs 00100 differ at 0 and 2; only 2 is new
    s = [1, 0, 0, 0, 0]
    rotated = rotate_right(s, 2)
    d = naive_diff(s, rotated, 0, 4)
    assert d == [0, 2]
    assert [x for x in d if not s[x]] == [2]


def test_backends_agree_on_random_instances():
    rng = Random(1234)
    for trial in range(60):
        inst = random_instance(rng, m=rng.randint(1, 160))
        a, b, c = all_backends(inst, seed=trial)
        assert a == b == c, inst.m


def test_counters_within_budget():
    rng = Random(4321)
    for trial in range(40):
        inst = random_instance(rng, m=rng.randint(1, 200))
        for backend in ("hashed", "tagged"):
            result = solve_with_stats(inst, backend=backend, seed=trial)
            assert result.stats.bellman_iterations <= 2 * inst.m
            assert result.stats.reported_differences <= 2 * inst.m


def test_sums_only_grow_and_keep_zero():
    rng = Random(8)
    for _ in range(30):
        inst = random_instance(rng, m=rng.randint(1, 120))
        sums = solve(inst)
        assert sums.order[0] == 0
        assert len(set(sums.order)) == len(sums.order)
        assert all(0 <= d < inst.m for d in sums.order)


def test_prefix_padding_identity():
    # for any bitmap s and d <= m, rotating the doubled string keeps the
    # rotation of s as its length-m prefix
    rng = Random(9)
    for _ in range(200):
        m = rng.randint(1, 40)
        L = 1 << (2 * m - 1).bit_length()
        s = [rng.randrange(2) for _ in range(m)]
        doubled = s + [0] * (L - 2 * m) + s
        for d in range(m + 1):
            assert rotate_right(doubled, d)[:m] == rotate_right(s, d)[:m]


@pytest.mark.parametrize("backend", ["hashed", "tagged"])
def test_solver_state_checkpoint_padding_audit(backend):
    rng = Random(10)
    for m in (2, 3, 5, 12):
        inst = random_instance(rng, m=m)

        def check(state):
            s = [1 if v else 0 for v in state.sums.member]
            undone = rotate_right(state.t2.materialize(), -state.shift)
            assert undone == s + [0] * (state.L - 2 * m) + s
            assert state.t1.materialize() == s + [0] * (state.L - m)

        solve_with_stats(inst, backend=backend, seed=m, checkpoint=check)


def test_stats_are_reproducible():
    inst = Instance.from_pairs(97, [(13, 2), (40, 1), (5, 97), (64, 1)])
    for backend, seed in (("tagged", None), ("hashed", 5)):
        r1 = solve_with_stats(inst, backend=backend, seed=seed)
        r2 = solve_with_stats(inst, backend=backend, seed=seed)
        assert r1.stats == r2.stats
        assert r1.sums.order == r2.sums.order


def test_collision_tripwire_raises_distinct_error(monkeypatch):
    inst = Instance.from_pairs(6, [(2, 1), (3, 1)])
    real_diff = HashedShiftTree.diff

    def lying_diff(self, other, a, b):
        out = real_diff(self, other, a, b)
        return out[1:] if len(out) >= 2 else out  # hide one difference

    monkeypatch.setattr(HashedShiftTree, "diff", lying_diff)
    with pytest.raises(HashCollisionError):
        solve(inst, backend="hashed", seed=0)


def test_edge_moduli_smoke():
    rng = Random(11)
    for m in EDGE_MODULI:
        inst = random_instance(rng, m=m)
        a, b, c = all_backends(inst, seed=m)
        assert a == b == c
