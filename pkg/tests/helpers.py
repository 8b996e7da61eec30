"""Reference models and generators shared across the test suite."""

from random import Random

from shifttree import Instance


def bits(text: str) -> list[int]:
    return [int(c) for c in text]


def rotate_right(seq, k: int) -> list:
    """result[j] = seq[(j - k) mod len]; negative k rotates left."""
    k %= len(seq)
    if k == 0:
        return list(seq)
    return list(seq[-k:]) + list(seq[:-k])


def naive_diff(s, q, a: int, b: int) -> list[int]:
    return [x for x in range(a, b + 1) if s[x] != q[x]]


def leaf_letter(tree, i: int):
    if hasattr(tree, "leaves"):
        return tree.leaves[i - tree.size]
    return tree.nodes[i]


def node_string(tree, i: int) -> list:
    """Letters covered by node i, left to right."""
    if i >= tree.size:
        return [leaf_letter(tree, i)]
    return (node_string(tree, tree.topo.left_child(i))
            + node_string(tree, tree.topo.right_child(i)))


EDGE_MODULI = [1, 2, 3, 5, 8, 16, 100, 127, 128, 129, 512, 1000]


def random_instance(rng: Random, m: int | None = None) -> Instance:
    """Random instance; moduli drawn log-uniformly from [1, 1024]."""
    if m is None:
        m = max(1, min(1024, round(2 ** rng.uniform(0.0, 10.0))))
    mult = [0] * m
    style = rng.random()
    if style < 0.45:
        # a handful of values, huge multiplicities allowed
        for _ in range(rng.randint(0, min(m, 12))):
            mult[rng.randrange(m)] += rng.choice([1, 1, 2, m])
    elif style < 0.8:
        for _ in range(rng.randint(0, min(m, 64))):
            mult[rng.randrange(m)] += rng.choice([1, 2])
    else:
        # dense
        for x in range(m):
            if rng.random() < 0.5:
                mult[x] = rng.choice([1, 1, 1, 2, m])
    if rng.random() < 0.3:
        mult[0] += rng.choice([1, m])  # zero-valued elements must be harmless
    return Instance(m, mult)
