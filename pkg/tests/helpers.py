"""Independent oracles and generators shared by the test modules.

Everything here deliberately avoids the library's own search paths:
expected values are produced by naive enumeration or literal traces so
the tests check the fast implementations against something slower and
simpler.
"""

from __future__ import annotations

import random
from itertools import combinations

from equipart.core import Instance, Partition


def naive_equitable_exists(n: int, sizes, s: int) -> bool:
    """Exhaustive existence check by anchored enumeration of set partitions.

    Anchors the smallest remaining element in each step, so every
    unordered partition with the given size multiset is visited exactly
    once.  Independent of the solver's assignment order and pruning.
    """

    def rec(remaining: list[int], sizes_left: list[int]) -> bool:
        if not sizes_left:
            return True
        anchor = remaining[0]
        rest = remaining[1:]
        tried: set[int] = set()
        for idx, p in enumerate(sizes_left):
            if p in tried:
                continue
            tried.add(p)
            others = sizes_left[:idx] + sizes_left[idx + 1 :]
            for combo in combinations(rest, p - 1):
                if anchor + sum(combo) != s:
                    continue
                chosen = set(combo)
                if rec([x for x in rest if x not in chosen], others):
                    return True
        return False

    return rec(list(range(1, n + 1)), list(sizes))


def k2_greedy_trace(n: int, p1: int, s: int) -> list[int]:
    """Literal position-by-position raise for the two-block construction."""
    block = list(range(1, p1 + 1))
    deficit = s - p1 * (p1 + 1) // 2
    assert deficit >= 0
    for j in range(p1, 0, -1):
        cap = n - (p1 - j)
        raised = min(block[j - 1] + deficit, cap)
        deficit -= raised - block[j - 1]
        block[j - 1] = raised
    assert deficit == 0, "construction must end with zero deficit"
    return block


def random_partition(rng: random.Random, max_n: int = 50) -> Partition:
    """A uniform-ish random labeled partition with 2..8 non-empty blocks."""
    n = rng.randint(4, max_n)
    k = rng.randint(2, min(8, n))
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    cuts = sorted(rng.sample(range(1, n), k - 1))
    bounds = [0, *cuts, n]
    blocks = [labels[bounds[i] : bounds[i + 1]] for i in range(k)]
    return Partition.from_blocks(n, blocks)


def random_cross_block_pair(rng: random.Random, p: Partition) -> tuple[int, int]:
    """Labels a < b lying in distinct blocks of p."""
    while True:
        a, b = rng.sample(range(1, p.n + 1), 2)
        if a > b:
            a, b = b, a
        if p.block_of(a) != p.block_of(b):
            return a, b


def random_valid_instance(rng: random.Random, n_max: int = 20) -> Instance:
    """A random instance with an integral magic sum and parts >= 1."""
    while True:
        n = rng.randint(2, n_max)
        k = rng.randint(1, n)
        if (n * (n + 1) // 2) % k != 0:
            continue
        sizes = [1] * k
        for _ in range(n - k):
            sizes[rng.randrange(k)] += 1
        return Instance.from_sizes(n, sizes)
