"""Exact-integer algebra for labeled partitions of [n] = {1, ..., n}.

A partition of [n] into k blocks of sizes p_1 <= ... <= p_k is *equitable*
when every block sums to the magic sum s = n(n+1)/(2k).  The squared
deviation d = sum_i (S(A_i) - s)^2 is the potential driving the local
search: it is zero exactly on equitable partitions, and exchanging two
elements a < b between blocks changes it by 2t(t - u) with t = b - a and
u = S(block of b) - S(block of a), independently of s.

All arithmetic is exact integer arithmetic.  Ground sets are capped at
n <= 2^31 so every quantity here stays within signed 64-bit range in
fixed-width ports of this module.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

MAX_N = 2**31

#: Distinguished width value when no high/low element pair exists.
INFINITE_WIDTH = math.inf


class BlockClass(Enum):
    """Position of a block sum relative to the magic sum."""

    LOW = "low"
    EXACT = "exact"
    HIGH = "high"


def magic_sum(n: int, k: int) -> int | None:
    """Return n(n+1)/(2k) when 2k divides n(n+1), else None.

    This is the sum every block of an equitable k-partition of [n] must
    attain.  Rejects n outside [1, 2^31] and k < 1.
    """
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in [1, {MAX_N}], got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    total = n * (n + 1) // 2
    if total % k != 0:
        return None
    return total // k


@dataclass(frozen=True)
class Instance:
    """A partition problem: split [n] into blocks of the given sizes.

    sizes must be non-decreasing, positive, and sum to n; k = len(sizes).
    """

    n: int
    k: int
    sizes: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be in [1, {MAX_N}], got {self.n}")
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if len(self.sizes) != self.k:
            raise ValueError(f"expected {self.k} sizes, got {len(self.sizes)}")
        if any(p < 1 for p in self.sizes):
            raise ValueError(f"sizes must be positive, got {self.sizes}")
        if any(a > b for a, b in zip(self.sizes, self.sizes[1:])):
            raise ValueError(f"sizes must be non-decreasing, got {self.sizes}")
        if sum(self.sizes) != self.n:
            raise ValueError(f"sizes sum to {sum(self.sizes)}, expected n={self.n}")

    @classmethod
    def from_sizes(cls, n: int, sizes) -> "Instance":
        """Build an instance, normalizing sizes to non-decreasing order."""
        ordered = tuple(sorted(sizes))
        return cls(n=n, k=len(ordered), sizes=ordered)

    @property
    def prefix_sums(self) -> tuple[int, ...]:
        """P_j = p_1 + ... + p_j for j = 1..k."""
        out = []
        acc = 0
        for p in self.sizes:
            acc += p
            out.append(acc)
        return tuple(out)


@dataclass(frozen=True)
class Partition:
    """A labeled set-partition of [n] with cached block sums.

    Blocks are ascending tuples; the block sequence keeps its given
    (input-size) order.  Values are immutable: every operation returns a
    new partition, so instances may be shared freely between workers.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]
    sums: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_N:
            raise ValueError(f"n must be in [1, {MAX_N}], got {self.n}")
        if not self.blocks:
            raise ValueError("a partition needs at least one block")
        if len(self.sums) != len(self.blocks):
            raise ValueError("one cached sum per block required")
        count = 0
        for block, cached in zip(self.blocks, self.sums):
            if not block:
                raise ValueError("blocks must be non-empty")
            if block[0] < 1 or block[-1] > self.n:
                raise ValueError(f"block {block} leaves [1, {self.n}]")
            if any(x >= y for x, y in zip(block, block[1:])):
                raise ValueError(f"block {block} must be strictly ascending")
            if sum(block) != cached:
                raise ValueError(f"cached sum {cached} != recomputed {sum(block)}")
            count += len(block)
        if count != self.n or len(set().union(*self.blocks)) != self.n:
            raise ValueError("blocks must be disjoint with union exactly [n]")

    @classmethod
    def from_blocks(cls, n: int, blocks) -> "Partition":
        """Build a partition from iterables of labels, sorting each block."""
        normalized = tuple(tuple(sorted(b)) for b in blocks)
        return cls(n=n, blocks=normalized, sums=tuple(sum(b) for b in normalized))

    @classmethod
    def _from_trusted(cls, n: int, blocks: tuple, sums: tuple) -> "Partition":
        """Skip validation for blocks proven disjoint by construction.

        Only for callers that assemble blocks from arithmetic ranges (the
        validation pass is O(n) and dominates at n near 10^6).  The caller
        owns the invariants.
        """
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "sums", sums)
        return self

    @property
    def k(self) -> int:
        return len(self.blocks)

    @cached_property
    def _block_index(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def block_of(self, label: int) -> int:
        """Index of the block containing label."""
        try:
            return self._block_index[label]
        except KeyError:
            raise ValueError(f"label {label} not in [1, {self.n}]") from None


def canonical_blocks(p: Partition) -> tuple[tuple[int, ...], ...]:
    """Blocks reordered by least element; canonical form for equality checks."""
    return tuple(sorted(p.blocks, key=lambda b: b[0]))


def implements(p: Partition, sizes) -> bool:
    """True when the multiset of block sizes matches the size sequence."""
    return sorted(len(b) for b in p.blocks) == sorted(sizes)


def deviation(p: Partition, s: int) -> int:
    """Squared deviation of the block sums from the target s.

    Zero exactly when every block sums to s.
    """
    return sum((t - s) ** 2 for t in p.sums)


def is_equitable(p: Partition, s: int) -> bool:
    return deviation(p, s) == 0


def classify(block_sum: int, s: int) -> BlockClass:
    """Low/Exact/High by the sign of block_sum - s."""
    if block_sum < s:
        return BlockClass.LOW
    if block_sum > s:
        return BlockClass.HIGH
    return BlockClass.EXACT


def swap(p: Partition, a: int, b: int) -> Partition:
    """Exchange a and b between their blocks; all block sizes unchanged.

    Requires a < b lying in distinct blocks.  Applying the same swap twice
    returns to the original partition.
    """
    if a >= b:
        raise ValueError(f"expected a < b, got a={a}, b={b}")
    ia = p.block_of(a)
    ib = p.block_of(b)
    if ia == ib:
        raise ValueError(f"{a} and {b} are both in block {ia}")
    blocks = list(p.blocks)
    blocks[ia] = _replace(blocks[ia], a, b)
    blocks[ib] = _replace(blocks[ib], b, a)
    sums = list(p.sums)
    t = b - a
    sums[ia] += t
    sums[ib] -= t
    return Partition(n=p.n, blocks=tuple(blocks), sums=tuple(sums))


def _replace(block: tuple[int, ...], old: int, new: int) -> tuple[int, ...]:
    """Remove old from a sorted tuple and insert new, keeping order."""
    trimmed = list(block)
    trimmed.remove(old)
    trimmed.insert(bisect_left(trimmed, new), new)
    return tuple(trimmed)


def swap_delta(p: Partition, a: int, b: int, s: int) -> int:
    """Change in deviation caused by swap(p, a, b): exactly 2t(t - u).

    Here t = b - a and u = S(block of b) - S(block of a).  The value does
    not depend on the target s (the s terms cancel); the parameter is kept
    so the contract deviation(swap(p,a,b), s) = deviation(p, s) + delta
    reads off the signature.  Positive iff t > u, zero iff t = u.
    """
    if a >= b:
        raise ValueError(f"expected a < b, got a={a}, b={b}")
    ia = p.block_of(a)
    ib = p.block_of(b)
    if ia == ib:
        raise ValueError(f"{a} and {b} are both in block {ia}")
    t = b - a
    u = p.sums[ib] - p.sums[ia]
    return 2 * t * (t - u)


def width(p: Partition, s: int) -> int | float:
    """Minimum y - x over y in a high block, x in a low block, y > x.

    INFINITE_WIDTH (math.inf) when no such pair exists; in particular for
    every equitable partition.  Finite values are always >= 1.
    """
    lows: list[int] = []
    highs: list[int] = []
    for block, t in zip(p.blocks, p.sums):
        if t < s:
            lows.extend(block)
        elif t > s:
            highs.extend(block)
    if not lows or not highs:
        return INFINITE_WIDTH
    lows.sort()
    highs.sort()
    best: int | float = INFINITE_WIDTH
    i = 0
    for y in highs:
        while i < len(lows) and lows[i] < y:
            i += 1
        if i > 0:
            best = min(best, y - lows[i - 1])
        if best == 1:
            break
    return best


def equivalent(p: Partition, q: Partition) -> bool:
    """True when the multisets of block sums agree.

    Matching block sizes is deliberately not required; only sums matter.
    """
    if p.n != q.n or p.k != q.k:
        raise ValueError(
            f"partitions not comparable: n={p.n},k={p.k} vs n={q.n},k={q.k}"
        )
    return sorted(p.sums) == sorted(q.sums)
