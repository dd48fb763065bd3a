"""Solvers producing equitable partitions of [n].

Four routes, picked by the pipeline in solve():

* a complete backtracking oracle (solve_exact) assigning elements from n
  down to 1 with completion-sum pruning and symmetry breaking between
  equal-size blocks;
* a closed-form constructor for k = 2 (solve_k2) realizing the endpoint
  of the adjacent-exchange sliding sequence;
* the size-one constructor ({n} plus pairs {i, n-i}) for sizes
  (1, 2, ..., 2);
* a potential-descent local search over element exchanges, restarted
  from a randomized greedy initializer.

The local search is a heuristic; completeness rests on the exact
fallback.  Exact and constructive outputs are deterministic; heuristic
outputs are deterministic for a fixed seed but not promised identical
across ports.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum

from .core import (
    Instance,
    Partition,
    deviation,
    implements,
    is_equitable,
    magic_sum,
)
from .feasibility import Verdict, feasibility, necessary_condition


class XorShift64Star:
    """xorshift64* PRNG: tiny, fast, and identical on every platform.

    The state must be non-zero; it is seeded directly with the given
    64-bit seed.
    """

    _MASK = (1 << 64) - 1
    _MULT = 0x2545F4914F6CDD1D

    def __init__(self, seed: int):
        state = seed & self._MASK
        if state == 0:
            raise ValueError("xorshift64* requires a non-zero seed")
        self._state = state

    def next_u64(self) -> int:
        x = self._state
        x ^= x >> 12
        x = (x ^ (x << 25)) & self._MASK
        x ^= x >> 27
        self._state = x
        return (x * self._MULT) & self._MASK

    def randrange(self, bound: int) -> int:
        # Modulo bias is irrelevant here: we only need determinism.
        return self.next_u64() % bound


@dataclass(frozen=True)
class SearchParams:
    """Budgets and seeding for solve()/local_search().

    max_plateau_steps None means 2n, chosen when the instance is known.
    """

    seed: int = 0
    max_restarts: int = 64
    max_plateau_steps: int | None = None
    exact_node_budget: int = 100_000_000
    exact_cutoff_n: int = 24

    def __post_init__(self) -> None:
        if self.seed < 0:
            raise ValueError("seed must be non-negative")
        for name in ("max_restarts", "exact_node_budget", "exact_cutoff_n"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        if self.max_plateau_steps is not None and self.max_plateau_steps < 0:
            raise ValueError("max_plateau_steps must be non-negative")


@dataclass
class SolveStats:
    """Mutable counters accumulated across the solve pipeline."""

    nodes: int = 0
    swaps: int = 0
    restarts: int = 0
    elapsed: float = 0.0


class ExactStatus(Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    BUDGET = "budget"


@dataclass(frozen=True)
class ExactResult:
    """Outcome of the exhaustive search.

    NOT_FOUND is a proof of non-existence (the full space was covered);
    BUDGET means the node budget ran out first and nothing is known.
    """

    status: ExactStatus
    partition: Partition | None
    nodes: int


class SolveStatus(Enum):
    SOLVED = "solved"
    PROVEN_INFEASIBLE = "proven_infeasible"
    BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    partition: Partition | None
    verdict: Verdict
    stats: SolveStats = field(compare=False, default_factory=SolveStats)


class _BudgetHit(Exception):
    pass


def solve_exact(inst: Instance, budget: int) -> ExactResult:
    """Complete backtracking search for an equitable partition.

    Elements are assigned from n down to 1, so after placing e the
    unassigned pool is exactly {1, ..., e-1} and each block's remaining
    sum must lie between the smallest and largest possible completions
    from that pool.  Equal-size blocks are interchangeable, so an element
    may open only the first empty block of each size class; blocks within
    an equal-size run are re-ordered by least element on output.
    """
    s = magic_sum(inst.n, inst.k)
    if s is None:
        raise ValueError(f"magic sum is not integral for n={inst.n}, k={inst.k}")
    n, k, sizes = inst.n, inst.k, inst.sizes
    counts = [0] * k
    sums = [0] * k
    placed: list[list[int]] = [[] for _ in range(k)]
    nodes = 0

    def bounds_ok(pool_max: int) -> bool:
        # Every block must still be completable from {1, ..., pool_max}.
        for i in range(k):
            slots = sizes[i] - counts[i]
            need = s - sums[i]
            if slots == 0:
                if need != 0:
                    return False
            elif not (
                slots * (slots + 1) // 2
                <= need
                <= slots * pool_max - slots * (slots - 1) // 2
            ):
                return False
        return True

    def extend(e: int) -> bool:
        nonlocal nodes
        if e == 0:
            return True
        for i in range(k):
            if counts[i] == sizes[i]:
                continue
            if (
                counts[i] == 0
                and i > 0
                and sizes[i] == sizes[i - 1]
                and counts[i - 1] == 0
            ):
                continue  # interchangeable with the previous empty block
            nodes += 1
            if nodes > budget:
                raise _BudgetHit
            sums[i] += e
            counts[i] += 1
            placed[i].append(e)
            if bounds_ok(e - 1) and extend(e - 1):
                return True
            sums[i] -= e
            counts[i] -= 1
            placed[i].pop()
        return False

    try:
        found = bounds_ok(n) and extend(n)
    except _BudgetHit:
        return ExactResult(status=ExactStatus.BUDGET, partition=None, nodes=nodes)
    if not found:
        return ExactResult(status=ExactStatus.NOT_FOUND, partition=None, nodes=nodes)
    return ExactResult(
        status=ExactStatus.FOUND,
        partition=Partition.from_blocks(n, _order_equal_size_runs(sizes, placed)),
        nodes=nodes,
    )


def _order_equal_size_runs(
    sizes: tuple[int, ...], blocks: list[list[int]]
) -> list[list[int]]:
    """Within each run of equal sizes, order blocks by least element."""
    out: list[list[int]] = []
    start = 0
    for end in range(1, len(sizes) + 1):
        if end == len(sizes) or sizes[end] != sizes[start]:
            out.extend(sorted(blocks[start:end], key=min))
            start = end
    return out


def solve_k2(inst: Instance) -> Partition:
    """Deterministic two-block construction.

    Starting from the p_1 smallest elements, positions are raised from the
    top: position j (holding j) may rise to n - (p_1 - j), a gain of
    n - p_1 per fully raised position.  The remaining deficit lands on a
    single middle element, so the small block is a prefix of [n], at most
    one middle value, and a suffix of top values.  This closed form equals
    the position-by-position greedy raise.
    """
    if inst.k != 2:
        raise ValueError(f"solve_k2 requires k=2, got k={inst.k}")
    s = magic_sum(inst.n, inst.k)
    if s is None:
        raise ValueError(f"magic sum is not integral for n={inst.n}, k=2")
    p1 = inst.sizes[0]
    if p1 < 2:
        raise ValueError("solve_k2 requires the smaller block size >= 2")
    if not necessary_condition(inst):
        raise ValueError(
            f"top-{p1} sum {inst.n * p1 - p1 * (p1 - 1) // 2} cannot reach {s}"
        )
    n = inst.n
    deficit = s - p1 * (p1 + 1) // 2
    gain = n - p1
    full, partial = divmod(deficit, gain)
    prefix_len = p1 - full  # positions left at their initial values, plus one partial
    if partial == 0:
        small = tuple(range(1, prefix_len + 1)) + tuple(range(n - full + 1, n + 1))
        rest = tuple(range(prefix_len + 1, n - full + 1))
    else:
        mid = prefix_len + partial
        small = (
            tuple(range(1, prefix_len)) + (mid,) + tuple(range(n - full + 1, n + 1))
        )
        rest = tuple(range(prefix_len, mid)) + tuple(range(mid + 1, n - full + 1))
    # The two blocks are unions of disjoint sub-ranges of [n] covering it,
    # so the validation pass is skipped; sums follow from the construction.
    total = n * (n + 1) // 2
    if len(small) != p1 or len(rest) != n - p1:
        raise AssertionError("two-block construction produced wrong sizes")
    return Partition._from_trusted(n, (small, rest), (s, total - s))


def solve_p1_eq_1(inst: Instance) -> Partition:
    """{n} plus the pairs {i, n-i}: every block sums to n."""
    if inst.sizes != (1,) + (2,) * (inst.k - 1) or inst.k != (inst.n + 1) // 2:
        raise ValueError(
            f"size-one construction needs sizes (1, 2, ..., 2) with "
            f"k=(n+1)/2, got n={inst.n}, sizes={inst.sizes}"
        )
    n = inst.n
    blocks: list[list[int]] = [[n]]
    blocks.extend([i, n - i] for i in range(1, (n - 1) // 2 + 1))
    return Partition.from_blocks(n, blocks)


def greedy_init(inst: Instance, seed: int) -> Partition:
    """Assign n, n-1, ..., 1, each to the open block with largest deficit.

    Ties go to the lowest block index.  With a non-zero seed, the first
    ceil(k/2) placements pick a uniformly random open block and later
    ties are broken at random, so restarts explore distinct starts while
    staying reproducible.
    """
    s = magic_sum(inst.n, inst.k)
    if s is None:
        raise ValueError(f"magic sum is not integral for n={inst.n}, k={inst.k}")
    rng = XorShift64Star(seed) if seed != 0 else None
    k, sizes = inst.k, inst.sizes
    counts = [0] * k
    sums = [0] * k
    blocks: list[list[int]] = [[] for _ in range(k)]
    random_head = (k + 1) // 2
    for step, e in enumerate(range(inst.n, 0, -1)):
        open_blocks = [i for i in range(k) if counts[i] < sizes[i]]
        if rng is not None and step < random_head:
            i = open_blocks[rng.randrange(len(open_blocks))]
        else:
            best = max(s - sums[i] for i in open_blocks)
            ties = [i for i in open_blocks if s - sums[i] == best]
            i = ties[rng.randrange(len(ties))] if rng is not None and len(ties) > 1 else ties[0]
        blocks[i].append(e)
        counts[i] += 1
        sums[i] += e
    return Partition.from_blocks(inst.n, blocks)


def _state_width(assign: list[int], sums: list[int], s: int, n: int) -> int | float:
    """Width of the (assign, sums) state; labels scanned in ascending order."""
    lows = [x for x in range(1, n + 1) if sums[assign[x]] < s]
    highs = [x for x in range(1, n + 1) if sums[assign[x]] > s]
    if not lows or not highs:
        return float("inf")
    best: int | float = float("inf")
    i = 0
    for y in highs:
        while i < len(lows) and lows[i] < y:
            i += 1
        if i > 0:
            best = min(best, y - lows[i - 1])
        if best == 1:
            break
    return best


def _best_improving_move(
    assign: list[int], sums: list[int], n: int
) -> tuple[int, int, int] | None:
    """Most negative exchange delta, ties to the lex-smallest (a, b).

    Scanning pairs in lex order makes the adjacent exchange (a, a+1) win
    any tie among pairs starting at a.
    """
    best: tuple[int, int, int] | None = None
    for a in range(1, n):
        ia = assign[a]
        sa = sums[ia]
        for b in range(a + 1, n + 1):
            ib = assign[b]
            if ib == ia:
                continue
            t = b - a
            delta = 2 * t * (t - (sums[ib] - sa))
            if delta < 0 and (best is None or delta < best[0]):
                best = (delta, a, b)
    return best


def _plateau_move(
    assign: list[int], sums: list[int], s: int, n: int, cur_width: int | float
) -> tuple[int, int] | None:
    """First zero-delta exchange, preferring one that shrinks the width.

    Zero delta means b - a equals the block-sum difference, so the two
    blocks trade sums and the partition stays equivalent.
    """
    fallback: tuple[int, int] | None = None
    for a in range(1, n):
        ia = assign[a]
        sa = sums[ia]
        for b in range(a + 1, n + 1):
            ib = assign[b]
            if ib == ia:
                continue
            t = b - a
            if t != sums[ib] - sa:
                continue
            if fallback is None:
                fallback = (a, b)
            _apply_exchange(assign, sums, a, b)
            shrinks = _state_width(assign, sums, s, n) < cur_width
            _apply_exchange(assign, sums, a, b)
            if shrinks:
                return (a, b)
    return fallback


def _apply_exchange(assign: list[int], sums: list[int], a: int, b: int) -> None:
    ia, ib = assign[a], assign[b]
    t = b - a
    sums[ia] += t
    sums[ib] -= t
    assign[a], assign[b] = ib, ia


def local_search(
    p: Partition, s: int, params: SearchParams, stats: SolveStats | None = None
) -> Partition:
    """Potential descent over element exchanges with plateau drift.

    Applies the best strictly-improving exchange until none exists, then
    up to max_plateau_steps zero-delta exchanges (per restart), then
    restarts from greedy_init with the next seed.  Returns the best
    partition seen: minimum deviation, ties by minimum width.  Deviation
    never increases within a restart.
    """
    if is_equitable(p, s):
        return p
    n = p.n
    k = p.k
    inst = Instance.from_sizes(n, [len(b) for b in p.blocks])
    max_plateau = params.max_plateau_steps if params.max_plateau_steps is not None else 2 * n

    assign = [0] * (n + 1)
    for i, block in enumerate(p.blocks):
        for x in block:
            assign[x] = i
    sums = list(p.sums)

    def dev() -> int:
        return sum((t - s) ** 2 for t in sums)

    best_assign = assign.copy()
    best_key: tuple[int, int | float] = (dev(), _state_width(assign, sums, s, n))

    def note_state() -> None:
        nonlocal best_key, best_assign
        key = (dev(), _state_width(assign, sums, s, n))
        if key < best_key:
            best_key = key
            best_assign = assign.copy()

    restarts = 0
    while True:
        plateau_used = 0
        while True:
            d = dev()
            if d == 0:
                break
            move = _best_improving_move(assign, sums, n)
            if move is not None:
                _apply_exchange(assign, sums, move[1], move[2])
                if stats is not None:
                    stats.swaps += 1
                note_state()
                continue
            if plateau_used >= max_plateau:
                break
            step = _plateau_move(assign, sums, s, n, _state_width(assign, sums, s, n))
            if step is None:
                break
            _apply_exchange(assign, sums, *step)
            plateau_used += 1
            if stats is not None:
                stats.swaps += 1
            note_state()
        if dev() == 0 or restarts >= params.max_restarts:
            break
        restarts += 1
        if stats is not None:
            stats.restarts += 1
        fresh = greedy_init(inst, params.seed + restarts)
        for i, block in enumerate(fresh.blocks):
            for x in block:
                assign[x] = i
        sums = list(fresh.sums)
        note_state()

    blocks: list[list[int]] = [[] for _ in range(k)]
    for x in range(1, n + 1):
        blocks[best_assign[x]].append(x)
    return Partition.from_blocks(n, blocks)


def solve(inst: Instance, params: SearchParams | None = None) -> SolveResult:
    """Feasibility verdict, then the cheapest applicable solving route.

    Constructive routes handle k = 1, the size-one rule, and k = 2; other
    instances run the local search and, if it stalls and n is within
    exact_cutoff_n, the exhaustive fallback.  A SOLVED result always
    carries an equitable partition implementing inst.sizes, with blocks
    matched to the size slots.
    """
    if params is None:
        params = SearchParams()
    start_time = time.perf_counter()
    stats = SolveStats()
    verdict = feasibility(inst)

    def finish(status: SolveStatus, partition: Partition | None) -> SolveResult:
        if partition is not None:
            partition = _match_size_slots(inst, partition)
            assert implements(partition, inst.sizes)
            assert verdict.s is not None and is_equitable(partition, verdict.s)
        stats.elapsed = time.perf_counter() - start_time
        return SolveResult(status=status, partition=partition, verdict=verdict, stats=stats)

    if verdict.infeasible:
        return finish(SolveStatus.PROVEN_INFEASIBLE, None)
    s = verdict.s
    assert s is not None

    if inst.k == 1:
        return finish(SolveStatus.SOLVED, Partition.from_blocks(inst.n, [range(1, inst.n + 1)]))
    if inst.sizes[0] == 1:
        return finish(SolveStatus.SOLVED, solve_p1_eq_1(inst))
    if inst.k == 2:
        return finish(SolveStatus.SOLVED, solve_k2(inst))

    candidate = local_search(greedy_init(inst, params.seed), s, params, stats=stats)
    if deviation(candidate, s) == 0:
        return finish(SolveStatus.SOLVED, candidate)
    if inst.n <= params.exact_cutoff_n:
        exact = solve_exact(inst, budget=params.exact_node_budget)
        stats.nodes += exact.nodes
        if exact.status is ExactStatus.FOUND:
            return finish(SolveStatus.SOLVED, exact.partition)
        if exact.status is ExactStatus.NOT_FOUND:
            return finish(SolveStatus.PROVEN_INFEASIBLE, None)
    return finish(SolveStatus.BUDGET_EXHAUSTED, None)


def _match_size_slots(inst: Instance, p: Partition) -> Partition:
    """Reorder blocks so slot i holds a block of size inst.sizes[i]."""
    if tuple(len(b) for b in p.blocks) == inst.sizes:
        return p
    ordered = sorted(p.blocks, key=len)
    if tuple(len(b) for b in ordered) != inst.sizes:
        raise ValueError(f"partition does not implement sizes {inst.sizes}")
    return Partition.from_blocks(inst.n, ordered)
