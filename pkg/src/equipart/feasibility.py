"""Existence tests for equitable partitions implementing given block sizes.

The decision pipeline, in order:

1. divisibility: the magic sum s = n(n+1)/(2k) must be an integer;
2. the size-one rule: a size-1 block must be {n}, forcing s = n, i.e.
   k = (n+1)/2, and then every other block has size 2;
3. the prefix condition: for each j, the P_j largest elements of [n]
   must sum to at least j*s, where P_j = p_1 + ... + p_j;
4. proof status: the prefix condition is sufficient for k <= 4 (proven);
   for k >= 5 a passing instance is reported as conjectured only.

Verdicts are deterministic: a failing prefix condition reports the
smallest failing index j.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import Instance, magic_sum


class FeasibilityStatus(Enum):
    INFEASIBLE_DIVISIBILITY = "infeasible_divisibility"
    INFEASIBLE_CONDITION = "infeasible_condition"
    INFEASIBLE_SIZE_ONE = "infeasible_size_one"
    FEASIBLE_PROVEN = "feasible_proven"
    CONDITION_HOLDS_CONJECTURED = "condition_holds_conjectured"


#: Statuses predicting that an equitable partition exists.
_POSITIVE = (
    FeasibilityStatus.FEASIBLE_PROVEN,
    FeasibilityStatus.CONDITION_HOLDS_CONJECTURED,
)


@dataclass(frozen=True)
class Verdict:
    """Feasibility outcome with proof status.

    failing_index is the smallest failing prefix index (1-based) for
    INFEASIBLE_CONDITION; reason explains INFEASIBLE_SIZE_ONE verdicts.
    s is the magic sum whenever divisibility holds.
    """

    status: FeasibilityStatus
    s: int | None = None
    failing_index: int | None = None
    reason: str | None = None

    @property
    def predicts_feasible(self) -> bool:
        return self.status in _POSITIVE

    @property
    def infeasible(self) -> bool:
        return not self.predicts_feasible


def prefix_top_sum(n: int, P: int) -> int:
    """Sum of the P largest elements of [n]: P*n - P(P-1)/2."""
    if not 0 <= P <= n:
        raise ValueError(f"P must be in [0, {n}], got {P}")
    return P * n - P * (P - 1) // 2


def condition_failing_index(inst: Instance) -> int | None:
    """Smallest j in 1..k violating prefix_top_sum(n, P_j) >= j*s, or None.

    The j = k case is an identity (both sides equal n(n+1)/2) but is kept
    in the loop as a self-test.  Requires the magic sum to be integral.
    """
    s = magic_sum(inst.n, inst.k)
    if s is None:
        raise ValueError(
            f"magic sum is not integral for n={inst.n}, k={inst.k}"
        )
    for j, P in enumerate(inst.prefix_sums, start=1):
        if prefix_top_sum(inst.n, P) < j * s:
            return j
    return None


def necessary_condition(inst: Instance) -> bool:
    """True iff every prefix of blocks could be filled from the top of [n]."""
    return condition_failing_index(inst) is None


def _size_one_verdict(inst: Instance, s: int) -> Verdict:
    """Decide instances with a size-1 block: it must be {n}, the rest pairs."""
    if s != inst.n:
        return Verdict(
            status=FeasibilityStatus.INFEASIBLE_SIZE_ONE,
            s=s,
            reason=(
                f"a size-1 block must be {{{inst.n}}}, but the magic sum is "
                f"{s} != {inst.n}"
            ),
        )
    if inst.sizes != (1,) + (2,) * (inst.k - 1):
        return Verdict(
            status=FeasibilityStatus.INFEASIBLE_SIZE_ONE,
            s=s,
            reason=(
                "with a size-1 block every other block must have size 2, "
                f"got sizes {inst.sizes}"
            ),
        )
    return Verdict(status=FeasibilityStatus.FEASIBLE_PROVEN, s=s)


def feasibility(inst: Instance) -> Verdict:
    """Full decision pipeline: divisibility, size-one rule, prefix condition.

    FEASIBLE_PROVEN covers k <= 4 (and the constructive size-one cases for
    any k); for k >= 5 a passing prefix condition yields
    CONDITION_HOLDS_CONJECTURED.  A constructive solver may still upgrade
    such instances to solved, but never the verdict itself.
    """
    s = magic_sum(inst.n, inst.k)
    if s is None:
        return Verdict(status=FeasibilityStatus.INFEASIBLE_DIVISIBILITY)
    if inst.sizes[0] == 1:
        return _size_one_verdict(inst, s)
    j = condition_failing_index(inst)
    if j is not None:
        return Verdict(
            status=FeasibilityStatus.INFEASIBLE_CONDITION, s=s, failing_index=j
        )
    if inst.k <= 4:
        return Verdict(status=FeasibilityStatus.FEASIBLE_PROVEN, s=s)
    return Verdict(status=FeasibilityStatus.CONDITION_HOLDS_CONJECTURED, s=s)
