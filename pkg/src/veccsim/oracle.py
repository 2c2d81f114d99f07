"""Exact reference solver for offloader selection at fixed per-user grant sizes.

Each admissible user either stays local or receives exactly its minimum
block demand, so the selection problem is a 0/1 knapsack over the block
budget. The objective is lexicographic: first admit as many users as
possible, then among count-maximal selections minimise the system-wide
overhead (equivalently, maximise the total overhead saving). Admission
already implies the user benefits from offloading and meets its deadline;
users without a finite demand are never candidates.

Two independent solvers are provided: a dynamic program over capacity
(the production path) and exhaustive subset enumeration (a cross-check
for small instances). Both report the overhead through one shared
canonical summation so equal selections compare bit-equal.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .allocation import min_required_rb
from .errors import PreconditionError
from .model import local_overhead, offload_overhead

DEFAULT_USER_BOUND = 24
ENUMERATION_BOUND = 16


@dataclass(frozen=True)
class OracleSolution:
    offloader_set: frozenset[int]
    offloader_count: int
    total_overhead: float
    capacity_used: int


@dataclass(frozen=True)
class _Candidate:
    user_id: int
    weight_rb: int
    saving: float


def _prepare(users: Sequence[tuple], capacity: int) -> tuple[list[_Candidate], float]:
    """Eligible candidates (weight = min demand, value = overhead saving)
    and the all-local baseline overhead."""
    candidates = []
    base_total = 0.0
    for user_id, (task, profile, link, weights) in enumerate(users):
        local = local_overhead(task, profile, weights)
        base_total += local.weighted
        demand = min_required_rb(task, profile, link, weights, system_capacity=capacity)
        if demand.offloadable:
            off = offload_overhead(task, profile, link, weights, demand.min_rb)
            candidates.append(_Candidate(user_id, demand.min_rb, local.weighted - off.weighted))
    return candidates, base_total


def _solution(candidates, base_total, chosen_ids) -> OracleSolution:
    chosen = frozenset(chosen_ids)
    by_id = {c.user_id: c for c in candidates}
    # one canonical summation order so both solvers agree bit-for-bit
    saving = 0.0
    used = 0
    for user_id in sorted(chosen):
        saving += by_id[user_id].saving
        used += by_id[user_id].weight_rb
    return OracleSolution(chosen, len(chosen), base_total - saving, used)


def solve_exact(
    users: Sequence[tuple], capacity: int, *, user_bound: int = DEFAULT_USER_BOUND
) -> OracleSolution:
    """Lexicographic optimum via dynamic programming over the block budget."""
    candidates, base_total = _prepare(users, capacity)
    if len(candidates) > user_bound:
        raise PreconditionError(
            f"{len(candidates)} eligible users exceed the exact-solver bound {user_bound}"
        )
    budget = min(capacity, sum(c.weight_rb for c in candidates))

    # dp[c] = best (count, saving) using capacity c; take[i][c] marks item choice
    dp = [(0, 0.0)] * (budget + 1)
    take = []
    for cand in candidates:
        row = [False] * (budget + 1)
        for cap in range(budget, cand.weight_rb - 1, -1):
            prev_count, prev_saving = dp[cap - cand.weight_rb]
            moved = (prev_count + 1, prev_saving + cand.saving)
            if moved > dp[cap]:
                dp[cap] = moved
                row[cap] = True
        take.append(row)

    best_cap = max(range(budget + 1), key=lambda cap: dp[cap])
    chosen = []
    cap = best_cap
    for i in range(len(candidates) - 1, -1, -1):
        if take[i][cap]:
            chosen.append(candidates[i].user_id)
            cap -= candidates[i].weight_rb
    return _solution(candidates, base_total, chosen)


def solve_by_enumeration(users: Sequence[tuple], capacity: int) -> OracleSolution:
    """Lexicographic optimum by exhaustive subset enumeration (small instances)."""
    candidates, base_total = _prepare(users, capacity)
    n = len(candidates)
    if n > ENUMERATION_BOUND:
        raise PreconditionError(
            f"{n} eligible users exceed the enumeration bound {ENUMERATION_BOUND}"
        )
    if n == 0:
        return _solution(candidates, base_total, ())

    masks = np.arange(1 << n, dtype=np.uint32)
    bits = (masks[:, None] >> np.arange(n)) & 1
    weights = bits @ np.array([c.weight_rb for c in candidates])
    savings = bits @ np.array([c.saving for c in candidates])
    counts = bits.sum(axis=1)

    feasible = weights <= capacity
    best_count = counts[feasible].max()
    tied = feasible & (counts == best_count)
    best_mask = int(masks[tied][np.argmax(savings[tied])])
    chosen = [candidates[i].user_id for i in range(n) if best_mask >> i & 1]
    return _solution(candidates, base_total, chosen)


def gap(sfa_result, oracle_result: OracleSolution) -> tuple[int, float]:
    """(count gap, overhead gap) of an allocation outcome versus the optimum.

    Both arguments need offloader_count and total_overhead attributes and
    must come from the same instance.
    """
    return (
        oracle_result.offloader_count - sfa_result.offloader_count,
        sfa_result.total_overhead - oracle_result.total_overhead,
    )
