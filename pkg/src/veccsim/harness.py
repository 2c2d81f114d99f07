"""Experiment drivers: single traced runs, campaigns, and optimality comparison.

Seeds derive from one base seed through numpy SeedSequence spawn keys:
trial t of a campaign uses SeedSequence(base_seed, spawn_key=(t,)), and a
single run splits its sequence into (user draws, controller draws). Every
emitted number is a pure function of (config, trials, base_seed).
"""

import math
from dataclasses import dataclass, fields
from typing import Sequence

import numpy as np

from .errors import PreconditionError
from .model import OverheadBreakdown, local_overhead, offload_overhead
from .oracle import DEFAULT_USER_BOUND, OracleSolution, gap, solve_exact
from .scenario import GeneratedUser, ScenarioConfig, generate_users
from .sfa import SfaRun, run_sfa


@dataclass(frozen=True)
class AssignmentOutcome:
    """System-wide cost of one complete local/offload assignment."""

    offloader_count: int
    total_overhead: float
    time_sum: float
    energy_sum: float
    deadline_violations: int
    capacity_used: int
    per_user: tuple[OverheadBreakdown, ...]


@dataclass(frozen=True)
class RunMetrics:
    """Summary of one simulated run against its all-local baseline."""

    offloader_count: int
    per_type_offloader_counts: dict[int, int]
    total_overhead_local_baseline: float
    total_overhead_final: float
    time_sum_baseline: float
    time_sum_final: float
    energy_sum_baseline: float
    energy_sum_final: float
    reduction_total: float
    reduction_time: float
    reduction_energy: float
    deadline_violations: int
    slots_used: int


@dataclass(frozen=True)
class RunResult:
    config: ScenarioConfig
    users: tuple[GeneratedUser, ...]
    sfa: SfaRun
    baseline: AssignmentOutcome
    final: AssignmentOutcome
    metrics: RunMetrics


def evaluate_assignment(
    users: Sequence[GeneratedUser], assignment: Sequence[int]
) -> AssignmentOutcome:
    """Score an assignment: a_i = 0 runs locally, a_i > 0 offloads over a_i blocks."""
    per_user = []
    violations = 0
    for user, rb in zip(users, assignment):
        if rb > 0:
            cost = offload_overhead(user.task, user.profile, user.link, user.weights, rb)
        else:
            cost = local_overhead(user.task, user.profile, user.weights)
        if cost.time_s > user.task.deadline_s:
            violations += 1
        per_user.append(cost)
    return AssignmentOutcome(
        offloader_count=sum(1 for rb in assignment if rb > 0),
        total_overhead=sum(c.weighted for c in per_user),
        time_sum=sum(c.time_s for c in per_user),
        energy_sum=sum(c.energy_j for c in per_user),
        deadline_violations=violations,
        capacity_used=sum(assignment),
        per_user=tuple(per_user),
    )


def _reduction_pct(baseline: float, final: float) -> float:
    if baseline == 0:
        return 0.0
    return 100.0 * (baseline - final) / baseline


def _seed_sequence(seed) -> np.random.SeedSequence:
    if isinstance(seed, np.random.SeedSequence):
        return seed
    return np.random.SeedSequence(seed)


def run_single(config: ScenarioConfig, seed) -> RunResult:
    """Generate one population, allocate, and score the outcome."""
    users_seed, controller_seed = _seed_sequence(seed).spawn(2)
    users = generate_users(config, users_seed)
    sfa = run_sfa([u.as_inputs() for u in users], config.rb_capacity, controller_seed)

    baseline = evaluate_assignment(users, [0] * len(users))
    final = evaluate_assignment(users, sfa.assignment)

    per_type = {t: 0 for t in range(len(config.task_catalog))}
    for user, rb in zip(users, sfa.assignment):
        if rb > 0:
            per_type[user.task_type] += 1

    metrics = RunMetrics(
        offloader_count=final.offloader_count,
        per_type_offloader_counts=per_type,
        total_overhead_local_baseline=baseline.total_overhead,
        total_overhead_final=final.total_overhead,
        time_sum_baseline=baseline.time_sum,
        time_sum_final=final.time_sum,
        energy_sum_baseline=baseline.energy_sum,
        energy_sum_final=final.energy_sum,
        reduction_total=_reduction_pct(baseline.total_overhead, final.total_overhead),
        reduction_time=_reduction_pct(baseline.time_sum, final.time_sum),
        reduction_energy=_reduction_pct(baseline.energy_sum, final.energy_sum),
        deadline_violations=final.deadline_violations,
        slots_used=sfa.slots_used,
    )
    return RunResult(config, tuple(users), sfa, baseline, final, metrics)


def trial_seed(base_seed: int, trial: int) -> np.random.SeedSequence:
    """Seed for trial `trial` of a campaign; random-access, so trials can run in parallel."""
    return np.random.SeedSequence(base_seed, spawn_key=(trial,))


_SCALAR_METRIC_FIELDS = tuple(
    f.name for f in fields(RunMetrics) if f.name != "per_type_offloader_counts"
)


@dataclass(frozen=True)
class CampaignResult:
    config: ScenarioConfig
    trials: int
    base_seed: int
    metrics: tuple[RunMetrics, ...]
    mean: dict[str, float]
    std: dict[str, float]


def summarize_metrics(metrics: Sequence[RunMetrics]) -> tuple[dict[str, float], dict[str, float]]:
    """Population mean and std of every metric field, per-type counts included."""
    mean: dict[str, float] = {}
    std: dict[str, float] = {}
    for name in _SCALAR_METRIC_FIELDS:
        values = np.array([getattr(m, name) for m in metrics], dtype=float)
        mean[name] = float(values.mean())
        std[name] = float(values.std())
    for task_type in sorted(metrics[0].per_type_offloader_counts):
        values = np.array(
            [m.per_type_offloader_counts[task_type] for m in metrics], dtype=float
        )
        key = f"offloaders_type_{task_type}"
        mean[key] = float(values.mean())
        std[key] = float(values.std())
    return mean, std


def run_campaign(config: ScenarioConfig, trials: int, base_seed: int) -> CampaignResult:
    """`trials` independent seeded runs of one scenario, with aggregates."""
    if trials < 1:
        raise PreconditionError(f"trials must be >= 1, got {trials}")
    metrics = [run_single(config, trial_seed(base_seed, t)).metrics for t in range(trials)]
    mean, std = summarize_metrics(metrics)
    return CampaignResult(config, trials, base_seed, tuple(metrics), mean, std)


@dataclass(frozen=True)
class TrialGap:
    trial: int
    sfa_count: int
    oracle_count: int
    count_gap: int
    sfa_overhead: float
    oracle_overhead: float
    overhead_gap: float


@dataclass(frozen=True)
class CompareResult:
    config: ScenarioConfig
    trials: int
    base_seed: int
    gaps: tuple[TrialGap, ...]
    mean_count_gap: float
    max_count_gap: int
    mean_overhead_gap: float
    max_overhead_gap: float
    optimal_count_fraction: float


def run_oracle_compare(
    config: ScenarioConfig,
    trials: int,
    base_seed: int,
    *,
    user_bound: int = DEFAULT_USER_BOUND,
) -> CompareResult:
    """Per trial, solve the same instance exactly and with the allocator."""
    if trials < 1:
        raise PreconditionError(f"trials must be >= 1, got {trials}")
    if config.user_count > user_bound:
        raise PreconditionError(
            f"user_count {config.user_count} exceeds the exact-solver bound {user_bound}; "
            "lower user_count or raise the bound"
        )
    rows = []
    for t in range(trials):
        users_seed, controller_seed = trial_seed(base_seed, t).spawn(2)
        users = generate_users(config, users_seed)
        inputs = [u.as_inputs() for u in users]
        sfa = run_sfa(inputs, config.rb_capacity, controller_seed)
        outcome = evaluate_assignment(users, sfa.assignment)
        exact: OracleSolution = solve_exact(inputs, config.rb_capacity, user_bound=user_bound)
        count_gap, overhead_gap = gap(outcome, exact)
        rows.append(
            TrialGap(
                trial=t,
                sfa_count=outcome.offloader_count,
                oracle_count=exact.offloader_count,
                count_gap=count_gap,
                sfa_overhead=outcome.total_overhead,
                oracle_overhead=exact.total_overhead,
                overhead_gap=overhead_gap,
            )
        )
    count_gaps = [r.count_gap for r in rows]
    overhead_gaps = [r.overhead_gap for r in rows]
    return CompareResult(
        config=config,
        trials=trials,
        base_seed=base_seed,
        gaps=tuple(rows),
        mean_count_gap=float(np.mean(count_gaps)),
        max_count_gap=int(max(count_gaps)),
        mean_overhead_gap=float(np.mean(overhead_gaps)),
        max_overhead_gap=float(max(overhead_gaps)),
        optimal_count_fraction=float(np.mean([g == 0 for g in count_gaps])),
    )
