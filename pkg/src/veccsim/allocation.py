"""Per-user resource-block demand: break-even point, deadline point, minimum grant.

Offloading only pays off once the uplink is fast enough. Two thresholds
decide how fast:

* the break-even block count, where the offload overhead drops to exactly
  the local overhead (more blocks -> strictly cheaper than local), and
* the deadline block count, where upload + remote execution exactly meets
  the task deadline.

Both have closed forms because the rate is linear in the block count. The
minimum demand a user may request is the larger of the two, rounded up to
whole blocks and floored at one block. Users for which no finite threshold
exists (offloading never breaks even, or no bandwidth can meet the
deadline, or the demand exceeds the whole system) are classified local-only.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .model import ComputeProfile, ComputeTask, RadioLink, Weights, uplink_rate


class LocalOnlyReason(Enum):
    """Why a user cannot be admitted to offloading at any grant size."""

    NO_FINITE_EQUILIBRIUM = "no_finite_equilibrium"
    REMOTE_INFEASIBLE = "remote_infeasible"
    EXCEEDS_SYSTEM_CAPACITY = "exceeds_system_capacity"


@dataclass(frozen=True)
class DemandResult:
    """Outcome of the minimum-demand computation for one user.

    min_rb is None exactly when the user is local-only, in which case
    local_only_reason says why. The integer fields are ceilings of the raw
    thresholds; raw values are kept for diagnostics and tests.
    """

    equilibrium_rb: int | None
    deadline_rb: int | None
    min_rb: int | None
    local_only_reason: LocalOnlyReason | None
    raw_equilibrium: float | None
    raw_deadline: float | None

    @property
    def offloadable(self) -> bool:
        return self.min_rb is not None


def overhead_margin(task: ComputeTask, profile: ComputeProfile, link: RadioLink, w: Weights) -> float:
    """Weighted cost gap between local execution and the rate-independent part
    of offloading. Positive means offloading wins once the uplink is fast enough."""
    time_saving = task.compute_units / profile.local_speed - task.compute_units / profile.edge_speed
    return (
        w.time_weight * time_saving
        - w.energy_weight * link.tail_energy
        + w.energy_weight * profile.energy_per_unit * task.compute_units
    )


def equilibrium_rb(
    task: ComputeTask, profile: ComputeProfile, link: RadioLink, w: Weights
) -> float | None:
    """Unrounded block count at which offload and local overheads are equal.

    Returns None when no finite break-even point exists (the margin is not
    positive, so offloading never reaches the local overhead at any
    bandwidth). Returns 0.0 for an empty payload with positive margin.
    """
    margin = overhead_margin(task, profile, link, w)
    if margin <= 0:
        return None
    numerator = task.input_bits * (w.energy_weight * link.tx_power + w.time_weight)
    if numerator == 0:
        return 0.0
    return numerator / (uplink_rate(link, 1) * margin)


def deadline_rb(task: ComputeTask, profile: ComputeProfile, link: RadioLink) -> float | None:
    """Unrounded block count at which offload completion time equals the deadline.

    Returns None when even infinite bandwidth cannot meet the deadline
    (remote execution alone already uses the whole time budget).
    """
    transmit_budget = task.deadline_s - task.compute_units / profile.edge_speed
    if transmit_budget <= 0:
        return None
    return task.input_bits / (transmit_budget * uplink_rate(link, 1))


def min_required_rb(
    task: ComputeTask,
    profile: ComputeProfile,
    link: RadioLink,
    w: Weights,
    system_capacity: int,
) -> DemandResult:
    """Minimum whole-block demand for one user, or a local-only classification.

    The demand is max(ceil(break-even), ceil(deadline)) clamped to at least
    one block: an admitted user always occupies bandwidth. Degenerate
    thresholds and demands beyond the system capacity map to local-only.
    """
    if system_capacity < 0:
        raise ValueError(f"system_capacity must be >= 0, got {system_capacity}")
    raw_eq = equilibrium_rb(task, profile, link, w)
    raw_dl = deadline_rb(task, profile, link)
    eq_ceil = None if raw_eq is None else math.ceil(raw_eq)
    dl_ceil = None if raw_dl is None else math.ceil(raw_dl)

    if raw_eq is None:
        reason = LocalOnlyReason.NO_FINITE_EQUILIBRIUM
    elif raw_dl is None:
        reason = LocalOnlyReason.REMOTE_INFEASIBLE
    else:
        min_rb = max(eq_ceil, dl_ceil, 1)
        if min_rb > system_capacity:
            reason = LocalOnlyReason.EXCEEDS_SYSTEM_CAPACITY
        else:
            return DemandResult(eq_ceil, dl_ceil, min_rb, None, raw_eq, raw_dl)
    return DemandResult(eq_ceil, dl_ceil, None, reason, raw_eq, raw_dl)
