"""Execution-cost model for vehicular tasks run locally or offloaded over LTE.

A task can run on the vehicle's own processor (costing compute time and
battery energy) or be shipped over the cellular uplink to an edge server
(costing transmit time + remote compute time, and transmit energy + a tail
energy for holding the channel). Each user scores both options with a
weighted overhead lambda_t * time + lambda_e * energy; the weighted value
deliberately adds seconds and joules with no normalisation.

All quantities are SI: bits, cycles, seconds, joules, watts, hertz.
"""

import math
from dataclasses import dataclass

# One LTE resource block: 12 subcarriers x 15 kHz.
RB_BANDWIDTH_HZ = 180_000.0


@dataclass(frozen=True)
class ComputeTask:
    """One offloadable unit of work.

    input_bits     size of the payload that must be uploaded to offload
    compute_units  total CPU cycles (or equivalent) the task needs
    deadline_s     hard completion deadline in seconds
    """

    input_bits: float
    compute_units: float
    deadline_s: float

    def __post_init__(self):
        if self.input_bits < 0:
            raise ValueError(f"input_bits must be >= 0, got {self.input_bits}")
        if self.compute_units < 0:
            raise ValueError(f"compute_units must be >= 0, got {self.compute_units}")
        if self.deadline_s <= 0:
            raise ValueError(f"deadline_s must be > 0, got {self.deadline_s}")


@dataclass(frozen=True)
class ComputeProfile:
    """Processing capability of one user.

    local_speed      cycles/s on the vehicle's onboard processor
    energy_per_unit  joules consumed per cycle of local work
    edge_speed       cycles/s the edge server dedicates to this user
    """

    local_speed: float
    energy_per_unit: float
    edge_speed: float

    def __post_init__(self):
        if self.local_speed <= 0:
            raise ValueError(f"local_speed must be > 0, got {self.local_speed}")
        if self.edge_speed <= 0:
            raise ValueError(f"edge_speed must be > 0, got {self.edge_speed}")
        if self.energy_per_unit < 0:
            raise ValueError(f"energy_per_unit must be >= 0, got {self.energy_per_unit}")


@dataclass(frozen=True)
class Weights:
    """Per-user priority split between latency and energy; must sum to 1."""

    time_weight: float
    energy_weight: float

    def __post_init__(self):
        if not (0.0 <= self.time_weight <= 1.0 and 0.0 <= self.energy_weight <= 1.0):
            raise ValueError(f"weights must lie in [0, 1], got {self}")
        if self.time_weight + self.energy_weight != 1.0:
            raise ValueError(f"weights must sum to exactly 1, got {self}")


@dataclass(frozen=True)
class RadioLink:
    """Uplink radio parameters of one user towards the base station.

    tx_power      transmit power in watts
    channel_gain  linear power gain |H|^2 (dimensionless)
    noise_power   white-noise power in watts
    carriers      carrier-aggregation multiplier on the per-RB rate
    rb_bandwidth  bandwidth of a single resource block in Hz
    tail_energy   joules spent holding the channel after the upload ends
    """

    tx_power: float
    channel_gain: float
    noise_power: float
    carriers: int
    rb_bandwidth: float = RB_BANDWIDTH_HZ
    tail_energy: float = 0.0

    def __post_init__(self):
        for name in ("tx_power", "channel_gain", "noise_power", "rb_bandwidth"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")
        if self.carriers < 1:
            raise ValueError(f"carriers must be >= 1, got {self.carriers}")
        if self.tail_energy < 0:
            raise ValueError(f"tail_energy must be >= 0, got {self.tail_energy}")

    @property
    def snr(self) -> float:
        return self.tx_power * self.channel_gain / self.noise_power


@dataclass(frozen=True)
class OverheadBreakdown:
    """Cost of running a task one way: wall time, energy, and the weighted mix."""

    time_s: float
    energy_j: float
    weighted: float


def local_overhead(task: ComputeTask, profile: ComputeProfile, w: Weights) -> OverheadBreakdown:
    """Cost of executing the task on the vehicle itself."""
    time_s = task.compute_units / profile.local_speed
    energy_j = profile.energy_per_unit * task.compute_units
    weighted = w.time_weight * time_s + w.energy_weight * energy_j
    return OverheadBreakdown(time_s, energy_j, weighted)


def uplink_rate(link: RadioLink, rb_count: int) -> float:
    """Shannon-capacity uplink rate in bits/s over `rb_count` resource blocks.

    Linear in rb_count; zero blocks means zero rate.
    """
    if rb_count < 0:
        raise ValueError(f"rb_count must be >= 0, got {rb_count}")
    bandwidth = rb_count * link.rb_bandwidth
    return link.carriers * bandwidth * math.log2(1.0 + link.snr)


def offload_overhead(
    task: ComputeTask,
    profile: ComputeProfile,
    link: RadioLink,
    w: Weights,
    rb_count: int,
) -> OverheadBreakdown:
    """Cost of uploading the task and executing it on the edge server.

    Time is upload plus remote execution; energy is transmit energy plus the
    channel-holding tail. The full payload travels uplink; the result download
    is not modelled. Undefined for rb_count = 0, which encodes the local choice.
    """
    if rb_count < 1:
        raise ValueError("offloading requires at least one resource block")
    rate = uplink_rate(link, rb_count)
    time_s = task.input_bits / rate + task.compute_units / profile.edge_speed
    energy_j = task.input_bits * link.tx_power / rate + link.tail_energy
    weighted = w.time_weight * time_s + w.energy_weight * energy_j
    return OverheadBreakdown(time_s, energy_j, weighted)
