"""Experiment instance generation: cell geometry, task catalog, per-user draws.

Users are dropped uniformly over a disk around the base station; the
channel gain follows a pure power-law path loss on the (clamped) distance.
Task, local processor speed, and cost weights are drawn independently and
uniformly from finite catalogs. Given a config and a seed, the generated
population is fully deterministic.

Configs load from JSON in the customary experiment-table units (kB,
Megacycles, GHz, mW, dBm) and are converted to SI at ingestion.
"""

import json
import math
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from . import units
from .errors import ConfigError
from .model import ComputeProfile, ComputeTask, RadioLink, Weights

RB_CAPACITY_BY_BANDWIDTH_MHZ = {10: 50, 15: 75, 20: 100}

# (input kB, Megacycles, deadline s) per task type; index-paired so the
# heaviest task is exactly deadline-feasible on the fastest local processor.
DEFAULT_TASK_CATALOG = (
    (1000.0, 100.0, 0.2),
    (2000.0, 300.0, 0.6),
    (5000.0, 1000.0, 1.0),
    (10000.0, 2000.0, 2.0),
)
DEFAULT_LOCAL_SPEEDS_GHZ = (0.5, 0.8, 1.0)
DEFAULT_EDGE_SPEED_GHZ = 10.0
DEFAULT_ENERGY_PER_MEGACYCLE_J = 0.0025
DEFAULT_WEIGHT_CHOICES = ((0.0, 1.0), (0.5, 0.5), (1.0, 0.0))


@dataclass(frozen=True)
class ScenarioConfig:
    """One experiment setting, all fields in SI units."""

    cell_radius_m: float = 50.0
    user_count: int = 30
    bandwidth_mhz: float | None = None
    rb_capacity: int = 100
    carriers: int = 5
    tx_power_w: float = 0.1
    noise_w: float = 1e-13
    path_loss_exponent: float = 2.0
    min_distance_m: float = 1.0
    task_catalog: tuple[ComputeTask, ...] = ()
    local_speed_choices: tuple[float, ...] = ()
    energy_per_unit: float = units.joule_per_megacycle_to_per_cycle(DEFAULT_ENERGY_PER_MEGACYCLE_J)
    edge_speed: float = units.ghz_to_hz(DEFAULT_EDGE_SPEED_GHZ)
    tail_energy_j: float = 0.0
    weight_choices: tuple[Weights, ...] = ()
    seed: int | None = None

    def __post_init__(self):
        if self.cell_radius_m <= 0:
            raise ConfigError(f"cell_radius_m must be > 0, got {self.cell_radius_m}")
        if self.user_count < 1:
            raise ConfigError(f"user_count must be >= 1, got {self.user_count}")
        if self.rb_capacity < 1:
            raise ConfigError(f"rb_capacity must be >= 1, got {self.rb_capacity}")
        if self.bandwidth_mhz is not None:
            expected = RB_CAPACITY_BY_BANDWIDTH_MHZ.get(self.bandwidth_mhz)
            if expected is None:
                raise ConfigError(
                    f"bandwidth_mhz must be one of {sorted(RB_CAPACITY_BY_BANDWIDTH_MHZ)}, "
                    f"got {self.bandwidth_mhz}"
                )
            if self.rb_capacity != expected:
                raise ConfigError(
                    f"{self.bandwidth_mhz} MHz carries {expected} resource blocks, "
                    f"got rb_capacity={self.rb_capacity}"
                )
        if self.carriers < 1:
            raise ConfigError(f"carriers must be >= 1, got {self.carriers}")
        for name in ("tx_power_w", "noise_w", "path_loss_exponent", "min_distance_m"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be > 0, got {getattr(self, name)}")
        if self.tail_energy_j < 0:
            raise ConfigError(f"tail_energy_j must be >= 0, got {self.tail_energy_j}")
        if not self.task_catalog:
            raise ConfigError("task_catalog must not be empty")
        if not self.local_speed_choices:
            raise ConfigError("local_speed_choices must not be empty")
        if any(s <= 0 for s in self.local_speed_choices):
            raise ConfigError("local_speed_choices must all be > 0")
        if self.edge_speed <= 0:
            raise ConfigError(f"edge_speed must be > 0, got {self.edge_speed}")
        if self.energy_per_unit < 0:
            raise ConfigError(f"energy_per_unit must be >= 0, got {self.energy_per_unit}")
        if not self.weight_choices:
            raise ConfigError("weight_choices must not be empty")


@dataclass(frozen=True)
class GeneratedUser:
    user_id: int
    x_m: float
    y_m: float
    distance_m: float
    task_type: int
    task: ComputeTask
    profile: ComputeProfile
    link: RadioLink
    weights: Weights

    def as_inputs(self) -> tuple[ComputeTask, ComputeProfile, RadioLink, Weights]:
        return (self.task, self.profile, self.link, self.weights)


def default_table1_config(bandwidth_mhz: int) -> ScenarioConfig:
    """The stock experiment setting for one of the three LTE bandwidths."""
    if bandwidth_mhz not in RB_CAPACITY_BY_BANDWIDTH_MHZ:
        raise ConfigError(
            f"bandwidth_mhz must be one of {sorted(RB_CAPACITY_BY_BANDWIDTH_MHZ)}, "
            f"got {bandwidth_mhz}"
        )
    tasks = tuple(
        ComputeTask(units.kb_to_bits(kb), units.megacycles_to_cycles(mc), deadline)
        for kb, mc, deadline in DEFAULT_TASK_CATALOG
    )
    return ScenarioConfig(
        bandwidth_mhz=bandwidth_mhz,
        rb_capacity=RB_CAPACITY_BY_BANDWIDTH_MHZ[bandwidth_mhz],
        task_catalog=tasks,
        local_speed_choices=tuple(units.ghz_to_hz(g) for g in DEFAULT_LOCAL_SPEEDS_GHZ),
        weight_choices=tuple(Weights(t, e) for t, e in DEFAULT_WEIGHT_CHOICES),
    )


def generate_users(config: ScenarioConfig, seed) -> list[GeneratedUser]:
    """Draw the full user population for one run; deterministic given seed."""
    rng = np.random.default_rng(seed)
    users = []
    for user_id in range(config.user_count):
        # radial coordinate proportional to sqrt(u) for area uniformity
        radius = config.cell_radius_m * math.sqrt(rng.random())
        angle = 2.0 * math.pi * rng.random()
        x, y = radius * math.cos(angle), radius * math.sin(angle)
        distance = max(radius, config.min_distance_m)
        gain = distance ** (-config.path_loss_exponent)

        task_type = int(rng.integers(len(config.task_catalog)))
        local_speed = config.local_speed_choices[int(rng.integers(len(config.local_speed_choices)))]
        weights = config.weight_choices[int(rng.integers(len(config.weight_choices)))]

        users.append(
            GeneratedUser(
                user_id=user_id,
                x_m=x,
                y_m=y,
                distance_m=distance,
                task_type=task_type,
                task=config.task_catalog[task_type],
                profile=ComputeProfile(local_speed, config.energy_per_unit, config.edge_speed),
                link=RadioLink(
                    tx_power=config.tx_power_w,
                    channel_gain=gain,
                    noise_power=config.noise_w,
                    carriers=config.carriers,
                    tail_energy=config.tail_energy_j,
                ),
                weights=weights,
            )
        )
    return users


_FILE_KEYS = {
    "cell_radius_m",
    "user_count",
    "bandwidth_mhz",
    "rb_capacity",
    "carriers",
    "tx_power_mw",
    "noise_dbm",
    "path_loss_exponent",
    "min_distance_m",
    "task_catalog",
    "local_speed_ghz",
    "energy_per_megacycle_j",
    "edge_speed_ghz",
    "tail_energy_j",
    "weight_choices",
    "seed",
}


def config_from_dict(doc: dict) -> ScenarioConfig:
    """Build a ScenarioConfig from a JSON document in experiment-table units."""
    if not isinstance(doc, dict):
        raise ConfigError("config document must be a JSON object")
    unknown = set(doc) - _FILE_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")

    bandwidth = doc.get("bandwidth_mhz")
    rb_capacity = doc.get("rb_capacity")
    if bandwidth is None and rb_capacity is None:
        raise ConfigError("config needs bandwidth_mhz or rb_capacity")
    if rb_capacity is None:
        if bandwidth not in RB_CAPACITY_BY_BANDWIDTH_MHZ:
            raise ConfigError(
                f"bandwidth_mhz must be one of {sorted(RB_CAPACITY_BY_BANDWIDTH_MHZ)}, "
                f"got {bandwidth}"
            )
        rb_capacity = RB_CAPACITY_BY_BANDWIDTH_MHZ[bandwidth]

    try:
        catalog_doc = doc.get("task_catalog")
        if catalog_doc is None:
            catalog_doc = [
                {"input_kb": kb, "megacycles": mc, "deadline_s": d}
                for kb, mc, d in DEFAULT_TASK_CATALOG
            ]
        tasks = tuple(
            ComputeTask(
                units.kb_to_bits(entry["input_kb"]),
                units.megacycles_to_cycles(entry["megacycles"]),
                entry["deadline_s"],
            )
            for entry in catalog_doc
        )
        weight_doc = doc.get("weight_choices", DEFAULT_WEIGHT_CHOICES)
        weight_choices = tuple(Weights(t, e) for t, e in weight_doc)
    except ConfigError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"invalid config entry: {exc}") from exc

    speeds = doc.get("local_speed_ghz", DEFAULT_LOCAL_SPEEDS_GHZ)
    return ScenarioConfig(
        cell_radius_m=doc.get("cell_radius_m", 50.0),
        user_count=doc.get("user_count", 30),
        bandwidth_mhz=bandwidth,
        rb_capacity=rb_capacity,
        carriers=doc.get("carriers", 5),
        tx_power_w=units.mw_to_w(doc.get("tx_power_mw", 100.0)),
        noise_w=units.dbm_to_w(doc.get("noise_dbm", -100.0)),
        path_loss_exponent=doc.get("path_loss_exponent", 2.0),
        min_distance_m=doc.get("min_distance_m", 1.0),
        task_catalog=tasks,
        local_speed_choices=tuple(units.ghz_to_hz(g) for g in speeds),
        energy_per_unit=units.joule_per_megacycle_to_per_cycle(
            doc.get("energy_per_megacycle_j", DEFAULT_ENERGY_PER_MEGACYCLE_J)
        ),
        edge_speed=units.ghz_to_hz(doc.get("edge_speed_ghz", DEFAULT_EDGE_SPEED_GHZ)),
        tail_energy_j=doc.get("tail_energy_j", 0.0),
        weight_choices=weight_choices,
        seed=doc.get("seed"),
    )


def load_config(path) -> ScenarioConfig:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    return config_from_dict(doc)


def with_bandwidth(config: ScenarioConfig, bandwidth_mhz: int) -> ScenarioConfig:
    """Same scenario at a different LTE bandwidth (capacity follows the table)."""
    if bandwidth_mhz not in RB_CAPACITY_BY_BANDWIDTH_MHZ:
        raise ConfigError(f"unsupported bandwidth {bandwidth_mhz} MHz")
    return replace(
        config,
        bandwidth_mhz=bandwidth_mhz,
        rb_capacity=RB_CAPACITY_BY_BANDWIDTH_MHZ[bandwidth_mhz],
    )
