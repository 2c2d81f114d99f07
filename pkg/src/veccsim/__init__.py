"""Deterministic simulator for vehicular edge-cloud offloading.

Core pieces: the execution-cost model (local vs offloaded overheads), the
closed-form per-user minimum block demand, the stochastic fair allocator,
an exact reference optimizer, scenario generation, and experiment drivers.
"""

from .allocation import DemandResult, LocalOnlyReason, deadline_rb, equilibrium_rb, min_required_rb
from .harness import RunMetrics, run_campaign, run_oracle_compare, run_single
from .model import (
    ComputeProfile,
    ComputeTask,
    OverheadBreakdown,
    RB_BANDWIDTH_HZ,
    RadioLink,
    Weights,
    local_overhead,
    offload_overhead,
    uplink_rate,
)
from .oracle import OracleSolution, gap, solve_by_enumeration, solve_exact
from .scenario import ScenarioConfig, default_table1_config, generate_users, load_config
from .sfa import SfaRun, agent_decide, controller_step, run_sfa

__version__ = "0.1.0"

__all__ = [
    "ComputeTask",
    "ComputeProfile",
    "Weights",
    "RadioLink",
    "OverheadBreakdown",
    "RB_BANDWIDTH_HZ",
    "local_overhead",
    "uplink_rate",
    "offload_overhead",
    "DemandResult",
    "LocalOnlyReason",
    "equilibrium_rb",
    "deadline_rb",
    "min_required_rb",
    "SfaRun",
    "agent_decide",
    "controller_step",
    "run_sfa",
    "OracleSolution",
    "solve_exact",
    "solve_by_enumeration",
    "gap",
    "ScenarioConfig",
    "default_table1_config",
    "generate_users",
    "load_config",
    "RunMetrics",
    "run_single",
    "run_campaign",
    "run_oracle_compare",
    "__version__",
]
