"""Stochastic fair allocation between one grant controller and vehicle agents.

The engine is slot-synchronous. One decision slot:

1. the controller publishes its remaining block count,
2. every still-requesting agent re-evaluates: it sends a buffer state
   report for its fixed minimum demand if that demand still fits, and
   withdraws otherwise (permanently - capacity only ever shrinks),
3. the controller picks exactly one report uniformly at random and grants
   the requested amount.

Grants are always exactly the requester's minimum demand, never partial,
never surplus. The run ends when nobody is requesting any more: either
every candidate was granted, or the last candidates withdrew in a final
no-grant slot (which is still traced).

All randomness comes from a single seeded generator owned by the
controller, and reports are canonicalized by user id before sampling, so a
run is a pure function of (users, capacity, seed).
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .allocation import DemandResult, min_required_rb
from .errors import ProtocolViolation


@dataclass(frozen=True)
class AvailabilityQuery:
    user_id: int


@dataclass(frozen=True)
class AvailabilityResponse:
    remaining_rb: int


@dataclass(frozen=True)
class BufferStateReport:
    user_id: int
    demand_rb: int


@dataclass(frozen=True)
class UplinkGrant:
    user_id: int
    granted_rb: int


class AgentAction(Enum):
    SEND_BSR = "send_bsr"
    STAY_LOCAL = "stay_local"
    WITHDRAW = "withdraw"


class AgentPhase(Enum):
    LOCAL_ONLY = "local_only"
    REQUESTING = "requesting"
    GRANTED = "granted"
    WITHDRAWN = "withdrawn"


@dataclass
class AgentState:
    user_id: int
    demand: DemandResult
    phase: AgentPhase
    granted_rb: int = 0


@dataclass(frozen=True)
class TraceRecord:
    """Accounting for one decision slot."""

    slot: int
    remaining_rb_before: int
    requesters: tuple[int, ...]
    granted_user: int | None
    remaining_rb_after: int


@dataclass
class ControllerState:
    """Mutable book-keeping of the grant controller."""

    capacity: int
    remaining_rb: int
    slot: int
    granted: dict[int, int] = field(default_factory=dict)
    rng: np.random.Generator = None

    @classmethod
    def create(cls, capacity: int, seed) -> "ControllerState":
        if capacity < 0:
            raise ValueError(f"capacity must be >= 0, got {capacity}")
        return cls(capacity, capacity, 0, {}, np.random.default_rng(seed))


def agent_decide(demand: DemandResult, remaining_rb: int) -> AgentAction:
    """One agent's reaction to the published remaining capacity."""
    if not demand.offloadable:
        return AgentAction.STAY_LOCAL
    if remaining_rb >= demand.min_rb:
        return AgentAction.SEND_BSR
    return AgentAction.WITHDRAW


def controller_step(
    state: ControllerState, reports: Sequence[BufferStateReport]
) -> tuple[ControllerState, UplinkGrant | None, TraceRecord]:
    """Run one controller slot over the received reports.

    Grants one uniformly random report (if any) its full demand. A report
    whose demand exceeds the remaining capacity is an agent-side bug: agents
    are required to self-filter before sending.
    """
    reports = sorted(reports, key=lambda r: r.user_id)
    for report in reports:
        if report.demand_rb > state.remaining_rb:
            raise ProtocolViolation(
                f"user {report.user_id} requested {report.demand_rb} RB "
                f"with only {state.remaining_rb} remaining"
            )
    before = state.remaining_rb
    state.slot += 1
    grant = None
    if reports:
        chosen = reports[int(state.rng.integers(len(reports)))]
        grant = UplinkGrant(chosen.user_id, chosen.demand_rb)
        state.remaining_rb -= chosen.demand_rb
        state.granted[chosen.user_id] = chosen.demand_rb
    record = TraceRecord(
        slot=state.slot,
        remaining_rb_before=before,
        requesters=tuple(r.user_id for r in reports),
        granted_user=None if grant is None else grant.user_id,
        remaining_rb_after=state.remaining_rb,
    )
    return state, grant, record


@dataclass(frozen=True)
class SfaRun:
    """Result of a full allocation run."""

    capacity: int
    assignment: tuple[int, ...]
    demands: tuple[DemandResult, ...]
    phases: tuple[AgentPhase, ...]
    trace: tuple[TraceRecord, ...]
    remaining_rb: int

    @property
    def offloader_count(self) -> int:
        return sum(1 for a in self.assignment if a > 0)

    @property
    def slots_used(self) -> int:
        return len(self.trace)


def run_sfa(users: Sequence[tuple], capacity: int, seed) -> SfaRun:
    """Allocate blocks among `users` = [(task, profile, link, weights), ...].

    Deterministic for a fixed seed. Each user ends with either its exact
    minimum demand or nothing.
    """
    if not users:
        raise ValueError("run_sfa needs at least one user")
    state = ControllerState.create(capacity, seed)

    agents = []
    for user_id, (task, profile, link, weights) in enumerate(users):
        demand = min_required_rb(task, profile, link, weights, system_capacity=capacity)
        phase = AgentPhase.REQUESTING if demand.offloadable else AgentPhase.LOCAL_ONLY
        agents.append(AgentState(user_id, demand, phase))

    trace: list[TraceRecord] = []
    while True:
        active = [a for a in agents if a.phase is AgentPhase.REQUESTING]
        if not active:
            break
        reports = []
        for agent in active:
            if agent_decide(agent.demand, state.remaining_rb) is AgentAction.SEND_BSR:
                reports.append(BufferStateReport(agent.user_id, agent.demand.min_rb))
            else:
                agent.phase = AgentPhase.WITHDRAWN
        _, grant, record = controller_step(state, reports)
        trace.append(record)
        if grant is not None:
            winner = agents[grant.user_id]
            winner.phase = AgentPhase.GRANTED
            winner.granted_rb = grant.granted_rb
        else:
            break  # everyone left withdrew; capacity can only shrink, so stop

    return SfaRun(
        capacity=capacity,
        assignment=tuple(a.granted_rb for a in agents),
        demands=tuple(a.demand for a in agents),
        phases=tuple(a.phase for a in agents),
        trace=tuple(trace),
        remaining_rb=state.remaining_rb,
    )
