"""Canonical CSV/JSON emission for runs, campaigns, and oracle comparisons.

Floats are written with 6 significant digits; field order is fixed; line
endings are LF. Parsing an emitted file and re-serializing it reproduces
the bytes exactly, and identical inputs produce identical files.
"""

import csv
import io
import json
from pathlib import Path

from .harness import CampaignResult, CompareResult, RunMetrics, RunResult

SCHEMA_VERSION = 1


def fmt(value) -> str:
    if isinstance(value, bool):
        raise TypeError("no boolean columns in emitted tables")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format(value, ".6g")
    return str(value)


def round6(value: float) -> float:
    """Float squashed to 6 significant digits (idempotent)."""
    return float(format(float(value), ".6g"))


def _write_csv(path, header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    Path(path).write_text(buf.getvalue())


def read_csv(path) -> tuple[list[str], list[list[str]]]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        return header, [row for row in reader]


def write_json(path, document: dict):
    Path(path).write_text(json.dumps(_squash_floats(document), indent=2) + "\n")


def read_json(path) -> dict:
    return json.loads(Path(path).read_text())


def _squash_floats(node):
    if isinstance(node, float):
        return round6(node)
    if isinstance(node, dict):
        return {k: _squash_floats(v) for k, v in node.items()}
    if isinstance(node, (list, tuple)):
        return [_squash_floats(v) for v in node]
    return node


# --- single run ---

TRACE_HEADER = ["slot", "remaining_rb_before", "requesters", "granted_user", "remaining_rb_after"]


def write_trace_csv(path, trace):
    rows = [
        [
            rec.slot,
            rec.remaining_rb_before,
            ";".join(str(u) for u in rec.requesters),
            "" if rec.granted_user is None else rec.granted_user,
            rec.remaining_rb_after,
        ]
        for rec in trace
    ]
    _write_csv(path, TRACE_HEADER, rows)


def write_offloader_curve_csv(path, result: RunResult):
    """Cumulative admitted-user count per decision slot (slot 0 = none yet)."""
    rows = [[0, 0]]
    count = 0
    for rec in result.sfa.trace:
        if rec.granted_user is not None:
            count += 1
        rows.append([rec.slot, count])
    _write_csv(path, ["slot", "offloading_users"], rows)


def write_per_user_overhead_csv(path, result: RunResult):
    """Each user's current overhead after every slot (local until granted)."""
    current = [b.weighted for b in result.baseline.per_user]
    rows = [[0, uid, val] for uid, val in enumerate(current)]
    for rec in result.sfa.trace:
        if rec.granted_user is not None:
            current[rec.granted_user] = result.final.per_user[rec.granted_user].weighted
        rows.extend([rec.slot, uid, val] for uid, val in enumerate(current))
    _write_csv(path, ["slot", "user_id", "overhead"], rows)


def metrics_document(metrics: RunMetrics) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "offloader_count": metrics.offloader_count,
        "per_type_offloader_counts": {
            str(k): v for k, v in sorted(metrics.per_type_offloader_counts.items())
        },
        "total_overhead_local_baseline": metrics.total_overhead_local_baseline,
        "total_overhead_final": metrics.total_overhead_final,
        "time_sum_baseline": metrics.time_sum_baseline,
        "time_sum_final": metrics.time_sum_final,
        "energy_sum_baseline": metrics.energy_sum_baseline,
        "energy_sum_final": metrics.energy_sum_final,
        "reduction_total_pct": metrics.reduction_total,
        "reduction_time_pct": metrics.reduction_time,
        "reduction_energy_pct": metrics.reduction_energy,
        "deadline_violations": metrics.deadline_violations,
        "slots_used": metrics.slots_used,
    }
    return doc


def write_metrics_json(path, metrics: RunMetrics):
    write_json(path, metrics_document(metrics))


# --- campaign ---

def campaign_trial_header(task_type_count: int) -> list[str]:
    return [
        "trial",
        "offloader_count",
        "slots_used",
        "deadline_violations",
        "total_overhead_local_baseline",
        "total_overhead_final",
        "reduction_total_pct",
        "time_sum_baseline",
        "time_sum_final",
        "reduction_time_pct",
        "energy_sum_baseline",
        "energy_sum_final",
        "reduction_energy_pct",
    ] + [f"offloaders_type_{t}" for t in range(task_type_count)]


def write_campaign_csv(path, campaign: CampaignResult):
    type_count = len(campaign.config.task_catalog)
    rows = []
    for trial, m in enumerate(campaign.metrics):
        rows.append(
            [
                trial,
                m.offloader_count,
                m.slots_used,
                m.deadline_violations,
                m.total_overhead_local_baseline,
                m.total_overhead_final,
                m.reduction_total,
                m.time_sum_baseline,
                m.time_sum_final,
                m.reduction_time,
                m.energy_sum_baseline,
                m.energy_sum_final,
                m.reduction_energy,
            ]
            + [m.per_type_offloader_counts[t] for t in range(type_count)]
        )
    _write_csv(path, campaign_trial_header(type_count), rows)


def _campaign_label(campaign: CampaignResult) -> str:
    if campaign.config.bandwidth_mhz is not None:
        return f"{campaign.config.bandwidth_mhz:g}mhz"
    return f"rb{campaign.config.rb_capacity}"


def campaign_summary_document(campaigns: list[CampaignResult], base_seed: int, trials: int) -> dict:
    settings = {}
    for campaign in campaigns:
        stats = {
            name: {"mean": campaign.mean[name], "std": campaign.std[name]}
            for name in sorted(campaign.mean)
        }
        settings[_campaign_label(campaign)] = {
            "rb_capacity": campaign.config.rb_capacity,
            "user_count": campaign.config.user_count,
            "metrics": stats,
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "trials": trials,
        "base_seed": base_seed,
        "settings": settings,
    }


def write_campaign_summary_json(path, campaigns: list[CampaignResult], base_seed: int, trials: int):
    write_json(path, campaign_summary_document(campaigns, base_seed, trials))


FIG6_HEADER = [
    "setting",
    "rb_capacity",
    "mean_offloaders",
    "mean_reduction_total_pct",
    "mean_reduction_time_pct",
    "mean_reduction_energy_pct",
]


def write_bandwidth_summary_csv(path, campaigns: list[CampaignResult]):
    rows = [
        [
            _campaign_label(c),
            c.config.rb_capacity,
            c.mean["offloader_count"],
            c.mean["reduction_total"],
            c.mean["reduction_time"],
            c.mean["reduction_energy"],
        ]
        for c in campaigns
    ]
    _write_csv(path, FIG6_HEADER, rows)


# --- oracle comparison ---

GAPS_HEADER = [
    "trial",
    "sfa_count",
    "oracle_count",
    "count_gap",
    "sfa_overhead",
    "oracle_overhead",
    "overhead_gap",
]


def write_gaps_csv(path, compare: CompareResult):
    rows = [
        [g.trial, g.sfa_count, g.oracle_count, g.count_gap, g.sfa_overhead, g.oracle_overhead, g.overhead_gap]
        for g in compare.gaps
    ]
    _write_csv(path, GAPS_HEADER, rows)


def compare_summary_document(compare: CompareResult) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "trials": compare.trials,
        "base_seed": compare.base_seed,
        "user_count": compare.config.user_count,
        "rb_capacity": compare.config.rb_capacity,
        "mean_count_gap": compare.mean_count_gap,
        "max_count_gap": compare.max_count_gap,
        "mean_overhead_gap": compare.mean_overhead_gap,
        "max_overhead_gap": compare.max_overhead_gap,
        "optimal_count_fraction": compare.optimal_count_fraction,
    }


def write_compare_summary_json(path, compare: CompareResult):
    write_json(path, compare_summary_document(compare))
