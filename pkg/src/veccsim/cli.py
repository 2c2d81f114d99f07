"""Command-line front end: run, campaign, compare, validate-config."""

import argparse
import sys
from pathlib import Path

from . import reporting
from .errors import ConfigError, PreconditionError
from .harness import run_campaign, run_oracle_compare, run_single
from .oracle import DEFAULT_USER_BOUND
from .scenario import (
    RB_CAPACITY_BY_BANDWIDTH_MHZ,
    default_table1_config,
    load_config,
    with_bandwidth,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_PRECONDITION = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veccsim",
        description="Vehicular edge-cloud offloading simulator with stochastic fair allocation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", type=Path, default=None, help="scenario JSON (default: stock 20 MHz setting)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", type=Path, default=Path("out"))

    p_run = sub.add_parser("run", help="one traced simulation")
    common(p_run)

    p_campaign = sub.add_parser("campaign", help="batch of seeded trials with aggregates")
    common(p_campaign)
    p_campaign.add_argument("--trials", type=int, default=100)
    p_campaign.add_argument("--bandwidth", choices=["10", "15", "20", "all"], default=None)

    p_compare = sub.add_parser("compare", help="allocator versus exact optimum per trial")
    common(p_compare)
    p_compare.add_argument("--trials", type=int, default=100)
    p_compare.add_argument("--bandwidth", choices=["10", "15", "20", "all"], default=None)
    p_compare.add_argument("--oracle-bound", type=int, default=DEFAULT_USER_BOUND)

    p_validate = sub.add_parser("validate-config", help="check a scenario JSON and exit")
    p_validate.add_argument("--config", type=Path, required=True)
    return parser


def _base_config(args):
    if args.config is not None:
        return load_config(args.config)
    return default_table1_config(20)


def _configs_for(args):
    """(label, config) per requested setting; --bandwidth overrides the config's."""
    config = _base_config(args)
    choice = args.bandwidth
    if choice is None:
        choice = "all" if args.config is None else "asis"
    if choice == "asis":
        label = (
            f"{config.bandwidth_mhz:g}mhz"
            if config.bandwidth_mhz is not None
            else f"rb{config.rb_capacity}"
        )
        return [(label, config)]
    bandwidths = sorted(RB_CAPACITY_BY_BANDWIDTH_MHZ) if choice == "all" else [int(choice)]
    return [(f"{bw}mhz", with_bandwidth(config, bw)) for bw in bandwidths]


def _cmd_run(args) -> int:
    config = _base_config(args)
    result = run_single(config, args.seed)
    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    reporting.write_metrics_json(out / "run_metrics.json", result.metrics)
    reporting.write_trace_csv(out / "trace.csv", result.sfa.trace)
    reporting.write_offloader_curve_csv(out / "fig2_offloaders.csv", result)
    reporting.write_per_user_overhead_csv(out / "fig4_per_user_overhead.csv", result)
    m = result.metrics
    print(
        f"run: {m.offloader_count}/{config.user_count} users offloading, "
        f"overhead {m.total_overhead_local_baseline:.6g} -> {m.total_overhead_final:.6g} "
        f"({m.reduction_total:.2f}% reduction), {m.slots_used} slots"
    )
    print(f"wrote {out}/run_metrics.json, trace.csv, fig2_offloaders.csv, fig4_per_user_overhead.csv")
    return EXIT_OK


def _cmd_campaign(args) -> int:
    if args.trials < 1:
        raise PreconditionError(f"--trials must be >= 1, got {args.trials}")
    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    campaigns = []
    for label, config in _configs_for(args):
        campaign = run_campaign(config, args.trials, args.seed)
        campaigns.append(campaign)
        reporting.write_campaign_csv(out / f"campaign_{label}_trials.csv", campaign)
        print(
            f"campaign {label}: mean offloaders {campaign.mean['offloader_count']:.2f}, "
            f"mean reductions total {campaign.mean['reduction_total']:.2f}% / "
            f"time {campaign.mean['reduction_time']:.2f}% / "
            f"energy {campaign.mean['reduction_energy']:.2f}%"
        )
    reporting.write_campaign_summary_json(out / "campaign_summary.json", campaigns, args.seed, args.trials)
    reporting.write_bandwidth_summary_csv(out / "fig6_summary.csv", campaigns)
    print(f"wrote {out}/campaign_summary.json, fig6_summary.csv")
    return EXIT_OK


def _cmd_compare(args) -> int:
    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    for label, config in _configs_for(args):
        compare = run_oracle_compare(config, args.trials, args.seed, user_bound=args.oracle_bound)
        reporting.write_gaps_csv(out / f"compare_{label}_gaps.csv", compare)
        reporting.write_compare_summary_json(out / f"compare_{label}_summary.json", compare)
        print(
            f"compare {label}: optimal-count fraction {compare.optimal_count_fraction:.3f}, "
            f"max count gap {compare.max_count_gap}, "
            f"mean overhead gap {compare.mean_overhead_gap:.6g}"
        )
    return EXIT_OK


def _cmd_validate(args) -> int:
    config = load_config(args.config)
    setting = (
        f"{config.bandwidth_mhz:g} MHz ({config.rb_capacity} RB)"
        if config.bandwidth_mhz is not None
        else f"{config.rb_capacity} RB"
    )
    print(
        f"config ok: {config.user_count} users, {setting}, "
        f"{len(config.task_catalog)} task types, radius {config.cell_radius_m:g} m"
    )
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "run": _cmd_run,
        "campaign": _cmd_campaign,
        "compare": _cmd_compare,
        "validate-config": _cmd_validate,
    }
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
