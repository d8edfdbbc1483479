"""Command-line entry point.

Subcommands:
  topology   write the super/regular node layout CSV plus the backbone edge list
  analytic   closed-form one-parameter sweep (long-format CSV, two rows per point)
  simulate   closed-form plus Monte Carlo sweep (same schema, sim columns filled)
  figure     canned experiments fig4..fig11 (wide-format CSV)

Every key accepted in config files is also a command-line flag (highest
precedence).  Output is byte-reproducible for a fixed seed.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict

from .config import KEY_SPECS, ConfigError, RunConfig, load_config
from .experiments import FIGURE_NAMES, figure_experiment, fmt, topology_experiment
from .montecarlo import METRICS_COLUMNS, run_experiment


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="flat key=value config file")
    parser.add_argument("--out", help="output CSV path")
    for key, (typ, default, _, desc) in KEY_SPECS.items():
        parser.add_argument(f"--{key}", type=typ, default=None, help=f"{desc} (default {default})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="switchsim", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_topo = sub.add_parser("topology", help="write node layout and backbone edge list")
    _add_common(p_topo)

    p_ana = sub.add_parser("analytic", help="closed-form sweep over one config key")
    _add_common(p_ana)
    p_ana.add_argument("--param", required=True, help="config key to sweep")
    p_ana.add_argument("--values", required=True, help="comma-separated sweep values")

    p_sim = sub.add_parser("simulate", help="Monte Carlo sweep over one config key")
    _add_common(p_sim)
    p_sim.add_argument("--param", required=True, help="config key to sweep")
    p_sim.add_argument("--values", required=True, help="comma-separated sweep values")

    p_fig = sub.add_parser("figure", help="run a canned experiment")
    _add_common(p_fig)
    p_fig.add_argument("name", choices=FIGURE_NAMES, help="which canned experiment")

    return parser


def _config_from_args(args) -> RunConfig:
    overrides = {key: getattr(args, key) for key in KEY_SPECS if getattr(args, key, None) is not None}
    return load_config(path=args.config, overrides=overrides, out_path=args.out)


def _write_records(path, records) -> None:
    with open(path, "w") as fh:
        fh.write(",".join(METRICS_COLUMNS) + "\n")
        for rec in records:
            row = asdict(rec)
            fh.write(",".join(fmt(row[c]) for c in METRICS_COLUMNS) + "\n")


def _sweep_grid(config, param: str, raw_values: str) -> list[dict]:
    if param not in KEY_SPECS:
        raise ConfigError(f"unknown sweep parameter '{param}'")
    typ = KEY_SPECS[param][0]
    try:
        values = [typ(v) for v in raw_values.split(",") if v.strip()]
    except ValueError as exc:
        raise ConfigError(f"sweep values for '{param}': {exc}") from exc
    if not values:
        raise ConfigError(f"no sweep values given for '{param}'")
    return [{param: v} for v in values]


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.command == "topology":
            out = args.out or "topology.csv"
            nodes_path, edges_path = topology_experiment(config, out)
            print(f"wrote {nodes_path} and {edges_path}")
        elif args.command in ("analytic", "simulate"):
            grid = _sweep_grid(config, args.param, args.values)
            trials = config.trials if args.command == "simulate" else 0
            records = run_experiment(config, grid, trials=trials)
            out = args.out or f"{args.command}_{args.param}.csv"
            _write_records(out, records)
            print(f"wrote {out}")
        else:
            out = args.out or f"{args.name}.csv"
            path = figure_experiment(args.name, config, out, trials=getattr(args, "trials", None))
            print(f"wrote {path}")
    except (ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
