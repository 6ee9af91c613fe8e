"""Command-line entry point.

Verbs:
  run       execute the Monte Carlo experiment and write summary.csv
            (plus per-node CSV and field SVGs on request)
  sweep     write the energy-vs-hop-count grid CSV
  validate  check a config file and exit

Exit codes: 0 success, 1 config validation/parse error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .experiment import ConfigError, ExperimentConfig, config_from_dict, load_config, run_experiment
from .report import write_energy_sweep_csv, write_field_svg, write_pernode_csv, write_summary_csv

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_IO = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grlsim", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run the localization experiment")
    run_p.add_argument("--config", type=Path, help="JSON config file (defaults apply if omitted)")
    run_p.add_argument("--seed", type=int, help="override master_seed")
    run_p.add_argument("--trials", type=int, help="override trial count")
    run_p.add_argument("--out-dir", type=Path, default=Path("results"), help="output directory")
    run_p.add_argument("--plot", action="store_true", help="write a field SVG per algorithm (trial 0)")
    run_p.add_argument("--per-node", action="store_true", help="also write per-node detail CSV")

    sweep_p = sub.add_parser("sweep", help="write energy-vs-hops sweep data")
    sweep_p.add_argument("--config", type=Path, help="JSON config file (for energy parameters)")
    sweep_p.add_argument("--n", type=int, default=10, help="anchors involved per localization")
    sweep_p.add_argument("--h-max", type=int, default=6, help="sweep hop counts 1..h-max")
    sweep_p.add_argument("--out-dir", type=Path, default=Path("results"), help="output directory")

    val_p = sub.add_parser("validate", help="validate a config file")
    val_p.add_argument("--config", type=Path, required=True)
    return parser


def _load(config_path: Path | None, seed: int | None = None, trials: int | None = None) -> ExperimentConfig:
    if config_path is not None:
        config = load_config(config_path)
    else:
        config = ExperimentConfig()
    overrides = {}
    if seed is not None:
        overrides["master_seed"] = seed
    if trials is not None:
        overrides["trials"] = trials
    if overrides:
        merged = config.to_dict()
        merged.update(overrides)
        config = config_from_dict(merged)
    return config


def _cmd_run(args) -> int:
    config = _load(args.config, args.seed, args.trials)
    bundle = run_experiment(config)
    out: Path = args.out_dir
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "effective_config.json", "w", encoding="utf-8") as fh:
        json.dump(config.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    write_summary_csv(bundle, out / "summary.csv")
    written = ["effective_config.json", "summary.csv"]
    if args.per_node:
        write_pernode_csv(bundle, out / "per_node.csv")
        written.append("per_node.csv")
    if args.plot:
        for d in bundle.details:
            if d.trial_index == 0:
                name = f"field_{d.algorithm}.svg"
                write_field_svg(d, out / name)
                written.append(name)
    print(f"wrote {', '.join(written)} to {out}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    config = _load(args.config)
    out: Path = args.out_dir
    out.mkdir(parents=True, exist_ok=True)
    write_energy_sweep_csv(config.energy, out / "energy_sweep.csv",
                           h_values=range(1, args.h_max + 1), n=args.n,
                           algorithms=sorted(config.algorithms))
    print(f"wrote energy_sweep.csv to {out}")
    return EXIT_OK


def _cmd_validate(args) -> int:
    load_config(args.config)
    print(f"{args.config}: OK")
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"run": _cmd_run, "sweep": _cmd_sweep, "validate": _cmd_validate}
    try:
        return handlers[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
