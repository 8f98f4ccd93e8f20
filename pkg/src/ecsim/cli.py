"""Command-line front end: simulate, mttdl-curve, battery, codec."""

from __future__ import annotations

import argparse
import glob
import os
import sys

from .batteries import BATTERIES, run_battery
from .erasure import (
    CodecError,
    PolicyError,
    StoragePolicy,
    decode,
    encode,
    read_header,
    write_stripe,
)
from .mttdl import MarkovParams, mttdl_general
from .reliability import FailureRateQuery, WeibullParams, conditional_failure_rate
from .sim import ConfigError, SimConfig, load_config_file, run_simulation

CURVE_POLICIES = ["replica2", "replica3", "ec3+1", "ec3+2"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecsim",
        description="Erasure-coded cache cluster simulator and reliability toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run one seeded cluster simulation")
    sim.add_argument("--config", help="flat key = value configuration file")
    sim.add_argument("--policy", help="storage policy, e.g. replica2 or ec3+1")
    sim.add_argument("--seed", type=int, help="RNG seed (falls back to $ECSIM_SEED)")
    sim.add_argument("--duration-min", type=float, help="scheduling window in minutes")
    sim.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                     dest="overrides", help="override any configuration key")
    sim.add_argument("--out", help="directory for transfers/caches/vm_counts/summary CSVs")

    curve = sub.add_parser("mttdl-curve",
                           help="age-dependent MTTDL table for one or more policies")
    curve.add_argument("--policy", action="append", dest="policies", metavar="POLICY",
                       help="repeatable; defaults to %s" % ",".join(CURVE_POLICIES))
    curve.add_argument("--max-age-min", type=float, default=150.0)
    curve.add_argument("--age-step-min", type=float, default=1.0)
    curve.add_argument("--check-interval-min", type=float, default=2.0)
    curve.add_argument("--mu", type=float, default=1.0,
                       help="repair rate in check intervals (default one interval)")
    curve.add_argument("--weibull-shape", type=float, default=2.0)
    curve.add_argument("--weibull-scale", type=float, default=50.0)
    curve.add_argument("--out", help="write CSV here instead of stdout")

    battery = sub.add_parser("battery", help="run a canned experiment battery")
    battery.add_argument("name", choices=sorted(BATTERIES))
    battery.add_argument("--seeds", type=int, default=30)
    battery.add_argument("--out", help="directory for the battery's CSV files")

    codec = sub.add_parser("codec", help="encode/decode files with a storage policy")
    codec_sub = codec.add_subparsers(dest="codec_command", required=True)
    enc = codec_sub.add_parser("encode", help="split a file into coded units")
    enc.add_argument("input", help="file to encode")
    enc.add_argument("--policy", required=True)
    enc.add_argument("--out-base", required=True,
                     help="unit files are written as <base>.unit<i> plus <base>.hdr")
    dec = codec_sub.add_parser("decode", help="rebuild a file from surviving units")
    dec.add_argument("base", help="the <base> used at encode time")
    dec.add_argument("--out", required=True, help="where to write the decoded bytes")
    return parser


def _parse_overrides(pairs: list[str]) -> dict[str, str]:
    raw: dict[str, str] = {}
    for pair in pairs:
        if "=" not in pair:
            raise ConfigError(pair, "override must look like key=value")
        key, _, value = pair.partition("=")
        raw[key.strip()] = value.strip()
    return raw


def _assemble_config(args: argparse.Namespace) -> SimConfig:
    cfg = SimConfig()
    if args.config:
        cfg.update(load_config_file(args.config))
    cfg.update(_parse_overrides(args.overrides))
    explicit: dict[str, str] = {}
    if args.policy is not None:
        explicit["policy"] = args.policy
    if args.duration_min is not None:
        explicit["duration_min"] = str(args.duration_min)
    if args.seed is not None:
        explicit["seed"] = str(args.seed)
    elif "seed" not in explicit and os.environ.get("ECSIM_SEED"):
        explicit["seed"] = os.environ["ECSIM_SEED"]
    cfg.update(explicit)
    return cfg


def _cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _assemble_config(args)
    report = run_simulation(cfg)
    if args.out:
        report.write_csvs(args.out)
    print(report.summary_line())
    return 0


def _cmd_mttdl_curve(args: argparse.Namespace) -> int:
    policies = args.policies or list(CURVE_POLICIES)
    parsed = [StoragePolicy.parse(p) for p in policies]
    weibull = WeibullParams(args.weibull_shape, args.weibull_scale)
    lines = ["age_min,policy,lambda,mttdl,data_loss_rate"]
    age = 0.0
    while age <= args.max_age_min + 1e-9:
        for policy in parsed:
            lam = conditional_failure_rate(
                FailureRateQuery(age, args.check_interval_min), weibull)
            result = mttdl_general(
                MarkovParams(policy.n, policy.n - policy.k, lam, args.mu))
            lines.append(
                f"{age:.6f},{policy.label},{lam:.10g},"
                f"{result.mttdl:.10g},{result.data_loss_rate:.10g}"
            )
        age += args.age_step_min
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_battery(args: argparse.Namespace) -> int:
    result = run_battery(args.name, args.out, args.seeds)
    for row in result.get("summary", result["rows"]):
        print(",".join(str(cell) for cell in row))
    return 0


def _cmd_codec(args: argparse.Namespace) -> int:
    if args.codec_command == "encode":
        policy = StoragePolicy.parse(args.policy)
        with open(args.input, "rb") as fh:
            payload = fh.read()
        stripe = encode(payload, policy)
        write_stripe(stripe, args.out_base)
        print(f"{policy.label}: {len(stripe.units)} units of "
              f"{policy.unit_size(len(payload))} bytes at {args.out_base}.unit*")
        return 0
    policy, size = read_header(args.base)
    units: dict[int, bytes] = {}
    for path in sorted(glob.glob(args.base + ".unit*")):
        index = int(path.rsplit("unit", 1)[1])
        with open(path, "rb") as fh:
            units[index] = fh.read()
    data = decode(units, policy, size)
    with open(args.out, "wb") as fh:
        fh.write(data)
    print(f"decoded {len(data)} bytes from {len(units)} units into {args.out}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "mttdl-curve":
            return _cmd_mttdl_curve(args)
        if args.command == "battery":
            return _cmd_battery(args)
        if args.command == "codec":
            return _cmd_codec(args)
    except ConfigError as exc:
        print(f"ecsim: {exc}", file=sys.stderr)
        return 2
    except (PolicyError, CodecError) as exc:
        print(f"ecsim: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"ecsim: {exc}", file=sys.stderr)
        return 1
    parser.error(f"unknown command {args.command!r}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
