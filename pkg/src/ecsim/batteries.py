"""Canned experiment batteries over the simulator.

Each battery sweeps policies and seeds, aggregates the per-run reports,
and optionally writes CSV files. Batteries are deterministic: the same
seeds produce byte-identical CSV output on every run.
"""

from __future__ import annotations

import csv
import os

from . import metrics
from .metrics import PROACTIVE, RECOVERY, WRITE
from .sim import MIB, SimConfig, run_simulation

AVAILABILITY_POLICIES = ("replica1", "replica2", "ec2+1", "ec3+1", "ec3+2")
NETWORK_POLICIES = ("replica2", "ec2+1", "ec3+1", "ec3+2")
LOCALIZATION_PCTS = (25, 50, 75, 100)
PROACTIVE_THRESHOLD = 60.0


def _config(policy: str, seed: int, **overrides) -> SimConfig:
    cfg = SimConfig(policy=policy, seed=seed)
    for key, value in overrides.items():
        setattr(cfg, key, value)
    cfg.validate()
    return cfg


def _write_csv(out_dir: str | None, name: str, header: list[str], rows: list[list]) -> str | None:
    if out_dir is None:
        return None
    os.makedirs(out_dir, exist_ok=True)
    path = os.path.join(out_dir, name)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)
    return path


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def storage_battery(out_dir: str | None = None, seeds: int = 1) -> dict:
    """Redundancy check with failures pushed past the horizon: stored bytes
    per cache must match each policy's stretch factor exactly."""
    rows = []
    for policy in AVAILABILITY_POLICIES:
        cfg = _config(policy, seed=1, duration_min=30.0, weibull_scale=1e9)
        report = run_simulation(cfg)
        units, nbytes = metrics.storage_cost(report)
        redundancy = nbytes / cfg.cache_size_bytes if nbytes else 0.0
        rows.append([policy, report.created, _fmt(units), _fmt(nbytes), _fmt(redundancy)])
    path = _write_csv(out_dir, "storage.csv",
                      ["policy", "caches", "units_per_cache", "bytes_per_cache", "redundancy"],
                      rows)
    return {"rows": rows, "files": [p for p in [path] if p]}


def availability_battery(out_dir: str | None = None, seeds: int = 30) -> dict:
    """Loss fractions per policy over many seeded runs."""
    run_rows = []
    summary_rows = []
    by_policy: dict[str, list] = {}
    for policy in AVAILABILITY_POLICIES:
        reports = []
        for seed in range(1, seeds + 1):
            report = run_simulation(_config(policy, seed))
            reports.append(report)
            run_rows.append([
                policy, seed, report.created,
                report.count(metrics.SUCCEEDED), report.count(metrics.LOST),
                report.temp_failures,
            ])
        by_policy[policy] = reports
        created = sum(r.created for r in reports)
        lost = sum(r.count(metrics.LOST) for r in reports)
        summary_rows.append([
            policy, len(reports), created, lost,
            _fmt(metrics.loss_fraction(reports)),
        ])
    paths = [
        _write_csv(out_dir, "availability_runs.csv",
                   ["policy", "seed", "caches", "succeeded", "lost", "temp_failures"],
                   run_rows),
        _write_csv(out_dir, "availability.csv",
                   ["policy", "runs", "caches", "lost", "loss_fraction"],
                   summary_rows),
    ]
    return {
        "rows": run_rows,
        "summary": summary_rows,
        "reports": by_policy,
        "files": [p for p in paths if p],
    }


def network_battery(out_dir: str | None = None, seeds: int = 30) -> dict:
    """Write vs recovery traffic per policy."""
    run_rows = []
    summary_rows = []
    by_policy: dict[str, list] = {}
    for policy in NETWORK_POLICIES:
        reports = []
        for seed in range(1, seeds + 1):
            report = run_simulation(_config(policy, seed))
            reports.append(report)
            portion = metrics.recovery_portion(report)
            run_rows.append([
                policy, seed, report.created,
                report.bytes_in(WRITE), report.bytes_in(RECOVERY),
                _fmt(portion if portion is not None else 0.0),
            ])
        by_policy[policy] = reports
        created = sum(r.created for r in reports)
        write_b = sum(r.bytes_in(WRITE) for r in reports)
        rec_b = sum(r.bytes_in(RECOVERY) for r in reports)
        total = write_b + rec_b
        summary_rows.append([
            policy, created,
            _fmt(write_b / MIB / created if created else 0.0),
            _fmt(rec_b / MIB / created if created else 0.0),
            _fmt(rec_b / total if total else 0.0),
        ])
    paths = [
        _write_csv(out_dir, "network_runs.csv",
                   ["policy", "seed", "caches", "bytes_write", "bytes_recovery", "recovery_portion"],
                   run_rows),
        _write_csv(out_dir, "network.csv",
                   ["policy", "caches", "write_mb_per_cache", "recovery_mb_per_cache", "recovery_portion"],
                   summary_rows),
    ]
    return {
        "rows": run_rows,
        "summary": summary_rows,
        "reports": by_policy,
        "files": [p for p in paths if p],
    }


def proactive_battery(out_dir: str | None = None, seeds: int = 30) -> dict:
    """Paired runs (same seed) of long-lease caches with relocation on/off."""
    run_rows = []
    by_mode: dict[str, list] = {"off": [], "on": []}
    for seed in range(1, seeds + 1):
        for mode, threshold in (("off", 0.0), ("on", PROACTIVE_THRESHOLD)):
            # long leases keep standby copies alive next to the data units,
            # so these runs need a deeper pool per VM than the defaults
            cfg = _config("ec3+1", seed, duration_min=50.0, lease_min=100.0,
                          cacheds_per_vm=4, proactive_threshold=threshold)
            report = run_simulation(cfg)
            by_mode[mode].append(report)
            run_rows.append([
                seed, mode, report.created, report.count(metrics.LOST),
                report.bytes_in(WRITE), report.bytes_in(RECOVERY),
                report.bytes_in(PROACTIVE), report.relocations,
                _fmt(report.total_seconds),
            ])
    summary_rows = []
    for mode in ("off", "on"):
        reports = by_mode[mode]
        created = sum(r.created for r in reports)
        summary_rows.append([
            mode, created,
            sum(r.count(metrics.LOST) for r in reports),
            sum(r.bytes_in(WRITE) for r in reports),
            sum(r.bytes_in(RECOVERY) for r in reports),
            sum(r.bytes_in(PROACTIVE) for r in reports),
            sum(r.relocations for r in reports),
        ])
    paths = [
        _write_csv(out_dir, "proactive_runs.csv",
                   ["seed", "mode", "caches", "lost", "bytes_write", "bytes_recovery",
                    "bytes_proactive", "relocations", "transfer_seconds"],
                   run_rows),
        _write_csv(out_dir, "proactive.csv",
                   ["mode", "caches", "lost", "bytes_write", "bytes_recovery",
                    "bytes_proactive", "relocations"],
                   summary_rows),
    ]
    return {
        "rows": run_rows,
        "summary": summary_rows,
        "reports": by_mode,
        "files": [p for p in paths if p],
    }


def localization_battery(out_dir: str | None = None, seeds: int = 30) -> dict:
    """Transfer time and per-domain concentration across locality caps."""
    run_rows = []
    summary_rows = []
    by_pct: dict[int, list] = {}
    for pct in LOCALIZATION_PCTS:
        reports = []
        for seed in range(1, seeds + 1):
            report = run_simulation(_config("ec3+1", seed, localization_pct=pct))
            reports.append(report)
            run_rows.append([
                pct, seed, report.created,
                _fmt(report.total_seconds),
                _fmt(metrics.vm_variance(report)),
                report.cap_fallbacks,
            ])
        by_pct[pct] = reports
        created = sum(r.created for r in reports)
        seconds = sum(r.total_seconds for r in reports)
        variance = sum(metrics.vm_variance(r) for r in reports) / len(reports)
        summary_rows.append([
            pct, created,
            _fmt(seconds / created if created else 0.0),
            _fmt(variance),
            sum(r.cap_fallbacks for r in reports),
        ])
    paths = [
        _write_csv(out_dir, "localization_runs.csv",
                   ["pct", "seed", "caches", "transfer_seconds", "vm_variance", "cap_fallbacks"],
                   run_rows),
        _write_csv(out_dir, "localization.csv",
                   ["pct", "caches", "seconds_per_cache", "vm_variance", "cap_fallbacks"],
                   summary_rows),
    ]
    return {
        "rows": run_rows,
        "summary": summary_rows,
        "reports": by_pct,
        "files": [p for p in paths if p],
    }


BATTERIES = {
    "storage": storage_battery,
    "availability": availability_battery,
    "network": network_battery,
    "proactive": proactive_battery,
    "localization": localization_battery,
}


def run_battery(name: str, out_dir: str | None = None, seeds: int = 30) -> dict:
    if name not in BATTERIES:
        known = ", ".join(sorted(BATTERIES))
        raise ValueError(f"unknown battery {name!r} (choose from: {known})")
    return BATTERIES[name](out_dir, seeds)
