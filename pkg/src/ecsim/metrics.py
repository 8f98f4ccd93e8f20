"""Run report: transfer ledger, cache outcomes and derived statistics."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

# transfer categories
WRITE = "write"
RECOVERY = "recovery"
PROACTIVE = "proactive"

# cache outcomes
SUCCEEDED = "succeeded"
LOST = "lost"


@dataclass
class TransferRecord:
    time_min: float
    bytes: int
    seconds: float
    category: str
    src_domain: str
    dst_domain: str


@dataclass
class CacheRecord:
    cache_id: int
    policy: str
    outcome: str  # succeeded | lost
    created_min: float
    ended_min: float


@dataclass
class SimReport:
    policy: str
    seed: int
    config: dict = field(default_factory=dict)
    transfers: list[TransferRecord] = field(default_factory=list)
    caches: list[CacheRecord] = field(default_factory=list)
    vm_counts: list[tuple[float, str, int]] = field(default_factory=list)
    temp_failures: int = 0
    skipped_schedules: int = 0
    promotions: int = 0
    relocations: int = 0
    cap_fallbacks: int = 0
    stored_units_per_cache: float = 0.0
    stored_bytes_per_cache: float = 0.0

    # --- aggregates ---------------------------------------------------------

    def bytes_in(self, category: str) -> int:
        return sum(t.bytes for t in self.transfers if t.category == category)

    @property
    def total_bytes(self) -> int:
        return sum(t.bytes for t in self.transfers)

    @property
    def total_seconds(self) -> float:
        return sum(t.seconds for t in self.transfers)

    @property
    def created(self) -> int:
        return len(self.caches)

    def count(self, outcome: str) -> int:
        return sum(1 for c in self.caches if c.outcome == outcome)

    def summary_line(self) -> str:
        return ",".join(
            str(v)
            for v in (
                self.policy,
                self.created,
                self.count(SUCCEEDED),
                self.count(LOST),
                self.temp_failures,
                self.bytes_in(WRITE),
                self.bytes_in(RECOVERY),
                self.bytes_in(PROACTIVE),
                f"{self.total_seconds:.6f}",
            )
        )

    # --- csv ----------------------------------------------------------------

    def write_csvs(self, out_dir: str, prefix: str = "") -> list[str]:
        import os

        os.makedirs(out_dir, exist_ok=True)
        paths = []

        def path(name: str) -> str:
            p = os.path.join(out_dir, prefix + name)
            paths.append(p)
            return p

        with open(path("transfers.csv"), "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["time_min", "bytes", "seconds", "category", "src_domain", "dst_domain"])
            for t in self.transfers:
                w.writerow(
                    [f"{t.time_min:.6f}", t.bytes, f"{t.seconds:.6f}", t.category, t.src_domain, t.dst_domain]
                )
        with open(path("caches.csv"), "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["id", "policy", "outcome", "created_min", "ended_min"])
            for c in self.caches:
                w.writerow([c.cache_id, c.policy, c.outcome, f"{c.created_min:.6f}", f"{c.ended_min:.6f}"])
        with open(path("vm_counts.csv"), "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["window_start_min", "domain", "unit_count"])
            for when, domain, count in self.vm_counts:
                w.writerow([f"{when:.6f}", domain, count])
        with open(path("summary.csv"), "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(
                [
                    "policy", "caches", "succeeded", "lost", "temp_failures",
                    "bytes_write", "bytes_recovery", "bytes_proactive", "transfer_seconds",
                ]
            )
            w.writerow(self.summary_line().split(","))
        return paths


# --- derived statistics ------------------------------------------------------

def recovery_portion(report: SimReport) -> float | None:
    """Recovery bytes over total bytes; None when nothing moved at all."""
    total = report.total_bytes
    if total == 0:
        return None
    return report.bytes_in(RECOVERY) / total


def vm_variance(report: SimReport) -> float:
    """Time-averaged population variance of per-domain unit arrivals.

    Stored units are grouped into sampling windows by the time they landed;
    each window contributes the variance across domains of its unit counts,
    and the mean over windows measures how unevenly placement concentrates
    load.  Balanced placement (one unit per domain) scores zero; a stripe
    packed into a single domain scores the maximum for its size.
    """
    by_window: dict[float, list[int]] = {}
    for when, _domain, count in report.vm_counts:
        by_window.setdefault(when, []).append(count)
    variances = []
    for counts in by_window.values():
        m = sum(counts) / len(counts)
        variances.append(sum((c - m) ** 2 for c in counts) / len(counts))
    if not variances:
        return 0.0
    return sum(variances) / len(variances)


def lifetime_cdf(reports: list[SimReport], horizon_min: float = 90.0) -> list[tuple[float, float]]:
    """Cumulative fraction of caches lost by age, censored at the horizon.

    Returns (age, fraction_lost_by_age) steps over all caches in the given
    runs; caches alive at the horizon count in the denominator only.
    """
    ages = []
    total = 0
    for rep in reports:
        for c in rep.caches:
            total += 1
            if c.outcome == LOST and (c.ended_min - c.created_min) <= horizon_min:
                ages.append(c.ended_min - c.created_min)
    if total == 0:
        return []
    ages.sort()
    return [(age, (i + 1) / total) for i, age in enumerate(ages)]


def loss_fraction(reports: list[SimReport], horizon_min: float = 90.0) -> float:
    """Fraction of caches lost within horizon_min of their creation."""
    total = lost = 0
    for rep in reports:
        for c in rep.caches:
            total += 1
            if c.outcome == LOST and (c.ended_min - c.created_min) <= horizon_min:
                lost += 1
    return lost / total if total else 0.0


def storage_cost(report: SimReport) -> tuple[float, float]:
    """(mean units per cache, mean bytes stored per cache)."""
    return report.stored_units_per_cache, report.stored_bytes_per_cache
