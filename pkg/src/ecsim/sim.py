"""Discrete-event cluster simulator for short-lived erasure-coded caches.

One event loop drives everything: daemon deaths (sampled Weibull lifetimes),
replacement spawns on the check grid, per-cache availability checks every
check interval, lease expiries, client schedules, and transfer bookkeeping.
Failures take effect the moment a daemon dies but caches only observe them
at their next availability check, so two units lost inside one check window
can sink a stripe that would otherwise have been repaired.

Each client task runs on a pilot daemon spawned for it; that pilot manages
the task's cache, holds one unit locally, and exits with the cache.  Without
relocation the manager is a single point of failure — its death strands the
cluster metadata and the cache with it.  With relocation enabled, age-risky
holders get their units copied ahead to spares, the metadata travels with
the copies, and a surviving holder can take over a dead manager's role.

Everything is driven by a single seeded RNG plus a deterministic event
order (time, event priority, insertion sequence), so a seed fully fixes a
run, byte for byte.
"""

from __future__ import annotations

import heapq
import math
import random
from dataclasses import dataclass, fields

from .erasure import PolicyError, StoragePolicy
from .metrics import (
    LOST,
    PROACTIVE,
    RECOVERY,
    SUCCEEDED,
    WRITE,
    CacheRecord,
    SimReport,
    TransferRecord,
)
from .placement import (
    DomainBucket,
    InsufficientClusterError,
    LocalizationPolicy,
    ProactivePolicy,
    proactive_scan,
    recovery_path_select,
    write_path_select,
)
from .reliability import WeibullParams, sample_lifetime

MIB = 1024 * 1024

# daemon states
ALIVE = "alive"
DOWN = "down"
FLAGGED = "proactive"  # vulnerable, excluded from placement, still serving

# event priorities: deaths before spawns before checks; schedules after
# adjudications; transfer bookkeeping last
_P_DEATH, _P_SPAWN, _P_CHECK, _P_LEASE, _P_SCHEDULE, _P_TRANSFER = range(6)

_SAMPLE_STEP_MIN = 0.5  # unit arrivals are grouped into 30 s windows


class ConfigError(ValueError):
    def __init__(self, key: str, message: str):
        super().__init__(f"config key '{key}': {message}")
        self.key = key


@dataclass
class SimConfig:
    policy: str = "ec3+1"
    duration_min: float = 120.0
    schedule_interval_s: float = 30.0
    cache_size_bytes: int = MIB
    lease_min: float = 10.0
    check_interval_min: float = 2.0
    weibull_shape: float = 2.0
    weibull_scale: float = 50.0
    vm_count: int = 4
    cacheds_per_vm: int = 3
    localization_pct: int = 0  # 0 disables localization
    proactive_threshold: float = 0.0  # 0 disables proactive relocation
    remote_s_per_mib: float = 1.0
    local_time_ratio: float = 0.3
    warmup_min: float = 0.0  # optional pre-run churn; 0 = cold start at t=0
    seed: int = 0

    def validate(self) -> None:
        try:
            StoragePolicy.parse(self.policy)
        except PolicyError as exc:
            raise ConfigError("policy", str(exc)) from exc
        positive = (
            "duration_min", "schedule_interval_s", "cache_size_bytes",
            "lease_min", "check_interval_min", "weibull_shape",
            "weibull_scale", "remote_s_per_mib",
        )
        for name in positive:
            if getattr(self, name) <= 0:
                raise ConfigError(name, "must be positive")
        for name in ("vm_count", "cacheds_per_vm"):
            if getattr(self, name) < 1:
                raise ConfigError(name, "must be >= 1")
        if self.localization_pct not in (0, 25, 50, 75, 100):
            raise ConfigError("localization_pct", "must be 0 (off), 25, 50, 75 or 100")
        if self.proactive_threshold < 0:
            raise ConfigError("proactive_threshold", "must be >= 0 (0 disables)")
        if not 0 < self.local_time_ratio <= 1:
            raise ConfigError("local_time_ratio", "must be in (0, 1]")
        if self.warmup_min < 0:
            raise ConfigError("warmup_min", "must be >= 0")

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in fields(cls)]

    @classmethod
    def from_mapping(cls, raw: dict[str, str]) -> "SimConfig":
        """Build a config from string key/value pairs (file or CLI)."""
        cfg = cls()
        cfg.update(raw)
        return cfg

    def update(self, raw: dict[str, str]) -> None:
        types = {f.name: f.type for f in fields(self)}
        for key, value in raw.items():
            if key not in types:
                raise ConfigError(key, "unknown configuration key")
            kind = types[key]
            try:
                if kind == "int":
                    parsed: object = int(value)
                elif kind == "float":
                    parsed = float(value)
                else:
                    parsed = str(value)
            except ValueError as exc:
                raise ConfigError(key, f"cannot parse {value!r} as {kind}") from exc
            setattr(self, key, parsed)
        self.validate()


def load_config_file(path: str) -> dict[str, str]:
    """Flat `key = value` lines; '#' starts a comment; blank lines skipped."""
    raw: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.split("#", 1)[0].strip()
            if not text:
                continue
            if "=" not in text:
                raise ConfigError(text.split()[0], f"line {lineno} is not 'key = value'")
            key, _, value = text.partition("=")
            raw[key.strip()] = value.strip()
    return raw


class CacheD:
    """One cache daemon: a mortal byte bucket pinned to a network domain.

    Daemons come in two flavours: standing workers that serve every cache on
    the cluster, and pilots — task-scoped daemons spawned for one client task
    that manage that task's cache and exit with it.  Pilots never appear in
    placement pools.
    """

    __slots__ = ("id", "domain", "boot", "death", "state", "stored", "pilot",
                 "skey")

    def __init__(self, cid: int, domain: str, boot: float, death: float,
                 pilot: bool = False, skey: float = 0.0):
        self.id = cid
        self.domain = domain
        self.boot = boot
        self.death = death
        self.state = ALIVE
        self.stored: set[tuple[int, int]] = set()  # (cache_id, unit_index)
        self.pilot = pilot
        # position in the manager registry's scan order: hash-bucketed
        # registries return workers in an order unrelated to their age
        self.skey = skey

    def age(self, now: float) -> float:
        return now - self.boot


class Cache:
    """A scheduled cache: manager + unit placements + lease bookkeeping."""

    __slots__ = (
        "id", "policy", "created", "lease_expiry", "manager", "pilot",
        "placements", "standby", "covered", "terminal", "handled",
        "unit_size",
    )

    def __init__(self, cache_id: int, policy: StoragePolicy, created: float,
                 lease_expiry: float, unit_size: int):
        self.id = cache_id
        self.policy = policy
        self.created = created
        self.lease_expiry = lease_expiry
        self.manager: int = -1
        self.pilot: int = -1  # the task-scoped daemon this cache began on
        self.placements: dict[int, int] = {}  # unit -> serving cached id
        self.standby: dict[int, int] = {}  # unit -> spare copy holder
        self.covered: set[int] = set()  # units the relocation protocol backs
        self.terminal: str | None = None
        self.handled: set[int] = set()  # daemons already copied away from
        self.unit_size = unit_size


class Simulation:
    def __init__(self, config: SimConfig):
        config.validate()
        self.cfg = config
        self.policy = StoragePolicy.parse(config.policy)
        self.weibull = WeibullParams(config.weibull_shape, config.weibull_scale)
        self.loc = (
            LocalizationPolicy(config.localization_pct)
            if config.localization_pct
            else None
        )
        self.proactive = (
            ProactivePolicy(config.proactive_threshold, config.check_interval_min)
            if config.proactive_threshold
            else None
        )
        self.rng = random.Random(config.seed)
        self.heap: list = []
        self.seq = 0
        self.cacheds: dict[int, CacheD] = {}
        self.caches: dict[int, Cache] = {}
        self.domains = [f"vm{i + 1}" for i in range(config.vm_count)]
        # unit arrivals per (sampling window, domain): how many units each
        # domain received in each 30 s slice, the concentration signal the
        # per-VM variance metric is built from
        self.window_units: dict[tuple[int, str], int] = {}
        self.next_cached_id = 1
        self.next_cache_id = 1
        self.report = SimReport(
            policy=self.policy.label,
            seed=config.seed,
            config={f.name: getattr(config, f.name) for f in fields(config)},
        )

    # --- event plumbing ----------------------------------------------------

    def _push(self, when: float, prio: int, kind: str, payload) -> None:
        heapq.heappush(self.heap, (when, prio, self.seq, kind, payload))
        self.seq += 1

    def _transfer(self, now: float, nbytes: int, src: str, dst: str, category: str) -> None:
        ratio = self.cfg.local_time_ratio if src == dst else 1.0
        seconds = nbytes / MIB * self.cfg.remote_s_per_mib * ratio
        rec = TransferRecord(now, nbytes, seconds, category, src, dst)
        self._push(now, _P_TRANSFER, "transfer", rec)

    # --- daemon lifecycle ----------------------------------------------------

    def _spawn(self, domain: str, boot: float, pilot: bool = False) -> CacheD:
        cid = self.next_cached_id
        self.next_cached_id += 1
        death = boot + sample_lifetime(self.weibull, self.rng)
        # the scan key comes from its own generator so the main event stream
        # is identical whether or not anything ever reads the key
        skey = random.Random(f"{self.cfg.seed}:{cid}").random()
        daemon = CacheD(cid, domain, boot, death, pilot, skey)
        self.cacheds[cid] = daemon
        self._push(death, _P_DEATH, "death", cid)
        return daemon

    def _next_tick(self, t: float) -> float:
        step = self.cfg.check_interval_min
        return math.ceil(t / step - 1e-9) * step

    def _on_death(self, now: float, cid: int) -> None:
        daemon = self.cacheds[cid]
        if daemon.state == DOWN:
            return  # a pilot that already exited with its cache
        daemon.state = DOWN
        daemon.stored.clear()
        if daemon.pilot:
            return  # task-scoped daemons are not replaced
        # replacement appears at the next check tick, keeping the population flat
        self._push(self._next_tick(now), _P_SPAWN, "spawn", daemon.domain)

    # --- unit bookkeeping ----------------------------------------------------

    def _count_arrival(self, when: float, domain: str) -> None:
        key = (int((when + 1e-9) / _SAMPLE_STEP_MIN), domain)
        self.window_units[key] = self.window_units.get(key, 0) + 1

    def _place(self, cache: Cache, unit: int, cid: int, now: float) -> None:
        cache.placements[unit] = cid
        self.cacheds[cid].stored.add((cache.id, unit))
        self._count_arrival(now, self.cacheds[cid].domain)

    def _drop_copy(self, cache: Cache, unit: int, cid: int) -> None:
        daemon = self.cacheds[cid]
        daemon.stored.discard((cache.id, unit))

    def _release_cache(self, cache: Cache) -> None:
        for unit, cid in cache.placements.items():
            self._drop_copy(cache, unit, cid)
        for unit, sid in cache.standby.items():
            self._drop_copy(cache, unit, sid)
        pilot = self.cacheds[cache.pilot]
        if pilot.state != DOWN:
            pilot.state = DOWN  # the task-scoped daemon exits with its cache

    def _alive_units(self, cache: Cache) -> set[int]:
        alive = set()
        for unit, cid in cache.placements.items():
            if self.cacheds[cid].state != DOWN:
                alive.add(unit)
            else:
                spare = cache.standby.get(unit)
                if spare is not None and self.cacheds[spare].state != DOWN:
                    alive.add(unit)
        return alive

    def _holders_of(self, cache: Cache) -> set[int]:
        return set(cache.placements.values()) | set(cache.standby.values())

    def _buckets(
        self,
        exclude: set[int],
        order: str,
        spread_from: str | None = None,
    ) -> list[DomainBucket]:
        """Free daemons grouped for the placement selectors.

        order="newest" walks ids descending — fresh daemons have the most
        free capacity, so they head the write availability list.
        order="oldest" walks ids ascending — the registration order a
        manager's worker registry is scanned in when it re-homes lost units
        (recovery targets).  order="idle" walks the least-loaded daemons
        first (newest breaking ties) — spare copies spread over the cluster
        instead of piling onto whichever daemon spawned last.
        order="scan" walks the registry's own scan order: domain-bucketed
        selection takes whatever slice of the registry a bucket holds, so
        its picks within a domain carry no age preference at all.

        With localization disabled, ``spread_from`` interleaves the pool
        round-robin over the domains, starting after the named one: write
        placement spreads units across failure domains by default, and the
        manager's domain already carries a unit so it fills last.
        """
        candidates = [
            cid for cid in sorted(self.cacheds, reverse=(order == "newest"))
            if self.cacheds[cid].state == ALIVE
            and not self.cacheds[cid].pilot
            and cid not in exclude
        ]
        if order == "idle":
            candidates.sort(key=lambda cid: (len(self.cacheds[cid].stored), -cid))
        elif order == "scan":
            candidates.sort(key=lambda cid: (self.cacheds[cid].skey, cid))
        if self.loc is None:
            if spread_from is not None:
                doms = sorted(self.domains)
                start = (doms.index(spread_from) + 1) % len(doms)
                rotation = doms[start:] + doms[:start]
                per = {d: [] for d in doms}
                for cid in candidates:
                    per[self.cacheds[cid].domain].append(cid)
                flat: list[int] = []
                for i in range(max(map(len, per.values()), default=0)):
                    for d in rotation:
                        if i < len(per[d]):
                            flat.append(per[d][i])
                candidates = flat
            return [DomainBucket("", [str(c) for c in candidates])]
        by_domain: dict[str, list[int]] = {d: [] for d in self.domains}
        for cid in candidates:
            by_domain[self.cacheds[cid].domain].append(cid)
        return [DomainBucket(d, [str(c) for c in by_domain[d]]) for d in sorted(by_domain)]

    def _occupancy(self, cache: Cache, skip_units: set[int]) -> dict[str, int]:
        occ: dict[str, int] = {}
        for unit, cid in cache.placements.items():
            daemon = self.cacheds[cid]
            if unit not in skip_units and daemon.state != DOWN:
                occ[daemon.domain] = occ.get(daemon.domain, 0) + 1
        return occ

    # --- event handlers ------------------------------------------------------

    def _on_schedule(self, now: float) -> None:
        n = self.policy.n
        domain = self.domains[self.rng.randrange(len(self.domains))]
        order = "scan" if self.loc else "newest"
        buckets = self._buckets(exclude=set(), order=order, spread_from=domain)
        try:
            selection = write_path_select(
                buckets,
                n - 1,
                self.loc,
                preassigned={domain: 1} if self.loc else None,
            )
        except InsufficientClusterError:
            self.report.skipped_schedules += 1
            return
        if selection.cap_fallback:
            self.report.cap_fallbacks += 1

        # the client task runs on a pilot daemon spawned for it; that daemon
        # manages the cache and keeps the first unit locally
        manager = self._spawn(domain, now, pilot=True)
        cache = Cache(
            self.next_cache_id,
            self.policy,
            now,
            now + self.cfg.lease_min,
            self.policy.unit_size(self.cfg.cache_size_bytes),
        )
        self.next_cache_id += 1
        self.caches[cache.id] = cache
        cache.manager = manager.id
        cache.pilot = manager.id
        self._place(cache, 0, manager.id, now)
        for unit, cid_str in enumerate(selection.chosen, start=1):
            cid = int(cid_str)
            self._place(cache, unit, cid, now)
            self._transfer(now, cache.unit_size, manager.domain,
                           self.cacheds[cid].domain, WRITE)

        self._push(cache.lease_expiry, _P_LEASE, "lease", cache.id)
        first_check = now + self.cfg.check_interval_min
        if first_check < cache.lease_expiry - 1e-9:
            self._push(first_check, _P_CHECK, "check", cache.id)

    def _on_check(self, now: float, cache_id: int) -> None:
        cache = self.caches[cache_id]
        if cache.terminal:
            return

        # spare-copy bookkeeping: units whose serving daemon died fail over
        # to their surviving spare (the copy is already in place, so no bytes
        # move); the consumed spare is re-armed below, and spares that died
        # under a living official are replaced, so a unit that has ever been
        # covered stays covered for the rest of the lease
        covered = 0
        for unit in sorted(cache.placements):
            spare = cache.standby.get(unit)
            if spare is not None and self.cacheds[spare].state == DOWN:
                del cache.standby[unit]
                spare = None
            if (spare is not None
                    and self.cacheds[cache.placements[unit]].state == DOWN):
                cache.placements[unit] = cache.standby.pop(unit)
                covered += 1

        if self.cacheds[cache.manager].state == DOWN:
            if self.proactive is None:
                # only the manager knows the cluster layout; with nobody
                # replicating that metadata, its death orphans the cache
                self._finish(cache, LOST, now)
                return
            # relocation spreads the cluster metadata with every copy it
            # plants, so a surviving holder can take over the manager role
            if not self._promote(cache):
                self._finish(cache, LOST, now)
                return

        dead_units = sorted(
            unit for unit, cid in cache.placements.items()
            if self.cacheds[cid].state == DOWN
        )
        self.report.temp_failures += covered + len(dead_units)

        if len(self._alive_units(cache)) < cache.policy.k:
            self._finish(cache, LOST, now)
            return

        if dead_units:
            self._recover(cache, dead_units, now)
        # once the protocol backs a unit it stays backed: re-arm spares
        # consumed by a failover, replace spares that died, and retry any
        # planting a full cluster forced us to skip
        for unit in sorted(cache.covered):
            if (unit in cache.placements
                    and unit not in cache.standby
                    and self.cacheds[cache.placements[unit]].state != DOWN):
                self._plant_spare(cache, unit, now, PROACTIVE)
        if self.proactive:
            self._cover_vulnerable(cache, now)

        next_check = now + self.cfg.check_interval_min
        if next_check < cache.lease_expiry - 1e-9:
            self._push(next_check, _P_CHECK, "check", cache.id)

    def _promote(self, cache: Cache) -> bool:
        candidates = sorted(
            cid for cid in cache.placements.values()
            if self.cacheds[cid].state != DOWN
        )
        if not candidates:
            # every serving holder died inside one window; a spare-copy
            # holder can still speak for the cache
            candidates = sorted(
                sid for sid in cache.standby.values()
                if self.cacheds[sid].state != DOWN
            )
        if not candidates:
            return False
        cache.manager = candidates[0]
        self.report.promotions += 1
        return True

    def _recover(self, cache: Cache, dead_units: list[int], now: float) -> None:
        manager = self.cacheds[cache.manager]
        exclude = self._holders_of(cache)
        order = "scan" if self.loc else "oldest"
        buckets = self._buckets(exclude=exclude, order=order)
        try:
            selection = recovery_path_select(
                self._occupancy(cache, skip_units=set(dead_units)),
                buckets,
                len(dead_units),
                self.loc,
                group_size=cache.policy.n,
            )
        except InsufficientClusterError:
            return  # nothing free; stay degraded and retry next check
        if selection.cap_fallback:
            self.report.cap_fallbacks += 1

        # decode needs k units at the manager; its own unit is one of them
        if cache.policy.k > 1:
            sources = self._decode_sources(cache, dead_units)
            for holder in sources:
                self._transfer(now, cache.unit_size, holder.domain,
                               manager.domain, RECOVERY)

        for unit, cid_str in zip(dead_units, selection.chosen):
            cid = int(cid_str)
            old = cache.placements[unit]
            self._drop_copy(cache, unit, old)
            self._place(cache, unit, cid, now)
            self._transfer(now, cache.unit_size, manager.domain,
                           self.cacheds[cid].domain, RECOVERY)
            if self.proactive and unit not in cache.standby:
                # a unit rebuilt after a failure comes back with a hot
                # spare; replacing redundancy the failure destroyed is
                # repair traffic
                self._plant_spare(cache, unit, now, RECOVERY)

    def _decode_sources(self, cache: Cache, dead_units: list[int]) -> list[CacheD]:
        """Holders the manager pulls from before re-encoding the stripe.

        The manager gathers every surviving unit it does not already store;
        each costs one fetch transfer.
        """
        mgr = cache.manager
        picked: list[CacheD] = []
        for unit in sorted(cache.placements):
            holder = self.cacheds[cache.placements[unit]]
            if holder.state != DOWN and holder.id != mgr:
                picked.append(holder)
        return picked

    def _plant_spare(self, cache: Cache, unit: int, now: float,
                     category: str) -> bool:
        """Copy a unit from its serving holder to a freshly chosen spare."""
        holder = self.cacheds[cache.placements[unit]]
        order = "scan" if self.loc else "idle"
        buckets = self._buckets(exclude=self._holders_of(cache), order=order)
        try:
            selection = recovery_path_select(
                self._occupancy(cache, skip_units={unit}),
                buckets,
                1,
                self.loc,
                group_size=cache.policy.n,
            )
        except InsufficientClusterError:
            return False  # no room to copy to; retry at the next check
        if selection.cap_fallback:
            self.report.cap_fallbacks += 1
        target = int(selection.chosen[0])
        cache.standby[unit] = target
        cache.covered.add(unit)
        self.cacheds[target].stored.add((cache.id, unit))
        self._count_arrival(now, self.cacheds[target].domain)
        self._transfer(now, cache.unit_size, holder.domain,
                       self.cacheds[target].domain, category)
        self.report.relocations += 1
        return True

    def _cover_vulnerable(self, cache: Cache, now: float) -> None:
        """Scan serving holders for age risk and plant spare copies.

        A holder whose predicted time to data loss drops under the threshold
        gets its unit copied to a fresh daemon ahead of the failure.  The
        holder keeps serving; when it eventually dies the spare takes over
        for free and a new spare is armed, so coverage persists once it
        starts.  Spare planting is proactive traffic.
        """
        holders = []
        for unit in sorted(cache.placements):
            cid = cache.placements[unit]
            daemon = self.cacheds[cid]
            if daemon.state != DOWN:
                holders.append((unit, cid, daemon))
        if not holders:
            return

        flagged = set()
        # scan one check interval ahead: a holder that would sit past the
        # threshold by the next scan is covered before it crosses, not after
        lookahead = self.cfg.check_interval_min
        scan = [
            (str(cid), d.age(now) + lookahead)
            for _u, cid, d in holders
            if d.state == ALIVE and cid not in cache.handled
        ]
        if scan:
            flagged.update(int(s) for s in proactive_scan(
                scan, cache.policy, self.proactive, self.weibull))
        # holders flagged earlier (here or by another cache) stay vulnerable:
        # keep them covered without rescanning them
        flagged.update(
            cid for _u, cid, d in holders
            if d.state == FLAGGED or cid in cache.handled
        )

        for unit, cid, daemon in holders:
            if cid not in flagged or unit in cache.standby:
                continue
            if not self._plant_spare(cache, unit, now, PROACTIVE):
                continue
            if daemon.state == ALIVE:
                daemon.state = FLAGGED
            cache.handled.add(cid)

    def _on_lease(self, now: float, cache_id: int) -> None:
        cache = self.caches[cache_id]
        if cache.terminal:
            return
        alive_units = self._alive_units(cache)
        outcome = SUCCEEDED if len(alive_units) >= cache.policy.k else LOST
        self._finish(cache, outcome, now)

    def _finish(self, cache: Cache, outcome: str, now: float) -> None:
        cache.terminal = outcome
        self._release_cache(cache)
        self.report.caches.append(
            CacheRecord(cache.id, cache.policy.label, outcome, cache.created, now)
        )

    # --- main loop -----------------------------------------------------------

    def run(self) -> SimReport:
        cfg = self.cfg
        start = -cfg.warmup_min
        for domain in self.domains:
            for _ in range(cfg.cacheds_per_vm):
                self._spawn(domain, start)

        step_min = cfg.schedule_interval_s / 60.0
        t = 0.0
        while t < cfg.duration_min - 1e-9:
            self._push(t, _P_SCHEDULE, "schedule", None)
            t += step_min

        horizon = cfg.duration_min + cfg.lease_min
        while self.heap:
            when, _prio, _seq, kind, payload = heapq.heappop(self.heap)
            if when > horizon + 1e-9:
                break
            if kind == "death":
                self._on_death(when, payload)
            elif kind == "spawn":
                self._spawn(payload, when)
            elif kind == "check":
                self._on_check(when, payload)
            elif kind == "lease":
                self._on_lease(when, payload)
            elif kind == "schedule":
                self._on_schedule(when)
            elif kind == "transfer":
                self.report.transfers.append(payload)

        for idx in range(int((horizon + 1e-9) / _SAMPLE_STEP_MIN) + 1):
            for domain in self.domains:
                self.report.vm_counts.append(
                    (idx * _SAMPLE_STEP_MIN, domain,
                     self.window_units.get((idx, domain), 0))
                )

        open_caches = [c.id for c in self.caches.values() if not c.terminal]
        assert not open_caches, f"caches past horizon without a verdict: {open_caches}"
        created = self.report.created
        if created:
            n = self.policy.n
            self.report.stored_units_per_cache = float(n)
            self.report.stored_bytes_per_cache = float(
                n * self.policy.unit_size(cfg.cache_size_bytes)
            )
        return self.report


def run_simulation(config: SimConfig) -> SimReport:
    return Simulation(config).run()
