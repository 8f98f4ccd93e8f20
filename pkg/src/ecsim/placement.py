"""Domain-aware unit placement.

Pure functions over bucket snapshots: the caller collects, per network
domain, the candidate daemons (already filtered to alive, not yet holding a
unit of the cache in question, in the order it wants them consumed) and gets
back the chosen ids.  Nothing here mutates cluster state, so the selection
logic is trivially testable against hand-built clusters.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .erasure import StoragePolicy
from .mttdl import mttdl_at_age
from .reliability import WeibullParams


class InsufficientClusterError(RuntimeError):
    """Fewer free daemons than units to place."""


@dataclass
class DomainBucket:
    """Free daemons of one network domain, in consumption order."""

    domain: str
    available: list[str] = field(default_factory=list)


@dataclass(frozen=True)
class LocalizationPolicy:
    """Keep round(pct/100 * n) units of a stripe inside one domain."""

    pct: int

    def __post_init__(self):
        if self.pct not in (25, 50, 75, 100):
            raise ValueError("localization percentage must be 25, 50, 75 or 100")

    def cap(self, n_units: int) -> int:
        return max(1, round(self.pct / 100.0 * n_units))


@dataclass(frozen=True)
class ProactivePolicy:
    """Relocate units off daemons whose age-dependent MTTDL fell below
    threshold (threshold is in repair intervals, like MTTDL itself)."""

    threshold: float
    check_interval_min: float = 2.0

    def __post_init__(self):
        if self.threshold <= 0:
            raise ValueError("MTTDL threshold must be positive")


@dataclass
class Selection:
    chosen: list[str]
    cap_fallback: bool = False  # true when locality had to yield to availability


def _availability_order(buckets: list[DomainBucket]) -> list[DomainBucket]:
    return sorted(buckets, key=lambda b: (-len(b.available), b.domain))


def write_path_select(
    buckets: list[DomainBucket],
    n_units: int,
    loc: LocalizationPolicy | None,
    preassigned: dict[str, int] | None = None,
) -> Selection:
    """Choose daemons for a fresh stripe.

    With localization on: first fill one domain up to the cap (best fit --
    the domain with the fewest free daemons that still completes the group,
    counting units the caller already pinned there), then spread the rest
    over the remaining domains in descending availability, never exceeding
    the cap anywhere.  With localization off: descending availability,
    bucket order within a domain.
    """
    pre = dict(preassigned or {})
    pools = {b.domain: list(b.available) for b in buckets}
    total = sum(len(p) for p in pools.values())
    if total < n_units:
        raise InsufficientClusterError(
            f"need {n_units} free daemons, cluster offers {total}"
        )
    if loc is None:
        chosen: list[str] = []
        for bucket in _availability_order(buckets):
            for cid in bucket.available:
                if len(chosen) == n_units:
                    return Selection(chosen)
                chosen.append(cid)
        return Selection(chosen)

    group = loc.cap(n_units + sum(pre.values()))
    taken: dict[str, int] = {}
    chosen = []
    remaining = n_units

    def used(domain: str) -> int:
        return pre.get(domain, 0) + taken.get(domain, 0)

    # stage 1: complete one full group of `group` units in a single domain,
    # unless the preassigned units already form one
    if not any(used(d) >= group for d in pools):
        fits = []
        for b in buckets:
            need = group - used(b.domain)
            if 0 < need <= remaining and len(pools[b.domain]) >= need:
                fits.append((-pre.get(b.domain, 0), len(pools[b.domain]), b.domain, need))
        if fits:
            _, _, dom, need = min(fits)
            for _ in range(need):
                chosen.append(pools[dom].pop(0))
            taken[dom] = taken.get(dom, 0) + need
            remaining -= need

    # stage 2: spread the rest, biggest pools first, staying under the cap
    while remaining > 0:
        progressed = False
        order = sorted(pools, key=lambda d: (-len(pools[d]), d))
        for dom in order:
            room = min(group - used(dom), len(pools[dom]), remaining)
            if room <= 0:
                continue
            for _ in range(room):
                chosen.append(pools[dom].pop(0))
            taken[dom] = taken.get(dom, 0) + room
            remaining -= room
            progressed = True
            if remaining == 0:
                break
        if not progressed:
            break

    if remaining > 0:
        # caps cannot be honoured; availability beats locality
        sel = Selection(chosen, cap_fallback=True)
        for dom in sorted(pools, key=lambda d: (-len(pools[d]), d)):
            while remaining > 0 and pools[dom]:
                sel.chosen.append(pools[dom].pop(0))
                remaining -= 1
        if remaining > 0:
            raise InsufficientClusterError("cluster exhausted during placement")
        return sel
    return Selection(chosen)


def recovery_path_select(
    occupancy: dict[str, int],
    buckets: list[DomainBucket],
    needed: int,
    loc: LocalizationPolicy | None,
    group_size: int | None = None,
) -> Selection:
    """Choose daemons to host re-encoded units after failures.

    Domains are ranked by how many surviving units of the cache they already
    hold (descending, names break ties); domains holding none come last in
    descending availability.  With localization on, a candidate domain is
    skipped while survivors + new picks would exceed the cap; if no domain
    passes, the cap is dropped (availability beats locality) and the
    selection is flagged.  With localization off the ranking is pure
    availability order.
    """
    pools = {b.domain: list(b.available) for b in buckets}
    total = sum(len(p) for p in pools.values())
    if total < needed:
        raise InsufficientClusterError(
            f"need {needed} free daemons, cluster offers {total}"
        )

    if loc is None:
        ranked = [b.domain for b in _availability_order(buckets)]
    else:
        holders = sorted(
            (d for d in occupancy if occupancy.get(d, 0) > 0),
            key=lambda d: (-occupancy[d], d),
        )
        empty = sorted(
            (b.domain for b in buckets if occupancy.get(b.domain, 0) == 0),
            key=lambda d: (-len(pools[d]), d),
        )
        ranked = holders + empty

    cap = loc.cap(group_size) if loc is not None and group_size else None
    placed: dict[str, int] = {}
    sel = Selection([])
    for _ in range(needed):
        target = None
        if cap is not None:
            for dom in ranked:
                post = occupancy.get(dom, 0) + placed.get(dom, 0) + 1
                if pools.get(dom) and post <= cap:
                    target = dom
                    break
        if target is None and cap is not None:
            sel.cap_fallback = True
        if target is None:
            for dom in ranked:
                if pools.get(dom):
                    target = dom
                    break
        assert target is not None  # guarded by the total check above
        sel.chosen.append(pools[target].pop(0))
        placed[target] = placed.get(target, 0) + 1
    return sel


def proactive_scan(
    holders: list[tuple[str, float]],
    policy: StoragePolicy,
    proactive: ProactivePolicy,
    weibull: WeibullParams,
) -> list[str]:
    """Ids of unit holders whose MTTDL at their current age fell below the
    relocation threshold.  The caller filters out ids it already handled,
    so a flagged daemon is never rescanned for the same cache."""
    flagged = []
    for cid, age in holders:
        result = mttdl_at_age(policy, max(age, 0.0), proactive.check_interval_min, weibull)
        if result.mttdl < proactive.threshold:
            flagged.append(cid)
    return flagged
