"""Systematic Reed-Solomon erasure codec and the storage policy type.

A stripe holds n = k + r units: the first k are verbatim slices of the
(padded) payload, the last r are parity rows of a systematised Vandermonde
generator.  Any k distinct units reconstruct the payload.  Replication is
the k = 1 special case so one policy type covers both schemes.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from . import gf256

REPLICATION = "replication"
ERASURE = "erasure"

_POLICY_RE = re.compile(r"^(?:replica(\d+)|ec(\d+)\+(\d+))$", re.IGNORECASE)


class PolicyError(ValueError):
    """Invalid storage-policy parameters or policy string."""


class CodecError(ValueError):
    """Encode/decode input rejected (empty payload, bad unit set, ...)."""


@dataclass(frozen=True)
class StoragePolicy:
    """Redundancy scheme: replication (k=1, r copies) or ec k+r."""

    kind: str
    k: int
    r: int

    def __post_init__(self):
        if self.kind not in (REPLICATION, ERASURE):
            raise PolicyError(f"unknown policy kind {self.kind!r}")
        if self.kind == REPLICATION:
            if self.k != 1:
                raise PolicyError("replication keeps whole copies (k must be 1)")
            if self.r < 0:
                raise PolicyError("replica count must be >= 1")
        else:
            if self.k < 2:
                raise PolicyError("erasure coding needs k >= 2 data units")
            if self.r < 1:
                raise PolicyError("erasure coding needs r >= 1 parity units")
            if self.k + self.r > 255:
                raise PolicyError("GF(256) limits a stripe to n <= 255 units")

    @property
    def n(self) -> int:
        return self.k + self.r

    @property
    def redundancy(self) -> float:
        """Storage blow-up factor n/k."""
        return self.n / self.k

    @classmethod
    def replication(cls, copies: int) -> "StoragePolicy":
        # replicaN stores N copies total, i.e. n = N, r = N - 1
        if copies < 1:
            raise PolicyError("replica count must be >= 1")
        return cls(REPLICATION, 1, copies - 1)

    @classmethod
    def erasure(cls, k: int, r: int) -> "StoragePolicy":
        return cls(ERASURE, k, r)

    @classmethod
    def parse(cls, text: str) -> "StoragePolicy":
        """Parse 'replica<N>' or 'ec<K>+<R>' (case-insensitive)."""
        m = _POLICY_RE.match(text.strip())
        if not m:
            raise PolicyError(f"unrecognised policy {text!r} (want replicaN or ecK+R)")
        if m.group(1) is not None:
            return cls.replication(int(m.group(1)))
        return cls.erasure(int(m.group(2)), int(m.group(3)))

    @property
    def label(self) -> str:
        if self.kind == REPLICATION:
            return f"replica{self.r + 1}"
        return f"ec{self.k}+{self.r}"

    def unit_size(self, payload_size: int) -> int:
        """Bytes stored per unit for a payload of the given size."""
        if payload_size <= 0:
            raise CodecError("payload size must be positive")
        return math.ceil(payload_size / self.k)


@dataclass
class Stripe:
    """Encoded payload: unit index -> bytes, plus the original size."""

    policy: StoragePolicy
    original_size: int
    units: dict[int, bytes] = field(default_factory=dict)


def generator_matrix(k: int, n: int) -> list[list[int]]:
    """n x k systematic generator: identity on top, Vandermonde-derived parity.

    Rows evaluate the data polynomial at distinct field points, then the
    whole matrix is multiplied by the inverse of its top k rows so data
    units pass through verbatim.  Any k rows stay invertible because row
    selection commutes with that column transform.
    """
    vand = [[gf256.gf_pow(i, j) for j in range(k)] for i in range(n)]
    top_inv = gf256.gf_mat_inv([row[:] for row in vand[:k]])
    return gf256.gf_matmul(vand, top_inv)


def encode(data: bytes, policy: StoragePolicy) -> Stripe:
    """Split data into k units and add r parity units (or n copies)."""
    if len(data) == 0:
        raise CodecError("refusing to encode an empty payload")
    if policy.kind == REPLICATION:
        units = {i: bytes(data) for i in range(policy.n)}
        return Stripe(policy, len(data), units)

    k, n = policy.k, policy.n
    usize = policy.unit_size(len(data))
    padded = np.zeros(k * usize, dtype=np.uint8)
    padded[: len(data)] = np.frombuffer(data, dtype=np.uint8)
    rows = padded.reshape(k, usize)

    gen = generator_matrix(k, n)
    units = {i: rows[i].tobytes() for i in range(k)}
    for p in range(k, n):
        units[p] = gf256.combine(gen[p], rows).tobytes()
    return Stripe(policy, len(data), units)


def decode(units: dict[int, bytes], policy: StoragePolicy, original_size: int) -> bytes:
    """Rebuild the payload from any k distinct units of the stripe."""
    if original_size <= 0:
        raise CodecError("original size must be positive")
    if policy.kind == REPLICATION:
        if not units:
            raise CodecError("need at least one replica to decode")
        idx = min(units)
        _check_indices(units, policy)
        copy = units[idx]
        if len(copy) < original_size:
            raise CodecError("replica shorter than the original payload")
        return bytes(copy[:original_size])

    k = policy.k
    if len(units) < k:
        raise CodecError(f"need {k} units to decode, got {len(units)}")
    _check_indices(units, policy)
    usize = policy.unit_size(original_size)
    take = sorted(units)[:k]
    arrays = []
    for i in take:
        if len(units[i]) != usize:
            raise CodecError(f"unit {i} has {len(units[i])} bytes, expected {usize}")
        arrays.append(np.frombuffer(units[i], dtype=np.uint8))

    if take == list(range(k)):
        # systematic fast path: the data units are the payload
        payload = b"".join(units[i] for i in take)
        return payload[:original_size]

    gen = generator_matrix(k, policy.n)
    sub = [gen[i] for i in take]
    inv = gf256.gf_mat_inv(sub)
    stacked = np.stack(arrays)
    data = b"".join(gf256.combine(inv[row], stacked).tobytes() for row in range(k))
    return data[:original_size]


def _check_indices(units: dict[int, bytes], policy: StoragePolicy) -> None:
    for i in units:
        if not 0 <= i < policy.n:
            raise CodecError(f"unit index {i} outside stripe of {policy.n}")


# --- unit files on disk (used by the CLI codec commands) -------------------

def write_stripe(stripe: Stripe, base: str) -> list[str]:
    """Write <base>.unit<i> files plus a <base>.hdr describing the stripe."""
    paths = []
    for i, blob in sorted(stripe.units.items()):
        path = f"{base}.unit{i}"
        with open(path, "wb") as fh:
            fh.write(blob)
        paths.append(path)
    hdr = f"{base}.hdr"
    with open(hdr, "w", encoding="ascii") as fh:
        fh.write(f"k={stripe.policy.k}\n")
        fh.write(f"r={stripe.policy.r}\n")
        fh.write(f"size={stripe.original_size}\n")
    paths.append(hdr)
    return paths


def read_header(base: str) -> tuple[StoragePolicy, int]:
    fields = {}
    with open(f"{base}.hdr", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            key, _, value = line.partition("=")
            fields[key.strip()] = int(value.strip())
    for key in ("k", "r", "size"):
        if key not in fields:
            raise CodecError(f"stripe header missing {key!r}")
    k, r = fields["k"], fields["r"]
    policy = StoragePolicy.replication(r + 1) if k == 1 else StoragePolicy.erasure(k, r)
    return policy, fields["size"]
