"""Erasure-coded cache simulator: codec, reliability math, and cluster sim."""

from .erasure import (
    CodecError,
    PolicyError,
    StoragePolicy,
    Stripe,
    decode,
    encode,
    generator_matrix,
)
from .mttdl import (
    MarkovParams,
    MttdlResult,
    crossing_age,
    crossing_lambda,
    mttdl_at_age,
    mttdl_general,
    mttdl_raid5,
    mttdl_raid6,
)
from .placement import (
    DomainBucket,
    InsufficientClusterError,
    LocalizationPolicy,
    ProactivePolicy,
    recovery_path_select,
    write_path_select,
)
from .reliability import (
    FailureRateQuery,
    WeibullParams,
    conditional_failure_rate,
    sample_lifetime,
)
from .sim import ConfigError, SimConfig, Simulation, run_simulation

__version__ = "0.1.0"

__all__ = [
    "CodecError",
    "ConfigError",
    "DomainBucket",
    "FailureRateQuery",
    "InsufficientClusterError",
    "LocalizationPolicy",
    "MarkovParams",
    "MttdlResult",
    "PolicyError",
    "ProactivePolicy",
    "SimConfig",
    "Simulation",
    "StoragePolicy",
    "Stripe",
    "WeibullParams",
    "conditional_failure_rate",
    "crossing_age",
    "crossing_lambda",
    "decode",
    "encode",
    "generator_matrix",
    "mttdl_at_age",
    "mttdl_general",
    "mttdl_raid5",
    "mttdl_raid6",
    "recovery_path_select",
    "run_simulation",
    "sample_lifetime",
    "write_path_select",
    "__version__",
]
