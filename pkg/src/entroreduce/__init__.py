"""entroreduce: entropy bounds and certified support-size reduction.

The package answers three families of questions about a finite probability
distribution p with n outcomes:

* how much Shannon entropy can survive when p is aggregated down to m
  outcomes (tight upper envelope, achievable lower bound, exact and greedy
  constructions);
* what entropy is guaranteed when the ratio between the largest and smallest
  probability is capped;
* how close p is to a coarser distribution under the minimum joint entropy
  coupling distance.
"""
from .aggregation import (
    AggregationResult,
    DEFAULT_EXACT_CAP,
    GUARANTEE_ADDITIVE_ALPHA,
    GUARANTEE_EXACT,
    HuffmanTrace,
    Partition,
    aggregate,
    aggregation_entropy_range,
    exact_max_aggregation,
    exact_min_aggregation,
    huffman_max_aggregation,
    make_partition,
)
from .coupling import (
    Coupling,
    DEFAULT_COUPLING_CAP,
    DivergenceReport,
    aggregation_coupling,
    approx_best_approximation,
    divergence_upper_bound,
    make_coupling,
    min_entropy_coupling_exact,
)
from .dist import Dist, alpha, entropy, entropy_bits, make_dist
from .errors import (
    BadM,
    BadPartition,
    BadRho,
    Empty,
    MarginalMismatch,
    NegativeMass,
    NotNormalized,
    RatioViolated,
    TooLarge,
    Unreachable,
    ValidationError,
    ZeroMinimum,
)
from .majorization import MajorizationVerdict, majorizes
from .ratio import (
    RatioBound,
    flat_majorant,
    prior_ratio_gap,
    ratio_gap,
    ratio_lower_bound,
)
from .reduction import BoundReport, bound_report, envelope_cut, head_merge, max_entropy_envelope

__version__ = "0.1.0"

__all__ = [
    "AggregationResult",
    "BadM",
    "BadPartition",
    "BadRho",
    "BoundReport",
    "Coupling",
    "DEFAULT_COUPLING_CAP",
    "DEFAULT_EXACT_CAP",
    "Dist",
    "DivergenceReport",
    "Empty",
    "GUARANTEE_ADDITIVE_ALPHA",
    "GUARANTEE_EXACT",
    "HuffmanTrace",
    "MajorizationVerdict",
    "MarginalMismatch",
    "NegativeMass",
    "NotNormalized",
    "Partition",
    "RatioBound",
    "RatioViolated",
    "TooLarge",
    "Unreachable",
    "ValidationError",
    "ZeroMinimum",
    "aggregate",
    "aggregation_coupling",
    "aggregation_entropy_range",
    "alpha",
    "approx_best_approximation",
    "bound_report",
    "divergence_upper_bound",
    "entropy",
    "entropy_bits",
    "envelope_cut",
    "exact_max_aggregation",
    "exact_min_aggregation",
    "flat_majorant",
    "head_merge",
    "huffman_max_aggregation",
    "majorizes",
    "make_coupling",
    "make_dist",
    "make_partition",
    "max_entropy_envelope",
    "min_entropy_coupling_exact",
    "prior_ratio_gap",
    "ratio_gap",
    "ratio_lower_bound",
    "__version__",
]
