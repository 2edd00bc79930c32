"""Compact large-girth QC-LDPC block codes and spatially coupled convolutional codes."""

__version__ = "0.1.0"

from .cycles import (
    CycleClass,
    CycleRelation,
    GirthReport,
    RelationSet,
    classify,
    cycle_sum,
    enumerate_relations,
    girth_conv,
    girth_qc,
)
from .memopt import (
    LiftAssignment,
    memory_order,
    minimize_memory,
    minimize_memory_exact,
    theta_lifting,
    theta_memory,
    theta_ratios,
)
from .model import (
    BinaryParityCheck,
    ConvCodeSpec,
    ExponentMatrix,
    SyndromeFormer,
    expand_to_binary,
    to_conv_spec,
    to_syndrome_former,
    window_matrix,
)
from .oracle import girth_oracle
from .search import (
    SearchConfig,
    SearchOutcome,
    SmcSpec,
    base_column_ok,
    gamma_lower_bound,
    greedy_search,
    min_lifting_degree,
    smc_expand,
)
from .sim import (
    BerCurve,
    BerPoint,
    LatencyReport,
    SimConfig,
    SlidingWindowDecoder,
    decode_sliding_window,
    latency_report,
    run_ber,
    simulate_awgn_bpsk,
)
from .bp import SumProductDecoder, decode_bp

__all__ = [
    "BerCurve",
    "BerPoint",
    "BinaryParityCheck",
    "ConvCodeSpec",
    "CycleClass",
    "CycleRelation",
    "ExponentMatrix",
    "GirthReport",
    "LatencyReport",
    "LiftAssignment",
    "RelationSet",
    "SearchConfig",
    "SearchOutcome",
    "SimConfig",
    "SlidingWindowDecoder",
    "SmcSpec",
    "SumProductDecoder",
    "SyndromeFormer",
    "base_column_ok",
    "classify",
    "cycle_sum",
    "decode_bp",
    "decode_sliding_window",
    "enumerate_relations",
    "expand_to_binary",
    "gamma_lower_bound",
    "girth_conv",
    "girth_oracle",
    "girth_qc",
    "greedy_search",
    "latency_report",
    "memory_order",
    "min_lifting_degree",
    "minimize_memory",
    "minimize_memory_exact",
    "run_ber",
    "simulate_awgn_bpsk",
    "smc_expand",
    "theta_lifting",
    "theta_memory",
    "theta_ratios",
    "to_conv_spec",
    "to_syndrome_former",
    "window_matrix",
]
