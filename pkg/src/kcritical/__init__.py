"""Odd factors, k-critical graphs and their extremal size and spectral bounds."""

from .errors import (
    CapacityError,
    GraphInputError,
    InvariantViolation,
    KCriticalError,
    ParameterError,
    PreconditionError,
    SamplingError,
)
from .factors import (
    DeficiencyCertificate,
    FactorParams,
    OddFactor,
    deficiency,
    has_odd_factor,
    is_k_critical,
    is_k_critical_direct,
    is_k_critical_general,
    parity_audit,
)
from .families import ExtremalParams, build_cluster_join, build_G2, build_G3, build_G_star, build_parts
from .graph import Graph, build_graph, complete, empty, is_k_connected, join, union
from .graph6 import emit_graph6, parse_graph6
from .harness import classify_instance, sweep, thresholds, tightness
from .spectral import char_cubic, quotient_matrix, spectral_radius

__version__ = "0.1.0"
