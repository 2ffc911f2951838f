"""Certified bounds on alpha and tau for fat points in the projective plane."""

from .conjecture import (
    BestBounds,
    BoundWitness,
    HilbertVerdict,
    NagataVerdict,
    Resolution,
    ResolutionCase,
    best_bounds,
    conjectural_resolution,
    hilbert_range_set,
    nagata_check,
    nagata_small_m,
    resolution_cases,
    square_hilbert_check,
    verify_hilbert,
)
from .engine import (
    BoundCertificate,
    BoundKind,
    Certification,
    Criterion,
    TraceStep,
    alpha_lower_bound,
    certify_alpha,
    certify_tau,
    format_trace,
    tau_upper_bound,
    unloading_chain,
)
from .errors import FatPointsError, InternalError, InvalidArgument, NoCertificate, PreconditionError, TooLarge
from .expected import alpha_c, expected_hilbert, tau_c
from .figures import PltRun, figure_dataset
from .formulas import decompose, is_semiuniform, thm_alpha_a, thm_alpha_b, thm_alpha_c, thm_tau_a, thm_tau_b
from .lattice import (
    DivisorClass,
    MultiplicitySequence,
    SpecializationConfig,
    genus,
    intersect_curve,
    isqrt,
    subtract_curve,
    unload,
)
from .oracle import OracleConfig, oracle_alpha, oracle_hilbert, oracle_tau

__version__ = "0.1.0"

__all__ = [
    "BestBounds",
    "BoundCertificate",
    "BoundKind",
    "BoundWitness",
    "Certification",
    "Criterion",
    "DivisorClass",
    "FatPointsError",
    "HilbertVerdict",
    "InternalError",
    "InvalidArgument",
    "MultiplicitySequence",
    "NagataVerdict",
    "NoCertificate",
    "OracleConfig",
    "PltRun",
    "PreconditionError",
    "Resolution",
    "ResolutionCase",
    "SpecializationConfig",
    "TooLarge",
    "TraceStep",
    "alpha_c",
    "alpha_lower_bound",
    "best_bounds",
    "certify_alpha",
    "certify_tau",
    "conjectural_resolution",
    "decompose",
    "expected_hilbert",
    "figure_dataset",
    "format_trace",
    "genus",
    "hilbert_range_set",
    "intersect_curve",
    "is_semiuniform",
    "isqrt",
    "nagata_check",
    "nagata_small_m",
    "oracle_alpha",
    "oracle_hilbert",
    "oracle_tau",
    "resolution_cases",
    "square_hilbert_check",
    "subtract_curve",
    "tau_c",
    "tau_upper_bound",
    "thm_alpha_a",
    "thm_alpha_b",
    "thm_alpha_c",
    "thm_tau_a",
    "thm_tau_b",
    "unload",
    "unloading_chain",
    "verify_hilbert",
]
