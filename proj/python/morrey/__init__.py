"""Exact discrete Morrey norms and geometric constants on Z^d."""

from ._morrey import (
    ArgumentError,
    DomainError,
    MorreyError,
    NormResult,
    ParseError,
    ResourceError,
    SizeError,
    SpaceParams,
    SparseSequence,
    VerificationError,
    analytic_bounds,
    build_witness,
    cardinality,
    constant_names,
    maximize_quotient,
    minimal_even_n,
    n_max,
    norm,
    parse_sequence,
    quotient,
    serialize_sequence,
    verify_theorem,
    window_value,
    witness_threshold,
)

__all__ = [name for name in dir() if not name.startswith("_")]
