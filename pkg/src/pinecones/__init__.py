"""Pinecones, Gale-Robinson sequences and perfect matchings of grid graphs."""

from __future__ import annotations

from .condensation import (
    DEFAULT_WORK_BUDGET,
    CondensationMonomials,
    EdgeClassification,
    EdgeKind,
    bivariate_q,
    bivariate_q_enumerated,
    check_stable_ordinary_edges,
    classify_horizontal_edges,
    condensation_monomials,
    condensation_work,
    partial_matching_polynomial,
    pinecone_polynomial,
    verify_condensation_full,
    verify_condensation_interleaved,
    verify_kuo,
)
from .errors import (
    GuardrailExceeded,
    IntegralityViolation,
    InternalInvariantViolation,
    InvalidArgument,
    NoPerfectMatching,
    NotFound,
    PineconeError,
    PolynomialityViolation,
    PreconditionViolation,
    UnencodableGraph,
    VaxParseError,
)
from .galerobinson import (
    GRParams,
    RealParams,
    as_params,
    build_continuous,
    build_direct,
    build_recursive,
    check_interleaving,
    check_shift_identities,
    check_sub_pinecone_identities,
    lower_abscissa,
    normalize_params,
    shift_identity_failures,
    upper_abscissa,
)
from .grid import Cell, Edge, GridGraph, Vertex, degree, diamond_graph, graph_difference
from .matching import (
    Matching,
    bivariate_count,
    count_matchings,
    enumerate_matchings,
    enumerated_polynomial,
    iter_matchings,
    matching_polynomial,
    weighted_count,
)
from .pinecone import (
    ClosednessReport,
    Pinecone,
    black_squares,
    closed_pinecones,
    from_black_squares,
    from_odd_edges,
    intersection,
    is_closed,
    is_interleaved,
    single_square,
    to_grid_graph,
    union,
)
from .polynomials import BivariatePoly, MatchingPolynomial
from .reduction import SubPineconeSet, core, peel, reconstruct, sub_pinecones
from .sampler import (
    BigRandom,
    MatchingSampler,
    SamplerConfig,
    TilingImage,
    matching_probability,
    render_tiling,
    sample_matching,
)
from .sequences import (
    SOMOS_PARAMS,
    CrossCheck,
    GRPolySequence,
    GRSequence,
    cross_check_combinatorial,
    gr_poly_sequence,
    gr_sequence,
    somos_sequence,
)
from .vax import VaxDocument, read_vax, vax_decode, vax_encode, write_vax

__version__ = "0.1.0"
