"""Ice-quiver mutation and maximal green sequences for cycles, ladders and
higher-genus torus quivers."""

from .generators import BadParameter, cycle_quiver, ladder_quiver, torus_quiver
from .quiver import (
    AlreadyIced,
    Arrow,
    FailureKind,
    FrozenQuery,
    IceQuiver,
    InvalidQuiver,
    MutationAtFrozen,
    MutationSequence,
    NotGreenAt,
    QuiverError,
    Trace,
    UnknownLabel,
    UnknownVertex,
    VerificationReport,
    Vertex,
    VertexColor,
    apply_sequence,
    canonical_key,
    coframed,
    color_of,
    colors,
    framed,
    is_maximal_green,
    mutate,
    validate,
)
from .search import SearchConfig, SearchResult, enumerate_mgs, exists_mgs
from .sequences import (
    alpha,
    alpha_chain,
    beta,
    cycle_sequence,
    gamma,
    main_sequence,
    main_sequence_parts,
    sigma,
    tau,
)

__version__ = "0.1.0"
