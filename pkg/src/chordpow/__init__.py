"""Entrywise powers preserving positive semidefiniteness on matrices with a graph sparsity pattern."""

from .chordal import (
    CliqueOrdering,
    chordless_cycle,
    clique_matrix,
    is_chordal,
    maximal_cliques,
    maximum_cardinality_search,
    minimal_triangulation,
    perfect_clique_ordering,
    verify_decomposition,
)
from .errors import (
    ArgumentError,
    CapacityError,
    ChordpowError,
    DomainError,
    ParseError,
    ValidationError,
)
from .graph import (
    FamilySpec,
    Graph,
    add_path,
    coalesce,
    generate,
    induced_subgraph,
    is_disjoint_union_k2,
    largest_near_clique,
    parse_graph_file,
    schur_complement_graph,
)
from .hsets import Discrete, HSet, HSetReport, critical_exponent_chordal, hset
from .matrices import (
    PowerMap,
    PsdVerdict,
    diagonal_conjugate,
    entrywise_power,
    in_cone,
    is_psd,
    matrix_schur_complement,
    split_decomposition,
    superadditivity_gap,
    to_correlation,
    witness_cosine,
    witness_path3,
    witness_W,
)
from .verifier import (
    SampleConfig,
    Verdict,
    cross_check,
    falsify,
    preserves,
    probe_hset,
    sample_cone,
    superadditive_falsify,
)

__version__ = "0.1.0"
