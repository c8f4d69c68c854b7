"""Milnor open books of plumbed singularity links and their planarity obstruction."""

from __future__ import annotations

__version__ = "0.1.0"

from .cycle import (  # noqa: E402
    ConsistencyError,
    CycleData,
    PageTopology,
    PieceInventory,
    fundamental_cycle,
    page_topology,
    piece_inventory,
)
from .graph import (  # noqa: E402
    FamilySpec,
    GraphError,
    PlumbingGraph,
    continued_fraction_expand,
    generate_family,
    intersection_matrix,
    is_negative_definite,
    parse_graph,
    serialize_graph,
)
from .lattice import (  # noqa: E402
    DiagonalEmbedding,
    Lattice,
    LatticeVerdict,
    count_embeddings_up_to_symmetry,
    figure12_pattern_match,
    find_embedding,
    lattice_of,
    verify_embedding,
)
from .monodromy import (  # noqa: E402
    CurveRef,
    FractionalTwistPlan,
    HomologyModel,
    TwistWord,
    catalog_word,
    fractional_plan,
    homology_action,
    relation_library,
    verify_relations,
    word_boundary_profile,
)
from .analysis import AnalysisReport, analyze, classify, run_reproduce  # noqa: E402
