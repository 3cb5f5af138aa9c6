"""Combinatorics of manifold atlases viewed as labeled graphs."""

__version__ = "0.1.0"

from .canon import (
    CanonicalForm,
    are_isomorphic,
    automorphism_group_order,
    automorphisms,
    canonical_form,
    canonical_labeling,
)
from .classify import (
    ClassReport,
    classify,
    is_contractible_tree,
    is_homotopy_sphere,
    is_minimal_atlas_graph,
    is_simply_connected,
)
from .cycles import (
    ClosedWalk,
    CycleBasis,
    SpanningForest,
    cycle_basis,
    cycle_rank_simple,
    labeled_cycle_rank,
    spanning_forest,
)
from .enumeration import (
    CatalogEntry,
    build_catalog,
    count_connected_graphs,
    enumerate_connected_graphs,
    enumerate_labelings,
)
from .graph_core import (
    ChartVertex,
    LabeledEdge,
    LabeledGraph,
    Multigraph,
    connected_components,
    expand_multigraph,
    new_labeled_graph,
)
from .pi1 import (
    FreeGroupPresentation,
    GroupWord,
    group_rank,
    is_trivial,
    presentation,
    reduce_word,
)
