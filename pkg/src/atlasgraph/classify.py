"""Homotopy-level predicates on connected labeled graphs."""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .cycles import cycle_rank_simple, labeled_cycle_rank
from .graph_core import LabeledGraph, require_connected


@dataclass(frozen=True)
class ClassReport:
    chart_count: int
    labeled_rank: int
    is_tree: bool
    all_labels_one: bool
    homotopy_sphere: bool
    contractible_tree: bool
    minimal_atlas_valid: bool
    finite: bool = True

    def as_record(self) -> dict[str, int | bool]:
        return asdict(self)


def _is_tree(g: LabeledGraph) -> bool:
    # caller guarantees connectedness
    return g.size == g.order - 1


def _all_labels_one(g: LabeledGraph) -> bool:
    return all(e.label == 1 for e in g.edges)


def is_homotopy_sphere(g: LabeledGraph) -> bool:
    """A finite tree whose every edge carries label 1."""
    require_connected(g)
    return _is_tree(g) and _all_labels_one(g)


def is_contractible_tree(g: LabeledGraph) -> bool:
    # a label >= 2 adds a loop, so trees must also carry labels 1
    require_connected(g)
    return _is_tree(g) and _all_labels_one(g)


def is_simply_connected(g: LabeledGraph) -> bool:
    require_connected(g)
    return labeled_cycle_rank(g) == 0


def is_minimal_atlas_graph(g: LabeledGraph) -> bool:
    """No two charts can be merged: a single chart, or every label >= 2."""
    require_connected(g)
    return g.order == 1 or all(e.label >= 2 for e in g.edges)


def classify(g: LabeledGraph) -> ClassReport:
    require_connected(g)
    tree = cycle_rank_simple(g) == 0
    ones = _all_labels_one(g)
    return ClassReport(
        chart_count=g.order,
        labeled_rank=labeled_cycle_rank(g),
        is_tree=tree,
        all_labels_one=ones,
        homotopy_sphere=tree and ones,
        contractible_tree=is_contractible_tree(g),
        minimal_atlas_valid=is_minimal_atlas_graph(g),
        finite=True,
    )
