"""Isomorphism-free enumeration of connected graphs and of their labelings.

Connected graphs of order ``p`` are grown from those of order ``p - 1`` by
adding a vertex joined to every nonempty subset of the old vertices. Every
connected graph has a non-cut vertex, so this reaches all of them; duplicates
are removed by canonical form and each class is represented by its decoded
canonical graph, which makes the output independent of generation order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .canon import (
    DEFAULT_AUTOMORPHISM_BOUND,
    CanonicalForm,
    automorphisms,
    canonical_form,
)
from .classify import ClassReport, classify
from .cycles import labeled_cycle_rank
from .errors import TooLarge
from .graph_core import LabeledGraph, new_labeled_graph

log = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 8


@dataclass(frozen=True)
class CatalogEntry:
    canonical: CanonicalForm
    order: int
    dim: int
    label_bound: int
    labeled_rank: int
    report: ClassReport

    def record(self) -> str:
        """One catalog line: ``canon_hex order dim max_label labeled_rank sphere minimal``."""
        return " ".join(
            [
                self.canonical.hex(),
                str(self.order),
                str(self.dim),
                str(self.label_bound),
                str(self.labeled_rank),
                "true" if self.report.homotopy_sphere else "false",
                "true" if self.report.minimal_atlas_valid else "false",
            ]
        )


def _check_order(p: int, max_order: int) -> None:
    if not isinstance(p, int) or p < 1:
        raise ValueError(f"order must be a positive integer, got {p!r}")
    if p > max_order:
        raise TooLarge(f"order {p} exceeds the enumeration bound {max_order}")


def _children(parent: bytes) -> set[bytes]:
    """Canonical forms of all one-vertex connected extensions of a graph."""
    g = CanonicalForm(parent).decode()
    k = g.order
    dims = list(g.dims) + [g.dims[0] if k else 1]
    base = g.edge_triples()
    out = set()
    for mask in range(1, 1 << k):
        edges = base + [(i, k, 1) for i in range(k) if mask >> i & 1]
        out.add(canonical_form(new_labeled_graph(dims, edges)).data)
    return out


@lru_cache(maxsize=None)
def _connected_forms(p: int, dim: int, jobs: int = 1) -> tuple[bytes, ...]:
    if p == 1:
        return (canonical_form(new_labeled_graph([dim], [])).data,)
    parents = _connected_forms(p - 1, dim, jobs)
    found: set[bytes] = set()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for chunk in pool.map(_children, parents, chunksize=max(1, len(parents) // (8 * jobs))):
                found |= chunk
    else:
        for parent in parents:
            found |= _children(parent)
    log.debug("order %d: %d parents -> %d classes", p, len(parents), len(found))
    return tuple(sorted(found))


def enumerate_connected_graphs(
    p: int, dim: int = 1, *, max_order: int = DEFAULT_MAX_ORDER, jobs: int = 1
) -> list[LabeledGraph]:
    """One graph per isomorphism class of connected simple graphs on ``p``
    vertices, all labels 1 and every vertex of dimension ``dim``.

    Sorted by canonical form; each graph is its own canonical representative.
    """
    _check_order(p, max_order)
    return [_with_uniform_dim(CanonicalForm(b).decode(), dim) for b in _connected_forms(p, dim, jobs)]


def count_connected_graphs(p: int, *, max_order: int = DEFAULT_MAX_ORDER, jobs: int = 1) -> int:
    _check_order(p, max_order)
    return len(_connected_forms(p, 1, jobs))


def _with_uniform_dim(g: LabeledGraph, dim: int) -> LabeledGraph:
    return new_labeled_graph(g.dims, g.edge_triples(), uniform_dim=dim)


def enumerate_labelings(
    g: LabeledGraph,
    min_label: int = 2,
    max_label: int = 2,
    *,
    bound: int = DEFAULT_AUTOMORPHISM_BOUND,
) -> list[LabeledGraph]:
    """One labeling per orbit of ``E(g) -> [min_label, max_label]`` under the
    automorphism group of the underlying graph.

    The existing labels of ``g`` are ignored. The representative of each
    orbit is its lexicographically least assignment in stored edge order.
    """
    if min_label < 1 or min_label > max_label:
        raise ValueError(f"need 1 <= min_label <= max_label, got [{min_label}, {max_label}]")
    if g.order > bound:
        raise TooLarge(f"labeling enumeration limited to {bound} vertices, graph has {g.order}")
    plain = g.with_labels([1] * g.size)
    index = {(e.u, e.v): i for i, e in enumerate(plain.edges)}
    edge_perms = []
    for perm in automorphisms(plain, bound):
        # labeling f maps to f o sigma^-1: new[image(e)] = f[e]
        img = []
        for e in plain.edges:
            a, b = perm[e.u], perm[e.v]
            img.append(index[(a, b) if a < b else (b, a)])
        if img != list(range(len(img))):
            edge_perms.append(img)
    out = []
    m = g.size
    for labels in product(range(min_label, max_label + 1), repeat=m):
        least = True
        for img in edge_perms:
            moved = [0] * m
            for i, j in enumerate(img):
                moved[j] = labels[i]
            if tuple(moved) < labels:
                least = False
                break
        if least:
            out.append(plain.with_labels(labels))
    return out


def build_catalog(
    p: int,
    max_label: int,
    dim: int = 1,
    *,
    min_label: int = 2,
    max_order: int = DEFAULT_MAX_ORDER,
    jobs: int = 1,
) -> list[CatalogEntry]:
    """Minimal-atlas labeled graphs of order ``p`` with labels up to ``max_label``."""
    _check_order(p, max_order)
    if max_label < min_label:
        raise ValueError(f"max_label {max_label} is below min_label {min_label}")
    entries = []
    for base in enumerate_connected_graphs(p, dim, max_order=max_order, jobs=jobs):
        for lg in enumerate_labelings(base, min_label, max_label):
            entries.append(
                CatalogEntry(
                    canonical=canonical_form(lg),
                    order=p,
                    dim=dim,
                    label_bound=max_label,
                    labeled_rank=labeled_cycle_rank(lg),
                    report=classify(lg),
                )
            )
    entries.sort(key=lambda e: e.canonical.data)
    return entries
