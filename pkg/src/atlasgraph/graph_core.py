"""Labeled atlas graphs and their multigraph expansion.

A vertex stands for a chart of the atlas and carries the dimension of the
chart. An edge joins two overlapping charts; its label ``L = kappa + 1``
records the number ``kappa`` of non-homotopic loops formed by the overlap,
so a label-``L`` edge behaves like ``L`` parallel edges.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadEndpoint,
    Disconnected,
    DuplicateEdge,
    InvalidDimension,
    NonPositiveLabel,
    SelfLoop,
)


@dataclass(frozen=True)
class ChartVertex:
    id: int
    dim: int


@dataclass(frozen=True)
class LabeledEdge:
    u: int
    v: int
    label: int

    @property
    def kappa(self) -> int:
        """Number of non-homotopic loops the overlap contributes."""
        return self.label - 1


@dataclass(frozen=True)
class LabeledGraph:
    vertices: tuple[ChartVertex, ...]
    edges: tuple[LabeledEdge, ...]
    uniform_dim: int | None = None

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(v.dim for v in self.vertices)

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(e.label for e in self.edges)

    @cached_property
    def label_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric ``order x order`` matrix of labels, 0 where no edge."""
        n = self.order
        rows = [[0] * n for _ in range(n)]
        for e in self.edges:
            rows[e.u][e.v] = rows[e.v][e.u] = e.label
        return tuple(tuple(r) for r in rows)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for e in self.edges:
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        return tuple(tuple(sorted(a)) for a in adj)

    def edge_triples(self) -> list[tuple[int, int, int]]:
        return [(e.u, e.v, e.label) for e in self.edges]

    def relabel(self, perm: Sequence[int]) -> LabeledGraph:
        """Return the graph with vertex ``i`` renamed to ``perm[i]``."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise ValueError(f"not a permutation of range({n}): {perm!r}")
        dims = [0] * n
        for v in self.vertices:
            dims[perm[v.id]] = v.dim
        edges = [(perm[e.u], perm[e.v], e.label) for e in self.edges]
        return new_labeled_graph(dims, edges, uniform_dim=self.uniform_dim)

    def with_labels(self, labels: Sequence[int]) -> LabeledGraph:
        """Same underlying graph, new labels given in stored edge order."""
        if len(labels) != self.size:
            raise ValueError("one label per edge required")
        edges = [(e.u, e.v, lab) for e, lab in zip(self.edges, labels)]
        return new_labeled_graph(self.dims, edges, uniform_dim=self.uniform_dim)


@dataclass(frozen=True)
class Multigraph:
    """Expansion of a labeled graph: edge ``(u, v, label)`` becomes
    ``label`` parallel edges ``(u, v, 1) .. (u, v, label)``."""

    vertex_count: int
    parallel_edges: tuple[tuple[int, int, int], ...]

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex, in stored edge order."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v, _) in enumerate(self.parallel_edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def other_end(self, edge: int, vertex: int) -> int:
        u, v, _ = self.parallel_edges[edge]
        return v if vertex == u else u

    def collapse(self) -> dict[tuple[int, int], int]:
        """Multiplicity of every vertex pair, i.e. the original labels."""
        out: dict[tuple[int, int], int] = {}
        for u, v, _ in self.parallel_edges:
            out[(u, v)] = out.get((u, v), 0) + 1
        return out


def new_labeled_graph(
    vertex_dims: Iterable[int],
    edges: Iterable[Sequence[int]],
    uniform_dim: int | None = None,
) -> LabeledGraph:
    """Validate and build a :class:`LabeledGraph`.

    Edges are normalized to ``u < v`` and stored sorted by that pair.
    Raises one of the :mod:`atlasgraph.errors` edge errors naming the
    offending input edge, or :class:`InvalidDimension`.
    """
    dims = list(vertex_dims)
    for i, d in enumerate(dims):
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise InvalidDimension(f"vertex {i}: dimension must be a positive integer, got {d!r}")
    if uniform_dim is not None:
        if not isinstance(uniform_dim, int) or uniform_dim < 1:
            raise InvalidDimension(f"uniform_dim must be a positive integer, got {uniform_dim!r}")
        for i, d in enumerate(dims):
            if d != uniform_dim:
                raise InvalidDimension(f"vertex {i} has dim {d} but uniform_dim is {uniform_dim}")
    n = len(dims)
    seen: dict[tuple[int, int], int] = {}
    out = []
    for idx, edge in enumerate(edges):
        u, v, label = edge
        if not (0 <= u < n and 0 <= v < n):
            raise BadEndpoint(idx, edge, f"graph has {n} vertices")
        if u == v:
            raise SelfLoop(idx, edge)
        if not isinstance(label, int) or label < 1:
            raise NonPositiveLabel(idx, edge)
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdge(idx, edge, f"pair already given by edge #{seen[key]}")
        seen[key] = idx
        out.append(LabeledEdge(key[0], key[1], label))
    out.sort(key=lambda e: (e.u, e.v))
    return LabeledGraph(
        vertices=tuple(ChartVertex(i, d) for i, d in enumerate(dims)),
        edges=tuple(out),
        uniform_dim=uniform_dim,
    )


def expand_multigraph(g: LabeledGraph) -> Multigraph:
    parallel = tuple(
        (e.u, e.v, copy) for e in g.edges for copy in range(1, e.label + 1)
    )
    return Multigraph(g.order, parallel)


def connected_components(g: LabeledGraph | Multigraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, ordered by
    smallest member."""
    if isinstance(g, Multigraph):
        n = g.vertex_count
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v, _ in g.parallel_edges:
            adj[u].append(v)
            adj[v].append(u)
    else:
        n = g.order
        adj = g.neighbors
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(g: LabeledGraph | Multigraph) -> bool:
    """True for a graph with exactly one component (the empty graph has none)."""
    return len(connected_components(g)) == 1


def require_connected(g: LabeledGraph) -> None:
    c = len(connected_components(g))
    if c != 1:
        raise Disconnected(f"graph must be connected, found {c} components")
