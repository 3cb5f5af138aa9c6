"""Spanning forests, cycle ranks and fundamental cycle bases.

Every routine here is deterministic: forests are grown breadth-first from
the smallest unvisited vertex and incident edges are scanned in stored
multigraph order, so equal inputs always give identical outputs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import Disconnected
from .graph_core import LabeledGraph, Multigraph, connected_components


@dataclass(frozen=True)
class SpanningForest:
    """Rooted spanning forest of a multigraph.

    Edge references are indices into ``Multigraph.parallel_edges``.
    ``parent`` and ``parent_edge`` hold ``None`` at roots.
    """

    roots: tuple[int, ...]
    parent: tuple[int | None, ...]
    parent_edge: tuple[int | None, ...]
    depth: tuple[int, ...]
    tree_edges: frozenset[int]

    def root_of(self, v: int) -> int:
        while self.parent[v] is not None:
            v = self.parent[v]
        return v

    def path_to_root(self, v: int) -> tuple[list[int], list[int]]:
        """Vertices and edges on the tree path from ``v`` up to its root."""
        verts, edges = [v], []
        while self.parent[v] is not None:
            edges.append(self.parent_edge[v])
            v = self.parent[v]
            verts.append(v)
        return verts, edges

    def tree_path(self, a: int, b: int) -> tuple[list[int], list[int]]:
        """Unique tree path from ``a`` to ``b`` as (vertices, edges).

        Raises ``ValueError`` when the two vertices lie in different trees.
        """
        up_a, ea = [a], []
        up_b, eb = [b], []
        x, y = a, b
        while self.depth[x] > self.depth[y]:
            ea.append(self.parent_edge[x])
            x = self.parent[x]
            up_a.append(x)
        while self.depth[y] > self.depth[x]:
            eb.append(self.parent_edge[y])
            y = self.parent[y]
            up_b.append(y)
        while x != y:
            if self.parent[x] is None:
                raise ValueError(f"vertices {a} and {b} are in different trees")
            ea.append(self.parent_edge[x])
            x = self.parent[x]
            up_a.append(x)
            eb.append(self.parent_edge[y])
            y = self.parent[y]
            up_b.append(y)
        verts = up_a + up_b[-2::-1]
        return verts, ea + eb[::-1]


@dataclass(frozen=True)
class ClosedWalk:
    """Walk ``vertices[0] -edges[0]- vertices[1] ...`` with equal ends."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class CycleBasis:
    cycles: tuple[ClosedWalk, ...]
    non_tree_edges: tuple[int, ...]


def spanning_forest(m: Multigraph) -> SpanningForest:
    n = m.vertex_count
    parent: list[int | None] = [None] * n
    parent_edge: list[int | None] = [None] * n
    depth = [0] * n
    seen = [False] * n
    roots = []
    tree = set()
    inc = m.incidence
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        roots.append(s)
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for e in inc[x]:
                y = m.other_end(e, x)
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    parent_edge[y] = e
                    depth[y] = depth[x] + 1
                    tree.add(e)
                    queue.append(y)
    return SpanningForest(
        roots=tuple(roots),
        parent=tuple(parent),
        parent_edge=tuple(parent_edge),
        depth=tuple(depth),
        tree_edges=frozenset(tree),
    )


def cycle_rank_simple(g: LabeledGraph) -> int:
    """Cycle rank ``|E| - |V| + c`` of the underlying simple graph."""
    return g.size - g.order + len(connected_components(g))


def label_excess(g: LabeledGraph) -> int:
    """Extra independent cycles contributed by edges of label >= 2."""
    return sum(e.label - 1 for e in g.edges if e.label >= 2)


def labeled_cycle_rank(g: LabeledGraph) -> int:
    """Cycle rank of a labeled graph: simple rank plus ``sum(L(e) - 1)``.

    Zero exactly when the underlying graph is a forest with every label 1.
    """
    return cycle_rank_simple(g) + label_excess(g)


def multigraph_cycle_rank(m: Multigraph) -> int:
    return len(m.parallel_edges) - m.vertex_count + len(connected_components(m))


def cycle_basis(m: Multigraph) -> CycleBasis:
    """Fundamental cycles of a connected multigraph, one per non-tree edge.

    The cycle for non-tree edge ``e = (a, b)`` walks the tree path from the
    root to ``a``, crosses ``e`` and returns along the tree path from ``b``.
    """
    comps = connected_components(m)
    if len(comps) != 1:
        raise Disconnected(f"cycle basis needs a connected multigraph, found {len(comps)} components")
    forest = spanning_forest(m)
    root = forest.roots[0]
    cycles = []
    non_tree = tuple(i for i in range(len(m.parallel_edges)) if i not in forest.tree_edges)
    for e in non_tree:
        cycles.append(fundamental_walk(m, forest, e, root))
    return CycleBasis(tuple(cycles), non_tree)


def fundamental_walk(m: Multigraph, forest: SpanningForest, edge: int, base: int) -> ClosedWalk:
    """Closed walk at ``base``: tree path to ``u``, edge ``u -> v``, tree path back."""
    u, v, _ = m.parallel_edges[edge]
    va, ea = forest.tree_path(base, u)
    vb, eb = forest.tree_path(v, base)
    return ClosedWalk(tuple(va + vb), tuple(ea + [edge] + eb))
