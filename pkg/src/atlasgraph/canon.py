"""Canonical forms, isomorphism and automorphisms of labeled graphs.

The canonical form is the lexicographically least encoding of the graph
over all vertex orders reachable by individualization-refinement:

* vertices are colored by ``(dim, sorted incident labels)`` and the coloring
  is refined until stable (neighbour colors are weighted by edge label);
* the first non-singleton color cell is split by individualizing each of its
  vertices in turn, recursing to discrete colorings;
* every discrete coloring is a vertex order, encoded as dims followed by the
  upper-triangular label matrix; the least encoding wins.

Refinement and cell choice are isomorphism-invariant, so the set of leaf
encodings, and hence its minimum, depends only on the isomorphism class.
Automorphisms discovered at equal leaves prune subtrees rooted at vertices
in the same orbit.

Colors are stored as cell offsets: a vertex's color is the number of
vertices whose refinement key is strictly smaller. Splitting a cell never
moves other cells, which keeps individualized vertices at fixed positions.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Sequence

from .errors import TooLarge
from .graph_core import LabeledGraph, new_labeled_graph

DEFAULT_AUTOMORPHISM_BOUND = 10
_MAX_FIELD = 0xFFFF


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Byte encoding: big-endian uint16 fields ``n, dims[0..n), upper
    triangle of the label matrix in row-major order`` (0 = no edge)."""

    data: bytes

    def hex(self) -> str:
        return self.data.hex()

    @classmethod
    def fromhex(cls, text: str) -> CanonicalForm:
        return cls(bytes.fromhex(text))

    @property
    def order(self) -> int:
        return struct.unpack_from(">H", self.data)[0]

    def decode(self) -> LabeledGraph:
        """Graph whose vertex ``i`` sits at canonical position ``i``."""
        if len(self.data) < 2 or len(self.data) % 2:
            raise ValueError("malformed canonical form")
        vals = struct.unpack(f">{len(self.data) // 2}H", self.data)
        n = vals[0]
        if len(vals) != 1 + n + n * (n - 1) // 2:
            raise ValueError("malformed canonical form")
        dims = list(vals[1 : n + 1])
        it = iter(vals[n + 1 :])
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                lab = next(it)
                if lab:
                    edges.append((i, j, lab))
        return new_labeled_graph(dims, edges)


class _Graph:
    """Compact view of a labeled graph used by the search."""

    __slots__ = ("n", "dims", "mat", "nbrs")

    def __init__(self, n: int, dims: Sequence[int], mat: Sequence[Sequence[int]]):
        self.n = n
        self.dims = tuple(dims)
        self.mat = mat
        self.nbrs = tuple(
            tuple((u, mat[v][u]) for u in range(n) if mat[v][u]) for v in range(n)
        )

    @classmethod
    def of(cls, g: LabeledGraph) -> _Graph:
        for d in g.dims:
            if d > _MAX_FIELD:
                raise ValueError(f"dimension {d} exceeds encodable range")
        for e in g.edges:
            if e.label > _MAX_FIELD:
                raise ValueError(f"label {e.label} exceeds encodable range")
        return cls(g.order, g.dims, g.label_matrix)

    def seed(self, extra: Sequence[int] | None = None) -> list[int]:
        keys = [
            (self.dims[v], tuple(sorted(lab for _, lab in self.nbrs[v])))
            for v in range(self.n)
        ]
        if extra is not None:
            keys = [(extra[v], keys[v]) for v in range(self.n)]
        return _offsets(keys)

    def refine(self, colors: list[int]) -> list[int]:
        n = self.n
        nbrs = self.nbrs
        cells = len(set(colors))
        while cells < n:
            keys = [
                (colors[v], tuple(sorted([(colors[u], lab) for u, lab in nbrs[v]])))
                for v in range(n)
            ]
            new = _offsets(keys)
            new_cells = len(set(new))
            colors = new
            if new_cells == cells:
                break
            cells = new_cells
        return colors

    def code(self, order: Sequence[int]) -> tuple[int, ...]:
        mat = self.mat
        n = self.n
        out = [self.dims[v] for v in order]
        for i in range(n):
            row = mat[order[i]]
            out.extend(row[order[j]] for j in range(i + 1, n))
        return tuple(out)


def _offsets(keys: list) -> list[int]:
    first: dict = {}
    for i, k in enumerate(sorted(keys)):
        if k not in first:
            first[k] = i
    return [first[k] for k in keys]


def _target_cell(colors: list[int]) -> list[int] | None:
    n = len(colors)
    size = [0] * n
    for c in colors:
        size[c] += 1
    best = None
    for c in range(n):
        if size[c] > 1:
            best = c
            break
    if best is None:
        return None
    return [v for v in range(n) if colors[v] == best]


def _individualize(colors: list[int], v: int) -> list[int]:
    c = colors[v]
    out = [x + 1 if x == c else x for x in colors]
    out[v] = c
    return out


class _Search:
    def __init__(self, graph: _Graph):
        self.g = graph
        self.first_code: tuple | None = None
        self.first_order: list[int] = []
        self.best_code: tuple | None = None
        self.best_order: list[int] = []
        self.autos: list[list[int]] = []

    def run(self, colors: list[int]) -> None:
        self._node(self.g.refine(colors), [])

    def _leaf(self, colors: list[int]) -> None:
        order = [0] * self.g.n
        for v, c in enumerate(colors):
            order[c] = v
        code = self.g.code(order)
        if self.first_code is None:
            self.first_code = self.best_code = code
            self.first_order = self.best_order = order
            return
        if code == self.first_code:
            self._record(self.first_order, order)
        elif code == self.best_code:
            self._record(self.best_order, order)
        elif code < self.best_code:
            self.best_code = code
            self.best_order = order

    def _record(self, a: list[int], b: list[int]) -> None:
        perm = [0] * self.g.n
        for x, y in zip(a, b):
            perm[x] = y
        self.autos.append(perm)

    def _orbit_root(self, prefix: list[int]) -> list[int]:
        n = self.g.n
        root = list(range(n))

        def find(x):
            while root[x] != x:
                root[x] = root[root[x]]
                x = root[x]
            return x

        for perm in self.autos:
            if all(perm[p] == p for p in prefix):
                for x in range(n):
                    a, b = find(x), find(perm[x])
                    if a != b:
                        root[max(a, b)] = min(a, b)
        return [find(x) for x in range(n)]

    def _node(self, colors: list[int], prefix: list[int]) -> None:
        cell = _target_cell(colors)
        if cell is None:
            self._leaf(colors)
            return
        done_roots: set[int] = set()
        seen_autos = -1
        roots: list[int] = []
        for w in cell:
            if done_roots:
                if len(self.autos) != seen_autos:
                    seen_autos = len(self.autos)
                    roots = self._orbit_root(prefix)
                    done_roots = {roots[x] for x in done_roots}
                if roots[w] in done_roots:
                    continue
            done_roots.add(roots[w] if roots else w)
            self._node(self.g.refine(_individualize(colors, w)), prefix + [w])


def _search(graph: _Graph, colors: list[int]) -> _Search:
    s = _Search(graph)
    s.run(colors)
    return s


def _pack(n: int, code: tuple[int, ...]) -> bytes:
    return struct.pack(f">{len(code) + 1}H", n, *code)


def canonical_labeling(g: LabeledGraph) -> tuple[CanonicalForm, list[int]]:
    """Canonical form plus the vertex order realizing it.

    ``order[i]`` is the vertex of ``g`` placed at canonical position ``i``.
    """
    graph = _Graph.of(g)
    if graph.n == 0:
        return CanonicalForm(_pack(0, ())), []
    s = _search(graph, graph.seed())
    return CanonicalForm(_pack(graph.n, s.best_code)), list(s.best_order)


def canonical_form(g: LabeledGraph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def are_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    if g1.order != g2.order or g1.size != g2.size:
        return False
    return canonical_form(g1) == canonical_form(g2)


def _transversals(g: LabeledGraph, bound: int) -> list[list[list[int]]]:
    """Stabilizer chain of Aut(g) as one transversal per base point.

    Every automorphism is ``t_1 o t_2 o ... o t_k`` for exactly one choice of
    ``t_i`` from each list.
    """
    if g.order > bound:
        raise TooLarge(f"automorphism search limited to {bound} vertices, graph has {g.order}")
    graph = _Graph.of(g)
    n = graph.n
    colors = graph.refine(graph.seed())
    levels = []
    while True:
        cell = _target_cell(colors)
        if cell is None:
            return levels
        base = cell[0]
        ref = _search(graph, _individualize(colors, base))
        level = [list(range(n))]
        for w in cell[1:]:
            s = _search(graph, _individualize(colors, w))
            if s.best_code == ref.best_code:
                perm = [0] * n
                for x, y in zip(ref.best_order, s.best_order):
                    perm[x] = y
                level.append(perm)
        levels.append(level)
        colors = graph.refine(_individualize(colors, base))


def automorphism_group_order(g: LabeledGraph, bound: int = DEFAULT_AUTOMORPHISM_BOUND) -> int:
    """Number of vertex bijections preserving dims, adjacency and labels."""
    return prod(len(level) for level in _transversals(g, bound))


def automorphisms(g: LabeledGraph, bound: int = DEFAULT_AUTOMORPHISM_BOUND) -> list[tuple[int, ...]]:
    """All automorphisms as tuples ``perm`` with ``perm[v]`` the image of ``v``."""
    levels = _transversals(g, bound)
    n = g.order
    out = []
    for choice in product(*levels):
        img = list(range(n))
        for t in reversed(choice):
            img = [t[x] for x in img]
        out.append(tuple(img))
    return out
