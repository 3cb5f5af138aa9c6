"""Free presentations of the fundamental group of a labeled graph.

The labeled graph is expanded into its multigraph and a spanning tree is
fixed. Each non-tree edge ``e = (u, v)`` gives one free generator, realized
by the loop at the basepoint that follows the tree to ``u``, crosses ``e``
from ``u`` to ``v`` and returns through the tree. There are no relators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .cycles import ClosedWalk, fundamental_walk, spanning_forest
from .errors import BadBasepoint
from .graph_core import LabeledGraph, Multigraph, expand_multigraph, require_connected

Letter = tuple[int, int]


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for gen, exp in self.letters:
            if exp not in (1, -1) or gen < 0:
                raise ValueError(f"bad letter ({gen}, {exp})")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return reduce_word(GroupWord(self.letters + other.letters))

    def inverse(self) -> GroupWord:
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"a{g}" if e == 1 else f"a{g}^-1" for g, e in self.letters)


def reduce_word(w: GroupWord | Iterable[Letter]) -> GroupWord:
    """Freely reduce a word by cancelling adjacent ``x x^-1`` pairs."""
    letters = w.letters if isinstance(w, GroupWord) else tuple(w)
    stack: list[Letter] = []
    for gen, exp in letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return GroupWord(tuple(stack))


@dataclass(frozen=True)
class FreeGroupPresentation:
    generator_count: int
    generator_walks: tuple[ClosedWalk, ...]
    basepoint: int
    generator_edges: tuple[int, ...] = ()
    multigraph: Multigraph | None = field(default=None, compare=False, repr=False)

    @property
    def relators(self) -> tuple[GroupWord, ...]:
        return ()

    def word_of_walk(self, walk: ClosedWalk) -> GroupWord:
        """Read a closed walk as a reduced word in the generators.

        Tree edges contribute nothing; generator ``i`` contributes ``a_i``
        when its edge is crossed from the smaller to the larger endpoint.
        """
        if self.multigraph is None:
            raise ValueError("presentation carries no multigraph")
        index = {e: i for i, e in enumerate(self.generator_edges)}
        letters = []
        for step, e in enumerate(walk.edges):
            if e in index:
                u, _, _ = self.multigraph.parallel_edges[e]
                letters.append((index[e], 1 if walk.vertices[step] == u else -1))
        return reduce_word(letters)


def presentation(g: LabeledGraph, basepoint: int = 0) -> FreeGroupPresentation:
    require_connected(g)
    if not (isinstance(basepoint, int) and 0 <= basepoint < g.order):
        raise BadBasepoint(f"basepoint {basepoint!r} is not a vertex of a {g.order}-vertex graph")
    m = expand_multigraph(g)
    forest = spanning_forest(m)
    gens = tuple(i for i in range(len(m.parallel_edges)) if i not in forest.tree_edges)
    walks = tuple(fundamental_walk(m, forest, e, basepoint) for e in gens)
    return FreeGroupPresentation(
        generator_count=len(gens),
        generator_walks=walks,
        basepoint=basepoint,
        generator_edges=gens,
        multigraph=m,
    )


def group_rank(p: FreeGroupPresentation) -> int:
    return p.generator_count


def is_trivial(p: FreeGroupPresentation) -> bool:
    return p.generator_count == 0
