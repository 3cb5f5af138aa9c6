#!/usr/bin/env python3
"""The two-chart torus atlas end to end: rank, free presentation, report, DOT."""

from atlasgraph.classify import classify
from atlasgraph.cli import render_dot
from atlasgraph.cycles import cycle_rank_simple, labeled_cycle_rank
from atlasgraph.graph_core import new_labeled_graph
from atlasgraph.pi1 import presentation

torus = new_labeled_graph([2, 2], [(0, 1, 3)], uniform_dim=2)

print("simple rank:", cycle_rank_simple(torus))
print("labeled rank:", labeled_cycle_rank(torus))
pres = presentation(torus, basepoint=0)
edges = pres.multigraph.parallel_edges
for i, walk in enumerate(pres.generator_walks):
    print(f"a{i}: vertices {walk.vertices}, parallel edges {[edges[e] for e in walk.edges]}")
print(classify(torus))
print(render_dot(torus), end="")
