"""
Fan side versus graph side
==========================

Classify a handful of small graphs twice: once from the minimum wall
number of the fan, once from the graph alone (component sizes and
forbidden induced subgraphs). The two columns always agree.
"""

from cubeahedra import Graph, build_fan, classify_fan, find_forbidden, graph_verdict

examples = {
    "P2": Graph.from_edges(2, [(1, 2)]),
    "P2 + K1": Graph.from_edges(3, [(1, 2)]),
    "P3": Graph.from_edges(3, [(1, 2), (2, 3)]),
    "K4": Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
    "C4": Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)]),
    "claw": Graph.from_edges(4, [(1, 2), (1, 3), (1, 4)]),
    "diamond": Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]),
    "C5": Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]),
}

print(f"{'graph':9}{'cones':>7}{'min':>5}  {'fan':17}{'graph':17}forbidden")
for name, G in examples.items():
    fan = build_fan(G)
    c = classify_fan(fan)
    w = find_forbidden(G)
    print(f"{name:9}{fan.cone_count:>7}{c.min_number:>5}  {c.verdict.value:17}{graph_verdict(G).value:17}{w or '-'}")

# a wall attaining the minimum, for C5
print(classify_fan(build_fan(examples["C5"])).wall)
