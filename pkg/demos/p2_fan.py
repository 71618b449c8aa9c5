"""
The fan of the path on two nodes
================================

The cubeahedron of P2 is a square with one corner cut off, so its normal
fan has five rays and five 2-dimensional cones. In dimension two the walls
are the rays themselves.
"""

from cubeahedra import build_fan, classify_fan, enumerate_walls, parse_graph
from cubeahedra.fan import label_key

G = parse_graph("2\n1 2\n")
fan = build_fan(G)

# rays: tubes first (by size, then lexicographically), then the bars
for label, vec in zip(fan.labels, fan.rays):
    print(f"{str(label):6} {vec}")

# each maximal cone is a set of n pairwise compatible labels
for cone in fan.maximal_cones:
    print([str(x) for x in sorted(cone, key=label_key)])

# e_J + e_J' + sum(a_i e_i) = 0 on every wall; the number is 2 + sum(a_i)
for wall in enumerate_walls(fan):
    print(wall, "a =", wall.coefficients)

print(classify_fan(fan).verdict.value)  # Fano: every number is positive
