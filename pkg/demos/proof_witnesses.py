"""
Walls from the proofs
=====================

Each obstruction comes with an explicit wall base. For a component with at
least three nodes the wall has number 0; for an induced long cycle, a
diamond or a claw it has number -1. The helpers build the base, find the
wall in the fan and solve its relation exactly.
"""

from cubeahedra import Graph, witness_nerve, witness_wall
from cubeahedra.fan import label_key
from cubeahedra.forbidden import extract_cycle_or_diamond
from cubeahedra.graphs import nodeset

cases = [
    ("component", Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])),
    ("cycle", Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)])),
    ("diamond", Graph.from_edges(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])),
    ("claw", Graph.from_edges(5, [(1, 2), (1, 3), (1, 4), (4, 5)])),
]
for pattern, G in cases:
    N, expected = witness_nerve(G, pattern)
    wall, _ = witness_wall(G, pattern)
    print(f"{pattern:10} N = {[str(x) for x in sorted(N, key=label_key)]}")
    print(f"{'':10} neighbours {wall.neighbors[0]}, {wall.neighbors[1]}; number {wall.number} (expected {expected})")

# two tubes meeting in a disconnected set always hide a long cycle or a diamond
G = Graph.from_edges(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 6)])
print(extract_cycle_or_diamond(G, nodeset([1, 2, 3, 4]), nodeset([4, 5, 6, 1])))
