"""
A census of small labelled graphs
=================================

Run both classifiers over every labelled graph with at most five nodes
(1099 graphs, a few seconds) and tally the three classes. The same run up
to six nodes takes a few minutes; ``cubeahedra crosscheck --max-nodes 6``
does it from the shell.
"""

import io
import json
from collections import Counter

from cubeahedra import cross_validate

sink = io.StringIO()
report = cross_validate(5, out=sink)
print(report.summary())
print(f"{report.seconds:.1f} s")

records = [json.loads(line) for line in sink.getvalue().splitlines()]

# per node count, how many graphs land in each class
table = Counter((r["n"], r["fan_class"]) for r in records)
for n in range(1, 6):
    print(n, {cls: table[n, cls] for cls in ("Fano", "WeakFanoNotFano", "NotWeakFano")})

# the largest fan seen
big = max(records, key=lambda r: r["cones"])
print("most cones:", big["graph"], big["cones"], "cones,", big["walls"], "walls")
