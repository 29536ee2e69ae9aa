"""Survey the formality level of random connected graphs.

Draws seeded G(n, p) graphs, cross-checks each against its flag complex,
and tabulates how often each formality level appears.  Output is
deterministic for a fixed seed.

    python demos/random_survey.py [seed] [count]
"""

import random
import sys
from collections import Counter
from fractions import Fraction

from formality import cross_check, random_graph

seed = int(sys.argv[1]) if len(sys.argv) > 1 else 7
count = int(sys.argv[2]) if len(sys.argv) > 2 else 40

rng = random.Random(seed)
levels = Counter()
disagreements = 0
drawn = 0
while sum(levels.values()) < count:
    n = rng.randint(4, 7)
    g = random_graph(n, Fraction(1, 2), rng)
    drawn += 1
    if not g.edges or not g.is_connected():
        continue
    rep = cross_check(g)
    levels[(rep.rank, rep.formality_level)] += 1
    disagreements += not rep.agreement

print(f"seed={seed}: {count} connected graphs out of {drawn} drawn")
print("rank  level  graphs")
for (r, level), k in sorted(levels.items()):
    tag = "fully formal" if level == r else ""
    print(f"{r:>4}  {level:>5}  {k:>6}  {tag}")
print("disagreements:", disagreements)
