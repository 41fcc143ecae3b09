"""
Scoring walks against a color pattern
=====================================

A colored digraph pairs every arc with a color, and a separate pattern
digraph says which color can follow which.  Walking along arcs, each spot
where the incoming color is not allowed to hand over to the outgoing one
is an obstruction, and the number of obstructions fixes how "long" the
walk is in pattern terms.
"""
from hkernels import (
    Digraph,
    HColoredDigraph,
    PatternDigraph,
    Walk,
    h_length,
    min_h_length_path,
    obstructions,
)

# Two colors.  The pattern only lets color 0 hand over to color 1, plus a
# loop on 1, so runs of 0s are constantly obstructed while 0,1,1,... flows.
pattern = PatternDigraph(2, [(0, 1), (1, 1)])

# A 4-cycle with a chord, colored so the cycle alternates awkwardly.
base = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
colors = {(0, 1): 0, (1, 2): 1, (2, 3): 1, (3, 0): 0, (0, 2): 0}
colored = HColoredDigraph(base, pattern, colors)

walk = Walk((0, 1, 2, 3))
print(f"open walk {walk.vertices}")
print("  arc colors:    0, 1, 1")
print(f"  obstructions:  {sorted(obstructions(colored, walk))}")
print(f"  pattern length: {h_length(colored, walk)} (obstructions + 1)")

# Closing the walk brings one extra test: the seam where the final color
# meets the first one.  Here color 0 into color 0 is not in the pattern.
cycle = Walk((0, 1, 2, 3, 0))
print(f"\nclosed walk {cycle.vertices}")
print(f"  obstructions:  {sorted(obstructions(colored, cycle))}")
print(f"  pattern length: {h_length(colored, cycle)} (obstruction count)")

# Between fixed endpoints, different routes can score very differently.
# The chord 0 -> 2 is a single arc, but the two-arc route through 1 has
# the same score because its colors chain cleanly.
for route in (Walk((0, 2)), Walk((0, 1, 2))):
    print(f"\nroute {route.vertices}: pattern length {h_length(colored, route)}")

path, value = min_h_length_path(colored, 0, 3, 4)
print(f"\nbest-scoring path 0 -> 3: {path.vertices} at pattern length {value}")
