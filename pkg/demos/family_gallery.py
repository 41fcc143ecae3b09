"""
A tour of the digraph families
==============================

Every generator draws a random member of its family from a seed, and the
matching recognizer confirms membership.  Recognizers also explain their
refusals, which is handy when probing the boundaries between families.
"""
from hkernels import (
    ClassLabel,
    Digraph,
    GeneratorSpec,
    generate,
    generate_h_coloring,
    multipartite_partition,
    recognize,
    repair_h_cycles,
)

SEED = 424242

labels = [
    ClassLabel("tournament"),
    ClassLabel("semicomplete"),
    ClassLabel("r_transitive", r=2),
    ClassLabel("r_transitive", r=3),
    ClassLabel("quasi_transitive"),
    ClassLabel("r_quasi_transitive", r=3),
    ClassLabel("multipartite_tournament", parts=3),
    ClassLabel("local_in_tournament"),
    ClassLabel("local_out_tournament"),
    ClassLabel("local_tournament"),
]

for label in labels:
    digraph = generate(GeneratorSpec(label, 7, SEED))
    ok, _ = recognize(digraph, label)
    print(f"{str(label):32s} n={digraph.n}  arcs={len(digraph.arcs):2d}  ok={ok}")

# Recognizers return a witness for failure.  A directed triangle is not
# 2-transitive: it has a two-arc path whose endpoints are not an arc.
triangle = Digraph(3, [(0, 1), (1, 2), (2, 0)])
ok, witness = recognize(triangle, ClassLabel("r_transitive", r=2))
print(f"\ntriangle as 2-transitive: ok={ok}, witness={witness}")

# Multipartite tournaments carry a recoverable partition: adjacency is
# exactly "different part".
multi = generate(GeneratorSpec(ClassLabel("multipartite_tournament", parts=3), 7, SEED))
parts = multipartite_partition(multi)
print(f"\nrecovered parts: {[sorted(part) for part in parts]}")

# Colorings are layered on separately, and a repair pass can extend the
# pattern until every short cycle chains cleanly, which some of the
# existence suites require as a hypothesis.
digraph = generate(GeneratorSpec(ClassLabel("semicomplete"), 6, SEED))
colored = generate_h_coloring(digraph, 3, 0.4, SEED + 1)
repaired = repair_h_cycles(colored, 3)
print(
    f"\npattern arcs before repair: {len(colored.pattern.arcs)}, "
    f"after: {len(repaired.pattern.arcs)}"
)
