"""
Probing for counterexamples
===========================

For quasi-transitive digraphs the kernel threshold k=4 is a theorem.
Whether r-quasi-transitive digraphs always admit a kernel once k reaches
r+2 is open, so instead of verifying we search: random members of the
family, arbitrary colorings, no repair pass, looking for one instance
with no kernel at all.
"""
from hkernels import find_khl_kernel, instance_from_obj, search_conjecture

result = search_conjecture(r=3, k=5, n_max=7, budget=300, seed=7)

print(f"family: {result.r}-quasi-transitive, threshold k={result.k}")
print(f"tested {result.instances_tested} instances up to n={result.n_max}")

if result.found:
    # A hit ships with a transcript of the failed search: the closure and
    # every candidate set with the vertices it failed to absorb.
    colored = instance_from_obj(result.counterexample["colored"])
    print("counterexample found; replaying the search from the artifact:")
    print(f"  kernel search says: {find_khl_kernel(colored, result.k)}")
    print(f"  candidates examined: {len(result.certificate['candidates'])}")
else:
    print("no counterexample in this budget")

# The search is honest about its own seeds, so a larger sweep can be
# sharded by seed and merged later.
for seed in (11, 12, 13):
    result = search_conjecture(r=2, k=4, n_max=6, budget=100, seed=seed)
    print(f"seed {seed}: tested {result.instances_tested}, "
          f"found={result.found}")
