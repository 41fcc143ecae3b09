"""Brute-force reference implementations used to cross-check the library.

Everything here recomputes results straight from the definitions by plain
enumeration (itertools over vertex sequences and subsets) and shares no
algorithmic machinery with the package under test.
"""
from itertools import combinations, permutations


def arc_set(digraph):
    return set(digraph.arcs)


def color_map(colored):
    return {(u, v): c for u, v, c in colored.colored_arcs()}


def oracle_obstructions(colored, vertices):
    """Obstruction positions of a raw vertex sequence."""
    rho = color_map(colored)
    good = set(colored.pattern.arcs)
    cols = [rho[(vertices[i], vertices[i + 1])] for i in range(len(vertices) - 1)]
    steps = len(cols)
    closed = len(vertices) >= 3 and vertices[0] == vertices[-1]
    first = 0 if closed else 1
    # cols[i - 1] wraps to the last color at i = 0, matching the modular rule
    return {i for i in range(first, steps) if (cols[i - 1], cols[i]) not in good}


def oracle_h_length(colored, vertices):
    closed = len(vertices) >= 3 and vertices[0] == vertices[-1]
    blocked = len(oracle_obstructions(colored, vertices))
    return blocked if closed else blocked + 1


def oracle_simple_paths(digraph, u, v, max_length=None):
    """Every simple uv-path as a vertex tuple, by permutation filtering."""
    arcs = arc_set(digraph)
    cap = digraph.n - 1 if max_length is None else min(max_length, digraph.n - 1)
    others = [x for x in range(digraph.n) if x != u and x != v]
    found = []
    for extra in range(cap):
        for middle in permutations(others, extra):
            seq = (u, *middle, v)
            if all((seq[i], seq[i + 1]) in arcs for i in range(len(seq) - 1)):
                found.append(seq)
    return found


def oracle_cycles(digraph, max_length):
    """Every cycle of length <= max_length, rotated to start at its
    minimum vertex, as a vertex tuple with the closing vertex repeated."""
    arcs = arc_set(digraph)
    found = set()
    for size in range(2, max_length + 1):
        for combo in combinations(range(digraph.n), size):
            for middle in permutations(combo[1:]):
                seq = (combo[0], *middle, combo[0])
                if all((seq[i], seq[i + 1]) in arcs for i in range(size)):
                    found.add(seq)
    return found


def oracle_min_h_length(colored, u, v):
    lengths = [
        oracle_h_length(colored, p) for p in oracle_simple_paths(colored.base, u, v)
    ]
    return min(lengths) if lengths else None


def oracle_closure(colored, k):
    arcs = set()
    for u in range(colored.base.n):
        for v in range(colored.base.n):
            if u != v:
                best = oracle_min_h_length(colored, u, v)
                if best is not None and best <= k - 1:
                    arcs.add((u, v))
    return arcs


def oracle_reachable(digraph):
    n = digraph.n
    reach = [[False] * n for _ in range(n)]
    for u, v in digraph.arcs:
        reach[u][v] = True
    for w in range(n):
        for u in range(n):
            if reach[u][w]:
                for v in range(n):
                    if reach[w][v]:
                        reach[u][v] = True
    return reach


def oracle_components(digraph):
    """Strong components as frozensets, via mutual reachability."""
    reach = oracle_reachable(digraph)
    leftover = set(range(digraph.n))
    comps = []
    while leftover:
        u = min(leftover)
        comp = {u} | {
            v for v in leftover if v != u and reach[u][v] and reach[v][u]
        }
        comps.append(frozenset(comp))
        leftover -= comp
    return comps


def oracle_is_kernel(digraph, members):
    arcs = arc_set(digraph)
    for a, b in combinations(sorted(members), 2):
        if (a, b) in arcs or (b, a) in arcs:
            return False
    return all(
        any((v, s) in arcs for s in members)
        for v in range(digraph.n)
        if v not in members
    )


def oracle_kernels(digraph):
    return [
        frozenset(s)
        for bits in range(1 << digraph.n)
        if oracle_is_kernel(digraph, s := {v for v in range(digraph.n) if bits >> v & 1})
    ]


def oracle_is_khl_kernel(colored, members, k, l):
    base = colored.base
    for a in members:
        for b in members:
            if a != b:
                for path in oracle_simple_paths(base, a, b):
                    if oracle_h_length(colored, path) < k:
                        return False
    for v in range(base.n):
        if v not in members:
            lengths = [
                oracle_h_length(colored, path)
                for s in members
                for path in oracle_simple_paths(base, v, s)
            ]
            if not lengths or min(lengths) > l:
                return False
    return True


def oracle_khl_kernels(colored, k, l):
    n = colored.base.n
    return [
        frozenset(s)
        for bits in range(1 << n)
        if oracle_is_khl_kernel(
            colored, s := {v for v in range(n) if bits >> v & 1}, k, l
        )
    ]


def oracle_asymmetric_cycles(digraph):
    """Cycles in which no arc has its reverse present."""
    arcs = arc_set(digraph)
    return [
        seq
        for seq in sorted(oracle_cycles(digraph, digraph.n))
        if all((seq[i + 1], seq[i]) not in arcs for i in range(len(seq) - 1))
    ]


def random_digraph(rng, max_n, arc_probability=0.5):
    from hkernels import Digraph

    n = rng.randint(2, max_n)
    arcs = [
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and rng.random() < arc_probability
    ]
    return Digraph(n, arcs)


def random_colored_instance(rng, max_n, max_colors=3, pattern_density=0.5):
    from hkernels import HColoredDigraph, PatternDigraph

    base = random_digraph(rng, max_n)
    m = rng.randint(1, max_colors)
    pattern_arcs = [
        (a, b) for a in range(m) for b in range(m) if rng.random() < pattern_density
    ]
    colors = {arc: rng.randrange(m) for arc in base.arcs}
    return HColoredDigraph(base, PatternDigraph(m, pattern_arcs), colors)
