"""Recognizers and seeded generators for tournament-like digraph families.

Family membership is always decided by the recognizer; the generators are
constructions that provably land in the family (random orientation, closure
to a fixpoint, round layouts) and they re-run the recognizer before
returning, so a construction bug cannot leak a mislabeled instance.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .coloring import HColoredDigraph, PatternDigraph
from .digraph import Arc, Digraph, enumerate_cycles
from .rng import make_rng

__all__ = [
    "CLASS_KINDS",
    "ClassLabel",
    "GeneratorSpec",
    "recognize",
    "multipartite_partition",
    "generate",
    "generate_h_coloring",
    "repair_h_cycles",
]

CLASS_KINDS = (
    "semicomplete",
    "tournament",
    "r_transitive",
    "quasi_transitive",
    "r_quasi_transitive",
    "multipartite_tournament",
    "local_in_tournament",
    "local_out_tournament",
    "local_tournament",
)

_NEEDS_R = ("r_transitive", "r_quasi_transitive")


@dataclass(frozen=True)
class ClassLabel:
    """A family name plus its numeric parameters, when the family has any."""

    kind: str
    r: int | None = None
    parts: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in CLASS_KINDS:
            raise ValueError(f"unknown class kind {self.kind!r}")
        if self.kind in _NEEDS_R:
            if self.r is None or self.r < 2:
                raise ValueError(f"{self.kind} needs r >= 2")
        elif self.r is not None:
            raise ValueError(f"{self.kind} takes no r parameter")
        if self.kind == "multipartite_tournament":
            if self.parts is not None and self.parts < 2:
                raise ValueError("multipartite_tournament needs parts >= 2")
        elif self.parts is not None:
            raise ValueError(f"{self.kind} takes no parts parameter")

    def __str__(self) -> str:
        inner = []
        if self.r is not None:
            inner.append(f"r={self.r}")
        if self.parts is not None:
            inner.append(f"parts={self.parts}")
        return self.kind + (f"({', '.join(inner)})" if inner else "")


@dataclass(frozen=True)
class GeneratorSpec:
    """Everything a seeded family generator needs to build one digraph.

    ``arc_density`` steers the random base digraph for the closure-built
    families and the probability of symmetric duplicates for semicomplete
    digraphs; the pure orientation families ignore it.
    """

    label: ClassLabel
    n: int
    seed: int
    arc_density: float = 0.5
    h_colors: int = 3
    h_density: float = 0.5

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.seed < 0:
            raise ValueError("seed must be a nonnegative integer")
        if not 0.0 < self.arc_density <= 1.0:
            raise ValueError("arc_density must lie in (0, 1]")
        if self.h_colors < 1:
            raise ValueError("h_colors must be at least 1")
        if not 0.0 <= self.h_density <= 1.0:
            raise ValueError("h_density must lie in [0, 1]")
        if self.label.kind == "multipartite_tournament":
            parts = self.label.parts
            if parts is None:
                raise ValueError("generation needs an explicit parts count")
            if parts > self.n:
                raise ValueError("parts cannot exceed n")


# ---- recognizers -------------------------------------------------


def _simple_paths_of_length(digraph: Digraph, length: int) -> Iterator[tuple[int, ...]]:
    """All simple paths with exactly `length` arcs, as vertex tuples."""
    path: list[int] = []

    def extend(x: int, visited: int, left: int) -> Iterator[tuple[int, ...]]:
        if left == 0:
            yield tuple(path)
            return
        for y in digraph.out_neighbors(x):
            bit = 1 << y
            if not visited & bit:
                path.append(y)
                yield from extend(y, visited | bit, left - 1)
                path.pop()

    for s in range(digraph.n):
        path.append(s)
        yield from extend(s, 1 << s, length)
        path.pop()


def _adjacent(digraph: Digraph, u: int, v: int) -> bool:
    return digraph.has_arc(u, v) or digraph.has_arc(v, u)


def _check_semicomplete(digraph: Digraph) -> tuple[bool, tuple | None]:
    for u in range(digraph.n):
        for v in range(u + 1, digraph.n):
            if not _adjacent(digraph, u, v):
                return False, ("nonadjacent_pair", u, v)
    return True, None


def _check_tournament(digraph: Digraph) -> tuple[bool, tuple | None]:
    for u in range(digraph.n):
        for v in range(u + 1, digraph.n):
            forward = digraph.has_arc(u, v)
            backward = digraph.has_arc(v, u)
            if not forward and not backward:
                return False, ("nonadjacent_pair", u, v)
            if forward and backward:
                return False, ("symmetric_arc", u, v)
    return True, None


def _check_r_transitive(digraph: Digraph, r: int) -> tuple[bool, tuple | None]:
    for p in _simple_paths_of_length(digraph, r):
        if not digraph.has_arc(p[0], p[-1]):
            return False, ("path_without_arc", p)
    return True, None


def _check_r_quasi_transitive(digraph: Digraph, r: int) -> tuple[bool, tuple | None]:
    for p in _simple_paths_of_length(digraph, r):
        if not _adjacent(digraph, p[0], p[-1]):
            return False, ("path_with_nonadjacent_ends", p)
    return True, None


def _check_local(digraph: Digraph, direction: str) -> tuple[bool, tuple | None]:
    for x in range(digraph.n):
        hood = (
            digraph.in_neighbors(x) if direction == "in" else digraph.out_neighbors(x)
        )
        for i, u in enumerate(hood):
            for v in hood[i + 1 :]:
                forward = digraph.has_arc(u, v)
                backward = digraph.has_arc(v, u)
                if not forward and not backward:
                    return False, (f"{direction}_neighbors_nonadjacent", x, u, v)
                if forward and backward:
                    return False, (f"{direction}_neighbors_symmetric", x, u, v)
    return True, None


def multipartite_partition(digraph: Digraph) -> list[frozenset[int]] | None:
    """Partition into non-adjacency classes, when the digraph is a
    multipartite tournament with at least two parts; otherwise None.

    Vertices share a part exactly when they are non-adjacent, every cross
    pair must be joined by exactly one arc, and the partition is listed by
    ascending smallest member.
    """
    n = digraph.n
    part_of = [-1] * n
    parts: list[list[int]] = []
    for u in range(n):
        if part_of[u] != -1:
            continue
        group = [u] + [v for v in range(n) if v != u and not _adjacent(digraph, u, v)]
        for v in group:
            if part_of[v] != -1:
                return None
            part_of[v] = len(parts)
        parts.append(group)
    for u in range(n):
        for v in range(u + 1, n):
            same = part_of[u] == part_of[v]
            forward = digraph.has_arc(u, v)
            backward = digraph.has_arc(v, u)
            if same and (forward or backward):
                return None
            if not same:
                if not (forward or backward) or (forward and backward):
                    return None
    if len(parts) < 2:
        return None
    return [frozenset(p) for p in parts]


def recognize(digraph: Digraph, label: ClassLabel) -> tuple[bool, tuple | None]:
    """Family membership as (ok, counterexample).

    The counterexample names the violated condition and the vertices or
    path exhibiting it; it is None when the digraph belongs to the family.
    """
    kind = label.kind
    if kind == "semicomplete":
        return _check_semicomplete(digraph)
    if kind == "tournament":
        return _check_tournament(digraph)
    if kind == "r_transitive":
        return _check_r_transitive(digraph, label.r)
    if kind == "quasi_transitive":
        return _check_r_quasi_transitive(digraph, 2)
    if kind == "r_quasi_transitive":
        return _check_r_quasi_transitive(digraph, label.r)
    if kind == "multipartite_tournament":
        partition = multipartite_partition(digraph)
        if partition is None:
            return False, ("no_multipartite_structure",)
        if label.parts is not None and len(partition) != label.parts:
            return False, ("part_count_mismatch", len(partition))
        return True, None
    if kind == "local_in_tournament":
        return _check_local(digraph, "in")
    if kind == "local_out_tournament":
        return _check_local(digraph, "out")
    if kind == "local_tournament":
        ok, witness = _check_local(digraph, "in")
        if not ok:
            return ok, witness
        return _check_local(digraph, "out")
    raise ValueError(f"unknown class kind {kind!r}")


# ---- generators --------------------------------------------------


def _random_tournament(n: int, rng) -> set[Arc]:
    return {
        (u, v) if rng.random() < 0.5 else (v, u)
        for u in range(n)
        for v in range(u + 1, n)
    }


def _close_r_transitive(digraph: Digraph, r: int) -> Digraph:
    while True:
        missing = {
            (p[0], p[-1])
            for p in _simple_paths_of_length(digraph, r)
            if not digraph.has_arc(p[0], p[-1])
        }
        if not missing:
            return digraph
        digraph = digraph.with_arcs(missing)


def _close_r_quasi_transitive(digraph: Digraph, r: int, rng) -> Digraph:
    # one orientation per unordered pair, fixed before iterating, so the
    # fixpoint does not depend on the order violations are discovered in
    n = digraph.n
    choice = {
        (u, v): (u, v) if rng.random() < 0.5 else (v, u)
        for u in range(n)
        for v in range(u + 1, n)
    }
    while True:
        missing = set()
        for p in _simple_paths_of_length(digraph, r):
            u, v = p[0], p[-1]
            if not _adjacent(digraph, u, v):
                missing.add(choice[(min(u, v), max(u, v))])
        if not missing:
            return digraph
        digraph = digraph.with_arcs(missing)


def _round_digraph(n: int, rng) -> Digraph:
    """Round layout: vertex i dominates a consecutive circular interval.

    Interval lengths are capped below n/2 (no symmetric arcs) and smoothed
    so consecutive reaches never shrink by more than one, which makes every
    in- and out-neighborhood induce a tournament.
    """
    if n == 1:
        return Digraph(1)
    cap = (n - 1) // 2
    spans = [rng.randint(0, cap)]
    for _ in range(1, n):
        spans.append(rng.randint(max(0, spans[-1] - 1), cap))
    changed = True
    while changed:
        changed = False
        for i in range(n):
            j = (i + 1) % n
            if spans[j] < spans[i] - 1:
                spans[i] = spans[j] + 1
                changed = True
    arcs = [
        (i, (i + step) % n) for i in range(n) for step in range(1, spans[i] + 1)
    ]
    return Digraph(n, arcs)


def _build(spec: GeneratorSpec, rng) -> Digraph:
    kind = spec.label.kind
    n = spec.n
    if kind == "tournament":
        return Digraph(n, _random_tournament(n, rng))
    if kind == "semicomplete":
        arcs = _random_tournament(n, rng)
        arcs |= {(v, u) for u, v in list(arcs) if rng.random() < spec.arc_density}
        return Digraph(n, arcs)
    if kind in ("r_transitive", "quasi_transitive", "r_quasi_transitive"):
        base = Digraph(
            n,
            [
                (u, v)
                for u in range(n)
                for v in range(n)
                if u != v and rng.random() < spec.arc_density
            ],
        )
        if kind == "r_transitive":
            return _close_r_transitive(base, spec.label.r)
        r = 2 if kind == "quasi_transitive" else spec.label.r
        return _close_r_quasi_transitive(base, r, rng)
    if kind == "multipartite_tournament":
        parts = spec.label.parts
        cuts = sorted(rng.sample(range(1, n), parts - 1)) if parts > 1 else []
        bounds = [0, *cuts, n]
        part_of = [0] * n
        for part, (lo, hi) in enumerate(zip(bounds, bounds[1:])):
            for v in range(lo, hi):
                part_of[v] = part
        arcs = {
            (u, v) if rng.random() < 0.5 else (v, u)
            for u in range(n)
            for v in range(u + 1, n)
            if part_of[u] != part_of[v]
        }
        return Digraph(n, arcs)
    if kind in ("local_in_tournament", "local_out_tournament", "local_tournament"):
        return _round_digraph(n, rng)
    raise ValueError(f"unknown class kind {kind!r}")


def generate(spec: GeneratorSpec) -> Digraph:
    """Seeded digraph guaranteed to satisfy the label's recognizer."""
    rng = make_rng(spec.seed)
    digraph = _build(spec, rng)
    ok, witness = recognize(digraph, spec.label)
    if not ok:
        raise RuntimeError(f"generator left class {spec.label}: {witness}")
    return digraph


def generate_h_coloring(
    digraph: Digraph, h_colors: int, h_density: float, seed: int
) -> HColoredDigraph:
    """Uniform arc colors plus an h_density-random pattern (loops included)."""
    if h_colors < 1:
        raise ValueError("h_colors must be at least 1")
    if not 0.0 <= h_density <= 1.0:
        raise ValueError("h_density must lie in [0, 1]")
    rng = make_rng(seed)
    colors = {arc: rng.randrange(h_colors) for arc in sorted(digraph.arcs)}
    pattern_arcs = [
        (a, b)
        for a in range(h_colors)
        for b in range(h_colors)
        if rng.random() < h_density
    ]
    return HColoredDigraph(digraph, PatternDigraph(h_colors, pattern_arcs), colors)


def repair_h_cycles(colored: HColoredDigraph, cycle_length: int) -> HColoredDigraph:
    """Extend the pattern minimally so every cycle of the given length is an
    H-cycle.

    Only the color pairs actually read around such cycles are added; the
    base digraph and its coloring never change.  Returns the input object
    unchanged when nothing is missing.
    """
    if cycle_length < 2:
        raise ValueError("cycle_length must be at least 2")
    needed: set[Arc] = set()
    for cycle in enumerate_cycles(colored.base, cycle_length):
        if cycle.length != cycle_length:
            continue
        vs = cycle.vertices
        cols = [colored.color_of(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        steps = len(cols)
        for i in range(steps):
            needed.add((cols[(i - 1) % steps], cols[i]))
    missing = needed - colored.pattern.arcs
    if not missing:
        return colored
    return colored.with_pattern(colored.pattern.with_arcs(missing))
