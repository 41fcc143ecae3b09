"""Loop-free digraphs on dense integer vertices, with walk machinery.

Vertices are the integers ``0..n-1``.  :class:`Digraph` values are immutable
after construction and safe to share across threads; the enumeration helpers
are single-consumer generators.  Neighbor lists are kept sorted ascending,
which fixes a deterministic order for every traversal in the package.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

Arc = tuple[int, int]

__all__ = [
    "Arc",
    "Digraph",
    "Walk",
    "StrongComponents",
    "is_symmetric_arc",
    "geodesic_distance",
    "enumerate_simple_paths",
    "enumerate_cycles",
    "strong_components",
    "extract_simple_path",
    "is_path",
    "is_cycle",
]


class Digraph:
    """Immutable directed graph without loops or parallel arcs.

    Arc membership is a frozenset lookup.  Duplicate arcs in the input are
    collapsed silently; loops and out-of-range endpoints are rejected.
    """

    __slots__ = ("n", "arcs", "_out", "_in")

    def __init__(self, n: int, arcs: Iterable[Arc] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        collected: set[Arc] = set()
        for u, v in arcs:
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop ({u}, {u}) is not allowed")
            collected.add((u, v))
        self.n = n
        self.arcs = frozenset(collected)
        out: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for u, v in collected:
            out[u].append(v)
            inc[v].append(u)
        self._out = tuple(tuple(sorted(vs)) for vs in out)
        self._in = tuple(tuple(sorted(vs)) for vs in inc)

    # ---- queries -------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return self._in[v]

    def arc_list(self) -> list[Arc]:
        """Arcs sorted lexicographically, the canonical serialization order."""
        return sorted(self.arcs)

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def is_walk(self, vertices: Iterable[int]) -> bool:
        """True when the sequence is nonempty, in range, and follows arcs."""
        vs = list(vertices)
        if not vs:
            return False
        if any(not 0 <= x < self.n for x in vs):
            return False
        return all((a, b) in self.arcs for a, b in zip(vs, vs[1:]))

    # ---- derivation ----------------------------------------------

    def with_arcs(self, extra: Iterable[Arc]) -> "Digraph":
        """New digraph with the given arcs added, validated as usual."""
        return Digraph(self.n, list(self.arcs) + list(extra))

    # ---- value semantics -----------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={sorted(self.arcs)!r})"


@dataclass(frozen=True)
class Walk:
    """A nonempty vertex sequence.

    Whether consecutive pairs are arcs of a particular digraph is checked by
    the operations that consume walks, not here; a Walk is just the sequence.
    A walk is closed when it has at least one step and returns to its start.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        if not vs:
            raise ValueError("a walk needs at least one vertex")
        object.__setattr__(self, "vertices", vs)

    @property
    def length(self) -> int:
        """Number of steps (arcs), one less than the vertex count."""
        return len(self.vertices) - 1

    @property
    def is_closed(self) -> bool:
        return self.length >= 1 and self.vertices[0] == self.vertices[-1]

    @property
    def is_open(self) -> bool:
        return not self.is_closed

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def __repr__(self) -> str:
        return "Walk(%s)" % "->".join(map(str, self.vertices))


def is_symmetric_arc(digraph: Digraph, u: int, v: int) -> bool:
    """True when the reverse of the existing arc (u, v) is also present."""
    if not digraph.has_arc(u, v):
        raise ValueError(f"({u}, {v}) is not an arc")
    return digraph.has_arc(v, u)


def geodesic_distance(digraph: Digraph, u: int, v: int) -> int | None:
    """Length of a shortest directed u-v path, or None when unreachable."""
    digraph.check_vertex(u)
    digraph.check_vertex(v)
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for y in digraph.out_neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == v:
                    return dist[y]
                queue.append(y)
    return None


def enumerate_simple_paths(
    digraph: Digraph, u: int, v: int, max_length: int
) -> Iterator[Walk]:
    """Yield every simple u-v path with at most max_length arcs.

    Paths come out in lexicographic order of their vertex sequences because
    neighbors are scanned ascending.  Each path is yielded exactly once.
    """
    digraph.check_vertex(u)
    digraph.check_vertex(v)
    if u == v:
        raise ValueError("path endpoints must differ")
    if max_length < 0:
        raise ValueError("max_length must be nonnegative")

    path = [u]
    visited = 1 << u

    def walk_from(x: int, budget: int) -> Iterator[Walk]:
        nonlocal visited
        for y in digraph.out_neighbors(x):
            if y == v:
                yield Walk((*path, v))
            elif budget > 1 and not visited & (1 << y):
                visited |= 1 << y
                path.append(y)
                yield from walk_from(y, budget - 1)
                path.pop()
                visited &= ~(1 << y)

    if max_length >= 1:
        yield from walk_from(u, max_length)


def enumerate_cycles(digraph: Digraph, max_length: int) -> Iterator[Walk]:
    """Yield each directed cycle of length <= max_length exactly once.

    Cycles are reported as closed walks rotated so the smallest vertex comes
    first; the stream is deterministic (smallest start vertex first, then
    lexicographic by the DFS order).
    """
    if max_length < 2:
        raise ValueError("max_length must be at least 2")

    for s in range(digraph.n):
        path = [s]
        visited = 1 << s

        def extend(x: int, budget: int) -> Iterator[Walk]:
            nonlocal visited
            for y in digraph.out_neighbors(x):
                if y == s:
                    yield Walk((*path, s))
                elif y > s and budget > 1 and not visited & (1 << y):
                    visited |= 1 << y
                    path.append(y)
                    yield from extend(y, budget - 1)
                    path.pop()
                    visited &= ~(1 << y)

        yield from extend(s, max_length)


@dataclass(frozen=True)
class StrongComponents:
    """Strongly connected components with their condensation.

    Components are numbered 0..m-1 ascending by their smallest vertex, so the
    decomposition of equal digraphs is identical.  ``terminal`` holds the ids
    with no outgoing condensation arc.
    """

    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    condensation: Digraph
    terminal: frozenset[int]


def strong_components(digraph: Digraph) -> StrongComponents:
    """Kosaraju decomposition into strongly connected components."""
    n = digraph.n
    seen = [False] * n
    order: list[int] = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack: list[tuple[int, Iterator[int]]] = [(s, iter(digraph.out_neighbors(s)))]
        while stack:
            v, it = stack[-1]
            pushed = False
            for w in it:
                if not seen[w]:
                    seen[w] = True
                    stack.append((w, iter(digraph.out_neighbors(w))))
                    pushed = True
                    break
            if not pushed:
                order.append(v)
                stack.pop()

    raw_id = [-1] * n
    raw: list[list[int]] = []
    for s in reversed(order):
        if raw_id[s] != -1:
            continue
        cid = len(raw)
        raw_id[s] = cid
        members = [s]
        todo = [s]
        while todo:
            v = todo.pop()
            for w in digraph.in_neighbors(v):
                if raw_id[w] == -1:
                    raw_id[w] = cid
                    members.append(w)
                    todo.append(w)
        raw.append(sorted(members))

    by_min = sorted(range(len(raw)), key=lambda i: raw[i][0])
    remap = {old: new for new, old in enumerate(by_min)}
    component_of = tuple(remap[raw_id[v]] for v in range(n))
    components = tuple(tuple(raw[old]) for old in by_min)
    cond_arcs = {
        (component_of[u], component_of[v])
        for u, v in digraph.arcs
        if component_of[u] != component_of[v]
    }
    condensation = Digraph(len(components), cond_arcs)
    terminal = frozenset(
        c for c in range(len(components)) if not condensation.out_neighbors(c)
    )
    return StrongComponents(component_of, components, condensation, terminal)


def extract_simple_path(walk: Walk) -> Walk:
    """Delete closed sub-walks from an open walk, keeping its endpoints.

    The result is a simple path whose vertices appear in the original order,
    so its length never exceeds the walk's.  Closed walks are rejected.
    """
    if walk.is_closed:
        raise ValueError("cannot extract a path from a closed walk")
    kept: list[int] = []
    position: dict[int, int] = {}
    for x in walk.vertices:
        if x in position:
            cut = position[x]
            for y in kept[cut + 1 :]:
                del position[y]
            del kept[cut + 1 :]
        else:
            position[x] = len(kept)
            kept.append(x)
    return Walk(tuple(kept))


def is_path(digraph: Digraph, walk: Walk) -> bool:
    """True when the walk follows arcs and repeats no vertex."""
    vs = walk.vertices
    return (
        digraph.is_walk(vs)
        and walk.is_open
        and len(set(vs)) == len(vs)
    )


def is_cycle(digraph: Digraph, walk: Walk) -> bool:
    """True for a closed walk of length >= 2 repeating only its start."""
    vs = walk.vertices
    return (
        walk.is_closed
        and walk.length >= 2
        and digraph.is_walk(vs)
        and len(set(vs[:-1])) == len(vs) - 1
    )
