"""Arc colorings against a pattern digraph, and pattern-restricted lengths.

An arc-colored digraph carries a total coloring of its arcs by the vertices
of a pattern digraph H (colors ``0..m-1``; H may have loops).  Walking
through a vertex is an obstruction when the color pair of the incoming and
outgoing arcs is not an arc of H.  The H-length of a walk counts its
obstructions, plus one if the walk is open; obstruction-free paths and
cycles are H-paths and H-cycles.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

from .digraph import Arc, Digraph, Walk, is_cycle, is_path

__all__ = [
    "PatternDigraph",
    "HColoredDigraph",
    "obstructions",
    "h_length",
    "is_h_path",
    "is_h_cycle",
    "min_h_length_path",
    "bounded_h_length_path",
]


class PatternDigraph:
    """Directed pattern on color vertices ``0..m-1``; loops are allowed."""

    __slots__ = ("m", "arcs")

    def __init__(self, m: int, arcs: Iterable[Arc] = ()) -> None:
        if m < 0:
            raise ValueError("color count must be nonnegative")
        collected: set[Arc] = set()
        for a, b in arcs:
            if not (0 <= a < m) or not (0 <= b < m):
                raise ValueError(f"pattern arc ({a}, {b}) out of range for m={m}")
            collected.add((a, b))
        self.m = m
        self.arcs = frozenset(collected)

    def has_arc(self, a: int, b: int) -> bool:
        return (a, b) in self.arcs

    def arc_list(self) -> list[Arc]:
        return sorted(self.arcs)

    def with_arcs(self, extra: Iterable[Arc]) -> "PatternDigraph":
        return PatternDigraph(self.m, list(self.arcs) + list(extra))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PatternDigraph)
            and self.m == other.m
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.m, self.arcs))

    def __repr__(self) -> str:
        return f"PatternDigraph(m={self.m}, arcs={sorted(self.arcs)!r})"


class HColoredDigraph:
    """A loop-free digraph plus a total arc coloring into a pattern digraph.

    Every arc of the base digraph must receive exactly one color in
    ``0..pattern.m-1``; colorings of non-arcs are rejected.  Instances are
    immutable.
    """

    __slots__ = ("base", "pattern", "_color")

    def __init__(
        self,
        base: Digraph,
        pattern: PatternDigraph,
        colors: Mapping[Arc, int] | Iterable[tuple[int, int, int]],
    ) -> None:
        if isinstance(colors, Mapping):
            table = {(int(u), int(v)): int(c) for (u, v), c in colors.items()}
        else:
            table = {(int(u), int(v)): int(c) for u, v, c in colors}
        extra = set(table) - base.arcs
        if extra:
            raise ValueError(f"colored pairs {sorted(extra)} are not arcs")
        missing = base.arcs - set(table)
        if missing:
            raise ValueError(f"arcs {sorted(missing)} are uncolored")
        for arc, c in table.items():
            if not 0 <= c < pattern.m:
                raise ValueError(f"color {c} on arc {arc} out of range for m={pattern.m}")
        self.base = base
        self.pattern = pattern
        self._color = table

    def color_of(self, u: int, v: int) -> int:
        try:
            return self._color[(u, v)]
        except KeyError:
            raise ValueError(f"({u}, {v}) is not an arc") from None

    def colored_arcs(self) -> list[tuple[int, int, int]]:
        """Arc colorings as (u, v, color), sorted by arc."""
        return [(u, v, self._color[(u, v)]) for u, v in sorted(self._color)]

    def with_pattern(self, pattern: PatternDigraph) -> "HColoredDigraph":
        """Same base and coloring, different pattern digraph."""
        return HColoredDigraph(self.base, pattern, self._color)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HColoredDigraph)
            and self.base == other.base
            and self.pattern == other.pattern
            and self._color == other._color
        )

    def __hash__(self) -> int:
        return hash((self.base, self.pattern, tuple(sorted(self._color.items()))))

    def __repr__(self) -> str:
        return (
            f"HColoredDigraph(n={self.base.n}, arcs={len(self.base.arcs)}, "
            f"m={self.pattern.m})"
        )


def _arc_colors(colored: HColoredDigraph, walk: Walk) -> list[int]:
    """Colors along the walk; validates the walk and rejects length 0."""
    if walk.length == 0:
        raise ValueError("walk has no arcs; its H-length is undefined")
    vs = walk.vertices
    return [colored.color_of(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]


def obstructions(colored: HColoredDigraph, walk: Walk) -> frozenset[int]:
    """Indices of obstructed positions along the walk.

    Position i is obstructed when the color pair of the arcs around vertex
    ``walk.vertices[i]`` is not an arc of the pattern.  Closed walks are read
    cyclically, so position 0 pairs the last arc with the first; open walks
    never obstruct position 0.
    """
    cols = _arc_colors(colored, walk)
    steps = len(cols)
    pattern = colored.pattern
    if walk.is_closed:
        hits = {
            i
            for i in range(steps)
            if not pattern.has_arc(cols[(i - 1) % steps], cols[i])
        }
    else:
        hits = {
            i for i in range(1, steps) if not pattern.has_arc(cols[i - 1], cols[i])
        }
    return frozenset(hits)


def h_length(colored: HColoredDigraph, walk: Walk) -> int:
    """Obstruction count, plus one for open walks."""
    count = len(obstructions(colored, walk))
    return count if walk.is_closed else count + 1


def is_h_path(colored: HColoredDigraph, walk: Walk) -> bool:
    """True when the path has no obstruction; rejects non-paths."""
    if not is_path(colored.base, walk):
        raise ValueError("walk is not a simple path of the base digraph")
    if walk.length == 0:
        raise ValueError("walk has no arcs; its H-length is undefined")
    return not obstructions(colored, walk)


def is_h_cycle(colored: HColoredDigraph, walk: Walk) -> bool:
    """True when the cycle has no obstruction; rejects non-cycles."""
    if not is_cycle(colored.base, walk):
        raise ValueError("walk is not a cycle of the base digraph")
    return not obstructions(colored, walk)


def _ancestor_mask(digraph: Digraph, v: int) -> int:
    """Bitmask of vertices with a directed path to v (v included)."""
    mask = 1 << v
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in digraph.in_neighbors(x):
            bit = 1 << y
            if not mask & bit:
                mask |= bit
                queue.append(y)
    return mask


def _check_endpoints(colored: HColoredDigraph, u: int, v: int, bound: int) -> None:
    colored.base.check_vertex(u)
    colored.base.check_vertex(v)
    if u == v:
        raise ValueError("path endpoints must differ")
    if bound < 1:
        raise ValueError("bound must be at least 1")


def bounded_h_length_path(
    colored: HColoredDigraph, u: int, v: int, bound: int
) -> Walk | None:
    """First u-v path with H-length <= bound, or None when there is none.

    The witness order is fixed: the direct arc when present, then two-arc
    paths by ascending middle vertex, then depth-first search in ascending
    neighbor order.  The search prunes a branch as soon as its obstruction
    count alone forces the H-length over the bound; path length itself is
    never used to prune, since a longer path can have a smaller H-length.
    """
    _check_endpoints(colored, u, v, bound)
    base = colored.base
    if base.has_arc(u, v):
        return Walk((u, v))
    color = colored._color
    pattern_arcs = colored.pattern.arcs
    for w in base.out_neighbors(u):
        if w != v and base.has_arc(w, v):
            if bound >= 2 or (color[(u, w)], color[(w, v)]) in pattern_arcs:
                return Walk((u, w, v))
    reach = _ancestor_mask(base, v)
    if not reach & (1 << u):
        return None

    out = base._out
    path = [u]
    visited = 1 << u

    def search(x: int, prev_color: int | None, obs: int) -> Walk | None:
        nonlocal visited
        for y in out[x]:
            c = color[(x, y)]
            if prev_color is None or (prev_color, c) in pattern_arcs:
                nobs = obs
            else:
                nobs = obs + 1
            if nobs + 1 > bound:
                continue
            if y == v:
                return Walk((*path, v))
            bit = 1 << y
            if visited & bit or not reach & bit:
                continue
            visited |= bit
            path.append(y)
            found = search(y, c, nobs)
            path.pop()
            visited &= ~bit
            if found is not None:
                return found
        return None

    return search(u, None, 0)


def min_h_length_path(
    colored: HColoredDigraph, u: int, v: int, bound: int
) -> tuple[Walk, int] | None:
    """A u-v path of minimum H-length, when that minimum is <= bound.

    Returns (path, h_length) or None.  Ties are broken toward the
    lexicographically smallest vertex sequence, which falls out of scanning
    neighbors ascending and keeping only strict improvements.
    """
    _check_endpoints(colored, u, v, bound)
    base = colored.base
    reach = _ancestor_mask(base, v)
    if not reach & (1 << u):
        return None

    color = colored._color
    pattern_arcs = colored.pattern.arcs
    out = base._out
    path = [u]
    visited = 1 << u
    best_h = bound + 1
    best: Walk | None = None

    def search(x: int, prev_color: int | None, obs: int) -> None:
        nonlocal visited, best_h, best
        if best_h == 1:
            return
        for y in out[x]:
            c = color[(x, y)]
            if prev_color is None or (prev_color, c) in pattern_arcs:
                nobs = obs
            else:
                nobs = obs + 1
            # completions from here cost at least nobs + 1
            if nobs + 1 >= best_h:
                continue
            if y == v:
                best_h = nobs + 1
                best = Walk((*path, v))
                if best_h == 1:
                    return
                continue
            bit = 1 << y
            if visited & bit or not reach & bit:
                continue
            visited |= bit
            path.append(y)
            search(y, c, nobs)
            path.pop()
            visited &= ~bit

    search(u, None, 0)
    if best is None:
        return None
    return best, best_h
