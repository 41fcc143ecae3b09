"""Kernel-style solvers: kernels, quasi-kernels, and (k, l, H)-kernels.

All solvers are exhaustive over maximal independent sets, deterministic
(lexicographically least answer first), and guarded by a desk-scale size cap
that callers can raise explicitly.  Certificates carry the witnesses needed
to re-check a solution against the definitions without re-running a solver.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .closure import build_closure
from .coloring import HColoredDigraph, bounded_h_length_path
from .digraph import Digraph, Walk, strong_components

__all__ = [
    "DEFAULT_MAX_N",
    "KernelCertificate",
    "is_independent",
    "is_absorbent",
    "maximal_independent_sets",
    "find_kernel",
    "quasi_kernel",
    "absorbing_king",
    "kernel_by_paths",
    "is_k_h_independent",
    "is_l_h_absorbent",
    "find_khl_kernel",
]

DEFAULT_MAX_N = 20

_CERTIFICATE_KINDS = ("kernel", "quasi_kernel", "kernel_by_paths", "khl_kernel")


@dataclass(frozen=True)
class KernelCertificate:
    """A solver answer bundled with its absorption witnesses.

    ``members`` is the returned vertex set; ``witnesses`` maps each outside
    vertex to a path into the set whose H-length meets the absorption bound.
    """

    kind: str
    members: frozenset[int]
    k: int | None = None
    l: int | None = None
    witnesses: Mapping[int, Walk] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in _CERTIFICATE_KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")


def _check_members(digraph: Digraph, members) -> frozenset[int]:
    s = frozenset(members)
    for v in s:
        digraph.check_vertex(v)
    return s


def is_independent(digraph: Digraph, members) -> bool:
    """No arc joins two members, in either direction."""
    s = _check_members(digraph, members)
    return not any(
        digraph.has_arc(u, v) for u in s for v in s if u != v
    )


def is_absorbent(digraph: Digraph, members) -> bool:
    """Every outside vertex has an arc into the set."""
    s = _check_members(digraph, members)
    return all(
        any(w in s for w in digraph.out_neighbors(v))
        for v in range(digraph.n)
        if v not in s
    )


def _guard(digraph: Digraph, max_n: int) -> None:
    if digraph.n > max_n:
        raise ValueError(
            f"digraph has {digraph.n} vertices, above the exhaustive-search cap "
            f"{max_n}; pass max_n explicitly to go bigger"
        )


def maximal_independent_sets(digraph: Digraph) -> list[tuple[int, ...]]:
    """All maximal independent sets, sorted lexicographically.

    Bron-Kerbosch with pivoting on the non-adjacency relation; adjacency
    ignores arc direction.
    """
    n = digraph.n
    if n == 0:
        return [()]
    adjacent: list[set[int]] = [set() for _ in range(n)]
    for u, v in digraph.arcs:
        adjacent[u].add(v)
        adjacent[v].add(u)
    compatible = [
        frozenset(range(n)) - adjacent[v] - {v} for v in range(n)
    ]
    found: list[tuple[int, ...]] = []

    def expand(chosen: frozenset[int], cand: frozenset[int], done: frozenset[int]) -> None:
        if not cand and not done:
            found.append(tuple(sorted(chosen)))
            return
        pivot = max(cand | done, key=lambda p: (len(cand & compatible[p]), -p))
        for v in sorted(cand - compatible[pivot]):
            expand(chosen | {v}, cand & compatible[v], done & compatible[v])
            cand = cand - {v}
            done = done | {v}

    expand(frozenset(), frozenset(range(n)), frozenset())
    return sorted(found)


def find_kernel(digraph: Digraph, *, max_n: int = DEFAULT_MAX_N) -> frozenset[int] | None:
    """Lexicographically least kernel, or None when there is none.

    Every kernel is a maximal independent set (an unabsorbed non-neighbor
    could otherwise be added), so the search runs over those only.
    """
    _guard(digraph, max_n)
    for candidate in maximal_independent_sets(digraph):
        s = frozenset(candidate)
        if is_absorbent(digraph, s):
            return s
    return None


def quasi_kernel(digraph: Digraph, *, max_n: int = DEFAULT_MAX_N) -> frozenset[int]:
    """Lexicographically least independent set absorbing within two steps.

    Some maximal independent set always qualifies: a quasi-kernel exists in
    every digraph, and enlarging one to a maximal independent superset keeps
    both independence and distance-two absorption.
    """
    _guard(digraph, max_n)
    for candidate in maximal_independent_sets(digraph):
        s = set(candidate)
        near = set(s)
        for x in s:
            near.update(digraph.in_neighbors(x))
        for x in list(near):
            near.update(digraph.in_neighbors(x))
        if len(near) == digraph.n:
            return frozenset(s)
    raise RuntimeError("no quasi-kernel found; this contradicts its existence theorem")


def absorbing_king(digraph: Digraph) -> int:
    """A vertex reachable from everywhere within two steps, in a
    semicomplete digraph.

    A vertex of maximum in-degree qualifies; ties break to the smallest
    vertex, and the two-step property is re-checked before returning.
    """
    n = digraph.n
    if n == 0:
        raise ValueError("digraph is empty")
    for u in range(n):
        for v in range(u + 1, n):
            if not digraph.has_arc(u, v) and not digraph.has_arc(v, u):
                raise ValueError(f"not semicomplete: ({u}, {v}) non-adjacent")
    king = max(range(n), key=lambda v: (len(digraph.in_neighbors(v)), -v))
    within = {king} | set(digraph.in_neighbors(king))
    for x in list(within):
        within.update(digraph.in_neighbors(x))
    if len(within) != n:
        raise RuntimeError("maximum in-degree vertex failed the two-step check")
    return king


def kernel_by_paths(digraph: Digraph) -> frozenset[int]:
    """Smallest vertex of each terminal strong component.

    The result is independent by paths (no member reaches another) and
    absorbent by paths (every vertex reaches a member), since the
    condensation is acyclic and paths cannot leave terminal components.
    """
    decomposition = strong_components(digraph)
    return frozenset(
        decomposition.components[c][0] for c in sorted(decomposition.terminal)
    )


def is_k_h_independent(colored: HColoredDigraph, members, k: int) -> bool:
    """Every path between two members has H-length at least k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    s = sorted(_check_members(colored.base, members))
    return not any(
        bounded_h_length_path(colored, u, v, k - 1) is not None
        for u in s
        for v in s
        if u != v
    )


def is_l_h_absorbent(
    colored: HColoredDigraph, members, l: int
) -> tuple[bool, dict[int, Walk]]:
    """Whether every outside vertex has a path of H-length <= l into the set.

    Returns (ok, witnesses); on success the witnesses cover every outside
    vertex, on failure they cover the vertices absorbed before the first
    failing one.
    """
    if l < 1:
        raise ValueError("l must be at least 1")
    inside = _check_members(colored.base, members)
    s = sorted(inside)
    witnesses: dict[int, Walk] = {}
    for v in range(colored.base.n):
        if v in inside:
            continue
        hit = None
        for target in s:
            hit = bounded_h_length_path(colored, v, target, l)
            if hit is not None:
                break
        if hit is None:
            return False, witnesses
        witnesses[v] = hit
    return True, witnesses


def find_khl_kernel(
    colored: HColoredDigraph,
    k: int,
    l: int | None = None,
    *,
    max_n: int = DEFAULT_MAX_N,
) -> KernelCertificate | None:
    """Lexicographically least (k, l, H)-kernel as a certificate, or None.

    With l = k-1 (the default) the search reduces to an ordinary kernel of
    the H-length closure; the same set, read back in the colored digraph, is
    the (k, H)-kernel.  For other l, candidates are the maximal independent
    sets of the closure (exactly the maximal (k, H)-independent sets), each
    tested for (l, H)-absorption.  Either way the returned set is re-checked
    against both definitions before being certified.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if l is None:
        l = k - 1
    if l < 1:
        raise ValueError("l must be at least 1")
    _guard(colored.base, max_n)
    closure = build_closure(colored, k, store_witnesses=False).closure

    chosen: frozenset[int] | None = None
    if l == k - 1:
        chosen = find_kernel(closure, max_n=max_n)
        if chosen is None:
            return None
    else:
        for candidate in maximal_independent_sets(closure):
            s = frozenset(candidate)
            ok, _ = is_l_h_absorbent(colored, s, l)
            if ok:
                chosen = s
                break
        if chosen is None:
            return None

    ok_absorb, witnesses = is_l_h_absorbent(colored, chosen, l)
    if not ok_absorb or not is_k_h_independent(colored, chosen, k):
        raise RuntimeError("solver produced a set failing its own definition")
    return KernelCertificate("khl_kernel", chosen, k=k, l=l, witnesses=witnesses)
