"""Bounded H-length closure of a colored digraph, and its feeder lemmas.

For a threshold k >= 2, the closure has an arc (u, v) exactly when the
colored digraph contains a u-v path of H-length at most k-1.  Kernels of the
closure correspond one-to-one to (k, H)-kernels of the instance, so the
solvers reduce to ordinary kernel search on the closure.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .coloring import HColoredDigraph, bounded_h_length_path, h_length
from .digraph import Arc, Digraph, Walk, extract_simple_path

__all__ = [
    "ClosureResult",
    "build_closure",
    "walk_implies_closure_arc",
    "closed_walk_symmetric_pair",
    "has_asymmetric_cycle",
]


@dataclass(frozen=True)
class ClosureResult:
    """Closure digraph plus the witness path found for each closure arc.

    ``witnesses`` is None when witness storage was turned off; otherwise it
    maps every closure arc to a path certifying H-length <= k-1.
    """

    closure: Digraph
    k: int
    witnesses: Mapping[Arc, Walk] | None

    def witness(self, u: int, v: int) -> Walk:
        if self.witnesses is None:
            raise ValueError("closure was built without witnesses")
        try:
            return self.witnesses[(u, v)]
        except KeyError:
            raise ValueError(f"({u}, {v}) is not a closure arc") from None


def build_closure(
    colored: HColoredDigraph, k: int, *, store_witnesses: bool = True
) -> ClosureResult:
    """Closure for threshold k; arc (u, v) iff some u-v path has H-length <= k-1.

    Pair searches are independent and stop at the first qualifying path, in
    the deterministic order of :func:`bounded_h_length_path`.
    """
    if k < 2:
        raise ValueError("closure threshold k must be at least 2")
    n = colored.base.n
    arcs: list[Arc] = []
    witnesses: dict[Arc, Walk] = {}
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            found = bounded_h_length_path(colored, u, v, k - 1)
            if found is not None:
                arcs.append((u, v))
                if store_witnesses:
                    witnesses[(u, v)] = found
    return ClosureResult(Digraph(n, arcs), k, witnesses if store_witnesses else None)


def walk_implies_closure_arc(colored: HColoredDigraph, walk: Walk, k: int) -> Walk:
    """Witness path behind a closure arc guaranteed by a short open walk.

    An open u-v walk of length <= k-1 contains a simple u-v path of no
    greater length, whose H-length is at most its length; the returned path
    therefore certifies the closure arc (u, v).  Closed or overlong walks
    are rejected.
    """
    if k < 2:
        raise ValueError("closure threshold k must be at least 2")
    if walk.is_closed:
        raise ValueError("walk must be open")
    if walk.length < 1:
        raise ValueError("walk must use at least one arc")
    if walk.length > k - 1:
        raise ValueError(f"walk length {walk.length} exceeds k-1={k - 1}")
    if not colored.base.is_walk(walk.vertices):
        raise ValueError("sequence is not a walk of the base digraph")
    witness = extract_simple_path(walk)
    assert h_length(colored, witness) <= witness.length <= k - 1
    return witness


def closed_walk_symmetric_pair(
    colored: HColoredDigraph, walk: Walk, k: int, u: int, v: int
) -> tuple[Walk, Walk]:
    """Witness paths for both closure arcs between two vertices of a short
    closed walk.

    A closed walk of length <= k splits at u and v into two complementary
    sub-walks of length <= k-1 each, so both (u, v) and (v, u) are closure
    arcs.  Returns the (u-to-v, v-to-u) witness paths.
    """
    if k < 2:
        raise ValueError("closure threshold k must be at least 2")
    if not walk.is_closed:
        raise ValueError("walk must be closed")
    if walk.length > k:
        raise ValueError(f"walk length {walk.length} exceeds k={k}")
    if not colored.base.is_walk(walk.vertices):
        raise ValueError("sequence is not a walk of the base digraph")
    if u == v:
        raise ValueError("vertices must differ")
    body = walk.vertices[:-1]
    if u not in body or v not in body:
        raise ValueError("both vertices must lie on the walk")
    steps = len(body)
    doubled = body + body
    pu = body.index(u)
    pv = body.index(v)

    def segment(a: int, b: int) -> Walk:
        span = (b - a) % steps
        return Walk(doubled[a : a + span + 1])

    uv = walk_implies_closure_arc(colored, segment(pu, pv), k)
    vu = walk_implies_closure_arc(colored, segment(pv, pu), k)
    return uv, vu


def has_asymmetric_cycle(digraph: Digraph) -> Walk | None:
    """A cycle avoiding symmetric arcs, or None when every cycle has one.

    Looks for a cycle of the subdigraph of asymmetric arcs; its absence
    means every cycle of the input traverses at least one symmetric arc,
    which is the reduction behind kernel existence via symmetric arcs.
    The returned cycle is rotated so its smallest vertex comes first.
    """
    n = digraph.n
    asym: list[tuple[int, ...]] = [
        tuple(w for w in digraph.out_neighbors(v) if not digraph.has_arc(w, v))
        for v in range(n)
    ]
    state = [0] * n  # 0 fresh, 1 on stack, 2 done
    for s in range(n):
        if state[s]:
            continue
        state[s] = 1
        path = [s]
        stack: list[Iterator[int]] = [iter(asym[s])]
        while stack:
            it = stack[-1]
            advanced = False
            for w in it:
                if state[w] == 1:
                    body = path[path.index(w) :]
                    rot = body.index(min(body))
                    body = body[rot:] + body[:rot]
                    return Walk((*body, body[0]))
                if state[w] == 0:
                    state[w] = 1
                    path.append(w)
                    stack.append(iter(asym[w]))
                    advanced = True
                    break
            if not advanced:
                state[path.pop()] = 2
                stack.pop()
    return None
