"""Randomized verification of the kernel-existence theorems and lemmas.

Each suite draws seeded instances from the family generators, re-checks the
hypotheses honestly (recognizer plus any H-cycle conditions; instances that
fail are regenerated, never counted), runs the solvers, and re-validates
every certificate against the definitions.  Reports serialize to canonical
JSON; reruns with the same seed are byte-identical, so timing is kept out of
the serialized form.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .closure import (
    build_closure,
    closed_walk_symmetric_pair,
    has_asymmetric_cycle,
    walk_implies_closure_arc,
)
from .coloring import HColoredDigraph, h_length, is_h_cycle, obstructions
from .digraph import Digraph, Walk, enumerate_cycles, geodesic_distance
from .families import (
    ClassLabel,
    GeneratorSpec,
    generate,
    generate_h_coloring,
    recognize,
    repair_h_cycles,
)
from .kernels import (
    find_kernel,
    find_khl_kernel,
    is_absorbent,
    is_independent,
    is_k_h_independent,
    is_l_h_absorbent,
    maximal_independent_sets,
)
from .rng import derive_seed, make_rng
from .serialize import (
    canonical_dumps,
    content_hash,
    digraph_from_obj,
    digraph_to_obj,
    instance_from_obj,
    instance_to_obj,
    walk_to_obj,
)

__all__ = [
    "ConfigurationError",
    "TheoremId",
    "Failure",
    "VerificationReport",
    "ConjectureSearchResult",
    "verify",
    "replay_failure",
    "search_conjecture",
    "panchromatic_summary",
]


class ConfigurationError(ValueError):
    """Rejected harness configuration: bad ids, thresholds, or guardrails."""


class TheoremId(str, Enum):
    SEMICOMPLETE_K3 = "semicomplete_k3"
    SEMICOMPLETE_HCYCLES_K2 = "semicomplete_hcycles_k2"
    R_TRANSITIVE_KLH = "r_transitive_klH"
    R_TRANSITIVE_K = "r_transitive_k"
    QUASI_TRANSITIVE_K4 = "quasi_transitive_k4"
    THREE_QT_K5 = "three_qt_k5"
    RQT_HCYCLES_K = "rqt_hcycles_k"
    MULTIPARTITE_K5 = "multipartite_k5"
    LOCAL_IN_K = "local_in_k"
    LOCAL_OUT_K = "local_out_k"
    LEMMA_WALKS = "lemma_walks"
    LEMMA_SUBPATHS = "lemma_subpaths"
    LEMMA_CLOSURE_EQUIV = "lemma_closure_equiv"
    DUCHET_REDUCTION = "duchet_reduction"
    PANCHROMATIC_SUMMARY = "panchromatic_summary"


@dataclass(frozen=True)
class Failure:
    """One violated clause, with a replayable instance artifact."""

    index: int
    seed: int
    clause: str
    artifact: dict

    def to_obj(self) -> dict:
        return {
            "index": self.index,
            "seed": self.seed,
            "clause": self.clause,
            "artifact": self.artifact,
            "sha256": content_hash(self.artifact),
        }


@dataclass
class VerificationReport:
    theorem: str
    instances: int
    seed: int
    parameters: dict
    failures: list[Failure]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_obj(self, *, include_timing: bool = False) -> dict:
        obj = {
            "theorem": self.theorem,
            "instances": self.instances,
            "seed": self.seed,
            "parameters": self.parameters,
            "failures": [f.to_obj() for f in self.failures],
        }
        if include_timing:
            obj["elapsed"] = self.elapsed
        return obj

    def to_json(self, *, include_timing: bool = False) -> str:
        """Canonical text; timing is opt-in because it breaks rerun
        byte-identity."""
        return canonical_dumps(self.to_obj(include_timing=include_timing))


@dataclass
class ConjectureSearchResult:
    r: int
    k: int
    budget: int
    n_max: int
    seed: int
    instances_tested: int
    counterexample: dict | None
    certificate: dict | None

    @property
    def found(self) -> bool:
        return self.counterexample is not None

    def to_obj(self) -> dict:
        return {
            "r": self.r,
            "k": self.k,
            "budget": self.budget,
            "n_max": self.n_max,
            "seed": self.seed,
            "instances_tested": self.instances_tested,
            "counterexample": self.counterexample,
            "certificate": self.certificate,
        }

    def to_json(self) -> str:
        return canonical_dumps(self.to_obj())


# ---- shared instance machinery -----------------------------------

_H_DENSITIES = (0.0, 0.25, 0.5, 0.75, 1.0)
_MAX_BUILD_ATTEMPTS = 20

_KERNEL_CHECKS: dict[TheoremId, tuple[str, ...]] = {
    TheoremId.SEMICOMPLETE_K3: (),
    TheoremId.SEMICOMPLETE_HCYCLES_K2: (),
    TheoremId.R_TRANSITIVE_KLH: ("r_transitive_distance",),
    TheoremId.R_TRANSITIVE_K: ("r_transitive_distance",),
    TheoremId.QUASI_TRANSITIVE_K4: ("duchet_closure",),
    TheoremId.THREE_QT_K5: ("duchet_closure",),
    TheoremId.RQT_HCYCLES_K: ("closure_transitive",),
    TheoremId.MULTIPARTITE_K5: ("duchet_closure", "multipartite_distance"),
    TheoremId.LOCAL_IN_K: ("duchet_closure",),
    TheoremId.LOCAL_OUT_K: ("duchet_closure",),
}

_RELEVANT_PARAMS: dict[TheoremId, frozenset[str]] = {
    TheoremId.SEMICOMPLETE_K3: frozenset({"k"}),
    TheoremId.SEMICOMPLETE_HCYCLES_K2: frozenset({"k"}),
    TheoremId.R_TRANSITIVE_KLH: frozenset({"k", "r", "l"}),
    TheoremId.R_TRANSITIVE_K: frozenset({"k", "r"}),
    TheoremId.QUASI_TRANSITIVE_K4: frozenset({"k"}),
    TheoremId.THREE_QT_K5: frozenset({"k"}),
    TheoremId.RQT_HCYCLES_K: frozenset({"k", "r"}),
    TheoremId.MULTIPARTITE_K5: frozenset({"k", "parts"}),
    TheoremId.LOCAL_IN_K: frozenset({"k"}),
    TheoremId.LOCAL_OUT_K: frozenset({"k"}),
    TheoremId.LEMMA_WALKS: frozenset({"k"}),
    TheoremId.LEMMA_SUBPATHS: frozenset(),
    TheoremId.LEMMA_CLOSURE_EQUIV: frozenset({"k"}),
    TheoremId.DUCHET_REDUCTION: frozenset(),
    TheoremId.PANCHROMATIC_SUMMARY: frozenset(),
}


@dataclass(frozen=True)
class _Params:
    k: int | None = None
    r: int | None = None
    l: int | None = None
    parts: int | None = None


def _random_digraph(rng, n: int, density: float) -> Digraph:
    return Digraph(
        n,
        [
            (u, v)
            for u in range(n)
            for v in range(n)
            if u != v and rng.random() < density
        ],
    )


def _random_digraph_with_arcs(rng, n: int, density: float) -> Digraph:
    for _ in range(50):
        digraph = _random_digraph(rng, n, density)
        if digraph.arcs:
            return digraph
    raise RuntimeError("random digraph generation kept producing arcless digraphs")


def _draw_coloring(rng, digraph: Digraph, seed: int) -> HColoredDigraph:
    colors = rng.randint(1, 4)
    density = rng.choice(_H_DENSITIES)
    return generate_h_coloring(digraph, colors, density, seed)


def _cycles_all_h(colored: HColoredDigraph, length: int) -> bool:
    if colored.base.n < 2:
        return True
    return all(
        is_h_cycle(colored, cycle)
        for cycle in enumerate_cycles(colored.base, length)
        if cycle.length == length
    )


def _max_cycle_h_length(colored: HColoredDigraph) -> int:
    if colored.base.n < 2:
        return 0
    return max(
        (h_length(colored, c) for c in enumerate_cycles(colored.base, colored.base.n)),
        default=0,
    )


def _bfs_distances(digraph: Digraph, source: int) -> dict[int, int]:
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for x in frontier:
            for y in digraph.out_neighbors(x):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def _label_to_obj(label: ClassLabel) -> dict:
    obj: dict = {"kind": label.kind}
    if label.r is not None:
        obj["r"] = label.r
    if label.parts is not None:
        obj["parts"] = label.parts
    return obj


def _label_from_obj(obj: dict) -> ClassLabel:
    return ClassLabel(obj["kind"], r=obj.get("r"), parts=obj.get("parts"))


# ---- kernel-style theorem suites ---------------------------------


def _build_kernel_instance(
    theorem: TheoremId, seed: int, size: int, p: _Params
) -> tuple[HColoredDigraph, int, int, ClassLabel] | None:
    """One seeded instance with its effective (k, l); None when a hypothesis
    re-check fails and the caller should draw a fresh seed."""
    T = TheoremId
    rng = make_rng(seed)
    gen_seed = derive_seed(seed, 101)
    color_seed = derive_seed(seed, 202)
    repair_length: int | None = None

    if theorem in (T.SEMICOMPLETE_K3, T.SEMICOMPLETE_HCYCLES_K2):
        label = ClassLabel("tournament" if rng.random() < 0.5 else "semicomplete")
        n = rng.randint(3, size)
        density = rng.choice((0.2, 0.5, 0.8))
        if theorem == T.SEMICOMPLETE_HCYCLES_K2:
            repair_length = 3
            k = p.k if p.k is not None else rng.choice((2, 3))
        else:
            k = p.k if p.k is not None else rng.choice((3, 4, 5))
        l = k - 1
    elif theorem in (T.R_TRANSITIVE_KLH, T.R_TRANSITIVE_K):
        r = p.r if p.r is not None else 3
        label = ClassLabel("r_transitive", r=r)
        n = rng.randint(3, size)
        density = rng.choice((0.1, 0.2, 0.3))
        if theorem == T.R_TRANSITIVE_KLH:
            k = p.k if p.k is not None else rng.randint(max(2, r), r + 2)
            l = p.l if p.l is not None else rng.choice((max(1, r - 1), max(1, k - 1), k))
        else:
            k = p.k if p.k is not None else rng.randint(r, r + 2)
            l = k - 1
    elif theorem == T.QUASI_TRANSITIVE_K4:
        label = ClassLabel("quasi_transitive")
        n = rng.randint(3, size)
        density = rng.choice((0.1, 0.2, 0.3))
        k = p.k if p.k is not None else rng.choice((4, 5))
        l = k - 1
    elif theorem == T.THREE_QT_K5:
        label = ClassLabel("r_quasi_transitive", r=3)
        n = rng.randint(3, size)
        density = rng.choice((0.1, 0.2, 0.3))
        k = p.k if p.k is not None else rng.choice((5, 6))
        l = k - 1
    elif theorem == T.RQT_HCYCLES_K:
        r = p.r if p.r is not None else 2
        label = ClassLabel("r_quasi_transitive", r=r)
        n = rng.randint(3, size)
        density = rng.choice((0.1, 0.2, 0.3))
        repair_length = r + 1
        k = p.k if p.k is not None else rng.choice((r, r + 1))
        l = k - 1
    elif theorem == T.MULTIPARTITE_K5:
        low = max(3, p.parts) if p.parts is not None else 3
        n = rng.randint(low, size)
        parts = p.parts if p.parts is not None else rng.randint(2, min(4, n))
        label = ClassLabel("multipartite_tournament", parts=parts)
        density = 0.5
        k = p.k if p.k is not None else rng.choice((5, 6))
        l = k - 1
    elif theorem in (T.LOCAL_IN_K, T.LOCAL_OUT_K):
        kind = (
            "local_in_tournament" if theorem == T.LOCAL_IN_K else "local_out_tournament"
        )
        label = ClassLabel(kind)
        n = rng.randint(3, size)
        density = 0.5
        k = l = 0  # fixed below, once the coloring is known
    else:  # pragma: no cover - guarded by the dispatcher
        raise ConfigurationError(f"{theorem.value} is not a kernel-style suite")

    spec = GeneratorSpec(label, n, gen_seed, arc_density=density)
    digraph = generate(spec)
    colored = _draw_coloring(rng, digraph, color_seed)
    if repair_length is not None:
        colored = repair_h_cycles(colored, repair_length)

    # hypothesis honesty: everything the theorem assumes is re-checked here
    ok, _ = recognize(digraph, label)
    if not ok:
        return None
    if repair_length is not None and not _cycles_all_h(colored, repair_length):
        return None
    if theorem in (T.LOCAL_IN_K, T.LOCAL_OUT_K):
        longest = _max_cycle_h_length(colored)
        k = max(p.k if p.k is not None else 2, longest + 2)
        l = k - 1
        if longest > k - 2:
            return None
    return colored, k, l, label


def _kernel_clause(
    colored: HColoredDigraph,
    k: int,
    l: int,
    label: ClassLabel,
    checks: tuple[str, ...],
) -> str | None:
    """First violated clause of a kernel-existence theorem, or None."""
    certificate = find_khl_kernel(colored, k, l)
    if certificate is None:
        return "kernel_missing"
    if not is_k_h_independent(colored, certificate.members, k):
        return "certificate_not_independent"
    ok, _ = is_l_h_absorbent(colored, certificate.members, l)
    if not ok:
        return "certificate_not_absorbent"

    closure_cache: Digraph | None = None

    def closure() -> Digraph:
        nonlocal closure_cache
        if closure_cache is None:
            closure_cache = build_closure(colored, k, store_witnesses=False).closure
        return closure_cache

    for check in checks:
        if check == "duchet_closure":
            if has_asymmetric_cycle(closure()) is not None:
                return "closure_cycle_without_symmetric_arc"
        elif check == "closure_transitive":
            ok, _ = recognize(closure(), ClassLabel("r_transitive", r=2))
            if not ok:
                return "closure_not_transitive"
        elif check == "r_transitive_distance":
            bound = label.r - 1
            digraph = colored.base
            for u in range(digraph.n):
                if any(d > bound for d in _bfs_distances(digraph, u).values()):
                    return "distance_bound_violated"
        elif check == "multipartite_distance":
            digraph = colored.base
            for u, v in sorted(closure().arcs):
                if not closure().has_arc(v, u):
                    d = geodesic_distance(digraph, u, v)
                    if d is None or d > 2:
                        return "asymmetric_closure_arc_too_far"
        else:  # pragma: no cover
            raise RuntimeError(f"unknown structural check {check!r}")
    return None


def _kernel_case(
    theorem: TheoremId, index: int, seed: int, size: int, p: _Params
) -> tuple[dict, str | None]:
    for attempt in range(_MAX_BUILD_ATTEMPTS):
        built = _build_kernel_instance(theorem, derive_seed(seed, attempt), size, p)
        if built is not None:
            break
    else:  # pragma: no cover - generators satisfy their hypotheses
        raise RuntimeError(f"could not build a valid instance for {theorem.value}")
    colored, k, l, label = built
    artifact = {
        "theorem": theorem.value,
        "label": _label_to_obj(label),
        "k": k,
        "l": l,
        "colored": instance_to_obj(colored),
    }
    return artifact, _kernel_clause(colored, k, l, label, _KERNEL_CHECKS[theorem])


# ---- lemma suites ------------------------------------------------


def _sample_open_walks(rng, digraph: Digraph, count: int, max_len: int) -> list[Walk]:
    sources = [v for v in range(digraph.n) if digraph.out_neighbors(v)]
    walks: list[Walk] = []
    guard = 0
    while sources and len(walks) < count and guard < 200 * count:
        guard += 1
        target = rng.randint(1, max(1, max_len))
        vs = [rng.choice(sources)]
        while len(vs) - 1 < target:
            nxt = digraph.out_neighbors(vs[-1])
            if not nxt:
                break
            vs.append(rng.choice(nxt))
        if len(vs) >= 2 and vs[0] == vs[-1]:
            vs.pop()
        if len(vs) >= 2 and vs[0] != vs[-1]:
            walks.append(Walk(tuple(vs)))
    return walks


def _sample_closed_walks(rng, digraph: Digraph, count: int, max_len: int) -> list[Walk]:
    walks = [w for w in enumerate_cycles(digraph, max_len)][:count]
    sources = [v for v in range(digraph.n) if digraph.out_neighbors(v)]
    guard = 0
    while sources and len(walks) < 2 * count and guard < 50 * count:
        guard += 1
        start = rng.choice(sources)
        vs = [start]
        for _ in range(max_len):
            nxt = digraph.out_neighbors(vs[-1])
            if not nxt:
                break
            vs.append(rng.choice(nxt))
            if vs[-1] == start:
                break
        if len(vs) >= 3 and vs[-1] == start:
            walks.append(Walk(tuple(vs)))
    return walks


def _lemma_walks_case(
    index: int, seed: int, size: int, p: _Params, per_instance: int
) -> tuple[dict, str | None]:
    rng = make_rng(seed)
    n = rng.randint(3, size)
    digraph = _random_digraph_with_arcs(rng, n, rng.choice((0.3, 0.5, 0.7)))
    colored = _draw_coloring(rng, digraph, derive_seed(seed, 202))
    k = p.k if p.k is not None else rng.choice((2, 3, 4))
    base_artifact = {
        "theorem": TheoremId.LEMMA_WALKS.value,
        "k": k,
        "colored": instance_to_obj(colored),
    }
    closure = build_closure(colored, k, store_witnesses=False).closure

    for walk in _sample_open_walks(rng, digraph, per_instance, 2 * n):
        if h_length(colored, walk) > walk.length:
            return (
                {**base_artifact, "part": "a", "walk": walk_to_obj(walk)},
                "open_walk_h_length_exceeds_length",
            )
    for walk in _sample_open_walks(rng, digraph, per_instance, k - 1):
        witness = walk_implies_closure_arc(colored, walk, k)
        if h_length(colored, witness) > k - 1 or not closure.has_arc(
            walk.start, walk.end
        ):
            return (
                {**base_artifact, "part": "b", "walk": walk_to_obj(walk)},
                "short_walk_closure_arc_missing",
            )
    for walk in _sample_closed_walks(rng, digraph, per_instance, k):
        body = sorted(set(walk.vertices[:-1]))
        for i, u in enumerate(body):
            for v in body[i + 1 :]:
                closed_walk_symmetric_pair(colored, walk, k, u, v)
                if not (closure.has_arc(u, v) and closure.has_arc(v, u)):
                    return (
                        {
                            **base_artifact,
                            "part": "c",
                            "walk": walk_to_obj(walk),
                            "pair": [u, v],
                        },
                        "closed_walk_pair_not_symmetric",
                    )
    return base_artifact, None


def _lemma_subpaths_case(
    index: int, seed: int, size: int, p: _Params
) -> tuple[dict, str | None]:
    rng = make_rng(seed)
    n = rng.randint(3, min(size, 7))
    digraph = _random_digraph_with_arcs(rng, n, rng.choice((0.4, 0.6)))
    colored = _draw_coloring(rng, digraph, derive_seed(seed, 202))
    base_artifact = {
        "theorem": TheoremId.LEMMA_SUBPATHS.value,
        "colored": instance_to_obj(colored),
    }
    cycles = [c for c in enumerate_cycles(digraph, n)][:20]
    for cycle in cycles:
        full = obstructions(colored, cycle)
        steps = cycle.length
        for i in range(steps + 1):
            for j in range(i + 1, steps + 1):
                segment = Walk(cycle.vertices[i : j + 1])
                shifted = {t + i for t in obstructions(colored, segment)}
                if not shifted <= set(full):
                    return (
                        {
                            **base_artifact,
                            "walk": walk_to_obj(cycle),
                            "i": i,
                            "j": j,
                        },
                        "subpath_obstructions_leak",
                    )
    return base_artifact, None


def _khl_kernel_by_definition(
    colored: HColoredDigraph, members: frozenset[int], k: int
) -> bool:
    if not is_k_h_independent(colored, members, k):
        return False
    ok, _ = is_l_h_absorbent(colored, members, k - 1)
    return ok


def _lemma_closure_equiv_case(
    index: int, seed: int, size: int, p: _Params
) -> tuple[dict, str | None]:
    rng = make_rng(seed)
    n = rng.randint(3, size)
    digraph = _random_digraph(rng, n, rng.choice((0.3, 0.5, 0.7)))
    colored = _draw_coloring(rng, digraph, derive_seed(seed, 202))
    k = p.k if p.k is not None else rng.choice((2, 3))
    base_artifact = {
        "theorem": TheoremId.LEMMA_CLOSURE_EQUIV.value,
        "k": k,
        "colored": instance_to_obj(colored),
    }
    closure = build_closure(colored, k, store_witnesses=False).closure
    for bits in range(1 << n):
        members = frozenset(v for v in range(n) if bits >> v & 1)
        direct = _khl_kernel_by_definition(colored, members, k)
        through_closure = is_independent(closure, members) and is_absorbent(
            closure, members
        )
        if direct != through_closure:
            return (
                {**base_artifact, "subset": sorted(members)},
                "closure_equivalence_violated",
            )
    return base_artifact, None


def _duchet_case(
    index: int, seed: int, size: int, p: _Params
) -> tuple[dict, str | None]:
    rng = make_rng(seed)
    n = rng.randint(3, size)
    digraph = _random_digraph(rng, n, rng.choice((0.2, 0.35, 0.5)))
    guard = 0
    while (cycle := has_asymmetric_cycle(digraph)) is not None:
        guard += 1
        if guard > n * n:  # pragma: no cover
            raise RuntimeError("symmetrizing arcs failed to kill all cycles")
        digraph = digraph.with_arcs([(cycle.vertices[1], cycle.vertices[0])])
    artifact = {
        "theorem": TheoremId.DUCHET_REDUCTION.value,
        "digraph": digraph_to_obj(digraph),
    }
    if find_kernel(digraph) is None:
        return artifact, "kernel_missing_without_asymmetric_cycles"
    return artifact, None


# ---- panchromatic summary ----------------------------------------

_PANCHROMATIC_ROWS: tuple[tuple[str, int, Callable], ...] = (
    ("semicomplete", 3, lambda rng, n: ClassLabel("semicomplete")),
    ("transitive", 2, lambda rng, n: ClassLabel("r_transitive", r=2)),
    ("r_transitive_r3", 3, lambda rng, n: ClassLabel("r_transitive", r=3)),
    ("quasi_transitive", 4, lambda rng, n: ClassLabel("quasi_transitive")),
    ("three_quasi_transitive", 5, lambda rng, n: ClassLabel("r_quasi_transitive", r=3)),
    (
        "multipartite_tournament",
        5,
        lambda rng, n: ClassLabel("multipartite_tournament", parts=rng.randint(2, min(4, n))),
    ),
)


def panchromatic_summary(size: int, instances: int, seed: int) -> list[dict]:
    """Kernel existence tallies per family row, across several random
    patterns and colorings per generated digraph."""
    if instances < 0:
        raise ConfigurationError("instances must be nonnegative")
    if instances == 0:
        return []
    if not 3 <= size <= 10:
        raise ConfigurationError("size must lie in 3..10")
    rows = []
    for row_index, (name, k, make_label) in enumerate(_PANCHROMATIC_ROWS):
        row_seed = derive_seed(seed, 1_000 + row_index)
        passes = failures = 0
        for i in range(instances):
            s = derive_seed(row_seed, i)
            rng = make_rng(s)
            n = rng.randint(3, size)
            label = make_label(rng, n)
            spec = GeneratorSpec(
                label, n, derive_seed(s, 101), arc_density=rng.choice((0.2, 0.3, 0.5))
            )
            digraph = generate(spec)
            for t in range(3):
                colored = _draw_coloring(rng, digraph, derive_seed(s, 202 + t))
                certificate = find_khl_kernel(colored, k)
                ok = certificate is not None and _khl_kernel_by_definition(
                    colored, certificate.members, k
                )
                if ok:
                    passes += 1
                else:
                    failures += 1
        rows.append(
            {
                "row": name,
                "k": k,
                "instances": instances,
                "colorings_per_instance": 3,
                "passes": passes,
                "failures": failures,
            }
        )
    return rows


# ---- configuration and dispatch ----------------------------------

_MIN_K: dict[TheoremId, int] = {
    TheoremId.SEMICOMPLETE_K3: 3,
    TheoremId.SEMICOMPLETE_HCYCLES_K2: 2,
    TheoremId.R_TRANSITIVE_KLH: 2,
    TheoremId.QUASI_TRANSITIVE_K4: 4,
    TheoremId.THREE_QT_K5: 5,
    TheoremId.MULTIPARTITE_K5: 5,
    TheoremId.LOCAL_IN_K: 2,
    TheoremId.LOCAL_OUT_K: 2,
    TheoremId.LEMMA_WALKS: 2,
    TheoremId.LEMMA_CLOSURE_EQUIV: 2,
}


def _validate_config(theorem: TheoremId, instances: int, size: int, p: _Params) -> None:
    if instances < 0:
        raise ConfigurationError("instances must be nonnegative")
    cap = 6 if theorem == TheoremId.LEMMA_CLOSURE_EQUIV else 12
    if not 3 <= size <= cap:
        raise ConfigurationError(
            f"size must lie in 3..{cap} for {theorem.value}, got {size}"
        )
    relevant = _RELEVANT_PARAMS[theorem]
    for name in ("k", "r", "l", "parts"):
        if getattr(p, name) is not None and name not in relevant:
            raise ConfigurationError(
                f"parameter {name} does not apply to {theorem.value}"
            )
    if p.k is not None and theorem in _MIN_K and p.k < _MIN_K[theorem]:
        raise ConfigurationError(
            f"{theorem.value} needs k >= {_MIN_K[theorem]}, got {p.k}"
        )
    if p.r is not None and p.r < 2:
        raise ConfigurationError("r must be at least 2")
    r_eff = p.r if p.r is not None else (3 if theorem in (
        TheoremId.R_TRANSITIVE_KLH, TheoremId.R_TRANSITIVE_K) else 2)
    if theorem in (TheoremId.R_TRANSITIVE_K, TheoremId.RQT_HCYCLES_K):
        if p.k is not None and p.k < r_eff:
            raise ConfigurationError(f"{theorem.value} needs k >= r = {r_eff}")
    if theorem == TheoremId.R_TRANSITIVE_KLH and p.l is not None:
        if p.l < max(1, r_eff - 1):
            raise ConfigurationError(
                f"{theorem.value} needs l >= r-1 = {r_eff - 1} (and l >= 1)"
            )
    if p.parts is not None:
        if p.parts < 2:
            raise ConfigurationError("parts must be at least 2")
        if p.parts > size:
            raise ConfigurationError("parts cannot exceed size")


def verify(
    theorem: TheoremId | str,
    instances: int,
    size: int,
    seed: int,
    *,
    k: int | None = None,
    r: int | None = None,
    l: int | None = None,
    parts: int | None = None,
    walks_per_instance: int = 10,
) -> VerificationReport:
    """Run one theorem suite over seeded instances and report violations.

    Parameters below their theorem's threshold are configuration errors,
    not failures.  When k (or l) is omitted, each instance draws one from
    the theorem's valid range, so a suite covers several thresholds.
    """
    try:
        theorem = TheoremId(theorem)
    except ValueError:
        raise ConfigurationError(f"unknown theorem id {theorem!r}") from None
    p = _Params(k=k, r=r, l=l, parts=parts)
    _validate_config(theorem, instances, size, p)
    started = time.perf_counter()
    failures: list[Failure] = []
    parameters: dict = {"size": size}
    for name in ("k", "r", "l", "parts"):
        value = getattr(p, name)
        if value is not None:
            parameters[name] = value

    if theorem == TheoremId.PANCHROMATIC_SUMMARY:
        rows = panchromatic_summary(min(size, 10), instances, seed)
        for row in rows:
            if row["failures"]:
                failures.append(
                    Failure(
                        index=len(failures),
                        seed=seed,
                        clause="panchromatic_row_failed",
                        artifact={"theorem": theorem.value, "row": row},
                    )
                )
    else:
        if theorem in _KERNEL_CHECKS:
            runner = lambda i, s: _kernel_case(theorem, i, s, size, p)
        elif theorem == TheoremId.LEMMA_WALKS:
            parameters["walks_per_instance"] = walks_per_instance
            runner = lambda i, s: _lemma_walks_case(i, s, size, p, walks_per_instance)
        elif theorem == TheoremId.LEMMA_SUBPATHS:
            runner = lambda i, s: _lemma_subpaths_case(i, s, size, p)
        elif theorem == TheoremId.LEMMA_CLOSURE_EQUIV:
            runner = lambda i, s: _lemma_closure_equiv_case(i, s, size, p)
        elif theorem == TheoremId.DUCHET_REDUCTION:
            runner = lambda i, s: _duchet_case(i, s, size, p)
        else:  # pragma: no cover
            raise ConfigurationError(f"no runner for {theorem.value}")
        for i in range(instances):
            instance_seed = derive_seed(seed, i)
            artifact, clause = runner(i, instance_seed)
            if clause is not None:
                failures.append(
                    Failure(index=i, seed=instance_seed, clause=clause, artifact=artifact)
                )

    elapsed = time.perf_counter() - started
    return VerificationReport(
        theorem=theorem.value,
        instances=instances,
        seed=seed,
        parameters=parameters,
        failures=failures,
        elapsed=elapsed,
    )


def replay_failure(artifact: dict) -> str | None:
    """Re-run the checks behind a failure artifact; returns the clause it
    violates now, or None when it no longer fails."""
    theorem = TheoremId(artifact["theorem"])
    if theorem in _KERNEL_CHECKS:
        colored = instance_from_obj(artifact["colored"])
        label = _label_from_obj(artifact["label"])
        return _kernel_clause(
            colored, artifact["k"], artifact["l"], label, _KERNEL_CHECKS[theorem]
        )
    if theorem == TheoremId.DUCHET_REDUCTION:
        digraph = digraph_from_obj(artifact["digraph"])
        if has_asymmetric_cycle(digraph) is None and find_kernel(digraph) is None:
            return "kernel_missing_without_asymmetric_cycles"
        return None
    if theorem == TheoremId.LEMMA_WALKS:
        colored = instance_from_obj(artifact["colored"])
        k = artifact["k"]
        walk = Walk(tuple(artifact["walk"]))
        part = artifact["part"]
        if part == "a":
            if h_length(colored, walk) > walk.length:
                return "open_walk_h_length_exceeds_length"
            return None
        closure = build_closure(colored, k, store_witnesses=False).closure
        if part == "b":
            witness = walk_implies_closure_arc(colored, walk, k)
            if h_length(colored, witness) > k - 1 or not closure.has_arc(
                walk.start, walk.end
            ):
                return "short_walk_closure_arc_missing"
            return None
        u, v = artifact["pair"]
        closed_walk_symmetric_pair(colored, walk, k, u, v)
        if not (closure.has_arc(u, v) and closure.has_arc(v, u)):
            return "closed_walk_pair_not_symmetric"
        return None
    if theorem == TheoremId.LEMMA_SUBPATHS:
        colored = instance_from_obj(artifact["colored"])
        cycle = Walk(tuple(artifact["walk"]))
        i, j = artifact["i"], artifact["j"]
        segment = Walk(cycle.vertices[i : j + 1])
        shifted = {t + i for t in obstructions(colored, segment)}
        if not shifted <= set(obstructions(colored, cycle)):
            return "subpath_obstructions_leak"
        return None
    if theorem == TheoremId.LEMMA_CLOSURE_EQUIV:
        colored = instance_from_obj(artifact["colored"])
        k = artifact["k"]
        members = frozenset(artifact["subset"])
        closure = build_closure(colored, k, store_witnesses=False).closure
        direct = _khl_kernel_by_definition(colored, members, k)
        through = is_independent(closure, members) and is_absorbent(closure, members)
        if direct != through:
            return "closure_equivalence_violated"
        return None
    raise ConfigurationError(f"replay not supported for {theorem.value}")


def search_conjecture(
    r: int, k: int, n_max: int, budget: int, seed: int
) -> ConjectureSearchResult:
    """Look for an r-quasi-transitive instance without a (k, H)-kernel.

    Colorings are left as drawn (no cycle repair), since the point is to
    probe the conjecture without its known sufficient conditions.  A
    counterexample is replayed before being reported, and comes with the
    exhaustive transcript showing every candidate set failing.
    """
    if r < 2:
        raise ConfigurationError("r must be at least 2")
    if k < r + 2:
        raise ConfigurationError("the conjecture concerns k >= r + 2")
    if not 3 <= n_max <= 8:
        raise ConfigurationError("n_max must lie in 3..8")
    if budget < 1:
        raise ConfigurationError("budget must be positive")
    label = ClassLabel("r_quasi_transitive", r=r)
    for i in range(budget):
        s = derive_seed(seed, i)
        rng = make_rng(s)
        n = rng.randint(3, n_max)
        spec = GeneratorSpec(
            label, n, derive_seed(s, 101), arc_density=rng.choice((0.1, 0.2, 0.3))
        )
        digraph = generate(spec)
        colored = _draw_coloring(rng, digraph, derive_seed(s, 202))
        if find_khl_kernel(colored, k) is not None:
            continue
        ok, _ = recognize(digraph, label)
        if not ok:  # pragma: no cover - generator guarantees membership
            raise RuntimeError("counterexample candidate left its class")
        replayed = instance_from_obj(instance_to_obj(colored))
        if find_khl_kernel(replayed, k) is not None:  # pragma: no cover
            raise RuntimeError("counterexample did not replay")
        closure = build_closure(colored, k, store_witnesses=False).closure
        candidates = []
        for candidate in maximal_independent_sets(closure):
            unabsorbed = next(
                v
                for v in range(closure.n)
                if v not in candidate
                and not any(w in candidate for w in closure.out_neighbors(v))
            )
            candidates.append({"set": list(candidate), "unabsorbed": unabsorbed})
        certificate = {
            "closure": digraph_to_obj(closure),
            "candidates": candidates,
        }
        counterexample = {
            "theorem": "conjecture",
            "label": _label_to_obj(label),
            "k": k,
            "l": k - 1,
            "colored": instance_to_obj(colored),
        }
        return ConjectureSearchResult(
            r=r,
            k=k,
            budget=budget,
            n_max=n_max,
            seed=seed,
            instances_tested=i + 1,
            counterexample=counterexample,
            certificate=certificate,
        )
    return ConjectureSearchResult(
        r=r,
        k=k,
        budget=budget,
        n_max=n_max,
        seed=seed,
        instances_tested=budget,
        counterexample=None,
        certificate=None,
    )
