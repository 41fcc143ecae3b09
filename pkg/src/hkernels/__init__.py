"""Kernels in pattern-colored digraphs.

A digraph is colored by a pattern: every arc gets a color, and the pattern
digraph (loops allowed) says which color pairs may follow each other on a
walk without penalty.  The H-length of a walk counts the positions where
its consecutive colors are not a pattern arc, plus one if the walk is open.
A (k,l,H)-kernel is a set that no two members can reach each other below
H-length k, while every outside vertex reaches the set within H-length l.

The package provides the walk/closure calculus, exact solvers with
certificates, recognizers and seeded generators for tournament-like digraph
families, and a randomized harness that checks the known existence theorems
and probes the open range beyond them.
"""
from .closure import (
    ClosureResult,
    build_closure,
    closed_walk_symmetric_pair,
    has_asymmetric_cycle,
    walk_implies_closure_arc,
)
from .coloring import (
    HColoredDigraph,
    PatternDigraph,
    bounded_h_length_path,
    h_length,
    is_h_cycle,
    is_h_path,
    min_h_length_path,
    obstructions,
)
from .digraph import (
    Digraph,
    StrongComponents,
    Walk,
    enumerate_cycles,
    enumerate_simple_paths,
    extract_simple_path,
    geodesic_distance,
    is_cycle,
    is_path,
    is_symmetric_arc,
    strong_components,
)
from .families import (
    CLASS_KINDS,
    ClassLabel,
    GeneratorSpec,
    generate,
    generate_h_coloring,
    multipartite_partition,
    recognize,
    repair_h_cycles,
)
from .harness import (
    ConfigurationError,
    ConjectureSearchResult,
    Failure,
    TheoremId,
    VerificationReport,
    panchromatic_summary,
    replay_failure,
    search_conjecture,
    verify,
)
from .kernels import (
    DEFAULT_MAX_N,
    KernelCertificate,
    absorbing_king,
    find_kernel,
    find_khl_kernel,
    is_absorbent,
    is_independent,
    is_k_h_independent,
    is_l_h_absorbent,
    kernel_by_paths,
    maximal_independent_sets,
    quasi_kernel,
)
from .rng import derive_seed, make_rng
from .serialize import (
    canonical_dumps,
    certificate_to_obj,
    closure_to_obj,
    content_hash,
    digraph_from_obj,
    digraph_to_obj,
    instance_from_obj,
    instance_to_dot,
    instance_to_obj,
    walk_from_obj,
    walk_to_obj,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # digraph
    "Digraph",
    "Walk",
    "StrongComponents",
    "enumerate_cycles",
    "enumerate_simple_paths",
    "extract_simple_path",
    "geodesic_distance",
    "is_cycle",
    "is_path",
    "is_symmetric_arc",
    "strong_components",
    # coloring
    "PatternDigraph",
    "HColoredDigraph",
    "obstructions",
    "h_length",
    "is_h_path",
    "is_h_cycle",
    "bounded_h_length_path",
    "min_h_length_path",
    # closure
    "ClosureResult",
    "build_closure",
    "walk_implies_closure_arc",
    "closed_walk_symmetric_pair",
    "has_asymmetric_cycle",
    # rng
    "derive_seed",
    "make_rng",
    # kernels
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
    # families
    "CLASS_KINDS",
    "ClassLabel",
    "GeneratorSpec",
    "recognize",
    "generate",
    "generate_h_coloring",
    "repair_h_cycles",
    "multipartite_partition",
    # harness
    "ConfigurationError",
    "TheoremId",
    "Failure",
    "VerificationReport",
    "ConjectureSearchResult",
    "verify",
    "replay_failure",
    "search_conjecture",
    "panchromatic_summary",
    # serialization
    "canonical_dumps",
    "content_hash",
    "digraph_to_obj",
    "digraph_from_obj",
    "instance_to_obj",
    "instance_from_obj",
    "walk_to_obj",
    "walk_from_obj",
    "certificate_to_obj",
    "closure_to_obj",
    "instance_to_dot",
]
