"""Command-line front end for generation, closure, solving, and verification.

Every command is deterministic given its flags: seeds are explicit, and when
omitted a random one is drawn and printed so the run can be reproduced.
Informational lines go to stderr; JSON payloads go to stdout or --out, so
output can be piped.  Exit codes: 0 success, 1 a failure or counterexample
was found, 2 configuration or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from .coloring import h_length, obstructions
from .closure import build_closure
from .digraph import Walk
from .families import (
    CLASS_KINDS,
    ClassLabel,
    GeneratorSpec,
    generate,
    generate_h_coloring,
    recognize,
    repair_h_cycles,
)
from .harness import ConfigurationError, TheoremId, search_conjecture, verify
from .kernels import DEFAULT_MAX_N, find_khl_kernel
from .rng import derive_seed
from .serialize import (
    canonical_dumps,
    certificate_to_obj,
    closure_to_obj,
    instance_from_obj,
    instance_to_dot,
    instance_to_obj,
)

__all__ = ["main"]

MAX_N_ENV = "HKERNELS_MAX_N"


def _info(message: str) -> None:
    print(message, file=sys.stderr)


def _resolve_seed(seed: int | None) -> int:
    if seed is None:
        seed = random.randrange(2**32)
        _info(f"seed: {seed} (drawn at random; pass --seed {seed} to reproduce)")
    return seed


def _effective_max_n() -> int:
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{MAX_N_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigurationError(f"{MAX_N_ENV} must be positive, got {value}")
    if value > DEFAULT_MAX_N:
        _info(
            f"WARNING: {MAX_N_ENV}={value} overrides the exhaustive-search "
            f"guardrail (default {DEFAULT_MAX_N}); kernel search enumerates "
            "maximal independent sets and can take exponential time."
        )
    return value


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")
        _info(f"wrote {out}")


def _load_instance(path: str):
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    return instance_from_obj(data)


def _parse_walk(text: str) -> Walk:
    try:
        vertices = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(
            f"walk must be a comma-separated vertex list like 0,2,1, got {text!r}"
        ) from None
    if len(vertices) < 2:
        raise ValueError("a walk needs at least two vertices (one arc)")
    return Walk(vertices)


# ---- commands ----------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    label = ClassLabel(args.family_kind, r=args.r, parts=args.parts)
    spec = GeneratorSpec(
        label,
        args.n,
        derive_seed(seed, 0),
        arc_density=args.arc_density,
        h_colors=args.h_colors,
        h_density=args.h_density,
    )
    digraph = generate(spec)
    colored = generate_h_coloring(
        digraph, spec.h_colors, spec.h_density, derive_seed(seed, 1)
    )
    if args.repair_cycles is not None:
        colored = repair_h_cycles(colored, args.repair_cycles)
    ok, _ = recognize(digraph, label)
    if not ok:  # pragma: no cover - generate() already gates on this
        raise RuntimeError(f"generated digraph failed the {label} recognizer")
    _info(f"recognized: {label} (n={digraph.n}, {len(digraph.arcs)} arcs)")
    _emit(canonical_dumps(instance_to_obj(colored)), args.out)
    if args.dot is not None:
        Path(args.dot).write_text(instance_to_dot(colored), encoding="utf-8")
        _info(f"wrote {args.dot}")
    return 0


def _cmd_hlength(args: argparse.Namespace) -> int:
    colored = _load_instance(args.instance)
    walk = _parse_walk(args.walk)
    blocked = sorted(obstructions(colored, walk))
    print(f"h_length: {h_length(colored, walk)}")
    print(f"obstructions: {blocked}")
    return 0


def _cmd_closure(args: argparse.Namespace) -> int:
    colored = _load_instance(args.instance)
    result = build_closure(colored, args.k, store_witnesses=not args.no_witnesses)
    _emit(
        canonical_dumps(
            closure_to_obj(result, include_witnesses=not args.no_witnesses)
        ),
        args.out,
    )
    return 0


def _cmd_kernel(args: argparse.Namespace) -> int:
    colored = _load_instance(args.instance)
    certificate = find_khl_kernel(
        colored, args.k, args.l, max_n=_effective_max_n()
    )
    if certificate is None:
        print("none")
        return 0
    _emit(canonical_dumps(certificate_to_obj(certificate)), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    report = verify(
        args.theorem,
        args.instances,
        args.size,
        seed,
        k=args.k,
        r=args.r,
        l=args.l,
        parts=args.parts,
        walks_per_instance=args.walks_per_instance,
    )
    status = "PASS" if report.passed else "FAIL"
    _info(
        f"{report.theorem}: {report.instances} instances, "
        f"{len(report.failures)} failures: {status}"
    )
    for failure in report.failures:
        _info(f"  instance {failure.index} (seed {failure.seed}): {failure.clause}")
    if args.json is not None:
        _emit(report.to_json(), args.json)
    return 0 if report.passed else 1


def _cmd_conjecture(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args.seed)
    result = search_conjecture(args.r, args.k, args.nmax, args.budget, seed)
    if result.found:
        _info(
            f"counterexample found after {result.instances_tested} instances "
            f"(r={result.r}, k={result.k})"
        )
    else:
        _info(
            f"no counterexample in {result.instances_tested} instances "
            f"(r={result.r}, k={result.k}, n <= {result.n_max})"
        )
    _emit(result.to_json(), args.json)
    return 1 if result.found else 0


# ---- parser ------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hkernels",
        description=(
            "Generate pattern-colored digraphs, compute H-lengths and "
            "closures, search for (k,H)-kernels, and verify the "
            "existence theorems on seeded random instances."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser(
        "gen", help="generate a colored instance from a digraph family"
    )
    gen.add_argument(
        "--class",
        dest="family_kind",
        required=True,
        choices=CLASS_KINDS,
        help="digraph family to draw from",
    )
    gen.add_argument("--n", type=int, required=True, help="number of vertices")
    gen.add_argument("--seed", type=int, help="RNG seed (random and printed if omitted)")
    gen.add_argument("--r", type=int, help="r parameter for r_* families")
    gen.add_argument(
        "--parts", type=int, help="part count for multipartite tournaments"
    )
    gen.add_argument(
        "--arc-density",
        type=float,
        default=0.5,
        help="density knob used by families with optional arcs (default 0.5)",
    )
    gen.add_argument(
        "--h-colors", type=int, default=3, help="number of pattern colors (default 3)"
    )
    gen.add_argument(
        "--h-density",
        type=float,
        default=0.5,
        help="probability of each pattern arc, loops included (default 0.5)",
    )
    gen.add_argument(
        "--repair-cycles",
        type=int,
        metavar="LEN",
        help="extend the pattern until every cycle of this length is an H-cycle",
    )
    gen.add_argument("--out", help="write the instance JSON here instead of stdout")
    gen.add_argument("--dot", help="also write a DOT rendering to this path")
    gen.set_defaults(func=_cmd_gen)

    hlen = sub.add_parser(
        "hlength", help="H-length and obstruction positions of a walk"
    )
    hlen.add_argument("--instance", required=True, help="instance JSON file")
    hlen.add_argument(
        "--walk", required=True, help="comma-separated vertices, e.g. 0,2,1"
    )
    hlen.set_defaults(func=_cmd_hlength)

    clo = sub.add_parser(
        "closure", help="closure digraph whose arcs are short-H-length paths"
    )
    clo.add_argument("--instance", required=True, help="instance JSON file")
    clo.add_argument(
        "--k", type=int, required=True, help="paths of H-length <= k-1 become arcs"
    )
    clo.add_argument(
        "--no-witnesses", action="store_true", help="omit the witness path map"
    )
    clo.add_argument("--out", help="write the closure JSON here instead of stdout")
    clo.set_defaults(func=_cmd_closure)

    ker = sub.add_parser(
        "kernel", help="search for a (k,l,H)-kernel and print its certificate"
    )
    ker.add_argument("--instance", required=True, help="instance JSON file")
    ker.add_argument("--k", type=int, required=True, help="independence threshold")
    ker.add_argument(
        "--l", type=int, help="absorbency threshold (default k-1)"
    )
    ker.add_argument("--out", help="write the certificate JSON here instead of stdout")
    ker.set_defaults(func=_cmd_kernel)

    ver = sub.add_parser("verify", help="run one theorem suite on seeded instances")
    ver.add_argument(
        "--theorem",
        required=True,
        choices=[t.value for t in TheoremId],
        help="which statement to check",
    )
    ver.add_argument("--instances", type=int, required=True)
    ver.add_argument("--size", type=int, required=True, help="largest vertex count")
    ver.add_argument("--seed", type=int, help="RNG seed (random and printed if omitted)")
    ver.add_argument("--k", type=int, help="fixed k (drawn per instance if omitted)")
    ver.add_argument("--r", type=int, help="r parameter where the theorem takes one")
    ver.add_argument("--l", type=int, help="fixed l (defaults per theorem)")
    ver.add_argument("--parts", type=int, help="part count for multipartite suites")
    ver.add_argument(
        "--walks-per-instance",
        type=int,
        default=10,
        help="sampled walks per instance in the walk lemma suite (default 10)",
    )
    ver.add_argument("--json", help="write the canonical report JSON here")
    ver.set_defaults(func=_cmd_verify)

    con = sub.add_parser(
        "conjecture",
        help="search r-quasi-transitive instances for a missing (k,H)-kernel",
    )
    con.add_argument("--r", type=int, required=True)
    con.add_argument("--k", type=int, required=True, help="must be at least r+2")
    con.add_argument("--budget", type=int, required=True, help="instances to try")
    con.add_argument("--nmax", type=int, required=True, help="largest vertex count")
    con.add_argument("--seed", type=int, help="RNG seed (random and printed if omitted)")
    con.add_argument("--json", help="write the result JSON here instead of stdout")
    con.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigurationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
