"""Canonical JSON forms for digraphs, colored instances, and results.

All serializers sort keys and arc lists, so equal values produce identical
bytes and diffs between files stay meaningful.  Parsers validate through the
ordinary constructors, hence loops, range errors, and partial colorings are
rejected with the same messages as programmatic construction.
"""
from __future__ import annotations

import hashlib
import json
from typing import Any, Mapping

from .closure import ClosureResult
from .coloring import HColoredDigraph, PatternDigraph
from .digraph import Digraph, Walk
from .kernels import KernelCertificate

__all__ = [
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


def canonical_dumps(obj: Any) -> str:
    """Pretty canonical text: sorted keys, two-space indent, one trailing
    newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def content_hash(obj: Any) -> str:
    """sha256 of the compact canonical encoding."""
    packed = json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return hashlib.sha256(packed.encode("utf-8")).hexdigest()


def digraph_to_obj(digraph: Digraph) -> dict:
    return {"n": digraph.n, "arcs": [[u, v] for u, v in digraph.arc_list()]}


def _expect(obj: Any, key: str) -> Any:
    if not isinstance(obj, Mapping) or key not in obj:
        raise ValueError(f"missing field {key!r}")
    return obj[key]


def digraph_from_obj(obj: Any) -> Digraph:
    n = _expect(obj, "n")
    arcs = _expect(obj, "arcs")
    try:
        return Digraph(int(n), [(int(u), int(v)) for u, v in arcs])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad digraph object: {exc}") from exc


def instance_to_obj(colored: HColoredDigraph) -> dict:
    return {
        "digraph": digraph_to_obj(colored.base),
        "h": {
            "m": colored.pattern.m,
            "arcs": [[a, b] for a, b in colored.pattern.arc_list()],
        },
        "colors": [[u, v, c] for u, v, c in colored.colored_arcs()],
    }


def instance_from_obj(obj: Any) -> HColoredDigraph:
    base = digraph_from_obj(_expect(obj, "digraph"))
    h = _expect(obj, "h")
    colors = _expect(obj, "colors")
    try:
        pattern = PatternDigraph(
            int(_expect(h, "m")), [(int(a), int(b)) for a, b in _expect(h, "arcs")]
        )
        triples = [(int(u), int(v), int(c)) for u, v, c in colors]
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad instance object: {exc}") from exc
    return HColoredDigraph(base, pattern, triples)


def walk_to_obj(walk: Walk) -> list[int]:
    return list(walk.vertices)


def walk_from_obj(obj: Any) -> Walk:
    try:
        return Walk(tuple(int(x) for x in obj))
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad walk object: {exc}") from exc


def certificate_to_obj(certificate: KernelCertificate) -> dict:
    return {
        "kind": certificate.kind,
        "set": sorted(certificate.members),
        "k": certificate.k,
        "l": certificate.l,
        "witnesses": {
            str(v): walk_to_obj(w) for v, w in sorted(certificate.witnesses.items())
        },
    }


def closure_to_obj(result: ClosureResult, *, include_witnesses: bool = True) -> dict:
    obj: dict[str, Any] = {
        "closure": digraph_to_obj(result.closure),
        "k": result.k,
    }
    if include_witnesses and result.witnesses is not None:
        obj["witnesses"] = {
            f"{u}->{v}": walk_to_obj(w)
            for (u, v), w in sorted(result.witnesses.items())
        }
    return obj


def instance_to_dot(colored: HColoredDigraph) -> str:
    """GraphViz text with arcs labelled by their color name c<i>."""
    lines = ["digraph {"]
    for v in range(colored.base.n):
        lines.append(f"  {v};")
    for u, v, c in colored.colored_arcs():
        lines.append(f'  {u} -> {v} [label="c{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
