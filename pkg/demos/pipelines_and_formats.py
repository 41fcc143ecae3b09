"""
Files, hashes, and the command line
===================================

Everything the tools exchange is canonical JSON: keys sorted, two-space
indent, one trailing newline.  Identical mathematical objects therefore
hash identically, and every command here is just the installed `hkernels`
entry point called in-process.
"""
import json
import tempfile
from pathlib import Path

from hkernels import (
    canonical_dumps,
    content_hash,
    instance_from_obj,
    instance_to_obj,
)
from hkernels.cli import main

workdir = Path(tempfile.mkdtemp(prefix="hkernels-demo-"))
instance = workdir / "instance.json"
closure = workdir / "closure.json"
report = workdir / "report.json"

# Generate a colored tournament.  The seed fixes the bytes on disk.
main(["gen", "--class", "tournament", "--n", "6", "--seed", "2718",
      "--repair-cycles", "3", "--out", str(instance)])

payload = json.loads(instance.read_text(encoding="utf-8"))
print(f"digraph n={payload['digraph']['n']}, "
      f"{len(payload['digraph']['arcs'])} arcs, "
      f"{len(payload['h']['arcs'])} pattern arcs")

# Canonical form means hashing the parsed object round-trips exactly.
colored = instance_from_obj(payload)
assert canonical_dumps(instance_to_obj(colored)) == instance.read_text(encoding="utf-8")
print(f"content hash: {content_hash(payload)[:16]}...")

# Score one two-arc walk read off the instance itself, then build the
# closure and search for a kernel.
arcs = {tuple(arc) for arc in payload["digraph"]["arcs"]}
u, v = min(arcs)
w = min(b for a, b in arcs if a == v and b != u)
main(["hlength", "--instance", str(instance), "--walk", f"{u},{v},{w}"])
main(["closure", "--instance", str(instance), "--k", "3", "--out", str(closure)])
closure_arcs = json.loads(closure.read_text(encoding="utf-8"))["closure"]["arcs"]
print(f"closure arcs at k=3: {len(closure_arcs)}")

main(["kernel", "--instance", str(instance), "--k", "3"])

# Suite reports land in the same canonical shape.
main(["verify", "--theorem", "semicomplete_k3", "--instances", "10",
      "--size", "7", "--seed", "5", "--json", str(report)])
print(f"report keys: {sorted(json.loads(report.read_text(encoding='utf-8')))}")
