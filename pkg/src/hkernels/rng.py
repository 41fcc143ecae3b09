"""Seed handling for the generators and the verification harness.

Seeds are 64-bit naturals.  Derived streams come from mixing the base seed
with a stream index through a splitmix64 finalizer, so parallel or repeated
instance generation stays deterministic without sharing RNG state.
"""
from __future__ import annotations

import random

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

__all__ = ["derive_seed", "make_rng"]


def derive_seed(seed: int, index: int) -> int:
    """Stable 64-bit mix of a base seed and a stream index."""
    z = (seed ^ (index * _GOLDEN)) & _MASK64
    z = (z + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def make_rng(seed: int) -> random.Random:
    return random.Random(seed & _MASK64)
