"""Portable deterministic random numbers for the synthetic trace generator.

The stream is fixed so that any implementation can reproduce a corpus
bit-for-bit from a seed; nothing here depends on numpy's or Python's own
generators.

Uniforms
    SplitMix64. With ``s`` the 64-bit seed and ``G = 0x9E3779B97F4A7C15``,
    the k-th output (k = 0, 1, ...) mixes ``x = s + (k + 1) * G mod 2**64``::

        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9   mod 2**64
        x = (x ^ (x >> 27)) * 0x94D049BB133111EB   mod 2**64
        x =  x ^ (x >> 31)

    and is mapped to ``[0, 1)`` as ``(x >> 11) * 2**-53``.

Normals
    The j-th standard normal uses uniforms ``u = U[2j]`` and ``v = U[2j+1]``
    (Box-Muller, cosine branch only)::

        z_j = sqrt(-2 * ln(1 - u)) * cos(2 * pi * v)
"""

from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


def check_seed(seed: int) -> int:
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise TypeError(f"seed must be an integer, got {type(seed).__name__}")
    seed = int(seed)
    if not 0 <= seed <= MASK64:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
    return seed


class SplitMix64:
    """Scalar reference generator; :func:`uniforms` is the vectorised path."""

    def __init__(self, seed: int):
        self.state = check_seed(seed)

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK64
        x = self.state
        x = ((x ^ (x >> 30)) * MIX1) & MASK64
        x = ((x ^ (x >> 27)) * MIX2) & MASK64
        return x ^ (x >> 31)

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0**-53


def _mix(x: np.ndarray) -> np.ndarray:
    x = (x ^ (x >> np.uint64(30))) * np.uint64(MIX1)
    x = (x ^ (x >> np.uint64(27))) * np.uint64(MIX2)
    return x ^ (x >> np.uint64(31))


def uniforms(seed: int, count: int, start: int = 0) -> np.ndarray:
    """Outputs ``start .. start+count-1`` of the stream, as floats in [0, 1)."""
    seed = check_seed(seed)
    k = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        x = np.uint64(seed) + k * np.uint64(GAMMA)
        bits = _mix(x)
    return (bits >> np.uint64(11)).astype(np.float64) * 2.0**-53


def normals(seed: int, count: int) -> np.ndarray:
    u = uniforms(seed, 2 * count)
    radius = np.sqrt(-2.0 * np.log(1.0 - u[0::2]))
    return radius * np.cos(2.0 * np.pi * u[1::2])
