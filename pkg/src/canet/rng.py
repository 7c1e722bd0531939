"""Deterministic, splittable random streams.

Every source of randomness in the package (init, dropout, shuffling,
augmentation, synthetic data) draws from an `RngState`. A state is a
Philox counter-based generator keyed by ``(seed, stream)``, so identical
seeds reproduce identical draws on every platform, and independent
streams can be split off cheaply (e.g. one augmentation stream per
sample index) without sharing state between threads.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def _mix(a: int, b: int) -> int:
    """splitmix64-style combine of two 64-bit words."""
    x = (a + 0x9E3779B97F4A7C15 + b) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


class RngState:
    """A named, reproducible random stream.

    Attributes:
        seed: master seed shared by all streams split from the same root.
        stream: 64-bit stream id; `child(i)` derives disjoint sub-streams.
    """

    def __init__(self, seed: int, stream: int = 0):
        self.seed = int(seed) & _MASK64
        self.stream = int(stream) & _MASK64
        self._gen = np.random.Generator(
            np.random.Philox(key=[self.seed, self.stream])
        )

    def child(self, stream: int) -> "RngState":
        """Split off an independent stream; deterministic in (seed, stream)."""
        return RngState(self.seed, _mix(self.stream, int(stream) & _MASK64))

    def uniform(self, shape=(), low: float = 0.0, high: float = 1.0) -> np.ndarray:
        return self._gen.uniform(low, high, size=shape)

    def normal(self, shape=(), std: float = 1.0) -> np.ndarray:
        return self._gen.normal(0.0, std, size=shape)

    def integers(self, low: int, high: int, shape=()) -> np.ndarray:
        """Uniform integers in [low, high)."""
        return self._gen.integers(low, high, size=shape)

    def permutation(self, n: int) -> np.ndarray:
        return self._gen.permutation(n)

    def state_dict(self) -> dict:
        return {"seed": self.seed, "stream": self.stream}

    @classmethod
    def from_state_dict(cls, d: dict) -> "RngState":
        return cls(d["seed"], d["stream"])

    def __repr__(self) -> str:
        return f"RngState(seed={self.seed}, stream={self.stream})"
