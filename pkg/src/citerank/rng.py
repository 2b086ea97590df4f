"""Seedable, portable pseudo-random generator (splitmix64).

The generator is frozen so that synthetic fixtures reproduce bit-for-bit
across machines and across reimplementations in other languages:

* state update:  ``s = (s + 0x9E3779B97F4A7C15) mod 2**64``
* output mix:    ``z = s; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9;
  z = (z ^ z>>27) * 0x94D049BB133111EB; z = z ^ z>>31`` (all mod 2**64)
* bounded draw:  ``below(n) = next() % n``
* shuffle:       Fisher-Yates from the top, ``j = below(i + 1)`` for
  ``i = len-1 .. 1``, swapping ``seq[i]`` and ``seq[j]``

Because the state sequence is an arithmetic progression mod 2**64, blocks
of draws can be produced vectorized; ``next_array`` returns exactly the
values ``next()`` would have produced and advances the stream identically.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64 stream seeded with a 64-bit unsigned integer."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        if not 0 <= seed <= _MASK:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self._state = seed

    def next(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def next_array(self, count: int) -> np.ndarray:
        """Next `count` outputs as a uint64 array (vectorized, same stream)."""
        idx = np.arange(1, count + 1, dtype=np.uint64)
        states = np.uint64(self._state) + idx * np.uint64(_GOLDEN)
        self._state = (self._state + count * _GOLDEN) & _MASK
        z = states ^ (states >> np.uint64(30))
        z *= np.uint64(_MIX1)
        z ^= z >> np.uint64(27)
        z *= np.uint64(_MIX2)
        return z ^ (z >> np.uint64(31))

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n); frozen as plain modulo reduction."""
        if n <= 0:
            raise ValueError(f"bound must be positive, got {n}")
        return self.next() % n

    def shuffle(self, seq: list) -> None:
        """In-place Fisher-Yates shuffle using `below`."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.below(i + 1)
            seq[i], seq[j] = seq[j], seq[i]
