"""Seedable random streams.

A stream is identified by ``(seed, stream)``; ``stream`` is an int or a tuple
of ints and becomes the spawn key of a numpy ``SeedSequence``, so distinct
streams of one seed are independent by construction. The bit generator is
PCG64.
"""

from __future__ import annotations

import numpy as np

DEFAULT_SEED = 20231027

_WORDS = 1024


class RngStream:
    def __init__(self, seed: int = DEFAULT_SEED, stream: int | tuple[int, ...] = 0):
        key = stream if isinstance(stream, tuple) else (stream,)
        self.seed = seed
        self.stream = key
        ss = np.random.SeedSequence(entropy=seed, spawn_key=key)
        self._bitgen = np.random.PCG64(ss)
        self.generator = np.random.Generator(self._bitgen)
        self._buf = b""
        self._pos = 0

    def __repr__(self):
        return f"RngStream(seed={self.seed}, stream={self.stream})"

    def _take_words(self, w: int) -> bytes:
        end = self._pos + 8 * w
        if end > len(self._buf):
            rest = self._buf[self._pos :]
            need = max(_WORDS, w)
            self._buf = rest + self._bitgen.random_raw(need).astype("<u8").tobytes()
            self._pos, end = 0, 8 * w
        out = self._buf[self._pos : end]
        self._pos = end
        return out

    def getrandbits(self, bits: int) -> int:
        """A uniform integer in [0, 2**bits), assembled from 64-bit words."""
        if bits <= 0:
            return 0
        w = (bits + 63) // 64
        x = int.from_bytes(self._take_words(w), "little")
        return x >> (64 * w - bits)

    def uniform_below(self, m: int) -> int:
        """Exactly uniform on [0, m) by rejection on bit_length(m)-bit blocks."""
        if m < 1:
            raise ValueError(f"uniform_below needs m >= 1, got {m}")
        if m == 1:
            return 0
        bits = (m - 1).bit_length()
        while True:
            x = self.getrandbits(bits)
            if x < m:
                return x

    def integers(self, q: int, size) -> np.ndarray:
        """Array of independent uniform draws on [0, q)."""
        return self.generator.integers(0, q, size=size, dtype=np.int64)


def uniform_below(m: int, rng: RngStream) -> int:
    return rng.uniform_below(m)
