"""Deterministic PRNG used by the match engine and for seed derivation.

The engine treats game states as values, so the PRNG state must be cheap to
copy and stable across platforms and Python versions. A splitmix64 stream
(state = one 64-bit int) satisfies both, unlike ``random.Random`` whose
Mersenne state is a 625-word tuple.
"""

from __future__ import annotations

_MASK = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15
_FORK_SALT = 0xD6E8FEB86659FD93


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


def mix64(*parts: int) -> int:
    """Hash a tuple of integers into one 64-bit seed.

    Used to derive independent child seeds from (master seed, generation,
    pair ids, deck indices, game index, ...) so that evaluation order and
    worker scheduling never change which games get which seeds.
    """
    acc = 0x243F6A8885A308D3
    for p in parts:
        acc = _mix((acc + (p & _MASK)) & _MASK)
    return acc


class MatchRng:
    """splitmix64 stream with the few draw primitives the engine needs."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def clone(self) -> "MatchRng":
        c = MatchRng.__new__(MatchRng)
        c.state = self.state
        return c

    def fork(self) -> "MatchRng":
        """Derive an independent stream without advancing this one."""
        return MatchRng(_mix(self.state ^ _FORK_SALT))

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        return _mix(self.state)

    def randrange(self, n: int) -> int:
        """Uniform int in [0, n) via rejection sampling (no modulo bias)."""
        if n <= 0:
            raise ValueError("randrange() bound must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            v = self.next_u64()
            if v < limit:
                return v % n

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(i + 1)
            items[i], items[j] = items[j], items[i]
