"""Reproducible random frameworks and permutations.

Randomness comes from numpy's ``PCG64`` bit generator keyed by a ``SeedSequence``
with ``spawn_key=(stream, *path)``. Only raw 64-bit outputs are consumed:

* a uniform double is ``(raw >> 11) * 2**-53``;
* a uniform integer in ``[0, m)`` takes ``raw % m`` after rejecting
  ``raw >= m * (2**64 // m)``.

Both bit generators and seed sequences are stream-stable across numpy releases,
so the same seed gives the same framework everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .framework import ArgumentationFramework

SEED_MAX = 2**64 - 1

STREAM_EDGES = 1
STREAM_PERMUTATION = 2
STREAM_TRIAL = 3
STREAM_SUBSETS = 4


def parse_seed(text: str | int) -> int:
    """Accept a seed as an int, decimal text, or ``0x`` hex text."""
    if isinstance(text, int):
        seed = text
    else:
        text = text.strip().lower()
        seed = int(text, 16) if text.startswith("0x") else int(text, 10)
    if not 0 <= seed <= SEED_MAX:
        raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed}")
    return seed


class Stream:
    """A deterministic stream of uniforms derived from ``(seed, stream, *path)``."""

    def __init__(self, seed: int, stream: int, *path: int):
        seed = parse_seed(seed)
        self._bits = np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(stream, *path)))

    def raw(self, size: int) -> np.ndarray:
        return self._bits.random_raw(size)

    def uniforms(self, size: int) -> np.ndarray:
        return (self.raw(size) >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def uniform(self) -> float:
        return float(self.uniforms(1)[0])

    def below(self, m: int) -> int:
        """Uniform integer in ``[0, m)``."""
        if m <= 0:
            raise ValueError("m must be positive")
        limit = (2**64 // m) * m
        while True:
            r = int(self.raw(1)[0])
            if r < limit:
                return r % m


def derive_seed(seed: int, stream: int, *path: int) -> int:
    return int(np.random.SeedSequence(parse_seed(seed), spawn_key=(stream, *path)).generate_state(1, np.uint64)[0])


@dataclass(frozen=True)
class GenSpec:
    n: int
    edge_prob: float
    allow_self_attacks: bool = True
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise ValueError("edge_prob must lie in [0, 1]")
        parse_seed(self.seed)


def random_af(spec: GenSpec) -> ArgumentationFramework:
    """Each ordered pair becomes an attack independently with probability ``edge_prob``.

    Pairs are visited attacker-major; one uniform is drawn per pair (self pairs
    included, even when self-attacks are disallowed, so toggling the flag does not
    shift the other edges).
    """
    n = spec.n
    u = Stream(spec.seed, STREAM_EDGES).uniforms(n * n).reshape(n, n)
    hit = u < spec.edge_prob
    if not spec.allow_self_attacks:
        np.fill_diagonal(hit, False)
    attackers, targets = np.nonzero(hit)
    return ArgumentationFramework([f"a{i}" for i in range(n)], zip(attackers.tolist(), targets.tolist()))


def random_permutation(n: int, seed: int, *path: int) -> list[int]:
    """Fisher-Yates shuffle of ``range(n)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    stream = Stream(seed, STREAM_PERMUTATION, *path)
    perm = list(range(n))
    for i in range(n - 1, 0, -1):
        j = stream.below(i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm
