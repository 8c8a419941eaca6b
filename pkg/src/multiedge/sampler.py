"""Exact uniform sampling of plane multi-edge trees with ``n`` edges.

A uniform tree is built in three independent draws:

1. the vertex count ``k``, with probability ``count_vertices_eq(n, k) / A_n``
   (exact integer weights, binary search on cumulative sums);
2. a uniform plane tree with ``k`` vertices, by rotating a random word of
   ``k - 1`` up-steps and ``k`` down-steps into its unique Lukasiewicz
   rotation (cycle lemma);
3. a uniform composition of ``n`` into ``k - 1`` parts, assigned to the
   edges of the plane tree in preorder.

Randomness comes from numpy's PCG64 bit generator. Only its raw 64-bit
output stream is used, which is fixed for a given seed on every platform;
bounded integers are derived from it here by masking and rejection.
"""

from __future__ import annotations

from bisect import bisect_right
from functools import lru_cache
from itertools import accumulate
from typing import Iterator

from numpy.random import PCG64

from .counting import a_n, vertex_weights
from .trees import MultiEdgeTree

__all__ = [
    "Rng",
    "sample_tree",
    "sample_trees",
    "sample_plane_tree",
    "sample_composition",
    "sample_vertex_count",
]


class Rng:
    """Seeded source of exact uniform integers of any size."""

    _BATCH = 512

    def __init__(self, seed: int):
        self._bits = PCG64(seed)
        self._buf: list[int] = []

    def _word(self) -> int:
        # batching does not change the order of the raw stream
        if not self._buf:
            self._buf = self._bits.random_raw(self._BATCH).tolist()[::-1]
        return self._buf.pop()

    def randbelow(self, m: int) -> int:
        """Uniform integer in ``[0, m)``; ``m`` may exceed 64 bits."""
        if m < 1:
            raise ValueError("m must be positive")
        if m == 1:
            return 0
        k = (m - 1).bit_length()
        nwords = (k + 63) // 64
        mask = (1 << k) - 1
        while True:
            x = 0
            for _ in range(nwords):
                x = (x << 64) | self._word()
            x &= mask
            if x < m:
                return x

    def sample_subset(self, population: int, r: int) -> list[int]:
        """Uniform ``r``-subset of ``range(population)``, sorted."""
        if not 0 <= r <= population:
            raise ValueError("subset size out of range")
        pool = list(range(population))
        for i in range(r):
            j = i + self.randbelow(population - i)
            pool[i], pool[j] = pool[j], pool[i]
        return sorted(pool[:r])


def _as_rng(rng) -> Rng:
    return rng if isinstance(rng, Rng) else Rng(rng)


@lru_cache(maxsize=32)
def _vertex_cumulative(n: int) -> tuple[tuple[int, ...], list[int]]:
    ks, weights = zip(*vertex_weights(n))
    cum = list(accumulate(weights))
    assert cum[-1] == a_n(n)
    return ks, cum


def sample_vertex_count(n: int, rng) -> int:
    """Vertex count of a uniform tree of size ``n``."""
    ks, cum = _vertex_cumulative(n)
    x = _as_rng(rng).randbelow(cum[-1])
    return ks[bisect_right(cum, x)]


def _plane_tree_word(k: int, rng: Rng) -> list[int]:
    # Lukasiewicz-type word: +1 opens an edge downwards, -1 closes one; the
    # last -1 is the sentinel left after rotation.
    length = 2 * k - 1
    ups = set(rng.sample_subset(length, k - 1))
    word = [1 if i in ups else -1 for i in range(length)]
    s, low, cut = 0, 0, 0
    for i, step in enumerate(word):
        s += step
        if s < low:
            low, cut = s, i + 1
    return word[cut:] + word[:cut]


def _tree_from_word(word: list[int], mults: list[int] | None = None) -> MultiEdgeTree:
    # word[:-1] is a Dyck path; up-steps are the edges in preorder
    stack: list[tuple[int, list]] = [(0, [])]
    edge = 0
    for step in word[:-1]:
        if step == 1:
            stack.append((mults[edge] if mults is not None else 1, []))
            edge += 1
        else:
            m, links = stack.pop()
            stack[-1][1].append((m, MultiEdgeTree(links)))
    assert len(stack) == 1
    return MultiEdgeTree(stack[0][1])


def sample_plane_tree(k: int, rng) -> MultiEdgeTree:
    """Uniform plane tree with ``k`` vertices (all multiplicities 1)."""
    if k < 1:
        raise ValueError("k must be positive")
    return _tree_from_word(_plane_tree_word(k, _as_rng(rng)))


def sample_composition(n: int, parts: int, rng) -> list[int]:
    """Uniform composition of ``n`` into ``parts`` positive parts."""
    if not 1 <= parts <= n:
        raise ValueError(f"need 1 <= parts <= n, got parts={parts}, n={n}")
    cuts = [c + 1 for c in _as_rng(rng).sample_subset(n - 1, parts - 1)]
    bounds = [0] + cuts + [n]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def _sample(n: int, rng: Rng) -> MultiEdgeTree:
    k = sample_vertex_count(n, rng)
    if k == 1:
        return MultiEdgeTree()
    word = _plane_tree_word(k, rng)
    return _tree_from_word(word, sample_composition(n, k - 1, rng))


def sample_tree(n: int, seed) -> MultiEdgeTree:
    """Uniform multi-edge tree with ``n`` edges.

    ``seed`` is an integer seed or an :class:`Rng` to draw from.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _sample(n, _as_rng(seed))


def sample_trees(n: int, count: int, seed) -> Iterator[MultiEdgeTree]:
    """``count`` independent uniform trees from one seeded stream."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = _as_rng(seed)
    for _ in range(count):
        yield _sample(n, rng)
