"""Generalized Sierpinski graphs S(G, t) over words of length t.

A vertex is a word ``w = (w_1, ..., w_t)`` over the base vertex set, stored
under its big-endian mixed-radix index ``sum(w_i * n**(t - i))``. For every
base edge {x, y}, level r in 1..t and prefix w of length t - r, the words
``w x y^(r-1)`` and ``w y x^(r-1)`` are adjacent.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import Graph, GraphError

DEFAULT_MAX_VERTICES = 10**6

Word = tuple[int, ...]


class SizeLimitError(GraphError):
    pass


def word_to_index(w: Sequence[int], n: int) -> int:
    idx = 0
    for letter in w:
        if not 0 <= letter < n:
            raise IndexError(f"letter {letter} out of range for alphabet size {n}")
        idx = idx * n + letter
    return idx


def index_to_word(i: int, n: int, t: int) -> Word:
    if not 0 <= i < n**t:
        raise IndexError(f"index {i} out of range [0, {n ** t})")
    letters = [0] * t
    for pos in range(t - 1, -1, -1):
        i, letters[pos] = divmod(i, n)
    return tuple(letters)


def format_word(w: Sequence[int]) -> str:
    return ".".join(str(x) for x in w)


@dataclass(frozen=True)
class SierpinskiGraph:
    base: Graph
    t: int
    graph: Graph

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def extremes(self) -> list[int]:
        return extreme_vertices(self)

    def word(self, i: int) -> Word:
        return index_to_word(i, self.base.n, self.t)

    def index(self, w: Sequence[int]) -> int:
        if len(w) != self.t:
            raise IndexError(f"word length {len(w)} != t={self.t}")
        return word_to_index(w, self.base.n)


def sierpinski_edges(base: Graph, t: int) -> np.ndarray:
    """Edge array of shape (m * (n^t - 1)/(n - 1), 2), rows (min, max)."""
    n = base.n
    if not base.edges:
        return np.zeros((0, 2), dtype=np.int64)
    be = np.asarray(base.edges, dtype=np.int64)
    x, y = be[:, 0], be[:, 1]
    blocks = []
    for r in range(1, t + 1):
        # value of the repeated tail letter block z^(r-1)
        rep = (n ** (r - 1) - 1) // (n - 1)
        a = x * n ** (r - 1) + y * rep
        b = y * n ** (r - 1) + x * rep
        prefixes = np.arange(n ** (t - r), dtype=np.int64)[:, None] * n**r
        u = (prefixes + a[None, :]).ravel()
        v = (prefixes + b[None, :]).ravel()
        blocks.append(np.stack([np.minimum(u, v), np.maximum(u, v)], axis=1))
    return np.concatenate(blocks)


def sierpinski(base: Graph, t: int, max_vertices: int = DEFAULT_MAX_VERTICES) -> SierpinskiGraph:
    if base.n < 2:
        raise GraphError(f"base graph must have order >= 2, got {base.n}")
    if t < 1:
        raise GraphError(f"depth t must be >= 1, got {t}")
    if base.n**t > max_vertices:
        raise SizeLimitError(
            f"S(G,{t}) would have {base.n}^{t} = {base.n ** t} vertices, limit is {max_vertices}"
        )
    edges = sierpinski_edges(base, t)
    g = Graph.from_edges(base.n**t, map(tuple, edges.tolist()))
    return SierpinskiGraph(base, t, g)


def extreme_vertices(s: SierpinskiGraph) -> list[int]:
    n, t = s.base.n, s.t
    rep = (n**t - 1) // (n - 1)
    return [x * rep for x in range(n)]


def copy_partition(s: SierpinskiGraph, w: Sequence[int]) -> list[int]:
    """Indices of the words ``w j`` for j over the base vertices, in order of j.

    Vertex j of the base maps to entry j, and the induced subgraph is a copy
    of the base under that map.
    """
    if len(w) != s.t - 1:
        raise IndexError(f"prefix must have length t-1={s.t - 1}, got {len(w)}")
    n = s.base.n
    start = word_to_index(w, n) * n
    return list(range(start, start + n))


def edge_level(u: Sequence[int], v: Sequence[int]) -> int | None:
    """The level r for which ``u = w x y^(r-1)`` and ``v = w y x^(r-1)``, else None.

    Only checks the word shape; base adjacency of x and y is the caller's concern.
    """
    t = len(u)
    i = next((k for k in range(t) if u[k] != v[k]), None)
    if i is None:
        return None
    x, y = u[i], v[i]
    if all(u[j] == y and v[j] == x for j in range(i + 1, t)):
        return t - i
    return None
