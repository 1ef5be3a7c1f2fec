"""Simple undirected graphs on 0-based vertex indices.

Text format, one record per line::

    # comments start with '#'
    n m
    u v        (m lines)
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import numpy as np


class GraphError(ValueError):
    pass


class GraphParseError(GraphError):
    def __init__(self, lineno: int, msg: str):
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple graph. Build with :meth:`from_edges`."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[frozenset[int], ...] = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 1:
            raise GraphError(f"graph order must be >= 1, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            e = _norm(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in seen:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(sorted(seen)), tuple(frozenset(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """(indptr, indices) with sorted neighbor lists, int64."""
        deg = np.fromiter((len(a) for a in self.adjacency), dtype=np.int64, count=self.n)
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.fromiter(
            (u for a in self.adjacency for u in sorted(a)), dtype=np.int64, count=int(indptr[-1])
        )
        return indptr, indices

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbor sets as integer bitmasks."""
        return tuple(sum(1 << u for u in a) for a in self.adjacency)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str) -> Graph:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            a, b = (int(p) for p in parts)
        except ValueError:
            raise GraphParseError(lineno, f"expected two integers, got {line!r}") from None
        if header is None:
            if a < 1 or b < 0:
                raise GraphParseError(lineno, f"malformed header {line!r}")
            header = (a, b)
            continue
        n = header[0]
        if len(edges) == header[1]:
            raise GraphParseError(lineno, f"more than {header[1]} edge lines")
        if a == b:
            raise GraphParseError(lineno, f"self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphParseError(lineno, f"index out of range [0, {n})")
        e = _norm(a, b)
        if e in seen:
            raise GraphParseError(lineno, f"duplicate edge {e[0]} {e[1]}")
        seen.add(e)
        edges.append(e)
    if header is None:
        raise GraphParseError(0, "missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphParseError(0, f"header declares {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def emit_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines)


def read_graph(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(g: Graph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_graph(g) + "\n")


# generators


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; the center is vertex 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def gnp_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    draws = rng.random(n * (n - 1) // 2)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph.from_edges(n, (e for e, x in zip(pairs, draws) if x < p))


def induced_subgraph(g: Graph, u: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``u``; returns it with the new-to-original index map."""
    index_map = sorted(set(u))
    if not index_map:
        raise GraphError("induced subgraph needs a non-empty vertex set")
    for v in index_map:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(index_map)}
    edges = [(pos[a], pos[b]) for a, b in g.edges if a in pos and b in pos]
    return Graph.from_edges(len(index_map), edges), index_map


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    return all(not (g.adjacency[v] & s) for v in s)


def independence_number(g: Graph) -> tuple[int, frozenset[int]]:
    """Exact maximum independent set by branching on a max-degree vertex."""
    masks = g.masks
    best = [0, 0]  # size, mask

    def popcount(x: int) -> int:
        return bin(x).count("1")

    def search(cand: int, chosen: int, size: int) -> None:
        if size + popcount(cand) <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        # vertices with no candidate neighbours can always be taken
        pick, pick_deg = -1, -1
        free = 0
        c = cand
        while c:
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            d = popcount(masks[v] & cand)
            if d == 0:
                free |= low
            elif d > pick_deg:
                pick, pick_deg = v, d
        if free:
            search(cand & ~free, chosen | free, size + popcount(free))
            return
        bit = 1 << pick
        search(cand & ~bit & ~masks[pick], chosen | bit, size + 1)
        search(cand & ~bit, chosen, size)

    search((1 << g.n) - 1, 0, 0)
    witness = frozenset(v for v in range(g.n) if best[1] >> v & 1)
    return best[0], witness


def named_graph(spec: str, rng: np.random.Generator | None = None) -> Graph:
    """Build a graph from ``family:args``: complete:n, path:n, cycle:n, star:k, empty:n, gnp:n:p."""
    family, _, args = spec.partition(":")
    parts = args.split(":") if args else []
    try:
        if family == "gnp":
            n, p = int(parts[0]), float(parts[1])
            return gnp_graph(n, p, rng if rng is not None else np.random.default_rng(0))
        (k,) = (int(x) for x in parts)
    except (ValueError, IndexError):
        raise GraphError(f"malformed graph spec {spec!r}") from None
    builders = {
        "complete": complete_graph,
        "path": path_graph,
        "cycle": cycle_graph,
        "star": star_graph,
        "empty": empty_graph,
    }
    if family not in builders:
        raise GraphError(f"unknown graph family {family!r}")
    return builders[family](k)
