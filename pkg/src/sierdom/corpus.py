"""Fixed-seed corpus of small graphs used by the checks and the CLI."""
from __future__ import annotations

import numpy as np

from .graph import Graph, complete_graph, cycle_graph, gnp_graph, path_graph, star_graph

DEFAULT_SEED = 20190501
DENSITIES = (0.3, 0.5, 0.8)


def corpus(seed: int = DEFAULT_SEED, max_n: int = 10) -> list[tuple[str, Graph]]:
    """Random G(n, p) for each density plus paths, cycles, stars and complete graphs.

    Deterministic for a given ``seed``; with the defaults it holds 64 graphs.
    """
    rng = np.random.default_rng(seed)
    out: list[tuple[str, Graph]] = []
    for p in DENSITIES:
        for n in range(2, max_n + 1):
            out.append((f"gnp:{n}:{p}", gnp_graph(n, p, rng)))
    out += [(f"path:{n}", path_graph(n)) for n in range(1, max_n + 1)]
    out += [(f"cycle:{n}", cycle_graph(n)) for n in range(3, max_n + 1)]
    out += [(f"star:{k}", star_graph(k)) for k in range(1, max_n)]
    out += [(f"complete:{n}", complete_graph(n)) for n in range(1, max_n + 1)]
    return out
