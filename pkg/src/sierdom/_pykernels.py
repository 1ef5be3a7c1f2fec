"""Pure-Python search kernels. Same signatures as the compiled ``_ckernels``.

``kind`` is 0 for Roman (values 0..2) and 1 for double Roman (values 0..3).
"""
from __future__ import annotations

import math
import time

import numpy as np

ROMAN, DOUBLE_ROMAN = 0, 1
_EPS = 1e-9
_TIME_CHECK_EVERY = 1024


def _satisfied(kind, value, c2, c3):
    if kind == DOUBLE_ROMAN:
        if value >= 2:
            return True
        if value == 1:
            return c2 + c3 >= 1
        return c3 >= 1 or c2 >= 2
    if value >= 1:
        return True
    return c2 >= 1


class _Search:
    def __init__(self, indptr, indices, order, kind, best_values, max_nodes, max_seconds):
        n = len(indptr) - 1
        self.n = n
        self.nbrs = [indices[indptr[v]:indptr[v + 1]].tolist() for v in range(n)]
        self.order = list(order)
        self.kind = kind
        self.values = (3, 2, 0) if kind == DOUBLE_ROMAN else (2, 0, 1)
        self.val = [-1] * n
        self.c2 = [0] * n
        self.c3 = [0] * n
        self.ua = [len(a) for a in self.nbrs]
        self.best_values = list(best_values)
        self.best = sum(self.best_values)
        self.max_nodes = max_nodes
        self.deadline = None if max_seconds is None or max_seconds < 0 else time.perf_counter() + max_seconds
        self.nodes = 0
        self.aborted = False

    def need(self, v):
        """Outstanding demand of v in half units (double Roman) or units (Roman)."""
        val = self.val[v]
        if _satisfied(self.kind, val if val >= 0 else 0, self.c2[v], self.c3[v]):
            return 0
        if self.kind == DOUBLE_ROMAN:
            return 1 if val == 1 else 2 - self.c2[v]
        return 1

    def lower_bound(self):
        n, nbrs, val = self.n, self.nbrs, self.val
        need = [self.need(v) for v in range(n)]
        if not any(need):
            return 0.0
        rate = [math.inf] * n
        for u in range(n):
            if val[u] >= 0:
                continue
            nu = need[u]
            if self.kind == DOUBLE_ROMAN:
                s3 = nu + sum(need[w] for w in nbrs[u])
                s2 = nu + sum(1 for w in nbrs[u] if need[w])
                r = math.inf
                if s3:
                    r = 3.0 / s3
                if s2:
                    r = min(r, 2.0 / s2)
            else:
                s2 = nu + sum(need[w] for w in nbrs[u])
                r = 2.0 / s2 if s2 else math.inf
                if nu:
                    r = min(r, 1.0)
            rate[u] = r
        total = 0.0
        for v in range(n):
            if not need[v]:
                continue
            best = rate[v]
            for u in nbrs[v]:
                if rate[u] < best:
                    best = rate[u]
            if best == math.inf:
                return math.inf
            total += need[v] * best
        return total

    def assign(self, v, value):
        self.val[v] = value
        for u in self.nbrs[v]:
            self.ua[u] -= 1
            if value == 2:
                self.c2[u] += 1
            elif value == 3:
                self.c3[u] += 1

    def unassign(self, v, value):
        self.val[v] = -1
        for u in self.nbrs[v]:
            self.ua[u] += 1
            if value == 2:
                self.c2[u] -= 1
            elif value == 3:
                self.c3[u] -= 1

    def dead(self, w):
        val = self.val[w]
        return (
            val >= 0
            and self.ua[w] == 0
            and not _satisfied(self.kind, val, self.c2[w], self.c3[w])
        )

    def feasible_after(self, v):
        if self.dead(v):
            return False
        return not any(self.dead(u) for u in self.nbrs[v])

    def run(self, depth, weight):
        if self.aborted:
            return
        self.nodes += 1
        if self.max_nodes >= 0 and self.nodes > self.max_nodes:
            self.aborted = True
            return
        if self.deadline is not None and self.nodes % _TIME_CHECK_EVERY == 0:
            if time.perf_counter() > self.deadline:
                self.aborted = True
                return
        if depth == self.n:
            if weight < self.best:
                self.best = weight
                self.best_values = list(self.val)
            return
        lb = self.lower_bound()
        if weight + math.ceil(lb - _EPS) >= self.best:
            return
        v = self.order[depth]
        for value in self.values:
            if weight + value >= self.best:
                continue
            self.assign(v, value)
            if self.feasible_after(v):
                self.run(depth + 1, weight + value)
            self.unassign(v, value)
            if self.aborted:
                return


def bnb_min_weight(indptr, indices, order, kind, incumbent, max_nodes=-1, max_seconds=-1.0):
    """Branch and bound below a feasible ``incumbent`` labeling.

    Returns ``(weight, values, nodes, complete)``. ``complete`` is False when a
    budget ran out, in which case ``weight`` is only an upper bound.
    """
    s = _Search(np.asarray(indptr), np.asarray(indices), order, kind, incumbent, max_nodes, max_seconds)
    s.run(0, 0)
    return s.best, s.best_values, s.nodes, not s.aborted


def _valid_rows(vals, adj, kind):
    """Boolean mask of rows of ``vals`` (k x n) that are valid labelings."""
    is2 = (vals == 2).astype(np.int16)
    c2 = is2 @ adj
    if kind == DOUBLE_ROMAN:
        c3 = (vals == 3).astype(np.int16) @ adj
        ok0 = (c3 >= 1) | (c2 >= 2)
        ok1 = (c2 + c3) >= 1
        ok = np.where(vals == 0, ok0, np.where(vals == 1, ok1, True))
    else:
        ok = np.where(vals == 0, c2 >= 1, True)
    return ok.all(axis=1)


def enumerate_min_weight(n, masks, kind, alphabet, chunk=1 << 16):
    """Exhaustive minimum over every labeling with letters from ``alphabet``.

    Returns ``(weight, values, checked)``; ``weight`` is -1 when nothing is valid.
    """
    alphabet = np.asarray(sorted(alphabet), dtype=np.int8)
    k = len(alphabet)
    adj = np.zeros((n, n), dtype=np.int16)
    for v, m in enumerate(masks):
        for u in range(n):
            if int(m) >> u & 1:
                adj[v, u] = 1
    total = k**n
    powers = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    best_w, best_row = -1, None
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % k
        vals = alphabet[digits]
        weights = vals.sum(axis=1, dtype=np.int64)
        if best_w >= 0:
            keep = weights < best_w
            vals, weights = vals[keep], weights[keep]
            if not len(vals):
                continue
        ok = _valid_rows(vals, adj, kind)
        if ok.any():
            cand = np.flatnonzero(ok)
            j = cand[np.argmin(weights[cand])]
            best_w, best_row = int(weights[j]), vals[j].tolist()
    return best_w, best_row, total
