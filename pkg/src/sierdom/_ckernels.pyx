# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels. Mirrors ``_pykernels`` call for call."""

import time

import numpy as np
from libc.math cimport ceil, INFINITY
from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _popcount(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef int ROMAN = 0
cdef int DOUBLE_ROMAN = 1
cdef double EPS = 1e-9


cdef inline bint _satisfied(int kind, int value, int c2, int c3) nogil:
    if kind == DOUBLE_ROMAN:
        if value >= 2:
            return True
        if value == 1:
            return c2 + c3 >= 1
        return c3 >= 1 or c2 >= 2
    if value >= 1:
        return True
    return c2 >= 1


cdef class _Search:
    cdef int n, kind, nvals
    cdef int64_t[::1] indptr, indices, order
    cdef int[::1] val, c2, c3, ua, need, best_values
    cdef double[::1] rate
    cdef int values[3]
    cdef public int best
    cdef public long long nodes
    cdef long long max_nodes
    cdef double deadline
    cdef public bint aborted

    def __init__(self, indptr, indices, order, int kind, incumbent, long long max_nodes, double max_seconds):
        self.indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        self.indices = np.ascontiguousarray(indices, dtype=np.int64)
        self.order = np.ascontiguousarray(order, dtype=np.int64)
        self.n = len(indptr) - 1
        self.kind = kind
        if kind == DOUBLE_ROMAN:
            self.values[0], self.values[1], self.values[2] = 3, 2, 0
        else:
            self.values[0], self.values[1], self.values[2] = 2, 0, 1
        self.nvals = 3
        self.val = np.full(self.n, -1, dtype=np.intc)
        self.c2 = np.zeros(self.n, dtype=np.intc)
        self.c3 = np.zeros(self.n, dtype=np.intc)
        self.need = np.zeros(self.n, dtype=np.intc)
        self.rate = np.zeros(self.n, dtype=np.float64)
        self.ua = np.diff(np.asarray(self.indptr)).astype(np.intc)
        self.best_values = np.ascontiguousarray(incumbent, dtype=np.intc).copy()
        self.best = int(np.sum(self.best_values))
        self.max_nodes = max_nodes
        self.deadline = -1.0 if max_seconds < 0 else time.perf_counter() + max_seconds
        self.nodes = 0
        self.aborted = False

    cdef inline int _need(self, int v) nogil:
        cdef int val = self.val[v]
        if _satisfied(self.kind, val if val >= 0 else 0, self.c2[v], self.c3[v]):
            return 0
        if self.kind == DOUBLE_ROMAN:
            return 1 if val == 1 else 2 - self.c2[v]
        return 1

    cdef double _lower_bound(self) nogil:
        cdef int n = self.n, u, v, w, nu, s2, s3
        cdef int64_t k
        cdef bint any_need = False
        cdef double r, best, total = 0.0
        for v in range(n):
            self.need[v] = self._need(v)
            if self.need[v]:
                any_need = True
        if not any_need:
            return 0.0
        for u in range(n):
            if self.val[u] >= 0:
                self.rate[u] = INFINITY
                continue
            nu = self.need[u]
            r = INFINITY
            if self.kind == DOUBLE_ROMAN:
                s3 = nu
                s2 = nu
                for k in range(self.indptr[u], self.indptr[u + 1]):
                    w = self.need[self.indices[k]]
                    s3 += w
                    if w:
                        s2 += 1
                if s3:
                    r = 3.0 / s3
                if s2 and 2.0 / s2 < r:
                    r = 2.0 / s2
            else:
                s2 = nu
                for k in range(self.indptr[u], self.indptr[u + 1]):
                    s2 += self.need[self.indices[k]]
                if s2:
                    r = 2.0 / s2
                if nu and r > 1.0:
                    r = 1.0
            self.rate[u] = r
        for v in range(n):
            if not self.need[v]:
                continue
            best = self.rate[v]
            for k in range(self.indptr[v], self.indptr[v + 1]):
                r = self.rate[self.indices[k]]
                if r < best:
                    best = r
            if best == INFINITY:
                return INFINITY
            total += self.need[v] * best
        return total

    cdef inline void _assign(self, int v, int value) nogil:
        cdef int64_t k
        cdef int u
        self.val[v] = value
        for k in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[k]
            self.ua[u] -= 1
            if value == 2:
                self.c2[u] += 1
            elif value == 3:
                self.c3[u] += 1

    cdef inline void _unassign(self, int v, int value) nogil:
        cdef int64_t k
        cdef int u
        self.val[v] = -1
        for k in range(self.indptr[v], self.indptr[v + 1]):
            u = self.indices[k]
            self.ua[u] += 1
            if value == 2:
                self.c2[u] -= 1
            elif value == 3:
                self.c3[u] -= 1

    cdef inline bint _dead(self, int w) nogil:
        cdef int val = self.val[w]
        return val >= 0 and self.ua[w] == 0 and not _satisfied(self.kind, val, self.c2[w], self.c3[w])

    cdef bint _feasible_after(self, int v) nogil:
        cdef int64_t k
        if self._dead(v):
            return False
        for k in range(self.indptr[v], self.indptr[v + 1]):
            if self._dead(self.indices[k]):
                return False
        return True

    cdef void run(self, int depth, int weight):
        cdef int i, v, value
        cdef double lb
        if self.aborted:
            return
        self.nodes += 1
        if self.max_nodes >= 0 and self.nodes > self.max_nodes:
            self.aborted = True
            return
        if self.deadline >= 0 and (self.nodes & 1023) == 0:
            if time.perf_counter() > self.deadline:
                self.aborted = True
                return
        if depth == self.n:
            if weight < self.best:
                self.best = weight
                self.best_values[:] = self.val
            return
        lb = self._lower_bound()
        if weight + ceil(lb - EPS) >= self.best:
            return
        v = self.order[depth]
        for i in range(self.nvals):
            value = self.values[i]
            if weight + value >= self.best:
                continue
            self._assign(v, value)
            if self._feasible_after(v):
                self.run(depth + 1, weight + value)
            self._unassign(v, value)
            if self.aborted:
                return


def bnb_min_weight(indptr, indices, order, int kind, incumbent, long long max_nodes=-1, double max_seconds=-1.0):
    cdef _Search s = _Search(indptr, indices, order, kind, incumbent, max_nodes, max_seconds)
    s.run(0, 0)
    return s.best, np.asarray(s.best_values).tolist(), s.nodes, not s.aborted


def enumerate_min_weight(int n, masks, int kind, alphabet):
    cdef uint64_t[::1] adj = np.ascontiguousarray([int(m) for m in masks], dtype=np.uint64)
    cdef int[::1] alpha = np.ascontiguousarray(sorted(alphabet), dtype=np.intc)
    cdef int k = len(alpha)
    cdef int[::1] digit = np.zeros(n, dtype=np.intc)
    cdef int[::1] best_row = np.zeros(n, dtype=np.intc)
    cdef uint64_t m1 = 0, m2 = 0, m3 = 0, bit, a
    cdef int weight = 0, best = -1, pos, v, old, new, val
    cdef long long checked = 0
    cdef bint ok

    if n > 64:
        raise ValueError("compiled enumeration supports n <= 64")
    # start with every vertex at the smallest letter
    for v in range(n):
        val = alpha[0]
        weight += val
        bit = (<uint64_t>1) << v
        if val == 1:
            m1 |= bit
        elif val == 2:
            m2 |= bit
        elif val == 3:
            m3 |= bit
    with nogil:
        while True:
            checked += 1
            if best < 0 or weight < best:
                ok = True
                for v in range(n):
                    bit = (<uint64_t>1) << v
                    a = adj[v]
                    if kind == DOUBLE_ROMAN:
                        if (m2 | m3) & bit:
                            continue
                        if m1 & bit:
                            if not (a & (m2 | m3)):
                                ok = False
                                break
                        elif not (a & m3) and _popcount(a & m2) < 2:
                            ok = False
                            break
                    else:
                        if (m1 | m2) & bit:
                            continue
                        if not (a & m2):
                            ok = False
                            break
                if ok:
                    best = weight
                    for v in range(n):
                        bit = (<uint64_t>1) << v
                        best_row[v] = 1 if m1 & bit else 2 if m2 & bit else 3 if m3 & bit else 0
            # odometer increment, last vertex fastest
            pos = n - 1
            while pos >= 0:
                bit = (<uint64_t>1) << pos
                old = alpha[digit[pos]]
                digit[pos] += 1
                if digit[pos] == k:
                    digit[pos] = 0
                new = alpha[digit[pos]]
                weight += new - old
                m1 &= ~bit
                m2 &= ~bit
                m3 &= ~bit
                if new == 1:
                    m1 |= bit
                elif new == 2:
                    m2 |= bit
                elif new == 3:
                    m3 |= bit
                if digit[pos] != 0:
                    break
                pos -= 1
            if pos < 0:
                break
    return best, (np.asarray(best_row).tolist() if best >= 0 else None), checked
