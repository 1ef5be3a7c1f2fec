"""Independent reference computations for tests. Nothing here imports the
solvers or verifiers under test; graphs are plain (n, edge list) pairs."""
from itertools import combinations, product


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def drdf_ok(adj, f):
    for v, x in enumerate(f):
        nb = [f[u] for u in adj[v]]
        if x == 0 and not (3 in nb or nb.count(2) >= 2):
            return False
        if x == 1 and not any(y >= 2 for y in nb):
            return False
    return True


def rdf_ok(adj, f):
    return all(x != 0 or any(f[u] == 2 for u in adj[v]) for v, x in enumerate(f))


def min_weight(n, edges, alphabet, ok):
    adj = adjacency(n, edges)
    return min(sum(f) for f in product(alphabet, repeat=n) if ok(adj, f))


def gamma_dr(n, edges, alphabet=(0, 1, 2, 3)):
    return min_weight(n, edges, alphabet, drdf_ok)


def gamma_r(n, edges):
    return min_weight(n, edges, (0, 1, 2), rdf_ok)


def alpha(n, edges):
    es = {frozenset(e) for e in edges}
    for k in range(n, 0, -1):
        for s in combinations(range(n), k):
            if not any(frozenset(p) in es for p in combinations(s, 2)):
                return k
    return 0


def sierpinski_edges_by_rule(n, edges, t):
    """Edge set of S(G,t) by scanning all word pairs against the adjacency rule."""
    base = {frozenset(e) for e in edges}
    words = list(product(range(n), repeat=t))
    out = set()
    for u, v in combinations(words, 2):
        for i in range(t):
            if u[:i] == v[:i] and u[i] != v[i] and all(u[j] == v[i] and v[j] == u[i] for j in range(i + 1, t)):
                if frozenset((u[i], v[i])) in base:
                    out.add(frozenset((u, v)))
    return out
