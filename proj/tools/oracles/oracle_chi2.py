#!/usr/bin/env python3
"""Independent 2-distance chromatic number oracle (brute force).

Builds the square graph by BFS radius 2, then finds the chromatic number
by plain backtracking with a color-symmetry cap. Small graphs only.
"""
import json
from itertools import combinations


def square(n, adj):
    sq = [set() for _ in range(n)]
    for v in range(n):
        for u in adj[v]:
            sq[v].add(u)
            for w in adj[u]:
                if w != v:
                    sq[v].add(w)
    return sq


def chromatic(n, adj):
    order = sorted(range(n), key=lambda v: -len(adj[v]))
    for k in range(1, n + 1):
        col = [0] * n

        def bt(i, used):
            if i == n:
                return True
            v = order[i]
            forb = {col[u] for u in adj[v] if col[u]}
            cap = min(k, used + 1)
            for c in range(1, cap + 1):
                if c not in forb:
                    col[v] = c
                    if bt(i + 1, max(used, c)):
                        return True
                    col[v] = 0
            return False

        if bt(0, 0):
            return k
    return n


def from_edges(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def path(k):
    return k, [(i, i + 1) for i in range(k - 1)]


def cycle(k):
    return k, [(i, (i + 1) % k) for i in range(k)]


def subdiv(n, edges):
    out = []
    nid = n
    for u, v in edges:
        out.append((u, nid))
        out.append((nid, v))
        nid += 1
    return nid, out


def spider(k):
    """K_{1,k} with every edge subdivided once."""
    edges = [(0, i) for i in range(1, k + 1)]
    return subdiv(k + 1, edges)


cases = {}

n, e = path(4)
cases["P4"] = (n, e)
n, e = cycle(6)
cases["C6"] = (n, e)
n, e = cycle(7)
cases["C7"] = (n, e)
k4 = [(a, b) for a, b in combinations(range(4), 2)]
cases["subdivided_K4"] = subdiv(4, k4)
cases["spider_7"] = spider(7)
cases["spider_6"] = spider(6)
n, e = cycle(6)
cases["subdivided_C6"] = subdiv(n, e)

out = {}
for name, (n, edges) in cases.items():
    adj = from_edges(n, edges)
    sq = square(n, adj)
    delta = max(len(a) for a in adj)
    out[name] = {"n": n, "m": len(edges), "delta": delta,
                 "chi2": chromatic(n, sq),
                 "sq_degrees": sorted(len(s) for s in sq)}
print(json.dumps(out, indent=1))
