"""Brute-force reference implementations used only by the test suite.

Everything here trades speed for obviousness: exhaustive subset scans,
search over all n! bijections, exponential matching recursion.  These are
the independent oracles the fast library code is checked against, so none
of them may import from the modules they oracle beyond the Graph type.
"""

from __future__ import annotations

from itertools import combinations, permutations

from kcrit.graph import Graph, bits


def independence_number(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        if all(g.adj[v] & s == 0 for v in bits(s)):
            best = max(best, s.bit_count())
    return best


def clique_number(g: Graph) -> int:
    best = 0
    for s in range(1 << g.n):
        if all(g.adj[v] & s == s ^ (1 << v) for v in bits(s)):
            best = max(best, s.bit_count())
    return best


def chromatic_number(g: Graph) -> int:
    """Minimum class count over all proper colorings, vertex-by-vertex."""
    if g.n == 0:
        return 0
    best = [g.n]
    colors = [0] * g.n
    below = [(1 << v) - 1 for v in range(g.n)]

    def rec(v: int, used: int) -> None:
        if used >= best[0]:
            return
        if v == g.n:
            best[0] = used
            return
        for c in range(used):
            if all(colors[u] != c for u in bits(g.adj[v] & below[v])):
                colors[v] = c
                rec(v + 1, used)
        colors[v] = used
        rec(v + 1, used + 1)

    rec(0, 0)
    return best[0]


def max_matching(g: Graph) -> int:
    """Maximum matching size by recursion over the edge list."""
    edges = g.edges()

    def rec(i: int, used: int) -> int:
        best = 0
        for k in range(i, len(edges)):
            u, v = edges[k]
            if used >> u & 1 or used >> v & 1:
                continue
            best = max(best, 1 + rec(k + 1, used | 1 << u | 1 << v))
        return best

    return rec(0, 0)


def contains_induced(g: Graph, h: Graph):
    """Induced embedding of h into g by scanning all ordered subsets."""
    if h.n > g.n:
        return None
    for phi in permutations(range(g.n), h.n):
        if all((g.adj[phi[i]] >> phi[j] & 1) == (h.adj[i] >> j & 1)
               for i in range(h.n) for j in range(i + 1, h.n)):
            return phi
    return None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism by trying all n! bijections."""
    if g.n != h.n:
        return False
    return any(
        all((g.adj[p[i]] >> p[j] & 1) == (h.adj[i] >> j & 1)
            for i in range(g.n) for j in range(i + 1, g.n))
        for p in permutations(range(g.n)))


def automorphism_orbit_partition(g: Graph) -> list[int]:
    """orbit[v] = smallest vertex in v's orbit, from the full automorphism
    group found by trying all n! maps."""
    orbit = list(range(g.n))

    def find(x):
        while orbit[x] != x:
            x = orbit[x]
        return x

    for p in permutations(range(g.n)):
        if all((g.adj[p[i]] >> p[j] & 1) == (g.adj[i] >> j & 1)
               for i in range(g.n) for j in range(i + 1, g.n)):
            for v in range(g.n):
                a, b = find(v), find(p[v])
                if a != b:
                    orbit[max(a, b)] = min(a, b)
    return [find(v) for v in range(g.n)]


def all_labeled_graphs(n: int):
    """Every labeled graph on 0..n-1, as a generator of 2^C(n,2) graphs."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for b, (i, j) in enumerate(pairs):
            if code >> b & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))


def graph6_encode(g: Graph) -> str:
    """Independent graph6 encoder written directly from the format note:
    header byte n+63, then bits x(0,1) x(0,2) x(1,2) x(0,3) ... packed six
    per byte, +63, zero padded."""
    bitstring = []
    for j in range(1, g.n):
        for i in range(j):
            bitstring.append(1 if g.has_edge(i, j) else 0)
    while len(bitstring) % 6:
        bitstring.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bitstring), 6):
        val = 0
        for b in bitstring[i:i + 6]:
            val = val * 2 + b
        chars.append(chr(val + 63))
    return "".join(chars)
