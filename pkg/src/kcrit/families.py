"""Constructors for recurring graph families.

odd cycles, their complements, and clique substitutions into odd
cycles.  Constructors only build; correctness claims about the results
(criticality, freeness) live in tests.
"""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph, complement, from_edge_list


def odd_cycle(m: int) -> Graph:
    """The cycle on 2m+1 vertices, m >= 1."""
    if m < 1:
        raise ValueError("m must be at least 1")
    n = 2 * m + 1
    if n > MAX_VERTICES:
        raise ValueError("cycle order exceeds the vertex cap")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def co_odd_cycle(k: int) -> Graph:
    """Complement of the cycle on 2k-1 vertices; 3 <= k <= 16."""
    if not 3 <= k <= 16:
        raise ValueError("k must be in 3..16")
    return complement(odd_cycle(k - 1))


def substitute_clique(g: Graph, v: int, q: int) -> Graph:
    """Replace vertex v of g by a clique of order q.

    Every clique vertex inherits v's neighborhood.  Vertex order of the
    result: g's vertices ascending with v removed, then the q clique
    vertices.
    """
    if not 0 <= v < g.n:
        raise ValueError("vertex out of range")
    if q < 1:
        raise ValueError("clique order must be at least 1")
    n = g.n - 1 + q
    if n > MAX_VERTICES:
        raise ValueError("result exceeds the vertex cap")
    old = [u for u in range(g.n) if u != v]
    pos = {u: i for i, u in enumerate(old)}
    edges = [(pos[a], pos[b]) for a, b in g.edges() if v not in (a, b)]
    base = g.n - 1
    for i in range(q):
        edges.extend((pos[u], base + i) for u in old if g.has_edge(u, v))
        edges.extend((base + j, base + i) for j in range(i))
    return from_edge_list(n, edges)


def clique_substituted_odd_cycle(t: int, k: int) -> Graph:
    """Odd cycle on labels 1..2t+1 with K_{k-2} substituted at even labels.

    Order (t+1) + t*(k-2); t >= 2, k >= 3.  Labels appear in ascending
    order, each expanded group occupying consecutive vertices.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    if k < 3:
        raise ValueError("k must be at least 3")
    n = (t + 1) + t * (k - 2)
    if n > MAX_VERTICES:
        raise ValueError("result exceeds the vertex cap")
    groups = []
    base = 0
    for label in range(1, 2 * t + 2):
        size = k - 2 if label % 2 == 0 else 1
        groups.append(range(base, base + size))
        base += size
    edges = []
    for grp in groups:
        edges.extend((a, b) for a in grp for b in grp if a < b)
    for i in range(len(groups)):
        nxt = groups[(i + 1) % len(groups)]
        edges.extend((a, b) for a in groups[i] for b in nxt)
    return from_edge_list(n, edges)
