"""Isomorph-free graph enumeration by canonical augmentation.

Graphs grow one vertex at a time.  A child of an n-vertex parent is the
parent plus a new vertex n attached to some subset of the old vertices.
Each isomorphism class of children is kept exactly once across the whole
run because (a) attachment subsets are tried once per orbit of the
parent's automorphism group and (b) a child is accepted only when its
new vertex lies in the child's canonical-deletion orbit.  Restricting
attachment subsets to independent sets confines the run to triangle-free
graphs, which is the workhorse for censuses of graphs with independence
number two (their complements).
"""

from __future__ import annotations

from typing import Iterator

from .canon import canon_raw
from .graph import MAX_VERTICES, Graph, bits

TRIANGLE_FREE = "triangle-free"
ALL_GRAPHS = "all"


# ===== attachment subsets =====

def independent_set_masks(g: Graph) -> list[int]:
    """All independent-set masks of g, the empty set included."""
    res: list[int] = []

    def rec(cur: int, avail: int) -> None:
        res.append(cur)
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            rec(cur | 1 << v, avail & ~g.adj[v])

    rec(0, (1 << g.n) - 1)
    return res


def _apply_perm(perm, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= 1 << perm[v]
    return out


def _mask_orbit_reps(masks, gens) -> list[int]:
    # smallest mask of each orbit under the group generated by gens; the
    # candidate family is closed under the group, so orbits stay inside it
    if not gens:
        return sorted(masks)
    seen: set[int] = set()
    reps = []
    for s in sorted(masks):
        if s in seen:
            continue
        reps.append(s)
        orb = {s}
        frontier = [s]
        while frontier:
            t = frontier.pop()
            for p in gens:
                u = _apply_perm(p, t)
                if u not in orb:
                    orb.add(u)
                    frontier.append(u)
        seen |= orb
    return reps


# ===== the canonical-extension acceptance rule =====

def _vertex_invariants(n: int, adj) -> list[tuple]:
    deg = [adj[v].bit_count() for v in range(n)]
    return [(deg[v], tuple(sorted(deg[u] for u in bits(adj[v])))) for v in range(n)]


def _extend(parent: Graph, s: int) -> Graph:
    adj = [a | ((s >> v & 1) << parent.n) for v, a in enumerate(parent.adj)]
    adj.append(s)
    return Graph(parent.n + 1, tuple(adj))


def _is_canonical_child(child: Graph) -> bool:
    # the deletion vertex of a child is the one with the smallest
    # (degree, neighbor degrees) invariant sitting at the latest canonical
    # position; accept iff the just-added vertex shares its orbit
    n = child.n
    x = n - 1
    inv = _vertex_invariants(n, child.adj)
    low = min(inv)
    if inv[x] != low:
        return False
    order, _, _, orbit = canon_raw(n, child.adj)
    for i in range(n - 1, -1, -1):
        v = order[i]
        if inv[v] == low:
            return orbit[v] == orbit[x]
    raise AssertionError("unreachable: some vertex attains the minimum")


def child_graphs(parent: Graph, mode: str = ALL_GRAPHS) -> list[Graph]:
    """Accepted one-vertex extensions of parent, one per child class."""
    if mode == TRIANGLE_FREE:
        masks = independent_set_masks(parent)
    elif mode == ALL_GRAPHS:
        masks = list(range(1 << parent.n))
    else:
        raise ValueError(f"unknown generation mode {mode!r}")
    _, _, gens, _ = canon_raw(parent.n, parent.adj)
    out = []
    for s in _mask_orbit_reps(masks, gens):
        child = _extend(parent, s)
        if _is_canonical_child(child):
            out.append(child)
    return out


# ===== order-n streams =====

def generate_level(parents: list[Graph], mode: str = ALL_GRAPHS) -> list[Graph]:
    """All order-(n+1) classes obtained from the order-n class list."""
    return [c for p in parents for c in child_graphs(p, mode)]


def generate_graphs(n: int, mode: str = ALL_GRAPHS) -> Iterator[Graph]:
    """One representative per isomorphism class of order-n graphs.

    mode ALL_GRAPHS streams every class, TRIANGLE_FREE only the
    triangle-free ones.  Deterministic order.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise ValueError("order out of range")
    level = [Graph(1, (0,))]
    if n == 1:
        yield from level
        return
    for _ in range(n - 2):
        level = generate_level(level, mode)
    for p in level:
        yield from child_graphs(p, mode)


def generate_triangle_free(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of triangle-free graphs."""
    yield from generate_graphs(n, TRIANGLE_FREE)
