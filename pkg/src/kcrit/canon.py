"""Canonical labeling, automorphism generators, and isomorphism testing.

Individualization-refinement search sized for n <= 31: refine an ordered
partition to equitability, branch on the first non-singleton cell, and keep
the lexicographically largest adjacency encoding over the surviving leaves.
Automorphisms show up as pairs of leaves with equal encodings; they are
recorded as generators (the enumeration kernel needs them for extension
deduplication) and used to prune the search, with orbit pruning restricted
to nodes on the path to the first leaf and backjumping to the deepest node
shared with that path.  Orbit pruning only at first-path nodes is what
keeps it sound: while the search sits inside such a node's subtree, every
generator found so far fixes the individualized prefix pointwise.

The encoding of a vertex order is the upper triangle of the permuted
adjacency matrix read column by column, one int per column with the row-0
bit most significant.  Columns only depend on the already-placed prefix of
the order, so partial encodings of the leading singleton cells compare
against the current best leaf and prune early.
"""

from __future__ import annotations

from .graph import Graph, from_graph6

# ===== equitable refinement =====


def _mask(cell):
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj, cells):
    """Coarsest equitable refinement; subcells ordered by descending count."""
    cells = [c[:] for c in cells]
    queue = [_mask(c) for c in cells]
    qi = 0
    while qi < len(queue):
        splitter = queue[qi]
        qi += 1
        i = 0
        while i < len(cells):
            cell = cells[i]
            if len(cell) == 1:
                i += 1
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
            if len(groups) == 1:
                i += 1
                continue
            parts = [groups[k] for k in sorted(groups, reverse=True)]
            cells[i:i + 1] = parts
            queue.extend(_mask(p) for p in parts)
            i += len(parts)
    return cells


# ===== the search =====


class _Search:
    __slots__ = ("n", "adj", "first_order", "first_cols", "first_path",
                 "best_order", "best_cols", "gens", "parent")

    def __init__(self, n, adj):
        self.n = n
        self.adj = adj
        self.first_order = None
        self.first_cols = None
        self.first_path: list[int] = []
        self.best_order = None
        self.best_cols = None
        self.gens: list[tuple[int, ...]] = []
        self.parent = list(range(n))

    def _find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def _record(self, other_order, order):
        """Record the automorphism mapping other_order[i] -> order[i]."""
        gamma = [0] * self.n
        ident = True
        for i in range(self.n):
            gamma[other_order[i]] = order[i]
            if other_order[i] != order[i]:
                ident = False
        if ident:
            return
        self.gens.append(tuple(gamma))
        for v in range(self.n):
            a, b = self._find(v), self._find(gamma[v])
            if a != b:
                self.parent[max(a, b)] = min(a, b)

    def _cols(self, prefix):
        adj = self.adj
        out = [0]
        for j in range(1, len(prefix)):
            row = adj[prefix[j]]
            c = 0
            for i in range(j):
                c = c << 1 | (row >> prefix[i] & 1)
            out.append(c)
        return out

    def run(self):
        if self.n == 0:
            self.best_order = ()
            self.best_cols = []
            return
        self._node([list(range(self.n))], [])

    def _node(self, cells, path):
        """Process one node; returns the depth the caller should resume at."""
        depth = len(path)
        cells = _refine(self.adj, cells)
        prefix = []
        for c in cells:
            if len(c) != 1:
                break
            prefix.append(c[0])
        cols = self._cols(prefix)
        # keep a subtree if it can still reach the first leaf's encoding (for
        # automorphism discovery) or can still beat the best leaf's encoding
        eq_first = (self.first_cols is not None
                    and cols == self.first_cols[:len(cols)])
        if self.best_cols is not None:
            bc = self.best_cols[:len(cols)]
            if cols < bc and not eq_first:
                return depth
            better = cols > bc
        else:
            better = False
        if len(prefix) == self.n:
            order = tuple(prefix)
            if self.first_order is None:
                self.first_order = self.best_order = order
                self.first_cols = self.best_cols = cols
                self.first_path = list(path)
                return depth
            if eq_first:
                self._record(self.first_order, order)
                d = 0
                fp = self.first_path
                while d < depth and d < len(fp) and path[d] == fp[d]:
                    d += 1
                return d
            if better:
                self.best_order = order
                self.best_cols = cols
            elif cols == self.best_cols:
                self._record(self.best_order, order)
            return depth
        ci = len(prefix)
        rest = cells[ci]
        tried: list[int] = []
        for v in rest:
            on_first = self.first_order is None or path == self.first_path[:depth]
            if on_first and tried:
                r = self._find(v)
                if any(self._find(u) == r for u in tried):
                    continue
            tried.append(v)
            child = cells[:ci] + [[v], [u for u in rest if u != v]] + cells[ci + 1:]
            path.append(v)
            jump = self._node(child, path)
            path.pop()
            if jump < depth:
                return jump
        return depth


def canon_raw(n, adj):
    """Canonicalize a raw (n, adjacency-masks) pair.

    Returns (order, cols, gens, orbit) where order[i] is the vertex placed
    at canonical position i, cols is the canonical column encoding, gens
    generate the automorphism group as vertex maps, and orbit[v] is the
    smallest vertex in v's orbit.
    """
    s = _Search(n, adj)
    s.run()
    return s.best_order, s.best_cols, s.gens, [s._find(v) for v in range(n)]


def _graph6_from_cols(n, cols):
    out = [chr(n + 63)]
    acc = nb = 0
    for j in range(1, n):
        c = cols[j]
        for i in range(j):
            acc = acc << 1 | (c >> (j - 1 - i) & 1)
            nb += 1
            if nb == 6:
                out.append(chr(acc + 63))
                acc = nb = 0
    if nb:
        out.append(chr((acc << (6 - nb)) + 63))
    return "".join(out)


# ===== public API =====


def canonical_form(g: Graph) -> str:
    """Canonical graph6 code: equal codes exactly for isomorphic graphs."""
    _, cols, _, _ = canon_raw(g.n, g.adj)
    return _graph6_from_cols(g.n, cols)


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g (decodes canonical_form)."""
    return from_graph6(canonical_form(g))


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Vertex order realizing the canonical form: order[i] = old vertex at
    canonical position i."""
    order, _, _, _ = canon_raw(g.n, g.adj)
    return order


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Generators of Aut(g), each a map old-vertex -> image-vertex."""
    _, _, gens, _ = canon_raw(g.n, g.adj)
    return gens


def automorphism_orbits(g: Graph) -> list[int]:
    """orbit[v] = smallest vertex in the Aut(g)-orbit of v."""
    _, _, _, orbit = canon_raw(g.n, g.adj)
    return orbit


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test via canonical codes, after cheap screens."""
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)
