"""Core graph and label-representation types.

Vertices are 0-indexed everywhere. Graphs are simple, undirected, and
immutable once built. Adjacency is kept twice: sorted neighbor tuples for
iteration, and one bitmask per vertex for pairwise-intersection hot loops.
"""

from __future__ import annotations

from typing import Iterable


class GraphError(ValueError):
    """Raised for structurally invalid graph or label-set input."""


class Graph:
    """Simple undirected graph on vertices 0..n-1. Build via build_graph()."""

    __slots__ = ("n", "edges", "neighbors", "bits")

    def __init__(self, n: int, edges: tuple[tuple[int, int], ...],
                 neighbors: tuple[tuple[int, ...], ...], bits: tuple[int, ...]):
        self.n = n
        self.edges = edges          # sorted (u, v) pairs with u < v
        self.neighbors = neighbors  # sorted tuple per vertex
        self.bits = bits            # bitmask per vertex, bit u set iff {v, u} is an edge

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.bits[u] >> v) & 1 == 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self.edges)})"


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validated constructor.

    Accepts endpoint pairs in either order. Rejects self-loops, endpoints
    outside 0..n-1, and duplicate edges, naming the offending pair.
    """
    if n < 0:
        raise GraphError(f"vertex count must be >= 0, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"self-loop ({u}, {v})")
        if not (0 <= u < n) or not (0 <= v < n):
            raise GraphError(f"endpoint out of range ({u}, {v}) for n={n}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add(e)
    sorted_edges = tuple(sorted(seen))
    nbr: list[list[int]] = [[] for _ in range(n)]
    bits = [0] * n
    for u, v in sorted_edges:
        nbr[u].append(v)
        nbr[v].append(u)
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    neighbors = tuple(tuple(sorted(ws)) for ws in nbr)
    return Graph(n, sorted_edges, neighbors, tuple(bits))


class LabelRepresentation:
    """Per-vertex label sets S_v together with the inverse member sets L_i.

    The two views are kept consistent by construction: i is in label_sets[v]
    exactly when v is in label_members[i].
    """

    __slots__ = ("n", "m", "label_sets", "label_members")

    def __init__(self, n: int, m: int, label_sets: Iterable[Iterable[int]]):
        if n < 0 or m < 0:
            raise GraphError(f"counts must be >= 0, got n={n}, m={m}")
        sets = [frozenset(int(i) for i in s) for s in label_sets]
        if len(sets) != n:
            raise GraphError(f"expected {n} label sets, got {len(sets)}")
        members: list[set[int]] = [set() for _ in range(m)]
        for v, s in enumerate(sets):
            for i in s:
                if not (0 <= i < m):
                    raise GraphError(f"label {i} out of range for m={m} (vertex {v})")
                members[i].add(v)
        self.n = n
        self.m = m
        self.label_sets = tuple(sets)
        self.label_members = tuple(frozenset(ms) for ms in members)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabelRepresentation):
            return NotImplemented
        return (self.n, self.m, self.label_sets) == (other.n, other.m, other.label_sets)

    def __hash__(self) -> int:
        return hash((self.n, self.m, self.label_sets))

    def __repr__(self) -> str:
        return f"LabelRepresentation(n={self.n}, m={self.m})"


def induced_graph(rep: LabelRepresentation) -> Graph:
    """Graph with an edge wherever two vertices share at least one label.

    Each L_i contributes a clique; the union of those cliques is the graph.
    """
    edges: set[tuple[int, int]] = set()
    for members in rep.label_members:
        ms = sorted(members)
        for a in range(len(ms)):
            for b in range(a + 1, len(ms)):
                edges.add((ms[a], ms[b]))
    return build_graph(rep.n, sorted(edges))


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff the given vertices are pairwise adjacent (size <= 1 counts)."""
    vs = sorted(set(vertices))
    for v in vs:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    mask = 0
    for v in vs:
        mask |= 1 << v
    for v in vs:
        if (g.bits[v] & mask).bit_count() != len(vs) - 1:
            return False
    return True


def _lexbfs_order(g: Graph) -> tuple[int, ...]:
    """Lexicographic BFS visit order, deterministic.

    Ordered partition refinement: each pivot splits the buckets of its
    unvisited neighbors to the front. Buckets stay in ascending vertex order
    (stable splits of an ascending start), so picks are reproducible.
    """
    n = g.n
    if n == 0:
        return ()
    members: dict[int, dict[int, None]] = {0: dict.fromkeys(range(n))}
    nxt: dict[int, int | None] = {0: None}
    prv: dict[int, int | None] = {0: None}
    head: int | None = 0
    bucket_of = [0] * n
    fresh = 1
    out: list[int] = []

    def unlink(b: int) -> None:
        nonlocal head
        p, q = prv[b], nxt[b]
        if p is None:
            head = q
        else:
            nxt[p] = q
        if q is not None:
            prv[q] = p
        del members[b], prv[b], nxt[b]

    for _ in range(n):
        assert head is not None
        v = next(iter(members[head]))
        del members[head][v]
        bucket_of[v] = -1
        out.append(v)
        if not members[head]:
            unlink(head)
        split: dict[int, int] = {}
        for w in g.neighbors[v]:
            b = bucket_of[w]
            if b < 0:
                continue
            nb = split.get(b)
            if nb is None:
                nb = fresh
                fresh += 1
                members[nb] = {}
                p = prv[b]
                prv[nb], nxt[nb] = p, b
                prv[b] = nb
                if p is None:
                    head = nb
                else:
                    nxt[p] = nb
                split[b] = nb
            del members[b][w]
            members[nb][w] = None
            bucket_of[w] = nb
        for b in split:
            if b in members and not members[b]:
                unlink(b)
    return tuple(out)


def _is_elimination_order(g: Graph, elim: tuple[int, ...]) -> bool:
    """Check elim is perfect: each vertex's later neighbors form a clique.

    Uses the parent shortcut: it suffices that the later neighbors minus the
    first one are all adjacent to that first one.
    """
    pos = [0] * g.n
    for i, v in enumerate(elim):
        pos[v] = i
    for v in elim:
        later = [w for w in g.neighbors[v] if pos[w] > pos[v]]
        if len(later) <= 1:
            continue
        parent = min(later, key=lambda w: pos[w])
        rest = 0
        for w in later:
            if w != parent:
                rest |= 1 << w
        if rest & ~g.bits[parent]:
            return False
    return True


def is_chordal(g: Graph) -> tuple[bool, tuple[int, ...] | None]:
    """Chordality test via LexBFS.

    Returns (True, order) where order is a perfect elimination ordering
    (order[0] is simplicial, and each vertex is simplicial among the vertices
    after it), or (False, None). The verification step checks the candidate
    ordering directly instead of trusting the search.
    """
    elim = tuple(reversed(_lexbfs_order(g)))
    if _is_elimination_order(g, elim):
        return True, elim
    return False, None
