"""Independent reference implementations used to check the package.

Everything here is deliberately naive: subset enumeration, direct
definitions, no shared code with the algorithms under test.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations

from rigclique import Graph, LabelRepresentation, build_graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_label_rep(rng: random.Random, n: int, m: int, p: float) -> LabelRepresentation:
    sets = [[i for i in range(m) if rng.random() < p] for _ in range(n)]
    return LabelRepresentation(n, m, sets)


def complete_graph(n: int) -> Graph:
    return build_graph(n, list(combinations(range(n), 2)))


def two_triangles() -> Graph:
    # triangles {0,1,2} and {1,2,3} sharing the edge (1,2)
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def mask_is_clique(g: Graph, mask: int) -> bool:
    vs = [v for v in range(g.n) if (mask >> v) & 1]
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def subset_max_clique(g: Graph) -> tuple[int, ...]:
    """Lexicographically smallest maximum clique by full subset enumeration.
    Only sensible for n <= ~14."""
    best_size = 0
    for mask in range(1 << g.n):
        if mask.bit_count() > best_size and mask_is_clique(g, mask):
            best_size = mask.bit_count()
    if best_size == 0:
        return ()
    winners = []
    for mask in range(1 << g.n):
        if mask.bit_count() == best_size and mask_is_clique(g, mask):
            winners.append(tuple(v for v in range(g.n) if (mask >> v) & 1))
    return min(winners)


def all_maximal_cliques(g: Graph) -> set[tuple[int, ...]]:
    """Nonempty maximal cliques by checking every clique for extendability.
    The null graph has none, matching the package convention."""
    out = set()
    for mask in range(1, 1 << g.n):
        if not mask_is_clique(g, mask):
            continue
        vs = [v for v in range(g.n) if (mask >> v) & 1]
        extendable = any(all(g.has_edge(w, v) for v in vs)
                         for w in range(g.n) if not (mask >> w) & 1)
        if not extendable:
            out.add(tuple(vs))
    return out


def brute_chordal(g: Graph) -> bool:
    """Chordality by repeated simplicial-vertex deletion."""
    alive = set(range(g.n))
    while alive:
        simplicial = None
        for v in alive:
            nb = [w for w in g.neighbors[v] if w in alive]
            if all(g.has_edge(a, b) for a, b in combinations(nb, 2)):
                simplicial = v
                break
        if simplicial is None:
            return False
        alive.discard(simplicial)
    return True


def has_chordless_cycle(g: Graph) -> bool:
    """Search for an induced cycle of length >= 4 over all vertex subsets.
    Only sensible for n <= ~12."""
    for size in range(4, g.n + 1):
        for vs in combinations(range(g.n), size):
            deg = {v: sum(1 for w in vs if w != v and g.has_edge(v, w)) for v in vs}
            if any(d != 2 for d in deg.values()):
                continue
            # degrees all 2: a disjoint union of cycles; connectivity makes it one
            seen = {vs[0]}
            frontier = [vs[0]]
            while frontier:
                v = frontier.pop()
                for w in vs:
                    if w not in seen and g.has_edge(v, w):
                        seen.add(w)
                        frontier.append(w)
            if len(seen) == size:
                return True
    return False


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    return frozenset(g.neighbors[v]) | {v}


def exhaustive_labeled_cycle_exists(rep: LabelRepresentation) -> bool:
    """Try every cyclic vertex sequence with every distinct-label assignment.
    Only sensible for n + m <= ~10."""
    for k in range(3, rep.n + 1):
        for vs in permutations(range(rep.n), k):
            if vs[0] != min(vs) or (k > 2 and vs[1] > vs[-1]):
                continue  # one representative per rotation and direction
            if _assign_labels(rep, vs):
                return True
    return False


def _assign_labels(rep: LabelRepresentation, vs: tuple[int, ...]) -> bool:
    k = len(vs)
    used: set[int] = set()

    def go(j: int) -> bool:
        if j == k:
            return True
        shared = rep.label_sets[vs[j]] & rep.label_sets[vs[(j + 1) % k]]
        for lab in shared:
            if lab not in used:
                used.add(lab)
                if go(j + 1):
                    return True
                used.discard(lab)
        return False

    return go(0)
