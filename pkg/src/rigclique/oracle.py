"""Exact reference algorithms, independent of the quotient solver.

Maximum clique here is a branch-and-bound search over vertex bitmasks; the
quotient pipeline never calls it, so the two can be checked against each
other. Budgets make every search refuse loudly instead of running away.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .graph import Graph, LabelRepresentation

DEFAULT_NODE_BUDGET = 2_000_000
DEFAULT_MAX_CLIQUES = 500_000
DEFAULT_CYCLE_STEPS = 1_000_000

INTERSECTION_NUMBER_CAP = 8

CYCLE_FOUND = "found"
CYCLE_NONE = "none"
CYCLE_UNKNOWN = "unknown"


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of its node or emission budget."""


def degeneracy_order(g: Graph) -> tuple[int, ...]:
    """Vertices in removal order: repeatedly delete a minimum-degree vertex,
    ties broken toward the smallest id."""
    deg = [g.degree(v) for v in range(g.n)]
    heap: list[tuple[int, int]] = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    out: list[int] = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue  # stale entry
        removed[v] = True
        out.append(v)
        for w in g.neighbors[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    return tuple(out)


def exact_max_clique(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[int, ...]:
    """Lexicographically smallest maximum clique, as a sorted vertex tuple.

    Phase one finds the clique number by branch and bound: roots follow a
    degeneracy order, candidates are pruned with a greedy-coloring upper
    bound. Phase two rebuilds the lexicographically first clique of that size
    by ascending-id extension under the same bound. Both phases share one
    node budget; exceeding it raises SearchBudgetExceeded.
    """
    if g.n == 0:
        return ()
    bits = g.bits
    budget = node_budget

    def charge() -> None:
        nonlocal budget
        budget -= 1
        if budget < 0:
            raise SearchBudgetExceeded(
                f"maximum-clique search exceeded node budget {node_budget}")

    def color_sorted(pmask: int) -> list[tuple[int, int]]:
        # Greedy coloring of the candidate set; output is (vertex, color)
        # with colors nondecreasing, ids ascending within a color.
        out: list[tuple[int, int]] = []
        color = 0
        rest = pmask
        while rest:
            color += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                out.append((v, color))
                avail &= ~(bits[v] | low)
                rest ^= low
        return out

    best = 0

    def expand(rsize: int, pmask: int) -> None:
        nonlocal best
        charge()
        colored = color_sorted(pmask)
        for v, c in reversed(colored):
            if rsize + c <= best:
                return  # everything earlier has color <= c
            sub = pmask & bits[v]
            if sub:
                expand(rsize + 1, sub)
            elif rsize + 1 > best:
                best = rsize + 1
            pmask &= ~(1 << v)

    order = degeneracy_order(g)
    later = [0] * g.n
    suffix = 0
    for v in reversed(order):
        later[v] = suffix
        suffix |= 1 << v
    for v in order:
        p = bits[v] & later[v]
        if p and 1 + p.bit_count() > best:
            expand(1, p)
        elif best < 1:
            best = 1

    def color_count(pmask: int) -> int:
        count = 0
        rest = pmask
        while rest:
            count += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~(bits[v] | low)
                rest ^= low
        return count

    target = best
    found: tuple[int, ...] | None = None

    def extend(prefix: list[int], pmask: int) -> bool:
        nonlocal found
        charge()
        need = target - len(prefix)
        if need == 0:
            found = tuple(prefix)
            return True
        if pmask.bit_count() < need or color_count(pmask) < need:
            return False
        while pmask:
            low = pmask & -pmask
            v = low.bit_length() - 1
            pmask ^= low
            prefix.append(v)
            if extend(prefix, pmask & bits[v]):
                return True
            prefix.pop()
            if pmask.bit_count() < need:
                return False
        return False

    full = (1 << g.n) - 1
    extend([], full)
    assert found is not None
    return found


def iter_maximal_cliques(g: Graph) -> Iterator[tuple[int, ...]]:
    """Yield every maximal clique exactly once, as a sorted vertex tuple.

    Bron-Kerbosch with a greedy pivot (most candidate neighbors, smallest id
    on ties); emission order is deterministic.
    """
    if g.n == 0:
        return
    bits = g.bits

    def bk(prefix: list[int], p: int, x: int) -> Iterator[tuple[int, ...]]:
        if not p and not x:
            yield tuple(sorted(prefix))
            return
        scan = p | x
        pivot = -1
        pivot_count = -1
        while scan:
            low = scan & -scan
            u = low.bit_length() - 1
            scan ^= low
            count = (p & bits[u]).bit_count()
            if count > pivot_count:
                pivot_count, pivot = count, u
        cand = p & ~bits[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            prefix.append(v)
            yield from bk(prefix, p & bits[v], x & bits[v])
            prefix.pop()
            p &= ~low
            x |= low

    yield from bk([], (1 << g.n) - 1, 0)


def enumerate_maximal_cliques(g: Graph,
                              max_cliques: int = DEFAULT_MAX_CLIQUES) -> list[tuple[int, ...]]:
    """Materialized iter_maximal_cliques with an emission budget."""
    out: list[tuple[int, ...]] = []
    for clique in iter_maximal_cliques(g):
        if len(out) >= max_cliques:
            raise SearchBudgetExceeded(
                f"maximal-clique enumeration exceeded budget {max_cliques}")
        out.append(clique)
    return out


def exact_intersection_number(g: Graph) -> int:
    """Minimum number of cliques covering every edge of g.

    Brute force over covers by maximal cliques (any cover clique extends to a
    maximal one), memoized on the set of still-uncovered edges. Hard cap
    n <= 8: refuse larger inputs rather than run an exponential search.
    """
    if g.n > INTERSECTION_NUMBER_CAP:
        raise ValueError(
            f"intersection number is only computed for n <= {INTERSECTION_NUMBER_CAP}, got n={g.n}")
    if not g.edges:
        return 0
    edge_bit = {e: k for k, e in enumerate(g.edges)}
    masks: list[int] = []
    for clique in iter_maximal_cliques(g):
        mask = 0
        for pair in combinations(clique, 2):
            mask |= 1 << edge_bit[pair]
        if mask:
            masks.append(mask)
    by_edge: list[list[int]] = [[] for _ in g.edges]
    for mask in masks:
        rest = mask
        while rest:
            low = rest & -rest
            by_edge[low.bit_length() - 1].append(mask)
            rest ^= low

    @lru_cache(maxsize=None)
    def cover(uncovered: int) -> int:
        if not uncovered:
            return 0
        k = (uncovered & -uncovered).bit_length() - 1
        return 1 + min(cover(uncovered & ~mask) for mask in by_edge[k])

    return cover((1 << len(g.edges)) - 1)


@dataclass(frozen=True)
class LabeledCycle:
    """Cyclic vertex sequence with k >= 3 distinct labels, labels[j] shared
    by vertices[j] and vertices[(j+1) % k]."""
    vertices: tuple[int, ...]
    labels: tuple[int, ...]


def check_labeled_cycle(rep: LabelRepresentation, cycle: LabeledCycle) -> None:
    """Raise ValueError unless cycle is a valid distinct-label cycle of rep."""
    k = len(cycle.vertices)
    if k < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {k}")
    if len(cycle.labels) != k:
        raise ValueError("label count differs from vertex count")
    if len(set(cycle.vertices)) != k:
        raise ValueError("vertices are not distinct")
    if len(set(cycle.labels)) != k:
        raise ValueError("labels are not distinct")
    for j in range(k):
        v, w = cycle.vertices[j], cycle.vertices[(j + 1) % k]
        lab = cycle.labels[j]
        if lab not in rep.label_sets[v] or lab not in rep.label_sets[w]:
            raise ValueError(f"label {lab} does not join vertices {v} and {w}")


def find_distinct_label_cycle(rep: LabelRepresentation,
                              step_budget: int = DEFAULT_CYCLE_STEPS
                              ) -> tuple[str, LabeledCycle | None]:
    """Search for a cycle of k >= 3 vertices joined by k distinct labels.

    Equivalent formulation: the vertex-label incidence graph contains a
    simple cycle of length >= 6 (a 2k-cycle alternates k vertices with k
    distinct witnessing labels; 4-cycles only say two vertices share two
    labels). The incidence graph is peeled to its 2-core first; an empty
    core means acyclic, hence ("none", None) immediately. Otherwise a DFS
    enumerates simple paths inside the core, rooted at each node that is the
    minimum of its cycle. Every neighbor step costs one unit of step_budget;
    exhausting it returns ("unknown", None), which is distinct from "none".
    """
    n, m = rep.n, rep.m
    total = n + m
    adj: list[list[int]] = [[] for _ in range(total)]
    for v in range(n):
        for i in sorted(rep.label_sets[v]):
            adj[v].append(n + i)
            adj[n + i].append(v)
    for ls in adj:
        ls.sort()

    # peel to the 2-core; a cycle survives peeling
    degree = [len(ls) for ls in adj]
    in_core = [True] * total
    stack = [x for x in range(total) if degree[x] <= 1]
    while stack:
        x = stack.pop()
        if not in_core[x]:
            continue
        in_core[x] = False
        for y in adj[x]:
            if in_core[y]:
                degree[y] -= 1
                if degree[y] <= 1:
                    stack.append(y)
    core = [x for x in range(total) if in_core[x]]
    if not core:
        return CYCLE_NONE, None

    steps = step_budget
    for start in core:
        path = [start]
        on_path = {start}
        iters = [iter(adj[start])]
        while iters:
            stepped = False
            for w in iters[-1]:
                steps -= 1
                if steps < 0:
                    return CYCLE_UNKNOWN, None
                if w < start or not in_core[w]:
                    continue
                if w == start and len(path) >= 6:
                    return CYCLE_FOUND, _as_labeled_cycle(path, n)
                if w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                iters.append(iter(adj[w]))
                stepped = True
                break
            if not stepped:
                iters.pop()
                on_path.discard(path.pop())
    return CYCLE_NONE, None


def _as_labeled_cycle(path: list[int], n: int) -> LabeledCycle:
    # path alternates vertex and label nodes; rotate a vertex node to front
    if path[0] >= n:
        path = path[1:] + path[:1]
    vertices = tuple(path[0::2])
    labels = tuple(x - n for x in path[1::2])
    return LabeledCycle(vertices, labels)
