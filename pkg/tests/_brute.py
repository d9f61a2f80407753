"""Independent brute-force oracles for the test suite.

Deliberately naive and kernel-free: these re-derive expected values from
first principles so the package's own search code is never checking itself.
"""

from __future__ import annotations

import itertools

from clique_splitter import Graph


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def is_clique(g: Graph, vs) -> bool:
    vs = list(vs)
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def is_independent(g: Graph, vs) -> bool:
    vs = list(vs)
    return not any(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1:])


def brute_omega(g: Graph) -> int:
    """Max clique size by plain include/exclude recursion over vertex sets."""
    neighbor_sets = [frozenset(g.neighbors(v)) for v in range(g.n)]

    def rec(cand: frozenset) -> int:
        if not cand:
            return 0
        v = min(cand)
        rest = cand - {v}
        return max(rec(rest), 1 + rec(rest & neighbor_sets[v]))

    return rec(frozenset(range(g.n)))


def brute_cliques_of_size(g: Graph, t: int) -> list[tuple[int, ...]]:
    return [c for c in itertools.combinations(range(g.n), t) if is_clique(g, c)]


def brute_maximum_cliques(g: Graph) -> list[tuple[int, ...]]:
    omega = brute_omega(g)
    if omega == 0:
        return []
    return brute_cliques_of_size(g, omega)


def brute_max_independent_size(g: Graph) -> int:
    best = 0
    for size in range(g.n, -1, -1):
        if any(is_independent(g, c) for c in itertools.combinations(range(g.n), size)):
            return size
    return best


def brute_has_transversal(g: Graph) -> bool:
    """Exists an independent set meeting every maximum clique (tiny n only)."""
    maxes = brute_maximum_cliques(g)
    if not maxes:
        return False
    sets = [set(c) for c in maxes]
    for size in range(1, g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            if not is_independent(g, combo):
                continue
            chosen = set(combo)
            if all(chosen & s for s in sets):
                return True
    return False


def brute_degeneracy(g: Graph) -> int:
    alive = set(range(g.n))
    best = 0
    while alive:
        v = min(alive, key=lambda u: (sum(1 for w in g.neighbors(u) if w in alive), u))
        best = max(best, sum(1 for w in g.neighbors(v) if w in alive))
        alive.discard(v)
    return best


def brute_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for assignment in itertools.product(range(k), repeat=g.n):
            if all(assignment[u] != assignment[v] for u, v in g.edges()):
                return k
    raise AssertionError("unreachable")


def naive_partition_exists(g: Graph, quotas) -> bool:
    """Full k^n scan; every part must avoid cliques of its quota size."""
    quotas = tuple(quotas)
    k = len(quotas)
    for assignment in itertools.product(range(k), repeat=g.n):
        ok = True
        for i in range(k):
            part = [v for v in range(g.n) if assignment[v] == i]
            if any(is_clique(g, c) for c in itertools.combinations(part, quotas[i])):
                ok = False
                break
        if ok:
            return True
    return False


def valid_bipartition_sizes(g: Graph, p: int, q: int) -> list[int]:
    """All |V1| values over valid (K_p-free, K_q-free) bipartitions."""
    sizes = []
    for mask in range(1 << g.n):
        v1 = [v for v in range(g.n) if (mask >> v) & 1]
        v2 = [v for v in range(g.n) if not (mask >> v) & 1]
        if any(is_clique(g, c) for c in itertools.combinations(v1, p)):
            continue
        if any(is_clique(g, c) for c in itertools.combinations(v2, q)):
            continue
        sizes.append(len(v1))
    return sizes
