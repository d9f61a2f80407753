"""Constructive vertex-partition engines with prescribed per-part clique bounds.

The central operation splits a graph with max degree D and clique number
at most D-1 into parts V_1..V_k with omega(g[V_i]) <= p_i - 1, where the
quotas satisfy sum(p_i) = D - 1 + k. Two-part splits run a strategy
cascade (proper-coloring shortcut, independent-set stripping, clique-split
exchange search, and an exhaustive fallback at small n); k-way splits
recurse through two-part splits with greedy migration and star padding.

Every returned partition is re-verified with exact per-part clique
numbers before it leaves this module.
"""

from __future__ import annotations

import itertools
import logging
import random
from dataclasses import dataclass

from . import kernels
from .cliques import (
    CliqueCertificate,
    _lex_smallest_clique,
    all_maximum_cliques,
    clique_number,
    maximum_independent_set,
)
from .errors import (
    AllStrategiesExhausted,
    PreconditionError,
    SearchFailureError,
)
from .graphs import Graph, _mix, induced_subgraph

log = logging.getLogger("clique_splitter.partition")

EXACT_FALLBACK_N = 14
EXACT_KWAY_N = 12


# ---------------------------------------------------------------------------
# Domain types


@dataclass(frozen=True)
class PartitionSpec:
    """Ordered quota list p_1 >= p_2 >= ... >= p_k, each at least 2."""

    quotas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "quotas", tuple(int(p) for p in self.quotas))
        if not self.quotas:
            raise ValueError("at least one quota required")
        if any(p < 2 for p in self.quotas):
            raise ValueError("every quota must be at least 2")
        if any(a < b for a, b in zip(self.quotas, self.quotas[1:])):
            raise ValueError("quotas must be non-increasing")

    @property
    def k(self) -> int:
        return len(self.quotas)

    def feasible_for(self, g: Graph) -> bool:
        """Whether the quota sum matches max degree - 1 + k for this graph."""
        return sum(self.quotas) == g.max_degree - 1 + self.k


@dataclass(frozen=True)
class Partition:
    """Total assignment of vertices to parts plus per-part clique certificates."""

    assignment: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]
    certificates: tuple[CliqueCertificate, ...]
    strategy: str | None = None

    def satisfies(self, quotas) -> bool:
        quotas = tuple(quotas)
        if len(quotas) != len(self.parts):
            return False
        return all(c.omega <= p - 1 for c, p in zip(self.certificates, quotas))


def partition_from_parts(g: Graph, parts, strategy: str | None = None) -> Partition:
    """Build a Partition from explicit part lists, computing certificates.

    Parts must be disjoint and cover every vertex.
    """
    assignment = [-1] * g.n
    norm = []
    for i, members in enumerate(parts):
        members = sorted(set(members))
        for v in members:
            if not (0 <= v < g.n):
                raise ValueError(f"vertex {v} out of range")
            if assignment[v] != -1:
                raise ValueError(f"vertex {v} assigned to two parts")
            assignment[v] = i
        norm.append(tuple(members))
    if any(a == -1 for a in assignment):
        missing = [v for v, a in enumerate(assignment) if a == -1]
        raise ValueError(f"vertices {missing[:5]} not assigned to any part")
    certs = []
    for members in norm:
        sub, back = induced_subgraph(g, members)
        c = clique_number(sub)
        certs.append(CliqueCertificate(c.omega, tuple(back[w] for w in c.witness)))
    return Partition(tuple(assignment), tuple(norm), tuple(certs), strategy)


def partition_from_assignment(g: Graph, assignment, k: int | None = None,
                              strategy: str | None = None) -> Partition:
    assignment = list(assignment)
    if len(assignment) != g.n:
        raise ValueError(f"assignment covers {len(assignment)} of {g.n} vertices")
    if k is None:
        k = max(assignment, default=-1) + 1
    parts = [[v for v, a in enumerate(assignment) if a == i] for i in range(k)]
    return partition_from_parts(g, parts, strategy)


@dataclass(frozen=True)
class HittingSetResult:
    """Outcome of the independent-transversal search over maximum cliques."""

    outcome: str  # "found" | "exception" | "not_found"
    independent_set: tuple[int, ...] | None = None
    cycle_len: int | None = None
    m: int | None = None
    omega_before: int | None = None
    omega_after: int | None = None


@dataclass(frozen=True)
class ExchangeStuck:
    """Exchange search gave up: the clique it could not break and the state."""

    offending_clique: tuple[int, ...]
    side: int
    score: int
    moves: int


@dataclass(frozen=True)
class MaxKpfreeResult:
    """A valid bipartition maximizing |V1| plus how maximality was certified."""

    partition: Partition
    certificate: str  # "exhaustive" | "local"


# ---------------------------------------------------------------------------
# Shared helpers


def _full_mask(n: int) -> int:
    return (1 << n) - 1


def _mask_omega(g: Graph, mask: int, stop_at: int = 0) -> int:
    return kernels.max_clique_size(g.adjacency_bits, mask, stop_at)


def _build_checked(g: Graph, parts, quotas, strategy: str,
                   diags: dict, key: str) -> Partition | None:
    adj = g.adjacency_bits
    for members, quota in zip(parts, quotas):
        if kernels.has_clique_of_size(adj, kernels.to_mask(members), quota):
            diags[key] = f"split leaves a clique of size {quota} in a quota-{quota} part"
            return None
    return partition_from_parts(g, parts, strategy=strategy)


def _dsatur_coloring(g: Graph) -> list[int]:
    """Deterministic DSatur: highest saturation, then degree, then index."""
    n = g.n
    colors = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = min(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (-len(seen[u]), -g.degree(u), u),
        )
        c = 0
        while c in seen[v]:
            c += 1
        colors[v] = c
        for u in g.neighbors(v):
            if colors[u] < 0:
                seen[u].add(c)
    return colors


def _color_classes(colors: list[int]) -> list[list[int]]:
    k = max(colors, default=-1) + 1
    classes = [[] for _ in range(k)]
    for v, c in enumerate(colors):
        classes[c].append(v)
    return classes


def _independent_set(g: Graph) -> tuple[int, ...]:
    """Exact maximum independent set up to 40 vertices, greedy plus
    (1,2)-swap local search beyond."""
    if g.n == 0:
        return ()
    if g.n <= 40:
        return maximum_independent_set(g)
    adj = g.adjacency_bits
    chosen = 0
    avail = _full_mask(g.n)
    while avail:
        v = min(kernels.from_mask(avail), key=lambda u: ((adj[u] & avail).bit_count(), u))
        chosen |= 1 << v
        avail &= ~(adj[v] | (1 << v))
    for _ in range(100):
        improved = False
        for v in kernels.from_mask(chosen):
            without = chosen & ~(1 << v)
            blocked = 0
            for u in kernels.from_mask(without):
                blocked |= adj[u] | (1 << u)
            free = _full_mask(g.n) & ~blocked & ~(1 << v)
            pairs = [
                (a, b)
                for a in kernels.from_mask(free)
                for b in kernels.from_mask(free & ~adj[a])
                if b > a
            ]
            if pairs:
                a, b = pairs[0]
                chosen = without | (1 << a) | (1 << b)
                improved = True
                break
        if not improved:
            break
    return kernels.from_mask(chosen)


def _exact_partition_assignment(g: Graph, quotas) -> list[int] | None:
    """Complete backtracking over vertex assignments with per-part clique
    pruning; None means no valid partition exists. Small n only."""
    quotas = tuple(quotas)
    k = len(quotas)
    adj = g.adjacency_bits
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    masks = [0] * k

    def place(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        bit = 1 << v
        tried_empty: set[int] = set()
        for j in range(k):
            if masks[j] == 0:
                if quotas[j] in tried_empty:
                    continue
                tried_empty.add(quotas[j])
            if not kernels.has_clique_of_size(adj, masks[j] & adj[v], quotas[j] - 1):
                masks[j] |= bit
                if place(i + 1):
                    return True
                masks[j] &= ~bit
        return False

    if not place(0):
        return None
    assignment = [0] * g.n
    for j in range(k):
        for v in kernels.from_mask(masks[j]):
            assignment[v] = j
    return assignment


# ---------------------------------------------------------------------------
# Degree and degeneracy bounded bipartition


def _side_core(g: Graph, side: set[int], limit: int) -> list[int]:
    """Vertices of the `limit`-core of the subgraph induced by `side`:
    nonempty exactly when that subgraph has degeneracy >= limit."""
    deg = {v: sum(1 for u in g.neighbors(v) if u in side) for v in side}
    alive = set(side)
    queue = [v for v in alive if deg[v] <= limit - 1]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g.neighbors(v):
            if u in alive:
                deg[u] -= 1
                if deg[u] == limit - 1:
                    queue.append(u)
    return sorted(alive)


def _seed_splits(g: Graph, p: int, q: int):
    """Eight deterministic starting splits: one greedy, seven pseudo-random."""
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    in1 = [False] * n
    d1 = [0] * n
    d2 = [0] * n
    for v in order:
        if q * d1[v] <= p * d2[v]:
            in1[v] = True
            for u in g.neighbors(v):
                d1[u] += 1
        else:
            for u in g.neighbors(v):
                d2[u] += 1
    yield list(in1)
    for i in range(1, 8):
        rng = random.Random(_mix(3, i, n, p, q))
        yield [rng.random() < p / (p + q) for _ in range(n)]


def _descend_and_repair(g: Graph, p: int, q: int, in1: list[bool]):
    """Steepest descent on q*e(V1) + p*e(V2) with single-vertex flips,
    plus targeted zero-cost core evictions for the degeneracy bounds."""
    n = g.n
    d1 = [0] * n
    d2 = [0] * n
    for v in range(n):
        for u in g.neighbors(v):
            if in1[u]:
                d1[v] += 1
            else:
                d2[v] += 1

    def flip(v: int) -> None:
        if in1[v]:
            in1[v] = False
            for u in g.neighbors(v):
                d1[u] -= 1
                d2[u] += 1
        else:
            in1[v] = True
            for u in g.neighbors(v):
                d1[u] += 1
                d2[u] -= 1

    def descend() -> None:
        while True:
            best_gain = 0
            best_v = -1
            for v in range(n):
                gain = p * d2[v] - q * d1[v] if in1[v] else q * d1[v] - p * d2[v]
                if gain < best_gain:
                    best_gain = gain
                    best_v = v
            if best_v < 0:
                return
            flip(best_v)

    for _ in range(4 * n + 20):
        descend()
        side1 = {v for v in range(n) if in1[v]}
        side2 = {v for v in range(n) if not in1[v]}
        core1 = _side_core(g, side1, p)
        if core1:
            flip(core1[0])
            continue
        core2 = _side_core(g, side2, q)
        if core2:
            flip(core2[0])
            continue
        if all(d1[v] <= p for v in side1) and all(d2[v] <= q for v in side2):
            return sorted(side1), sorted(side2)
        break
    return None


def _bounds_hold(g: Graph, v1, v2, p: int, q: int) -> bool:
    s1, s2 = set(v1), set(v2)
    for v in s1:
        if sum(1 for u in g.neighbors(v) if u in s1) > p:
            return False
    for v in s2:
        if sum(1 for u in g.neighbors(v) if u in s2) > q:
            return False
    return not _side_core(g, s1, p) and not _side_core(g, s2, q)


def degree_bounded_bipartition(g: Graph, p: int, q: int) -> Partition:
    """Split V(g) so that V1 has max internal degree at most p and is
    (p-1)-degenerate, and V2 likewise for q. Requires max degree >= 3,
    p + q equal to the max degree, and clique number at most the max
    degree. All four bounds are verified before returning.
    """
    delta = g.max_degree
    if delta < 3:
        raise PreconditionError(f"max degree {delta} is below 3")
    if p < 1 or q < 1:
        raise PreconditionError("p and q must be positive")
    if p + q != delta:
        raise PreconditionError(f"p+q={p + q} differs from max degree {delta}")
    cert = clique_number(g)
    if cert.omega > delta:
        raise PreconditionError(
            f"clique number {cert.omega} exceeds max degree {delta}",
            witness=cert.witness)

    for split0 in _seed_splits(g, p, q):
        res = _descend_and_repair(g, p, q, list(split0))
        if res is not None and _bounds_hold(g, res[0], res[1], p, q):
            return partition_from_parts(g, res, strategy="degree-local-search")
    if g.n <= EXACT_FALLBACK_N:
        for mask in range(1 << g.n):
            v1 = [v for v in range(g.n) if (mask >> v) & 1]
            v2 = [v for v in range(g.n) if not (mask >> v) & 1]
            if _bounds_hold(g, v1, v2, p, q):
                return partition_from_parts(g, [v1, v2], strategy="degree-exhaustive")
    raise SearchFailureError(
        "degree-bounded local search failed on every seed",
        {"n": g.n, "p": p, "q": q, "max_degree": delta})


# ---------------------------------------------------------------------------
# Hitting independent sets and the product-family recognizer


def detect_cycle_clique_product(g: Graph):
    """Recognize strong products of an odd cycle (length >= 5) with a
    complete graph, via true-twin modules and their quotient.

    Returns (cycle_len, m) or None.
    """
    n = g.n
    if n < 5:
        return None
    deg = g.max_degree
    if g.min_degree != deg or (deg + 1) % 3 != 0:
        return None
    m = (deg + 1) // 3
    adj = g.adjacency_bits
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(adj[v] | (1 << v), []).append(v)
    classes = list(groups.values())
    length = len(classes)
    if length < 5 or length % 2 == 0 or length * m != n:
        return None
    if any(len(c) != m for c in classes):
        return None
    reps = [c[0] for c in classes]
    quotient = [set() for _ in range(length)]
    for i in range(length):
        for j in range(i + 1, length):
            if g.has_edge(reps[i], reps[j]):
                for u in classes[i]:
                    for w in classes[j]:
                        if not g.has_edge(u, w):
                            return None
                quotient[i].add(j)
                quotient[j].add(i)
    if any(len(s) != 2 for s in quotient):
        return None
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in quotient[i]:
            if j not in seen:
                seen.add(j)
                frontier.append(j)
    if len(seen) != length:
        return None
    return (length, m)


def hitting_independent_set(g: Graph) -> HittingSetResult:
    """Search exhaustively for an independent set meeting every maximum
    clique (removal then drops the clique number by exactly one).

    Outcomes: found (with certificate), exception when the graph is a
    recognized odd-cycle strong product, not_found when the complete
    search proves no transversal exists.
    """
    cert = clique_number(g)
    omega = cert.omega
    if omega == 0:
        return HittingSetResult("not_found")
    adj = g.adjacency_bits
    clique_masks = [kernels.to_mask(c) for c in all_maximum_cliques(g)]

    found: list[int | None] = [None]

    def search(chosen: int, forbidden: int) -> bool:
        best_opts = -1
        best_cnt = -1
        for cm in clique_masks:
            if cm & chosen:
                continue
            opts = cm & ~forbidden
            cnt = opts.bit_count()
            if cnt == 0:
                return False
            if best_cnt < 0 or cnt < best_cnt:
                best_cnt = cnt
                best_opts = opts
                if cnt == 1:
                    break
        if best_cnt < 0:
            found[0] = chosen
            return True
        opts = best_opts
        while opts:
            v = (opts & -opts).bit_length() - 1
            opts &= opts - 1
            bit = 1 << v
            if search(chosen | bit, forbidden | adj[v] | bit):
                return True
        return False

    if search(0, 0):
        mask = found[0]
        rest = _full_mask(g.n) & ~mask
        after = kernels.max_clique_size(adj, rest)
        if after != omega - 1:
            raise SearchFailureError(
                f"transversal removal left clique number {after}, expected {omega - 1}")
        return HittingSetResult(
            "found", kernels.from_mask(mask), omega_before=omega, omega_after=after)
    det = detect_cycle_clique_product(g)
    if det is not None:
        return HittingSetResult("exception", cycle_len=det[0], m=det[1])
    return HittingSetResult("not_found")


# ---------------------------------------------------------------------------
# Exchange refinement over clique splits


class CliqueSplitFamily:
    """Search state: a distinguished clique K split into (V', V'') against
    a fixed bipartition (W1, W2) of the remaining vertices.

    The quota window constrains |V'| to [max(0, |K|-q+1), min(|K|, p-1)],
    so both clique sides always fit their quotas. The cross-edge score
    |E[W1, V']| + |E[W2, V'']| is maintained incrementally; the invariant
    check recompute_score() rebuilds it from scratch.
    """

    def __init__(self, g: Graph, clique, w1, w2, p: int, q: int,
                 initial_v1=None):
        self.g = g
        self.clique = tuple(sorted(set(clique)))
        t = len(self.clique)
        adj = g.adjacency_bits
        kmask = kernels.to_mask(self.clique)
        for v in self.clique:
            if (adj[v] & kmask) != kmask ^ (1 << v):
                raise PreconditionError(f"vertex set is not a clique at vertex {v}")
        w1 = tuple(sorted(set(w1)))
        w2 = tuple(sorted(set(w2)))
        outside = set(range(g.n)) - set(self.clique)
        if set(w1) | set(w2) != outside or set(w1) & set(w2):
            raise PreconditionError("W1 and W2 must bipartition the vertices outside K")
        lo = max(0, t - (q - 1))
        hi = min(t, p - 1)
        if lo > hi:
            raise PreconditionError(
                f"empty quota window for |K|={t} with p={p}, q={q}")
        self.p, self.q = p, q
        self.window = (lo, hi)
        self.w1_mask = kernels.to_mask(w1)
        self.w2_mask = kernels.to_mask(w2)
        self.cross1 = {v: (adj[v] & self.w1_mask).bit_count() for v in self.clique}
        self.cross2 = {v: (adj[v] & self.w2_mask).bit_count() for v in self.clique}
        if initial_v1 is None:
            initial_v1 = self.clique[:hi]
        initial_v1 = tuple(sorted(set(initial_v1)))
        if not set(initial_v1) <= set(self.clique) or not lo <= len(initial_v1) <= hi:
            raise PreconditionError("initial split outside the quota window")
        self.v1_mask = kernels.to_mask(initial_v1)
        self.score = self.recompute_score()

    @property
    def v2_mask(self) -> int:
        return kernels.to_mask(self.clique) & ~self.v1_mask

    def split(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return kernels.from_mask(self.v1_mask), kernels.from_mask(self.v2_mask)

    def recompute_score(self) -> int:
        adj = self.g.adjacency_bits
        total = 0
        for v in kernels.from_mask(self.v1_mask):
            total += (adj[v] & self.w1_mask).bit_count()
        for v in kernels.from_mask(self.v2_mask):
            total += (adj[v] & self.w2_mask).bit_count()
        return total

    def move_to_second(self, v: int) -> None:
        self.v1_mask &= ~(1 << v)
        self.score += self.cross2[v] - self.cross1[v]

    def move_to_first(self, v: int) -> None:
        self.v1_mask |= 1 << v
        self.score += self.cross1[v] - self.cross2[v]

    def swap(self, v_out: int, v_in: int) -> None:
        """Exchange v_out (leaving V') with v_in (entering V')."""
        self.move_to_second(v_out)
        self.move_to_first(v_in)


def exchange_refine(g: Graph, family: CliqueSplitFamily, p: int, q: int):
    """Refine a clique split until both parts meet their quotas.

    Phase one greedily applies strictly score-decreasing single moves and
    pair swaps inside the quota window (the score never increases across
    these). Phase two applies targeted repairs: given an offending clique
    through an outside vertex w, exchange one of its clique vertices for a
    non-neighbor of w. Returns the valid Partition or ExchangeStuck.
    """
    adj = g.adjacency_bits
    if kernels.has_clique_of_size(adj, family.w1_mask, p):
        raise PreconditionError("W1 already contains a clique of size p")
    if kernels.has_clique_of_size(adj, family.w2_mask, q):
        raise PreconditionError("W2 already contains a clique of size q")
    t = len(family.clique)
    budget = 50 * t * t
    moves = 0
    lo, hi = family.window

    def descend() -> None:
        nonlocal moves
        while moves < budget:
            size1 = family.v1_mask.bit_count()
            v1 = kernels.from_mask(family.v1_mask)
            v2 = kernels.from_mask(family.v2_mask)
            best = None  # (delta, rank, key, action)
            if size1 - 1 >= lo:
                for v in v1:
                    d = family.cross2[v] - family.cross1[v]
                    if d < 0:
                        cand = (d, 0, (v,))
                        if best is None or cand < best[:3]:
                            best = cand + (("down", v),)
            if size1 + 1 <= hi:
                for v in v2:
                    d = family.cross1[v] - family.cross2[v]
                    if d < 0:
                        cand = (d, 1, (v,))
                        if best is None or cand < best[:3]:
                            best = cand + (("up", v),)
            for v in v1:
                dv = family.cross2[v] - family.cross1[v]
                for u in v2:
                    d = dv + family.cross1[u] - family.cross2[u]
                    if d < 0:
                        cand = (d, 2, (v, u))
                        if best is None or cand < best[:3]:
                            best = cand + (("swap", v, u),)
            if best is None:
                return
            action = best[3]
            if action[0] == "down":
                family.move_to_second(action[1])
            elif action[0] == "up":
                family.move_to_first(action[1])
            else:
                family.swap(action[1], action[2])
            moves += 1

    def violation():
        mask1 = family.w1_mask | family.v1_mask
        if kernels.has_clique_of_size(adj, mask1, p):
            return 0, _lex_smallest_clique(adj, mask1, p)
        mask2 = family.w2_mask | family.v2_mask
        if kernels.has_clique_of_size(adj, mask2, q):
            return 1, _lex_smallest_clique(adj, mask2, q)
        return None

    first_round = True
    while True:
        viol = violation()
        if viol is None:
            v1, v2 = family.split()
            parts = [
                sorted(kernels.from_mask(family.w1_mask) + v1),
                sorted(kernels.from_mask(family.w2_mask) + v2),
            ]
            return partition_from_parts(g, parts, strategy="exchange")
        if first_round:
            first_round = False
            descend()
            continue
        side, witness = viol
        if moves >= budget:
            return ExchangeStuck(witness, side, family.score, moves)
        wset = set(witness)
        if side == 0:
            outside_mask, inside_mask, other_mask = (
                family.w1_mask, family.v1_mask, family.v2_mask)
        else:
            outside_mask, inside_mask, other_mask = (
                family.w2_mask, family.v2_mask, family.v1_mask)
        outside_hits = sorted(wset & set(kernels.from_mask(outside_mask)))
        inside_hits = sorted(wset & set(kernels.from_mask(inside_mask)))
        if not inside_hits:
            raise SearchFailureError(
                "offending clique avoids the split clique entirely")
        applied = False
        for w in outside_hits:
            for v_in in kernels.from_mask(other_mask & ~adj[w]):
                v_out = inside_hits[0]
                if side == 0:
                    family.swap(v_out, v_in)
                else:
                    family.swap(v_in, v_out)
                moves += 1
                applied = True
                break
            if applied:
                break
        if not applied:
            return ExchangeStuck(witness, side, family.score, moves)


# ---------------------------------------------------------------------------
# Two-part strategy cascade


def _strip_parts(g: Graph, p: int, q: int):
    """Peel up to q-1 independent layers until the remainder has clique
    number below p. The layer union induces a (q-1)-colorable graph, so
    its clique number is automatically below q."""
    rest = list(range(g.n))
    layers: list[list[int]] = []
    while len(layers) < q - 1:
        sub, back = induced_subgraph(g, rest)
        if sub.n == 0:
            break
        omega = _mask_omega(sub, _full_mask(sub.n))
        if omega <= p - 1:
            break
        use_hitting = sub.n <= 20 or 4 * omega >= 3 * (sub.max_degree + 1)
        local: tuple[int, ...] = ()
        if use_hitting:
            hit = hitting_independent_set(sub)
            if hit.outcome == "found":
                local = hit.independent_set
        if not local:
            local = _independent_set(sub)
        if not local:
            break
        chosen = {back[v] for v in local}
        layers.append(sorted(chosen))
        rest = [v for v in rest if v not in chosen]
    sub, _ = induced_subgraph(g, rest)
    if sub.n and _mask_omega(sub, _full_mask(sub.n)) > p - 1:
        return None
    v2 = sorted(v for layer in layers for v in layer)
    return rest, v2


def _coloring_strategy(g: Graph, p: int, q: int, seed: int, diags: dict):
    delta = g.max_degree
    colors = _dsatur_coloring(g)
    ncolors = max(colors, default=-1) + 1
    if ncolors > delta - 1:
        if g.n <= EXACT_FALLBACK_N:
            from .oracle import find_coloring

            exact = find_coloring(g, delta - 1)
            if exact is None:
                diags["coloring"] = f"no proper coloring with {delta - 1} colors exists"
                return None
            colors = exact
        else:
            diags["coloring"] = f"DSatur used {ncolors} > {delta - 1} classes"
            return None
    classes = _color_classes(colors)
    classes.sort(key=lambda cls: (-len(cls), cls))
    v1 = sorted(v for cls in classes[: p - 1] for v in cls)
    v2 = sorted(v for cls in classes[p - 1:] for v in cls)
    return _build_checked(g, [v1, v2], (p, q), "coloring", diags, "coloring")


def _stripping_strategy(g: Graph, p: int, q: int, seed: int, diags: dict):
    parts = _strip_parts(g, p, q)
    if parts is None:
        diags["stripping"] = "peeling left a too-large clique in the remainder"
        return None
    return _build_checked(g, parts, (p, q), "stripping", diags, "stripping")


def _attach_pendant_clique(g: Graph, delta: int) -> Graph:
    """Join a clique on delta-1 fresh vertices to a minimum-degree vertex
    by a single edge; raises the clique number to delta-1 while keeping
    the max degree at delta."""
    v = min(range(g.n), key=lambda u: (g.degree(u), u))
    base = g.n
    extra = delta - 1
    edges = g.edges()
    edges += [(base + i, base + j) for i in range(extra) for j in range(i + 1, extra)]
    edges.append((v, base))
    return Graph(base + extra, edges)


def _partition_free(g: Graph, p: int, q: int, seed: int, depth: int):
    """Best-effort split with omega(V1) <= p-1 and omega(V2) <= q-1, free
    of any degree arithmetic. Used on remainders inside the exchange
    strategy."""
    n = g.n
    if n == 0:
        return [], []
    adj = g.adjacency_bits
    if not kernels.has_clique_of_size(adj, _full_mask(n), p):
        return list(range(n)), []
    colors = _dsatur_coloring(g)
    ncolors = max(colors) + 1
    if ncolors <= (p - 1) + (q - 1):
        classes = _color_classes(colors)
        classes.sort(key=lambda cls: (-len(cls), cls))
        v1 = sorted(v for cls in classes[: p - 1] for v in cls)
        v2 = sorted(v for cls in classes[p - 1:] for v in cls)
        if not kernels.has_clique_of_size(adj, kernels.to_mask(v1), p) and \
           not kernels.has_clique_of_size(adj, kernels.to_mask(v2), q):
            return v1, v2
    parts = _strip_parts(g, p, q)
    if parts is not None:
        return parts
    if n <= EXACT_FALLBACK_N:
        assignment = _exact_partition_assignment(g, (p, q))
        if assignment is not None:
            return ([v for v in range(n) if assignment[v] == 0],
                    [v for v in range(n) if assignment[v] == 1])
    return None


def _exchange_strategy(g: Graph, p: int, q: int, seed: int, diags: dict):
    delta = g.max_degree
    omega = clique_number(g).omega
    base = g
    if omega in (delta - 2, delta - 3) and g.min_degree < delta:
        base = _attach_pendant_clique(g, delta)
    real_n = g.n
    for K in all_maximum_cliques(base)[:8]:
        t = len(K)
        if t > (p - 1) + (q - 1):
            continue
        rest = [v for v in range(base.n) if v not in set(K)]
        sub, back = induced_subgraph(base, rest)
        wsplit = _partition_free(sub, p, q, seed, depth=1)
        if wsplit is None:
            diags[f"exchange/K@{K[0]}"] = "no quota-free split of the remainder"
            continue
        w1 = [back[v] for v in wsplit[0]]
        w2 = [back[v] for v in wsplit[1]]
        try:
            family = CliqueSplitFamily(base, K, w1, w2, p, q)
        except PreconditionError as exc:
            diags[f"exchange/K@{K[0]}"] = str(exc)
            continue
        result = exchange_refine(base, family, p, q)
        if isinstance(result, Partition):
            parts = [[v for v in side if v < real_n] for side in result.parts]
            built = _build_checked(g, parts, (p, q), "exchange", diags, f"exchange/K@{K[0]}")
            if built is not None:
                return built
        else:
            diags[f"exchange/K@{K[0]}"] = (
                f"stuck on a size-{len(result.offending_clique)} clique "
                f"at score {result.score} after {result.moves} moves")
    diags.setdefault("exchange", "every seeded clique split got stuck")
    return None


def _exact_strategy(g: Graph, p: int, q: int, seed: int, diags: dict):
    if g.n > EXACT_FALLBACK_N:
        diags["exact"] = f"skipped (n={g.n} above {EXACT_FALLBACK_N})"
        return None
    assignment = _exact_partition_assignment(g, (p, q))
    if assignment is None:
        diags["exact"] = "proved infeasible"
        return None
    return partition_from_assignment(g, assignment, 2, strategy="exact")


def clique_bipartition(g: Graph, p: int, q: int, seed: int = 0) -> Partition:
    """Split V(g) into (V1, V2) with omega(g[V1]) <= p-1 and
    omega(g[V2]) <= q-1, for p + q = max degree + 1, p >= q >= 2, and
    clique number at most max degree - 1.

    Strategies run in order: proper-coloring shortcut, independent-set
    stripping, exchange search over clique splits, and an exhaustive
    search for small graphs. AllStrategiesExhausted carries per-strategy
    diagnostics; with proven_infeasible set it is a certified negative.
    """
    delta = g.max_degree
    if q < 2 or p < q:
        raise PreconditionError(f"need p >= q >= 2, got p={p}, q={q}")
    if p + q != delta + 1:
        raise PreconditionError(
            f"p+q={p + q} differs from max degree + 1 = {delta + 1}")
    cert = clique_number(g)
    if cert.omega > delta - 1:
        raise PreconditionError(
            f"clique number {cert.omega} exceeds max degree - 1 = {delta - 1}",
            witness=cert.witness)
    diags: dict[str, str] = {}
    for strategy in (_coloring_strategy, _stripping_strategy,
                     _exchange_strategy, _exact_strategy):
        part = strategy(g, p, q, seed, diags)
        if part is not None:
            log.debug("clique_bipartition(p=%d, q=%d) solved by %s", p, q, part.strategy)
            return part
    raise AllStrategiesExhausted(
        f"no valid ({p},{q}) split found", diags,
        proven_infeasible=diags.get("exact") == "proved infeasible")


# ---------------------------------------------------------------------------
# k-way partition via recursive bipartition


def _pad_star(g: Graph, target: int) -> tuple[Graph, int]:
    """Raise the max degree to exactly `target` by starring fresh leaves
    onto one maximum-degree vertex. Returns (padded, real_vertex_count)."""
    if g.n == 0 or g.max_degree >= target:
        return g, g.n
    v = min(u for u in range(g.n) if g.degree(u) == g.max_degree)
    extra = target - g.max_degree
    edges = g.edges() + [(v, g.n + i) for i in range(extra)]
    return Graph(g.n + extra, edges), g.n


def _kway_parts(g: Graph, quotas: tuple[int, ...], seed: int, depth: int):
    k = len(quotas)
    if k == 1:
        if kernels.has_clique_of_size(g.adjacency_bits, _full_mask(g.n), quotas[0]):
            raise AllStrategiesExhausted(
                f"single part contains a clique of size {quotas[0]}", depth=depth)
        return [list(range(g.n))], ["verify"]
    p = sum(quotas[:-1]) - (k - 2)
    q = quotas[-1]
    try:
        bip = clique_bipartition(g, p, q, seed=seed)
    except AllStrategiesExhausted as exc:
        exc.depth = depth
        raise
    v1 = list(bip.parts[0])
    v2 = set(bip.parts[1])
    adj = g.adjacency_bits
    v2mask = kernels.to_mask(v2)
    # Migrate greedily until V2 is a maximal quota-free set; afterwards
    # every remaining V1 vertex keeps q-1 neighbors in V2, which caps the
    # internal degree of V1 at p.
    moved = True
    while moved:
        moved = False
        for v in sorted(v1):
            if not kernels.has_clique_of_size(adj, v2mask & adj[v], q - 1):
                v1.remove(v)
                v2.add(v)
                v2mask |= 1 << v
                moved = True
    if k == 2:
        return [sorted(v1), sorted(v2)], [bip.strategy or "?"]
    if not v1:
        return [[] for _ in range(k - 1)] + [sorted(v2)], [bip.strategy or "?"]
    sub, back = induced_subgraph(g, v1)
    if sub.max_degree > p:
        raise SearchFailureError(
            f"migrated remainder has degree {sub.max_degree} above {p}")
    padded, real = _pad_star(sub, p)
    sub_parts, sub_strategies = _kway_parts(padded, quotas[:-1], seed, depth + 1)
    mapped = [[back[v] for v in side if v < real] for side in sub_parts]
    return mapped + [sorted(v2)], [bip.strategy or "?"] + sub_strategies


def kway_clique_partition(g: Graph, spec, seed: int = 0) -> Partition:
    """Split V(g) into k parts meeting every quota, for quota lists with
    sum(p_i) = max degree - 1 + k and clique number at most max degree - 1.

    Recursion: bundle the first k-1 quotas into one side of a two-part
    split, make the last part maximal by greedy migration, pad the rest to
    the exact target degree with star dummies, recurse, and strip the
    dummies. Dummy vertices never appear in the returned partition or its
    certificates.
    """
    if not isinstance(spec, PartitionSpec):
        spec = PartitionSpec(tuple(spec))
    delta = g.max_degree
    total = sum(spec.quotas)
    if total != delta - 1 + spec.k:
        raise PreconditionError(
            f"quota sum {total} differs from max degree - 1 + k = {delta - 1 + spec.k}")
    cert = clique_number(g)
    if cert.omega > delta - 1:
        raise PreconditionError(
            f"clique number {cert.omega} exceeds max degree - 1 = {delta - 1}",
            witness=cert.witness)
    try:
        parts, strategies = _kway_parts(g, spec.quotas, seed, 0)
    except AllStrategiesExhausted as exc:
        if g.n <= EXACT_KWAY_N:
            assignment = _exact_partition_assignment(g, spec.quotas)
            if assignment is not None:
                parts = [[v for v in range(g.n) if assignment[v] == i]
                         for i in range(spec.k)]
                strategies = ["exact-kway"]
            else:
                raise AllStrategiesExhausted(
                    "exhaustive search proves no valid partition exists",
                    exc.diagnostics, depth=exc.depth,
                    proven_infeasible=True) from exc
        else:
            raise
    part = partition_from_parts(g, parts, strategy=";".join(strategies))
    if not part.satisfies(spec.quotas):
        raise SearchFailureError(
            "post-verification failed",
            {"omegas": [c.omega for c in part.certificates], "quotas": spec.quotas})
    return part


# ---------------------------------------------------------------------------
# Maximum K_p-free side


def _parts_valid(g: Graph, v1_mask: int, v2_mask: int, p: int, q: int) -> bool:
    adj = g.adjacency_bits
    return (not kernels.has_clique_of_size(adj, v1_mask, p)
            and not kernels.has_clique_of_size(adj, v2_mask, q))


def _grow_to_local_max(g: Graph, v1: set[int], v2: set[int], p: int, q: int):
    """Enlarge V1 while both sides stay valid: single pulls from V2, then
    2-in-1-out exchanges. Stops when neither move applies."""
    adj = g.adjacency_bits
    v1_mask = kernels.to_mask(v1)
    v2_mask = kernels.to_mask(v2)
    for _ in range(400):
        grown = False
        for v in sorted(v2):
            nm1 = v1_mask | (1 << v)
            nm2 = v2_mask & ~(1 << v)
            if _parts_valid(g, nm1, nm2, p, q):
                v1.add(v)
                v2.discard(v)
                v1_mask, v2_mask = nm1, nm2
                grown = True
                break
        if grown:
            continue
        for a, b in itertools.combinations(sorted(v2), 2):
            for c in sorted(v1):
                nm1 = (v1_mask | (1 << a) | (1 << b)) & ~(1 << c)
                nm2 = (v2_mask | (1 << c)) & ~((1 << a) | (1 << b))
                if _parts_valid(g, nm1, nm2, p, q):
                    v1 |= {a, b}
                    v1.discard(c)
                    v2 |= {c}
                    v2 -= {a, b}
                    v1_mask, v2_mask = nm1, nm2
                    grown = True
                    break
            if grown:
                break
        if not grown:
            break
    return v1, v2


def max_kpfree_partition(g: Graph, p: int, q: int, seed: int = 0) -> MaxKpfreeResult:
    """Valid bipartition maximizing |V1| among all valid bipartitions.

    Exhaustive (certificate "exhaustive") up to 14 vertices: subsets are
    scanned by descending size and lexicographic order, so ties match the
    oracle's tie-break. Beyond that a grow-and-swap heuristic runs from
    clique-excision seeds (certificate "local": no single or double vertex
    migration can enlarge V1).
    """
    delta = g.max_degree
    if p < 1 or q < 1 or p < q:
        raise PreconditionError(f"need p >= q >= 1, got p={p}, q={q}")
    if p + q != delta + 1:
        raise PreconditionError(
            f"p+q={p + q} differs from max degree + 1 = {delta + 1}")
    cert = clique_number(g)
    if cert.omega > delta - 1:
        raise PreconditionError(
            f"clique number {cert.omega} exceeds max degree - 1 = {delta - 1}",
            witness=cert.witness)
    n = g.n
    adj = g.adjacency_bits
    if n <= EXACT_FALLBACK_N:
        full = _full_mask(n)
        for size in range(n, -1, -1):
            for combo in itertools.combinations(range(n), size):
                mask = kernels.to_mask(combo)
                if _parts_valid(g, mask, full & ~mask, p, q):
                    part = partition_from_parts(
                        g, [list(combo), kernels.from_mask(full & ~mask)],
                        strategy="maxfree-exhaustive")
                    return MaxKpfreeResult(part, "exhaustive")
        raise AllStrategiesExhausted(
            f"no valid ({p},{q}) split exists", proven_infeasible=True)

    candidates: list[tuple[set[int], set[int]]] = []
    omega = cert.omega
    for K in all_maximum_cliques(g)[:20]:
        t = len(K)
        rest = [v for v in range(n) if v not in set(K)]
        sub, back = induced_subgraph(g, rest)
        padded, real = _pad_star(sub, delta)
        wsplit = _partition_free(padded, p, q, seed, depth=1)
        if wsplit is None:
            continue
        y1 = {back[v] for v in wsplit[0] if v < real}
        y2 = {back[v] for v in wsplit[1] if v < real}
        a = min(p - 1, t)
        v1 = y1 | set(K[:a])
        v2 = y2 | set(K[a:])
        if _parts_valid(g, kernels.to_mask(v1), kernels.to_mask(v2), p, q):
            candidates.append((v1, v2))
            continue
        try:
            family = CliqueSplitFamily(g, K, sorted(y1), sorted(y2), p, q)
        except PreconditionError:
            continue
        result = exchange_refine(g, family, p, q)
        if isinstance(result, Partition):
            candidates.append((set(result.parts[0]), set(result.parts[1])))
    if q >= 2:
        try:
            bip = clique_bipartition(g, p, q, seed=seed)
            candidates.append((set(bip.parts[0]), set(bip.parts[1])))
        except AllStrategiesExhausted:
            pass
    if not candidates:
        raise AllStrategiesExhausted(f"no valid ({p},{q}) split found")
    candidates.sort(key=lambda pair: (-len(pair[0]), sorted(pair[0])))
    best = candidates[0]
    v1, v2 = _grow_to_local_max(g, set(best[0]), set(best[1]), p, q)
    part = partition_from_parts(g, [sorted(v1), sorted(v2)], strategy="maxfree-local")
    return MaxKpfreeResult(part, "local")
