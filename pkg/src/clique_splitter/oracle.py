"""Exhaustive ground-truth routines for small instances.

These are the anti-hallucination backstop: every engine result and every
frozen fixture can be re-checked here. The search internals are written
independently of the clique kernels (simple bitset recursions) so that a
kernel bug cannot corrupt both routes; the one deliberate exception is
verify_partition, whose per-part clique numbers come from the clique
engine by contract.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .cliques import clique_number
from .errors import BudgetExceededError, PreconditionError
from .graphs import Graph, induced_subgraph
from .partition import Partition, PartitionSpec, partition_from_assignment


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps; routines refuse inputs beyond them rather than degrade.

    ``assignment_cap`` bounds n for assignment-style searches (partition
    existence, coloring), ``enumeration_cap`` for subset enumeration, and
    ``max_states`` bounds explored search states in either mode.
    """

    assignment_cap: int = 14
    enumeration_cap: int = 20
    max_states: int = 100_000_000


DEFAULT_BUDGET = OracleBudget()


@dataclass(frozen=True)
class VerificationReport:
    """Per-part clique numbers, violation witnesses, and the overall flag."""

    part_omegas: tuple[int, ...]
    valid: bool
    violations: tuple[tuple[int, tuple[int, ...]], ...]


class _Counter:
    __slots__ = ("count", "limit")

    def __init__(self, limit: int):
        self.count = 0
        self.limit = limit

    def tick(self) -> None:
        self.count += 1
        if self.count > self.limit:
            raise BudgetExceededError(f"exceeded {self.limit} search states")


def _has_clique(adj, mask: int, size: int) -> bool:
    """Plain include/exclude recursion; deliberately kernel-free."""
    if size <= 0:
        return True
    if mask.bit_count() < size:
        return False
    v = (mask & -mask).bit_length() - 1
    rest = mask & (mask - 1)
    if _has_clique(adj, rest & adj[v], size - 1):
        return True
    return _has_clique(adj, rest, size)


def exists_clique_partition(
    g: Graph, spec: PartitionSpec, budget: OracleBudget = DEFAULT_BUDGET,
) -> tuple[bool, Partition | None]:
    """Decide by backtracking whether some k-part assignment meets every
    quota, returning a witness partition when one exists.

    Vertices are placed in descending-degree order; a branch dies the
    moment a part's clique number would reach its quota. Empty parts with
    equal quotas are interchangeable and only tried once per level.
    """
    if g.n > budget.assignment_cap:
        raise BudgetExceededError(
            f"n={g.n} beyond assignment cap {budget.assignment_cap}")
    quotas = spec.quotas
    k = spec.k
    adj = g.adjacency_bits
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    masks = [0] * k
    counter = _Counter(budget.max_states)

    def place(i: int) -> bool:
        counter.tick()
        if i == g.n:
            return True
        v = order[i]
        bit = 1 << v
        tried_empty_quota: set[int] = set()
        for j in range(k):
            if masks[j] == 0:
                if quotas[j] in tried_empty_quota:
                    continue
                tried_empty_quota.add(quotas[j])
            if not _has_clique(adj, masks[j] & adj[v], quotas[j] - 1):
                masks[j] |= bit
                if place(i + 1):
                    return True
                masks[j] &= ~bit
        return False

    if place(0):
        assignment = [0] * g.n
        for j in range(k):
            m = masks[j]
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                assignment[v] = j
        return True, partition_from_assignment(g, assignment, k)
    return False, None


def max_kpfree_subset(
    g: Graph, p: int, budget: OracleBudget = DEFAULT_BUDGET,
) -> tuple[int, ...]:
    """Largest vertex set whose induced subgraph has clique number < p;
    ties resolve to the lexicographically smallest set."""
    if p < 1:
        raise ValueError("p must be at least 1")
    if g.n > budget.enumeration_cap:
        raise BudgetExceededError(
            f"n={g.n} beyond enumeration cap {budget.enumeration_cap}")
    adj = g.adjacency_bits
    full = (1 << g.n) - 1
    counter = _Counter(budget.max_states)
    if not _has_clique(adj, full, p):
        return tuple(range(g.n))
    for size in range(g.n - 1, -1, -1):
        for combo in itertools.combinations(range(g.n), size):
            counter.tick()
            mask = 0
            for v in combo:
                mask |= 1 << v
            if not _has_clique(adj, mask, p):
                return combo
    raise AssertionError("unreachable: the empty set is always K_p-free")


def find_coloring(
    g: Graph, max_colors: int, budget: OracleBudget = DEFAULT_BUDGET,
) -> list[int] | None:
    """Exact search for a proper coloring with at most ``max_colors``
    colors; None when impossible."""
    if g.n > budget.assignment_cap:
        raise BudgetExceededError(
            f"n={g.n} beyond assignment cap {budget.assignment_cap}")
    if max_colors < 0:
        return None
    if g.n == 0:
        return []
    if max_colors == 0:
        return None
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [-1] * g.n
    counter = _Counter(budget.max_states)

    def assign(i: int, used: int) -> bool:
        counter.tick()
        if i == g.n:
            return True
        v = order[i]
        forbidden = {colors[u] for u in g.neighbors(v) if colors[u] >= 0}
        # Color symmetry: allow at most one brand-new color per level.
        for c in range(min(used + 1, max_colors)):
            if c in forbidden:
                continue
            colors[v] = c
            if assign(i + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    if assign(0, 0):
        return colors
    return None


def chromatic_number(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Exact chromatic number by iterative deepening over the color count."""
    if g.n > budget.assignment_cap:
        raise BudgetExceededError(
            f"n={g.n} beyond assignment cap {budget.assignment_cap}")
    if g.n == 0:
        return 0
    for c in range(1, g.n + 1):
        if find_coloring(g, c, budget) is not None:
            return c
    raise AssertionError("unreachable: n colors always suffice")


def degeneracy(g: Graph) -> int:
    """Exact degeneracy by repeated minimum-degree removal (no budget)."""
    if g.n == 0:
        return 0
    degs = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    best = 0
    for _ in range(g.n):
        v = min((v for v in range(g.n) if not removed[v]), key=lambda v: (degs[v], v))
        best = max(best, degs[v])
        removed[v] = True
        for u in g.neighbors(v):
            if not removed[u]:
                degs[u] -= 1
    return best


def verify_partition(g: Graph, part: Partition, spec: PartitionSpec) -> VerificationReport:
    """Exact per-part clique numbers (clique engine), the validity flag,
    and a quota-sized clique witness for every violated part."""
    if len(part.assignment) != g.n:
        raise PreconditionError(
            f"assignment covers {len(part.assignment)} vertices, graph has {g.n}")
    if spec.k != len(part.parts):
        raise PreconditionError(
            f"partition has {len(part.parts)} parts, spec wants {spec.k}")
    if any(not (0 <= j < spec.k) for j in part.assignment):
        raise PreconditionError("part index out of range")
    omegas = []
    violations = []
    for i, members in enumerate(part.parts):
        sub, back = induced_subgraph(g, members)
        cert = clique_number(sub)
        omegas.append(cert.omega)
        quota = spec.quotas[i]
        if cert.omega > quota - 1:
            witness = tuple(back[w] for w in cert.witness[:quota])
            violations.append((i, witness))
    return VerificationReport(tuple(omegas), not violations, tuple(violations))
