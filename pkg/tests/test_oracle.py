import pytest

import clique_splitter as cs
from _brute import (
    brute_chromatic,
    brute_degeneracy,
    brute_omega,
    naive_partition_exists,
    petersen,
)


def K(n):
    return cs.generate(cs.GeneratorRecipe("complete", {"n": n}))


def C(n):
    return cs.generate(cs.GeneratorRecipe("cycle", {"n": n}))


def gnp(n, p, seed):
    return cs.generate(cs.GeneratorRecipe("gnp", {"n": n, "p": p}, seed=seed))


class TestExistsCliquePartition:
    def test_odd_cycle_two_twos(self):
        ok, witness = cs.exists_clique_partition(C(5), cs.PartitionSpec((2, 2)))
        assert not ok and witness is None

    def test_triangle_free_whole_graph(self):
        ok, witness = cs.exists_clique_partition(C(5), cs.PartitionSpec((3, 2)))
        assert ok
        assert witness.parts == ((0, 1, 2, 3, 4), ())

    def test_k6_pigeonhole(self):
        ok, _ = cs.exists_clique_partition(K(6), cs.PartitionSpec((4, 3)))
        assert not ok

    def test_witness_is_always_valid(self):
        g = gnp(9, 0.5, 4)
        ok, witness = cs.exists_clique_partition(g, cs.PartitionSpec((3, 2)))
        if ok:
            report = cs.verify_partition(g, witness, cs.PartitionSpec((3, 2)))
            assert report.valid

    @pytest.mark.parametrize("seed", range(6))
    @pytest.mark.parametrize("quotas", [(2, 2), (3, 2), (2, 2, 2), (3, 3)])
    def test_agrees_with_naive_full_enumeration(self, seed, quotas):
        g = gnp(7, 0.5, seed)
        ok, witness = cs.exists_clique_partition(g, cs.PartitionSpec(quotas))
        assert ok == naive_partition_exists(g, quotas)
        if ok:
            assert cs.verify_partition(g, witness, cs.PartitionSpec(quotas)).valid

    def test_budget_refusal(self):
        g = gnp(15, 0.3, 0)
        with pytest.raises(cs.BudgetExceededError):
            cs.exists_clique_partition(g, cs.PartitionSpec((9, 7)))

    def test_budget_is_adjustable(self):
        g = gnp(15, 0.3, 0)
        budget = cs.OracleBudget(assignment_cap=15)
        ok, _ = cs.exists_clique_partition(
            g, cs.PartitionSpec((g.max_degree - 1, 2)), budget)
        assert ok in (True, False)

    def test_state_cap_enforced(self):
        g = gnp(12, 0.5, 1)
        tiny = cs.OracleBudget(max_states=5)
        with pytest.raises(cs.BudgetExceededError, match="states"):
            cs.exists_clique_partition(g, cs.PartitionSpec((3, 3)), tiny)


class TestMaxKpfreeSubset:
    def test_complete_graph(self):
        assert cs.max_kpfree_subset(K(5), 3) == (0, 1)

    def test_odd_cycle_independent(self):
        assert cs.max_kpfree_subset(C(5), 2) == (0, 2)

    def test_petersen_independence_number(self):
        found = cs.max_kpfree_subset(petersen(), 2)
        assert len(found) == 4

    def test_monotone_in_p(self):
        g = gnp(10, 0.6, 2)
        sizes = [len(cs.max_kpfree_subset(g, p)) for p in range(2, 6)]
        assert sizes == sorted(sizes)

    def test_budget_refusal(self):
        with pytest.raises(cs.BudgetExceededError):
            cs.max_kpfree_subset(gnp(25, 0.2, 0), 3)


class TestChromaticNumber:
    @pytest.mark.parametrize("g,expected", [
        (C(5), 3),
        (K(7), 7),
        (petersen(), 3),
        (cs.Graph(4), 1),
        (cs.Graph(0), 0),
    ], ids=["C5", "K7", "petersen", "edgeless", "empty"])
    def test_examples(self, g, expected):
        assert cs.chromatic_number(g) == expected

    @pytest.mark.parametrize("seed", range(4))
    def test_matches_brute(self, seed):
        g = gnp(7, 0.5, seed)
        assert cs.chromatic_number(g) == brute_chromatic(g)

    def test_brooks_bound_on_fixtures(self):
        # chi <= max degree + 1, equality only for complete graphs and odd cycles
        for g in [K(4), K(6), C(5), C(7), C(6), petersen(), gnp(8, 0.4, 1)]:
            chi = cs.chromatic_number(g)
            assert chi <= g.max_degree + 1
            if chi == g.max_degree + 1:
                is_complete = g.edge_count == g.n * (g.n - 1) // 2
                is_odd_cycle = (g.n % 2 == 1 and g.edge_count == g.n
                                and g.max_degree == 2)
                assert is_complete or is_odd_cycle

    def test_budget_refusal(self):
        with pytest.raises(cs.BudgetExceededError):
            cs.chromatic_number(gnp(15, 0.4, 0))


class TestFindColoring:
    def test_exact_boundary(self):
        g = petersen()
        assert cs.find_coloring(g, 2) is None
        coloring = cs.find_coloring(g, 3)
        assert coloring is not None
        assert all(coloring[u] != coloring[v] for u, v in g.edges())
        assert max(coloring) + 1 <= 3


class TestDegeneracy:
    def test_tree(self):
        tree = cs.generate(cs.GeneratorRecipe("path", {"n": 6}))
        assert cs.degeneracy(tree) == 1

    def test_complete(self):
        assert cs.degeneracy(K(5)) == 4

    def test_petersen(self):
        assert cs.degeneracy(petersen()) == 3

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_brute_peel(self, seed):
        g = gnp(11, 0.4, seed)
        assert cs.degeneracy(g) == brute_degeneracy(g)

    def test_at_least_omega_minus_one(self):
        for g in [K(4), C(7), petersen(), gnp(10, 0.5, 9)]:
            assert cs.degeneracy(g) >= brute_omega(g) - 1


class TestVerifyPartition:
    def test_valid_bipartite_split(self):
        g = C(6)
        part = cs.partition_from_parts(g, [[0, 2, 4], [1, 3, 5]])
        report = cs.verify_partition(g, part, cs.PartitionSpec((2, 2)))
        assert report.valid and report.part_omegas == (1, 1)

    def test_violation_carries_quota_sized_witness(self):
        g = K(4)
        part = cs.partition_from_parts(g, [[0, 1, 2, 3], []])
        report = cs.verify_partition(g, part, cs.PartitionSpec((3, 2)))
        assert not report.valid
        assert report.part_omegas[0] == 4
        part_index, witness = report.violations[0]
        assert part_index == 0 and len(witness) == 3
        assert all(g.has_edge(u, v) for i, u in enumerate(witness) for v in witness[i + 1:])

    def test_partial_assignment_rejected(self):
        g = C(4)
        part = cs.Partition((0, 0, 1), ((0, 1), (2,)), (), None)
        with pytest.raises(cs.PreconditionError):
            cs.verify_partition(g, part, cs.PartitionSpec((2, 2)))

    def test_part_count_mismatch_rejected(self):
        g = C(4)
        part = cs.partition_from_parts(g, [[0, 1], [2, 3]])
        with pytest.raises(cs.PreconditionError):
            cs.verify_partition(g, part, cs.PartitionSpec((2, 2, 2)))
