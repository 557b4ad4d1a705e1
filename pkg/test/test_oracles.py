import unittest

import networkx as nx
import numpy as np

from tspmin.certificates import build_artifact, tour_to_assignment
from tspmin.cnf import CnfFormula, augment_with_dummy, evaluate
from tspmin.exceptions import BudgetExceeded
from tspmin.graphs import is_hamiltonian_cycle
from tspmin.oracles import (OracleBudget, Verdict, as_budget, decide_another_tour, ham_cycle_search,
                            sat_brute, tsp_brute, tsp_exact_held_karp)
from tspmin.tsp import Tour, TspInstance, tour_length


def random_instance(seed, dimension, high=10):
    rng = np.random.default_rng(seed)
    D = rng.integers(1, high, size=(dimension, dimension))
    D = np.triu(D, 1)
    return TspInstance(dimension, D + D.T)


class TestSatBrute(unittest.TestCase):

    def test_contradiction(self):
        result = sat_brute(CnfFormula.from_lists(1, [[1], [-1]]))
        self.assertEqual(result.verdict, Verdict.NO)
        self.assertEqual(result.explored, 2)

    def test_zero_clauses(self):
        result = sat_brute(CnfFormula(2))
        self.assertEqual(result.verdict, Verdict.YES)
        self.assertEqual(result.witness.values, (False, False))

    def test_counting_order(self):
        # x1 least significant: 1=F,2=T comes before 1=T,2=T
        result = sat_brute(CnfFormula.from_lists(2, [[2]]))
        self.assertEqual(result.witness.format(), "1=F,2=T")

    def test_augmented_always_satisfiable(self):
        aug = augment_with_dummy(CnfFormula.from_lists(1, [[1], [-1]]))
        self.assertEqual(sat_brute(aug.augmented).verdict, Verdict.YES)

    def test_budget(self):
        result = sat_brute(CnfFormula.from_lists(3, [[1], [-1]]), budget=3)
        self.assertEqual(result.verdict, Verdict.BUDGET_EXCEEDED)
        self.assertEqual(result.explored, 3)

    def test_budget_values(self):
        self.assertEqual(as_budget(7), OracleBudget(7))
        with self.assertRaises(ValueError):
            OracleBudget(0)


class TestHamCycleSearch(unittest.TestCase):

    def test_triangle(self):
        result = ham_cycle_search(nx.DiGraph([(1, 2), (2, 3), (3, 1)]))
        self.assertEqual(result.verdict, Verdict.YES)
        self.assertEqual(result.witness, [1, 2, 3])

    def test_forbidden_edge(self):
        G = nx.DiGraph([(1, 2), (2, 3), (3, 1)])
        self.assertEqual(ham_cycle_search(G, forbidden={(3, 1)}).verdict, Verdict.NO)

    def test_small_cases(self):
        self.assertEqual(ham_cycle_search(nx.DiGraph()).verdict, Verdict.NO)
        single = nx.DiGraph()
        single.add_node(0)
        self.assertEqual(ham_cycle_search(single).verdict, Verdict.NO)
        single.add_edge(0, 0)
        self.assertEqual(ham_cycle_search(single).witness, [0])
        self.assertEqual(ham_cycle_search(nx.Graph([(0, 1)])).verdict, Verdict.NO)

    def test_undirected(self):
        G = nx.cycle_graph(5)
        result = ham_cycle_search(G)
        self.assertEqual(result.verdict, Verdict.YES)
        self.assertTrue(is_hamiltonian_cycle(G, result.witness))
        self.assertEqual(ham_cycle_search(G, forbidden={(1, 0)}).verdict, Verdict.NO)

    def test_star_has_no_cycle(self):
        self.assertEqual(ham_cycle_search(nx.star_graph(4)).verdict, Verdict.NO)

    def test_agrees_with_networkx_cycles(self):
        # a Hamiltonian cycle exists iff some simple cycle covers every node
        for seed in range(30):
            G = nx.gnp_random_graph(5, 0.45, seed=seed, directed=True)
            expected = any(len(c) == 5 for c in nx.simple_cycles(G))
            result = ham_cycle_search(G)
            self.assertEqual(result.verdict == Verdict.YES, expected, seed)
            if expected:
                self.assertTrue(is_hamiltonian_cycle(G, result.witness))

    def test_gadget_graphs(self):
        art = build_artifact(CnfFormula.from_lists(1, [[1]]))
        self.assertEqual(ham_cycle_search(art.g.graph, forbidden={art.g.ez_directed}).verdict, Verdict.YES)
        art = build_artifact(CnfFormula.from_lists(1, [[1], [-1]]))
        self.assertEqual(ham_cycle_search(art.g.graph, forbidden={art.g.ez_directed}).verdict, Verdict.NO)

    def test_budget(self):
        G = nx.complete_graph(8).to_directed()
        G.remove_edges_from([(u, 0) for u in range(1, 8)])
        result = ham_cycle_search(G, budget=50)
        self.assertEqual(result.verdict, Verdict.BUDGET_EXCEEDED)


class TestExactTsp(unittest.TestCase):

    def test_unit_weights(self):
        instance = TspInstance(4, np.ones((4, 4), dtype=np.int64) - np.eye(4, dtype=np.int64))
        length, tour = tsp_exact_held_karp(instance)
        self.assertEqual(length, 4)
        self.assertEqual(tour, Tour((1, 2, 3, 4)))

    def test_two_cities(self):
        instance = TspInstance(2, np.array([[0, 5], [5, 0]]))
        self.assertEqual(tsp_exact_held_karp(instance)[0], 10)
        self.assertEqual(tsp_brute(instance)[0], 10)

    def test_three_cities(self):
        instance = random_instance(3, 3)
        self.assertEqual(tsp_exact_held_karp(instance), tsp_brute(instance))

    def test_one_city(self):
        instance = TspInstance(1, np.zeros((1, 1), dtype=np.int64))
        self.assertEqual(tsp_exact_held_karp(instance), (0, Tour((1,))))

    def test_agreement(self):
        for seed in range(20):
            instance = random_instance(seed, 4 + seed % 5)
            hk = tsp_exact_held_karp(instance)
            self.assertEqual(hk, tsp_brute(instance), seed)
            self.assertEqual(tour_length(instance, hk[1]), hk[0])

    def test_caps(self):
        with self.assertRaises(ValueError):
            tsp_brute(random_instance(0, 11))
        with self.assertRaises(ValueError):
            tsp_exact_held_karp(random_instance(0, 6), max_dimension=5)
        with self.assertRaises(BudgetExceeded):
            tsp_exact_held_karp(random_instance(0, 8), budget=100)


class TestDecideAnotherTour(unittest.TestCase):

    def test_unit_clause(self):
        art = build_artifact(CnfFormula.from_lists(1, [[1]]))
        result = decide_another_tour(art)
        self.assertEqual(result.verdict, Verdict.YES)
        self.assertEqual(tour_length(art.instance, result.witness), 39)
        self.assertTrue(evaluate(art.phi, tour_to_assignment(art, result.witness)))

    def test_contradiction(self):
        art = build_artifact(CnfFormula.from_lists(1, [[1], [-1]]))
        self.assertEqual(decide_another_tour(art).verdict, Verdict.NO)

    def test_zero_clauses(self):
        art = build_artifact(CnfFormula(1))
        self.assertEqual(decide_another_tour(art).verdict, Verdict.NO)

    def test_budget(self):
        art = build_artifact(CnfFormula.from_lists(3, [[1, 2], [-1, -2], [1, -2], [-1, 2]]))
        self.assertEqual(decide_another_tour(art, budget=5).verdict, Verdict.BUDGET_EXCEEDED)


if __name__ == '__main__':
    unittest.main()
