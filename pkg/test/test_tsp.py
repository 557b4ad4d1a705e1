import itertools
import os
import tempfile
import unittest

import numpy as np

from tspmin.certificates import build_artifact, verify_tour
from tspmin.cnf import CnfFormula
from tspmin.exceptions import TourFormatError, TsplibError
from tspmin.tsp import (EZ_WEIGHT, NONEDGE_WEIGHT, Tour, TspInstance, canonical_tour,
                        emit_tour, emit_tsplib, parse_tour, parse_tsplib, read_tour, tour_length)

from corpus import corpus


def unit_x1():
    return build_artifact(CnfFormula.from_lists(1, [[1]]))


class TestInstance(unittest.TestCase):

    def test_unit_clause_instance(self):
        art = unit_x1()
        D = art.instance.distances
        self.assertEqual(art.instance.dimension, 39)
        self.assertEqual(art.baseline_length, 40)
        self.assertEqual(int((np.triu(D) == EZ_WEIGHT).sum()), 1)
        a, b = art.instance.ez_cities
        self.assertEqual(art.instance.weight(a, b), EZ_WEIGHT)

    def test_weight_counts(self):
        for name, phi in corpus()[:10]:
            art = build_artifact(phi)
            D = art.instance.distances
            upper = D[np.triu_indices(art.dimension, k=1)]
            num_edges = art.g_prime.graph.number_of_edges()
            self.assertEqual(int((upper == 1).sum()), num_edges - 1, name)
            self.assertEqual(int((upper == NONEDGE_WEIGHT).sum()),
                             art.dimension * (art.dimension - 1) // 2 - num_edges, name)

    def test_two_city_instance(self):
        instance = TspInstance(2, np.array([[0, 5], [5, 0]]))
        self.assertEqual(tour_length(instance, Tour((1, 2))), 10)
        self.assertIsNone(instance.city_map)

    def test_instance_rejects_asymmetric(self):
        with self.assertRaises(AssertionError):
            TspInstance(2, np.array([[0, 1], [2, 0]]))

    def test_city_map(self):
        art = unit_x1()
        self.assertEqual(art.instance.city_map[1], "top[1].1")
        self.assertEqual(art.instance.city_map[39], "clause[1].3")


class TestTours(unittest.TestCase):

    def test_canonical_length(self):
        self.assertEqual(tour_length(unit_x1().instance, unit_x1().canonical), 40)
        art = build_artifact(CnfFormula(1))
        self.assertEqual(art.dimension, 18)
        self.assertEqual(tour_length(art.instance, art.canonical), 19)

    def test_canonical_needs_source(self):
        instance = TspInstance(3, np.ones((3, 3), dtype=np.int64) - np.eye(3, dtype=np.int64))
        with self.assertRaises(ValueError):
            canonical_tour(instance)

    def test_unit_weights(self):
        k = 6
        instance = TspInstance(k, np.ones((k, k), dtype=np.int64) - np.eye(k, dtype=np.int64))
        self.assertEqual(tour_length(instance, Tour((3, 1, 2, 6, 5, 4))), k)

    def test_length_trichotomy(self):
        # every tour of the smallest reduced instance, city 1 fixed
        art = build_artifact(CnfFormula(0))
        n = art.dimension
        self.assertEqual(n, 9)
        lengths = set()
        for rest in itertools.permutations(range(2, n + 1)):
            report = verify_tour(art.instance, Tour((1,) + rest))
            lengths.add(report.length)
            if report.uses_nonedge:
                self.assertGreaterEqual(report.length, n + 2)
            elif report.uses_ez:
                self.assertEqual(report.length, n + 1)
            else:
                self.assertEqual(report.length, n)
            self.assertEqual(report.length == n, not report.uses_ez and not report.uses_nonedge)
            self.assertEqual(report.length == n + 1, report.uses_ez and not report.uses_nonedge)
        self.assertIn(n + 1, lengths)

    def test_identity_permutation_straight_sum(self):
        art = unit_x1()
        D = art.instance.distances
        n = art.dimension
        expected = sum(int(D[i, (i + 1) % n]) for i in range(n))
        self.assertEqual(tour_length(art.instance, Tour(tuple(range(1, n + 1)))), expected)

    def test_not_a_permutation(self):
        art = unit_x1()
        with self.assertRaises(ValueError):
            tour_length(art.instance, Tour((1, 1, 2)))

    def test_tour_codec(self):
        tour = Tour((2, 3, 1))
        self.assertEqual(emit_tour(tour), "2\n3\n1\n-1\n")
        self.assertEqual(parse_tour(emit_tour(tour)), tour)
        self.assertEqual(parse_tour("2 3\n1\n"), tour)

    def test_tsplib_tour_file(self):
        text = "NAME : x.tour\nTYPE : TOUR\nDIMENSION : 3\nTOUR_SECTION\n2\n3\n1\n-1\nEOF\n"
        self.assertEqual(parse_tour(text), Tour((2, 3, 1)))

    def test_tour_errors(self):
        with self.assertRaises(TourFormatError):
            parse_tour("1\nx\n-1\n")
        with self.assertRaises(TourFormatError):
            parse_tour("1\n0\n-1\n")

    def test_read_tour(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, 'a.tour')
            with open(path, 'w') as O:
                O.write(emit_tour(unit_x1().canonical))
            self.assertEqual(read_tour(path), unit_x1().canonical)


class TestTsplib(unittest.TestCase):

    def test_emit_header(self):
        text = emit_tsplib(unit_x1().instance)
        lines = text.splitlines()
        self.assertIn("DIMENSION: 39", lines)
        self.assertIn("EDGE_WEIGHT_FORMAT: FULL_MATRIX", lines)
        self.assertIn("COMMENT: e_z cities %d %d; baseline 40" %unit_x1().instance.ez_cities, lines)
        start = lines.index("EDGE_WEIGHT_SECTION")
        self.assertEqual(lines[start+1:], [' '.join(str(int(x)) for x in row)
                                           for row in unit_x1().instance.distances] + ["EOF"])

    def test_round_trip(self):
        for name, phi in corpus()[:12]:
            instance = build_artifact(phi).instance
            parsed = parse_tsplib(emit_tsplib(instance))
            self.assertEqual(parsed.dimension, instance.dimension, name)
            self.assertTrue(np.array_equal(parsed.distances, instance.distances), name)
            self.assertIsNone(parsed.ez_cities)

    def test_byte_stable(self):
        self.assertEqual(emit_tsplib(unit_x1().instance), emit_tsplib(unit_x1().instance))

    def test_rejects_euclidean(self):
        text = ("NAME: e\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\n"
                "NODE_COORD_SECTION\n1 0 0\n2 1 0\n3 0 1\nEOF\n")
        with self.assertRaises(TsplibError):
            parse_tsplib(text)

    def test_rejects_short_matrix(self):
        text = ("NAME: s\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\n"
                "EDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n0 1 1\n1 0 1\nEOF\n")
        with self.assertRaises(TsplibError):
            parse_tsplib(text)


if __name__ == '__main__':
    unittest.main()
