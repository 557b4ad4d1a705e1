import unittest

import networkx as nx

from tspmin.graphs import is_hamiltonian_cycle, is_hamiltonian_path, random_digraph, rotate_to, to_dot

class TestGraphs(unittest.TestCase):

    def test_hamiltonian_cycle(self):
        G = nx.DiGraph([(0, 1), (1, 2), (2, 0)])
        self.assertTrue(is_hamiltonian_cycle(G, [1, 2, 0]))
        self.assertFalse(is_hamiltonian_cycle(G, [0, 2, 1]))
        self.assertFalse(is_hamiltonian_cycle(G, [0, 1]))
        self.assertFalse(is_hamiltonian_cycle(nx.Graph([(0, 1)]), [0, 1]))

    def test_hamiltonian_path(self):
        G = nx.path_graph(4)
        self.assertTrue(is_hamiltonian_path(G, [3, 2, 1, 0]))
        self.assertFalse(is_hamiltonian_path(G, [0, 2, 1, 3]))
        self.assertFalse(is_hamiltonian_path(G, [0, 1, 2]))

    def test_rotate_to(self):
        self.assertEqual(rotate_to([4, 5, 6, 7], 6), [6, 7, 4, 5])

    def test_dot(self):
        G = nx.Graph([(2, 1), (1, 0)])
        dot = to_dot(G, lambda u: "n%d" %u, highlight=(1, 0), name='H')
        self.assertEqual(dot, 'graph H {\n    0 [label="n0"];\n    1 [label="n1"];\n    2 [label="n2"];\n'
                              '    0 -- 1 [color=red, penwidth=3];\n    1 -- 2;\n}\n')

    def test_random_digraph(self):
        G = random_digraph(6, 0.5, seed=3)
        self.assertTrue(G.is_directed())
        self.assertEqual(sorted(G.nodes()), list(range(6)))
        self.assertEqual(nx.number_of_selfloops(G), 0)
        self.assertEqual(sorted(G.edges()), sorted(random_digraph(6, 0.5, seed=3).edges()))

if __name__ == '__main__':
    unittest.main()
