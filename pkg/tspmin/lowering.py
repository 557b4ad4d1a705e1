'''
Lower the directed graph G to the undirected graph G' by node tripling.

Every node u of G becomes the path u1 - u2 - u3; u1 takes the incoming edges of u,
u3 the outgoing ones, so a directed edge u -> v becomes the undirected edge {u3, v1}.
u2 has degree 2, which forces every Hamiltonian cycle of G' to pass each triple
in one piece and all triples in the same orientation.

Node ids of G' are 3*u + part - 1 for node u of G and part in {1, 2, 3}.
'''
from dataclasses import dataclass

import networkx as nx

from .exceptions import InternalInconsistency
from .graphs import is_hamiltonian_cycle, rotate_to, to_dot


@dataclass(frozen=True, order=True)
class TripledNode:
    base: int
    part: int

    def __post_init__(self):
        if self.part not in (1, 2, 3):
            raise ValueError("part must be 1, 2 or 3.")

    @property
    def node_id(self):
        return 3 * self.base + self.part - 1

    @classmethod
    def from_id(cls, node_id):
        return cls(node_id // 3, node_id % 3 + 1)


def triple_digraph(dg):
    '''
    Tripling of any directed graph.

    Parameters
    ----------
    dg : nx.DiGraph

    Returns
    -------
    nx.Graph on nodes (u, part), with 2|V| + |E| edges.
    '''
    G = nx.Graph()
    for u in dg.nodes():
        G.add_edge((u, 1), (u, 2))
        G.add_edge((u, 2), (u, 3))
    G.add_edges_from(((u, 3), (v, 1)) for u, v in dg.edges())
    return G


class TripledGraph:
    '''
    Undirected graph G' with integer node ids, linked back to its GadgetGraph.
    '''
    def __init__(self, g, graph):
        self.base = g
        self.graph = graph
        u, v = g.ez_directed
        self.ez_undirected = tuple(sorted((TripledNode(u, 3).node_id, TripledNode(v, 1).node_id)))

    @property
    def number_of_nodes(self):
        return self.graph.number_of_nodes()

    def tripled_node(self, node_id):
        return TripledNode.from_id(node_id)

    def back_map(self, node_id):
        '''Node of G that node_id of G' came from.'''
        return node_id // 3

    def label(self, node_id):
        t = TripledNode.from_id(node_id)
        return "%s.%d" %(self.base.label(t.base), t.part)

    def sorted_edges(self):
        '''Edges as (lower id, higher id), sorted.'''
        return sorted(tuple(sorted(e)) for e in self.graph.edges())

    def to_dot(self):
        return to_dot(self.graph, self.label, highlight=self.ez_undirected, name='G_prime')


def triple(g):
    '''
    Lower GadgetGraph g to TripledGraph G', tracking e_z.

    Returns
    -------
    TripledGraph with 3|V| nodes and 2|V| + |E| edges;
    ez_undirected is {(Top(z),3), (Row(z,0),1)}.
    '''
    tripled = triple_digraph(g.graph)
    mapping = {(u, part): TripledNode(u, part).node_id for (u, part) in tripled.nodes()}
    graph = nx.relabel_nodes(tripled, mapping)
    gp = TripledGraph(g, graph)
    assert graph.number_of_nodes() == 3 * g.number_of_nodes
    assert graph.number_of_edges() == 2 * g.number_of_nodes + g.graph.number_of_edges()
    assert graph.has_edge(*gp.ez_undirected)
    return gp


def expand_cycle(directed_cycle):
    '''
    Canonical undirected image of a directed cycle of G: u -> u1, u2, u3.
    '''
    return [3 * u + part for u in directed_cycle for part in (0, 1, 2)]


def collapse_cycle(gp, cycle):
    '''
    Collapse a Hamiltonian cycle of G' to the directed Hamiltonian cycle of G it encodes.

    The cycle is first normalized: rotated to start at (Top(x_1), 1), reflected if needed
    so that it proceeds toward part 2.

    Parameters
    ----------
    gp : TripledGraph
    cycle : list of node ids of G'.

    Returns
    -------
    list of node ids of G, starting at Top(x_1), read in the u1 -> u3 direction.

    Raises
    ------
    ValueError
        cycle is not a Hamiltonian cycle of G'.
    InternalInconsistency
        triples not consecutive, or orientations disagree.
    '''
    if not is_hamiltonian_cycle(gp.graph, cycle):
        raise ValueError("Not a Hamiltonian cycle of the tripled graph.")
    start = TripledNode(gp.base.top(gp.base.variable_order[0]), 1).node_id
    cycle = rotate_to(cycle, start)
    if cycle[1] != start + 1:
        cycle = [cycle[0]] + cycle[:0:-1]
    directed = []
    for ii in range(0, len(cycle), 3):
        triple_ids = cycle[ii:ii+3]
        u = triple_ids[0] // 3
        if triple_ids != [3*u, 3*u + 1, 3*u + 2]:
            raise InternalInconsistency("Triple of node %s is not traversed as u1, u2, u3 at position %d."
                                        %(gp.base.label(u), ii))
        directed.append(u)
    if not is_hamiltonian_cycle(gp.base.graph, directed):
        raise InternalInconsistency("Collapsed cycle is not a directed Hamiltonian cycle of G.")
    return directed
