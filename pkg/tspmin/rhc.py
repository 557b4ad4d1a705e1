'''
Restricted Hamiltonian Cycle instances: G' without e_z, plus the Hamiltonian path
between the endpoints of e_z obtained by cutting the canonical tour there.

A Hamiltonian cycle of this graph must enter z's diamond through its false entry,
so it exists iff phi is satisfiable.
'''
import json
from dataclasses import dataclass

from .graphs import is_hamiltonian_path
from .json_encoder import NpEncoder
from .lowering import expand_cycle
from .oracles import OracleResult, Verdict, ham_cycle_search


@dataclass(frozen=True, eq=False)
class RhcInstance:
    '''
    graph : nx.Graph, the edges of G' with e_z removed.
    ham_path : tuple of node ids of G', from one endpoint of e_z to the other.
    endpoints : the two node ids of e_z, lower id first.
    labels : callable node id -> label, for serialization.
    '''
    graph: object
    ham_path: tuple
    endpoints: tuple
    labels: object = None


def build_rhc(art):
    '''
    RhcInstance for a ReductionArtifact.
    The path is the canonical tour cut at e_z, so it starts at (Row(z,0),1)
    and ends at (Top(z),3).
    '''
    gp = art.g_prime
    graph = gp.graph.copy()
    graph.remove_edge(*gp.ez_undirected)
    cycle = [art.instance.city_to_node(c) for c in art.canonical.cities]
    ez = set(gp.ez_undirected)
    for ii in range(len(cycle)):
        if {cycle[ii], cycle[(ii+1) % len(cycle)]} == ez:
            path = cycle[ii+1:] + cycle[:ii+1]
            break
    else:
        raise AssertionError("canonical tour does not use e_z")
    return RhcInstance(graph=graph, ham_path=tuple(path), endpoints=gp.ez_undirected, labels=gp.label)


def verify_ham_path(inst):
    '''
    True iff ham_path is a Hamiltonian path of graph whose ends are exactly the endpoints.
    '''
    path = list(inst.ham_path)
    if len(set(inst.endpoints)) != 2:
        return False
    if not is_hamiltonian_path(inst.graph, path):
        return False
    return {path[0], path[-1]} == set(inst.endpoints)


def rhc_cycle_search(art, inst, budget=None):
    '''
    Decide whether the RHC graph has a Hamiltonian cycle, through the directed search on G
    with e_z forbidden (the tripling preserves Hamiltonicity both ways).

    Returns
    -------
    OracleResult whose witness, on YES, is the cycle in node ids of the RHC graph.
    '''
    result = ham_cycle_search(art.g.graph, forbidden={art.g.ez_directed}, budget=budget)
    if result.verdict != Verdict.YES:
        return result
    cycle = expand_cycle(result.witness)
    assert all(inst.graph.has_edge(cycle[i], cycle[(i+1) % len(cycle)]) for i in range(len(cycle)))
    return OracleResult(Verdict.YES, cycle, result.explored)


def rhc_to_json(inst):
    '''
    {"nodes": [labels...], "edges": [[a, b], ...], "endpoints": [a, b]} with labels,
    nodes in id order, edges sorted by id.
    '''
    label = inst.labels or str
    edges = sorted(tuple(sorted(e)) for e in inst.graph.edges())
    document = {
        'nodes': [label(u) for u in sorted(inst.graph.nodes())],
        'edges': [[label(u), label(v)] for u, v in edges],
        'endpoints': [label(u) for u in inst.endpoints],
    }
    return json.dumps(document, cls=NpEncoder, indent=1) + '\n'


def emit_path(inst):
    '''One node label per line.'''
    label = inst.labels or str
    return ''.join(label(u) + '\n' for u in inst.ham_path)
