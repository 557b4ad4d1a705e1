'''
Small helpers shared by the graph stages: Hamiltonian cycle and path checks, DOT text.
Graphs are networkx Graph or DiGraph instances.
'''
import networkx as nx


def is_hamiltonian_cycle(graph, cycle):
    '''
    True iff cycle lists every node of graph exactly once and every consecutive pair,
    including the closing pair, is an edge. Undirected cycles need at least 3 nodes.

    Parameters
    ----------
    graph : nx.Graph or nx.DiGraph
    cycle : sequence of nodes, the closing edge implied.
    '''
    cycle = list(cycle)
    if not cycle or len(cycle) != graph.number_of_nodes() or len(set(cycle)) != len(cycle):
        return False
    if any(u not in graph for u in cycle):
        return False
    if not graph.is_directed() and len(cycle) < 3:
        return False
    return all(graph.has_edge(cycle[i], cycle[(i+1) % len(cycle)]) for i in range(len(cycle)))

def is_hamiltonian_path(graph, path):
    path = list(path)
    if not path or len(path) != graph.number_of_nodes() or len(set(path)) != len(path):
        return False
    if any(u not in graph for u in path):
        return False
    return all(graph.has_edge(path[i], path[i+1]) for i in range(len(path) - 1))

def rotate_to(cycle, start):
    '''Rotation of cycle beginning at start.'''
    cycle = list(cycle)
    ii = cycle.index(start)
    return cycle[ii:] + cycle[:ii]

def to_dot(graph, labels, highlight=None, name='G', boxed=()):
    '''
    Graphviz DOT text of graph.

    Parameters
    ----------
    graph : nx.Graph or nx.DiGraph
        nodes are written in sorted order, edges sorted, for byte-stable output.
    labels : callable
        node -> label string.
    highlight : tuple, optional
        one edge drawn bold red.
    name : str
        graph name.
    boxed : iterable
        nodes drawn as boxes.
    '''
    directed = graph.is_directed()
    connector = "->" if directed else "--"
    boxed = set(boxed)
    if highlight is not None and not directed:
        highlight = frozenset(highlight)
    lines = ['digraph %s {' %name if directed else 'graph %s {' %name]
    for node in sorted(graph.nodes()):
        shape = ', shape=box' if node in boxed else ''
        lines.append('    %s [label="%s"%s];' %(node, labels(node), shape))
    edges = [(u, v) if directed else tuple(sorted((u, v))) for u, v in graph.edges()]
    for u, v in sorted(edges):
        key = (u, v) if directed else frozenset((u, v))
        style = ' [color=red, penwidth=3]' if key == highlight else ''
        lines.append('    %s %s %s%s;' %(u, connector, v, style))
    lines.append('}')
    return '\n'.join(lines) + '\n'

def random_digraph(number_of_nodes, probability, seed):
    '''Random directed graph without self-loops, nodes 0..number_of_nodes-1.'''
    return nx.gnp_random_graph(number_of_nodes, probability, seed=seed, directed=True)
