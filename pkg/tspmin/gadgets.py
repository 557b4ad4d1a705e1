'''
Compile the augmented formula into the directed graph G of diamond gadgets and clause nodes.

Layout, per variable v of phi^z in the order x_1..x_n, z:

    Top(v) -> Row(v,0) <-> Row(v,1) <-> ... <-> Row(v,3m) -> Bottom(v)
    Top(v) -> Row(v,3m),  Row(v,0) -> Bottom(v)

Bottom of each diamond points to the next Top, the last Bottom (z) back to Top(x_1).
Clause j owns the contact pair a_j = Row(v,3j-2), b_j = Row(v,3j-1) in every diamond;
Row(v,3j) separates it from the next pair.
A positive occurrence of v in C_j adds a_j -> c_j -> b_j, a negative one b_j -> c_j -> a_j.

Entering a row through Row(v,0) (left to right) reads as v = true.
e_z is Top(z) -> Row(z,0), the entry edge of the true direction of z's diamond.

Hamiltonian cycles of G correspond to satisfying assignments of phi^z;
those avoiding e_z to satisfying assignments of phi.
'''
from dataclasses import dataclass

import networkx as nx

from .cnf import Assignment
from .exceptions import InternalInconsistency
from .graphs import is_hamiltonian_cycle, rotate_to, to_dot

TOP, ROW, BOTTOM, CLAUSE = 'top', 'row', 'bottom', 'clause'


@dataclass(frozen=True)
class NodeRole:
    '''
    Role of a node in G. index is the variable for top/row/bottom, the clause for clause nodes.
    position is the row position, 0 <= position <= 3m, for row nodes only.
    '''
    kind: str
    index: int
    position: int = None

    @property
    def label(self):
        if self.kind == ROW:
            return "%s[%d,%d]" %(self.kind, self.index, self.position)
        return "%s[%d]" %(self.kind, self.index)

    def __str__(self):
        return self.label


class GadgetGraph:
    '''
    Directed graph G with role-tagged nodes.

    Node ids are 0..|V|-1, numbered diamond by diamond in variable_order
    (Top, Row 0..3m, Bottom), then clause nodes by clause index.
    The networkx DiGraph is in self.graph, each node carrying its NodeRole as attribute 'role'.
    '''
    def __init__(self, aug):
        '''
        Parameters
        ----------
        aug : AugmentedFormula
            phi and phi^z; the graph is built over phi^z.
        '''
        self.aug = aug
        self.formula = aug.augmented
        self.num_clauses = self.formula.num_clauses
        self.variable_order = tuple(range(1, self.formula.num_variables + 1))
        self.dummy_variable = aug.dummy_variable
        self.row_length = 3 * self.num_clauses + 1

        roles = []
        for v in self.variable_order:
            roles.append(NodeRole(TOP, v))
            roles += [NodeRole(ROW, v, p) for p in range(self.row_length)]
            roles.append(NodeRole(BOTTOM, v))
        roles += [NodeRole(CLAUSE, j) for j in range(1, self.num_clauses + 1)]
        self.roles = tuple(roles)
        self.role_index = {role: ii for ii, role in enumerate(self.roles)}
        assert len(self.role_index) == len(self.roles), "node roles must be unique"

        self.graph = nx.DiGraph()
        self.graph.add_nodes_from((ii, {'role': role}) for ii, role in enumerate(self.roles))
        self.ez_directed = (self.top(self.dummy_variable), self.row(self.dummy_variable, 0))

    @property
    def number_of_nodes(self):
        return len(self.roles)

    def node(self, role):
        return self.role_index[role]

    def top(self, v):
        return self.role_index[NodeRole(TOP, v)]

    def bottom(self, v):
        return self.role_index[NodeRole(BOTTOM, v)]

    def row(self, v, position):
        return self.role_index[NodeRole(ROW, v, position)]

    def clause_node(self, j):
        return self.role_index[NodeRole(CLAUSE, j)]

    def contacts(self, v, j):
        '''(a_j, b_j), the contact pair of clause j in the diamond of v.'''
        return self.row(v, 3*j - 2), self.row(v, 3*j - 1)

    def label(self, node):
        return self.roles[node].label

    def entry_edges(self, v):
        '''(true entry, false entry) of the diamond of v; the same edge when m = 0.'''
        return (self.top(v), self.row(v, 0)), (self.top(v), self.row(v, self.row_length - 1))

    def to_dot(self):
        return to_dot(self.graph, self.label, highlight=self.ez_directed, name='G',
                      boxed=[self.clause_node(j) for j in range(1, self.num_clauses + 1)])


def build_gadget_graph(aug):
    '''
    Build the directed graph G for phi^z.

    Parameters
    ----------
    aug : AugmentedFormula

    Returns
    -------
    GadgetGraph with (n+1)(3m+3) + m nodes.
    '''
    g = GadgetGraph(aug)
    G = g.graph
    last = g.row_length - 1
    order = g.variable_order
    for k, v in enumerate(order):
        top, bottom = g.top(v), g.bottom(v)
        G.add_edge(top, g.row(v, 0))
        G.add_edge(top, g.row(v, last))
        G.add_edge(g.row(v, 0), bottom)
        G.add_edge(g.row(v, last), bottom)
        for p in range(last):
            G.add_edge(g.row(v, p), g.row(v, p+1))
            G.add_edge(g.row(v, p+1), g.row(v, p))
        G.add_edge(bottom, g.top(order[(k+1) % len(order)]))

    for j, clause in enumerate(g.formula.clauses, 1):
        c = g.clause_node(j)
        for lit in clause:
            a, b = g.contacts(lit.variable, j)
            if lit.positive:
                G.add_edge(a, c)
                G.add_edge(c, b)
            else:
                G.add_edge(b, c)
                G.add_edge(c, a)

    assert G.has_edge(*g.ez_directed)
    assert nx.number_of_selfloops(G) == 0
    return g


def traverse_diamonds(g, values, detours):
    '''
    The directed Hamiltonian cycle of G that traverses each diamond in the direction of
    its variable and visits every clause node from the diamond chosen for it.

    Parameters
    ----------
    g : GadgetGraph
    values : Assignment
        over the variables of phi^z.
    detours : dict
        clause index j -> variable whose diamond absorbs c_j. The variable must occur in C_j
        with the polarity its value makes true.

    Returns
    -------
    list of node ids starting at the Top of the first variable.
    '''
    if values.num_variables != len(g.variable_order):
        raise ValueError("Assignment over %d variables, graph has %d diamonds."
                         %(values.num_variables, len(g.variable_order)))
    if set(detours) != set(range(1, g.num_clauses + 1)):
        raise ValueError("Every clause needs exactly one detour.")
    by_variable = {}
    for j, v in detours.items():
        if not g.formula.clauses[j-1].occurs(v, values[v]):
            raise ValueError("Clause %d cannot detour through variable %d set to %s." %(j, v, values[v]))
        by_variable.setdefault(v, set()).add(j)

    cycle = []
    last = g.row_length - 1
    for v in g.variable_order:
        cycle.append(g.top(v))
        absorbed = by_variable.get(v, set())
        if values[v]:
            for p in range(last + 1):
                cycle.append(g.row(v, p))
                if p % 3 == 1 and (p + 2) // 3 in absorbed:
                    cycle.append(g.clause_node((p + 2) // 3))
        else:
            for p in range(last, -1, -1):
                cycle.append(g.row(v, p))
                if p % 3 == 2 and (p + 1) // 3 in absorbed:
                    cycle.append(g.clause_node((p + 1) // 3))
        cycle.append(g.bottom(v))
    return cycle


def ham_cycle_orientation(g, cycle):
    '''
    Read the assignment of phi^z encoded by a directed Hamiltonian cycle of G.

    Parameters
    ----------
    g : GadgetGraph
    cycle : list of node ids, any rotation.

    Returns
    -------
    Assignment over the variables of phi^z: v is true iff the cycle leaves Top(v)
    through Row(v,0). With m = 0 the single row node reads as true.

    Raises
    ------
    ValueError
        cycle is not a Hamiltonian cycle of G.
    InternalInconsistency
        a diamond entered through neither entry edge.
    '''
    if not is_hamiltonian_cycle(g.graph, cycle):
        raise ValueError("Not a directed Hamiltonian cycle of the gadget graph.")
    cycle = list(cycle)
    successor = {cycle[i]: cycle[(i+1) % len(cycle)] for i in range(len(cycle))}
    values = []
    for v in g.variable_order:
        true_edge, false_edge = g.entry_edges(v)
        nxt = successor[g.top(v)]
        if nxt == true_edge[1]:
            values.append(True)
        elif nxt == false_edge[1]:
            values.append(False)
        else:
            raise InternalInconsistency("Diamond of variable %d entered through neither entry edge." %v)
    return Assignment(tuple(values))


def normalize_cycle(g, cycle):
    '''Rotate a directed cycle of G to start at the Top of the first variable.'''
    return rotate_to(cycle, g.top(g.variable_order[0]))
