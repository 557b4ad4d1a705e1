'''
Certificate translation between the two sides of the reduction:
a satisfying assignment of phi gives a tour of length |V'|,
a tour shorter than |V'|+1 gives a satisfying assignment of phi.

A ReductionArtifact bundles all stages built from one formula.
'''
from dataclasses import dataclass

from .cnf import Assignment, augment_with_dummy, evaluate
from .exceptions import CertificateError, InternalInconsistency
from .gadgets import build_gadget_graph, ham_cycle_orientation, traverse_diamonds
from .lowering import collapse_cycle, expand_cycle, triple
from .tsp import EZ_WEIGHT, NONEDGE_WEIGHT, Tour, build_instance, canonical_tour, tour_length


@dataclass(frozen=True, eq=False)
class ReductionArtifact:
    '''
    phi -> phi^z -> G -> G' -> TSP instance, and the canonical tour T.
    '''
    phi: object
    aug: object
    g: object
    g_prime: object
    instance: object
    canonical: Tour

    @property
    def dimension(self):
        return self.instance.dimension

    @property
    def baseline_length(self):
        return self.instance.baseline_length


@dataclass(frozen=True)
class TourReport:
    valid: bool
    length: int
    uses_ez: bool
    uses_nonedge: bool


def build_artifact(phi):
    '''
    Run the full reduction on phi.

    Parameters
    ----------
    phi : CnfFormula

    Returns
    -------
    ReductionArtifact whose stages share the canonical numbering.
    '''
    aug = augment_with_dummy(phi)
    g = build_gadget_graph(aug)
    gp = triple(g)
    instance = build_instance(gp)
    return ReductionArtifact(phi=phi, aug=aug, g=g, g_prime=gp, instance=instance,
                             canonical=canonical_tour(instance))


def clause_detours(g, values):
    '''
    For each clause, the smallest variable whose value satisfies it through an
    occurrence of matching polarity.
    '''
    detours = {}
    for j, clause in enumerate(g.formula.clauses, 1):
        candidates = [lit.variable for lit in clause if lit.is_true(values[lit.variable])]
        if not candidates:
            raise CertificateError("assignment does not satisfy clause %d" %j)
        detours[j] = min(candidates)
    return detours


def assignment_to_cycle(g, values):
    '''
    Directed Hamiltonian cycle of G for a satisfying assignment of phi^z.

    Parameters
    ----------
    g : GadgetGraph
    values : Assignment over the variables of phi^z.
    '''
    return traverse_diamonds(g, values, clause_detours(g, values))


def cycle_to_tour(art, directed_cycle):
    return Tour(tuple(art.instance.node_to_city(u) for u in expand_cycle(directed_cycle)))


def assignment_to_tour(art, a):
    '''
    Tour of length |V'| from a satisfying assignment of phi:
    diamonds follow a, z's diamond is traversed right to left, each clause node is
    absorbed by the smallest variable satisfying its clause.

    Raises
    ------
    ValueError
        a does not cover exactly the variables of phi.
    CertificateError
        a does not satisfy phi, or phi has no clauses (every tour then uses e_z).
    '''
    if a.num_variables != art.phi.num_variables:
        raise ValueError("assignment covers %d variables, formula has %d"
                         %(a.num_variables, art.phi.num_variables))
    if not evaluate(art.phi, a):
        raise CertificateError("assignment does not satisfy formula")
    if art.phi.num_clauses == 0:
        raise CertificateError("formula has no clauses: its diamonds have a single traversal, "
                               "every tour uses e_z and no tour shorter than the baseline exists")
    tour = cycle_to_tour(art, assignment_to_cycle(art.g, a.extend(False)))
    assert tour_length(art.instance, tour) == art.dimension
    return tour


def tour_to_assignment(art, tour):
    '''
    Satisfying assignment of phi from a tour shorter than |V'|+1.
    Any rotation or reflection of the tour is accepted.

    Raises
    ------
    CertificateError
        tour is not a permutation, or not shorter than the baseline.
    InternalInconsistency
        the tour does not collapse to a directed cycle, or reads z = true,
        or its assignment fails phi.
    '''
    if not tour.is_permutation(art.dimension):
        raise CertificateError("tour is not a permutation of cities 1..%d" %art.dimension)
    length = tour_length(art.instance, tour)
    if length >= art.baseline_length:
        raise CertificateError("precondition violated: tour length %d is not below baseline %d"
                               %(length, art.baseline_length))
    nodes = [art.instance.city_to_node(c) for c in tour.cities]
    try:
        directed = collapse_cycle(art.g_prime, nodes)
    except ValueError as err:
        raise InternalInconsistency("short tour does not follow G': %s" %err) from err
    values = ham_cycle_orientation(art.g, directed)
    if values[art.aug.dummy_variable]:
        raise InternalInconsistency("short tour reads z = true")
    a = values.restrict(art.phi.num_variables)
    if not evaluate(art.phi, a):
        raise InternalInconsistency("assignment read from a short tour does not satisfy phi")
    return a


def verify_tour(instance, tour):
    '''
    Check a tour against an instance; total.

    Returns
    -------
    TourReport. An invalid tour (not a permutation) reports length 0 and no edge flags.
    uses_ez and uses_nonedge are read from the stored weights (d = 2, d = 3).
    '''
    if not tour.is_permutation(instance.dimension):
        return TourReport(valid=False, length=0, uses_ez=False, uses_nonedge=False)
    cities = list(tour.cities)
    weights = [instance.weight(cities[i], cities[(i+1) % len(cities)]) for i in range(len(cities))]
    return TourReport(
        valid=True,
        length=tour_length(instance, tour),
        uses_ez=EZ_WEIGHT in weights,
        uses_nonedge=NONEDGE_WEIGHT in weights,
    )


def all_satisfying_assignments(phi):
    '''Every satisfying assignment of phi, in binary counting order (x1 least significant).'''
    n = phi.num_variables
    for k in range(2 ** n):
        a = Assignment(tuple((k >> i) & 1 for i in range(n)))
        if evaluate(phi, a):
            yield a
