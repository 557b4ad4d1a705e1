'''
TSP backend: weighted complete instance from G', the canonical tour T,
tour lengths, TSPLIB and tour file formats.

Weights: 1 on the edges of G', 2 on e_z, 3 on every non-edge.
A Hamiltonian tour therefore costs |V'| when it uses only G' edges other than e_z,
|V'|+1 when it also uses e_z, and at least |V'|+2 once it uses a non-edge.
'''
from dataclasses import dataclass, field

import numpy as np
import tsplib95

from .cnf import Assignment
from .exceptions import TourFormatError, TsplibError
from .gadgets import traverse_diamonds
from .lowering import expand_cycle

EDGE_WEIGHT, EZ_WEIGHT, NONEDGE_WEIGHT = 1, 2, 3


@dataclass(frozen=True)
class Tour:
    '''
    Cyclic sequence of 1-based city ids; the closing edge is implied.
    '''
    cities: tuple

    def __post_init__(self):
        object.__setattr__(self, 'cities', tuple(int(c) for c in self.cities))

    def __len__(self):
        return len(self.cities)

    def is_permutation(self, dimension):
        return len(self.cities) == dimension and set(self.cities) == set(range(1, dimension + 1))


@dataclass(frozen=True, eq=False)
class TspInstance:
    '''
    Complete symmetric instance.

    distances is a dimension x dimension integer numpy array, zero diagonal;
    city i corresponds to node i-1 of G'. ez_cities, baseline_length and source are
    set by build_instance and absent (None) on instances read from TSPLIB.
    '''
    dimension: int
    distances: np.ndarray
    ez_cities: tuple = None
    baseline_length: int = None
    source: object = field(default=None, repr=False)

    def __post_init__(self):
        D = self.distances
        assert D.shape == (self.dimension, self.dimension), "distance matrix must be dimension x dimension"
        assert np.array_equal(D, D.T), "distances must be symmetric"
        assert not np.diagonal(D).any(), "diagonal must be zero"

    def city_to_node(self, city):
        return city - 1

    def node_to_city(self, node_id):
        return node_id + 1

    @property
    def city_map(self):
        '''city id -> label of its tripled node, when built from a TripledGraph.'''
        if self.source is None:
            return None
        return {c: self.source.label(self.city_to_node(c)) for c in range(1, self.dimension + 1)}

    def weight(self, a, b):
        return int(self.distances[a-1, b-1])


def build_instance(gp):
    '''
    Weighted complete instance from TripledGraph gp.

    Returns
    -------
    TspInstance with d = 1 on edges of G' except e_z, d = 2 on e_z, d = 3 elsewhere,
    baseline_length |V'|+1.
    '''
    dimension = gp.number_of_nodes
    D = np.full((dimension, dimension), NONEDGE_WEIGHT, dtype=np.int64)
    np.fill_diagonal(D, 0)
    edges = np.array(gp.sorted_edges(), dtype=np.int64).reshape(-1, 2)
    D[edges[:, 0], edges[:, 1]] = EDGE_WEIGHT
    D[edges[:, 1], edges[:, 0]] = EDGE_WEIGHT
    a, b = gp.ez_undirected
    D[a, b] = D[b, a] = EZ_WEIGHT
    return TspInstance(
        dimension=dimension,
        distances=D,
        ez_cities=(a + 1, b + 1),
        baseline_length=dimension + 1,
        source=gp,
    )


def canonical_tour(instance):
    '''
    The tour T: every diamond left to right (all variables true),
    every clause node absorbed by z's diamond, in clause order.

    Raises
    ------
    ValueError
        instance carries no gadget metadata (e.g. read from TSPLIB).
    '''
    gp = instance.source
    if gp is None:
        raise ValueError("canonical_tour needs an instance produced by build_instance.")
    g = gp.base
    values = Assignment.all_true(len(g.variable_order))
    detours = {j: g.dummy_variable for j in range(1, g.num_clauses + 1)}
    directed = traverse_diamonds(g, values, detours)
    return Tour(tuple(instance.node_to_city(u) for u in expand_cycle(directed)))


def tour_length(instance, tour):
    '''
    Sum of distances over consecutive cities, closing edge included.

    Raises
    ------
    ValueError
        tour is not a permutation of the instance's cities.
    '''
    if not tour.is_permutation(instance.dimension):
        raise ValueError("Tour is not a permutation of cities 1..%d." %instance.dimension)
    cities = np.array(tour.cities, dtype=np.int64) - 1
    return int(instance.distances[cities, np.roll(cities, -1)].sum())


# -----------------------------------------------------------------------------
# TSPLIB
# -----------------------------------------------------------------------------

def emit_tsplib(instance, name='tspmin'):
    '''
    TSPLIB text, EXPLICIT weights in FULL_MATRIX format.
    The COMMENT records the e_z city pair and the baseline |V'|+1 when known.
    '''
    s = "NAME: %s\n" %name
    s += "TYPE: TSP\n"
    if instance.ez_cities is not None:
        s += "COMMENT: e_z cities %d %d; baseline %d\n" %(
            instance.ez_cities[0], instance.ez_cities[1], instance.baseline_length)
    s += "DIMENSION: %d\n" %instance.dimension
    s += "EDGE_WEIGHT_TYPE: EXPLICIT\n"
    s += "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
    s += "EDGE_WEIGHT_SECTION\n"
    for row in instance.distances:
        s += ' '.join([str(int(x)) for x in row]) + '\n'
    s += "EOF\n"
    return s


def parse_tsplib(text):
    '''
    Read TSPLIB text into a TspInstance carrying matrix and dimension only.

    Raises
    ------
    TsplibError
        malformed text, or a variant other than TYPE TSP, EDGE_WEIGHT_TYPE EXPLICIT,
        EDGE_WEIGHT_FORMAT FULL_MATRIX.
    '''
    try:
        problem = tsplib95.parse(text)
    except Exception as err:
        raise TsplibError("Cannot parse TSPLIB text: %s" %err) from err

    if problem.type != 'TSP':
        raise TsplibError("Unsupported TYPE %r, only TSP." %problem.type)
    if problem.edge_weight_type != 'EXPLICIT':
        raise TsplibError("Unsupported EDGE_WEIGHT_TYPE %r, only EXPLICIT." %problem.edge_weight_type)
    if problem.edge_weight_format != 'FULL_MATRIX':
        raise TsplibError("Unsupported EDGE_WEIGHT_FORMAT %r, only FULL_MATRIX." %problem.edge_weight_format)
    dimension = problem.dimension
    if not dimension:
        raise TsplibError("Missing DIMENSION.")

    rows = problem.edge_weights or []
    weights = np.hstack([np.ravel(row) for row in rows]) if rows else np.array([])
    if weights.size != dimension * dimension:
        raise TsplibError("EDGE_WEIGHT_SECTION holds %d values, expecting %d." %(weights.size, dimension * dimension))
    D = weights.astype(np.int64).reshape(dimension, dimension)
    if not np.array_equal(D, D.T) or np.diagonal(D).any():
        raise TsplibError("Matrix must be symmetric with zero diagonal.")
    return TspInstance(dimension=dimension, distances=D)


def read_tsplib(path):
    with open(path) as f:
        return parse_tsplib(f.read())


# -----------------------------------------------------------------------------
# tour files
# -----------------------------------------------------------------------------

def emit_tour(tour):
    '''One 1-based city id per line, terminated by -1.'''
    return ''.join("%d\n" %c for c in tour.cities) + "-1\n"


def parse_tour(text):
    '''
    Read a tour file: city ids one per line (or whitespace separated), up to -1 or EOF.
    Header lines of a TSPLIB .tour file, up to TOUR_SECTION, are skipped.

    Raises
    ------
    TourFormatError
        a token that is not an integer, or a city id below 1.
    '''
    lines = text.splitlines()
    for ii, line in enumerate(lines):
        if line.strip() == 'TOUR_SECTION':
            lines = lines[ii+1:]
            break
    cities = []
    for line_number, line in enumerate(lines, 1):
        if line.strip() == 'EOF':
            break
        for word in line.split():
            try:
                city = int(word)
            except ValueError:
                raise TourFormatError("line %d: not a city id: %r" %(line_number, word))
            if city == -1:
                return Tour(tuple(cities))
            if city < 1:
                raise TourFormatError("line %d: city ids start at 1, got %d" %(line_number, city))
            cities.append(city)
    return Tour(tuple(cities))


def read_tour(path):
    with open(path) as f:
        return parse_tour(f.read())
