'''
Independent brute-force deciders used to check the reduction at desk scale:
exhaustive SAT, backtracking Hamiltonian cycle search, exact TSP by Held-Karp and by
permutation scan, and the end-to-end TSPAnotherTour decider.

Every search is deterministic and bounded by an OracleBudget; running out of budget
is reported as Verdict.BUDGET_EXCEEDED, never as a yes or no.
'''
import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .cnf import Assignment, evaluate
from .default_parameters import PARAMETERS
from .exceptions import BudgetExceeded
from .tsp import Tour, tour_length


class Verdict(Enum):
    YES = 'yes'
    NO = 'no'
    BUDGET_EXCEEDED = 'budget-exceeded'


@dataclass(frozen=True)
class OracleBudget:
    max_nodes_explored: int

    def __post_init__(self):
        if self.max_nodes_explored < 1:
            raise ValueError("max_nodes_explored must be positive.")


@dataclass(frozen=True)
class OracleResult:
    '''
    verdict, the witness found on YES (assignment, cycle or tour), and the number
    of search nodes explored.
    '''
    verdict: Verdict
    witness: object = None
    explored: int = 0


def as_budget(budget):
    '''OracleBudget from an OracleBudget, an int, or None (the default budget parameter).'''
    if budget is None:
        return OracleBudget(PARAMETERS['budget'])
    if isinstance(budget, OracleBudget):
        return budget
    return OracleBudget(int(budget))


class _OutOfBudget(Exception):
    pass


# -----------------------------------------------------------------------------
# SAT
# -----------------------------------------------------------------------------

def sat_brute(phi, budget=None):
    '''
    Enumerate assignments in binary counting order, x1 least significant and false = 0.

    Returns
    -------
    OracleResult: YES with the first satisfying Assignment, NO after full enumeration,
    or BUDGET_EXCEEDED when more than max_nodes_explored assignments would be needed.
    '''
    budget = as_budget(budget)
    n = phi.num_variables
    explored = 0
    for k in range(2 ** n):
        if explored >= budget.max_nodes_explored:
            return OracleResult(Verdict.BUDGET_EXCEEDED, None, explored)
        explored += 1
        a = Assignment(tuple((k >> i) & 1 for i in range(n)))
        if evaluate(phi, a):
            return OracleResult(Verdict.YES, a, explored)
    return OracleResult(Verdict.NO, None, explored)


# -----------------------------------------------------------------------------
# Hamiltonian cycle
# -----------------------------------------------------------------------------

def ham_cycle_search(graph, forbidden=(), budget=None):
    '''
    Exhaustive backtracking search for a Hamiltonian cycle.

    The search starts at the lowest node id and tries neighbors in id order, so the
    first cycle found is deterministic. A branch is cut as soon as some unvisited node
    has lost every possible predecessor or successor.

    Parameters
    ----------
    graph : nx.DiGraph or nx.Graph
        undirected graphs are searched through both orientations of every edge.
    forbidden : set of edges
        never used; for undirected graphs either orientation matches.
    budget : OracleBudget, int or None

    Returns
    -------
    OracleResult with the cycle (list of nodes from the lowest id) on YES.
    '''
    budget = as_budget(budget)
    directed = graph.is_directed()
    forbidden = set(forbidden)
    if not directed:
        forbidden |= {(v, u) for u, v in forbidden}
    nodes = sorted(graph.nodes())
    n = len(nodes)
    if n == 0 or (not directed and n < 3):
        return OracleResult(Verdict.NO, None, 0)
    arcs = graph if directed else graph.to_directed()
    succ = {u: [v for v in sorted(arcs.successors(u)) if (u, v) not in forbidden] for u in nodes}
    if n == 1:
        u = nodes[0]
        return OracleResult(Verdict.YES, [u], 1) if u in succ[u] else OracleResult(Verdict.NO, None, 1)
    for u in nodes:
        succ[u] = [v for v in succ[u] if v != u]
    pred = {u: [] for u in nodes}
    for u in nodes:
        for v in succ[u]:
            pred[v].append(u)

    start = nodes[0]
    path = [start]
    visited = {start}
    explored = 0

    def feasible(prev, cur):
        for w in succ[prev]:
            if w not in visited and not any(p == cur or p not in visited for p in pred[w]):
                return False
        for w in pred[cur]:
            if w not in visited and not any(s == start or s not in visited for s in succ[w]):
                return False
        return True

    def extend(cur):
        nonlocal explored
        explored += 1
        if explored > budget.max_nodes_explored:
            raise _OutOfBudget
        if len(path) == n:
            return start in succ[cur]
        for nxt in succ[cur]:
            if nxt in visited:
                continue
            visited.add(nxt)
            path.append(nxt)
            if feasible(cur, nxt) and extend(nxt):
                return True
            visited.discard(nxt)
            path.pop()
        return False

    try:
        found = extend(start)
    except _OutOfBudget:
        return OracleResult(Verdict.BUDGET_EXCEEDED, None, explored)
    if found:
        return OracleResult(Verdict.YES, list(path), explored)
    return OracleResult(Verdict.NO, None, explored)


# -----------------------------------------------------------------------------
# exact TSP
# -----------------------------------------------------------------------------

def tsp_exact_held_karp(instance, budget=None, max_dimension=None):
    '''
    Exact optimum by dynamic programming over subsets.

    g[S, k] is the cheapest way to finish the tour from city k having visited S
    (bit set over cities 2..n, city 1 implied), back to city 1. The tour is then read
    forward from city 1 taking, at each step, the smallest next city on an optimal
    completion, which yields the lexicographically smallest optimal tour starting at 1.

    Parameters
    ----------
    instance : TspInstance
    budget : OracleBudget, int or None
        bounds the number of DP cells filled.
    max_dimension : int, optional
        defaults to PARAMETERS['held_karp_max_dimension'].

    Returns
    -------
    (optimal length, optimal Tour). There is no budget-exceeded result: an instance
    whose table exceeds the budget raises BudgetExceeded before any cell is filled.

    Raises
    ------
    ValueError
        dimension above the cap.
    BudgetExceeded
        more DP cells than the budget allows.
    '''
    budget = as_budget(budget)
    max_dimension = max_dimension or PARAMETERS['held_karp_max_dimension']
    n = instance.dimension
    if n > max_dimension:
        raise ValueError("Held-Karp is capped at dimension %d, got %d." %(max_dimension, n))
    D = instance.distances.astype(np.int64)
    if n == 1:
        return 0, Tour((1,))

    N = n - 1
    full = (1 << N) - 1
    if (full + 1) * N > budget.max_nodes_explored:
        raise BudgetExceeded("Held-Karp needs %d cells, budget is %d." %((full + 1) * N, budget.max_nodes_explored))
    W = D[1:, 1:]
    g = np.full((full + 1, N), np.iinfo(np.int64).max // 4, dtype=np.int64)
    g[full, :] = D[1:, 0]
    bits = np.arange(N)
    for mask in range(full - 1, 0, -1):
        inside = (mask >> bits) & 1
        js = np.nonzero(inside)[0]
        ks = np.nonzero(1 - inside)[0]
        completions = g[mask | (1 << ks), ks]
        g[mask, js] = (W[np.ix_(js, ks)] + completions).min(axis=1)

    starts = np.array([D[0, k+1] + g[1 << k, k] for k in range(N)])
    target = int(starts.min())
    length = target

    tour, mask, cur = [1], 0, None
    for _ in range(N):
        for k in range(N):
            if (mask >> k) & 1:
                continue
            step = int(D[0, k+1]) if cur is None else int(W[cur, k])
            rest = int(g[mask | (1 << k), k])
            if step + rest == target:
                target, mask, cur = rest, mask | (1 << k), k
                tour.append(k + 2)
                break
        else:
            raise AssertionError("Held-Karp reconstruction lost the optimum.")
    return length, Tour(tuple(tour))


def tsp_brute(instance, max_dimension=None):
    '''
    Exact optimum by scanning every permutation with city 1 fixed, in lexicographic order;
    the first strictly better tour is kept, so ties go to the lexicographically smallest tour.

    Raises
    ------
    ValueError
        dimension above PARAMETERS['brute_force_max_dimension'].
    '''
    max_dimension = max_dimension or PARAMETERS['brute_force_max_dimension']
    n = instance.dimension
    if n > max_dimension:
        raise ValueError("Brute force is capped at dimension %d, got %d." %(max_dimension, n))
    best_length, best_tour = None, None
    for rest in itertools.permutations(range(2, n + 1)):
        tour = Tour((1,) + rest)
        length = tour_length(instance, tour)
        if best_length is None or length < best_length:
            best_length, best_tour = length, tour
    return best_length, best_tour


# -----------------------------------------------------------------------------
# TSPAnotherTour
# -----------------------------------------------------------------------------

def decide_another_tour(art, budget=None):
    '''
    Is there a tour strictly shorter than the canonical tour?

    Searched on G with e_z forbidden: by the length trichotomy a shorter tour uses only
    weight-1 edges of G', and by the tripling such tours are exactly the images of
    directed Hamiltonian cycles of G that avoid e_z.

    Returns
    -------
    OracleResult: YES with a Tour of length |V'|, NO (the canonical tour is minimal),
    or BUDGET_EXCEEDED.
    '''
    from .certificates import cycle_to_tour

    result = ham_cycle_search(art.g.graph, forbidden={art.g.ez_directed}, budget=budget)
    if result.verdict != Verdict.YES:
        return result
    tour = cycle_to_tour(art, result.witness)
    assert tour_length(art.instance, tour) == art.dimension
    return OracleResult(Verdict.YES, tour, result.explored)
