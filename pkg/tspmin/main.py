import argparse
import json
import multiprocessing as mp
import sys
import time
from functools import partial

import numpy as np
import yaml

from tspmin import __version__
from .certificates import assignment_to_tour, build_artifact, tour_to_assignment, verify_tour
from .cnf import Assignment, read_dimacs
from .default_parameters import (PARAMETERS, EXIT_BUDGET_EXCEEDED, EXIT_INPUT_ERROR,
                                 EXIT_OK, EXIT_VERIFICATION_FALSE)
from .exceptions import (BudgetExceeded, CertificateError, InternalInconsistency,
                         MetaDocumentError, ReductionError)
from .oracles import Verdict, decide_another_tour, sat_brute, tsp_brute, tsp_exact_held_karp
from .rhc import build_rhc
from .tsp import emit_tour, read_tour, read_tsplib, tour_length
from .utils import debug_print, format_flag
from .workflow import (export_reduction, export_rhc, format_check, load_meta,
                       process_corpus, read_corpus_dir)

SUBCOMMANDS = ["reduce", "tour", "verify", "extract", "rhc", "decide", "optimum", "selfcheck"]


def cmd_reduce(parameters, args):
    art = build_artifact(read_dimacs(args.input))
    export_reduction(art, out_tsp=args.out_tsp, out_meta=args.out_meta,
                     dot=args.dot, dot_directed=args.dot_directed, name=parameters['tsplib_name'])
    print("V=%d V'=%d baseline=%d" %(art.g.number_of_nodes, art.dimension, art.baseline_length))
    return EXIT_OK

def cmd_tour(parameters, args):
    if bool(args.canonical) == bool(args.from_assignment):
        raise ReductionError("tour needs exactly one of --canonical, --from-assignment.")
    art = load_meta(args.input)
    if args.canonical:
        result = art.canonical
    else:
        a = Assignment.parse(args.from_assignment, art.phi.num_variables)
        result = assignment_to_tour(art, a)
    sys.stdout.write(emit_tour(result))
    return EXIT_OK

def cmd_verify(parameters, args):
    instance = read_tsplib(args.input)
    t = read_tour(_required(args.tour, '--tour'))
    report = verify_tour(instance, t)
    s = "valid=%s length=%d uses_nonedge=%s" %(format_flag(report.valid), report.length,
                                               format_flag(report.uses_nonedge))
    if args.meta:
        art = load_meta(args.meta)
        if art.dimension != instance.dimension:
            raise MetaDocumentError("meta describes %d cities, instance has %d."
                                    %(art.dimension, instance.dimension))
        if not np.array_equal(art.instance.distances, instance.distances):
            raise MetaDocumentError("meta describes another instance of the same dimension.")
        s += " uses_ez=%s" %format_flag(report.uses_ez)
    print(s)
    return EXIT_OK if report.valid else EXIT_VERIFICATION_FALSE

def cmd_extract(parameters, args):
    art = load_meta(args.input)
    a = tour_to_assignment(art, read_tour(_required(args.tour, '--tour')))
    print(a.format())
    return EXIT_OK

def cmd_rhc(parameters, args):
    art = build_artifact(read_dimacs(args.input))
    inst = build_rhc(art)
    export_rhc(inst, out_graph=args.out_graph, out_path=args.out_path)
    a, b = inst.endpoints
    print("nodes=%d edges=%d endpoints=%s,%s" %(inst.graph.number_of_nodes(), inst.graph.number_of_edges(),
                                               inst.labels(a), inst.labels(b)))
    return EXIT_OK

def cmd_decide(parameters, args):
    '''
    Answer "is there a tour shorter than the canonical one?" and cross-check it
    against exhaustive SAT on phi.
    '''
    phi = read_dimacs(args.input)
    art = build_artifact(phi)
    sat = sat_brute(phi, parameters['budget'])
    if sat.verdict == Verdict.BUDGET_EXCEEDED:
        print(Verdict.BUDGET_EXCEEDED.value)
        return EXIT_BUDGET_EXCEEDED
    if phi.num_clauses == 0:
        print("SAT; canonical tour minimal; DEGENERATE (zero clauses)")
        return EXIT_OK
    another = decide_another_tour(art, parameters['budget'])
    if another.verdict == Verdict.BUDGET_EXCEEDED:
        print(Verdict.BUDGET_EXCEEDED.value)
        return EXIT_BUDGET_EXCEEDED

    is_sat = sat.verdict == Verdict.YES
    has_shorter = another.verdict == Verdict.YES
    first = "SAT" if is_sat else "UNSAT"
    if has_shorter:
        second = "shorter tour found (%d < %d)" %(tour_length(art.instance, another.witness), art.baseline_length)
    else:
        second = "canonical tour minimal"
    agree = is_sat == has_shorter
    print("%s; %s; %s" %(first, second, "AGREE" if agree else "DISAGREE"))
    debug_print(parameters['verbose'], "explored: sat=%d tour=%d" %(sat.explored, another.explored))
    return EXIT_OK if agree else EXIT_VERIFICATION_FALSE

def cmd_optimum(parameters, args):
    instance = read_tsplib(args.input)
    if args.brute:
        length, best = tsp_brute(instance, parameters['brute_force_max_dimension'])
    else:
        length, best = tsp_exact_held_karp(instance, parameters['budget'],
                                           parameters['held_karp_max_dimension'])
    print("length=%d" %length)
    sys.stdout.write(emit_tour(best))
    return EXIT_OK

def cmd_selfcheck(parameters, args):
    list_input_files = read_corpus_dir(args.input, parameters['corpus_file_pattern'])
    if not list_input_files:
        print("No DIMACS files are found in %s." %args.input)
        return EXIT_INPUT_ERROR
    results = process_corpus(list_input_files, parameters)
    failed, exhausted = 0, 0
    for result in results:
        print(format_check(result))
        if False in result['checks'].values():
            failed += 1
        elif result['sat'] == Verdict.BUDGET_EXCEEDED.value:
            exhausted += 1
    print("checked=%d failed=%d budget_exceeded=%d" %(len(results), failed, exhausted))
    if failed:
        return EXIT_VERIFICATION_FALSE
    return EXIT_BUDGET_EXCEEDED if exhausted else EXIT_OK

def _required(value, flag):
    if not value:
        raise ReductionError("missing %s." %flag)
    return value

def update_params_from_CLI(parameters, args, verbose=False):
    '''
    Apply the parameter file, then explicit flags, over the defaults in parameters.
    '''
    _print = partial(debug_print, verbose)
    if args is None:
        raise Exception("No arguments provided.")
    if parameters is None:
        raise Exception("No parameters provided.")

    # yaml is a superset of JSON, one loader covers both
    if args.parameters:
        try:
            with open(args.parameters) as f:
                parameters.update(yaml.safe_load(f.read()) or {})
        except (OSError, yaml.YAMLError) as err:
            raise ReductionError("Failure parsing provided parameters file: %s" %err) from err
        _print(f"Updating default parameters from {args.parameters}")
    else:
        _print("Using default parameters")

    if args.budget is not None:
        if args.budget < 1:
            raise ReductionError("Budget must be a positive integer.")
        parameters['budget'] = args.budget
        _print(f"Setting budget to {parameters['budget']}")
    else:
        _print(f"Using default budget: {parameters['budget']}")

    if args.multicores is not None:
        if args.multicores == 0:
            parameters['multicores'] = mp.cpu_count()
        else:
            parameters['multicores'] = min(mp.cpu_count(), args.multicores)
        _print(f"Setting multicores to {parameters['multicores']}")

    if args.verbose:
        parameters['verbose'] = True

    parameters['run'] = args.run
    return parameters

def initialize_parameters(parameters, args=None):
    parameters['tspmin_version'] = __version__
    parameters['timestamp'] = time.strftime("%Y%m%d-%H%M%S")
    return parameters

def build_parser():
    # No defaults here: default_parameters is the single source of defaults.
    # The CLI takes priority over an optional parameter file which takes priority over
    # default_parameters.
    parser = argparse.ArgumentParser(prog='tspmin',
            description='tspmin, reduce CNF formulas to TSP instances and translate certificates')

    parser.add_argument('-v', '--version', action='version', version=__version__,
            help='print version and exit')
    parser.add_argument('run', metavar='subcommand', choices=SUBCOMMANDS,
            help="one of the subcommands: " + ", ".join(SUBCOMMANDS))
    parser.add_argument('input', type=str,
            help='input file: DIMACS for reduce, rhc, decide; meta JSON for tour, extract; '
                 'TSPLIB for verify, optimum; a directory of DIMACS files for selfcheck')
    parser.add_argument('--out-tsp', type=str,
            help='TSPLIB instance written by reduce')
    parser.add_argument('--out-meta', type=str,
            help='meta JSON document written by reduce')
    parser.add_argument('--dot', type=str,
            help='DOT rendering of the tripled graph, written by reduce')
    parser.add_argument('--dot-directed', type=str,
            help='DOT rendering of the gadget graph, written by reduce')
    parser.add_argument('--meta', type=str,
            help='meta JSON document, lets verify report uses_ez')
    parser.add_argument('--tour', type=str,
            help='tour file for verify and extract')
    parser.add_argument('--canonical', action='store_true',
            help='tour: print the canonical tour')
    parser.add_argument('--from-assignment', type=str,
            help='tour: print the tour of a satisfying assignment, e.g. "1=T,2=F"')
    parser.add_argument('--out-graph', type=str,
            help='RHC graph JSON written by rhc')
    parser.add_argument('--out-path', type=str,
            help='RHC Hamiltonian path written by rhc')
    parser.add_argument('--budget', type=int,
            help='max nodes explored by a search before it reports budget-exceeded')
    parser.add_argument('--brute', action='store_true',
            help='optimum: permutation scan instead of Held-Karp')
    parser.add_argument('-p', '--parameters', type=str,
            help='Custom parameter file in YAML or JSON. Use test/parameters.yaml as template.')
    parser.add_argument('-c', '--multicores', type=int,
            help='number of CPU cores used by selfcheck, 0 for all')
    parser.add_argument('--verbose', action='store_true',
            help='diagnostic messages on standard error')
    return parser

def run_tspmin(parameters, args):
    '''
    Dispatch parameters['run'] and map errors to exit codes:
    1 when a certificate fails its precondition, 2 on input errors, 3 when a budget runs out.
    '''
    commands = {
        'reduce': cmd_reduce,
        'tour': cmd_tour,
        'verify': cmd_verify,
        'extract': cmd_extract,
        'rhc': cmd_rhc,
        'decide': cmd_decide,
        'optimum': cmd_optimum,
        'selfcheck': cmd_selfcheck,
    }
    try:
        return commands[parameters['run']](parameters, args)
    except CertificateError as err:
        print("error: %s" %err, file=sys.stderr)
        return EXIT_VERIFICATION_FALSE
    except BudgetExceeded as err:
        print(Verdict.BUDGET_EXCEEDED.value)
        debug_print(parameters['verbose'], str(err))
        return EXIT_BUDGET_EXCEEDED
    except InternalInconsistency as err:
        print("internal inconsistency: %s" %err, file=sys.stderr)
        return EXIT_INPUT_ERROR
    except (ReductionError, OSError, ValueError) as err:
        print("error: %s" %err, file=sys.stderr)
        return EXIT_INPUT_ERROR

def main(argv=None):
    '''
    tspmin, a reduction compiler from CNF satisfiability to the question
    "is there a tour shorter than this one?".

        * reduce: DIMACS formula to TSPLIB instance, meta document, DOT drawings.
        * tour: canonical tour, or the tour of a satisfying assignment.
        * verify: check a tour against a TSPLIB instance.
        * extract: read the satisfying assignment out of a short tour.
        * rhc: restricted Hamiltonian cycle instance of a formula.
        * decide: is the canonical tour minimal, cross-checked against SAT.
        * optimum: exact optimum of a small TSPLIB instance.
        * selfcheck: run every check of the reduction over a directory of formulas.

    Parameters
    ----------
    argv : list, optional
        command line arguments without the program name; sys.argv by default.

    Returns
    -------
    exit code, 0 ok, 1 verification false, 2 input error, 3 budget exceeded.
    '''
    parameters = dict(PARAMETERS)
    args = build_parser().parse_args(argv)
    initialize_parameters(parameters, args)
    try:
        update_params_from_CLI(parameters, args, verbose=args.verbose)
    except ReductionError as err:
        print("error: %s" %err, file=sys.stderr)
        return EXIT_INPUT_ERROR
    debug_print(parameters['verbose'], "tspmin %s: %s %s" %(__version__, args.run, args.input))
    debug_print(parameters['verbose'], json.dumps({k: parameters[k] for k in sorted(PARAMETERS)}))
    return run_tspmin(parameters, args)


if __name__ == '__main__':
    sys.exit(main())
