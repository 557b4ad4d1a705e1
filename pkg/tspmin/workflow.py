'''
File-level workflows around a ReductionArtifact: the meta document that lets certificate
translation run later from files, artifact export, and the corpus self-check that runs
every per-formula check over a directory of DIMACS files in a process pool.
'''
import json
import os

from tspmin import __version__
from .certificates import (assignment_to_tour, build_artifact, tour_to_assignment,
                           verify_tour)
from .cnf import CnfFormula, emit_dimacs, parse_dimacs, read_dimacs
from .default_parameters import PARAMETERS
from .exceptions import CertificateError, InternalInconsistency, MetaDocumentError
from .json_encoder import NpEncoder
from .oracles import Verdict, decide_another_tour, sat_brute
from .rhc import build_rhc, emit_path, rhc_to_json, verify_ham_path
from .tsp import emit_tsplib
from .utils import bulk_process

# fields checked against the artifact rebuilt from the stored formula
RECONSTRUCTED_FIELDS = ['dummy_variable', 'variable_order', 'node_labels', 'dimension',
                        'city_map', 'ez_cities', 'baseline_length', 'canonical_tour']

# -----------------------------------------------------------------------------
# meta document
# -----------------------------------------------------------------------------

def meta_document(art, schema_version=None):
    '''
    Metadata of a ReductionArtifact as a JSON-ready dict.

    The formula is stored in full; the numbering (node labels of G, city map of G'),
    e_z, the baseline and the canonical tour are stored for inspection and are
    cross-checked on loading.
    '''
    return {
        'schema_version': schema_version or PARAMETERS['meta_schema_version'],
        'tspmin_version': __version__,
        'formula': {
            'num_variables': art.phi.num_variables,
            'clauses': art.phi.to_lists(),
        },
        'dummy_variable': art.aug.dummy_variable,
        'variable_order': list(art.g.variable_order),
        'node_labels': [art.g.label(u) for u in range(art.g.number_of_nodes)],
        'dimension': art.dimension,
        'city_map': {str(c): label for c, label in art.instance.city_map.items()},
        'ez_cities': list(art.instance.ez_cities),
        'baseline_length': art.baseline_length,
        'canonical_tour': art.canonical,
    }

def emit_meta(art, schema_version=None):
    return json.dumps(meta_document(art, schema_version), cls=NpEncoder, indent=1) + '\n'

def write_meta(art, path, schema_version=None):
    with open(path, 'w') as O:
        O.write(emit_meta(art, schema_version))

def parse_meta(text):
    '''
    Rebuild the ReductionArtifact described by a meta document.

    Raises
    ------
    MetaDocumentError
        not JSON, missing fields, a schema version with another major,
        or stored numbering that disagrees with the rebuilt artifact.
    '''
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise MetaDocumentError("meta document is not JSON: %s" %err) from err
    if not isinstance(document, dict):
        raise MetaDocumentError("meta document must be a JSON object.")

    version = str(document.get('schema_version', ''))
    expected = PARAMETERS['meta_schema_version']
    if version.split('.')[0] != expected.split('.')[0]:
        raise MetaDocumentError("unsupported meta schema version %r, expecting %s.x"
                                %(version, expected.split('.')[0]))
    try:
        stored = document['formula']
        phi = CnfFormula.from_lists(int(stored['num_variables']), stored['clauses'])
    except (KeyError, TypeError, ValueError) as err:
        raise MetaDocumentError("meta document has no valid formula: %s" %err) from err

    art = build_artifact(phi)
    rebuilt = json.loads(emit_meta(art, version))
    for key in RECONSTRUCTED_FIELDS:
        if key not in document:
            raise MetaDocumentError("meta document lacks field %r." %key)
        if document[key] != rebuilt[key]:
            raise MetaDocumentError("meta field %r disagrees with its formula." %key)
    return art

def load_meta(path):
    with open(path) as f:
        return parse_meta(f.read())

# -----------------------------------------------------------------------------
# export
# -----------------------------------------------------------------------------

def export_reduction(art, out_tsp=None, out_meta=None, dot=None, dot_directed=None, name=None):
    '''
    Write whichever artifacts have a path: TSPLIB instance, meta document,
    DOT of G' and DOT of G.
    '''
    outputs = [
        (out_tsp, lambda: emit_tsplib(art.instance, name or PARAMETERS['tsplib_name'])),
        (out_meta, lambda: emit_meta(art)),
        (dot, art.g_prime.to_dot),
        (dot_directed, art.g.to_dot),
    ]
    for path, render in outputs:
        if path:
            with open(path, 'w') as O:
                O.write(render())

def export_rhc(inst, out_graph=None, out_path=None):
    if out_graph:
        with open(out_graph, 'w') as O:
            O.write(rhc_to_json(inst))
    if out_path:
        with open(out_path, 'w') as O:
            O.write(emit_path(inst))

# -----------------------------------------------------------------------------
# corpus self-check
# -----------------------------------------------------------------------------

def read_corpus_dir(directory, file_pattern=None):
    '''
    Paths of the DIMACS files in directory, sorted by name.

    Parameters
    ----------
    directory: str
        directory holding .cnf files.
    file_pattern: str, optional, default: PARAMETERS['corpus_file_pattern']
        files with this substring are read.
    '''
    file_pattern = file_pattern or PARAMETERS['corpus_file_pattern']
    return sorted(os.path.join(directory, f) for f in os.listdir(directory)
                  if file_pattern in f and os.path.isfile(os.path.join(directory, f)))

def check_formula(job):
    '''
    Run every per-formula check of the reduction on one DIMACS file.

    Parameters
    ----------
    job : tuple
        (path, budget); a tuple so that the function maps over a process pool.

    Returns
    -------
    dict with the file name, sizes, the SAT verdict, and 'checks',
    a dict check name -> True/False/None (None when the check does not apply).
    '''
    path, budget = job
    phi = read_dimacs(path)
    art = build_artifact(phi)
    report = verify_tour(art.instance, art.canonical)
    checks = {
        'canonical_length': report.valid and report.length == art.baseline_length,
        'rhc_path': verify_ham_path(build_rhc(art)),
        'byte_stable': (emit_tsplib(art.instance) == emit_tsplib(build_artifact(phi).instance)
                        and emit_meta(art) == emit_meta(build_artifact(phi))),
        'dimacs_round_trip': parse_dimacs(emit_dimacs(phi)) == phi,
        'decide_agrees': None,
        'witness_round_trip': None,
    }
    result = {
        'file': os.path.basename(path),
        'V': art.g.number_of_nodes,
        'V_prime': art.dimension,
        'sat': None,
        'checks': checks,
    }

    sat = sat_brute(phi, budget)
    result['sat'] = sat.verdict.value
    if sat.verdict == Verdict.BUDGET_EXCEEDED:
        return result
    if phi.num_clauses == 0:
        result['sat'] = 'degenerate'
        return result

    another = decide_another_tour(art, budget)
    if another.verdict == Verdict.BUDGET_EXCEEDED:
        result['sat'] = Verdict.BUDGET_EXCEEDED.value
        return result
    checks['decide_agrees'] = (sat.verdict == Verdict.YES) == (another.verdict == Verdict.YES)
    if sat.verdict == Verdict.YES:
        try:
            tour = assignment_to_tour(art, sat.witness)
            back = tour_to_assignment(art, tour)
            if another.verdict == Verdict.YES:
                # raises when the shorter tour reads back as a non-satisfying assignment
                tour_to_assignment(art, another.witness)
            checks['witness_round_trip'] = back == sat.witness
        except (CertificateError, InternalInconsistency):
            checks['witness_round_trip'] = False
    return result

def format_check(result):
    '''One line per formula: name, sizes, verdict, then ok or the failed checks.'''
    failed = [name for name, passed in result['checks'].items() if passed is False]
    status = 'ok' if not failed else 'FAIL(%s)' %','.join(failed)
    return "%s V=%d V'=%d %s %s" %(result['file'], result['V'], result['V_prime'], result['sat'], status)

def process_corpus(list_input_files, parameters):
    '''
    Check every formula file with bulk_process, in input order.

    Returns
    -------
    list of result dicts from check_formula.
    '''
    jobs = [(f, parameters['budget']) for f in list_input_files]
    return bulk_process(check_formula, jobs, multicores=parameters['multicores'],
                        progress=parameters['verbose'])
