import json
import os
import tempfile
import unittest

from tspmin.certificates import build_artifact
from tspmin.cnf import CnfFormula, emit_dimacs
from tspmin.exceptions import MetaDocumentError
from tspmin.workflow import (check_formula, emit_meta, export_reduction, format_check, load_meta,
                             meta_document, parse_meta, process_corpus, read_corpus_dir, write_meta)

DATA = os.path.join(os.path.dirname(__file__), 'data')


class TestMetaDocument(unittest.TestCase):

    def setUp(self):
        self.art = build_artifact(CnfFormula.from_lists(2, [[1, -2]]))

    def test_fields(self):
        document = meta_document(self.art)
        self.assertEqual(document['schema_version'], '1.0')
        self.assertEqual(document['formula'], {'num_variables': 2, 'clauses': [[1, -2]]})
        self.assertEqual(document['dimension'], self.art.dimension)
        self.assertEqual(document['baseline_length'], self.art.dimension + 1)
        self.assertEqual(document['city_map']['1'], "top[1].1")

    def test_reconstruction(self):
        art = parse_meta(emit_meta(self.art))
        self.assertEqual(art.phi, self.art.phi)
        self.assertEqual(art.canonical, self.art.canonical)

    def test_file_round_trip(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, 'meta.json')
            write_meta(self.art, path)
            self.assertEqual(load_meta(path).phi, self.art.phi)

    def test_rejects_other_major(self):
        document = json.loads(emit_meta(self.art))
        document['schema_version'] = '2.0'
        with self.assertRaises(MetaDocumentError):
            parse_meta(json.dumps(document))

    def test_accepts_minor(self):
        document = json.loads(emit_meta(self.art))
        document['schema_version'] = '1.3'
        self.assertEqual(parse_meta(json.dumps(document)).dimension, self.art.dimension)

    def test_rejects_tampered_numbering(self):
        document = json.loads(emit_meta(self.art))
        document['canonical_tour'] = document['canonical_tour'][::-1]
        with self.assertRaises(MetaDocumentError):
            parse_meta(json.dumps(document))
        document = json.loads(emit_meta(self.art))
        del document['ez_cities']
        with self.assertRaises(MetaDocumentError):
            parse_meta(json.dumps(document))

    def test_rejects_garbage(self):
        for text in ["not json", "[1, 2]", '{"schema_version": "1.0"}']:
            with self.assertRaises(MetaDocumentError):
                parse_meta(text)


class TestExport(unittest.TestCase):

    def test_export_reduction(self):
        art = build_artifact(CnfFormula.from_lists(1, [[1]]))
        with tempfile.TemporaryDirectory() as tmpdir:
            paths = {k: os.path.join(tmpdir, k) for k in ['a.tsp', 'a.json', 'a.dot', 'g.dot']}
            export_reduction(art, paths['a.tsp'], paths['a.json'], paths['a.dot'], paths['g.dot'])
            for path in paths.values():
                self.assertTrue(os.path.exists(path))
            with open(paths['a.dot']) as f:
                self.assertTrue(f.read().startswith("graph G_prime {"))


class TestCorpus(unittest.TestCase):

    def test_read_corpus_dir(self):
        files = read_corpus_dir(DATA)
        self.assertEqual([os.path.basename(f) for f in files],
                         ['contradiction.cnf', 'no_clauses.cnf', 'spanning.cnf', 'unit_x1.cnf', 'xor.cnf'])

    def test_check_formula(self):
        result = check_formula((os.path.join(DATA, 'unit_x1.cnf'), 100000))
        self.assertEqual(result['sat'], 'yes')
        self.assertEqual((result['V'], result['V_prime']), (13, 39))
        self.assertTrue(all(result['checks'].values()))
        self.assertEqual(format_check(result), "unit_x1.cnf V=13 V'=39 yes ok")

    def test_check_unsat_and_degenerate(self):
        result = check_formula((os.path.join(DATA, 'contradiction.cnf'), 100000))
        self.assertEqual(result['sat'], 'no')
        self.assertTrue(result['checks']['decide_agrees'])
        self.assertIsNone(result['checks']['witness_round_trip'])
        result = check_formula((os.path.join(DATA, 'no_clauses.cnf'), 100000))
        self.assertEqual(result['sat'], 'degenerate')
        self.assertNotIn(False, result['checks'].values())

    def test_process_corpus(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            for k, clauses in enumerate([[[1]], [[1, 2], [-1]]]):
                with open(os.path.join(tmpdir, 'f%d.cnf' %k), 'w') as O:
                    O.write(emit_dimacs(CnfFormula.from_lists(2, clauses)))
            parameters = {'budget': 100000, 'multicores': 1, 'verbose': False}
            results = process_corpus(read_corpus_dir(tmpdir), parameters)
            self.assertEqual([r['file'] for r in results], ['f0.cnf', 'f1.cnf'])
            self.assertEqual([r['sat'] for r in results], ['yes', 'yes'])


if __name__ == '__main__':
    unittest.main()
